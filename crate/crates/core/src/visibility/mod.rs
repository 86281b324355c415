//! Closed visibility inside a simple polygon.
//!
//! `p` sees `q` when the closed segment `pq` lies in the closed polygon, so
//! sight lines may graze the boundary. Every visible set computed here (the
//! part of an edge seen from a point, the part of a chord seen from a reflex
//! vertex, the part of an edge seen from a chord) is a single closed
//! sub-segment; the routines detect and report a second component as an
//! internal error instead of silently merging it.

mod interval;
mod region;

use thiserror::Error;

use crate::geom::{
    cmp_along, crossing_with_line, orientation, strictly_between, GeomError, Location, Orientation, Point, Segment,
    SimplePolygon,
};

pub use interval::{chord_interval, restrictors_of, ChordInterval};
pub use region::{visibility_polygon, weak_visibility, Viewer, VisibilityRegion};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VisError {
    #[error("point {0} lies outside the polygon")]
    PointOutsidePolygon(Point),
    #[error("{0} is not a reflex vertex of the polygon")]
    NotAReflexVertex(Point),
    #[error("visible part of {target} seen from {viewer} is disconnected")]
    InternalDisconnectedInterval { viewer: String, target: Segment },
    #[error("no restricting vertex found for the interval of {owner} ending at {end}")]
    RestrictorNotFound { owner: Point, end: Point },
    #[error(transparent)]
    InvalidChord(#[from] GeomError),
}

/// Closed visibility between two points of the closed polygon.
pub fn sees(poly: &SimplePolygon, p: &Point, q: &Point) -> Result<bool, VisError> {
    let lp = poly.locate(p);
    if lp == Location::Exterior {
        return Err(VisError::PointOutsidePolygon(p.clone()));
    }
    if poly.locate(q) == Location::Exterior {
        return Err(VisError::PointOutsidePolygon(q.clone()));
    }
    Ok(segment_inside_from(poly, p, lp == Location::Interior, q))
}

/// Whether the closed segment `pq` lies in the closed polygon; false when
/// either endpoint is outside.
pub fn segment_in_polygon(poly: &SimplePolygon, p: &Point, q: &Point) -> bool {
    let lp = poly.locate(p);
    if lp == Location::Exterior || poly.locate(q) == Location::Exterior {
        return false;
    }
    segment_inside_from(poly, p, lp == Location::Interior, q)
}

/// Core containment test for `pq` with both endpoints already known to be in
/// the closed polygon. `p_interior` lets the first gap skip its midpoint test.
pub(crate) fn segment_inside_from(poly: &SimplePolygon, p: &Point, p_interior: bool, q: &Point) -> bool {
    if p == q {
        return true;
    }
    let verts = poly.vertices();
    let n = verts.len();
    let mut contacts: Vec<&Point> = Vec::new();
    let mut prev = orientation(p, q, &verts[n - 1]);
    for i in 0..n {
        let cur = orientation(p, q, &verts[i]);
        if prev.opposes(cur) {
            let a = &verts[(i + n - 1) % n];
            let b = &verts[i];
            if orientation(a, b, p).opposes(orientation(a, b, q)) {
                return false;
            }
        }
        if cur == Orientation::Collinear && strictly_between(&verts[i], p, q) {
            contacts.push(&verts[i]);
        }
        prev = cur;
    }
    if contacts.is_empty() {
        return p_interior || poly.locate(&p.midpoint(q)).is_inside();
    }
    contacts.sort_by(|u, v| cmp_along(p, q, u, v));
    let mut last = p;
    for (k, c) in contacts.iter().enumerate() {
        if !(k == 0 && p_interior) && !poly.locate(&last.midpoint(c)).is_inside() {
            return false;
        }
        last = c;
    }
    poly.locate(&last.midpoint(q)).is_inside()
}

/// Points of `seg` at which the set of points visible from `p` can change,
/// sorted along the segment and deduplicated. Includes both endpoints.
fn breakpoints_from_point(poly: &SimplePolygon, p: &Point, seg: &Segment) -> Vec<Point> {
    let (s0, s1) = (&seg.a, &seg.b);
    let mut pts = vec![s0.clone(), s1.clone()];
    for w in poly.vertices() {
        if w == p {
            continue;
        }
        if orientation(s0, s1, w) == Orientation::Collinear {
            if strictly_between(w, s0, s1) {
                pts.push(w.clone());
            }
            continue;
        }
        if let Some(x) = crossing_with_line(s0, s1, p, w) {
            if strictly_between(w, p, &x) {
                pts.push(x);
            }
        }
    }
    if orientation(s0, s1, p) == Orientation::Collinear && strictly_between(p, s0, s1) {
        pts.push(p.clone());
    }
    sort_along(seg, &mut pts);
    pts
}

pub(crate) fn sort_along(seg: &Segment, pts: &mut Vec<Point>) {
    pts.sort_by(|u, v| seg.cmp_along(u, v));
    pts.dedup();
}

/// Evaluates `holds` at every breakpoint and at every gap midpoint, and
/// returns the maximal runs where it holds as breakpoint index pairs. `None`
/// when a run would start or end inside a gap, which no closed set can do.
pub(crate) fn runs_over<F>(breaks: &[Point], mut holds: F) -> Option<Vec<(usize, usize)>>
where
    F: FnMut(&Point) -> bool,
{
    // Interleaved: breakpoint, gap, breakpoint, ...
    let m = breaks.len();
    let mut flags = Vec::with_capacity(2 * m - 1);
    for i in 0..m {
        flags.push(holds(&breaks[i]));
        if i + 1 < m {
            flags.push(holds(&breaks[i].midpoint(&breaks[i + 1])));
        }
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < flags.len() {
        if !flags[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < flags.len() && flags[i + 1] {
            i += 1;
        }
        if start % 2 == 1 || i % 2 == 1 {
            return None;
        }
        out.push((start / 2, i / 2));
        i += 1;
    }
    Some(out)
}

/// Like [`runs_over`], but the result must be a single run.
fn connected_run<F>(
    breaks: &[Point],
    holds: F,
    viewer: impl FnOnce() -> String,
    target: &Segment,
) -> Result<Option<(Point, Point)>, VisError>
where
    F: FnMut(&Point) -> bool,
{
    match runs_over(breaks, holds).as_deref() {
        Some([]) => Ok(None),
        Some(&[(i, j)]) => Ok(Some((breaks[i].clone(), breaks[j].clone()))),
        _ => Err(VisError::InternalDisconnectedInterval { viewer: viewer(), target: target.clone() }),
    }
}

/// The closed sub-segment of `seg` (which must lie in the closed polygon)
/// visible from `p`.
pub(crate) fn visible_portion(
    poly: &SimplePolygon,
    p: &Point,
    p_interior: bool,
    seg: &Segment,
) -> Result<Option<(Point, Point)>, VisError> {
    let breaks = breakpoints_from_point(poly, p, seg);
    connected_run(&breaks, |x| segment_inside_from(poly, p, p_interior, x), || p.to_string(), seg)
}

/// Whether `p` sees at least one point of `seg`.
pub(crate) fn sees_some_of(poly: &SimplePolygon, p: &Point, p_interior: bool, seg: &Segment) -> bool {
    let breaks = breakpoints_from_point(poly, p, seg);
    let probe = |x: &Point| segment_inside_from(poly, p, p_interior, x);
    if breaks.iter().any(&probe) {
        return true;
    }
    breaks.windows(2).any(|w| probe(&w[0].midpoint(&w[1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::number::ratio;

    fn poly(coords: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn l_shape() -> SimplePolygon {
        poly(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
    }

    fn q(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::new(ratio(x.0, x.1), ratio(y.0, y.1))
    }

    #[test]
    fn sees_examples() {
        let l = l_shape();
        assert!(sees(&l, &q((1, 2), (1, 2)), &Point::from_ints(1, 1)).unwrap());
        assert!(!sees(&l, &q((1, 2), (7, 4)), &q((7, 4), (1, 2))).unwrap());
        let sq = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert!(sees(&sq, &Point::from_ints(0, 0), &Point::from_ints(4, 0)).unwrap());
        assert_eq!(
            sees(&sq, &Point::from_ints(5, 0), &Point::from_ints(1, 1)),
            Err(VisError::PointOutsidePolygon(Point::from_ints(5, 0)))
        );
    }

    #[test]
    fn grazing_reflex_vertex_counts_as_visible() {
        let l = l_shape();
        // Passes exactly through the reflex vertex (1,1).
        assert!(sees(&l, &Point::from_ints(0, 2), &Point::from_ints(2, 0)).unwrap());
        assert!(sees(&l, &q((1, 2), (3, 2)), &q((3, 2), (1, 2))).unwrap());
        // Slightly above: through the notch.
        assert!(!sees(&l, &Point::from_ints(0, 2), &q((2, 1), (1, 2))).unwrap());
    }

    #[test]
    fn sees_along_boundary_chain() {
        let l = l_shape();
        assert!(sees(&l, &Point::from_ints(1, 2), &Point::from_ints(1, 1)).unwrap());
        assert!(sees(&l, &Point::from_ints(2, 1), &Point::from_ints(0, 1)).unwrap());
        assert!(!sees(&l, &Point::from_ints(2, 1), &Point::from_ints(1, 2)).unwrap());
    }
}
