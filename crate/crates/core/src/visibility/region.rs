use std::fmt;

use super::{
    breakpoints_from_point, runs_over, sees_some_of, segment_inside_from, sort_along, visible_portion, VisError,
};
use crate::geom::{
    crossing_with_line, locate_in_ring, on_segment, orientation, strictly_between, Chord, Location, Orientation, Point,
    Rational, Segment, SimplePolygon,
};

/// What a region is seen from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Viewer {
    Point(Point),
    Chord(Segment),
}

impl fmt::Display for Viewer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Viewer::Point(p) => write!(f, "{p}"),
            Viewer::Chord(s) => write!(f, "{s}"),
        }
    }
}

/// The closed set of polygon points seen from a viewer.
///
/// The boundary ring runs counterclockwise and alternates between visible
/// pieces of the polygon boundary and windows. It can be weakly simple: a
/// sight line grazing a reflex vertex may leave a zero-width antenna.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibilityRegion {
    owner: Viewer,
    boundary: Vec<Point>,
    windows: Vec<Segment>,
    min: Point,
    max: Point,
}

impl VisibilityRegion {
    fn from_pieces(owner: Viewer, pieces: Vec<(Point, Point)>, anchor: impl Fn(&Point, &Point) -> Segment) -> Self {
        let mut boundary: Vec<Point> = Vec::with_capacity(2 * pieces.len());
        let mut windows = Vec::new();
        let k = pieces.len();
        for (i, (s, e)) in pieces.iter().enumerate() {
            for p in [s, e] {
                if boundary.last() != Some(p) {
                    boundary.push(p.clone());
                }
            }
            let next = &pieces[(i + 1) % k].0;
            if e != next {
                windows.push(anchor(e, next));
            }
        }
        while boundary.len() > 1 && boundary.first() == boundary.last() {
            boundary.pop();
        }
        let min_x = boundary.iter().min_by(|a, b| a.cmp_x(b)).unwrap().x().clone();
        let min_y = boundary.iter().min_by(|a, b| a.cmp_y(b)).unwrap().y().clone();
        let max_x = boundary.iter().max_by(|a, b| a.cmp_x(b)).unwrap().x().clone();
        let max_y = boundary.iter().max_by(|a, b| a.cmp_y(b)).unwrap().y().clone();
        VisibilityRegion { owner, boundary, windows, min: Point::new(min_x, min_y), max: Point::new(max_x, max_y) }
    }

    pub fn owner(&self) -> &Viewer {
        &self.owner
    }

    /// Counterclockwise boundary ring.
    pub fn boundary(&self) -> &[Point] {
        &self.boundary
    }

    /// Region edges that do not lie on the polygon boundary. For a point
    /// viewer, `a` is the anchor (the end nearer the viewer).
    pub fn windows(&self) -> &[Segment] {
        &self.windows
    }

    pub fn locate(&self, p: &Point) -> Location {
        if !self.in_bounds(p) {
            return Location::Exterior;
        }
        if self.boundary.len() == 1 {
            return if *p == self.boundary[0] { Location::Boundary } else { Location::Exterior };
        }
        locate_in_ring(&self.boundary, p)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.locate(p).is_inside()
    }

    fn in_bounds(&self, p: &Point) -> bool {
        p.cmp_x(&self.min).is_ge()
            && p.cmp_y(&self.min).is_ge()
            && p.cmp_x(&self.max).is_le()
            && p.cmp_y(&self.max).is_le()
    }

    fn ring_edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.boundary.len();
        (0..n).map(move |i| (&self.boundary[i], &self.boundary[(i + 1) % n]))
    }

    /// Whether the closed segment meets the closed region.
    pub fn intersects_segment(&self, a: &Point, b: &Point) -> bool {
        let (lo, hi) = (&self.min, &self.max);
        if (a.cmp_x(lo).is_lt() && b.cmp_x(lo).is_lt())
            || (a.cmp_y(lo).is_lt() && b.cmp_y(lo).is_lt())
            || (a.cmp_x(hi).is_gt() && b.cmp_x(hi).is_gt())
            || (a.cmp_y(hi).is_gt() && b.cmp_y(hi).is_gt())
        {
            return false;
        }
        if self.contains(a) || self.contains(b) {
            return true;
        }
        self.ring_edges().any(|(u, v)| touches(a, b, u, v))
    }

    /// The parameter runs `[lo, hi]` of `seg` lying in the region, in order.
    pub fn clip(&self, seg: &Segment) -> Vec<(Rational, Rational)> {
        let mut breaks = vec![seg.a.clone(), seg.b.clone()];
        for (u, v) in self.ring_edges() {
            for w in [u, v] {
                if on_segment(w, &seg.a, &seg.b) {
                    breaks.push(w.clone());
                }
            }
            if let Some(x) = crossing_with_line(&seg.a, &seg.b, u, v) {
                if on_segment(&x, u, v) {
                    breaks.push(x);
                }
            }
        }
        sort_along(seg, &mut breaks);
        runs_over(&breaks, |x| self.contains(x))
            .expect("a closed region meets a segment in closed runs")
            .into_iter()
            .map(|(i, j)| (seg.param_of(&breaks[i]), seg.param_of(&breaks[j])))
            .collect()
    }
}

/// Closed segments `ab` and `cd` share a point.
fn touches(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    if o1 == o2 && o1 != Orientation::Collinear {
        return false;
    }
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o3 == o4 && o3 != Orientation::Collinear {
        return false;
    }
    if o1.opposes(o2) && o3.opposes(o4) {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// The region seen from `p`.
pub fn visibility_polygon(poly: &SimplePolygon, p: &Point) -> Result<VisibilityRegion, VisError> {
    let loc = poly.locate(p);
    if loc == Location::Exterior {
        return Err(VisError::PointOutsidePolygon(p.clone()));
    }
    let interior = loc == Location::Interior;
    let mut pieces = Vec::new();
    for e in poly.edges() {
        if let Some(run) = visible_portion(poly, p, interior, e)? {
            pieces.push(run);
        }
    }
    Ok(VisibilityRegion::from_pieces(Viewer::Point(p.clone()), pieces, |x, y| {
        if p.dist2(x) <= p.dist2(y) {
            Segment::new(x.clone(), y.clone())
        } else {
            Segment::new(y.clone(), x.clone())
        }
    }))
}

/// The region of points that see at least one point of the chord.
pub fn weak_visibility(poly: &SimplePolygon, chord: &Chord<'_>) -> Result<VisibilityRegion, VisError> {
    let seg = chord.segment();
    // Sight lines to the chord change combinatorially only along lines
    // through two mutually visible blockers (reflex vertices or chord ends).
    let mut pivots: Vec<Point> = poly.reflex_vertices();
    for end in [&seg.a, &seg.b] {
        if !pivots.contains(end) {
            pivots.push(end.clone());
        }
    }
    let mut lines: Vec<(&Point, &Point)> = Vec::new();
    for i in 0..pivots.len() {
        for j in (i + 1)..pivots.len() {
            let (u, v) = (&pivots[i], &pivots[j]);
            if segment_inside_from(poly, u, false, v) {
                lines.push((u, v));
            }
        }
    }
    let mut pieces = Vec::new();
    for e in poly.edges() {
        let mut breaks = vec![e.a.clone(), e.b.clone()];
        for w in &pivots {
            if strictly_between(w, &e.a, &e.b) {
                breaks.push(w.clone());
            }
        }
        for (u, v) in &lines {
            if let Some(x) = crossing_with_line(&e.a, &e.b, u, v) {
                breaks.push(x);
            }
        }
        // The chord ends also cast sight lines through single blockers.
        for end in [&seg.a, &seg.b] {
            breaks.extend(breakpoints_from_point(poly, end, e));
        }
        sort_along(e, &mut breaks);
        let runs = runs_over(&breaks, |y| sees_some_of(poly, y, false, seg)).ok_or_else(|| {
            VisError::InternalDisconnectedInterval { viewer: Viewer::Chord(seg.clone()).to_string(), target: e.clone() }
        })?;
        pieces.extend(runs.into_iter().map(|(i, j)| (breaks[i].clone(), breaks[j].clone())));
    }
    Ok(VisibilityRegion::from_pieces(Viewer::Chord(seg.clone()), pieces, |x, y| Segment::new(x.clone(), y.clone())))
}
