use crate::geom::number::half;
use crate::geom::{cmp_along, line_intersection, orientation, Orientation, Point, Rational, Segment, SimplePolygon};

/// All maximal chords on the line through `p` and `q`, in order along `p -> q`.
pub fn maximal_chords_on_line(poly: &SimplePolygon, p: &Point, q: &Point) -> Vec<Segment> {
    let mut hits: Vec<Point> = Vec::new();
    for e in poly.edges() {
        let oa = orientation(p, q, &e.a);
        let ob = orientation(p, q, &e.b);
        if oa == Orientation::Collinear {
            hits.push(e.a.clone());
        }
        if ob == Orientation::Collinear {
            hits.push(e.b.clone());
        }
        if oa.opposes(ob) {
            hits.push(line_intersection(p, q, &e.a, &e.b).expect("crossing edge is not parallel"));
        }
    }
    hits.sort_by(|u, v| cmp_along(p, q, u, v));
    hits.dedup();
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for i in 0..hits.len().saturating_sub(1) {
        let inside = poly.locate(&hits[i].midpoint(&hits[i + 1])).is_inside();
        match (inside, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                out.push(Segment::new(hits[s].clone(), hits[i].clone()));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Segment::new(hits[s].clone(), hits[hits.len() - 1].clone()));
    }
    out
}

/// The maximal chord containing the chord `s`.
///
/// Walks outward from the middle of `s`. Crossing an edge in its interior
/// always leaves the polygon; past a vertex on the line the next gap is tested.
pub fn maximal_chord_through(poly: &SimplePolygon, s: &Segment) -> Segment {
    let (p, q) = (&s.a, &s.b);
    let d = Segment::new(p.clone(), q.clone());
    // (parameter along p -> q, point, whether the line crosses an edge there)
    let mut hits: Vec<(Rational, Point, bool)> = Vec::new();
    for e in poly.edges() {
        let oa = orientation(p, q, &e.a);
        if oa == Orientation::Collinear {
            hits.push((d.param_of(&e.a), e.a.clone(), false));
        } else if oa.opposes(orientation(p, q, &e.b)) {
            let x = line_intersection(p, q, &e.a, &e.b).expect("crossing edge is not parallel");
            hits.push((d.param_of(&x), x, true));
        }
    }
    hits.sort_by(|u, v| u.0.cmp(&v.0));
    let mid = half();
    let first_above = hits.partition_point(|h| h.0 <= mid);
    let gap_inside = |i: usize, j: usize| poly.locate(&hits[i].1.midpoint(&hits[j].1)).is_inside();

    let mut hi = first_above;
    while !hits[hi].2 && hi + 1 < hits.len() && gap_inside(hi, hi + 1) {
        hi += 1;
    }
    let mut lo = hits.partition_point(|h| h.0 < mid) - 1;
    while !hits[lo].2 && lo > 0 && gap_inside(lo - 1, lo) {
        lo -= 1;
    }
    Segment::new(hits[lo].1.clone(), hits[hi].1.clone())
}
