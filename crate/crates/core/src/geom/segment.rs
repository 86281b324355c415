use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::number::Rational;
use super::point::{cmp_along, on_segment, orientation, Orientation, Point};

/// A closed line segment. `a == b` is allowed only through [`Segment::degenerate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    /// Panics when `a == b`; use [`Segment::degenerate`] for point segments.
    pub fn new(a: Point, b: Point) -> Segment {
        assert!(a != b, "segment endpoints coincide: {a}");
        Segment { a, b }
    }

    pub fn degenerate(p: Point) -> Segment {
        Segment { a: p.clone(), b: p }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    /// Endpoints ordered lexicographically.
    pub fn normalized(&self) -> Segment {
        if self.a <= self.b {
            self.clone()
        } else {
            Segment { a: self.b.clone(), b: self.a.clone() }
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        on_segment(p, &self.a, &self.b)
    }

    pub fn at(&self, t: &Rational) -> Point {
        self.a.lerp(&self.b, t)
    }

    /// Parameter of a point known to lie on the supporting line.
    pub fn param_of(&self, p: &Point) -> Rational {
        if self.a.x() != self.b.x() {
            (p.x() - self.a.x()) / (self.b.x() - self.a.x())
        } else {
            (p.y() - self.a.y()) / (self.b.y() - self.a.y())
        }
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(&self.b)
    }

    /// Orders two points on this segment's line by their position from `a` to `b`.
    pub fn cmp_along(&self, p: &Point, q: &Point) -> Ordering {
        cmp_along(&self.a, &self.b, p, q)
    }

    /// Squared distance from `p` to the closed segment.
    pub fn dist2_to(&self, p: &Point) -> Rational {
        if self.is_degenerate() {
            return self.a.dist2(p);
        }
        let dx = self.b.x() - self.a.x();
        let dy = self.b.y() - self.a.y();
        let len2 = &dx * &dx + &dy * &dy;
        let dot = (p.x() - self.a.x()) * &dx + (p.y() - self.a.y()) * &dy;
        if dot <= Rational::zero() {
            self.a.dist2(p)
        } else if dot >= len2 {
            self.b.dist2(p)
        } else {
            let foot = self.at(&(dot / len2));
            foot.dist2(p)
        }
    }
}

/// Result of intersecting two closed segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Empty,
    Point(Point),
    Overlap(Segment),
}

/// Intersection point of the supporting lines of `p1p2` and `p3p4`, if they
/// are not parallel.
pub fn line_intersection(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Option<Point> {
    if let Some(hit) = small_line_intersection(p1, p2, p3, p4) {
        return hit;
    }
    let d1x = p2.x() - p1.x();
    let d1y = p2.y() - p1.y();
    let d2x = p4.x() - p3.x();
    let d2y = p4.y() - p3.y();
    let denom = &d1x * &d2y - &d1y * &d2x;
    if denom.is_zero() {
        return None;
    }
    let ex = p3.x() - p1.x();
    let ey = p3.y() - p1.y();
    let t = (&ex * &d2y - &ey * &d2x) / denom;
    Some(Point::new(p1.x() + &d1x * &t, p1.y() + &d1y * &t))
}

/// Homogeneous-coordinate version of [`line_intersection`] in `i128`; `None`
/// when a point has no small form or an intermediate overflows.
fn small_line_intersection(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Option<Option<Point>> {
    fn join(p: (i64, i64, i64), q: (i64, i64, i64)) -> Option<[i128; 3]> {
        let (px, py, pw) = (i128::from(p.0), i128::from(p.1), i128::from(p.2));
        let (qx, qy, qw) = (i128::from(q.0), i128::from(q.1), i128::from(q.2));
        Some([
            py.checked_mul(qw)?.checked_sub(pw.checked_mul(qy)?)?,
            pw.checked_mul(qx)?.checked_sub(px.checked_mul(qw)?)?,
            px.checked_mul(qy)?.checked_sub(py.checked_mul(qx)?)?,
        ])
    }
    fn det(a: i128, b: i128, c: i128, d: i128) -> Option<i128> {
        a.checked_mul(d)?.checked_sub(b.checked_mul(c)?)
    }
    let l = join(p1.homogeneous()?, p2.homogeneous()?)?;
    let m = join(p3.homogeneous()?, p4.homogeneous()?)?;
    let w = det(l[0], l[1], m[0], m[1])?;
    if w == 0 {
        return Some(None);
    }
    let x = det(l[1], l[2], m[1], m[2])?;
    let y = det(l[2], l[0], m[2], m[0])?;
    Some(Some(Point::from_homogeneous(x, y, w)))
}

/// Intersection point of the segment `[a, b]` with the line through `p` and
/// `q` when the line separates `a` and `b` strictly.
pub(crate) fn crossing_with_line(a: &Point, b: &Point, p: &Point, q: &Point) -> Option<Point> {
    let oa = orientation(p, q, a);
    let ob = orientation(p, q, b);
    if oa.opposes(ob) {
        line_intersection(a, b, p, q)
    } else {
        None
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Exact classification of the intersection of two closed segments.
pub fn segments_intersect(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    if s1.is_degenerate() {
        return if s2.contains(&s1.a) { SegmentIntersection::Point(s1.a.clone()) } else { SegmentIntersection::Empty };
    }
    if s2.is_degenerate() {
        return segments_intersect(s2, s1);
    }
    let (a, b, c, d) = (&s1.a, &s1.b, &s2.a, &s2.b);
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        // Shared supporting line: clip s2 against s1 along s1's direction.
        let (lo2, hi2) = if s1.cmp_along(c, d).is_le() { (c, d) } else { (d, c) };
        let lo = if s1.cmp_along(lo2, a).is_gt() { lo2 } else { a };
        let hi = if s1.cmp_along(hi2, b).is_lt() { hi2 } else { b };
        return match s1.cmp_along(lo, hi) {
            Ordering::Less => SegmentIntersection::Overlap(Segment::new(lo.clone(), hi.clone())),
            Ordering::Equal => SegmentIntersection::Point(lo.clone()),
            Ordering::Greater => SegmentIntersection::Empty,
        };
    }
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1.opposes(o2) && o3.opposes(o4) {
        let x = line_intersection(a, b, c, d).expect("crossing segments are not parallel");
        return SegmentIntersection::Point(x);
    }
    for (p, seg) in [(c, s1), (d, s1), (a, s2), (b, s2)] {
        if seg.contains(p) {
            return SegmentIntersection::Point(p.clone());
        }
    }
    SegmentIntersection::Empty
}

/// Normalized integer coefficients `(A, B, C)` of the line `Ax + By + C = 0`
/// through two distinct points; equal for every pair spanning the same line.
pub fn line_key(p: &Point, q: &Point) -> (BigInt, BigInt, BigInt) {
    use num_integer::Integer;
    use num_traits::Signed;
    if let (Some((x1, y1, w1)), Some((x2, y2, w2))) = (p.homogeneous(), q.homogeneous()) {
        // Cross product of the homogeneous coordinates.
        let (x1, y1, w1) = (x1 as i128, y1 as i128, w1 as i128);
        let (x2, y2, w2) = (x2 as i128, y2 as i128, w2 as i128);
        let mut k = [y1 * w2 - w1 * y2, w1 * x2 - x1 * w2, x1 * y2 - y1 * x2];
        let g = k[0].gcd(&k[1]).gcd(&k[2]);
        if k[0] < 0 || (k[0] == 0 && k[1] < 0) {
            k.iter_mut().for_each(|v| *v = -*v);
        }
        return (BigInt::from(k[0] / g), BigInt::from(k[1] / g), BigInt::from(k[2] / g));
    }
    let a = q.y() - p.y();
    let b = p.x() - q.x();
    let c = -(&a * p.x() + &b * p.y());
    let l = a.denom().lcm(b.denom()).lcm(c.denom());
    let scale = Rational::from_integer(l);
    let mut k = [(a * &scale).to_integer(), (b * &scale).to_integer(), (c * &scale).to_integer()];
    let g = k[0].gcd(&k[1]).gcd(&k[2]);
    if k[0].is_negative() || (k[0].is_zero() && k[1].is_negative()) {
        k.iter_mut().for_each(|v| *v = -&*v);
    }
    let [a, b, c] = k;
    (a / &g, b / &g, c / &g)
}
