//! Seeded random points, chords and polygons with exact coordinates.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::geom::number::{int, ratio, to_f64};
use crate::geom::{orientation, Orientation, Point, Rational, Segment, SimplePolygon};
use crate::visibility::segment_in_polygon;
use crate::widths::maximal_chord_through;

/// Interior points are drawn on a grid of `2^POINT_BITS` steps per side of
/// the bounding box.
const POINT_BITS: u32 = 20;
/// Boundary points are drawn on a grid of `2^EDGE_BITS` steps per edge. Kept
/// coarse so that chords through them have small exact coordinates.
const EDGE_BITS: u32 = 10;

fn unit<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let m: u64 = rng.gen_range(0..=(1u64 << POINT_BITS));
    Rational::new(BigInt::from(m), BigInt::from(1u64 << POINT_BITS))
}

/// A point of the closed polygon, uniform on a fine grid over the bounding box.
pub fn point_in<R: Rng + ?Sized>(poly: &SimplePolygon, rng: &mut R) -> Point {
    let (lo, hi) = poly.bounds();
    loop {
        let x = lo.x() + (hi.x() - lo.x()) * unit(rng);
        let y = lo.y() + (hi.y() - lo.y()) * unit(rng);
        let p = Point::new(x, y);
        if poly.locate(&p).is_inside() {
            return p;
        }
    }
}

/// Draws boundary points and chords of one polygon; edges are chosen with
/// probability proportional to length.
pub struct BoundarySampler<'p> {
    poly: &'p SimplePolygon,
    lengths: Vec<f64>,
    total: f64,
}

impl<'p> BoundarySampler<'p> {
    pub fn new(poly: &'p SimplePolygon) -> BoundarySampler<'p> {
        let lengths: Vec<f64> = poly.edges().iter().map(|e| to_f64(&e.a.dist2(&e.b)).sqrt()).collect();
        let total = lengths.iter().sum();
        BoundarySampler { poly, lengths, total }
    }

    pub fn point<R: Rng + ?Sized>(&self, rng: &mut R) -> Point {
        let mut pick = rng.gen::<f64>() * self.total;
        let mut idx = self.lengths.len() - 1;
        for (i, len) in self.lengths.iter().enumerate() {
            if pick < *len {
                idx = i;
                break;
            }
            pick -= len;
        }
        let e = &self.poly.edges()[idx];
        let m: i64 = rng.gen_range(0..=(1i64 << EDGE_BITS));
        let scale = 1i64 << EDGE_BITS;
        if let (Some(a), Some(b)) = (e.a.homogeneous(), e.b.homogeneous()) {
            // a + (b - a) m / scale with a = (ax, ay) / aw and b likewise.
            let (aw, bw) = (i128::from(a.2), i128::from(b.2));
            let (rest, m) = (i128::from(scale - m), i128::from(m));
            let along = |u: i64, v: i64| i128::from(u) * bw * rest + i128::from(v) * aw * m;
            let w = aw * bw * i128::from(scale);
            return Point::from_homogeneous(along(a.0, b.0), along(a.1, b.1), w);
        }
        e.a.lerp(&e.b, &ratio(m, scale))
    }

    /// Two boundary points joined inside the polygon, or `None` when
    /// `attempts` draws all fail.
    pub fn chord<R: Rng + ?Sized>(&self, rng: &mut R, attempts: usize) -> Option<Segment> {
        for _ in 0..attempts {
            let a = self.point(rng);
            let b = self.point(rng);
            if a != b && segment_in_polygon(self.poly, &a, &b) {
                return Some(Segment::new(a, b));
            }
        }
        None
    }

    /// Like [`BoundarySampler::chord`], grown to the maximal chord on its line.
    pub fn maximal_chord<R: Rng + ?Sized>(&self, rng: &mut R, attempts: usize) -> Option<Segment> {
        let s = self.chord(rng, attempts)?;
        Some(maximal_chord_through(self.poly, &s))
    }
}

pub fn boundary_point<R: Rng + ?Sized>(poly: &SimplePolygon, rng: &mut R) -> Point {
    BoundarySampler::new(poly).point(rng)
}

pub fn chord<R: Rng + ?Sized>(poly: &SimplePolygon, rng: &mut R, attempts: usize) -> Option<Segment> {
    BoundarySampler::new(poly).chord(rng, attempts)
}

pub fn maximal_chord<R: Rng + ?Sized>(poly: &SimplePolygon, rng: &mut R, attempts: usize) -> Option<Segment> {
    BoundarySampler::new(poly).maximal_chord(rng, attempts)
}

/// Random simple polygon on `n` distinct integer points in `[0, span)^2` with
/// no three collinear, made simple by 2-opt untangling of a random order.
pub fn random_polygon<R: Rng + ?Sized>(n: usize, span: i64, rng: &mut R) -> SimplePolygon {
    assert!(n >= 3 && (span as usize) * (span as usize) >= 4 * n);
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::from_ints(rng.gen_range(0..span), rng.gen_range(0..span));
        let fresh = !pts.contains(&p);
        let general = (0..pts.len())
            .all(|i| (i + 1..pts.len()).all(|j| orientation(&pts[i], &pts[j], &p) != Orientation::Collinear));
        if fresh && general {
            pts.push(p);
        }
    }
    pts.shuffle(rng);
    untangle(&mut pts);
    SimplePolygon::new_any_orientation(pts).expect("2-opt output is simple")
}

/// Repeatedly reverses the path between two crossing edges until none cross.
/// Total length strictly drops with each flip, so this terminates.
fn untangle(pts: &mut [Point]) {
    let n = pts.len();
    'outer: loop {
        for i in 0..n {
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (&pts[i], &pts[i + 1]);
                let (c, d) = (&pts[j], &pts[(j + 1) % n]);
                if orientation(a, b, c).opposes(orientation(a, b, d))
                    && orientation(c, d, a).opposes(orientation(c, d, b))
                {
                    pts[i + 1..=j].reverse();
                    continue 'outer;
                }
            }
        }
        return;
    }
}

/// Axis-aligned square `[0, side]^2`.
pub fn square(side: i64) -> SimplePolygon {
    SimplePolygon::new(vec![
        Point::new(int(0), int(0)),
        Point::new(int(side), int(0)),
        Point::new(int(side), int(side)),
        Point::new(int(0), int(side)),
    ])
    .unwrap()
}

/// The L-shaped hexagon with its reflex corner at `(1, 1)`.
pub fn l_shape() -> SimplePolygon {
    let ring = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)];
    SimplePolygon::new(ring.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
}
