//! Brute-force oracles shared by the integration tests. They use plain
//! rational arithmetic and none of the library's predicates.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use viswidth::geom::number::{int, ratio};
use viswidth::geom::{Point, Rational, SimplePolygon};
use viswidth::sample;

pub fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

pub fn poly(ring: &[(i64, i64)]) -> SimplePolygon {
    SimplePolygon::new(ring.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
}

/// Twice the signed area of `pqr`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x())
}

pub fn on_closed_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let within = |v: &Rational, u: &Rational, w: &Rational| (u <= v && v <= w) || (w <= v && v <= u);
    within(p.x(), a.x(), b.x()) && within(p.y(), a.y(), b.y())
}

/// `Some(true)` inside, `Some(false)` outside, `None` on the boundary.
pub fn classify(ring: &[Point], p: &Point) -> Option<bool> {
    let n = ring.len();
    for i in 0..n {
        if on_closed_segment(p, &ring[i], &ring[(i + 1) % n]) {
            return None;
        }
    }
    // Crossing number of the rightward horizontal ray, half-open in y.
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (&ring[i], &ring[(i + 1) % n]);
        if (a.y() > p.y()) != (b.y() > p.y()) {
            let x = a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
            if &x > p.x() {
                inside = !inside;
            }
        }
    }
    Some(inside)
}

pub fn in_closed(ring: &[Point], p: &Point) -> bool {
    classify(ring, p) != Some(false)
}

fn lerp(p: &Point, q: &Point, t: &Rational) -> Point {
    Point::new(p.x() + (q.x() - p.x()) * t, p.y() + (q.y() - p.y()) * t)
}

/// Whether the closed segment `pq` lies in the closed polygon, by testing
/// every point where `pq` meets an edge line and every gap between them.
pub fn segment_inside(ring: &[Point], p: &Point, q: &Point) -> bool {
    let mut ts: Vec<Rational> = vec![int(0), int(1)];
    let n = ring.len();
    let d = (q.x() - p.x(), q.y() - p.y());
    for i in 0..n {
        let (a, b) = (&ring[i], &ring[(i + 1) % n]);
        let e = (b.x() - a.x(), b.y() - a.y());
        let den = &d.0 * &e.1 - &d.1 * &e.0;
        if den.is_zero() {
            // Parallel: the edge endpoints projected onto pq.
            for v in [a, b] {
                if cross(p, q, v).is_zero() {
                    let dd = &d.0 * &d.0 + &d.1 * &d.1;
                    if !dd.is_zero() {
                        ts.push(((v.x() - p.x()) * &d.0 + (v.y() - p.y()) * &d.1) / dd);
                    }
                }
            }
        } else {
            ts.push(((a.x() - p.x()) * &e.1 - (a.y() - p.y()) * &e.0) / den);
        }
    }
    let zero = int(0);
    let one = int(1);
    ts.retain(|t| t >= &zero && t <= &one);
    ts.sort();
    ts.dedup();
    for w in ts.windows(2) {
        let mid = (&w[0] + &w[1]) / int(2);
        if !in_closed(ring, &lerp(p, q, &mid)) {
            return false;
        }
    }
    ts.iter().all(|t| in_closed(ring, &lerp(p, q, t)))
}

pub fn sees(poly: &SimplePolygon, p: &Point, q: &Point) -> bool {
    segment_inside(poly.vertices(), p, q)
}

pub fn is_reflex(ring: &[Point], i: usize) -> bool {
    let n = ring.len();
    cross(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]).is_negative()
}

/// Reflex vertices seen from `p`, counted by brute force.
pub fn depth(poly: &SimplePolygon, p: &Point) -> usize {
    let ring = poly.vertices();
    (0..ring.len()).filter(|&i| is_reflex(ring, i) && sees(poly, p, &ring[i])).count()
}

/// Lexicographic point order, independent of the library's `Ord`.
pub fn lex(a: &Point, b: &Point) -> Ordering {
    a.x().cmp(b.x()).then_with(|| a.y().cmp(b.y()))
}

pub fn random_polygon(seed: u64, n: usize) -> SimplePolygon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample::random_polygon(n, 40, &mut rng)
}

/// Seeded random simple polygons with 4 to `max_n` vertices.
pub fn arb_polygon(max_n: usize) -> impl Strategy<Value = SimplePolygon> {
    (any::<u64>(), 4..=max_n).prop_map(|(seed, n)| random_polygon(seed, n))
}

/// Star-shaped polygons around the origin: distinct directions in angular
/// order with integer radii, rounded to integer points.
pub fn arb_star(max_n: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::btree_set(0u32..360, 3..=max_n).prop_flat_map(|angles| {
        let angles: Vec<u32> = angles.into_iter().collect();
        let n = angles.len();
        prop::collection::vec(5i64..40, n).prop_map(move |radii| {
            angles
                .iter()
                .zip(&radii)
                .map(|(&a, &r)| {
                    let theta = f64::from(a).to_radians();
                    let x = (r as f64 * theta.cos()).round() as i64;
                    let y = (r as f64 * theta.sin()).round() as i64;
                    Point::new(ratio(x, 1), ratio(y, 1))
                })
                .collect()
        })
    })
}

pub fn sample_points(poly: &SimplePolygon, seed: u64, count: usize) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample::point_in(poly, &mut rng)).collect()
}

pub fn l_shape() -> SimplePolygon {
    poly(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
}

pub fn square() -> SimplePolygon {
    poly(&[(0, 0), (4, 0), (4, 4), (0, 4)])
}
