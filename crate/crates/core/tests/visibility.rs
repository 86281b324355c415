mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use viswidth::comb::generate_comb;
use viswidth::geom::number::{int, ratio};
use viswidth::geom::{make_chord, Point, Rational, Segment, SimplePolygon};
use viswidth::sample;
use viswidth::visibility::{chord_interval, restrictors_of, sees, visibility_polygon, weak_visibility, VisError};

fn q(x: i64, dx: i64, y: i64, dy: i64) -> Point {
    Point::new(ratio(x, dx), ratio(y, dy))
}

fn random_chord(poly: &SimplePolygon, seed: u64) -> Option<Segment> {
    sample::chord(poly, &mut ChaCha8Rng::seed_from_u64(seed), 1_000)
}

#[test]
fn sees_examples() {
    let l = l_shape();
    assert!(sees(&l, &q(1, 2, 1, 2), &pt(1, 1)).unwrap());
    assert!(!sees(&l, &q(1, 2, 7, 4), &q(7, 4, 1, 2)).unwrap());
    assert!(sees(&square(), &pt(0, 0), &pt(4, 0)).unwrap());
    assert_eq!(sees(&l, &pt(3, 3), &pt(0, 0)), Err(VisError::PointOutsidePolygon(pt(3, 3))));
}

#[test]
fn convex_and_kernel_viewpoints_see_everything() {
    for (poly, viewer) in [(square(), pt(2, 2)), (l_shape(), q(1, 2, 1, 2))] {
        let region = visibility_polygon(&poly, &viewer).unwrap();
        assert!(region.windows().is_empty());
        for v in poly.vertices() {
            assert!(region.contains(v));
        }
        for x in sample_points(&poly, 1, 500) {
            assert!(region.contains(&x), "{x}");
        }
    }
}

#[test]
fn l_shape_corner_viewpoint_loses_a_triangle() {
    let l = l_shape();
    let region = visibility_polygon(&l, &q(19, 10, 1, 10)).unwrap();
    assert_eq!(region.windows().len(), 1);
    let w = &region.windows()[0];
    assert_eq!(w.normalized(), Segment::new(pt(0, 2), pt(1, 1)));
    // Inside the hidden triangle (1,1), (1,2), (0,2) and just outside it.
    assert!(!region.contains(&q(1, 2, 7, 4)));
    assert!(!region.contains(&q(9, 10, 19, 10)));
    assert!(region.contains(&q(1, 2, 1, 1)));
    assert!(region.contains(&q(1, 2, 3, 2)));
    for x in sample_points(&l, 2, 1_000) {
        assert_eq!(region.contains(&x), common::sees(&l, &q(19, 10, 1, 10), &x), "{x}");
    }
}

#[test]
fn weak_visibility_examples() {
    let l = l_shape();
    let left = make_chord(&l, pt(0, 0), pt(0, 2)).unwrap();
    let region = weak_visibility(&l, &left).unwrap();
    for x in sample_points(&l, 3, 500) {
        assert!(region.contains(&x));
    }
    let sq = square();
    let bottom = make_chord(&sq, pt(0, 0), pt(4, 0)).unwrap();
    let region = weak_visibility(&sq, &bottom).unwrap();
    for x in sample_points(&sq, 4, 500) {
        assert!(region.contains(&x));
    }
}

#[test]
fn interval_examples() {
    let l = l_shape();
    let left = make_chord(&l, pt(0, 0), pt(0, 2)).unwrap();
    let iv = chord_interval(&l, &left, &pt(1, 1)).unwrap().unwrap();
    assert_eq!((iv.lo.clone(), iv.hi.clone()), (int(0), int(1)));
    assert_eq!(restrictors_of(&iv), (pt(0, 0), pt(0, 2)));

    let sq = square();
    let chord = make_chord(&sq, pt(0, 0), pt(4, 4)).unwrap();
    assert_eq!(chord_interval(&sq, &chord, &pt(4, 0)), Err(VisError::NotAReflexVertex(pt(4, 0))));
}

#[test]
fn comb_corners_see_proper_subintervals() {
    let comb = generate_comb(2).unwrap();
    let chord = comb.chord();
    let layer_one = comb.layer_reflex(1);
    for r in comb.layer_reflex(2) {
        let iv = chord_interval(&comb.polygon, &chord, &r).unwrap().expect("every corner sees the chord");
        assert!(iv.lo > int(0) || iv.hi < int(1), "{r} sees the whole chord");
        let (u, v) = restrictors_of(&iv);
        assert!(layer_one.contains(&u) || layer_one.contains(&v), "{r} restricted by {u} and {v}");
        // Sampled agreement with the brute-force predicate.
        let seg = chord.segment();
        for i in 0..=64 {
            let t = ratio(i, 64);
            let x = seg.at(&t);
            assert_eq!(iv.contains_param(&t), common::sees(&comb.polygon, &r, &x), "{r} and {x}");
        }
    }
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn region_membership_matches_brute_force(poly in arb_polygon(20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let viewer = sample::point_in(&poly, &mut rng);
        let region = visibility_polygon(&poly, &viewer).unwrap();
        for _ in 0..200 {
            let x = sample::point_in(&poly, &mut rng);
            let expected = common::sees(&poly, &viewer, &x);
            prop_assert_eq!(sees(&poly, &viewer, &x).unwrap(), expected);
            prop_assert_eq!(region.contains(&x), expected, "viewer {} point {}", viewer, x);
        }
        // Vertices are where degenerate contacts happen.
        for v in poly.vertices() {
            prop_assert_eq!(region.contains(v), common::sees(&poly, &viewer, v));
        }
    }

    #[test]
    fn vertex_viewpoints_match_brute_force(poly in arb_polygon(16), pick in any::<usize>(), seed in any::<u64>()) {
        let viewer = poly.vertices()[pick % poly.len()].clone();
        let region = visibility_polygon(&poly, &viewer).unwrap();
        for x in sample_points(&poly, seed, 150).iter().chain(poly.vertices()) {
            prop_assert_eq!(region.contains(x), common::sees(&poly, &viewer, x), "viewer {} point {}", viewer, x);
        }
    }

    #[test]
    fn sees_is_symmetric(poly in arb_polygon(20), seed in any::<u64>()) {
        let pts = sample_points(&poly, seed, 40);
        for pair in pts.chunks(2) {
            prop_assert_eq!(sees(&poly, &pair[0], &pair[1]).unwrap(), sees(&poly, &pair[1], &pair[0]).unwrap());
        }
        let ring = poly.vertices();
        for (i, a) in ring.iter().enumerate() {
            let b = &ring[(i + 2) % ring.len()];
            prop_assert_eq!(sees(&poly, a, b).unwrap(), sees(&poly, b, a).unwrap());
        }
    }

    #[test]
    fn interval_is_region_cut_by_chord(poly in arb_polygon(16), seed in any::<u64>()) {
        let Some(s) = random_chord(&poly, seed) else { return Ok(()) };
        let chord = make_chord(&poly, s.a.clone(), s.b.clone()).unwrap();
        for r in poly.reflex_vertices() {
            let runs = visibility_polygon(&poly, &r).unwrap().clip(&s);
            let iv = chord_interval(&poly, &chord, &r).unwrap();
            match iv {
                None => prop_assert!(runs.is_empty()),
                Some(iv) => {
                    prop_assert_eq!(runs, vec![(iv.lo.clone(), iv.hi.clone())]);
                    if iv.lo == int(0) {
                        prop_assert_eq!(&iv.lo_restrictor, &s.a);
                    }
                    if iv.hi == int(1) {
                        prop_assert_eq!(&iv.hi_restrictor, &s.b);
                    }
                }
            }
        }
    }

    #[test]
    fn restrictors_see_the_whole_interval(poly in arb_polygon(16), seed in any::<u64>()) {
        let Some(s) = random_chord(&poly, seed) else { return Ok(()) };
        let chord = make_chord(&poly, s.a.clone(), s.b.clone()).unwrap();
        for r in poly.reflex_vertices() {
            let Some(iv) = chord_interval(&poly, &chord, &r).unwrap() else { continue };
            let (u, v) = restrictors_of(&iv);
            for w in [&u, &v] {
                prop_assert!(w == &s.a || w == &s.b || poly.is_reflex_vertex(w));
            }
            let width = &iv.hi - &iv.lo;
            for i in 0..=100 {
                let t: Rational = &iv.lo + &width * ratio(i, 100);
                let x = s.at(&t);
                prop_assert!(common::sees(&poly, &r, &x), "{} does not see {}", r, x);
                for w in [&u, &v] {
                    prop_assert!(common::sees(&poly, w, &x), "restrictor {} of {} misses {}", w, r, x);
                }
            }
        }
    }

    #[test]
    fn weak_visibility_is_union_of_point_regions(poly in arb_polygon(14), seed in any::<u64>()) {
        let Some(s) = random_chord(&poly, seed) else { return Ok(()) };
        let chord = make_chord(&poly, s.a.clone(), s.b.clone()).unwrap();
        let weak = weak_visibility(&poly, &chord).unwrap();
        let regions: Vec<_> = (0..=100)
            .map(|i| visibility_polygon(&poly, &s.at(&ratio(i, 100))).unwrap())
            .collect();
        for x in sample_points(&poly, seed ^ 1, 150) {
            let in_weak = weak.contains(&x);
            if regions.iter().any(|v| v.contains(&x)) {
                prop_assert!(in_weak, "{} is seen from the chord but not in the region", x);
            }
            if in_weak {
                let from_x = visibility_polygon(&poly, &x).unwrap();
                prop_assert!(from_x.intersects_segment(&s.a, &s.b), "{} sees none of {}", x, s);
            }
        }
    }
}
