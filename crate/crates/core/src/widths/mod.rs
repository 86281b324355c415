//! Point and chord visibility widths.
//!
//! Both widths are evaluated through the visibility regions `V(r)` of the
//! reflex vertices: a point sees `r` exactly when it lies in `V(r)`, and a
//! chord sees `r` exactly when it meets `V(r)`.

mod chords;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::geom::{line_key, segments_intersect, Chord, Point, Segment, SegmentIntersection, SimplePolygon};
use crate::sample;
use crate::visibility::{chord_interval, sees, visibility_polygon, VisError, VisibilityRegion};

pub use chords::{maximal_chord_through, maximal_chords_on_line};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WidthMethod {
    ExactEventPoints,
    CandidateCertified,
    SampledLowerBound,
}

impl WidthMethod {
    pub fn name(self) -> &'static str {
        match self {
            WidthMethod::ExactEventPoints => "ExactEventPoints",
            WidthMethod::CandidateCertified => "CandidateCertified",
            WidthMethod::SampledLowerBound => "SampledLowerBound",
        }
    }
}

impl fmt::Display for WidthMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Point(Point),
    Chord(Segment),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthResult {
    pub value: usize,
    pub witness: Witness,
    pub method: WidthMethod,
    pub candidates_examined: usize,
}

/// The visibility region of every reflex vertex, in ring order.
#[derive(Clone, Debug)]
pub struct ReflexRegions {
    reflex: Vec<Point>,
    regions: Vec<VisibilityRegion>,
}

impl ReflexRegions {
    pub fn new(poly: &SimplePolygon) -> Result<ReflexRegions, VisError> {
        let reflex = poly.reflex_vertices();
        let regions = reflex.par_iter().map(|r| visibility_polygon(poly, r)).collect::<Result<Vec<_>, _>>()?;
        Ok(ReflexRegions { reflex, regions })
    }

    pub fn reflex(&self) -> &[Point] {
        &self.reflex
    }

    pub fn regions(&self) -> &[VisibilityRegion] {
        &self.regions
    }

    /// Number of reflex vertices seen from `p`.
    pub fn depth(&self, p: &Point) -> usize {
        self.regions.iter().filter(|v| v.contains(p)).count()
    }

    /// Number of reflex vertices seen from some point of the segment.
    pub fn chord_count(&self, s: &Segment) -> usize {
        self.regions.iter().filter(|v| v.intersects_segment(&s.a, &s.b)).count()
    }
}

/// Number of reflex vertices seen from `p`, by direct visibility tests.
pub fn reflex_depth(poly: &SimplePolygon, p: &Point) -> Result<usize, VisError> {
    let mut n = 0;
    for r in poly.reflex_vertices() {
        if sees(poly, p, &r)? {
            n += 1;
        }
    }
    Ok(n)
}

/// Points where the depth function can reach its maximum: polygon vertices,
/// region vertices, and crossings of windows with windows and with edges.
pub fn depth_candidates(poly: &SimplePolygon, regions: &ReflexRegions) -> Vec<Point> {
    let mut pts: Vec<Point> = poly.vertices().to_vec();
    let mut windows: Vec<&Segment> = Vec::new();
    for v in regions.regions() {
        pts.extend(v.boundary().iter().cloned());
        windows.extend(v.windows());
    }
    for (i, w) in windows.iter().enumerate() {
        for other in windows[i + 1..].iter().copied().chain(poly.edges()) {
            if let SegmentIntersection::Point(x) = segments_intersect(w, other) {
                pts.push(x);
            }
        }
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Point visibility width over the closed polygon, with the lexicographically
/// least maximizing point as witness.
pub fn pvw(poly: &SimplePolygon) -> Result<WidthResult, VisError> {
    let regions = ReflexRegions::new(poly)?;
    Ok(pvw_with(poly, &regions))
}

pub fn pvw_with(poly: &SimplePolygon, regions: &ReflexRegions) -> WidthResult {
    let candidates = depth_candidates(poly, regions);
    let depths: Vec<usize> = candidates.par_iter().map(|p| regions.depth(p)).collect();
    // Candidates are sorted, so the first maximizer is the least.
    let (best, value) = depths.iter().enumerate().fold((0, 0), |acc, (i, &d)| if d > acc.1 { (i, d) } else { acc });
    WidthResult {
        value,
        witness: Witness::Point(candidates[best].clone()),
        method: WidthMethod::ExactEventPoints,
        candidates_examined: candidates.len(),
    }
}

/// Number of reflex vertices that see part of the chord (chord endpoints
/// that are reflex vertices count too, as they see themselves).
pub fn chord_reflex_count(poly: &SimplePolygon, chord: &Chord<'_>) -> Result<usize, VisError> {
    let mut n = 0;
    for r in poly.reflex_vertices() {
        if chord_interval(poly, chord, &r)?.is_some() {
            n += 1;
        }
    }
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CvwMode {
    CandidateCertified,
    SampledLowerBound,
}

#[derive(Clone, Debug)]
pub struct CvwConfig {
    pub mode: CvwMode,
    /// Number of valid random chords drawn in sampled mode.
    pub samples: usize,
    pub seed: u64,
    /// Largest number of candidate chords evaluated in certified mode;
    /// truncating the candidate list downgrades the result label.
    pub cap: usize,
}

impl Default for CvwConfig {
    fn default() -> Self {
        CvwConfig { mode: CvwMode::CandidateCertified, samples: 10_000, seed: 0, cap: DEFAULT_CAP }
    }
}

/// Default largest number of candidate chords evaluated in certified mode.
pub const DEFAULT_CAP: usize = 2_000_000;

/// Draws per sampled chord before giving up on finding a valid one.
const CHORD_ATTEMPTS: usize = 1_000;
/// Candidate chords evaluated per parallel batch.
const BATCH: usize = 256;

pub fn cvw(poly: &SimplePolygon, mode: CvwMode, samples: usize) -> Result<WidthResult, VisError> {
    cvw_with_config(poly, &CvwConfig { mode, samples, ..CvwConfig::default() })
}

pub fn cvw_with_config(poly: &SimplePolygon, config: &CvwConfig) -> Result<WidthResult, VisError> {
    let regions = ReflexRegions::new(poly)?;
    Ok(match config.mode {
        CvwMode::CandidateCertified => cvw_certified(poly, &regions, config.cap),
        CvwMode::SampledLowerBound => cvw_sampled(poly, &regions, config.samples, config.seed),
    })
}

/// Candidate chords: maximal chords on every line through two event points,
/// normalized and sorted lexicographically.
pub fn candidate_chords(poly: &SimplePolygon, regions: &ReflexRegions) -> Vec<Segment> {
    let mut events: Vec<Point> = poly.vertices().to_vec();
    for v in regions.regions() {
        events.extend(v.boundary().iter().cloned());
    }
    events.sort();
    events.dedup();
    let mut seen = HashSet::new();
    let mut lines: Vec<(&Point, &Point)> = Vec::new();
    for i in 0..events.len() {
        for j in (i + 1)..events.len() {
            if seen.insert(line_key(&events[i], &events[j])) {
                lines.push((&events[i], &events[j]));
            }
        }
    }
    let mut chords: Vec<Segment> =
        lines.par_iter().flat_map_iter(|(p, q)| maximal_chords_on_line(poly, p, q)).map(|c| c.normalized()).collect();
    chords.sort();
    chords.dedup();
    chords
}

pub fn cvw_certified(poly: &SimplePolygon, regions: &ReflexRegions, cap: usize) -> WidthResult {
    let mut chords = candidate_chords(poly, regions);
    let method = if chords.len() > cap {
        chords.truncate(cap);
        WidthMethod::SampledLowerBound
    } else {
        WidthMethod::CandidateCertified
    };
    let ceiling = regions.reflex().len();
    let mut best: Option<(usize, usize)> = None;
    let mut examined = 0;
    for (b, batch) in chords.chunks(BATCH).enumerate() {
        let counts: Vec<usize> = batch.par_iter().map(|c| regions.chord_count(c)).collect();
        examined += batch.len();
        for (i, &n) in counts.iter().enumerate() {
            if best.is_none_or(|(_, v)| n > v) {
                best = Some((b * BATCH + i, n));
            }
        }
        if best.is_some_and(|(_, v)| v == ceiling) {
            break;
        }
    }
    let (idx, value) = best.expect("every polygon has a chord");
    WidthResult { value, witness: Witness::Chord(chords[idx].clone()), method, candidates_examined: examined }
}

pub fn cvw_sampled(poly: &SimplePolygon, regions: &ReflexRegions, samples: usize, seed: u64) -> WidthResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampler = sample::BoundarySampler::new(poly);
    let mut drawn: Vec<Segment> = Vec::with_capacity(samples);
    while drawn.len() < samples {
        match sampler.maximal_chord(&mut rng, CHORD_ATTEMPTS) {
            Some(c) => drawn.push(c.normalized()),
            None => break,
        }
    }
    if drawn.is_empty() {
        drawn.push(maximal_chord_through(poly, &poly.edges()[0]).normalized());
    }
    let counts: Vec<usize> = drawn.par_iter().map(|c| regions.chord_count(c)).collect();
    let mut best = 0;
    for i in 1..drawn.len() {
        if counts[i] > counts[best] || (counts[i] == counts[best] && drawn[i] < drawn[best]) {
            best = i;
        }
    }
    WidthResult {
        value: counts[best],
        witness: Witness::Chord(drawn[best].clone()),
        method: WidthMethod::SampledLowerBound,
        candidates_examined: drawn.len(),
    }
}

/// `2 + 2k + 2k^2 + ... + 2k^k`, the most nodes a restriction graph can have
/// when no point sees more than `k` reflex vertices.
pub fn restriction_size_bound(k: u32) -> BigUint {
    let kb = BigUint::from(k);
    (0..=k).map(|i| BigUint::from(2u32) * kb.pow(i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::make_chord;
    use crate::geom::number::ratio;
    use crate::sample::{l_shape, square};

    #[test]
    fn size_bound_values() {
        assert_eq!(restriction_size_bound(0), BigUint::from(2u32));
        assert_eq!(restriction_size_bound(1), BigUint::from(4u32));
        assert_eq!(restriction_size_bound(2), BigUint::from(14u32));
        assert_eq!(restriction_size_bound(3), BigUint::from(2u32 + 6 + 18 + 54));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(reflex_depth(&square(4), &Point::from_ints(2, 2)).unwrap(), 0);
        assert_eq!(reflex_depth(&l_shape(), &Point::new(ratio(1, 2), ratio(1, 2))).unwrap(), 1);
    }

    #[test]
    fn widths_of_simple_shapes() {
        let sq = square(4);
        assert_eq!(pvw(&sq).unwrap().value, 0);
        assert_eq!(cvw(&sq, CvwMode::CandidateCertified, 1).unwrap().value, 0);
        assert_eq!(cvw(&sq, CvwMode::SampledLowerBound, 50).unwrap().value, 0);
        let l = l_shape();
        let p = pvw(&l).unwrap();
        assert_eq!(p.value, 1);
        assert_eq!(p.witness, Witness::Point(Point::from_ints(0, 0)));
        assert_eq!(cvw(&l, CvwMode::CandidateCertified, 1).unwrap().value, 1);
        assert_eq!(cvw(&l, CvwMode::SampledLowerBound, 50).unwrap().value, 1);
    }

    #[test]
    fn chord_count_examples() {
        let l = l_shape();
        let c = make_chord(&l, Point::from_ints(0, 0), Point::from_ints(0, 2)).unwrap();
        assert_eq!(chord_reflex_count(&l, &c).unwrap(), 1);
        let sq = square(4);
        let c = make_chord(&sq, Point::from_ints(0, 0), Point::from_ints(4, 4)).unwrap();
        assert_eq!(chord_reflex_count(&sq, &c).unwrap(), 0);
    }
}
