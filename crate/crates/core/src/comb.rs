//! The Iterated Comb: a y-monotone polygon whose leftmost edge sees every
//! reflex vertex while no point sees more than two per layer.
//!
//! Layer `i` spikes occupy `i <= x <= i + 1`. Each non-leaf spike splits at
//! its right end into two child spikes separated by a vertical bridge; the
//! two bridge corners are the reflex vertices of the next layer. Leaf spikes
//! have height 1, a layer-`i` bridge has height `1 + s_i`, and a parent is
//! as tall as its two children plus their bridge.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::geom::number::int;
use crate::geom::{make_chord, Chord, GeomError, Point, Rational, Segment, SimplePolygon};
use crate::visibility::{chord_interval, ChordInterval, VisError};

/// Most doublings of one layer's stretch before giving up.
pub const MAX_DOUBLINGS: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("a comb needs at least one layer")]
    NoLayers,
    #[error("stretch search for layer {layer} did not converge")]
    StretchSearchDiverged { layer: usize },
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Visibility(#[from] VisError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spike {
    pub id: usize,
    pub layer: usize,
    pub parent: Option<usize>,
    pub y_lo: Rational,
    pub y_hi: Rational,
    /// Lower and upper corner of the bridge splitting this spike; `None`
    /// for the leaves of the last layer.
    pub bridge: Option<(Point, Point)>,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CombStructure {
    pub k: usize,
    pub polygon: SimplePolygon,
    /// Bridge stretch `s_i` for layers `1..=k`, at index `i - 1`.
    pub stretch_factors: Vec<Rational>,
    /// Spike tree in depth-first order; index 0 is the layer-0 trunk.
    pub spikes: Vec<Spike>,
    chord: Segment,
}

impl CombStructure {
    /// The leftmost vertical edge, bottom to top.
    pub fn chord(&self) -> Chord<'_> {
        make_chord(&self.polygon, self.chord.a.clone(), self.chord.b.clone())
            .expect("the left edge of a comb is a chord")
    }

    pub fn chord_segment(&self) -> &Segment {
        &self.chord
    }

    pub fn spikes_in_layer(&self, layer: usize) -> impl Iterator<Item = &Spike> {
        self.spikes.iter().filter(move |s| s.layer == layer)
    }

    /// Reflex vertices created in layer `i` (the bridge corners of layer `i - 1`).
    pub fn layer_reflex(&self, layer: usize) -> Vec<Point> {
        if layer == 0 {
            return Vec::new();
        }
        self.spikes_in_layer(layer - 1).filter_map(|s| s.bridge.clone()).flat_map(|(lo, hi)| [lo, hi]).collect()
    }

    /// Layer of the deepest spike containing both spikes.
    fn common_layer(&self, mut u: usize, mut v: usize) -> usize {
        while u != v {
            if self.spikes[u].layer >= self.spikes[v].layer {
                u = self.spikes[u].parent.expect("only the trunk has no parent");
            } else {
                v = self.spikes[v].parent.expect("only the trunk has no parent");
            }
        }
        self.spikes[u].layer
    }
}

/// `(pvw, cvw)` of the `k`-layer comb: two visible corners per layer for a
/// point, every corner for the left edge.
pub fn comb_expected_widths(k: usize) -> (usize, usize) {
    (2 * k, (1usize << (k + 1)) - 2)
}

/// Builds the comb with the given bridge stretches (`s_1..s_k`, all `>= 0`).
pub fn build_comb(k: usize, stretch: &[Rational]) -> Result<CombStructure, CombError> {
    if k == 0 {
        return Err(CombError::NoLayers);
    }
    assert_eq!(stretch.len(), k, "one stretch factor per layer");
    assert!(stretch.iter().all(|s| *s >= Rational::zero()), "stretch factors are non-negative");
    // height[i]: spike height at layer i; bridge[i]: bridge height at layer i.
    let mut height = vec![Rational::zero(); k + 1];
    let mut bridge = vec![Rational::zero(); k + 1];
    height[k] = Rational::one();
    for i in (1..=k).rev() {
        bridge[i] = Rational::one() + &stretch[i - 1];
        height[i - 1] = &height[i] * int(2) + &bridge[i];
    }
    let mut b = Builder { k, height, bridge, vertices: Vec::new(), spikes: Vec::new() };
    b.vertices.push(Point::from_ints(0, 0));
    b.emit(0, Rational::zero(), None);
    let top = Point::new(int(0), b.height[0].clone());
    b.vertices.push(top.clone());
    let polygon = SimplePolygon::new(b.vertices)?;
    Ok(CombStructure {
        k,
        polygon,
        stretch_factors: stretch.to_vec(),
        spikes: b.spikes,
        chord: Segment::new(Point::from_ints(0, 0), top),
    })
}

struct Builder {
    k: usize,
    height: Vec<Rational>,
    bridge: Vec<Rational>,
    vertices: Vec<Point>,
    spikes: Vec<Spike>,
}

impl Builder {
    /// Emits the right-hand boundary of a spike, bottom to top.
    fn emit(&mut self, layer: usize, y0: Rational, parent: Option<usize>) -> usize {
        let id = self.spikes.len();
        let y_hi = &y0 + &self.height[layer];
        self.spikes.push(Spike {
            id,
            layer,
            parent,
            y_lo: y0.clone(),
            y_hi: y_hi.clone(),
            bridge: None,
            children: Vec::new(),
        });
        let x_end = int(layer as i64 + 1);
        if layer == self.k {
            self.vertices.push(Point::new(x_end.clone(), y0));
            self.vertices.push(Point::new(x_end, y_hi));
            return id;
        }
        let child = layer + 1;
        let lower_top = &y0 + &self.height[child];
        let upper_bottom = &lower_top + &self.bridge[child];
        let lower = self.emit(child, y0, Some(id));
        let lo = Point::new(x_end.clone(), lower_top);
        let hi = Point::new(x_end, upper_bottom.clone());
        self.vertices.push(lo.clone());
        self.vertices.push(hi.clone());
        let upper = self.emit(child, upper_bottom, Some(id));
        self.spikes[id].bridge = Some((lo, hi));
        self.spikes[id].children = vec![lower, upper];
        id
    }
}

/// Spike isolation at one layer: corners inside different spikes of this
/// layer must see disjoint parts of the chord.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerReport {
    pub layer: usize,
    pub pairs_checked: usize,
    /// First pair of corners whose chord intervals overlap.
    pub violation: Option<(Point, Point)>,
}

impl LayerReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationReport {
    pub layers: Vec<LayerReport>,
}

impl IsolationReport {
    pub fn passed(&self) -> bool {
        self.layers.iter().all(LayerReport::passed)
    }

    pub fn first_violation(&self) -> Option<(usize, &(Point, Point))> {
        self.layers.iter().find_map(|l| l.violation.as_ref().map(|v| (l.layer, v)))
    }
}

/// Per reflex vertex of the comb, its interval on the comb chord.
fn corner_intervals(comb: &CombStructure) -> Result<Vec<(Point, Option<ChordInterval>)>, VisError> {
    let chord = comb.chord();
    comb.polygon
        .reflex_vertices()
        .into_iter()
        .map(|r| chord_interval(&comb.polygon, &chord, &r).map(|iv| (r, iv)))
        .collect()
}

struct Violation {
    pair: (Point, Point),
    common_layer: usize,
}

fn check_layer(
    comb: &CombStructure,
    intervals: &[(Point, Option<ChordInterval>)],
    layer: usize,
    siblings_only: bool,
) -> (usize, Option<Violation>) {
    let lookup = |p: &Point| intervals.iter().find(|(r, _)| r == p).and_then(|(_, iv)| iv.as_ref());
    let spikes: Vec<&Spike> = comb.spikes_in_layer(layer).filter(|s| s.bridge.is_some()).collect();
    let mut pairs = 0;
    for (i, s) in spikes.iter().enumerate() {
        for t in &spikes[i + 1..] {
            if siblings_only && s.parent != t.parent {
                continue;
            }
            let (s0, s1) = s.bridge.as_ref().unwrap();
            let (t0, t1) = t.bridge.as_ref().unwrap();
            for u in [s0, s1] {
                for v in [t0, t1] {
                    pairs += 1;
                    if let (Some(iu), Some(iv)) = (lookup(u), lookup(v)) {
                        if !iu.disjoint_from(iv) {
                            let common_layer = comb.common_layer(s.id, t.id);
                            return (pairs, Some(Violation { pair: (u.clone(), v.clone()), common_layer }));
                        }
                    }
                }
            }
        }
    }
    (pairs, None)
}

/// Checks, for every layer, that corners interior to distinct spikes of
/// that layer see disjoint parts of the chord.
pub fn certify_spike_isolation(comb: &CombStructure) -> Result<IsolationReport, VisError> {
    let intervals = corner_intervals(comb)?;
    let layers = (1..=comb.k)
        .map(|layer| {
            let (pairs_checked, v) = check_layer(comb, &intervals, layer, false);
            LayerReport { layer, pairs_checked, violation: v.map(|v| v.pair) }
        })
        .collect();
    Ok(IsolationReport { layers })
}

fn bump(stretch: &mut [Rational], doublings: &mut [u32], layer: usize) -> Result<(), CombError> {
    let i = layer - 1;
    doublings[i] += 1;
    if doublings[i] > MAX_DOUBLINGS {
        return Err(CombError::StretchSearchDiverged { layer });
    }
    stretch[i] = if stretch[i].is_zero() { Rational::one() } else { &stretch[i] * int(2) };
    Ok(())
}

/// Generates the `k`-layer comb, stretching bridges from the innermost layer
/// outwards until spike isolation holds everywhere.
pub fn generate_comb(k: usize) -> Result<CombStructure, CombError> {
    if k == 0 {
        return Err(CombError::NoLayers);
    }
    let mut stretch = vec![Rational::zero(); k];
    let mut doublings = vec![0u32; k];
    // Sibling spikes of layer i are separated by the layer-i bridge alone.
    for layer in (1..=k).rev() {
        loop {
            let comb = build_comb(k, &stretch)?;
            let intervals = corner_intervals(&comb)?;
            if check_layer(&comb, &intervals, layer, true).1.is_none() {
                break;
            }
            bump(&mut stretch, &mut doublings, layer)?;
        }
    }
    // Spikes further apart are separated by the bridge just below their
    // deepest common ancestor.
    loop {
        let comb = build_comb(k, &stretch)?;
        let intervals = corner_intervals(&comb)?;
        let found = (1..=k).find_map(|layer| check_layer(&comb, &intervals, layer, false).1);
        match found {
            None => return Ok(comb),
            Some(v) => bump(&mut stretch, &mut doublings, v.common_layer + 1)?,
        }
    }
}

/// The comb with every bridge at its minimum height.
pub fn unstretched_comb(k: usize) -> Result<CombStructure, CombError> {
    build_comb(k, &vec![Rational::zero(); k])
}

/// Whether the ring splits into a rising and a falling chain in `y`.
pub fn is_y_monotone(poly: &SimplePolygon) -> bool {
    let v = poly.vertices();
    let n = v.len();
    let key = |i: usize| (v[i].y().clone(), v[i].x().clone());
    let lo = (0..n).min_by_key(|&i| key(i)).unwrap();
    let hi = (0..n).max_by_key(|&i| key(i)).unwrap();
    let mut i = lo;
    while i != hi {
        let j = (i + 1) % n;
        if v[j].y() < v[i].y() {
            return false;
        }
        i = j;
    }
    while i != lo {
        let j = (i + 1) % n;
        if v[j].y() > v[i].y() {
            return false;
        }
        i = j;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts() {
        for k in 1..=4 {
            let comb = build_comb(k, &vec![Rational::zero(); k]).unwrap();
            assert_eq!(comb.polygon.len(), 4 << k);
            assert_eq!(comb.polygon.reflex_count(), (2 << k) - 2);
            for layer in 1..=k {
                assert_eq!(comb.layer_reflex(layer).len(), 1 << layer);
            }
            assert!(is_y_monotone(&comb.polygon));
        }
    }

    #[test]
    fn one_layer_comb() {
        let comb = build_comb(1, &[Rational::zero()]).unwrap();
        let ring: Vec<Point> = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (2, 2), (2, 3), (0, 3)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        assert_eq!(comb.polygon.vertices(), ring.as_slice());
        assert_eq!(comb.chord_segment(), &Segment::new(Point::from_ints(0, 0), Point::from_ints(0, 3)));
    }

    #[test]
    fn expected_widths() {
        assert_eq!(comb_expected_widths(1), (2, 2));
        assert_eq!(comb_expected_widths(2), (4, 6));
        assert_eq!(comb_expected_widths(3), (6, 14));
    }

    #[test]
    fn generated_combs_are_isolated() {
        for k in 1..=3 {
            let comb = generate_comb(k).unwrap();
            assert!(certify_spike_isolation(&comb).unwrap().passed(), "k = {k}");
        }
    }

    #[test]
    fn unstretched_comb_fails_isolation() {
        let report = certify_spike_isolation(&unstretched_comb(2).unwrap()).unwrap();
        assert!(!report.passed());
        assert!(report.first_violation().is_some());
    }

    #[test]
    fn monotonicity_detects_pockets() {
        let u: Vec<Point> = [(0, 0), (6, 0), (6, 4), (4, 4), (4, 2), (2, 2), (2, 4), (0, 4)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        assert!(!is_y_monotone(&SimplePolygon::new(u).unwrap()));
    }
}
