//! Invariant suites run by `viswidth verify`.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use viswidth::geom::{make_chord, SimplePolygon};
use viswidth::graph::{build_restriction_graph, check_graph_properties, path_visibility_witness, NodeKind};
use viswidth::sample;
use viswidth::visibility::{sees, visibility_polygon};
use viswidth::widths::{
    chord_reflex_count, cvw_certified, cvw_sampled, pvw_with, reflex_depth, restriction_size_bound, ReflexRegions,
    Witness, DEFAULT_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Widths,
    Graph,
}

#[derive(Clone, Debug)]
pub struct Budget {
    pub points: usize,
    pub chords: usize,
    pub graph_chords: usize,
    pub viewpoints: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { points: 2_000, chords: 2_000, graph_chords: 100, viewpoints: 5, seed: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: String) -> Outcome {
    Outcome { name, passed, detail }
}

/// Runs the chosen suites on one polygon. Errors from the library itself
/// are reported as failed checks.
pub fn run_suites(poly: &SimplePolygon, suite: Suite, budget: &Budget) -> Vec<Outcome> {
    let mut out = Vec::new();
    let regions = match ReflexRegions::new(poly) {
        Ok(r) => r,
        Err(e) => return vec![outcome("regions", false, e.to_string())],
    };
    let pvw = pvw_with(poly, &regions);
    let k = pvw.value;
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);

    if matches!(suite, Suite::All | Suite::Widths) {
        let Witness::Point(wp) = &pvw.witness else { unreachable!() };
        let recount = reflex_depth(poly, wp);
        out.push(outcome(
            "pvw_witness",
            recount.as_ref().is_ok_and(|&d| d == k),
            format!("pvw {k} at {wp}, recount {recount:?}"),
        ));

        let mut deepest = 0;
        let mut sampled_ok = true;
        for _ in 0..budget.points {
            let p = sample::point_in(poly, &mut rng);
            let d = regions.depth(&p);
            deepest = deepest.max(d);
            sampled_ok &= d <= k;
        }
        out.push(outcome("pvw_dominates", sampled_ok, format!("best of {} samples {deepest}", budget.points)));

        let cert = cvw_certified(poly, &regions, DEFAULT_CAP);
        let samp = cvw_sampled(poly, &regions, budget.chords, budget.seed);
        out.push(outcome(
            "cvw_order",
            k <= cert.value && samp.value <= cert.value,
            format!("pvw {k} <= sampled {} <= certified {} ({})", samp.value, cert.value, cert.method),
        ));

        let Witness::Chord(wc) = &cert.witness else { unreachable!() };
        let recount = make_chord(poly, wc.a.clone(), wc.b.clone())
            .map_err(|e| e.to_string())
            .and_then(|c| chord_reflex_count(poly, &c).map_err(|e| e.to_string()));
        out.push(outcome(
            "cvw_witness",
            recount.as_ref().is_ok_and(|&n| n == cert.value),
            format!("cvw {} on {wc}, recount {recount:?}", cert.value),
        ));

        let bound = restriction_size_bound(k as u32);
        let mut worst = 0;
        for _ in 0..budget.graph_chords {
            if let Some(s) = sample::chord(poly, &mut rng, 1_000) {
                worst = worst.max(regions.chord_count(&s));
            }
        }
        out.push(outcome(
            "chord_size_bound",
            BigUint::from(worst + 2) <= bound,
            format!("largest sampled chord count {worst} + 2 vs bound {bound}"),
        ));

        let mut disagreements = 0;
        for _ in 0..budget.viewpoints {
            let v = sample::point_in(poly, &mut rng);
            let Ok(region) = visibility_polygon(poly, &v) else {
                disagreements += 1;
                continue;
            };
            for _ in 0..200 {
                let x = sample::point_in(poly, &mut rng);
                if sees(poly, &v, &x).ok() != Some(region.contains(&x)) {
                    disagreements += 1;
                }
            }
        }
        out.push(outcome(
            "visibility_oracle",
            disagreements == 0,
            format!("{disagreements} disagreements over {} viewpoints", budget.viewpoints),
        ));
    }

    if matches!(suite, Suite::All | Suite::Graph) {
        let mut failures = Vec::new();
        let mut graphs = 0;
        for _ in 0..budget.graph_chords {
            let Some(s) = sample::chord(poly, &mut rng, 1_000) else { continue };
            let chord = make_chord(poly, s.a.clone(), s.b.clone()).expect("sampled chords are valid");
            graphs += 1;
            let g = match build_restriction_graph(poly, &chord) {
                Ok(g) => g,
                Err(e) => {
                    failures.push(format!("{s}: {e}"));
                    continue;
                }
            };
            let longest = match check_graph_properties(&g, k) {
                Ok(report) => {
                    if !report.passed() {
                        failures.push(format!("{s}: {}", report.to_string().trim_end()));
                    }
                    report.longest_path
                }
                Err(e) => {
                    failures.push(format!("{s}: {e}"));
                    continue;
                }
            };
            if longest.first().is_some_and(|&u| g.nodes[u].kind == NodeKind::Reflex) {
                if let Err(e) = path_visibility_witness(poly, &g, &longest) {
                    failures.push(format!("{s}: {e}"));
                }
            }
            for &(u, v) in &g.edges {
                let (pu, pv) = (&g.nodes[u].point, &g.nodes[v].point);
                if g.nodes[v].kind == NodeKind::Reflex && !sees(poly, pv, pu).unwrap_or(false) {
                    failures.push(format!("{s}: {pv} does not see its in-neighbour {pu}"));
                }
            }
        }
        out.push(outcome(
            "restriction_graph",
            failures.is_empty(),
            failures.first().cloned().unwrap_or_else(|| format!("{graphs} graphs, k = {k}")),
        ));
    }
    out
}
