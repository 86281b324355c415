//! The visibility restriction graph of a chord.
//!
//! Nodes are the chord endpoints `a`, `b` and every reflex vertex that sees
//! part of the chord. Each reflex node has an edge to each of the two points
//! restricting its interval, so edges point from the restricted node towards
//! the endpoints.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::geom::{Chord, Point, Rational, Segment, SimplePolygon};
use crate::visibility::{chord_interval, sees, ChordInterval, VisError};
use crate::widths::restriction_size_bound;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error(transparent)]
    Visibility(#[from] VisError),
    #[error("restrictor {restrictor} of {node} is not a node of the graph")]
    RestrictorOutsideR { node: Point, restrictor: Point },
    #[error("restriction graph has a cycle through {0:?}")]
    CyclicGraph(Vec<Point>),
    #[error("node list is not a directed path starting at a reflex node")]
    NotAPath,
    #[error("witness {witness} on the chord does not see path node {node}")]
    AssertionFailure { witness: Point, node: Point },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Endpoint,
    Reflex,
}

/// The part of the chord a node sees; endpoints see all of it by convention.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum NodeInterval {
    Full,
    Part(ChordInterval),
}

impl NodeInterval {
    pub fn lo(&self) -> Rational {
        match self {
            NodeInterval::Full => Rational::zero(),
            NodeInterval::Part(iv) => iv.lo.clone(),
        }
    }

    pub fn hi(&self) -> Rational {
        match self {
            NodeInterval::Full => Rational::one(),
            NodeInterval::Part(iv) => iv.hi.clone(),
        }
    }

    pub fn within(&self, other: &NodeInterval) -> bool {
        other.lo() <= self.lo() && self.hi() <= other.hi()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphNode {
    pub point: Point,
    pub kind: NodeKind,
    pub interval: NodeInterval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionGraph {
    pub chord: Segment,
    /// `a`, `b`, then the reflex nodes in lexicographic order.
    pub nodes: Vec<GraphNode>,
    /// `(u, v)`: `u` is restricted by `v`. A node restricted twice by the
    /// same point keeps both edges.
    pub edges: Vec<(usize, usize)>,
    /// Nodes by distance to the nearer endpoint along reversed edges.
    pub layers: Vec<Vec<usize>>,
}

impl RestrictionGraph {
    pub fn node_index(&self, p: &Point) -> Option<usize> {
        self.nodes.iter().position(|n| n.point == *p)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == u).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.0 == u).map(|e| e.1)
    }

    fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.1 == v).map(|e| e.0)
    }
}

/// Reflex vertices seeing part of the chord, with their intervals, in
/// lexicographic order. Reflex vertices at a chord endpoint are left out.
fn reflex_intervals(poly: &SimplePolygon, chord: &Chord<'_>) -> Result<Vec<ChordInterval>, VisError> {
    let mut reflex = poly.reflex_vertices();
    reflex.retain(|r| r != chord.a() && r != chord.b());
    reflex.sort();
    let found: Vec<Option<ChordInterval>> =
        reflex.par_iter().map(|r| chord_interval(poly, chord, r)).collect::<Result<_, _>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// `a`, `b`, then the reflex vertices that see part of the chord.
pub fn visible_reflex_set(poly: &SimplePolygon, chord: &Chord<'_>) -> Result<Vec<Point>, VisError> {
    let mut out = vec![chord.a().clone(), chord.b().clone()];
    out.extend(reflex_intervals(poly, chord)?.into_iter().map(|iv| iv.owner));
    Ok(out)
}

pub fn build_restriction_graph(poly: &SimplePolygon, chord: &Chord<'_>) -> Result<RestrictionGraph, GraphError> {
    let intervals = reflex_intervals(poly, chord)?;
    let mut nodes = vec![
        GraphNode { point: chord.a().clone(), kind: NodeKind::Endpoint, interval: NodeInterval::Full },
        GraphNode { point: chord.b().clone(), kind: NodeKind::Endpoint, interval: NodeInterval::Full },
    ];
    nodes.extend(intervals.into_iter().map(|iv| GraphNode {
        point: iv.owner.clone(),
        kind: NodeKind::Reflex,
        interval: NodeInterval::Part(iv),
    }));
    let index = |p: &Point| nodes.iter().position(|n| n.point == *p);
    let mut edges = Vec::new();
    for (u, node) in nodes.iter().enumerate() {
        if let NodeInterval::Part(iv) = &node.interval {
            for r in [&iv.lo_restrictor, &iv.hi_restrictor] {
                let v = index(r).ok_or_else(|| GraphError::RestrictorOutsideR {
                    node: node.point.clone(),
                    restrictor: r.clone(),
                })?;
                edges.push((u, v));
            }
        }
    }
    let mut g = RestrictionGraph { chord: chord.segment().clone(), nodes, edges, layers: Vec::new() };
    g.layers = layering(&g);
    Ok(g)
}

fn layering(g: &RestrictionGraph) -> Vec<Vec<usize>> {
    let mut dist: Vec<Option<usize>> = vec![None; g.nodes.len()];
    let mut queue = VecDeque::new();
    for s in [0, 1] {
        dist[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for u in g.predecessors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    let depth = dist.iter().flatten().max().copied().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (u, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            layers[*d].push(u);
        }
    }
    layers
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub k: usize,
    pub checks: Vec<PropertyCheck>,
    /// A longest directed path, by node index.
    pub longest_path: Vec<usize>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<20} {}", c.name, if c.passed { "pass" } else { "FAIL" })?;
            if let Some(x) = &c.counterexample {
                write!(f, "  {x}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, counterexample: Option<String>) -> PropertyCheck {
    PropertyCheck { name, passed: counterexample.is_none(), counterexample }
}

/// Topological order, or the nodes left on cycles.
fn topo_order(g: &RestrictionGraph) -> Result<Vec<usize>, Vec<usize>> {
    let n = g.nodes.len();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in g.successors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).filter(|&v| indeg[v] > 0).collect())
    }
}

/// Longest directed path in an acyclic graph, counted in nodes.
fn longest_path(g: &RestrictionGraph, order: &[usize]) -> Vec<usize> {
    let n = g.nodes.len();
    // best[u]: longest path starting at u; next[u]: its second node.
    let mut best = vec![1usize; n];
    let mut next = vec![None; n];
    for &u in order.iter().rev() {
        for v in g.successors(u) {
            if best[v] + 1 > best[u] {
                best[u] = best[v] + 1;
                next[u] = Some(v);
            }
        }
    }
    let Some(mut u) = (0..n).max_by_key(|&u| (best[u], std::cmp::Reverse(u))) else {
        return Vec::new();
    };
    let mut path = vec![u];
    while let Some(v) = next[u] {
        path.push(v);
        u = v;
    }
    path
}

/// Checks the structural properties of a restriction graph for a polygon in
/// which no point sees more than `k` reflex vertices.
///
/// The in-degree bound `k - 1` is checked on reflex nodes, where a node sees
/// itself and all its in-neighbours. An endpoint sees its in-neighbours but
/// need not be reflex, so its bound is `k`; that is checked separately.
pub fn check_graph_properties(g: &RestrictionGraph, k: usize) -> Result<PropertyReport, GraphError> {
    let order = topo_order(g)
        .map_err(|cycle| GraphError::CyclicGraph(cycle.into_iter().map(|u| g.nodes[u].point.clone()).collect()))?;
    let name = |u: usize| g.nodes[u].point.to_string();
    let reflex = |u: &usize| g.nodes[*u].kind == NodeKind::Reflex;
    let n = g.nodes.len();
    let mut checks = Vec::new();

    let sinks: Vec<usize> = (0..n).filter(|&u| g.out_degree(u) == 0).collect();
    checks.push(check(
        "sinks",
        (sinks != [0, 1]).then(|| format!("sinks are {:?}", sinks.iter().map(|&u| name(u)).collect::<Vec<_>>())),
    ));

    let bad_out = (0..n).filter(reflex).find(|&u| g.out_degree(u) != 2);
    checks.push(check("out_degree", bad_out.map(|u| format!("{} has out-degree {}", name(u), g.out_degree(u)))));

    let limit = k.saturating_sub(1);
    let bad_in = (0..n).filter(reflex).find(|&u| g.in_degree(u) > limit);
    checks.push(check("in_degree", bad_in.map(|u| format!("{} has in-degree {} > {limit}", name(u), g.in_degree(u)))));

    let bad_end = [0, 1].into_iter().find(|&u| g.in_degree(u) > k);
    checks.push(check(
        "endpoint_in_degree",
        bad_end.map(|u| format!("{} has in-degree {} > {k}", name(u), g.in_degree(u))),
    ));

    let path = longest_path(g, &order);
    checks.push(check(
        "longest_path",
        (path.len() > k + 1).then(|| {
            let names: Vec<String> = path.iter().map(|&u| name(u)).collect();
            format!("path of {} nodes > {}: {}", path.len(), k + 1, names.join(" -> "))
        }),
    ));

    let bad_nest = g.edges.iter().find(|&&(u, v)| !g.nodes[u].interval.within(&g.nodes[v].interval));
    checks.push(check("nesting", bad_nest.map(|&(u, v)| format!("I({}) not inside I({})", name(u), name(v)))));

    let mut layer_msg = None;
    if g.layers.first().map(Vec::len) != Some(2) {
        layer_msg = Some("layer 0 is not {a, b}".to_string());
    }
    for (i, w) in g.layers.windows(2).enumerate() {
        if layer_msg.is_none() && w[1].len() > w[0].len() * k {
            layer_msg = Some(format!("layer {} has {} > {} * {k} nodes", i + 1, w[1].len(), w[0].len()));
        }
    }
    checks.push(check("layer_growth", layer_msg));

    let bound = restriction_size_bound(k as u32);
    checks.push(check("size_bound", (BigUint::from(n) > bound).then(|| format!("{n} nodes > {bound}"))));

    Ok(PropertyReport { k, checks, longest_path: path })
}

/// A chord point inside the first node's interval, checked to see every
/// reflex node of the path.
pub fn path_visibility_witness(
    poly: &SimplePolygon,
    g: &RestrictionGraph,
    path: &[usize],
) -> Result<Point, GraphError> {
    let first = path.first().and_then(|&u| g.nodes.get(u)).ok_or(GraphError::NotAPath)?;
    if first.kind != NodeKind::Reflex {
        return Err(GraphError::NotAPath);
    }
    for w in path.windows(2) {
        if !g.edges.contains(&(w[0], w[1])) {
            return Err(GraphError::NotAPath);
        }
    }
    let mid = (first.interval.lo() + first.interval.hi()) / Rational::from_integer(2.into());
    let q = g.chord.at(&mid);
    for &u in path {
        let node = &g.nodes[u];
        if node.kind == NodeKind::Reflex && !sees(poly, &q, &node.point)? {
            return Err(GraphError::AssertionFailure { witness: q, node: node.point.clone() });
        }
    }
    Ok(q)
}
