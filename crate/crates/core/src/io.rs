//! JSON forms of polygons, regions, width results, restriction graphs and
//! comb descriptions. Coordinates are written as canonical `"n"` or `"p/q"`
//! strings; integers are also accepted on input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::comb::CombStructure;
use crate::geom::{format_rational, parse_rational, GeomError, Point, Rational, Segment, SimplePolygon};
use crate::graph::{NodeKind, RestrictionGraph};
use crate::visibility::{Viewer, VisibilityRegion};
use crate::widths::{WidthResult, Witness};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("malformed point {0:?}: expected X,Y")]
    BadPoint(String),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn value(&self) -> Result<Rational, GeomError> {
        match self {
            Number::Int(v) => Ok(Rational::from_integer((*v).into())),
            Number::Text(t) => parse_rational(t),
        }
    }
}

type Coord = [String; 2];

fn coord(p: &Point) -> Coord {
    [format_rational(p.x()), format_rational(p.y())]
}

fn coords(ps: &[Point]) -> Vec<Coord> {
    ps.iter().map(coord).collect()
}

fn seg(s: &Segment) -> [Coord; 2] {
    [coord(&s.a), coord(&s.b)]
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

#[derive(Deserialize)]
struct PolygonIn {
    vertices: Vec<[Number; 2]>,
}

#[derive(Serialize)]
struct PolygonOut {
    vertices: Vec<Coord>,
}

/// Reads a polygon; the ring must be simple and counterclockwise.
pub fn parse_polygon(text: &str) -> Result<SimplePolygon, FormatError> {
    let raw: PolygonIn = serde_json::from_str(text)?;
    let mut vertices = Vec::with_capacity(raw.vertices.len());
    for [x, y] in &raw.vertices {
        vertices.push(Point::new(x.value()?, y.value()?));
    }
    Ok(SimplePolygon::new(vertices)?)
}

pub fn polygon_to_json(poly: &SimplePolygon) -> String {
    pretty(&PolygonOut { vertices: coords(poly.vertices()) })
}

/// Parses `X,Y` with each coordinate an integer or `p/q`.
pub fn parse_point(text: &str) -> Result<Point, FormatError> {
    let bad = || FormatError::BadPoint(text.to_string());
    let (x, y) = text.split_once(',').ok_or_else(bad)?;
    let x = parse_rational(x).map_err(|_| bad())?;
    let y = parse_rational(y).map_err(|_| bad())?;
    Ok(Point::new(x, y))
}

/// Parses `AX,AY:BX,BY`.
pub fn parse_segment(text: &str) -> Result<(Point, Point), FormatError> {
    let (a, b) = text.split_once(':').ok_or_else(|| FormatError::BadPoint(text.to_string()))?;
    Ok((parse_point(a)?, parse_point(b)?))
}

#[derive(Serialize)]
struct RegionOut {
    owner: serde_json::Value,
    vertices: Vec<Coord>,
    windows: Vec<[Coord; 2]>,
}

pub fn region_to_json(region: &VisibilityRegion) -> String {
    let owner = match region.owner() {
        Viewer::Point(p) => serde_json::json!(coord(p)),
        Viewer::Chord(s) => serde_json::json!(seg(s)),
    };
    pretty(&RegionOut {
        owner,
        vertices: coords(region.boundary()),
        windows: region.windows().iter().map(seg).collect(),
    })
}

#[derive(Serialize)]
struct WidthOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pvw: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cvw: Option<usize>,
    witness: serde_json::Value,
    method: &'static str,
    candidates: usize,
}

/// `which` is `"pvw"` or `"cvw"`.
pub fn width_to_json(which: &str, result: &WidthResult) -> String {
    let witness = match &result.witness {
        Witness::Point(p) => serde_json::json!(coord(p)),
        Witness::Chord(s) => serde_json::json!(seg(s)),
    };
    let value = Some(result.value);
    pretty(&WidthOut {
        pvw: if which == "pvw" { value } else { None },
        cvw: if which == "cvw" { value } else { None },
        witness,
        method: result.method.name(),
        candidates: result.candidates_examined,
    })
}

#[derive(Serialize)]
struct NodeOut {
    id: usize,
    point: Coord,
    kind: &'static str,
    interval: [String; 2],
    layer: Option<usize>,
}

#[derive(Serialize)]
struct GraphOut {
    chord: [Coord; 2],
    nodes: Vec<NodeOut>,
    edges: Vec<[usize; 2]>,
    layers: Vec<Vec<usize>>,
}

pub fn graph_to_json(g: &RestrictionGraph) -> String {
    let layer_of = |u: usize| g.layers.iter().position(|l| l.contains(&u));
    let nodes = g
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| NodeOut {
            id,
            point: coord(&n.point),
            kind: match n.kind {
                NodeKind::Endpoint => "Endpoint",
                NodeKind::Reflex => "Reflex",
            },
            interval: [format_rational(&n.interval.lo()), format_rational(&n.interval.hi())],
            layer: layer_of(id),
        })
        .collect();
    pretty(&GraphOut {
        chord: seg(&g.chord),
        nodes,
        edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        layers: g.layers.clone(),
    })
}

#[derive(Serialize)]
struct SpikeOut {
    id: usize,
    layer: usize,
    parent: Option<usize>,
    y_range: [String; 2],
    bridge: Option<[Coord; 2]>,
    children: Vec<usize>,
}

#[derive(Serialize)]
struct CombOut {
    k: usize,
    stretch_factors: Vec<String>,
    chord: [Coord; 2],
    spikes: Vec<SpikeOut>,
}

/// Spike tree and stretch factors of a generated comb.
pub fn comb_to_json(comb: &CombStructure) -> String {
    pretty(&CombOut {
        k: comb.k,
        stretch_factors: comb.stretch_factors.iter().map(format_rational).collect(),
        chord: seg(comb.chord_segment()),
        spikes: comb
            .spikes
            .iter()
            .map(|s| SpikeOut {
                id: s.id,
                layer: s.layer,
                parent: s.parent,
                y_range: [format_rational(&s.y_lo), format_rational(&s.y_hi)],
                bridge: s.bridge.as_ref().map(|(lo, hi)| [coord(lo), coord(hi)]),
                children: s.children.clone(),
            })
            .collect(),
    })
}
