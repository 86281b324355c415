//! Deterministic SVG drawings of polygons and their overlays.
//!
//! Exact coordinates are converted to floats here and nowhere else; every
//! number is written with 9 significant digits.

use std::fmt::Write;

use viswidth::geom::number::to_f64;
use viswidth::geom::{Point, Segment, SimplePolygon};
use viswidth::graph::RestrictionGraph;
use viswidth::visibility::{ChordInterval, VisibilityRegion};

const LAYER_COLORS: [&str; 6] = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"];

pub enum Overlay {
    /// A visibility region with its viewer (a point or a chord).
    Region(Box<VisibilityRegion>),
    Viewpoint(Point),
    Chord(Segment),
    /// Chord intervals, each drawn as a sub-segment of its chord.
    Intervals(Vec<ChordInterval>),
    Graph(RestrictionGraph),
    Witness {
        label: String,
        at: Point,
    },
}

pub struct RenderSpec {
    pub polygon: SimplePolygon,
    pub overlays: Vec<Overlay>,
    /// Length of the longer side of the drawing.
    pub size: f64,
    pub margin: f64,
}

impl RenderSpec {
    pub fn new(polygon: SimplePolygon) -> RenderSpec {
        RenderSpec { polygon, overlays: Vec::new(), size: 800.0, margin: 20.0 }
    }
}

/// Formats with at most 9 significant digits and no trailing zeros.
pub fn num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn xy(&self, p: &Point) -> (String, String) {
        let x = (to_f64(p.x()) - self.min_x) * self.scale + self.margin;
        let y = (self.max_y - to_f64(p.y())) * self.scale + self.margin;
        (num(x), num(y))
    }

    fn path(&self, ring: &[Point]) -> String {
        let mut d = String::new();
        for (i, p) in ring.iter().enumerate() {
            let (x, y) = self.xy(p);
            d.push_str(if i == 0 { "M " } else { " L " });
            d.push_str(&x);
            d.push(' ');
            d.push_str(&y);
        }
        d.push_str(" Z");
        d
    }

    fn line(&self, out: &mut String, id: &str, a: &Point, b: &Point, style: &str) {
        let (x1, y1) = self.xy(a);
        let (x2, y2) = self.xy(b);
        writeln!(out, r#"<line id="{id}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>"#).unwrap();
    }

    fn dot(&self, out: &mut String, id: &str, p: &Point, r: f64, fill: &str) {
        let (cx, cy) = self.xy(p);
        writeln!(out, r#"<circle id="{id}" cx="{cx}" cy="{cy}" r="{}" fill="{fill}"/>"#, num(r)).unwrap();
    }
}

pub fn render_svg(spec: &RenderSpec) -> String {
    let (lo, hi) = spec.polygon.bounds();
    let (min_x, min_y) = (to_f64(lo.x()), to_f64(lo.y()));
    let (max_x, max_y) = (to_f64(hi.x()), to_f64(hi.y()));
    let (w, h) = ((max_x - min_x).max(f64::MIN_POSITIVE), (max_y - min_y).max(f64::MIN_POSITIVE));
    let scale = (spec.size - 2.0 * spec.margin) / w.max(h);
    let frame = Frame { min_x, max_y, scale, margin: spec.margin };
    let width = w * scale + 2.0 * spec.margin;
    let height = h * scale + 2.0 * spec.margin;
    let stroke = num(spec.size / 400.0);
    let marker = spec.size / 160.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        num(width),
        num(height)
    )
    .unwrap();
    writeln!(
        out,
        r##"<path id="polygon" d="{}" fill="#f5f2ea" stroke="#222222" stroke-width="{stroke}"/>"##,
        frame.path(spec.polygon.vertices())
    )
    .unwrap();

    for (i, overlay) in spec.overlays.iter().enumerate() {
        match overlay {
            Overlay::Region(region) => {
                writeln!(
                    out,
                    r##"<path id="region-{i}" d="{}" fill="#4a90d9" fill-opacity="0.35" stroke="none"/>"##,
                    frame.path(region.boundary())
                )
                .unwrap();
                for (j, win) in region.windows().iter().enumerate() {
                    let style = format!(r##"stroke="#2a5d8f" stroke-width="{stroke}" stroke-dasharray="4 3""##);
                    frame.line(&mut out, &format!("window-{i}-{j}"), &win.a, &win.b, &style);
                }
            }
            Overlay::Viewpoint(p) => frame.dot(&mut out, &format!("viewpoint-{i}"), p, marker, "#c0392b"),
            Overlay::Chord(s) => {
                let style = format!(r##"stroke="#c0392b" stroke-width="{}""##, num(spec.size / 200.0));
                frame.line(&mut out, &format!("chord-{i}"), &s.a, &s.b, &style);
            }
            Overlay::Intervals(intervals) => {
                for (j, iv) in intervals.iter().enumerate() {
                    let color = LAYER_COLORS[j % LAYER_COLORS.len()];
                    let style = format!(r#"stroke="{color}" stroke-width="{stroke}" stroke-opacity="0.8""#);
                    frame.line(&mut out, &format!("interval-{i}-{j}"), &iv.lo_point(), &iv.hi_point(), &style);
                }
            }
            Overlay::Graph(g) => {
                writeln!(out, r#"<g id="graph-{i}">"#).unwrap();
                for (j, &(u, v)) in g.edges.iter().enumerate() {
                    let style = format!(r##"stroke="#555555" stroke-width="{stroke}" stroke-opacity="0.7""##);
                    frame.line(&mut out, &format!("edge-{j}"), &g.nodes[u].point, &g.nodes[v].point, &style);
                }
                for (j, node) in g.nodes.iter().enumerate() {
                    let layer = g.layers.iter().position(|l| l.contains(&j));
                    let color = layer.map_or("#000000", |l| LAYER_COLORS[l % LAYER_COLORS.len()]);
                    frame.dot(&mut out, &format!("node-{j}"), &node.point, marker, color);
                }
                out.push_str("</g>\n");
            }
            Overlay::Witness { label, at } => {
                frame.dot(&mut out, &format!("witness-{i}"), at, marker, "#8e44ad");
                let (x, y) = frame.xy(at);
                writeln!(
                    out,
                    r#"<text x="{x}" y="{y}" dx="{0}" dy="-{0}" font-family="monospace" font-size="{1}">{label}</text>"#,
                    num(marker),
                    num(spec.size / 50.0)
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(num(0.0), "0");
        assert_eq!(num(12.5), "12.5");
        assert_eq!(num(1.0 / 3.0), "0.333333333");
        assert_eq!(num(123456.789123), "123456.789");
        assert_eq!(num(-2.0), "-2");
    }
}
