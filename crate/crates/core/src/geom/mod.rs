//! Exact planar geometry: rational points, orientation and intersection
//! predicates, simple polygons and chords.

mod chord;
pub mod number;
mod point;
mod polygon;
mod segment;

use thiserror::Error;

pub use chord::{make_chord, Chord};
pub use number::{format_rational, parse_rational, Rational};
pub(crate) use point::cmp_along;
pub use point::{on_segment, orientation, strictly_between, Orientation, Point};
pub(crate) use polygon::locate_in_ring;
pub use polygon::{contains_point, is_simple, reflex_vertices, Location, SimplePolygon};
pub(crate) use segment::crossing_with_line;
pub use segment::{line_intersection, line_key, segments_intersect, Segment, SegmentIntersection};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} appears more than once")]
    RepeatedVertex(Point),
    #[error("edges {0} and {1} intersect")]
    EdgesIntersect(usize, usize),
    #[error("vertices are not in counterclockwise order")]
    NotCounterclockwise,
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("chord endpoint {0} is not on the polygon boundary")]
    EndpointNotOnBoundary(Point),
    #[error("chord endpoints coincide at {0}")]
    DegenerateChord(Point),
    #[error("segment leaves the polygon")]
    SegmentLeavesPolygon,
}
