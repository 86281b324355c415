use super::point::Point;
use super::polygon::SimplePolygon;
use super::segment::Segment;
use super::GeomError;
use crate::visibility::segment_in_polygon;

/// A segment between two boundary points that lies in the closed polygon.
#[derive(Clone, Debug)]
pub struct Chord<'p> {
    polygon: &'p SimplePolygon,
    segment: Segment,
}

impl<'p> Chord<'p> {
    pub fn polygon(&self) -> &'p SimplePolygon {
        self.polygon
    }

    pub fn segment(&self) -> &Segment {
        &self.segment
    }

    pub fn a(&self) -> &Point {
        &self.segment.a
    }

    pub fn b(&self) -> &Point {
        &self.segment.b
    }
}

impl PartialEq for Chord<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.polygon, other.polygon) && self.segment == other.segment
    }
}

/// Validates `seg(a, b)` as a chord of `poly`.
pub fn make_chord<'p>(poly: &'p SimplePolygon, a: Point, b: Point) -> Result<Chord<'p>, GeomError> {
    for p in [&a, &b] {
        if !poly.on_boundary(p) {
            return Err(GeomError::EndpointNotOnBoundary(p.clone()));
        }
    }
    if a == b {
        return Err(GeomError::DegenerateChord(a));
    }
    if !segment_in_polygon(poly, &a, &b) {
        return Err(GeomError::SegmentLeavesPolygon);
    }
    Ok(Chord { polygon: poly, segment: Segment::new(a, b) })
}
