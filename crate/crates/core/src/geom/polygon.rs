use std::cmp::Ordering;

use super::number::Rational;
use super::point::{on_segment, orientation, Orientation, Point};
use super::segment::{segments_intersect, Segment, SegmentIntersection};
use super::GeomError;

/// Position of a point relative to a closed polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

impl Location {
    pub fn is_inside(self) -> bool {
        self != Location::Exterior
    }
}

/// A simple polygon with counterclockwise vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolygon {
    vertices: Vec<Point>,
    edges: Vec<Segment>,
    reflex: Vec<bool>,
    min: Point,
    max: Point,
}

impl SimplePolygon {
    /// Validates the ring and builds the polygon.
    pub fn new(vertices: Vec<Point>) -> Result<SimplePolygon, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        if let Some(problem) = simplicity_problem(&vertices) {
            return Err(problem);
        }
        if signed_area2(&vertices) <= Rational::from_integer(0.into()) {
            return Err(GeomError::NotCounterclockwise);
        }
        Ok(SimplePolygon::from_valid(vertices))
    }

    /// Builds the polygon, reversing a clockwise ring first.
    pub fn new_any_orientation(mut vertices: Vec<Point>) -> Result<SimplePolygon, GeomError> {
        if vertices.len() >= 3 && signed_area2(&vertices) < Rational::from_integer(0.into()) {
            vertices.reverse();
        }
        SimplePolygon::new(vertices)
    }

    fn from_valid(vertices: Vec<Point>) -> SimplePolygon {
        let n = vertices.len();
        let edges: Vec<Segment> =
            (0..n).map(|i| Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone())).collect();
        let reflex = (0..n)
            .map(|i| {
                orientation(&vertices[(i + n - 1) % n], &vertices[i], &vertices[(i + 1) % n]) == Orientation::Right
            })
            .collect();
        let min_x = vertices.iter().min_by(|a, b| a.cmp_x(b)).unwrap().x().clone();
        let min_y = vertices.iter().min_by(|a, b| a.cmp_y(b)).unwrap().y().clone();
        let max_x = vertices.iter().max_by(|a, b| a.cmp_x(b)).unwrap().x().clone();
        let max_y = vertices.iter().max_by(|a, b| a.cmp_y(b)).unwrap().y().clone();
        SimplePolygon { vertices, edges, reflex, min: Point::new(min_x, min_y), max: Point::new(max_x, max_y) }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Segment] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        self.reflex[i]
    }

    /// Lower-left and upper-right corners of the bounding box.
    pub fn bounds(&self) -> (&Point, &Point) {
        (&self.min, &self.max)
    }

    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// Reflex vertices in ring order.
    pub fn reflex_vertices(&self) -> Vec<Point> {
        self.vertices.iter().zip(&self.reflex).filter(|(_, &r)| r).map(|(v, _)| v.clone()).collect()
    }

    pub fn reflex_count(&self) -> usize {
        self.reflex.iter().filter(|&&r| r).count()
    }

    pub fn is_reflex_vertex(&self, p: &Point) -> bool {
        self.vertex_index(p).is_some_and(|i| self.reflex[i])
    }

    /// Exact point location by crossing parity.
    pub fn locate(&self, p: &Point) -> Location {
        if p.cmp_x(&self.min).is_lt()
            || p.cmp_y(&self.min).is_lt()
            || p.cmp_x(&self.max).is_gt()
            || p.cmp_y(&self.max).is_gt()
        {
            return Location::Exterior;
        }
        locate_in_ring(&self.vertices, p)
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.edges.iter().any(|e| on_segment(p, &e.a, &e.b))
    }

    /// Twice the signed area.
    pub fn area2(&self) -> Rational {
        signed_area2(&self.vertices)
    }
}

/// Closed point location against an arbitrary ring, by crossing parity with
/// boundary detection. Works for weakly simple rings whose doubled edges cancel.
pub(crate) fn locate_in_ring(ring: &[Point], p: &Point) -> Location {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        if on_segment(p, a, b) {
            return Location::Boundary;
        }
        let a_above = a.cmp_y(p).is_gt();
        let b_above = b.cmp_y(p).is_gt();
        if a_above != b_above {
            // The edge straddles the horizontal through p; count crossings to the right.
            let o = orientation(a, b, p);
            let crosses = if b_above { o == Orientation::Left } else { o == Orientation::Right };
            if crosses {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Interior
    } else {
        Location::Exterior
    }
}

pub(crate) fn signed_area2(vertices: &[Point]) -> Rational {
    let n = vertices.len();
    let mut acc = Rational::from_integer(0.into());
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        acc += a.x() * b.y() - a.y() * b.x();
    }
    acc
}

/// First violated simplicity condition, ignoring orientation.
fn simplicity_problem(vertices: &[Point]) -> Option<GeomError> {
    let n = vertices.len();
    let mut sorted: Vec<&Point> = vertices.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Some(GeomError::RepeatedVertex(w[0].clone()));
    }
    let edges: Vec<Segment> =
        (0..n).map(|i| Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone())).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent_next = j == i + 1;
            let adjacent_prev = i == 0 && j == n - 1;
            let hit = segments_intersect(&edges[i], &edges[j]);
            let ok = match (&hit, adjacent_next, adjacent_prev) {
                (SegmentIntersection::Empty, _, _) => true,
                (SegmentIntersection::Point(x), true, _) => *x == vertices[j],
                (SegmentIntersection::Point(x), _, true) => *x == vertices[0],
                _ => false,
            };
            if !ok {
                return Some(GeomError::EdgesIntersect(i, j));
            }
        }
    }
    None
}

/// True iff the ring is a counterclockwise simple polygon with at least three vertices.
pub fn is_simple(vertices: &[Point]) -> Result<bool, GeomError> {
    if vertices.len() < 3 {
        return Err(GeomError::TooFewVertices(vertices.len()));
    }
    Ok(simplicity_problem(vertices).is_none()
        && signed_area2(vertices).cmp(&Rational::from_integer(0.into())) == Ordering::Greater)
}

pub fn contains_point(poly: &SimplePolygon, p: &Point) -> Location {
    poly.locate(p)
}

pub fn reflex_vertices(poly: &SimplePolygon) -> Vec<Point> {
    poly.reflex_vertices()
}
