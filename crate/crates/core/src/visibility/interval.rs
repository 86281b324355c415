use num_traits::{One, Zero};

use super::{visible_portion, VisError};
use crate::geom::{on_segment, Chord, Point, Rational, Segment, SimplePolygon};

/// The part `I(r)` of a chord seen by a reflex vertex `r`, as the closed
/// parameter range `[lo, hi]` along the chord from `a` to `b`, together with
/// the two points of `R` that cut it off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordInterval {
    pub chord: Segment,
    pub owner: Point,
    pub lo: Rational,
    pub hi: Rational,
    pub lo_restrictor: Point,
    pub hi_restrictor: Point,
}

impl ChordInterval {
    pub fn lo_point(&self) -> Point {
        self.chord.at(&self.lo)
    }

    pub fn hi_point(&self) -> Point {
        self.chord.at(&self.hi)
    }

    pub fn midpoint(&self) -> Point {
        self.chord.at(&((&self.lo + &self.hi) / Rational::from_integer(2.into())))
    }

    pub fn contains_param(&self, t: &Rational) -> bool {
        &self.lo <= t && t <= &self.hi
    }

    /// `self ⊆ [lo, hi]`.
    pub fn within(&self, lo: &Rational, hi: &Rational) -> bool {
        lo <= &self.lo && &self.hi <= hi
    }

    pub fn disjoint_from(&self, other: &ChordInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}

/// Computes `I(r)`; `None` when `r` sees no point of the chord.
pub fn chord_interval(poly: &SimplePolygon, chord: &Chord<'_>, r: &Point) -> Result<Option<ChordInterval>, VisError> {
    if !poly.is_reflex_vertex(r) {
        return Err(VisError::NotAReflexVertex(r.clone()));
    }
    let seg = chord.segment();
    let Some((lo_pt, hi_pt)) = visible_portion(poly, r, false, seg)? else {
        return Ok(None);
    };
    let lo = seg.param_of(&lo_pt);
    let hi = seg.param_of(&hi_pt);
    let lo_restrictor = if lo.is_zero() { seg.a.clone() } else { restrictor_at(poly, seg, r, &lo_pt)? };
    let hi_restrictor = if hi.is_one() { seg.b.clone() } else { restrictor_at(poly, seg, r, &hi_pt)? };
    Ok(Some(ChordInterval { chord: seg.clone(), owner: r.clone(), lo, hi, lo_restrictor, hi_restrictor }))
}

/// The reflex vertex on the sight line from `r` to the interval end `end`
/// that cuts the interval off; ties go to the one closer to the chord, then
/// to the lexicographically smaller point.
fn restrictor_at(poly: &SimplePolygon, chord: &Segment, r: &Point, end: &Point) -> Result<Point, VisError> {
    poly.vertices()
        .iter()
        .enumerate()
        .filter(|&(i, w)| poly.is_reflex(i) && w != r && on_segment(w, r, end))
        .map(|(_, w)| (chord.dist2_to(w), w))
        .min()
        .map(|(_, w)| w.clone())
        .ok_or_else(|| VisError::RestrictorNotFound { owner: r.clone(), end: end.clone() })
}

/// The two restricting points of a non-empty interval, low end first.
pub fn restrictors_of(interval: &ChordInterval) -> (Point, Point) {
    (interval.lo_restrictor.clone(), interval.hi_restrictor.clone())
}
