//! Point and chord visibility widths of simple polygons, computed with exact
//! rational arithmetic.

// Error variants carry the offending points.
#![allow(clippy::result_large_err)]

pub mod comb;
pub mod corpus;
pub mod geom;
pub mod graph;
pub mod io;
pub mod sample;
pub mod visibility;
pub mod widths;
