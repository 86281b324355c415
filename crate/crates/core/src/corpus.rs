//! The reference corpus: square, L-shape, combs with one to four layers and
//! fifty seeded random polygons with at most twenty vertices.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comb::{generate_comb, CombError};
use crate::geom::SimplePolygon;
use crate::sample::{l_shape, random_polygon, square};

pub const RANDOM_POLYGONS: usize = 50;
pub const COMB_LAYERS: usize = 4;
pub const DEFAULT_SEED: u64 = 20;

/// Vertex count of the `i`-th random corpus polygon, between 5 and 20.
pub fn random_size(i: usize) -> usize {
    5 + i % 16
}

pub fn random_member(seed: u64, i: usize) -> SimplePolygon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
    random_polygon(random_size(i), 64, &mut rng)
}

/// Named corpus polygons in a fixed order.
pub fn corpus(seed: u64) -> Result<Vec<(String, SimplePolygon)>, CombError> {
    let mut out = vec![("square".to_string(), square(4)), ("l_shape".to_string(), l_shape())];
    for k in 1..=COMB_LAYERS {
        out.push((format!("comb_k{k}"), generate_comb(k)?.polygon));
    }
    for i in 0..RANDOM_POLYGONS {
        out.push((format!("random_{i:02}"), random_member(seed, i)));
    }
    Ok(out)
}
