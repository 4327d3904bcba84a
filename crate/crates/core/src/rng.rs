//! Deterministic per-realization random streams.
//!
//! Every realization owns a ChaCha8 stream keyed by the master seed and
//! selected by the realization index, so results do not depend on which
//! worker evaluated which realization.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Stream = ChaCha8Rng;

/// Stream `index` of the family keyed by `seed`.
pub fn stream(seed: u64, index: u64) -> Stream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
