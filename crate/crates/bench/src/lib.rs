//! Fixtures shared by the benchmark targets.

use numplane::{Precision, Sample};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `n` nonzero operands of `S`, reproducible from `seed`.
pub fn operands<S: Sample>(n: usize, seed: u64, prec: Precision) -> Vec<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| S::sample_nonzero(&mut rng, prec)).collect()
}
