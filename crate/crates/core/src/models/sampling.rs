use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator for attribute draws (stream 0 of `seed`).
pub(crate) fn attribute_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for unordered pair number `pair` (streams 1, 2, ...).
pub(crate) fn pair_rng(seed: u64, pair: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(pair + 1);
    rng
}
