use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator for stream `stream` of `seed`: ChaCha8 keyed by
/// `seed_from_u64(seed)` with its stream id set to `stream`. Independent
/// restarts use distinct stream ids.
pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
