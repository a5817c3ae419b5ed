//! Seeded random streams and the few distributions the crate draws from.
//!
//! Sampling is implemented here on top of [`RngCore`] rather than borrowed
//! from `rand`, so the mapping from seed to output is pinned by this crate.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 step: adds the golden-ratio increment and applies the
/// variant-13 finalizer.
#[inline]
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-item seed: `splitmix64(master_seed ^ image_index)`.
///
/// Stateless, so the i-th item's stream does not depend on processing order
/// or thread count. For a fixed master seed the map is a bijection of the
/// index.
#[inline]
pub fn derive_image_seed(master_seed: u64, image_index: u64) -> u64 {
    splitmix64(master_seed ^ image_index)
}

/// The random stream used throughout: ChaCha8 keyed by four consecutive
/// SplitMix64 outputs of `seed`.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    let mut state = seed;
    for chunk in key.chunks_exact_mut(8) {
        let word = splitmix64(state);
        state = state.wrapping_add(GOLDEN_GAMMA);
        chunk.copy_from_slice(&word.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Uniform on `[0, 1)` with 53 random bits.
#[inline]
pub fn uniform_f64<R: RngCore + ?Sized>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform on `[0, 1)` with 24 random bits.
#[inline]
pub fn uniform_f32<R: RngCore + ?Sized>(rng: &mut R) -> f32 {
    (rng.next_u32() >> 8) as f32 * (1.0 / (1u32 << 24) as f32)
}

/// Uniform on `[low, high)`.
#[inline]
pub fn uniform_range<R: RngCore + ?Sized>(rng: &mut R, low: f64, high: f64) -> f64 {
    low + (high - low) * uniform_f64(rng)
}

/// Unbiased integer in `0..bound` (Lemire's multiply-and-reject).
///
/// # Panics
///
/// If `bound` is zero.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0, "uniform_below: empty range");
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let m = (rng.next_u64() as u128) * (bound as u128);
        if (m as u64) >= threshold {
            return (m >> 64) as u64;
        }
    }
}

/// Uniform choice of an index into a slice of length `len`.
#[inline]
pub fn choose_index<R: RngCore + ?Sized>(rng: &mut R, len: usize) -> usize {
    uniform_below(rng, len as u64) as usize
}

/// Bernoulli draw. `p <= 0` and `p >= 1` consume no randomness.
pub fn bernoulli<R: RngCore + ?Sized>(rng: &mut R, p: f64) -> bool {
    if p <= 0.0 {
        false
    } else if p >= 1.0 {
        true
    } else {
        uniform_f64(rng) < p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs of the reference SplitMix64 generator seeded with 0.
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(splitmix64(GOLDEN_GAMMA), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn derived_seeds_are_stable() {
        assert_eq!(derive_image_seed(42, 7), derive_image_seed(42, 7));
        assert_ne!(derive_image_seed(42, 0), derive_image_seed(42, 1));
    }

    #[test]
    fn seeded_streams_repeat() {
        let a: [u64; 4] = core::array::from_fn({
            let mut r = seeded(9);
            move |_| r.next_u64()
        });
        let mut r = seeded(9);
        for v in a {
            assert_eq!(v, r.next_u64());
        }
        assert_ne!(seeded(9).next_u64(), seeded(10).next_u64());
    }

    #[test]
    fn uniform_below_covers_range() {
        let mut rng = seeded(1);
        let mut seen = [0u32; 7];
        for _ in 0..7000 {
            seen[uniform_below(&mut rng, 7) as usize] += 1;
        }
        assert!(seen.iter().all(|&c| c > 850 && c < 1150), "{seen:?}");
    }

    #[test]
    fn unit_draws_stay_in_range() {
        let mut rng = seeded(3);
        for _ in 0..10_000 {
            let a = uniform_f64(&mut rng);
            let b = uniform_f32(&mut rng);
            assert!((0.0..1.0).contains(&a));
            assert!((0.0..1.0).contains(&b));
        }
    }

    #[test]
    fn bernoulli_extremes_consume_nothing() {
        let mut a = seeded(5);
        let mut b = seeded(5);
        assert!(!bernoulli(&mut a, 0.0));
        assert!(bernoulli(&mut a, 1.0));
        assert_eq!(a.next_u64(), b.next_u64());
    }
}
