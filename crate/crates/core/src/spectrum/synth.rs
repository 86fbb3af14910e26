use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};

use super::{LengthSpectrum, PrimeGeodesic, SpectrumError};

pub const DEFAULT_LENGTH_FLOOR: f64 = 0.5;

/// Deterministic synthetic spectrum: exponential length gaps with the given
/// mean above [`DEFAULT_LENGTH_FLOOR`], uniform angles in `[0, 2 pi)`.
/// The completeness cutoff is the largest length.
pub fn synthesize(n: usize, count: usize, seed: u64, mean_gap: f64) -> Result<LengthSpectrum, SpectrumError> {
    if !(mean_gap.is_finite() && mean_gap > 0.0) {
        return Err(SpectrumError::Invalid(format!("mean gap must be positive, got {mean_gap}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gaps = Exp::new(1.0 / mean_gap).map_err(|e| SpectrumError::Invalid(e.to_string()))?;
    let mut length = DEFAULT_LENGTH_FLOOR;
    let mut entries = Vec::with_capacity(count);
    for _ in 0..count {
        length += gaps.sample(&mut rng);
        let angles = (0..n).map(|_| (rng.random::<f64>() * TAU) % TAU).collect();
        entries.push(PrimeGeodesic { length, angles, mult: 1 });
    }
    let cutoff = entries.last().map_or(DEFAULT_LENGTH_FLOOR, |e| e.length);
    LengthSpectrum::new(n, entries, cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_sorted() {
        let a = synthesize(2, 50, 7, 0.1).unwrap();
        let b = synthesize(2, 50, 7, 0.1).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, synthesize(2, 50, 8, 0.1).unwrap());
        assert!(a.entries.windows(2).all(|w| w[0].length < w[1].length));
        assert!(a.entries[0].length > DEFAULT_LENGTH_FLOOR);
        assert!(a.entries.iter().flat_map(|e| &e.angles).all(|&t| (0.0..TAU).contains(&t)));
        assert_eq!(synthesize(1, 0, 1, 0.1).unwrap().entries.len(), 0);
    }
}
