//! Seeded, platform-independent random lattice generation.

use num::BigInt;

use crate::basis::Basis;
use crate::error::{LatticeError, Result};

/// SplitMix64: the 64-bit mixing generator of Steele, Lea and Flood.
/// Pure wrapping integer arithmetic, so streams are identical on every
/// platform; fixtures stay portable.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from [lo, hi] by unbiased rejection sampling.
    pub fn uniform_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let range = (hi - lo) as u64 + 1;
        let threshold = range.wrapping_neg() % range;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return lo + (r % range) as i64;
            }
        }
    }
}

/// Stream seed for trial `trial` of a batch seeded with `seed`; one
/// SplitMix64 round of the combined value keeps streams uncorrelated.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    SplitMix64::new(seed ^ trial.wrapping_mul(0xD1B54A32D192ED03)).next_u64()
}

/// Kinds of generated lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    /// Square matrix with entries uniform in [-B, B], resampled until
    /// nonsingular.
    Uniform,
    /// Identity block extended by one random column with entries in [1, B];
    /// full rank by construction.
    Knapsack,
}

impl LatticeKind {
    pub fn name(&self) -> &'static str {
        match self {
            LatticeKind::Uniform => "uniform",
            LatticeKind::Knapsack => "knapsack",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(LatticeKind::Uniform),
            "knapsack" => Ok(LatticeKind::Knapsack),
            other => Err(LatticeError::Parse(format!("unknown lattice kind '{other}'"))),
        }
    }
}

/// Description of one random lattice instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSpec {
    pub kind: LatticeKind,
    pub dim: usize,
    pub entry_bound: i64,
    pub seed: u64,
}

impl LatticeSpec {
    pub fn new(kind: LatticeKind, dim: usize, entry_bound: i64, seed: u64) -> Self {
        assert!(dim >= 1);
        assert!(entry_bound >= 1);
        LatticeSpec { kind, dim, entry_bound, seed }
    }
}

const MAX_ATTEMPTS: u32 = 1000;

/// Deterministic generation: identical instance descriptions give identical
/// bases.
pub fn generate_lattice(spec: &LatticeSpec) -> Result<Basis> {
    let mut rng = SplitMix64::new(spec.seed);
    let n = spec.dim;
    let b = spec.entry_bound;
    match spec.kind {
        LatticeKind::Uniform => {
            for _ in 0..MAX_ATTEMPTS {
                let rows: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| (0..n).map(|_| BigInt::from(rng.uniform_in(-b, b))).collect())
                    .collect();
                if let Ok(basis) = Basis::new(rows) {
                    return Ok(basis);
                }
            }
            Err(LatticeError::GenerationFailed(MAX_ATTEMPTS))
        }
        LatticeKind::Knapsack => {
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    let mut row = vec![BigInt::from(0); n + 1];
                    row[i] = BigInt::from(1);
                    row[n] = BigInt::from(rng.uniform_in(1, b));
                    row
                })
                .collect();
            Ok(Basis::new(rows).expect("identity block guarantees full rank"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn one_dim_is_nonzero() {
        for seed in 0..20 {
            let spec = LatticeSpec::new(LatticeKind::Uniform, 1, 5, seed);
            let basis = generate_lattice(&spec).unwrap();
            assert!(!basis.row(0)[0].is_zero());
        }
    }

    #[test]
    fn identical_specs_give_identical_bases() {
        let spec = LatticeSpec::new(LatticeKind::Uniform, 4, 10, 42);
        assert_eq!(generate_lattice(&spec).unwrap(), generate_lattice(&spec).unwrap());
    }

    #[test]
    fn uniform_is_full_rank() {
        // Basis::new re-runs exact elimination; success certifies rank 5.
        let spec = LatticeSpec::new(LatticeKind::Uniform, 5, 10, 7);
        let basis = generate_lattice(&spec).unwrap();
        assert_eq!(basis.rank(), 5);
        assert!(!basis.gram_det().is_zero());
    }

    #[test]
    fn knapsack_shape() {
        let spec = LatticeSpec::new(LatticeKind::Knapsack, 3, 9, 11);
        let basis = generate_lattice(&spec).unwrap();
        assert_eq!(basis.rank(), 3);
        assert_eq!(basis.ambient_dim(), 4);
        for i in 0..3 {
            assert_eq!(basis.row(i)[i], BigInt::from(1));
            let a = &basis.row(i)[3];
            assert!(*a >= BigInt::from(1) && *a <= BigInt::from(9));
        }
    }

    #[test]
    fn splitmix_reference_stream() {
        // First outputs for seed 0; fixed so any change to the generator is
        // caught (fixtures depend on the exact stream).
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220A8397B1DCDAF);
        assert_eq!(rng.next_u64(), 0x6E789E6AA1B965F4);
        assert_eq!(rng.next_u64(), 0x06C45D188009454F);
    }

    #[test]
    fn uniform_in_respects_range() {
        let mut rng = SplitMix64::new(123);
        for _ in 0..1000 {
            let v = rng.uniform_in(-7, 7);
            assert!((-7..=7).contains(&v));
        }
    }
}
