//! Closed-form bound machinery: the per-index length bound coefficient,
//! the f(n,k) defect products, HKZ and strong-reduction defect factors,
//! the quartic root characterizing the maximizing k, and the comparison
//! table over ranks.

use num::{BigInt, BigRational, One, ToPrimitive};

use crate::error::{LatticeError, Result};

/// One row of the bound comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    pub f_h: f64,
    pub f_s: f64,
    pub k_star: usize,
    pub beta_n: f64,
    pub gamma_upper: f64,
    pub theorem2: f64,
}

/// max{1, (i - k)/4 + k/16} as an exact rational; `i` is the 1-based index.
pub fn theorem1_bound(i: usize, k: usize) -> Result<BigRational> {
    if i == 0 || k > i - 1 {
        return Err(LatticeError::InvalidProfile { i, k });
    }
    let val = BigRational::new(BigInt::from(4 * (i - k) + k), BigInt::from(16));
    Ok(val.max(BigRational::one()))
}

/// f(n,k) = prod_{i=0}^{k-1} ((n-k+1)/4 + i/16), computed exactly.
/// The empty product f(n,0) is 1.
pub fn f_product_exact(n: usize, k: usize) -> BigRational {
    debug_assert!(k <= n);
    let mut p = BigRational::one();
    for i in 0..k {
        p *= BigRational::new(BigInt::from(4 * (n - k + 1) + i), BigInt::from(16));
    }
    p
}

/// HKZ defect factor prod_{i=1}^{n} (i+3)/4, exactly.
pub fn f_hkz_exact(n: usize) -> BigRational {
    let mut p = BigRational::one();
    for i in 1..=n {
        p *= BigRational::new(BigInt::from(i + 3), BigInt::from(4));
    }
    p
}

pub fn f_hkz(n: usize) -> f64 {
    f_hkz_exact(n).to_f64().expect("finite at desk scale")
}

/// Strong-reduction defect factor: the maximum of f(n,k) over
/// k in {0, ..., max(0, n-4)} (the cap encodes k_i <= i-4), together with
/// the smallest maximizing k. Comparison is exact; only the reported value
/// is converted to double.
pub fn f_strong_exact(n: usize) -> (BigRational, usize) {
    let k_max = n.saturating_sub(4);
    let mut best = BigRational::one();
    let mut k_star = 0;
    for k in 1..=k_max {
        let v = f_product_exact(n, k);
        if v > best {
            best = v;
            k_star = k;
        }
    }
    (best, k_star)
}

pub fn f_strong(n: usize) -> (f64, usize) {
    let (v, k) = f_strong_exact(n);
    (v.to_f64().expect("finite at desk scale"), k)
}

/// Upper bound n/8 + 6/5 on the rank-n Hermite constant, exactly.
pub fn hermite_upper_exact(n: usize) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(8))
        + BigRational::new(BigInt::from(6), BigInt::from(5))
}

pub fn hermite_upper(n: usize) -> f64 {
    n as f64 / 8.0 + 1.2
}

/// Defect bound (n/8 + 6/5)^n * f_S(n) as an exact rational, for
/// outward-safe comparisons against exact defects.
pub fn theorem2_bound_exact(n: usize) -> BigRational {
    let gamma = hermite_upper_exact(n);
    let (fs, _) = f_strong_exact(n);
    gamma.pow(n as i32) * fs
}

pub fn theorem2_bound(n: usize) -> f64 {
    theorem2_bound_exact(n).to_f64().expect("finite at desk scale")
}

/// The defect bound with the HKZ factor instead, for baseline comparisons.
pub fn hkz_defect_bound_exact(n: usize) -> BigRational {
    hermite_upper_exact(n).pow(n as i32) * f_hkz_exact(n)
}

fn quartic(n: usize, sigma: f64) -> f64 {
    let n = n as f64;
    let s4 = 4.0 * sigma;
    let lhs = s4 * (s4 + 1.0) * (s4 + 2.0) * (s4 + 3.0);
    let t = n + 3.0 * sigma;
    let rhs = 16.0 * (t + 1.0) * (t + 2.0) * (t + 3.0);
    lhs - rhs
}

/// Positive real root of
/// 4s(4s+1)(4s+2)(4s+3) - 16(n+3s+1)(n+3s+2)(n+3s+3) in s, by
/// sign-bracketing and bisection to absolute tolerance 1e-9. The value at
/// s = 0 is -16(n+1)(n+2)(n+3) < 0, which anchors the bracket.
pub fn beta_root(n: usize) -> Result<f64> {
    if quartic(n, 0.0) >= 0.0 {
        return Err(LatticeError::NoSignChange(n));
    }
    let mut hi = 1.0f64;
    while quartic(n, hi) <= 0.0 {
        hi *= 2.0;
        if hi > 1e9 {
            return Err(LatticeError::NoSignChange(n));
        }
    }
    let mut lo = 0.0f64;
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if quartic(n, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Rows for the requested ranks.
pub fn bounds_table(ns: &[usize]) -> Result<Vec<BoundRow>> {
    ns.iter()
        .map(|&n| {
            assert!(n >= 1);
            let (f_s, k_star) = f_strong(n);
            Ok(BoundRow {
                n,
                f_h: f_hkz(n),
                f_s,
                k_star,
                beta_n: beta_root(n)?,
                gamma_upper: hermite_upper(n),
                theorem2: theorem2_bound(n),
            })
        })
        .collect()
}

/// Fixed rendering: three decimals, switching to scientific notation with
/// four significant digits at 1e6.
pub fn format_bound(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v.abs() >= 1e6 {
        let exp = v.abs().log10().floor() as i32;
        let mut mantissa = v / 10f64.powi(exp);
        let mut exp = exp;
        // Guard against the mantissa rounding up to 10.000.
        if format!("{mantissa:.3}").starts_with("10") {
            mantissa /= 10.0;
            exp += 1;
        }
        format!("{mantissa:.3}e{exp}")
    } else {
        format!("{v:.3}")
    }
}
