//! Brute-force reference solvers. These scan coefficient boxes with direct
//! integer dot products and share none of the branch-and-bound machinery
//! they are used to check. The scans run in checked 128-bit arithmetic;
//! desk-scale inputs never come close to the limits, and anything that
//! would is rejected rather than silently truncated.

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::basis::{solve_square, Basis};
use crate::enumerate::{
    ceil_sqrt_rational, greedy_minima, preference_cmp, sign_normalize, MinimaCertificate,
};
use crate::error::{LatticeError, Result};

/// Cap on the number of coefficient vectors a single scan may visit.
pub const MAX_BOX_CELLS: u128 = 200_000_000;

fn overflow() -> LatticeError {
    LatticeError::BoxTooLarge("scan would overflow 128-bit arithmetic".into())
}

fn rows_i128(basis: &Basis) -> Result<Vec<Vec<i128>>> {
    basis
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    x.to_i128().ok_or_else(|| {
                        LatticeError::BoxTooLarge("basis entries exceed the scan range".into())
                    })
                })
                .collect()
        })
        .collect()
}

fn check_box(n: usize, box_bound: u64) -> Result<()> {
    if box_bound == 0 {
        return Err(LatticeError::BoxTooLarge("box bound must be at least 1".into()));
    }
    let side = 2u128
        .checked_mul(box_bound as u128)
        .and_then(|s| s.checked_add(1))
        .ok_or_else(overflow)?;
    let mut cells = 1u128;
    for _ in 0..n {
        cells = cells.checked_mul(side).ok_or_else(|| {
            LatticeError::BoxTooLarge(format!("(2*{box_bound}+1)^{n} cells overflow"))
        })?;
        if cells > MAX_BOX_CELLS {
            return Err(LatticeError::BoxTooLarge(format!(
                "(2*{box_bound}+1)^{n} exceeds the {MAX_BOX_CELLS}-cell scan limit"
            )));
        }
    }
    Ok(())
}

fn combine_i128(rows: &[Vec<i128>], x: &[i128]) -> Result<Vec<i128>> {
    let m = rows[0].len();
    let mut v = vec![0i128; m];
    for (c, row) in x.iter().zip(rows) {
        if *c == 0 {
            continue;
        }
        for (acc, e) in v.iter_mut().zip(row) {
            let t = c.checked_mul(*e).ok_or_else(overflow)?;
            *acc = acc.checked_add(t).ok_or_else(overflow)?;
        }
    }
    Ok(v)
}

fn norm_sq_i128(v: &[i128]) -> Result<i128> {
    let mut s = 0i128;
    for x in v {
        let t = x.checked_mul(*x).ok_or_else(overflow)?;
        s = s.checked_add(t).ok_or_else(overflow)?;
    }
    Ok(s)
}

/// Walks the odometer over [-b, b]^n, calling `visit` on every nonzero
/// coefficient vector.
fn scan_box(
    n: usize,
    box_bound: u64,
    mut visit: impl FnMut(&[i128]) -> Result<()>,
) -> Result<()> {
    let b = box_bound as i128;
    let mut x = vec![-b; n];
    loop {
        if x.iter().any(|&c| c != 0) {
            visit(&x)?;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(());
            }
            x[pos] += 1;
            if x[pos] <= b {
                break;
            }
            x[pos] = -b;
            pos += 1;
        }
    }
}

fn to_big(x: &[i128]) -> Vec<BigInt> {
    x.iter().map(|&c| BigInt::from(c)).collect()
}

/// Exhaustive successive-minima computation over the coefficient box
/// |x_i| <= box_bound, with the same greedy independence rule and
/// tie-break as the enumeration-based construction. Correct whenever the
/// box provably covers all minima (see `certified_box_bound`).
pub fn brute_force_minima(basis: &Basis, box_bound: u64) -> Result<MinimaCertificate> {
    let n = basis.rank();
    check_box(n, box_bound)?;
    let rows = rows_i128(basis)?;
    // Any candidate beyond the largest row norm cannot participate: the
    // rows themselves are n independent vectors inside that radius.
    let cutoff = (0..n)
        .map(|i| basis.row_norm_sq(i).to_i128().ok_or_else(overflow))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .expect("rank >= 1");
    let mut cands: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    scan_box(n, box_bound, |x| {
        // Antipodal pairs normalize identically; keep one representative.
        if let Some(first) = x.iter().find(|&&c| c != 0) {
            if *first < 0 {
                return Ok(());
            }
        }
        let v = combine_i128(&rows, x)?;
        let norm_sq = norm_sq_i128(&v)?;
        if norm_sq <= cutoff {
            let mut coeffs = to_big(x);
            sign_normalize(&mut coeffs);
            cands.push((BigInt::from(norm_sq), coeffs));
        }
        Ok(())
    })?;
    greedy_minima(basis, cands)
}

/// Shortest-vector scan over the coefficient box; same output contract as
/// the enumeration-based solver.
pub fn svp_box(basis: &Basis, box_bound: u64) -> Result<(Vec<BigInt>, BigInt)> {
    let n = basis.rank();
    check_box(n, box_bound)?;
    let rows = rows_i128(basis)?;
    let mut best: Option<(i128, Vec<BigInt>)> = None;
    scan_box(n, box_bound, |x| {
        if let Some(first) = x.iter().find(|&&c| c != 0) {
            if *first < 0 {
                return Ok(());
            }
        }
        let v = combine_i128(&rows, x)?;
        let norm_sq = norm_sq_i128(&v)?;
        let mut coeffs = to_big(x);
        sign_normalize(&mut coeffs);
        best = match best.take() {
            None => Some((norm_sq, coeffs)),
            Some((bn, bc)) => {
                if norm_sq < bn
                    || (norm_sq == bn && preference_cmp(&coeffs, &bc).is_lt())
                {
                    Some((norm_sq, coeffs))
                } else {
                    Some((bn, bc))
                }
            }
        };
        Ok(())
    })?;
    let (norm_sq, coeffs) = best.expect("box contains a nonzero vector");
    Ok((coeffs, BigInt::from(norm_sq)))
}

/// Closest-vector scan over the offset box center + [-b, b]^n. Distances
/// are exact integers for integer targets.
pub fn cvp_box_centered(
    basis: &Basis,
    target: &[BigInt],
    center: &[BigInt],
    offset_bound: u64,
) -> Result<(Vec<BigInt>, BigInt)> {
    let n = basis.rank();
    check_box(n, offset_bound)?;
    let rows = rows_i128(basis)?;
    let t: Vec<i128> = target
        .iter()
        .map(|x| x.to_i128().ok_or_else(overflow))
        .collect::<Result<Vec<_>>>()?;
    if t.len() != basis.ambient_dim() {
        return Err(LatticeError::DimensionMismatch("target length".into()));
    }
    let c: Vec<i128> = center
        .iter()
        .map(|x| x.to_i128().ok_or_else(overflow))
        .collect::<Result<Vec<_>>>()?;
    let mut best: Option<(i128, Vec<BigInt>)> = None;
    let mut consider = |delta: &[i128]| -> Result<()> {
        let x: Vec<i128> = c
            .iter()
            .zip(delta)
            .map(|(a, d)| a.checked_add(*d).ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        let v = combine_i128(&rows, &x)?;
        let diff: Vec<i128> = t
            .iter()
            .zip(&v)
            .map(|(a, b)| a.checked_sub(*b).ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        let dist_sq = norm_sq_i128(&diff)?;
        let coeffs = to_big(&x);
        best = match best.take() {
            None => Some((dist_sq, coeffs)),
            Some((bd, bc)) => {
                if dist_sq < bd || (dist_sq == bd && preference_cmp(&coeffs, &bc).is_lt()) {
                    Some((dist_sq, coeffs))
                } else {
                    Some((bd, bc))
                }
            }
        };
        Ok(())
    };
    consider(&vec![0i128; n])?;
    scan_box(n, offset_bound, consider)?;
    let (dist_sq, coeffs) = best.expect("box is nonempty");
    Ok((coeffs, BigInt::from(dist_sq)))
}

/// Closest-vector scan over the absolute box |x_i| <= box_bound.
pub fn cvp_box(basis: &Basis, target: &[BigInt], box_bound: u64) -> Result<(Vec<BigInt>, BigInt)> {
    cvp_box_centered(basis, target, &vec![BigInt::zero(); basis.rank()], box_bound)
}

/// Certified center and offset bound for the closest-vector scan: rounding
/// the rational coordinates of the target gives a lattice point within
/// distance D of it, and any optimum lies within 2D, so its coefficients
/// differ from the rounded ones by at most 2D sqrt((G^-1)_jj).
pub fn certified_cvp_box(basis: &Basis, target: &[BigInt]) -> Result<(Vec<BigInt>, u64)> {
    let n = basis.rank();
    let gram: Vec<Vec<BigRational>> = basis
        .gram()
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from).collect())
        .collect();
    // Rational coordinates of the projection of the target: x G = t B^T.
    let rhs: Vec<BigRational> = (0..n)
        .map(|j| BigRational::from(crate::basis::dot(target, basis.row(j))))
        .collect();
    let coords = solve_square(&gram, &rhs);
    let center: Vec<BigInt> = coords.iter().map(|x| x.round().to_integer()).collect();
    let rounded = basis.combine(&center)?;
    let diff: Vec<BigInt> = target.iter().zip(&rounded).map(|(a, b)| a - b).collect();
    let d_sq = BigRational::from(crate::basis::dot(&diff, &diff));
    let four_d_sq = BigRational::from(BigInt::from(4)) * d_sq;
    let mut bound = BigInt::one();
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        let col = solve_square(&gram, &e);
        let b_j = ceil_sqrt_rational(&(&four_d_sq * &col[j]));
        bound = bound.max(b_j);
    }
    let bound = bound
        .to_u64()
        .ok_or_else(|| LatticeError::BoxTooLarge("certified cvp bound exceeds u64".into()))?;
    Ok((center, bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn identity_minima_with_unit_box() {
        let b = Basis::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let cert = brute_force_minima(&b, 1).unwrap();
        assert_eq!(cert.lambda_sq, vec![bi(1), bi(1)]);
        cert.verify(&b).unwrap();
    }

    #[test]
    fn skewed_lattice_frozen_fixture() {
        // Exhaustive scan is its own oracle; (2,1),(1,2) spans the sublattice
        // {(u,v) : 3 | u+v}, whose minima are (1,-1) of norm^2 2 and (2,1)
        // of norm^2 5 (the norm-2 vectors are all parallel).
        let b = Basis::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        let cert = brute_force_minima(&b, 3).unwrap();
        assert_eq!(cert.lambda_sq, vec![bi(2), bi(5)]);
        assert_eq!(cert.vectors[0], vec![bi(1), bi(-1)]);
        assert_eq!(cert.vectors[1], vec![bi(2), bi(1)]);
    }

    #[test]
    fn zero_box_rejected() {
        let b = Basis::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            brute_force_minima(&b, 0),
            Err(LatticeError::BoxTooLarge(_))
        ));
    }

    #[test]
    fn oversized_box_rejected() {
        let b = Basis::from_i64(&[
            &[1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert!(matches!(
            brute_force_minima(&b, 100),
            Err(LatticeError::BoxTooLarge(_))
        ));
    }

    #[test]
    fn svp_box_matches_hand_values() {
        let b = Basis::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        let (coeffs, norm_sq) = svp_box(&b, 3).unwrap();
        assert_eq!(norm_sq, bi(2));
        assert_eq!(coeffs, vec![bi(1), bi(-1)]);
    }

    #[test]
    fn cvp_box_tie_break() {
        let b = Basis::from_i64(&[&[2]]).unwrap();
        let (coeffs, dist_sq) = cvp_box(&b, &[bi(1)], 2).unwrap();
        assert_eq!(dist_sq, bi(1));
        assert_eq!(coeffs, vec![bi(0)]);
    }

    #[test]
    fn certified_cvp_box_covers_midpoint_tie() {
        let b = Basis::from_i64(&[&[2]]).unwrap();
        let (center, bound) = certified_cvp_box(&b, &[bi(1)]).unwrap();
        let (coeffs, dist_sq) = cvp_box_centered(&b, &[bi(1)], &center, bound).unwrap();
        assert_eq!(dist_sq, bi(1));
        assert_eq!(coeffs, vec![bi(0)]);
    }

    #[test]
    fn centered_scan_finds_far_targets() {
        let b = Basis::from_i64(&[&[3, 1], &[1, 4]]).unwrap();
        let target = [bi(200), bi(-151)];
        let (center, bound) = certified_cvp_box(&b, &target).unwrap();
        assert!(bound >= 1);
        let (coeffs, dist_sq) = cvp_box_centered(&b, &target, &center, bound).unwrap();
        // Independent sanity: the returned point must beat plain rounding.
        let rounded = b.combine(&center).unwrap();
        let diff: Vec<BigInt> =
            target.iter().zip(&rounded).map(|(a, c)| a - c).collect();
        let rounded_dist = crate::basis::dot(&diff, &diff);
        assert!(dist_sq <= rounded_dist);
        let v = b.combine(&coeffs).unwrap();
        let diff2: Vec<BigInt> = target.iter().zip(&v).map(|(a, c)| a - c).collect();
        assert_eq!(crate::basis::dot(&diff2, &diff2), dist_sq);
    }
}
