//! Exact rational Gram-Schmidt data and the norm decomposition it supports.

use num::{BigInt, BigRational, One, Zero};

use crate::basis::Basis;
use crate::error::{LatticeError, Result};

/// Gram-Schmidt data of a basis: projection coefficients mu[i][j] for j < i
/// (row i has length i) and the squared norms of the orthogonalized rows.
/// `ortho_rows` keeps the orthogonalized vectors themselves; several
/// consumers (enumeration centers, projections) need them.
#[derive(Debug, Clone, PartialEq)]
pub struct GsoData {
    pub mu: Vec<Vec<BigRational>>,
    pub ortho_norms_sq: Vec<BigRational>,
    pub ortho_rows: Vec<Vec<BigRational>>,
}

/// Exact Gram-Schmidt orthogonalization. The basis invariant guarantees
/// every orthogonalized norm is positive.
pub fn gram_schmidt(basis: &Basis) -> GsoData {
    gram_schmidt_rows(basis.rows())
}

/// Variant for in-progress row sets during reductions; rows must be
/// linearly independent.
pub(crate) fn gram_schmidt_rows(rows: &[Vec<BigInt>]) -> GsoData {
    let n = rows.len();
    let mut mu: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut norms: Vec<BigRational> = Vec::with_capacity(n);
    let mut ortho: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut star: Vec<BigRational> =
            rows[i].iter().map(|x| BigRational::from(x.clone())).collect();
        let mut mu_row = Vec::with_capacity(i);
        for j in 0..i {
            let num = rational_int_dot(&rows[i], &ortho[j]);
            let mu_ij = &num / &norms[j];
            for (s, o) in star.iter_mut().zip(&ortho[j]) {
                let t = &mu_ij * o;
                *s -= t;
            }
            mu_row.push(mu_ij);
        }
        let norm_sq: BigRational = star.iter().map(|x| x * x).sum();
        assert!(norm_sq > BigRational::zero(), "orthogonalized norm must be positive");
        mu.push(mu_row);
        norms.push(norm_sq);
        ortho.push(star);
    }
    GsoData { mu, ortho_norms_sq: norms, ortho_rows: ortho }
}

impl GsoData {
    pub fn rank(&self) -> usize {
        self.ortho_norms_sq.len()
    }

    /// Product of the squared orthogonalized norms, i.e. det(Gram(B)).
    pub fn norm_product(&self) -> BigRational {
        self.ortho_norms_sq.iter().product()
    }
}

/// Squared norm of sum x_i b_i from the GSO decomposition:
/// sum over i of (x_i + sum_{j>i} x_j mu[j][i])^2 * ||b_i(i)||^2.
pub fn vector_norm_sq(gso: &GsoData, coeffs: &[BigInt]) -> Result<BigRational> {
    let n = gso.rank();
    if coeffs.len() != n {
        return Err(LatticeError::DimensionMismatch(format!(
            "expected {} coefficients, got {}",
            n,
            coeffs.len()
        )));
    }
    let mut total = BigRational::zero();
    for i in 0..n {
        let mut c = BigRational::from(coeffs[i].clone());
        for j in i + 1..n {
            if coeffs[j].is_zero() {
                continue;
            }
            c += BigRational::from(coeffs[j].clone()) * &gso.mu[j][i];
        }
        total += &c * &c * &gso.ortho_norms_sq[i];
    }
    Ok(total)
}

/// Orthogonality defect: product of ||b_i||^2 / ||b_i(i)||^2. Always >= 1,
/// with equality exactly for pairwise orthogonal rows.
pub fn orthogonality_defect(basis: &Basis) -> BigRational {
    let gso = gram_schmidt(basis);
    let mut defect = BigRational::one();
    for i in 0..basis.rank() {
        defect *= BigRational::from(basis.row_norm_sq(i)) / &gso.ortho_norms_sq[i];
    }
    defect
}

fn rational_int_dot(a: &[BigInt], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| BigRational::from(x.clone()) * y).sum()
}
