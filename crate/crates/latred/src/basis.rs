//! Integer lattice bases, unimodular transforms and exact linear algebra.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{LatticeError, Result};

/// Row basis of an integer lattice: `rank` linearly independent rows of
/// length `ambient_dim`. Independence is verified at construction by an
/// exact Gram determinant; rank-deficient input is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    rows: Vec<Vec<BigInt>>,
    ambient_dim: usize,
}

impl Basis {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(LatticeError::DimensionMismatch("basis needs at least one row".into()));
        }
        let m = rows[0].len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(LatticeError::DimensionMismatch("rows have unequal lengths".into()));
        }
        if m < n {
            return Err(LatticeError::DimensionMismatch(format!(
                "rank {n} exceeds ambient dimension {m}"
            )));
        }
        let basis = Basis { rows, ambient_dim: m };
        if basis.gram_det().is_zero() {
            return Err(LatticeError::RankDeficient);
        }
        Ok(basis)
    }

    /// Convenience constructor for small fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Basis::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// For transforms known to preserve the invariants (unimodular row
    /// operations). Debug builds still re-verify.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<BigInt>>) -> Self {
        let ambient_dim = rows[0].len();
        let basis = Basis { rows, ambient_dim };
        debug_assert!(!basis.gram_det().is_zero());
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    /// Squared Euclidean norm of row `i`.
    pub fn row_norm_sq(&self, i: usize) -> BigInt {
        dot(&self.rows[i], &self.rows[i])
    }

    /// Gram matrix G with G[i][j] = <b_i, b_j>.
    pub fn gram(&self) -> Vec<Vec<BigInt>> {
        let n = self.rank();
        let mut g = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                let d = dot(&self.rows[i], &self.rows[j]);
                g[i][j] = d.clone();
                g[j][i] = d;
            }
        }
        g
    }

    /// det(Gram(B)); positive for any valid basis, zero iff rows dependent.
    pub fn gram_det(&self) -> BigInt {
        int_det(self.gram())
    }

    /// The lattice point with the given coefficient vector.
    pub fn combine(&self, coeffs: &[BigInt]) -> Result<Vec<BigInt>> {
        if coeffs.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch(format!(
                "expected {} coefficients, got {}",
                self.rank(),
                coeffs.len()
            )));
        }
        let mut v = vec![BigInt::zero(); self.ambient_dim];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (acc, x) in v.iter_mut().zip(row) {
                *acc += c * x;
            }
        }
        Ok(v)
    }

    /// Basis made of the leading `k` rows (a sublattice basis).
    pub fn leading(&self, k: usize) -> Basis {
        assert!(k >= 1 && k <= self.rank());
        Basis { rows: self.rows[..k].to_vec(), ambient_dim: self.ambient_dim }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Integer matrix with determinant +1 or -1, recording a basis change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularTransform {
    entries: Vec<Vec<BigInt>>,
}

impl UnimodularTransform {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(LatticeError::DimensionMismatch("transform must be square".into()));
        }
        let det = int_det(entries.clone());
        if !det.abs().is_one() {
            return Err(LatticeError::NotUnimodular(det));
        }
        Ok(UnimodularTransform { entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        UnimodularTransform::new(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        UnimodularTransform { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn det(&self) -> BigInt {
        int_det(self.entries.clone())
    }

    /// rows[k] += c * rows[j]; keeps the determinant.
    pub(crate) fn add_multiple_of_row(&mut self, k: usize, j: usize, c: &BigInt) {
        assert_ne!(k, j);
        let src = self.entries[j].clone();
        for (dst, s) in self.entries[k].iter_mut().zip(&src) {
            *dst += c * s;
        }
    }

    pub(crate) fn swap_rows(&mut self, k: usize, j: usize) {
        self.entries.swap(k, j);
    }

    /// Replace the trailing rows `start..` by `block * rows[start..]`.
    /// `block` must be unimodular of matching size.
    pub(crate) fn apply_block_left(&mut self, start: usize, block: &[Vec<BigInt>]) {
        let k = block.len();
        assert_eq!(start + k, self.entries.len());
        let old: Vec<Vec<BigInt>> = self.entries[start..].to_vec();
        for (bi, brow) in block.iter().enumerate() {
            let mut new_row = vec![BigInt::zero(); self.dim()];
            for (c, orow) in brow.iter().zip(&old) {
                if c.is_zero() {
                    continue;
                }
                for (acc, x) in new_row.iter_mut().zip(orow) {
                    *acc += c * x;
                }
            }
            self.entries[start + bi] = new_row;
        }
    }

    /// Matrix product `self * other`: the transform applying `other` first.
    pub fn compose(&self, other: &UnimodularTransform) -> UnimodularTransform {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = &self.entries[i][k] * &other.entries[k][j];
                    entries[i][j] += term;
                }
            }
        }
        UnimodularTransform { entries }
    }
}

/// New basis with rows `u * rows`; the lattice is unchanged.
pub fn apply_unimodular(basis: &Basis, u: &UnimodularTransform) -> Result<Basis> {
    let n = basis.rank();
    if u.dim() != n {
        return Err(LatticeError::DimensionMismatch(format!(
            "transform is {}x{} but basis has rank {}",
            u.dim(),
            u.dim(),
            n
        )));
    }
    let mut rows = vec![vec![BigInt::zero(); basis.ambient_dim()]; n];
    for i in 0..n {
        for k in 0..n {
            if u.entries[i][k].is_zero() {
                continue;
            }
            for (acc, x) in rows[i].iter_mut().zip(basis.row(k)) {
                *acc += &u.entries[i][k] * x;
            }
        }
    }
    Ok(Basis { rows, ambient_dim: basis.ambient_dim() })
}

/// Integer coordinates of `vector` in `basis`: returns x with sum x_i b_i = vector.
pub fn express_in_basis(basis: &Basis, vector: &[BigInt]) -> Result<Vec<BigInt>> {
    if vector.len() != basis.ambient_dim() {
        return Err(LatticeError::DimensionMismatch(format!(
            "vector length {} does not match ambient dimension {}",
            vector.len(),
            basis.ambient_dim()
        )));
    }
    let n = basis.rank();
    let m = basis.ambient_dim();
    // Solve B^T x = v over the rationals; B^T is m x n of full column rank.
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|r| {
            let mut row: Vec<BigRational> =
                (0..n).map(|c| BigRational::from(basis.row(c)[r].clone())).collect();
            row.push(BigRational::from(vector[r].clone()));
            row
        })
        .collect();

    let mut pivot_rows = Vec::with_capacity(n);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !aug[i][c].is_zero()) else {
            unreachable!("basis invariant guarantees full column rank");
        };
        aug.swap(r, p);
        let inv = aug[r][c].clone();
        for j in c..=n {
            aug[r][j] = &aug[r][j] / &inv;
        }
        for i in 0..m {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=n {
                    let t = &f * &aug[r][j];
                    aug[i][j] -= t;
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // Any remaining nonzero right-hand side means the vector leaves the span.
    for row in aug.iter().skip(n) {
        if !row[n].is_zero() {
            return Err(LatticeError::NotInSpan);
        }
    }
    let mut coords = Vec::with_capacity(n);
    for (c, &pr) in pivot_rows.iter().enumerate() {
        debug_assert!(aug[pr][c].is_one());
        let x = &aug[pr][n];
        if !x.is_integer() {
            return Err(LatticeError::NotInLattice);
        }
        coords.push(x.to_integer());
    }
    Ok(coords)
}

/// Exact dot product of integer vectors.
pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn int_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Incremental rational row space for exact independence tests.
#[derive(Debug, Default)]
pub(crate) struct QRowSpace {
    echelon: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl QRowSpace {
    pub(crate) fn new() -> Self {
        QRowSpace::default()
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.echelon.len()
    }

    pub(crate) fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Inserts `v` if it is independent of the rows seen so far.
    pub(crate) fn try_insert(&mut self, v: &[BigInt]) -> bool {
        let red = self.reduce(v);
        let Some(p) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[p].clone();
        let normalized: Vec<BigRational> = red.iter().map(|x| x / &inv).collect();
        self.echelon.push(normalized);
        self.pivots.push(p);
        true
    }

    fn reduce(&self, v: &[BigInt]) -> Vec<BigRational> {
        let mut red: Vec<BigRational> = v.iter().map(|x| BigRational::from(x.clone())).collect();
        for (row, &p) in self.echelon.iter().zip(&self.pivots) {
            if red[p].is_zero() {
                continue;
            }
            let f = red[p].clone();
            for (x, r) in red.iter_mut().zip(row) {
                let t = &f * r;
                *x -= t;
            }
        }
        red
    }
}

/// Solves the square rational system `a y = rhs`; `a` must be nonsingular.
pub(crate) fn solve_square(a: &[Vec<BigRational>], rhs: &[BigRational]) -> Vec<BigRational> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero()).expect("nonsingular system");
        aug.swap(c, p);
        let inv = aug[c][c].clone();
        for j in c..=n {
            aug[c][j] = &aug[c][j] / &inv;
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=n {
                    let t = &f * &aug[c][j];
                    aug[i][j] -= t;
                }
            }
        }
    }
    (0..n).map(|i| aug[i][n].clone()).collect()
}
