//! Basis transformations: size reduction, LLL preprocessing, the two
//! strong-reduction properties, full strong reduction, an HKZ baseline,
//! and the verifiers for all of them.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::basis::{dot, int_det, Basis, QRowSpace, UnimodularTransform};
use crate::bounds::theorem1_bound;
use crate::enumerate::{
    enumerate_min, preference_cmp, sign_normalize, successive_minima, BlockProblem,
    EnumerationBudget, MinimaCertificate, NodeCounter,
};
use crate::error::{LatticeError, Result};
use crate::gso::{gram_schmidt, gram_schmidt_rows, orthogonality_defect, GsoData};

/// Reduction flavor recorded in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionMethod {
    Strong,
    Hkz,
    Lll,
    Size,
}

impl ReductionMethod {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionMethod::Strong => "strong",
            ReductionMethod::Hkz => "hkz",
            ReductionMethod::Lll => "lll",
            ReductionMethod::Size => "size",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(ReductionMethod::Strong),
            "hkz" => Ok(ReductionMethod::Hkz),
            "lll" => Ok(ReductionMethod::Lll),
            "size" => Ok(ReductionMethod::Size),
            other => Err(LatticeError::Parse(format!("unknown method '{other}'"))),
        }
    }
}

impl fmt::Display for ReductionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-run record of a reduction and the checks on its output.
#[derive(Debug, Clone)]
pub struct ReductionReport {
    pub method: ReductionMethod,
    pub input_basis: Basis,
    pub output_basis: Basis,
    pub transform: UnimodularTransform,
    pub defect_before: BigRational,
    pub defect_after: BigRational,
    pub k_profile: Vec<usize>,
    pub property1_ok: bool,
    pub property2_ok: bool,
    pub theorem1_ok: bool,
    pub minima: MinimaCertificate,
}

/// Verifier outcome for the two strong-reduction properties, together with
/// a witnessing system of minima vectors (triangular-support when
/// property 1 holds, the plain greedy system otherwise).
#[derive(Debug, Clone)]
pub struct StrongCheck {
    pub property1_ok: bool,
    pub property2_ok: bool,
    pub witness: MinimaCertificate,
}

/// Default Lovasz parameter for the LLL preprocessor.
pub fn default_delta() -> BigRational {
    BigRational::new(BigInt::from(3), BigInt::from(4))
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

fn row_op(rows: &mut [Vec<BigInt>], k: usize, j: usize, c: &BigInt) {
    assert_ne!(k, j);
    let src = rows[j].clone();
    for (dst, s) in rows[k].iter_mut().zip(&src) {
        *dst += c * s;
    }
}

fn apply_block_rows(rows: &mut [Vec<BigInt>], start: usize, block: &[Vec<BigInt>]) {
    let old: Vec<Vec<BigInt>> = rows[start..].to_vec();
    for (bi, brow) in block.iter().enumerate() {
        let mut new_row = vec![BigInt::zero(); old[0].len()];
        for (c, orow) in brow.iter().zip(&old) {
            if c.is_zero() {
                continue;
            }
            for (acc, x) in new_row.iter_mut().zip(orow) {
                *acc += c * x;
            }
        }
        rows[start + bi] = new_row;
    }
}

/// Size reduction: afterwards every |mu[i][j]| <= 1/2. Orthogonalized norms
/// are untouched. Rows already inside the bound are left alone, which makes
/// the operation idempotent.
pub fn size_reduce(basis: &Basis) -> (Basis, UnimodularTransform) {
    let n = basis.rank();
    let mut rows = basis.rows().to_vec();
    let mut u = UnimodularTransform::identity(n);
    let gso = gram_schmidt(basis);
    let mut mu = gso.mu;
    let threshold = half();
    for i in 1..n {
        for j in (0..i).rev() {
            if mu[i][j].abs() <= threshold {
                continue;
            }
            let r = mu[i][j].round().to_integer();
            let neg = -r.clone();
            row_op(&mut rows, i, j, &neg);
            u.add_multiple_of_row(i, j, &neg);
            for t in 0..j {
                let delta = BigRational::from(r.clone()) * &mu[j][t];
                mu[i][t] -= delta;
            }
            mu[i][j] -= BigRational::from(r);
        }
    }
    (Basis::from_rows_unchecked(rows), u)
}

/// Exact-arithmetic LLL reduction with Lovasz parameter `delta` in (1/4, 1].
pub fn lll_reduce(basis: &Basis, delta: &BigRational) -> Result<(Basis, UnimodularTransform)> {
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    if *delta <= quarter || *delta > BigRational::one() {
        return Err(LatticeError::InvalidParameter(format!(
            "delta must lie in (1/4, 1], got {delta}"
        )));
    }
    let n = basis.rank();
    let mut rows = basis.rows().to_vec();
    let mut u = UnimodularTransform::identity(n);
    let threshold = half();
    let mut k = 1;
    while k < n {
        let gso = gram_schmidt_rows(&rows);
        let mut mu_k = gso.mu[k].clone();
        for j in (0..k).rev() {
            if mu_k[j].abs() <= threshold {
                continue;
            }
            let r = mu_k[j].round().to_integer();
            let neg = -r.clone();
            row_op(&mut rows, k, j, &neg);
            u.add_multiple_of_row(k, j, &neg);
            for t in 0..j {
                let delta_mu = BigRational::from(r.clone()) * &gso.mu[j][t];
                mu_k[t] -= delta_mu;
            }
            mu_k[j] -= BigRational::from(r);
        }
        let lhs = &gso.ortho_norms_sq[k];
        let rhs = (delta - &mu_k[k - 1] * &mu_k[k - 1]) * &gso.ortho_norms_sq[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            rows.swap(k, k - 1);
            u.swap_rows(k, k - 1);
            k = k.max(2) - 1;
        }
    }
    Ok((Basis::from_rows_unchecked(rows), u))
}

/// Minimum of ||b_index + sum_{j<index} x_j b_j||^2 over integer x, via the
/// closest-vector specialization on the leading block. Returns the minimum
/// together with all block minimizers.
pub(crate) fn coset_minimum(
    gso: &GsoData,
    index: usize,
    counter: &mut NodeCounter,
) -> Result<(BigRational, Vec<Vec<BigInt>>)> {
    let base = gso.ortho_norms_sq[index].clone();
    let mut incumbent = base.clone();
    for t in 0..index {
        incumbent += &gso.mu[index][t] * &gso.mu[index][t] * &gso.ortho_norms_sq[t];
    }
    if index == 0 {
        return Ok((incumbent, vec![vec![]]));
    }
    let mut problem = BlockProblem::block(gso, 0, index, false);
    problem.tau = (0..index).map(|t| -gso.mu[index][t].clone()).collect();
    let radius = &incumbent - &base;
    let (best_block, xs) = enumerate_min(&problem, radius, counter)?;
    Ok((best_block + base, xs))
}

/// Replaces row `index` (0-based) by a minimum-norm element of its coset
/// modulo the leading rows. The incumbent row is kept when it already
/// attains the minimum, even under ties.
pub fn coset_reduce(
    basis: &Basis,
    index: usize,
    budget: &EnumerationBudget,
) -> Result<(Basis, UnimodularTransform)> {
    let n = basis.rank();
    assert!(index < n, "row index out of range");
    if index == 0 {
        return Ok((basis.clone(), UnimodularTransform::identity(n)));
    }
    let gso = gram_schmidt(basis);
    let mut counter = NodeCounter::new(budget);
    let (best_sq, mut xs) = coset_minimum(&gso, index, &mut counter)?;
    let incumbent_sq = BigRational::from(basis.row_norm_sq(index));
    debug_assert!(best_sq <= incumbent_sq);
    if best_sq == incumbent_sq {
        return Ok((basis.clone(), UnimodularTransform::identity(n)));
    }
    xs.sort_by(|a, b| preference_cmp(a, b));
    let x = &xs[0];
    let mut rows = basis.rows().to_vec();
    let mut u = UnimodularTransform::identity(n);
    for (j, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        row_op(&mut rows, index, j, c);
        u.add_multiple_of_row(index, j, c);
    }
    let out = Basis::from_rows_unchecked(rows);
    debug_assert_eq!(BigRational::from(out.row_norm_sq(index)), best_sq);
    Ok((out, u))
}

/// Unimodular matrix whose first row is the primitive vector `y`, built by
/// composing 2x2 Bezout blocks.
pub(crate) fn primitive_completion(y: &[BigInt]) -> Vec<Vec<BigInt>> {
    let k = y.len();
    assert!(k >= 1);
    let mut z = y.to_vec();
    let mut w: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for j in 1..k {
        if z[0].is_zero() && z[j].is_zero() {
            continue;
        }
        let eg = z[0].extended_gcd(&z[j]);
        let (g, s, t) = (eg.gcd, eg.x, eg.y);
        debug_assert!(g.is_positive());
        debug_assert_eq!(&s * &z[0] + &t * &z[j], g);
        let a = &z[0] / &g;
        let b = &z[j] / &g;
        let row0 = w[0].clone();
        let rowj = w[j].clone();
        for c in 0..k {
            w[0][c] = &a * &row0[c] + &b * &rowj[c];
            w[j][c] = &s * &rowj[c] - &t * &row0[c];
        }
        z[0] = g;
        z[j] = BigInt::zero();
    }
    if z[0].is_negative() {
        // Only reachable for a single-entry y = (-1).
        z[0] = -z[0].clone();
        for c in w[0].iter_mut() {
            *c = -(c.clone());
        }
    }
    assert!(z[0].is_one(), "input vector must be primitive");
    debug_assert_eq!(w[0], y);
    debug_assert!(int_det(w.clone()).abs().is_one());
    w
}

/// Establishes the triangular-support property for the given minima system:
/// after the call, minima vector i has coefficient support in rows 1..=i
/// with a nonzero i-th coefficient. Rows before i are never touched at
/// step i, so earlier steps stay valid.
pub fn property1_transform(
    basis: &Basis,
    cert: &MinimaCertificate,
) -> Result<(Basis, UnimodularTransform)> {
    cert.verify(basis)?;
    let n = basis.rank();
    let mut current = basis.clone();
    let mut u = UnimodularTransform::identity(n);
    for i in 0..n {
        let coeffs = crate::basis::express_in_basis(&current, &cert.vectors[i]).map_err(|e| {
            LatticeError::CertificateMismatch(format!("vector {i} left the lattice: {e}"))
        })?;
        let trailing = &coeffs[i..];
        let g = trailing.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        // v_i cannot lie in span(b_1..b_{i-1}): that span already holds the
        // i-1 independent earlier minima, so containing v_i would exceed
        // its rank.
        assert!(!g.is_zero(), "minima vector lies in the leading span");
        let y: Vec<BigInt> = trailing.iter().map(|x| x / &g).collect();
        if y[0].is_one() && y[1..].iter().all(|c| c.is_zero()) {
            continue;
        }
        let w = primitive_completion(&y);
        let mut rows = current.rows().to_vec();
        apply_block_rows(&mut rows, i, &w);
        current = Basis::from_rows_unchecked(rows);
        u.apply_block_left(i, &w);
    }
    #[cfg(debug_assertions)]
    for i in 0..n {
        let coeffs = crate::basis::express_in_basis(&current, &cert.vectors[i]).unwrap();
        assert!(!coeffs[i].is_zero());
        assert!(coeffs[i + 1..].iter().all(|c| c.is_zero()));
    }
    Ok((current, u))
}

/// Checks the two defining properties of strong reduction.
///
/// Property 1 is the existential reading: some system of minima vectors has
/// triangular support. That holds exactly when, for every i, the leading
/// sublattice of rank i realizes the full lattice's first i minima; the
/// witness system is then assembled greedily from the sublattice
/// certificates. Property 2 checks per-row coset minimality.
pub fn is_strongly_reduced(basis: &Basis, budget: &EnumerationBudget) -> Result<StrongCheck> {
    let n = basis.rank();
    let mut sub_certs = Vec::with_capacity(n);
    for i in 1..=n {
        sub_certs.push(successive_minima(&basis.leading(i), budget)?);
    }
    let full = sub_certs[n - 1].clone();
    let mut property1_ok = true;
    for (i, sub) in sub_certs.iter().enumerate() {
        if sub.lambda_sq[..] != full.lambda_sq[..=i] {
            property1_ok = false;
            break;
        }
    }
    let witness = if property1_ok {
        let mut span = QRowSpace::new();
        let mut vectors = Vec::with_capacity(n);
        for (i, sub) in sub_certs.iter().enumerate() {
            let pick = sub
                .vectors
                .iter()
                .find(|v| !span.contains(v))
                .expect("rank forces a sublattice minima vector outside the span");
            let norm = dot(pick, pick);
            assert_eq!(
                norm,
                full.lambda_sq[i],
                "vector independent of the leading span must attain lambda_i"
            );
            span.try_insert(pick);
            vectors.push(pick.clone());
        }
        let coeffs = vectors
            .iter()
            .map(|v| crate::basis::express_in_basis(basis, v))
            .collect::<Result<Vec<_>>>()?;
        MinimaCertificate { lambda_sq: full.lambda_sq.clone(), vectors, coeffs }
    } else {
        full
    };
    let gso = gram_schmidt(basis);
    let mut property2_ok = true;
    for i in 1..n {
        let mut counter = NodeCounter::new(budget);
        let (best_sq, _) = coset_minimum(&gso, i, &mut counter)?;
        if best_sq != BigRational::from(basis.row_norm_sq(i)) {
            property2_ok = false;
            break;
        }
    }
    Ok(StrongCheck { property1_ok, property2_ok, witness })
}

/// Populates a full report for an already-computed reduction.
pub fn build_report(
    method: ReductionMethod,
    input: &Basis,
    output: &Basis,
    transform: UnimodularTransform,
    budget: &EnumerationBudget,
) -> Result<ReductionReport> {
    debug_assert_eq!(
        &crate::basis::apply_unimodular(input, &transform).expect("transform shape"),
        output
    );
    let check = is_strongly_reduced(output, budget)?;
    let minima = check.witness.clone();
    let kp = k_profile(output, &minima)?;
    let mut theorem1_ok = true;
    for i in 0..output.rank() {
        let bound = theorem1_bound(i + 1, kp[i])?;
        let lhs = BigRational::from(output.row_norm_sq(i));
        let rhs = bound * BigRational::from(minima.lambda_sq[i].clone());
        if lhs > rhs {
            theorem1_ok = false;
        }
    }
    Ok(ReductionReport {
        method,
        defect_before: orthogonality_defect(input),
        defect_after: orthogonality_defect(output),
        input_basis: input.clone(),
        output_basis: output.clone(),
        transform,
        k_profile: kp,
        property1_ok: check.property1_ok,
        property2_ok: check.property2_ok,
        theorem1_ok,
        minima,
    })
}

/// Full strong reduction: LLL preprocessing, successive minima, the
/// triangular-support transform, then one ascending pass of coset
/// reductions. Coset steps only add multiples of earlier rows, so the
/// support property survives them.
pub fn strong_reduce(basis: &Basis, budget: &EnumerationBudget) -> Result<ReductionReport> {
    let n = basis.rank();
    let (lll_basis, u_lll) = lll_reduce(basis, &default_delta())?;
    let cert = successive_minima(&lll_basis, budget)?;
    let (p1_basis, u_p1) = property1_transform(&lll_basis, &cert)?;
    let mut current = p1_basis;
    let mut transform = u_p1.compose(&u_lll);
    for i in 0..n {
        let (next, u_i) = coset_reduce(&current, i, budget)?;
        transform = u_i.compose(&transform);
        current = next;
    }
    build_report(ReductionMethod::Strong, basis, &current, transform, budget)
}

/// HKZ reduction baseline: for each level, a shortest vector of the
/// projected lattice is lifted into position via a primitive completion;
/// a final size reduction cleans up the mu coefficients.
pub fn hkz_reduce(
    basis: &Basis,
    budget: &EnumerationBudget,
) -> Result<(Basis, UnimodularTransform)> {
    let n = basis.rank();
    let (lll_basis, u_lll) = lll_reduce(basis, &default_delta())?;
    let mut rows = lll_basis.rows().to_vec();
    let mut u = u_lll;
    for i in 0..n {
        let gso = gram_schmidt_rows(&rows);
        let problem = BlockProblem::block(&gso, i, n, true);
        let radius = gso.ortho_norms_sq[i].clone();
        let mut counter = NodeCounter::new(budget);
        let (_, ys) = enumerate_min(&problem, radius, &mut counter)?;
        let mut cands = ys;
        for y in &mut cands {
            sign_normalize(y);
        }
        cands.sort_by(|a, b| preference_cmp(a, b));
        cands.dedup();
        let y = &cands[0];
        debug_assert!(y
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
            .is_one());
        if y[0].is_one() && y[1..].iter().all(|c| c.is_zero()) {
            continue;
        }
        let w = primitive_completion(y);
        apply_block_rows(&mut rows, i, &w);
        u.apply_block_left(i, &w);
    }
    let (out, u_size) = size_reduce(&Basis::from_rows_unchecked(rows));
    Ok((out, u_size.compose(&u)))
}

/// k_i = #{ j < i : ||b_j||^2 > lambda_j^2 }, computed exactly.
pub fn k_profile(basis: &Basis, cert: &MinimaCertificate) -> Result<Vec<usize>> {
    cert.verify(basis)?;
    let n = basis.rank();
    let exceeds: Vec<bool> =
        (0..n).map(|j| basis.row_norm_sq(j) > cert.lambda_sq[j]).collect();
    Ok((0..n).map(|i| exceeds[..i].iter().filter(|&&e| e).count()).collect())
}
