//! Exact branch-and-bound enumeration over Gram-Schmidt coordinates:
//! shortest vectors, closest vectors and full successive-minima certificates.

use std::cmp::Ordering;

use num::{BigInt, BigRational, FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::basis::{dot, int_det, solve_square, Basis, QRowSpace};
use crate::error::{LatticeError, Result};
use crate::gso::{gram_schmidt, GsoData};
use crate::reduce::{default_delta, lll_reduce};

/// Cap on the number of search-tree nodes a single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_nodes: u64,
}

impl EnumerationBudget {
    pub fn new(max_nodes: u64) -> Self {
        assert!(max_nodes >= 1);
        EnumerationBudget { max_nodes }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        // Exponential search; this is comfortable up to rank ~12 at desk scale.
        EnumerationBudget { max_nodes: 10_000_000 }
    }
}

pub(crate) struct NodeCounter {
    used: u64,
    max: u64,
}

impl NodeCounter {
    pub(crate) fn new(budget: &EnumerationBudget) -> Self {
        NodeCounter { used: 0, max: budget.max_nodes }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            Err(LatticeError::BudgetExceeded(self.max))
        } else {
            Ok(())
        }
    }
}

/// Certificate for the successive minima of a lattice: the squared minima,
/// achieving vectors, and their integer coefficients in the certified basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaCertificate {
    pub lambda_sq: Vec<BigInt>,
    pub vectors: Vec<Vec<BigInt>>,
    pub coeffs: Vec<Vec<BigInt>>,
}

impl MinimaCertificate {
    pub fn rank(&self) -> usize {
        self.lambda_sq.len()
    }

    /// Checks the structural invariants against `basis`: norms match,
    /// coefficients reproduce the vectors, minima are sorted, X nonsingular.
    pub fn verify(&self, basis: &Basis) -> Result<()> {
        let n = basis.rank();
        if self.lambda_sq.len() != n || self.vectors.len() != n || self.coeffs.len() != n {
            return Err(LatticeError::CertificateMismatch("certificate rank differs".into()));
        }
        for i in 0..n {
            let norm = dot(&self.vectors[i], &self.vectors[i]);
            if norm != self.lambda_sq[i] {
                return Err(LatticeError::CertificateMismatch(format!(
                    "vector {i} has norm^2 {norm} but lambda^2 {}",
                    self.lambda_sq[i]
                )));
            }
            if basis.combine(&self.coeffs[i])? != self.vectors[i] {
                return Err(LatticeError::CertificateMismatch(format!(
                    "coefficients of vector {i} do not reproduce it"
                )));
            }
            if i > 0 && self.lambda_sq[i] < self.lambda_sq[i - 1] {
                return Err(LatticeError::CertificateMismatch("minima are not sorted".into()));
            }
        }
        if int_det(self.coeffs.clone()).is_zero() {
            return Err(LatticeError::CertificateMismatch(
                "coefficient matrix is singular".into(),
            ));
        }
        Ok(())
    }

    /// Same minima vectors, with coefficients recomputed for `basis`.
    pub fn reexpress(&self, basis: &Basis) -> Result<MinimaCertificate> {
        let coeffs = self
            .vectors
            .iter()
            .map(|v| crate::basis::express_in_basis(basis, v))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| {
                LatticeError::CertificateMismatch(format!("vector left the lattice: {e}"))
            })?;
        Ok(MinimaCertificate {
            lambda_sq: self.lambda_sq.clone(),
            vectors: self.vectors.clone(),
            coeffs,
        })
    }
}

/// One enumeration instance over `r` Gram-Schmidt levels. The value of a
/// coefficient vector x is sum over t of (x_t - gamma_t)^2 * norms[t] where
/// gamma_t = tau[t] - sum_{j>t} x_j mu[j][t].
pub(crate) struct BlockProblem {
    pub(crate) mu: Vec<Vec<BigRational>>,
    pub(crate) norms: Vec<BigRational>,
    pub(crate) tau: Vec<BigRational>,
    pub(crate) exclude_zero: bool,
}

impl BlockProblem {
    /// Homogeneous problem on levels `[lo, hi)` of a GSO.
    pub(crate) fn block(gso: &GsoData, lo: usize, hi: usize, exclude_zero: bool) -> Self {
        let r = hi - lo;
        let mu = (0..r)
            .map(|i| (0..i).map(|j| gso.mu[lo + i][lo + j].clone()).collect())
            .collect();
        let norms = gso.ortho_norms_sq[lo..hi].to_vec();
        BlockProblem { mu, norms, tau: vec![BigRational::zero(); r], exclude_zero }
    }

    pub(crate) fn rank(&self) -> usize {
        self.norms.len()
    }

    fn center(&self, t: usize, x: &[BigInt]) -> BigRational {
        let mut gamma = self.tau[t].clone();
        for j in t + 1..self.rank() {
            if x[j].is_zero() {
                continue;
            }
            gamma -= BigRational::from(x[j].clone()) * &self.mu[j][t];
        }
        gamma
    }

    /// Nearest-plane walk; returns coefficients and their value. Used to
    /// seed the enumeration radius for inhomogeneous instances.
    pub(crate) fn babai(&self) -> (Vec<BigInt>, BigRational) {
        let r = self.rank();
        let mut x = vec![BigInt::zero(); r];
        let mut value = BigRational::zero();
        for t in (0..r).rev() {
            let gamma = self.center(t, &x);
            x[t] = gamma.round().to_integer();
            let d = BigRational::from(x[t].clone()) - gamma;
            value += &d * &d * &self.norms[t];
        }
        (x, value)
    }
}

struct EnumState<'a> {
    problem: &'a BlockProblem,
    initial_radius: BigRational,
    shrink: bool,
    best: Option<BigRational>,
    solutions: Vec<(Vec<BigInt>, BigRational)>,
    x: Vec<BigInt>,
    counter: &'a mut NodeCounter,
}

impl EnumState<'_> {
    fn radius(&self) -> &BigRational {
        if self.shrink {
            self.best.as_ref().unwrap_or(&self.initial_radius)
        } else {
            &self.initial_radius
        }
    }

    fn descend(&mut self, assigned: usize, partial: &BigRational, all_zero: bool) -> Result<()> {
        let r = self.problem.rank();
        if assigned == r {
            if all_zero && self.problem.exclude_zero {
                return Ok(());
            }
            if self.shrink {
                match &self.best {
                    Some(b) if partial > b => {}
                    Some(b) if partial == b => {
                        self.solutions.push((self.x.clone(), partial.clone()));
                    }
                    _ => {
                        self.best = Some(partial.clone());
                        self.solutions.clear();
                        self.solutions.push((self.x.clone(), partial.clone()));
                    }
                }
            } else {
                self.solutions.push((self.x.clone(), partial.clone()));
            }
            return Ok(());
        }
        let t = r - 1 - assigned;
        let slack = self.radius() - partial;
        if slack.is_negative() {
            return Ok(());
        }
        let gamma = self.problem.center(t, &self.x);
        let q = &slack / &self.problem.norms[t];
        let lo = ceil_gamma_minus_sqrt(&gamma, &q);
        let hi = floor_gamma_plus_sqrt(&gamma, &q);
        let mut xv = lo;
        while xv <= hi {
            self.counter.tick()?;
            let d = BigRational::from(xv.clone()) - &gamma;
            let total = partial + &d * &d * &self.problem.norms[t];
            if &total <= self.radius() {
                self.x[t] = xv.clone();
                let zero_here = all_zero && xv.is_zero();
                self.descend(assigned + 1, &total, zero_here)?;
            }
            xv += 1;
        }
        self.x[t] = BigInt::zero();
        Ok(())
    }
}

/// All minimizers within `initial_radius` (inclusive). The call sites
/// guarantee a witness inside the radius, so the result is never empty.
pub(crate) fn enumerate_min(
    problem: &BlockProblem,
    initial_radius: BigRational,
    counter: &mut NodeCounter,
) -> Result<(BigRational, Vec<Vec<BigInt>>)> {
    let mut state = EnumState {
        problem,
        initial_radius,
        shrink: true,
        best: None,
        solutions: Vec::new(),
        x: vec![BigInt::zero(); problem.rank()],
        counter,
    };
    state.descend(0, &BigRational::zero(), true)?;
    let best = state.best.expect("enumeration radius must contain a witness");
    Ok((best, state.solutions.into_iter().map(|(x, _)| x).collect()))
}

/// Every solution with value <= `radius`.
pub(crate) fn enumerate_within(
    problem: &BlockProblem,
    radius: BigRational,
    counter: &mut NodeCounter,
) -> Result<Vec<(Vec<BigInt>, BigRational)>> {
    let mut state = EnumState {
        problem,
        initial_radius: radius,
        shrink: false,
        best: None,
        solutions: Vec::new(),
        x: vec![BigInt::zero(); problem.rank()],
        counter,
    };
    state.descend(0, &BigRational::zero(), true)?;
    Ok(state.solutions)
}

/// Largest integer x with x <= gamma + sqrt(q), for q >= 0.
fn floor_gamma_plus_sqrt(gamma: &BigRational, q: &BigRational) -> BigInt {
    debug_assert!(!q.is_negative());
    let admissible = |x: &BigInt| -> bool {
        let d = BigRational::from(x.clone()) - gamma;
        if !d.is_positive() {
            return true;
        }
        &(&d * &d) <= q
    };
    let guess = match (gamma.to_f64(), q.to_f64()) {
        (Some(g), Some(qq)) if g.is_finite() && qq.is_finite() => {
            let est = g + qq.max(0.0).sqrt();
            BigInt::from_f64(est.floor()).unwrap_or_else(|| gamma.ceil().to_integer())
        }
        _ => gamma.ceil().to_integer(),
    };
    let mut x = guess;
    while admissible(&(&x + 1)) {
        x += 1;
    }
    while !admissible(&x) {
        x -= 1;
    }
    x
}

/// Smallest integer x with x >= gamma - sqrt(q), for q >= 0.
fn ceil_gamma_minus_sqrt(gamma: &BigRational, q: &BigRational) -> BigInt {
    -floor_gamma_plus_sqrt(&-gamma, q)
}

/// Flips the sign so the first nonzero coefficient is positive.
pub(crate) fn sign_normalize(v: &mut [BigInt]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -(x.clone());
            }
        }
    }
}

/// Deterministic preference order on coefficient vectors: compares trailing
/// coordinates first, so vectors supported on earlier basis rows win ties.
pub(crate) fn preference_cmp(a: &[BigInt], b: &[BigInt]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Row vector times matrix: coefficients in a reduced basis mapped back
/// through the recorded transform.
fn map_through(y: &[BigInt], u: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = u.len();
    let mut x = vec![BigInt::zero(); n];
    for (yi, urow) in y.iter().zip(u) {
        if yi.is_zero() {
            continue;
        }
        for (acc, e) in x.iter_mut().zip(urow) {
            *acc += yi * e;
        }
    }
    x
}

/// Shortest nonzero lattice vector. Returns its coefficients in the given
/// basis (sign-normalized, ties broken by `preference_cmp`) and lambda_1^2.
pub fn svp(basis: &Basis, budget: &EnumerationBudget) -> Result<(Vec<BigInt>, BigInt)> {
    let (reduced, u) = lll_reduce(basis, &default_delta())?;
    let gso = gram_schmidt(&reduced);
    let n = reduced.rank();
    let radius = (0..n).map(|i| reduced.row_norm_sq(i)).min().expect("rank >= 1");
    let problem = BlockProblem::block(&gso, 0, n, true);
    let mut counter = NodeCounter::new(budget);
    let (best, ys) = enumerate_min(&problem, BigRational::from(radius), &mut counter)?;
    let mut cands: Vec<Vec<BigInt>> = ys.iter().map(|y| map_through(y, u.entries())).collect();
    for c in &mut cands {
        sign_normalize(c);
    }
    cands.sort_by(|a, b| preference_cmp(a, b));
    let coeffs = cands.into_iter().next().expect("nonempty minimizer set");
    debug_assert!(best.is_integer());
    Ok((coeffs, best.to_integer()))
}

/// Closest lattice point to `target`. A target outside the span is handled
/// by projecting onto it; the orthogonal residue is added back into the
/// returned squared distance.
pub fn cvp(
    basis: &Basis,
    target: &[BigInt],
    budget: &EnumerationBudget,
) -> Result<(Vec<BigInt>, BigRational)> {
    if target.len() != basis.ambient_dim() {
        return Err(LatticeError::DimensionMismatch(format!(
            "target length {} does not match ambient dimension {}",
            target.len(),
            basis.ambient_dim()
        )));
    }
    let (reduced, u) = lll_reduce(basis, &default_delta())?;
    let gso = gram_schmidt(&reduced);
    let n = reduced.rank();
    let mut tau = Vec::with_capacity(n);
    for t in 0..n {
        let num: BigRational = target
            .iter()
            .zip(&gso.ortho_rows[t])
            .map(|(a, b)| BigRational::from(a.clone()) * b)
            .sum();
        tau.push(num / &gso.ortho_norms_sq[t]);
    }
    let target_norm_sq = BigRational::from(dot(target, target));
    let in_span_sq: BigRational =
        tau.iter().zip(&gso.ortho_norms_sq).map(|(t, w)| t * t * w).sum();
    let residue_sq = target_norm_sq - in_span_sq;
    debug_assert!(!residue_sq.is_negative());

    let mut problem = BlockProblem::block(&gso, 0, n, false);
    problem.tau = tau;
    let (_, babai_value) = problem.babai();
    let mut counter = NodeCounter::new(budget);
    let (best, ys) = enumerate_min(&problem, babai_value, &mut counter)?;
    let mut cands: Vec<Vec<BigInt>> = ys.iter().map(|y| map_through(y, u.entries())).collect();
    // No sign normalization here: negating coefficients moves the point.
    cands.sort_by(|a, b| preference_cmp(a, b));
    let coeffs = cands.into_iter().next().expect("nonempty minimizer set");
    Ok((coeffs, best + residue_sq))
}

/// Greedy minima construction from a candidate pool: scan in non-decreasing
/// norm (ties in preference order) and keep each vector that is linearly
/// independent of those already kept. The pool must contain every lattice
/// vector of norm up to the n-th minimum.
pub(crate) fn greedy_minima(
    basis: &Basis,
    mut cands: Vec<(BigInt, Vec<BigInt>)>,
) -> Result<MinimaCertificate> {
    cands.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| preference_cmp(&a.1, &b.1)));
    cands.dedup();
    let n = basis.rank();
    let mut space = QRowSpace::new();
    let mut lambda_sq = Vec::with_capacity(n);
    let mut coeffs = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for (norm_sq, x) in cands {
        if space.try_insert(&x) {
            vectors.push(basis.combine(&x)?);
            lambda_sq.push(norm_sq);
            coeffs.push(x);
            if lambda_sq.len() == n {
                break;
            }
        }
    }
    assert_eq!(lambda_sq.len(), n, "candidate pool must contain n independent vectors");
    Ok(MinimaCertificate { lambda_sq, vectors, coeffs })
}

/// Successive minima by greedy enumeration: all vectors within the largest
/// LLL row norm are generated, then scanned in non-decreasing norm.
pub fn successive_minima(basis: &Basis, budget: &EnumerationBudget) -> Result<MinimaCertificate> {
    let (reduced, u) = lll_reduce(basis, &default_delta())?;
    let gso = gram_schmidt(&reduced);
    let n = reduced.rank();
    let radius = (0..n).map(|i| reduced.row_norm_sq(i)).max().expect("rank >= 1");
    let problem = BlockProblem::block(&gso, 0, n, true);
    let mut counter = NodeCounter::new(budget);
    let within = enumerate_within(&problem, BigRational::from(radius), &mut counter)?;
    let cands = within
        .into_iter()
        .map(|(y, norm_sq)| {
            debug_assert!(norm_sq.is_integer());
            let mut x = map_through(&y, u.entries());
            sign_normalize(&mut x);
            (norm_sq.to_integer(), x)
        })
        .collect();
    greedy_minima(basis, cands)
}

/// Smallest b >= 0 with b^2 >= v.
pub(crate) fn ceil_sqrt_rational(v: &BigRational) -> BigInt {
    if !v.is_positive() {
        return BigInt::zero();
    }
    let mut b = v.ceil().to_integer();
    b = num::integer::Roots::sqrt(&b);
    while BigRational::from(&b * &b) < *v {
        b += 1;
    }
    b
}

/// Coefficient bound certifying a brute-force box: every lattice vector v
/// with ||v||^2 <= max_i ||b_i||^2 has |x_j| <= bound in this basis. Uses
/// |x_j| <= ||v|| * sqrt((G^-1)_jj) with G the Gram matrix.
pub fn certified_box_bound(basis: &Basis) -> Result<u64> {
    let n = basis.rank();
    let r_sq =
        BigRational::from((0..n).map(|i| basis.row_norm_sq(i)).max().expect("rank >= 1"));
    let gram: Vec<Vec<BigRational>> = basis
        .gram()
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from).collect())
        .collect();
    let mut bound = BigInt::zero();
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        let col = solve_square(&gram, &e);
        let b_j = ceil_sqrt_rational(&(&r_sq * &col[j]));
        bound = bound.max(b_j);
    }
    bound.to_u64().ok_or_else(|| {
        LatticeError::BoxTooLarge("certified coefficient bound exceeds u64".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::apply_unimodular;
    use crate::basis::UnimodularTransform;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    #[test]
    fn svp_identity_prefers_leading_row() {
        let b = Basis::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let (coeffs, norm_sq) = svp(&b, &budget()).unwrap();
        assert_eq!(norm_sq, bi(1));
        assert_eq!(coeffs, vec![bi(1), bi(0)]);
    }

    #[test]
    fn svp_unit_shear() {
        let b = Basis::from_i64(&[&[1, 0], &[1, 1]]).unwrap();
        let (_, norm_sq) = svp(&b, &budget()).unwrap();
        assert_eq!(norm_sq, bi(1));
    }

    #[test]
    fn svp_skewed_lattice() {
        // Brute force over |x_i| <= 3 confirms nothing shorter than norm^2 = 2.
        let b = Basis::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        let (coeffs, norm_sq) = svp(&b, &budget()).unwrap();
        assert_eq!(norm_sq, bi(2));
        assert_eq!(coeffs, vec![bi(1), bi(-1)]);
        let mut seen_shorter = false;
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                if (x, y) == (0, 0) {
                    continue;
                }
                let v = b.combine(&[bi(x), bi(y)]).unwrap();
                if dot(&v, &v) < bi(2) {
                    seen_shorter = true;
                }
            }
        }
        assert!(!seen_shorter);
    }

    #[test]
    fn svp_small_budget_errors() {
        let b = Basis::from_i64(&[&[7, 1, 3], &[2, 9, 4], &[5, 5, 11]]).unwrap();
        let err = svp(&b, &EnumerationBudget::new(2)).unwrap_err();
        assert!(matches!(err, LatticeError::BudgetExceeded(2)));
    }

    #[test]
    fn cvp_lattice_point_has_zero_distance() {
        let b = Basis::from_i64(&[&[3, 1], &[1, 4]]).unwrap();
        let target = b.combine(&[bi(2), bi(-1)]).unwrap();
        let (coeffs, dist_sq) = cvp(&b, &target, &budget()).unwrap();
        assert!(dist_sq.is_zero());
        assert_eq!(coeffs, vec![bi(2), bi(-1)]);
    }

    #[test]
    fn cvp_midpoint_tie_prefers_origin() {
        let b = Basis::from_i64(&[&[2]]).unwrap();
        let (coeffs, dist_sq) = cvp(&b, &[bi(1)], &budget()).unwrap();
        assert_eq!(dist_sq, BigRational::from(bi(1)));
        assert_eq!(coeffs, vec![bi(0)]);
    }

    #[test]
    fn cvp_projects_off_span_targets() {
        let b = Basis::from_i64(&[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let (coeffs, dist_sq) = cvp(&b, &[bi(2), bi(3), bi(5)], &budget()).unwrap();
        assert_eq!(coeffs, vec![bi(2), bi(3)]);
        assert_eq!(dist_sq, BigRational::from(bi(25)));
    }

    #[test]
    fn minima_identity_is_signed_permutation() {
        let b = Basis::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let cert = successive_minima(&b, &budget()).unwrap();
        assert_eq!(cert.lambda_sq, vec![bi(1), bi(1), bi(1)]);
        assert_eq!(int_det(cert.coeffs.clone()).abs(), bi(1));
        cert.verify(&b).unwrap();
        // Preference order picks the identity permutation outright.
        assert_eq!(cert.coeffs[0], vec![bi(1), bi(0), bi(0)]);
        assert_eq!(cert.coeffs[1], vec![bi(0), bi(1), bi(0)]);
        assert_eq!(cert.coeffs[2], vec![bi(0), bi(0), bi(1)]);
    }

    #[test]
    fn minima_orthogonal_unequal_lengths() {
        let b = Basis::from_i64(&[&[1, 0], &[0, 2]]).unwrap();
        let cert = successive_minima(&b, &budget()).unwrap();
        assert_eq!(cert.lambda_sq, vec![bi(1), bi(4)]);
    }

    #[test]
    fn minima_invariant_under_unimodular() {
        let b = Basis::from_i64(&[&[4, 1, 0], &[1, 5, 2], &[0, 3, 7]]).unwrap();
        let u = UnimodularTransform::from_i64(&[&[1, 3, 0], &[0, 1, 0], &[2, 0, 1]]).unwrap();
        let b2 = apply_unimodular(&b, &u).unwrap();
        let c1 = successive_minima(&b, &budget()).unwrap();
        let c2 = successive_minima(&b2, &budget()).unwrap();
        assert_eq!(c1.lambda_sq, c2.lambda_sq);
    }

    #[test]
    fn certificate_verification_catches_tampering() {
        let b = Basis::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let mut cert = successive_minima(&b, &budget()).unwrap();
        cert.lambda_sq[0] = bi(7);
        assert!(matches!(cert.verify(&b), Err(LatticeError::CertificateMismatch(_))));
    }

    #[test]
    fn certified_bound_covers_short_vectors() {
        let b = Basis::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        let bound = certified_box_bound(&b).unwrap();
        // Rows themselves must fit in the box.
        assert!(bound >= 1);
    }

    #[test]
    fn preference_order_matches_examples() {
        // (1,0) beats (0,1): trailing coordinates compare first.
        assert_eq!(
            preference_cmp(&[bi(1), bi(0)], &[bi(0), bi(1)]),
            Ordering::Less
        );
        assert_eq!(preference_cmp(&[bi(0)], &[bi(1)]), Ordering::Less);
    }

    #[test]
    fn sqrt_bounds_are_exact() {
        let g = BigRational::zero();
        let q = BigRational::from(bi(2));
        assert_eq!(floor_gamma_plus_sqrt(&g, &q), bi(1));
        assert_eq!(ceil_gamma_minus_sqrt(&g, &q), bi(-1));
        let q4 = BigRational::from(bi(4));
        assert_eq!(floor_gamma_plus_sqrt(&g, &q4), bi(2));
        let g_half = BigRational::new(bi(1), bi(2));
        assert_eq!(floor_gamma_plus_sqrt(&g_half, &q4), bi(2));
        assert_eq!(ceil_gamma_minus_sqrt(&g_half, &q4), bi(-1));
    }
}
