//! Python bindings: bases, Gram-Schmidt data, enumeration, reductions and
//! the bound table. Integers cross the boundary as Python ints, exact
//! rationals as fractions.Fraction.

use num::{BigInt, BigRational};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use latred::enumerate::EnumerationBudget;
use latred::generate::{LatticeKind, LatticeSpec};
use latred::reduce::default_delta;

fn err(e: latred::LatticeError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn budget(max_nodes: Option<u64>) -> EnumerationBudget {
    max_nodes.map(EnumerationBudget::new).unwrap_or_default()
}

/// Integer lattice basis; rows are validated for linear independence.
#[pyclass(frozen, module = "latred_py", skip_from_py_object)]
#[derive(Clone)]
struct Basis {
    inner: latred::Basis,
}

#[pymethods]
impl Basis {
    #[new]
    fn new(rows: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(Basis { inner: latred::Basis::new(rows).map_err(err)? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.inner.rows().to_vec()
    }

    fn gram_det(&self) -> BigInt {
        self.inner.gram_det()
    }

    fn orthogonality_defect(&self) -> BigRational {
        latred::gso::orthogonality_defect(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Basis(rank={}, ambient_dim={})", self.inner.rank(), self.inner.ambient_dim())
    }
}

/// Successive minima certificate.
#[pyclass(frozen, module = "latred_py", skip_from_py_object)]
#[derive(Clone)]
struct MinimaCertificate {
    inner: latred::MinimaCertificate,
}

#[pymethods]
impl MinimaCertificate {
    #[getter]
    fn lambda_sq(&self) -> Vec<BigInt> {
        self.inner.lambda_sq.clone()
    }

    #[getter]
    fn vectors(&self) -> Vec<Vec<BigInt>> {
        self.inner.vectors.clone()
    }

    #[getter]
    fn coeffs(&self) -> Vec<Vec<BigInt>> {
        self.inner.coeffs.clone()
    }

    fn __repr__(&self) -> String {
        let l: Vec<String> = self.inner.lambda_sq.iter().map(|x| x.to_string()).collect();
        format!("MinimaCertificate(lambda_sq=[{}])", l.join(", "))
    }
}

/// Reduction outcome with verification flags.
#[pyclass(frozen, module = "latred_py", skip_from_py_object)]
struct ReductionReport {
    inner: latred::ReductionReport,
}

#[pymethods]
impl ReductionReport {
    #[getter]
    fn method(&self) -> &'static str {
        self.inner.method.name()
    }

    #[getter]
    fn output_basis(&self) -> Basis {
        Basis { inner: self.inner.output_basis.clone() }
    }

    #[getter]
    fn transform(&self) -> Vec<Vec<BigInt>> {
        self.inner.transform.entries().to_vec()
    }

    #[getter]
    fn defect_before(&self) -> BigRational {
        self.inner.defect_before.clone()
    }

    #[getter]
    fn defect_after(&self) -> BigRational {
        self.inner.defect_after.clone()
    }

    #[getter]
    fn k_profile(&self) -> Vec<usize> {
        self.inner.k_profile.clone()
    }

    #[getter]
    fn property1_ok(&self) -> bool {
        self.inner.property1_ok
    }

    #[getter]
    fn property2_ok(&self) -> bool {
        self.inner.property2_ok
    }

    #[getter]
    fn theorem1_ok(&self) -> bool {
        self.inner.theorem1_ok
    }

    #[getter]
    fn minima(&self) -> MinimaCertificate {
        MinimaCertificate { inner: self.inner.minima.clone() }
    }

    fn __repr__(&self) -> String {
        format!(
            "ReductionReport(method='{}', property1_ok={}, property2_ok={}, theorem1_ok={})",
            self.inner.method, self.inner.property1_ok, self.inner.property2_ok,
            self.inner.theorem1_ok
        )
    }
}

#[pyfunction]
fn gram_schmidt(basis: &Basis) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let gso = latred::gso::gram_schmidt(&basis.inner);
    (gso.mu, gso.ortho_norms_sq)
}

#[pyfunction]
fn vector_norm_sq(basis: &Basis, coeffs: Vec<BigInt>) -> PyResult<BigRational> {
    let gso = latred::gso::gram_schmidt(&basis.inner);
    latred::gso::vector_norm_sq(&gso, &coeffs).map_err(err)
}

#[pyfunction]
fn express_in_basis(basis: &Basis, vector: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    latred::basis::express_in_basis(&basis.inner, &vector).map_err(err)
}

#[pyfunction]
fn apply_unimodular(basis: &Basis, transform: Vec<Vec<BigInt>>) -> PyResult<Basis> {
    let u = latred::UnimodularTransform::new(transform).map_err(err)?;
    Ok(Basis { inner: latred::basis::apply_unimodular(&basis.inner, &u).map_err(err)? })
}

#[pyfunction]
#[pyo3(signature = (basis, max_nodes=None))]
fn svp(basis: &Basis, max_nodes: Option<u64>) -> PyResult<(Vec<BigInt>, BigInt)> {
    latred::enumerate::svp(&basis.inner, &budget(max_nodes)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (basis, target, max_nodes=None))]
fn cvp(
    basis: &Basis,
    target: Vec<BigInt>,
    max_nodes: Option<u64>,
) -> PyResult<(Vec<BigInt>, BigRational)> {
    latred::enumerate::cvp(&basis.inner, &target, &budget(max_nodes)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (basis, max_nodes=None))]
fn successive_minima(basis: &Basis, max_nodes: Option<u64>) -> PyResult<MinimaCertificate> {
    let cert = latred::enumerate::successive_minima(&basis.inner, &budget(max_nodes))
        .map_err(err)?;
    Ok(MinimaCertificate { inner: cert })
}

#[pyfunction]
fn brute_force_minima(basis: &Basis, box_bound: u64) -> PyResult<MinimaCertificate> {
    let cert = latred::oracle::brute_force_minima(&basis.inner, box_bound).map_err(err)?;
    Ok(MinimaCertificate { inner: cert })
}

#[pyfunction]
fn certified_box_bound(basis: &Basis) -> PyResult<u64> {
    latred::enumerate::certified_box_bound(&basis.inner).map_err(err)
}

#[pyfunction]
fn size_reduce(basis: &Basis) -> (Basis, Vec<Vec<BigInt>>) {
    let (out, u) = latred::reduce::size_reduce(&basis.inner);
    (Basis { inner: out }, u.entries().to_vec())
}

#[pyfunction]
#[pyo3(signature = (basis, delta=None))]
fn lll_reduce(
    basis: &Basis,
    delta: Option<BigRational>,
) -> PyResult<(Basis, Vec<Vec<BigInt>>)> {
    let delta = delta.unwrap_or_else(default_delta);
    let (out, u) = latred::reduce::lll_reduce(&basis.inner, &delta).map_err(err)?;
    Ok((Basis { inner: out }, u.entries().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (basis, index, max_nodes=None))]
fn coset_reduce(
    basis: &Basis,
    index: usize,
    max_nodes: Option<u64>,
) -> PyResult<(Basis, Vec<Vec<BigInt>>)> {
    let (out, u) =
        latred::reduce::coset_reduce(&basis.inner, index, &budget(max_nodes)).map_err(err)?;
    Ok((Basis { inner: out }, u.entries().to_vec()))
}

#[pyfunction]
fn property1_transform(
    basis: &Basis,
    cert: &MinimaCertificate,
) -> PyResult<(Basis, Vec<Vec<BigInt>>)> {
    let (out, u) =
        latred::reduce::property1_transform(&basis.inner, &cert.inner).map_err(err)?;
    Ok((Basis { inner: out }, u.entries().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (basis, max_nodes=None))]
fn strong_reduce(basis: &Basis, max_nodes: Option<u64>) -> PyResult<ReductionReport> {
    let report =
        latred::reduce::strong_reduce(&basis.inner, &budget(max_nodes)).map_err(err)?;
    Ok(ReductionReport { inner: report })
}

#[pyfunction]
#[pyo3(signature = (basis, max_nodes=None))]
fn hkz_reduce(basis: &Basis, max_nodes: Option<u64>) -> PyResult<(Basis, Vec<Vec<BigInt>>)> {
    let (out, u) =
        latred::reduce::hkz_reduce(&basis.inner, &budget(max_nodes)).map_err(err)?;
    Ok((Basis { inner: out }, u.entries().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (basis, max_nodes=None))]
fn is_strongly_reduced(
    basis: &Basis,
    max_nodes: Option<u64>,
) -> PyResult<(bool, bool, MinimaCertificate)> {
    let check = latred::reduce::is_strongly_reduced(&basis.inner, &budget(max_nodes))
        .map_err(err)?;
    Ok((
        check.property1_ok,
        check.property2_ok,
        MinimaCertificate { inner: check.witness },
    ))
}

#[pyfunction]
fn k_profile(basis: &Basis, cert: &MinimaCertificate) -> PyResult<Vec<usize>> {
    latred::reduce::k_profile(&basis.inner, &cert.inner).map_err(err)
}

#[pyfunction]
fn theorem1_bound(i: usize, k: usize) -> PyResult<BigRational> {
    latred::bounds::theorem1_bound(i, k).map_err(err)
}

#[pyfunction]
fn f_hkz(n: usize) -> f64 {
    latred::bounds::f_hkz(n)
}

#[pyfunction]
fn f_strong(n: usize) -> (f64, usize) {
    latred::bounds::f_strong(n)
}

#[pyfunction]
fn beta_root(n: usize) -> PyResult<f64> {
    latred::bounds::beta_root(n).map_err(err)
}

#[pyfunction]
fn hermite_upper(n: usize) -> f64 {
    latred::bounds::hermite_upper(n)
}

#[pyfunction]
fn theorem2_bound(n: usize) -> f64 {
    latred::bounds::theorem2_bound(n)
}

/// Rows (n, f_H, f_S, k_star, beta_n, gamma_upper, theorem2_bound).
#[pyfunction]
fn bounds_table(ns: Vec<usize>) -> PyResult<Vec<(usize, f64, f64, usize, f64, f64, f64)>> {
    let rows = latred::bounds::bounds_table(&ns).map_err(err)?;
    Ok(rows
        .into_iter()
        .map(|r| (r.n, r.f_h, r.f_s, r.k_star, r.beta_n, r.gamma_upper, r.theorem2))
        .collect())
}

#[pyfunction]
fn generate_lattice(kind: &str, dim: usize, entry_bound: i64, seed: u64) -> PyResult<Basis> {
    let kind = LatticeKind::parse(kind).map_err(err)?;
    let spec = LatticeSpec::new(kind, dim, entry_bound, seed);
    Ok(Basis { inner: latred::generate::generate_lattice(&spec).map_err(err)? })
}

#[pymodule]
fn latred_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Basis>()?;
    m.add_class::<MinimaCertificate>()?;
    m.add_class::<ReductionReport>()?;
    m.add_function(wrap_pyfunction!(gram_schmidt, m)?)?;
    m.add_function(wrap_pyfunction!(vector_norm_sq, m)?)?;
    m.add_function(wrap_pyfunction!(express_in_basis, m)?)?;
    m.add_function(wrap_pyfunction!(apply_unimodular, m)?)?;
    m.add_function(wrap_pyfunction!(svp, m)?)?;
    m.add_function(wrap_pyfunction!(cvp, m)?)?;
    m.add_function(wrap_pyfunction!(successive_minima, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_minima, m)?)?;
    m.add_function(wrap_pyfunction!(certified_box_bound, m)?)?;
    m.add_function(wrap_pyfunction!(size_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(lll_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(coset_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(property1_transform, m)?)?;
    m.add_function(wrap_pyfunction!(strong_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(hkz_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(is_strongly_reduced, m)?)?;
    m.add_function(wrap_pyfunction!(k_profile, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_bound, m)?)?;
    m.add_function(wrap_pyfunction!(f_hkz, m)?)?;
    m.add_function(wrap_pyfunction!(f_strong, m)?)?;
    m.add_function(wrap_pyfunction!(beta_root, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_upper, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_table, m)?)?;
    m.add_function(wrap_pyfunction!(generate_lattice, m)?)?;
    Ok(())
}
