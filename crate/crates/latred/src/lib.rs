//! Exact-arithmetic lattice reduction library.
//!
//! Everything on the checking path is computed with arbitrary-precision
//! integers and exact rationals: Gram-Schmidt data, orthogonality defects,
//! successive minima, and the strong-reduction property verifiers. Doubles
//! appear only in the closed-form bound table.

pub mod basis;
pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod experiment;
pub mod generate;
pub mod gso;
pub mod io;
pub mod oracle;
pub mod reduce;

pub use basis::{apply_unimodular, express_in_basis, Basis, UnimodularTransform};
pub use enumerate::{
    certified_box_bound, cvp, successive_minima, svp, EnumerationBudget, MinimaCertificate,
};
pub use error::{LatticeError, Result};
pub use gso::{gram_schmidt, orthogonality_defect, vector_norm_sq, GsoData};
pub use oracle::{brute_force_minima, certified_cvp_box, cvp_box, cvp_box_centered, svp_box};
pub use reduce::{
    coset_reduce, hkz_reduce, is_strongly_reduced, k_profile, lll_reduce, property1_transform,
    size_reduce, strong_reduce, ReductionMethod, ReductionReport, StrongCheck,
};
