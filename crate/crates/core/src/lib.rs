//! Normalized generalized Laguerre polynomials and subordination checks.
//!
//! `M_{n,α}(z) = Σ_k (-n)_k / ((α+1)_k k!) z^k`, normalized so `M(0) = 1`.
//! The crate evaluates these polynomials and their derivatives, tests
//! whether `M`, `1 + zM''/M'` or `zM'/M`-type functionals map the unit disk
//! into a target region (exponential, Janowski, lemniscate, half-plane), and
//! compares those empirical verdicts with closed-form sufficient conditions.

pub mod domain;
pub mod error;
pub mod laguerre;
pub mod poly;
pub mod report;
pub mod scan;
pub mod sequence;
pub mod subordination;
pub mod theorems;

pub use num_complex::Complex64;

pub use domain::{JanowskiParams, JanowskiRegion, MembershipVerdict, SignConvention, TargetDomain};
pub use error::{Error, Result};
pub use laguerre::PolynomialSpec;
pub use poly::Polynomial;
pub use subordination::{
    check_subordination, evaluate_functional, nonvanishing_in_disk, sample_disk, DiskGrid, Functional, FunctionalKind,
    SampledFunctional, SubordinationReport,
};
