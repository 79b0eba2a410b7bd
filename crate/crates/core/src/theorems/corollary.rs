//! Janowski starlikeness of `z·M_{n,α}` transferred from convexity of
//! `M_{n+1,α-1}` through `z(zM_{n,α})'/(zM_{n,α}) = 1 + zM''_{n+1,α-1}/M'_{n+1,α-1}`.

use num_complex::Complex64;

use super::thm2::{thm2_condition, Quadruple};
use super::verdict::{Clause, ConditionVerdict, Relation};
use crate::domain::{JanowskiParams, SignConvention, TargetDomain};
use crate::error::{invalid, Result};
use crate::laguerre::PolynomialSpec;
use crate::subordination::{
    check_subordination, evaluate_functional, DiskGrid, Functional, FunctionalKind, SubordinationReport,
};

const SHIFT_NOTE: &str = "convexity condition evaluated at (n+1, alpha-1), the pair for which the ratio identity holds";

fn shifted(n: usize, alpha: f64, p: &JanowskiParams) -> Result<Quadruple> {
    if !(alpha > 0.0) {
        return Err(invalid(format!("starlikeness transfer needs alpha > 0, got {alpha}")));
    }
    Quadruple::new(n + 1, alpha - 1.0, p.c(), p.d())
}

/// The convexity condition at `(n+1, α-1)`, with a note recording the shift.
pub fn corollary_starlike(n: usize, alpha: f64, p: &JanowskiParams, r_max: f64) -> Result<ConditionVerdict> {
    let q = shifted(n, alpha, p)?;
    let mut verdict = thm2_condition(&q, r_max)?;
    verdict.clauses.push(Clause::not_applicable("index-shift", Relation::Gt, SHIFT_NOTE));
    Ok(verdict)
}

/// `z(zM)'/(zM)` checked against the Janowski region.
pub fn corollary_empirical(
    n: usize,
    alpha: f64,
    p: &JanowskiParams,
    convention: SignConvention,
    grid: &DiskGrid,
) -> Result<SubordinationReport> {
    let f = Functional::with_prefactor_z(FunctionalKind::StarlikeRatio, PolynomialSpec::new(n, alpha)?);
    check_subordination(&f, &TargetDomain::Janowski { params: *p, convention }, grid)
}

/// Condition plus, when it holds, the empirical starlikeness check as an
/// extra clause.
pub fn corollary_check(
    n: usize,
    alpha: f64,
    p: &JanowskiParams,
    convention: SignConvention,
    r_max: f64,
    grid: &DiskGrid,
) -> Result<(ConditionVerdict, Option<SubordinationReport>)> {
    let verdict = corollary_starlike(n, alpha, p, r_max)?;
    if !verdict.holds {
        return Ok((verdict, None));
    }
    let report = corollary_empirical(n, alpha, p, convention, grid)?;
    let mut clauses = verdict.clauses;
    clauses.push(Clause::evaluate("empirical-starlike", report.worst_margin, Relation::Gt, 0.0));
    Ok((ConditionVerdict::from_clauses(clauses), Some(report)))
}

/// `z(zM_{n,α})'/(zM_{n,α}) - (1 + zM''_{n+1,α-1}/M'_{n+1,α-1})`.
pub fn corollary_identity_residual(n: usize, alpha: f64, z: Complex64) -> Result<Complex64> {
    if !(alpha > 0.0) {
        return Err(invalid(format!("starlikeness transfer needs alpha > 0, got {alpha}")));
    }
    let star = Functional::with_prefactor_z(FunctionalKind::StarlikeRatio, PolynomialSpec::new(n, alpha)?);
    let conv = Functional::new(FunctionalKind::ConvexityRatio, PolynomialSpec::new(n + 1, alpha - 1.0)?);
    Ok(evaluate_functional(&star, z)? - evaluate_functional(&conv, z)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre::eval;

    #[test]
    fn rejects_nonpositive_alpha() {
        let p = JanowskiParams::new(0.5, 0.0).unwrap();
        assert!(corollary_starlike(1, 0.0, &p, 1.0).is_err());
        assert!(corollary_identity_residual(1, 0.0, Complex64::new(0.1, 0.0)).is_err());
    }

    #[test]
    fn scaling_identity_between_m_and_shifted_derivative() {
        // z M_{n,α} = -(α/(n+1)) z M'_{n+1,α-1}
        let (n, alpha) = (3usize, 2.4);
        let m = PolynomialSpec::new(n, alpha).unwrap();
        let up = PolynomialSpec::new(n + 1, alpha - 1.0).unwrap();
        let z = Complex64::new(0.35, -0.6);
        let lhs = z * eval(&m, z, 0);
        let rhs = -(alpha / (n as f64 + 1.0)) * z * eval(&up, z, 1);
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn ratio_identity_residual_is_small() {
        for (n, alpha) in [(0usize, 0.5), (2, 1.0), (4, 7.5)] {
            for z in [Complex64::new(0.2, 0.1), Complex64::new(-0.7, 0.5)] {
                assert!(corollary_identity_residual(n, alpha, z).unwrap().norm() < 1e-12);
            }
        }
    }

    #[test]
    fn shift_note_and_vacuous_condition() {
        let p = JanowskiParams::new(0.5, -0.2).unwrap();
        let v = corollary_starlike(1, 3.0, &p, 1.0).unwrap();
        assert!(!v.holds);
        assert!(v.clause("index-shift").is_some());
        let (v, report) =
            corollary_check(1, 3.0, &p, SignConvention::PlusD, 1.0, &DiskGrid::new(0.9, 4, 16).unwrap()).unwrap();
        assert!(!v.holds);
        assert!(report.is_none());
    }
}
