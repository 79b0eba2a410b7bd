use std::f64::consts::E;

use super::verdict::{Clause, ConditionVerdict, Relation};
use crate::error::{invalid, Result};

/// Exponential subordination condition `(1/e)(α - 1 - n) > 0`, i.e. `α > n + 1`
/// for real `α`.
pub fn thm1_condition(n: usize, alpha: f64) -> Result<ConditionVerdict> {
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(invalid(format!("alpha must be finite and > -1, got {alpha}")));
    }
    let lhs = (alpha - 1.0 - n as f64) / E;
    Ok(ConditionVerdict::from_clauses(vec![Clause::evaluate(
        "exp-subordination:(alpha-1-n)/e>0",
        lhs,
        Relation::Gt,
        0.0,
    )]))
}

/// Lower bound on `|ψ|` that the admissibility argument establishes.
pub fn thm1_bound(n: usize, alpha: f64) -> f64 {
    (alpha - 1.0 - n as f64) / E
}
