//! Janowski convexity of `M_{n,α}`: every intermediate quantity of the
//! sufficient condition, plus an audit of the first-order equation that `q`
//! is claimed to satisfy.
//!
//! Notation: `K = C - D`. With
//! `q = (Kφ' + (1-D)zφ'') / (Kφ' - (1+D)zφ'')` and `φ = M_{n,α}`, the
//! convexity functional is `1 + zφ''/φ' = 1 + K(q-1)/((1+D)q + (1-D))`, and `q`
//! solves `F1·zq' + F2·q² + F3·q + F4 = 0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::verdict::{Clause, ConditionVerdict, Relation};
use crate::domain::JanowskiParams;
use crate::error::{invalid, Error, Result};
use crate::laguerre::PolynomialSpec;
use crate::subordination::{min_root_modulus, nonvanishing_in_disk, DENOMINATOR_FLOOR};

/// `(n, α, C, D)` with `n >= 1`, `α > -1`, `-1 <= D < C <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadruple {
    pub spec: PolynomialSpec,
    pub janowski: JanowskiParams,
}

impl Quadruple {
    pub fn new(n: usize, alpha: f64, c: f64, d: f64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("Janowski convexity needs degree n >= 1"));
        }
        Ok(Quadruple { spec: PolynomialSpec::new(n, alpha)?, janowski: JanowskiParams::new(c, d)? })
    }

    pub fn n(&self) -> usize {
        self.spec.degree()
    }

    pub fn alpha(&self) -> f64 {
        self.spec.alpha()
    }

    pub fn c(&self) -> f64 {
        self.janowski.c()
    }

    pub fn d(&self) -> f64 {
        self.janowski.d()
    }
}

/// Coefficient of `φ'` in the third-order equation `zφ''' + (α+2-z)φ'' + c·φ' = 0`
/// from which `F2..F4` are assembled.
///
/// `SignFlipped` uses `c = -(n+1)`, from differentiating
/// `zφ'' + (α+1-z)φ' - nφ = 0`; the `F` coefficients default to it.
/// `FromLaguerreEquation` uses `c = n - 1`, obtained by differentiating the
/// equation `M_{n,α}` actually satisfies, `zφ'' + (α+1-z)φ' + nφ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThirdOrderOde {
    SignFlipped,
    FromLaguerreEquation,
}

impl ThirdOrderOde {
    fn linear_coeff(self, n: usize) -> f64 {
        match self {
            ThirdOrderOde::SignFlipped => -(n as f64 + 1.0),
            ThirdOrderOde::FromLaguerreEquation => n as f64 - 1.0,
        }
    }
}

/// Scalar pieces of the sufficient condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thm2Coefficients {
    pub k: f64,
    pub a: f64,
    pub b: f64,
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    /// `-h2 / (2 h1)`, absent when `h1 = 0`.
    pub nu: Option<f64>,
    n: usize,
    alpha: f64,
    d: f64,
}

impl Thm2Coefficients {
    pub fn new(q: &Quadruple) -> Self {
        let (n, alpha, c, d) = (q.n(), q.alpha(), q.c(), q.d());
        let k = c - d;
        let n1 = n as f64 + 1.0;
        let (p, m) = (1.0 + d, 1.0 - d);

        // H(x) = [u0 + u1 x][v0 + v1 x]
        let u0 = k + k * k + k * p * (alpha + 1.0);
        let u1 = -k * p - n1 * p * p;
        let v0 = k - k * k + k * m * (alpha + 1.0);
        let v1 = -k * m + n1 * m * m;

        let h1 = u1 * v1;
        let h2 = u0 * v1 + u1 * v0;
        let h3 = u0 * v0;
        let nu = if h1 != 0.0 { Some(-h2 / (2.0 * h1)) } else { None };

        Thm2Coefficients {
            k,
            a: k * k + d * k * (alpha + 1.0),
            b: n1 * (1.0 - d * d) - d * k,
            h1,
            h2,
            h3,
            nu,
            n,
            alpha,
            d,
        }
    }

    /// `F1..F4` at `z` under the chosen third-order equation.
    pub fn f(&self, z: Complex64, ode: ThirdOrderOde) -> [Complex64; 4] {
        let (k, d, alpha) = (self.k, self.d, self.alpha);
        let c = ode.linear_coeff(self.n);
        let w = alpha + 1.0 - z;
        let f1 = Complex64::new(2.0 * k, 0.0);
        let f2 = k * k + k * (1.0 + d) * w + c * z * (1.0 + d) * (1.0 + d);
        let f3 = -2.0 * k * k - 2.0 * d * k * w + 2.0 * c * z * (1.0 - d * d);
        let f4 = k * k - k * (1.0 - d) * w + c * z * (1.0 - d) * (1.0 - d);
        [f1, f2, f3, f4]
    }

    /// `G1..G4` in closed form, with `x = Re z`, `y = Im z`.
    pub fn g(&self, x: f64, y: f64) -> [f64; 4] {
        let (k, d, alpha) = (self.k, self.d, self.alpha);
        let n1 = self.n as f64 + 1.0;
        let g1 = 2.0 * k;
        let g2 = k * k + k * (1.0 + d) * (alpha + 1.0 - x) - n1 * x * (1.0 + d) * (1.0 + d);
        let g3 = -2.0 * k * k - 2.0 * d * k * (alpha + 1.0 + y) + 2.0 * n1 * y * (1.0 - d * d);
        let g4 = k * k - k * (1.0 - d) * (alpha + 1.0 - x) - n1 * x * (1.0 - d) * (1.0 - d);
        [g1, g2, g3, g4]
    }

    /// The two bracketed factors of `H(x)`, written out without expansion.
    pub fn h_factors(&self, x: f64) -> (f64, f64) {
        let (k, d, alpha) = (self.k, self.d, self.alpha);
        let n1 = self.n as f64 + 1.0;
        let first = k + k * k + k * (1.0 + d) * (alpha + 1.0 - x) - n1 * x * (1.0 + d) * (1.0 + d);
        let second = k - k * k + k * (1.0 - d) * (alpha + 1.0 - x) + n1 * x * (1.0 - d) * (1.0 - d);
        (first, second)
    }

    /// `h1 x² + h2 x + h3`
    pub fn h_poly(&self, x: f64) -> f64 {
        (self.h1 * x + self.h2) * x + self.h3
    }

    /// `L(y) = -K² - DK(α+1+y) + (n+1)y(1-D²)`
    pub fn l_of_y(&self, y: f64) -> f64 {
        let (k, d) = (self.k, self.d);
        -k * k - d * k * (self.alpha + 1.0 + y) + (self.n as f64 + 1.0) * y * (1.0 - d * d)
    }

    /// `max{[-K² - DK(α+2) + (n+1)(1-D²)]², [K² + DKα + (n+1)(1-D²)]²}`
    pub fn l_max_sq(&self) -> f64 {
        let (k, d, alpha) = (self.k, self.d, self.alpha);
        let n1 = self.n as f64 + 1.0;
        let at_plus = -k * k - d * k * (alpha + 2.0) + n1 * (1.0 - d * d);
        let at_minus = k * k + d * k * alpha + n1 * (1.0 - d * d);
        (at_plus * at_plus).max(at_minus * at_minus)
    }

    /// `(C-D)(1+D) + (n+1)(1+D)²`, whose sign picks the required inequality.
    pub fn branch_selector(&self) -> f64 {
        let p = 1.0 + self.d;
        self.k * p + (self.n as f64 + 1.0) * p * p
    }

    /// Left side of the inequality required when the selector is positive.
    pub fn positive_branch_lhs(&self) -> f64 {
        let (k, p) = (self.k, 1.0 + self.d);
        2.0 * k + 2.0 * k * k + k * p * self.alpha - (self.n as f64 + 1.0) * p * p
    }

    /// Left side of the inequality required when the selector is negative.
    pub fn negative_branch_lhs(&self) -> f64 {
        let (k, p) = (self.k, 1.0 + self.d);
        2.0 * k + 2.0 * k * k + k * p * (self.alpha + 2.0) + (self.n as f64 + 1.0) * p * p
    }
}

pub fn thm2_f(q: &Quadruple, z: Complex64) -> [Complex64; 4] {
    Thm2Coefficients::new(q).f(z, ThirdOrderOde::SignFlipped)
}

pub fn thm2_g(q: &Quadruple, x: f64, y: f64) -> [f64; 4] {
    Thm2Coefficients::new(q).g(x, y)
}

pub fn thm2_h(q: &Quadruple) -> (f64, f64, f64) {
    let c = Thm2Coefficients::new(q);
    (c.h1, c.h2, c.h3)
}

/// The parameter-only clauses, evaluated in order and all reported.
pub fn thm2_algebraic_clauses(q: &Quadruple) -> Vec<Clause> {
    let co = Thm2Coefficients::new(q);
    let mut clauses = vec![Clause::evaluate("h1>0", co.h1, Relation::Gt, 0.0)];

    let selector = co.branch_selector();
    if selector > 0.0 {
        clauses.push(Clause::evaluate("branch+:coefficient>0", co.positive_branch_lhs(), Relation::Gt, 0.0));
    } else if selector < 0.0 {
        clauses.push(Clause::evaluate("branch-:coefficient>0", co.negative_branch_lhs(), Relation::Gt, 0.0));
    } else {
        clauses.push(Clause::not_applicable(
            "branch-selector",
            Relation::Gt,
            "(C-D)(1+D)+(n+1)(1+D)^2 = 0: no coefficient inequality selected",
        ));
    }

    let lmax = co.l_max_sq();
    match co.nu {
        Some(nu) if nu.abs() < 1.0 => {
            clauses.push(
                Clause::evaluate("interior-min", lmax, Relation::Lt, co.h3 - co.h2 * co.h2 / (4.0 * co.h1))
                    .with_note(format!("nu = {nu} in (-1, 1)")),
            );
        }
        Some(nu) => {
            clauses.push(
                Clause::evaluate("monotone-premise:2h1+h2<=0", 2.0 * co.h1 + co.h2, Relation::Le, 0.0)
                    .with_note(format!("nu = {nu}; H is decreasing on [-1, 1] only when 2h1+h2 <= 0")),
            );
            clauses.push(Clause::evaluate("endpoint-min", lmax, Relation::Lt, co.h1 + co.h2 + co.h3));
        }
        None => {
            clauses.push(Clause::not_applicable("extremal-analysis", Relation::Lt, "h1 = 0: nu = -h2/(2h1) undefined"))
        }
    }
    clauses
}

/// Clause for `0 ∉ M^{(order)}(|z| <= r_max)`.
pub fn nonvanishing_clause(spec: &PolynomialSpec, order: usize, r_max: f64) -> Result<Clause> {
    let name = match order {
        0 => "nonvanishing:M",
        1 => "nonvanishing:M'",
        2 => "nonvanishing:M''",
        _ => "nonvanishing:M^(k)",
    };
    let ok = nonvanishing_in_disk(spec, order, r_max)?;
    let modulus = min_root_modulus(spec, order)?;
    let mut clause = Clause {
        name: name.to_string(),
        lhs: modulus,
        relation: Relation::Gt,
        rhs: Some(r_max),
        status: if ok { super::verdict::ClauseStatus::Satisfied } else { super::verdict::ClauseStatus::Violated },
        note: None,
    };
    if modulus.is_none() {
        clause.note = Some("derivative is a nonzero constant".into());
    }
    Ok(clause)
}

/// Full sufficient condition: algebraic clauses plus nonvanishing of `M'` and
/// `M''` on `|z| <= r_max`.
pub fn thm2_condition(q: &Quadruple, r_max: f64) -> Result<ConditionVerdict> {
    let mut clauses = thm2_algebraic_clauses(q);
    clauses.push(nonvanishing_clause(&q.spec, 1, r_max)?);
    clauses.push(nonvanishing_clause(&q.spec, 2, r_max)?);
    Ok(ConditionVerdict::from_clauses(clauses))
}

/// `q(z)` and `q'(z)` from their definition in terms of `φ = M_{n,α}`.
pub fn q_and_derivative(q: &Quadruple, z: Complex64) -> Result<(Complex64, Complex64)> {
    let p = q.spec.polynomial();
    let p1 = p.derivative();
    let p2 = p1.derivative();
    let p3 = p2.derivative();
    let (d1, d2, d3) = (p1.eval(z), p2.eval(z), p3.eval(z));
    let (k, d) = (q.c() - q.d(), q.d());

    let num = k * d1 + (1.0 - d) * z * d2;
    let den = k * d1 - (1.0 + d) * z * d2;
    if den.norm() < DENOMINATOR_FLOOR {
        return Err(Error::UndefinedAtPoint { z });
    }
    let num_d = k * d2 + (1.0 - d) * (d2 + z * d3);
    let den_d = k * d2 - (1.0 + d) * (d2 + z * d3);
    let qv = num / den;
    let qd = (num_d * den - num * den_d) / (den * den);
    Ok((qv, qd))
}

/// `F1·zq' + F2·q² + F3·q + F4` with the `SignFlipped` coefficients.
pub fn thm2_q_residual(q: &Quadruple, z: Complex64) -> Result<Complex64> {
    thm2_q_residual_with(q, z, ThirdOrderOde::SignFlipped)
}

pub fn thm2_q_residual_with(q: &Quadruple, z: Complex64, ode: ThirdOrderOde) -> Result<Complex64> {
    let (qv, qd) = q_and_derivative(q, z)?;
    let [f1, f2, f3, f4] = Thm2Coefficients::new(q).f(z, ode);
    Ok(f1 * z * qd + f2 * qv * qv + f3 * qv + f4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn quad(n: usize, a: f64, c: f64, d: f64) -> Quadruple {
        Quadruple::new(n, a, c, d).unwrap()
    }

    fn cz(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn degree_zero_is_rejected() {
        assert!(Quadruple::new(0, 1.0, 0.5, 0.0).is_err());
    }

    #[test]
    fn f_examples() {
        let q = quad(3, 1.7, 0.4, -0.3);
        let k = 0.7;
        let [f1, f2, _, _] = thm2_f(&q, cz(0.0, 0.0));
        assert_abs_diff_eq!(f2.re, k * k + k * 0.7 * 2.7, epsilon = 1e-14);
        assert_eq!(f2.im, 0.0);
        assert_eq!(f1, cz(2.0 * k, 0.0));
        assert_eq!(thm2_f(&q, cz(0.5, -0.2))[0], f1);

        let q = quad(2, 4.0, 1.0, -1.0);
        for z in [cz(0.0, 0.0), cz(0.3, 0.4), cz(-0.8, 0.1)] {
            assert_eq!(thm2_f(&q, z)[1], cz(4.0, 0.0));
        }
    }

    #[test]
    fn g_examples() {
        let q = quad(1, 2.0, 1.0, 0.0);
        let g = thm2_g(&q, 0.0, 0.3);
        assert_eq!(g[0], 2.0);
        assert_eq!(g[1], 4.0);
        let q = quad(2, 1.5, 0.6, 0.0);
        assert_abs_diff_eq!(thm2_g(&q, 0.2, 0.0)[2], -2.0 * 0.36, epsilon = 1e-15);
    }

    #[test]
    fn g_relates_to_real_part_of_f() {
        let q = quad(3, 2.2, 0.7, -0.4);
        let co = Thm2Coefficients::new(&q);
        let (x, y) = (0.3, -0.5);
        let [f1, f2, _, f4] = co.f(cz(x, y), ThirdOrderOde::SignFlipped);
        let [g1, g2, _, g4] = co.g(x, y);
        assert_abs_diff_eq!(g1, f1.re, epsilon = 1e-14);
        assert_abs_diff_eq!(g2, f2.re, epsilon = 1e-14);
        assert_abs_diff_eq!(g4, f4.re, epsilon = 1e-14);
    }

    #[test]
    fn h_examples() {
        let (h1, _, h3) = thm2_h(&quad(1, 5.0, 0.5, 0.0));
        assert_abs_diff_eq!(h1, -3.75, epsilon = 1e-14);
        assert_abs_diff_eq!(h3, 12.1875, epsilon = 1e-13);
        let (h1, _, _) = thm2_h(&quad(2, 3.0, 1.0, -1.0));
        assert_eq!(h1, 0.0);
    }

    #[test]
    fn h_polynomial_reproduces_product_and_g_brackets() {
        let q = quad(2, 3.5, 0.3, -0.6);
        let co = Thm2Coefficients::new(&q);
        for x in [-0.9, -0.2, 0.0, 0.55, 0.95] {
            let (a, b) = co.h_factors(x);
            assert_abs_diff_eq!(co.h_poly(x), a * b, epsilon = 1e-12);
            let [g1, g2, _, g4] = co.g(x, 0.0);
            assert_abs_diff_eq!(g1 + 2.0 * g2, 2.0 * a, epsilon = 1e-12);
            assert_abs_diff_eq!(g1 - 2.0 * g4, 2.0 * b, epsilon = 1e-12);
        }
    }

    #[test]
    fn l_extremes_match_a_and_b() {
        let q = quad(3, 0.8, 0.9, 0.1);
        let co = Thm2Coefficients::new(&q);
        for y in [-0.7, 0.0, 0.4] {
            assert_abs_diff_eq!(co.l_of_y(y), -co.a + co.b * y, epsilon = 1e-13);
        }
        let via_ab = (co.b - co.a).powi(2).max((co.a + co.b).powi(2));
        assert_abs_diff_eq!(co.l_max_sq(), via_ab, epsilon = 1e-12);
        assert_abs_diff_eq!(co.k, 0.8, epsilon = 1e-15);
    }

    #[test]
    fn condition_collapses_at_d_minus_one() {
        let v = thm2_condition(&quad(2, 3.0, 1.0, -1.0), 1.0).unwrap();
        assert!(!v.holds);
        assert!(v.clause("h1>0").unwrap().is_violated());
        assert_eq!(v.clause("branch-selector").unwrap().status, super::super::verdict::ClauseStatus::NotApplicable);
        assert!(v.clause("extremal-analysis").is_some());
    }

    #[test]
    fn condition_fails_on_negative_h1() {
        let v = thm2_condition(&quad(1, 5.0, 0.5, 0.0), 1.0).unwrap();
        assert!(!v.holds);
        let h1 = v.clause("h1>0").unwrap();
        assert_abs_diff_eq!(h1.lhs.unwrap(), -3.75, epsilon = 1e-14);
        assert!(h1.is_violated());
        // M'' ≡ 0 for n = 1.
        assert!(v.clause("nonvanishing:M''").unwrap().is_violated());
        assert!(v.clause("branch+:coefficient>0").is_some());
    }

    #[test]
    fn residual_vanishes_at_origin() {
        for (n, a, c, d) in [(2, 3.0, 0.5, 0.2), (4, 0.1, 1.0, -0.9), (1, 4.0, 1.0, 0.0)] {
            let q = quad(n, a, c, d);
            let (qv, _) = q_and_derivative(&q, cz(0.0, 0.0)).unwrap();
            assert_abs_diff_eq!((qv - 1.0).norm(), 0.0, epsilon = 1e-15);
            for ode in [ThirdOrderOde::SignFlipped, ThirdOrderOde::FromLaguerreEquation] {
                assert!(thm2_q_residual_with(&q, cz(0.0, 0.0), ode).unwrap().norm() < 1e-13);
            }
        }
    }

    #[test]
    fn corrected_equation_annihilates_q() {
        for (n, a, c, d, z) in
            [(2, 3.0, 0.5, 0.2, cz(0.3, 0.1)), (1, 4.0, 1.0, 0.0, cz(-0.4, 0.0)), (5, 1.3, 0.9, -0.7, cz(-0.2, 0.6))]
        {
            let r = thm2_q_residual_with(&quad(n, a, c, d), z, ThirdOrderOde::FromLaguerreEquation).unwrap();
            assert!(r.norm() < 1e-8, "{r}");
        }
    }

    #[test]
    fn sign_flipped_equation_misses_by_closed_form() {
        // Switching c from n-1 to -(n+1) adds -2n·z·A² with A = (1+D)q + (1-D).
        for (n, a, c, d, z) in
            [(2, 3.0, 0.5, 0.2, cz(0.3, 0.1)), (1, 4.0, 1.0, 0.0, cz(-0.4, 0.0)), (3, 0.5, 0.2, -0.5, cz(0.1, -0.7))]
        {
            let q = quad(n, a, c, d);
            let (qv, _) = q_and_derivative(&q, z).unwrap();
            let big_a = (1.0 + d) * qv + (1.0 - d);
            let expected = -2.0 * n as f64 * z * big_a * big_a;
            let r = thm2_q_residual(&q, z).unwrap();
            assert!((r - expected).norm() < 1e-10, "{r} vs {expected}");
        }
        // n = 1: q ≡ 1, so the residual is -8z.
        let r = thm2_q_residual(&quad(1, 4.0, 1.0, 0.0), cz(-0.4, 0.0)).unwrap();
        assert_abs_diff_eq!(r.re, 3.2, epsilon = 1e-14);
    }
}
