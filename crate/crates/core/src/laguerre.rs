//! Normalized Laguerre polynomials
//!
//! `M_{n,α}(z) = n!/(1+α)_n · L_n^{(α)}(z) = Σ_k (-1)^k n! / ((1+α)_k (n-k)! k!) z^k`,
//! normalized so that `M_{n,α}(0) = 1`. Everything here works on the exact
//! coefficient vector; derivatives are taken on coefficients, never by finite
//! differences.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::poly::Polynomial;

/// The pair `(n, α)` identifying `M_{n,α}`. Requires `α > -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolynomialSpec {
    degree: usize,
    alpha: f64,
}

impl PolynomialSpec {
    pub fn new(degree: usize, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -1.0 {
            return Err(invalid(format!("alpha must be finite and > -1, got {alpha}")));
        }
        Ok(PolynomialSpec { degree, alpha })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Coefficients of `M_{n,α}` as a polynomial.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(coefficients(self))
    }
}

/// Rising factorial `x (x+1) ... (x+k-1)` as an iterated product.
pub fn pochhammer(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (x + j as f64))
}

/// Coefficients `c_0..c_n` of `M_{n,α}` via `c_{k+1} = -c_k (n-k) / ((α+1+k)(k+1))`.
pub fn coefficients(spec: &PolynomialSpec) -> Vec<f64> {
    let n = spec.degree;
    let a1 = spec.alpha + 1.0;
    let mut c = Vec::with_capacity(n + 1);
    c.push(1.0);
    for k in 0..n {
        let next = -c[k] * (n - k) as f64 / ((a1 + k as f64) * (k + 1) as f64);
        c.push(next);
    }
    c
}

/// `derivative_order`-th derivative of `M_{n,α}` at `z`. Orders above the
/// degree give zero.
pub fn eval(spec: &PolynomialSpec, z: Complex64, derivative_order: usize) -> Complex64 {
    spec.polynomial().nth_derivative(derivative_order).eval(z)
}

/// `z M'' + (α+1-z) M' + n M`, which vanishes identically.
pub fn ode_residual(spec: &PolynomialSpec, z: Complex64) -> Complex64 {
    let p = spec.polynomial();
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let n = spec.degree as f64;
    z * d2.eval(z) + (spec.alpha + 1.0 - z) * d1.eval(z) + n * p.eval(z)
}

/// `M'_{n,α}(z) + n/(1+α) · M_{n-1,α+1}(z)`, which vanishes identically.
/// Defined only for degree ≥ 1.
pub fn derivative_identity_residual(spec: &PolynomialSpec, z: Complex64) -> Result<Complex64> {
    if spec.degree == 0 {
        return Err(invalid("derivative identity needs degree >= 1"));
    }
    let lowered = PolynomialSpec::new(spec.degree - 1, spec.alpha + 1.0)?;
    let n = spec.degree as f64;
    Ok(eval(spec, z, 1) + n / (1.0 + spec.alpha) * eval(&lowered, z, 0))
}

/// Terminating Kummer series `Σ_{k=0}^{n} (-n)_k / ((α+1)_k k!) z^k`.
///
/// Each term is formed from Pochhammer products directly rather than by the
/// term-ratio recurrence used in [`coefficients`], so the two routes share no
/// arithmetic.
pub fn hypergeometric_eval(n: usize, alpha: f64, z: Complex64) -> Result<Complex64> {
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(invalid(format!("alpha must be finite and > -1, got {alpha}")));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zk = Complex64::new(1.0, 0.0);
    for k in 0..=n {
        let term = pochhammer(-(n as f64), k) / (pochhammer(alpha + 1.0, k) * pochhammer(1.0, k));
        sum += zk * term;
        zk *= z;
    }
    Ok(sum)
}

/// Physicists' Hermite polynomial by `H_{k+1} = 2z H_k - 2k H_{k-1}`.
pub fn hermite(k: usize, z: Complex64) -> Complex64 {
    let mut prev = Complex64::new(1.0, 0.0);
    if k == 0 {
        return prev;
    }
    let mut cur = 2.0 * z;
    for j in 1..k {
        let next = 2.0 * z * cur - 2.0 * j as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(-1)^n n! / (2n)!`, computed as `(-1)^n / ((n+1)(n+2)...(2n))`.
pub fn hermite_prefactor(n: usize) -> f64 {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign / pochhammer((n + 1) as f64, n)
}

/// `M_{n,-1/2}(z^2) - (-1)^n n!/(2n)! · H_{2n}(z)`.
pub fn hermite_relation_residual(n: usize, z: Complex64) -> Complex64 {
    let spec = PolynomialSpec { degree: n, alpha: -0.5 };
    eval(&spec, z * z, 0) - hermite_prefactor(n) * hermite(2 * n, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec(n: usize, a: f64) -> PolynomialSpec {
        PolynomialSpec::new(n, a).unwrap()
    }

    #[test]
    fn rejects_alpha_at_or_below_minus_one() {
        assert!(PolynomialSpec::new(2, -1.0).is_err());
        assert!(PolynomialSpec::new(2, f64::NAN).is_err());
        assert!(PolynomialSpec::new(2, -0.999).is_ok());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coefficients(&spec(1, 3.0)), vec![1.0, -0.25]);
        assert_eq!(coefficients(&spec(0, 7.2)), vec![1.0]);
        let c24 = coefficients(&spec(2, 4.0));
        assert_eq!(c24[0], 1.0);
        assert_eq!(c24[1], -0.4);
        assert_abs_diff_eq!(c24[2], 1.0 / 30.0, epsilon = 1e-17);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(2.5, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert_eq!(pochhammer(0.5, 4), 6.5625);
    }

    #[test]
    fn eval_examples() {
        let v = eval(&spec(3, 5.0), c(1.0, 0.0), 0);
        assert_abs_diff_eq!(v.re, 191.0 / 336.0, epsilon = 1e-15);
        assert_eq!(v.im, 0.0);
        assert_eq!(eval(&spec(6, 0.7), c(0.0, 0.0), 0), c(1.0, 0.0));
        assert_eq!(eval(&spec(1, 3.0), c(0.0, 1.0), 1), c(-0.25, 0.0));
        // Past the degree every derivative vanishes.
        assert_eq!(eval(&spec(1, 3.0), c(0.3, 0.2), 2), c(0.0, 0.0));
    }

    #[test]
    fn ode_residual_examples() {
        assert_eq!(ode_residual(&spec(0, 2.3), c(0.7, -0.4)), c(0.0, 0.0));
        assert_abs_diff_eq!(ode_residual(&spec(1, 3.0), c(2.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        assert!(ode_residual(&spec(7, 0.3), c(0.5, 0.5)).norm() < 1e-10);
    }

    #[test]
    fn derivative_identity_examples() {
        assert!(derivative_identity_residual(&spec(0, 1.0), c(0.1, 0.0)).is_err());
        for z in [c(0.0, 0.0), c(5.0, -3.0), c(-0.2, 0.9)] {
            assert_eq!(derivative_identity_residual(&spec(1, 3.0), z).unwrap(), c(0.0, 0.0));
        }
        assert!(derivative_identity_residual(&spec(2, 0.0), c(1.0, 0.0)).unwrap().norm() < 1e-12);
        assert!(derivative_identity_residual(&spec(5, 2.5), c(0.0, 0.9)).unwrap().norm() < 1e-12);
    }

    #[test]
    fn hypergeometric_examples() {
        assert_eq!(hypergeometric_eval(2, 4.0, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let v = hypergeometric_eval(2, 4.0, c(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(v.re, 19.0 / 30.0, epsilon = 1e-15);
        let route = hypergeometric_eval(3, 5.0, c(2.0, 0.0)).unwrap();
        let direct = eval(&spec(3, 5.0), c(2.0, 0.0), 0);
        assert!((route - direct).norm() < 1e-13);
        assert!(hypergeometric_eval(2, -1.5, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_relation_residual(0, c(0.4, -1.3)), c(0.0, 0.0));
        assert_eq!(hermite_prefactor(4), 1.0 / (8.0 * 7.0 * 6.0 * 5.0));
        assert!(hermite_relation_residual(4, c(1.0, 0.0)).norm() < 1e-9);
        assert!(hermite_relation_residual(2, c(0.5, 0.0)).norm() < 1e-12);
        // H_3(z) = 8z^3 - 12z
        let z = c(0.3, 0.7);
        assert!((hermite(3, z) - (8.0 * z * z * z - 12.0 * z)).norm() < 1e-14);
    }
}
