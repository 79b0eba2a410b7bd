//! Dense univariate polynomials with real coefficients, evaluated on the
//! complex plane.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

/// Coefficients in ascending order: `coeffs[k]` multiplies `z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// Degree ignoring trailing zero coefficients; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect();
        Polynomial { coeffs }
    }

    pub fn nth_derivative(&self, order: usize) -> Polynomial {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// All complex roots, located as eigenvalues of the companion matrix and
    /// refined by a few Newton steps on the original polynomial.
    ///
    /// The variable is rescaled first so that the constant and leading
    /// coefficients of the companion polynomial have unit modulus; without it
    /// Laguerre-type coefficients (which decay like `1/(k!)^2`) produce
    /// companion entries spanning dozens of orders of magnitude.
    ///
    /// Returns `None` for the zero polynomial. Constants have no roots.
    pub fn roots(&self) -> Option<Vec<Complex64>> {
        let deg = self.degree()?;
        if deg == 0 {
            return Some(Vec::new());
        }
        // Factor out roots at the origin.
        let low = self.coeffs.iter().position(|&c| c != 0.0).unwrap_or(0);
        let mut roots = vec![Complex64::new(0.0, 0.0); low];
        let reduced = &self.coeffs[low..=deg];
        let d = reduced.len() - 1;
        if d == 0 {
            return Some(roots);
        }

        let lead = reduced[d];
        let scale = (reduced[0] / lead).abs().powf(1.0 / d as f64);
        // Monic polynomial in u = z / scale: u^d + sum a_k u^k.
        let monic: Vec<f64> = (0..d).map(|k| reduced[k] / lead / scale.powi((d - k) as i32)).collect();

        let companion = DMatrix::from_fn(d, d, |i, j| {
            if j == d - 1 {
                -monic[i]
            } else if i == j + 1 {
                1.0
            } else {
                0.0
            }
        });
        let eig = match Schur::try_new(companion, f64::EPSILON, 10_000) {
            Some(schur) => schur.complex_eigenvalues(),
            None => return None,
        };

        let dp = self.derivative();
        for u in eig.iter() {
            let mut z = u * scale;
            for _ in 0..4 {
                let fz = self.eval(z);
                let dfz = dp.eval(z);
                if dfz.norm() == 0.0 {
                    break;
                }
                let step = fz / dfz;
                if !step.re.is_finite() || !step.im.is_finite() {
                    break;
                }
                z -= step;
                if step.norm() <= f64::EPSILON * z.norm() {
                    break;
                }
            }
            roots.push(z);
        }
        Some(roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn horner_matches_direct_sum() {
        let p = Polynomial::new(vec![1.0, -2.0, 0.5, 3.0]);
        let z = Complex64::new(0.3, -1.1);
        let direct: Complex64 = p.coeffs().iter().enumerate().map(|(k, &c)| z.powu(k as u32) * c).sum();
        assert_abs_diff_eq!((p.eval(z) - direct).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        assert!(Polynomial::new(vec![4.0]).derivative().is_zero());
        assert!(Polynomial::zero().roots().is_none());
    }

    #[test]
    fn roots_of_quadratic() {
        // (z - 2)(z + 0.5) = z^2 - 1.5z - 1
        let p = Polynomial::new(vec![-1.0, -1.5, 1.0]);
        let mut r: Vec<f64> = p.roots().unwrap().iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        assert_abs_diff_eq!(r[0], -0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(r[1], 2.0, epsilon = 1e-13);
    }

    #[test]
    fn roots_with_zero_and_complex_pair() {
        // z (z^2 + 1)
        let p = Polynomial::new(vec![0.0, 1.0, 0.0, 1.0]);
        let mut r = p.roots().unwrap();
        r.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert_abs_diff_eq!(r[0].im, -1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(r[1].norm(), 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(r[2].im, 1.0, epsilon = 1e-13);
    }
}
