//! Numerical probes of the boundary (admissibility) conditions behind the
//! exponential and positive-real-part subordination arguments, plus the
//! lemniscate boundary generators.
//!
//! Sampling uses a fixed Kronecker sequence, so every reported extremum is
//! reproducible.

use std::f64::consts::{FRAC_PI_4, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::thm1::{thm1_bound, thm1_condition};
use super::thm2::{Quadruple, ThirdOrderOde, Thm2Coefficients};
use crate::error::{invalid, Error, Result};
use crate::sequence::Kronecker;

/// `r = e^{e^{iθ}}`, `s = m e^{iθ} e^{e^{iθ}}`.
pub fn exponential_boundary(theta: f64, m: f64) -> (Complex64, Complex64) {
    let e_it = Complex64::from_polar(1.0, theta);
    let r = e_it.exp();
    (r, m * e_it * r)
}

/// `Re((s + t) e^{-iθ} e^{-e^{iθ}})`, required to be nonnegative.
pub fn exponential_constraint(theta: f64, s: Complex64, t: Complex64) -> f64 {
    let e_it = Complex64::from_polar(1.0, theta);
    ((s + t) / (e_it * e_it.exp())).re
}

/// `ψ(r, s, t; z) = t + (α+1-z)s + r n z`.
pub fn psi_exponential(n: usize, alpha: f64, r: Complex64, s: Complex64, t: Complex64, z: Complex64) -> Complex64 {
    t + (alpha + 1.0 - z) * s + r * n as f64 * z
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentialProbePoint {
    pub theta: f64,
    pub m: f64,
    pub z: Complex64,
    pub t: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentialProbe {
    pub min_abs_psi: f64,
    /// `(1/e)(α - 1 - n)`
    pub bound: f64,
    pub samples: usize,
    pub witness: ExponentialProbePoint,
}

pub const DEFAULT_M_MAX: f64 = 4.0;

pub fn admissibility_probe_exponential(n: usize, alpha: f64, samples: usize) -> Result<ExponentialProbe> {
    admissibility_probe_exponential_with(n, alpha, samples, DEFAULT_M_MAX)
}

/// Minimum of `|ψ|` over boundary data `(θ, m, z, t)`.
///
/// Even-indexed samples put `t` on the constraint boundary
/// `Re((s+t)e^{-iθ}e^{-e^{iθ}}) = 0`; odd-indexed ones add a nonnegative real
/// offset inside the admissible set.
pub fn admissibility_probe_exponential_with(
    n: usize,
    alpha: f64,
    samples: usize,
    m_max: f64,
) -> Result<ExponentialProbe> {
    if !thm1_condition(n, alpha)?.holds {
        return Err(Error::PreconditionViolated(format!(
            "exponential probe needs alpha > n + 1 (n = {n}, alpha = {alpha})"
        )));
    }
    if samples == 0 || !(m_max >= 1.0) {
        return Err(invalid("probe needs samples > 0 and m_max >= 1"));
    }
    let scale = alpha + n as f64 + 2.0;
    let v_max = 4.0 * m_max * scale;
    let seq = Kronecker::new(6);

    let mut best: Option<(f64, ExponentialProbePoint)> = None;
    for i in 0..samples {
        let u = seq.point(i);
        let theta = TAU * u[0];
        let m = 1.0 + (m_max - 1.0) * u[1];
        let z = Complex64::from_polar(u[2].sqrt(), TAU * u[3]);
        let v = v_max * (2.0 * u[4] - 1.0);
        let rho = if i % 2 == 0 { 0.0 } else { scale * u[5] };

        let (r, s) = exponential_boundary(theta, m);
        let e_it = Complex64::from_polar(1.0, theta);
        let t = Complex64::new(rho, v) * e_it * e_it.exp() - s;
        let val = psi_exponential(n, alpha, r, s, t, z).norm();
        if best.map_or(true, |(b, _)| val < b) {
            best = Some((val, ExponentialProbePoint { theta, m, z, t }));
        }
    }
    let (min_abs_psi, witness) = best.expect("samples > 0");
    Ok(ExponentialProbe { min_abs_psi, bound: thm1_bound(n, alpha), samples, witness })
}

/// `R(ρ) = G1σ - G2ρ² + G3ρ + G4` with `σ = -(1+ρ²)/2`.
pub fn caratheodory_r(g: &[f64; 4], rho: f64) -> f64 {
    let [g1, g2, g3, g4] = *g;
    -0.5 * ((g1 + 2.0 * g2) * rho * rho - 2.0 * g3 * rho + g1 - 2.0 * g4)
}

/// Maximizer `G3 / (G1 + 2G2)` of `R(ρ)`; requires `G1 + 2G2 > 0`.
pub fn caratheodory_vertex(g: &[f64; 4]) -> Option<f64> {
    let denom = g[0] + 2.0 * g[1];
    (denom > 0.0).then(|| g[2] / denom)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaratheodoryProbePoint {
    pub rho: f64,
    pub sigma: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaratheodoryProbe {
    /// Max of `G1σ - G2ρ² + G3ρ + G4` over the samples.
    pub max_re_psi: f64,
    pub argmax: CaratheodoryProbePoint,
    /// Max over sampled `(x, y)` of `R` at its vertex.
    pub max_at_vertex: f64,
    /// Max of `Re(F1σ + F2(iρ)² + F3(iρ) + F4)` over the same samples.
    pub max_re_psi_direct: f64,
    pub samples: usize,
}

/// Largest value of `Re ψ(iρ, σ; x+iy)` over `ρ ∈ ℝ`, `σ <= -(1+ρ²)/2`,
/// `x² + y² < 1`.
///
/// The callers are expected to have established the parameter-level clauses;
/// this only checks `G1 + 2G2 > 0` at every sampled `(x, y)`, which the vertex
/// argument needs.
pub fn admissibility_probe_caratheodory(q: &Quadruple, samples: usize) -> Result<CaratheodoryProbe> {
    if samples == 0 {
        return Err(invalid("probe needs samples > 0"));
    }
    let co = Thm2Coefficients::new(q);
    let seq = Kronecker::new(4);
    let pts: Vec<Vec<f64>> = (0..samples).map(|i| seq.point(i)).collect();

    let mut rho_span: f64 = 1.0;
    let mut max_at_vertex = f64::NEG_INFINITY;
    for u in &pts {
        let z = Complex64::from_polar(u[0].sqrt(), TAU * u[1]);
        let g = co.g(z.re, z.im);
        let Some(v) = caratheodory_vertex(&g) else {
            return Err(Error::PreconditionViolated(format!("G1 + 2G2 = {} <= 0 at z = {z}", g[0] + 2.0 * g[1])));
        };
        rho_span = rho_span.max(2.0 * v.abs() + 1.0);
        max_at_vertex = max_at_vertex.max(caratheodory_r(&g, v));
    }

    let mut max_re_psi = f64::NEG_INFINITY;
    let mut max_direct = f64::NEG_INFINITY;
    let mut argmax = CaratheodoryProbePoint { rho: 0.0, sigma: 0.0, x: 0.0, y: 0.0 };
    for (i, u) in pts.iter().enumerate() {
        let z = Complex64::from_polar(u[0].sqrt(), TAU * u[1]);
        let rho = rho_span * (2.0 * u[2] - 1.0);
        let edge = -(1.0 + rho * rho) / 2.0;
        let sigma = if i % 2 == 0 { edge } else { edge - u[3] * (1.0 + rho * rho) };

        let [g1, g2, g3, g4] = co.g(z.re, z.im);
        let val = g1 * sigma - g2 * rho * rho + g3 * rho + g4;
        if val > max_re_psi {
            max_re_psi = val;
            argmax = CaratheodoryProbePoint { rho, sigma, x: z.re, y: z.im };
        }

        let [f1, f2, f3, f4] = co.f(z, ThirdOrderOde::SignFlipped);
        let ir = Complex64::new(0.0, rho);
        max_direct = max_direct.max((f1 * sigma + f2 * ir * ir + f3 * ir + f4).re);
    }

    Ok(CaratheodoryProbe { max_re_psi, argmax, max_at_vertex, max_re_psi_direct: max_direct, samples })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemniscateBoundary {
    /// `sqrt(2 cos 2θ) e^{iθ}`
    pub r: Complex64,
    /// `m e^{3iθ} / (2 sqrt(2 cos 2θ))`
    pub s: Complex64,
    /// `3m² / (8 sqrt(2 cos 2θ))`, clamped to `f64::MAX` on overflow.
    pub threshold: f64,
}

pub fn admissibility_sample_lemniscate(theta: f64, m: f64) -> Result<LemniscateBoundary> {
    let c2 = (2.0 * theta).cos();
    if !(theta > -FRAC_PI_4 && theta < FRAC_PI_4) || !(c2 > 0.0) {
        return Err(invalid(format!("lemniscate boundary needs -pi/4 < theta < pi/4, got {theta}")));
    }
    if !(m >= 1.0) {
        return Err(invalid(format!("lemniscate boundary needs m >= 1, got {m}")));
    }
    let root = (2.0 * c2).sqrt();
    let r = Complex64::from_polar(root, theta);
    let s_mag = m / (2.0 * root);
    let s = Complex64::from_polar(if s_mag.is_finite() { s_mag } else { f64::MAX }, 3.0 * theta);
    let threshold = 3.0 * m * m / (8.0 * root);
    Ok(LemniscateBoundary { r, s, threshold: if threshold.is_finite() { threshold } else { f64::MAX } })
}
