//! Empirical subordination checks by image containment on a polar grid.
//!
//! Every target in [`TargetDomain`] is univalent with `h(0) = 1`, so `g ≺ h`
//! reduces to `g(0) = 1` and `g(𝔻) ⊂ h(𝔻)`. A `true` verdict is evidence on the
//! sampled points only.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domain::{JanowskiRegion, TargetDomain};
use crate::error::{invalid, Error, Result};
use crate::laguerre::PolynomialSpec;
use crate::poly::Polynomial;

/// Denominators smaller than this make a functional undefined at a point.
pub const DENOMINATOR_FLOOR: f64 = 1e-13;

/// Tolerance on `f(0) = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Half-width of the band around `|z| = r` in which a root is ambiguous.
pub const ROOT_GUARD_BAND: f64 = 1e-6;

/// Points `r_j e^{iθ_k}` with `r_j = r_max·j/n_radii` (`j = 1..=n_radii`) and
/// `θ_k = 2πk/n_angles`, radius-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskGrid {
    pub r_max: f64,
    pub n_radii: usize,
    pub n_angles: usize,
}

impl DiskGrid {
    pub const CANONICAL: DiskGrid = DiskGrid { r_max: 0.999, n_radii: 64, n_angles: 256 };

    pub fn new(r_max: f64, n_radii: usize, n_angles: usize) -> Result<Self> {
        let grid = DiskGrid { r_max, n_radii, n_angles };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_max > 0.0 && self.r_max < 1.0) {
            return Err(invalid(format!("grid radius must lie in (0, 1), got {}", self.r_max)));
        }
        if self.n_radii == 0 || self.n_angles == 0 {
            return Err(invalid("grid needs at least one radius and one angle"));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n_radii * self.n_angles
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        DiskGrid::CANONICAL
    }
}

/// Deterministic sample of the disk. Grids whose counts are multiples of
/// another's contain that grid's points bit-for-bit.
pub fn sample_disk(grid: &DiskGrid) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(grid.len());
    for j in 1..=grid.n_radii {
        let r = grid.r_max * (j as f64 / grid.n_radii as f64);
        for k in 0..grid.n_angles {
            let theta = TAU * (k as f64 / grid.n_angles as f64);
            pts.push(Complex64::from_polar(r, theta));
        }
    }
    pts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionalKind {
    /// `F(z)` itself.
    Identity,
    /// `z F'(z) / F(z)`
    StarlikeRatio,
    /// `1 + z F''(z) / F'(z)`
    ConvexityRatio,
}

/// A functional of `F = M_{n,α}` or, with `prefactor_z`, of `F = z·M_{n,α}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Functional {
    pub kind: FunctionalKind,
    pub base: PolynomialSpec,
    pub prefactor_z: bool,
}

impl Functional {
    pub fn new(kind: FunctionalKind, base: PolynomialSpec) -> Self {
        Functional { kind, base, prefactor_z: false }
    }

    pub fn with_prefactor_z(kind: FunctionalKind, base: PolynomialSpec) -> Self {
        Functional { kind, base, prefactor_z: true }
    }

    pub fn prepare(&self) -> PreparedFunctional {
        let m = self.base.polynomial();
        let m1 = m.derivative();
        let m2 = m1.derivative();
        PreparedFunctional { kind: self.kind, prefactor_z: self.prefactor_z, m, m1, m2 }
    }
}

/// [`Functional`] with the derivative polynomials precomputed.
#[derive(Debug, Clone)]
pub struct PreparedFunctional {
    kind: FunctionalKind,
    prefactor_z: bool,
    m: Polynomial,
    m1: Polynomial,
    m2: Polynomial,
}

impl PreparedFunctional {
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let undefined = || Error::UndefinedAtPoint { z };
        let value = match (self.kind, self.prefactor_z) {
            (FunctionalKind::Identity, false) => self.m.eval(z),
            (FunctionalKind::Identity, true) => z * self.m.eval(z),
            (FunctionalKind::StarlikeRatio, false) => {
                let f = self.m.eval(z);
                if f.norm() < DENOMINATOR_FLOOR {
                    return Err(undefined());
                }
                z * self.m1.eval(z) / f
            }
            (FunctionalKind::StarlikeRatio, true) => {
                // z(zM)'/(zM) = 1 + zM'/M
                let m = self.m.eval(z);
                if m.norm() < DENOMINATOR_FLOOR {
                    return Err(undefined());
                }
                1.0 + z * self.m1.eval(z) / m
            }
            (FunctionalKind::ConvexityRatio, false) => {
                let f1 = self.m1.eval(z);
                if f1.norm() < DENOMINATOR_FLOOR {
                    return Err(undefined());
                }
                1.0 + z * self.m2.eval(z) / f1
            }
            (FunctionalKind::ConvexityRatio, true) => {
                // F = zM, F' = M + zM', F'' = 2M' + zM''
                let m = self.m.eval(z);
                let m1 = self.m1.eval(z);
                let f1 = m + z * m1;
                if f1.norm() < DENOMINATOR_FLOOR {
                    return Err(undefined());
                }
                1.0 + z * (2.0 * m1 + z * self.m2.eval(z)) / f1
            }
        };
        if value.re.is_finite() && value.im.is_finite() {
            Ok(value)
        } else {
            Err(undefined())
        }
    }
}

pub fn evaluate_functional(f: &Functional, z: Complex64) -> Result<Complex64> {
    f.prepare().eval(z)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubordinationReport {
    pub verdict: bool,
    pub worst_margin: f64,
    /// Grid point attaining the worst margin, or the first undefined point.
    pub witness: Complex64,
    /// Functional value at the witness, when defined there.
    pub witness_value: Option<Complex64>,
    pub samples_checked: usize,
    pub undefined_points: usize,
}

/// Functional values on a fixed grid, reusable across target domains.
#[derive(Debug, Clone)]
pub struct SampledFunctional {
    points: Vec<Complex64>,
    values: Vec<Option<Complex64>>,
    undefined: usize,
    first_undefined: Option<Complex64>,
}

impl SampledFunctional {
    /// Evaluates `f` on the grid, checking `f(0) = 1` first.
    pub fn new(f: &Functional, grid: &DiskGrid) -> Result<Self> {
        grid.validate()?;
        let prepared = f.prepare();
        let at_zero = prepared.eval(Complex64::new(0.0, 0.0))?;
        if (at_zero - 1.0).norm() > NORMALIZATION_TOL {
            return Err(Error::NormalizationViolation { value: at_zero });
        }
        let points = sample_disk(grid);
        let values: Vec<Option<Complex64>> = points.par_iter().map(|&z| prepared.eval(z).ok()).collect();
        let undefined = values.iter().filter(|v| v.is_none()).count();
        let first_undefined = points.iter().zip(&values).find(|(_, v)| v.is_none()).map(|(z, _)| *z);
        Ok(SampledFunctional { points, values, undefined, first_undefined })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn undefined_points(&self) -> usize {
        self.undefined
    }

    pub fn report(&self, domain: &TargetDomain) -> SubordinationReport {
        match *domain {
            TargetDomain::Janowski { params, convention } => {
                let region: JanowskiRegion = crate::domain::janowski_region_with(&params, convention);
                self.reduce(|w| region.margin(w))
            }
            _ => self.reduce(|w| domain.margin(w)),
        }
    }

    /// Minimum margin over defined samples; ties go to the lexicographically
    /// smallest `(re, im)` witness so the result does not depend on order.
    fn reduce(&self, margin: impl Fn(Complex64) -> f64) -> SubordinationReport {
        let mut worst = f64::MAX;
        let mut witness: Option<(Complex64, Complex64)> = None;
        for (z, v) in self.points.iter().zip(&self.values) {
            let Some(w) = *v else { continue };
            let m = margin(w);
            let better = match witness {
                None => true,
                Some((wz, _)) => m < worst || (m == worst && (z.re, z.im) < (wz.re, wz.im)),
            };
            if better {
                worst = m;
                witness = Some((*z, w));
            }
        }
        let (witness, witness_value) = match (self.first_undefined, witness) {
            (Some(z), _) => (z, None),
            (None, Some((z, w))) => (z, Some(w)),
            (None, None) => (Complex64::new(0.0, 0.0), None),
        };
        SubordinationReport {
            verdict: self.undefined == 0 && worst > 0.0,
            worst_margin: worst,
            witness,
            witness_value,
            samples_checked: self.points.len(),
            undefined_points: self.undefined,
        }
    }
}

pub fn check_subordination(f: &Functional, domain: &TargetDomain, grid: &DiskGrid) -> Result<SubordinationReport> {
    Ok(SampledFunctional::new(f, grid)?.report(domain))
}

/// Smallest root modulus of the `order`-th derivative of `M_{n,α}`.
///
/// `Ok(None)` means the derivative is a nonzero constant; an identically zero
/// derivative reports modulus 0 since it vanishes everywhere.
pub fn min_root_modulus(spec: &PolynomialSpec, order: usize) -> Result<Option<f64>> {
    let p = spec.polynomial().nth_derivative(order);
    if p.is_zero() {
        return Ok(Some(0.0));
    }
    let roots = p.roots().ok_or_else(|| invalid("companion eigenvalue iteration did not converge"))?;
    Ok(roots.iter().map(|z| z.norm()).min_by(f64::total_cmp))
}

/// Whether the `order`-th derivative of `M_{n,α}` has no zero in `|z| <= r_max`.
///
/// Fails with [`Error::AmbiguousRoot`] when a root lies within
/// [`ROOT_GUARD_BAND`] of the circle `|z| = r_max`.
pub fn nonvanishing_in_disk(spec: &PolynomialSpec, derivative_order: usize, r_max: f64) -> Result<bool> {
    let p = spec.polynomial().nth_derivative(derivative_order);
    if p.is_zero() {
        return Ok(false);
    }
    let roots = p.roots().ok_or_else(|| invalid("companion eigenvalue iteration did not converge"))?;
    let mut ok = true;
    for z in roots {
        let modulus = z.norm();
        if (modulus - r_max).abs() <= ROOT_GUARD_BAND {
            return Err(Error::AmbiguousRoot { modulus, radius: r_max });
        }
        if modulus < r_max {
            ok = false;
        }
    }
    Ok(ok)
}
