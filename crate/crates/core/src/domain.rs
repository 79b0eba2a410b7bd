//! Target regions of the subordination classes, as membership predicates
//! with signed margins. All regions are open: boundary points are reported
//! outside with margin 0.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `(C, D)` with `-1 <= D < C <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JanowskiParams {
    c: f64,
    d: f64,
}

impl JanowskiParams {
    pub fn new(c: f64, d: f64) -> Result<Self> {
        if !(c.is_finite() && d.is_finite() && -1.0 <= d && d < c && c <= 1.0) {
            return Err(invalid(format!("Janowski parameters need -1 <= D < C <= 1, got C={c}, D={d}")));
        }
        Ok(JanowskiParams { c, d })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }
}

/// Sign of `D` in the Janowski denominator.
///
/// `PlusD` is `(1+Cz)/(1+Dz)`, the class definition; `MinusD` is
/// `(1+Cz)/(1-Dz)`, the form appearing in the convexity conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SignConvention {
    #[serde(rename = "plusD")]
    PlusD,
    #[serde(rename = "minusD")]
    MinusD,
}

impl SignConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            SignConvention::PlusD => "plusD",
            SignConvention::MinusD => "minusD",
        }
    }

    /// Coefficient `b` in `(1+Cz)/(1+bz)`.
    fn denominator_coeff(&self, d: f64) -> f64 {
        match self {
            SignConvention::PlusD => d,
            SignConvention::MinusD => -d,
        }
    }
}

impl std::fmt::Display for SignConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SignConvention {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plusD" | "plus" | "+" => Ok(SignConvention::PlusD),
            "minusD" | "minus" | "-" => Ok(SignConvention::MinusD),
            other => Err(invalid(format!("unknown sign convention {other:?}"))),
        }
    }
}

/// Image of the unit disk under a Janowski map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum JanowskiRegion {
    Disk {
        center: f64,
        radius: f64,
    },
    /// `Re w > threshold`
    HalfPlane {
        threshold: f64,
    },
    /// The map is the constant 1; nothing is strictly inside.
    Point,
}

impl JanowskiRegion {
    #[inline]
    pub fn margin(&self, w: Complex64) -> f64 {
        match *self {
            JanowskiRegion::Disk { center, radius } => {
                let dx = w.re - center;
                radius - (dx * dx + w.im * w.im).sqrt()
            }
            JanowskiRegion::HalfPlane { threshold } => w.re - threshold,
            JanowskiRegion::Point => -(w - 1.0).norm(),
        }
    }
}

/// Image of the unit disk under `(1 + a z)/(1 + b z)` for real `a != b`,
/// `|b| <= 1`, with `a > -1` whenever `b = -1`.
fn mobius_region(a: f64, b: f64) -> JanowskiRegion {
    if a == b {
        JanowskiRegion::Point
    } else if b == -1.0 {
        // w = -a + (1+a)/(1-z) and Re 1/(1-e^{iθ}) = 1/2.
        JanowskiRegion::HalfPlane { threshold: (1.0 - a) / 2.0 }
    } else if b == 1.0 {
        // w = a + (1-a)/(1+z); only a < 1 reaches here.
        JanowskiRegion::HalfPlane { threshold: (1.0 + a) / 2.0 }
    } else {
        let s = 1.0 - b * b;
        JanowskiRegion::Disk { center: (1.0 - a * b) / s, radius: (a - b).abs() / s }
    }
}

/// Region for `(1+Cz)/(1+Dz)`.
pub fn janowski_region(p: &JanowskiParams) -> JanowskiRegion {
    janowski_region_with(p, SignConvention::PlusD)
}

pub fn janowski_region_with(p: &JanowskiParams, convention: SignConvention) -> JanowskiRegion {
    mobius_region(p.c, convention.denominator_coeff(p.d))
}

/// Evaluates the Janowski map itself.
pub fn janowski_map(p: &JanowskiParams, convention: SignConvention, z: Complex64) -> Complex64 {
    (1.0 + p.c * z) / (1.0 + convention.denominator_coeff(p.d) * z)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub inside: bool,
    pub margin: f64,
}

impl MembershipVerdict {
    pub fn from_margin(margin: f64) -> Self {
        MembershipVerdict { inside: margin > 0.0, margin }
    }
}

/// Margin for `|Log w| < 1`; `w = 0` reports the sentinel margin `-1`.
#[inline]
pub fn exp_margin(w: Complex64) -> f64 {
    if w.re == 0.0 && w.im == 0.0 {
        return -1.0;
    }
    1.0 - w.ln().norm()
}

pub fn exp_domain_contains(w: Complex64) -> MembershipVerdict {
    MembershipVerdict::from_margin(exp_margin(w))
}

pub fn janowski_contains(p: &JanowskiParams, w: Complex64) -> MembershipVerdict {
    MembershipVerdict::from_margin(janowski_region(p).margin(w))
}

#[inline]
pub fn lemniscate_margin(w: Complex64) -> f64 {
    w.re.min(1.0 - (w * w - 1.0).norm())
}

/// Right loop of the lemniscate `|w^2 - 1| < 1, Re w > 0`.
pub fn lemniscate_contains(w: Complex64) -> MembershipVerdict {
    MembershipVerdict::from_margin(lemniscate_margin(w))
}

pub fn halfplane_contains(beta: f64, w: Complex64) -> MembershipVerdict {
    MembershipVerdict::from_margin(w.re - beta)
}

/// Univalent target of a subordination check. Every variant maps 0 to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TargetDomain {
    Exponential,
    Janowski { params: JanowskiParams, convention: SignConvention },
    Lemniscate,
    HalfPlane { beta: f64 },
}

impl TargetDomain {
    pub fn janowski(params: JanowskiParams) -> Self {
        TargetDomain::Janowski { params, convention: SignConvention::PlusD }
    }

    pub fn half_plane(beta: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&beta) {
            return Err(invalid(format!("half-plane level must satisfy 0 <= beta < 1, got {beta}")));
        }
        Ok(TargetDomain::HalfPlane { beta })
    }

    /// Boundary map `h` with `h(𝔻)` equal to this region.
    pub fn boundary_map(&self, z: Complex64) -> Complex64 {
        match *self {
            TargetDomain::Exponential => z.exp(),
            TargetDomain::Janowski { params, convention } => janowski_map(&params, convention, z),
            TargetDomain::Lemniscate => (1.0 + z).sqrt(),
            TargetDomain::HalfPlane { beta } => {
                janowski_map(&JanowskiParams { c: 1.0 - 2.0 * beta, d: -1.0 }, SignConvention::PlusD, z)
            }
        }
    }

    #[inline]
    pub fn margin(&self, w: Complex64) -> f64 {
        match *self {
            TargetDomain::Exponential => exp_margin(w),
            TargetDomain::Janowski { params, convention } => janowski_region_with(&params, convention).margin(w),
            TargetDomain::Lemniscate => lemniscate_margin(w),
            TargetDomain::HalfPlane { beta } => w.re - beta,
        }
    }

    pub fn contains(&self, w: Complex64) -> MembershipVerdict {
        MembershipVerdict::from_margin(self.margin(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{E, SQRT_2};

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn jp(c: f64, d: f64) -> JanowskiParams {
        JanowskiParams::new(c, d).unwrap()
    }

    #[test]
    fn janowski_param_validation() {
        assert!(JanowskiParams::new(0.5, 0.5).is_err());
        assert!(JanowskiParams::new(1.1, 0.0).is_err());
        assert!(JanowskiParams::new(0.0, -1.1).is_err());
        assert!(JanowskiParams::new(1.0, -1.0).is_ok());
    }

    #[test]
    fn exp_domain_examples() {
        let v = exp_domain_contains(re(1.0));
        assert!(v.inside);
        assert_eq!(v.margin, 1.0);
        let v = exp_domain_contains(re(E));
        assert!(!v.inside);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-15);
        let v = exp_domain_contains(Complex64::new(0.0, 0.5).exp());
        assert!(v.inside);
        assert_abs_diff_eq!(v.margin, 0.5, epsilon = 1e-15);
        let v = exp_domain_contains(re(0.0));
        assert!(!v.inside);
        assert_eq!(v.margin, -1.0);
    }

    #[test]
    fn janowski_region_examples() {
        assert_eq!(janowski_region(&jp(1.0, -1.0)), JanowskiRegion::HalfPlane { threshold: 0.0 });
        let beta = 0.3;
        match janowski_region(&jp(1.0 - 2.0 * beta, -1.0)) {
            JanowskiRegion::HalfPlane { threshold } => assert_abs_diff_eq!(threshold, beta, epsilon = 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(janowski_region(&jp(0.5, 0.0)), JanowskiRegion::Disk { center: 1.0, radius: 0.5 });
    }

    #[test]
    fn janowski_contains_examples() {
        let v = janowski_contains(&jp(1.0, -1.0), re(0.1));
        assert!(v.inside);
        assert_abs_diff_eq!(v.margin, 0.1, epsilon = 1e-15);
        let v = janowski_contains(&jp(0.5, 0.0), re(1.5));
        assert!(!v.inside);
        assert_eq!(v.margin, 0.0);
        let v = janowski_contains(&jp(0.5, -0.5), re(1.0));
        assert!(v.inside);
        assert_abs_diff_eq!(v.margin, 2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn minus_convention_regions() {
        // (1 + 0.5z)/(1 - 0.2z): center (1 + 0.1)/0.96, radius 0.7/0.96
        match janowski_region_with(&jp(0.5, 0.2), SignConvention::MinusD) {
            JanowskiRegion::Disk { center, radius } => {
                assert_abs_diff_eq!(center, 1.1 / 0.96, epsilon = 1e-15);
                assert_abs_diff_eq!(radius, 0.7 / 0.96, epsilon = 1e-15);
            }
            other => panic!("unexpected {other:?}"),
        }
        // (1 + 0.2z)/(1 + z): Re w > 0.6
        match janowski_region_with(&jp(0.2, -1.0), SignConvention::MinusD) {
            JanowskiRegion::HalfPlane { threshold } => assert_abs_diff_eq!(threshold, 0.6, epsilon = 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        // C = -D collapses the map to the constant 1.
        let region = janowski_region_with(&jp(0.3, -0.3), SignConvention::MinusD);
        assert_eq!(region, JanowskiRegion::Point);
        assert_eq!(region.margin(re(1.0)), 0.0);
    }

    #[test]
    fn lemniscate_examples() {
        let v = lemniscate_contains(re(1.0));
        assert!(v.inside);
        assert_eq!(v.margin, 1.0);
        let v = lemniscate_contains(re(SQRT_2));
        assert!(!v.inside);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-15);
        let v = lemniscate_contains(re(1.2));
        assert_abs_diff_eq!(v.margin, 0.56, epsilon = 1e-15);
    }

    #[test]
    fn halfplane_examples() {
        let v = halfplane_contains(0.0, Complex64::new(0.3, 1.0));
        assert!(v.inside);
        assert_eq!(v.margin, 0.3);
        let v = halfplane_contains(0.5, re(0.5));
        assert!(!v.inside);
        assert_eq!(v.margin, 0.0);
        assert_eq!(halfplane_contains(0.25, re(1.0)).margin, 0.75);
        assert!(TargetDomain::half_plane(1.0).is_err());
    }
}
