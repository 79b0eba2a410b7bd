use laguerre_gft::theorems::{
    admissibility_probe_exponential, caratheodory_r, caratheodory_vertex, corollary_identity_residual, thm1_condition,
    thm2_algebraic_clauses, thm2_h, thm2_q_residual, thm2_q_residual_with, Quadruple, ThirdOrderOde, Thm2Coefficients,
};
use laguerre_gft::{
    check_subordination, Complex64, DiskGrid, Functional, FunctionalKind, PolynomialSpec, TargetDomain,
};
use proptest::prelude::*;

fn quadruple() -> impl Strategy<Value = Quadruple> {
    (1usize..9, -0.9..12.0f64, -0.95..1.0f64, 0.0..1.0f64).prop_filter_map("D < C", |(n, a, c, t)| {
        let d = -0.99 + t * (c + 0.99);
        (d < c).then(|| Quadruple::new(n, a, c, d).ok()).flatten()
    })
}

fn disk_point() -> impl Strategy<Value = Complex64> {
    (0.0..0.95f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

#[test]
fn thm1_sound_on_canonical_grid() {
    let mut worst = f64::MAX;
    for n in 0..=8 {
        for k in 1..=20 {
            let alpha = n as f64 + 1.0 + 0.25 * k as f64;
            assert!(thm1_condition(n, alpha).unwrap().holds);
            let f = Functional::new(FunctionalKind::Identity, PolynomialSpec::new(n, alpha).unwrap());
            let r = check_subordination(&f, &TargetDomain::Exponential, &DiskGrid::CANONICAL).unwrap();
            assert!(r.verdict, "n={n} alpha={alpha}: {r:?}");
            worst = worst.min(r.worst_margin);
        }
    }
    assert!(worst > 0.1, "{worst}");
}

#[test]
fn exponential_probe_respects_bound() {
    for (n, a) in [(1, 3.0), (0, 1.5), (2, 6.0), (4, 5.5)] {
        let p = admissibility_probe_exponential(n, a, 4000).unwrap();
        assert!(p.min_abs_psi > p.bound - 1e-6, "({n}, {a}): {} vs {}", p.min_abs_psi, p.bound);
    }
}

proptest! {
    #[test]
    fn ode_consistent_q_equation_vanishes(q in quadruple(), z in disk_point()) {
        if let Ok(r) = thm2_q_residual_with(&q, z, ThirdOrderOde::FromLaguerreEquation) {
            let (qv, _) = laguerre_gft::theorems::q_and_derivative(&q, z).unwrap();
            let scale = 1.0 + qv.norm().powi(2) * (q.n() as f64 + q.alpha().abs() + 1.0).powi(2);
            prop_assert!(r.norm() < 1e-8 * scale, "{r}");
        }
    }

    #[test]
    fn sign_flipped_equation_misses_by_two_n_z_a_squared(q in quadruple(), z in disk_point()) {
        if let Ok(r) = thm2_q_residual(&q, z) {
            let (qv, _) = laguerre_gft::theorems::q_and_derivative(&q, z).unwrap();
            let d = q.d();
            let a = (1.0 + d) * qv + (1.0 - d);
            let expected = -2.0 * q.n() as f64 * z * a * a;
            let scale = 1.0 + a.norm_sqr() * (q.n() as f64 + q.alpha().abs() + 1.0).powi(2);
            prop_assert!((r - expected).norm() < 1e-8 * scale);
        }
    }

    #[test]
    fn h1_is_never_positive(q in quadruple()) {
        let (h1, _, _) = thm2_h(&q);
        prop_assert!(h1 <= 0.0);
        let clauses = thm2_algebraic_clauses(&q);
        prop_assert_eq!(clauses[0].name.as_str(), "h1>0");
        prop_assert!(clauses[0].is_violated());
    }

    #[test]
    fn corollary_identity(n in 0usize..10, alpha in 0.01..12.0f64, z in disk_point()) {
        let m = laguerre_gft::laguerre::eval(&PolynomialSpec::new(n, alpha).unwrap(), z, 0);
        prop_assume!(m.norm() > 1e-8);
        if let Ok(r) = corollary_identity_residual(n, alpha, z) {
            prop_assert!(r.norm() < 1e-10 * (1.0 + 1.0 / m.norm()), "{r}");
        }
    }

    #[test]
    fn vertex_maximizes_caratheodory_quadratic(q in quadruple(), x in -1.0..1.0f64, y in -1.0..1.0f64) {
        let g = Thm2Coefficients::new(&q).g(x, y);
        if let Some(rho) = caratheodory_vertex(&g) {
            let grid_max = (0..=2000).map(|k| -10.0 + 0.01 * k as f64)
                .map(|r| caratheodory_r(&g, r))
                .fold(f64::MIN, f64::max);
            prop_assert!(caratheodory_r(&g, rho) >= grid_max - 1e-9 * grid_max.abs().max(1.0));
        }
    }
}
