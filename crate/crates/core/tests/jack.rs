mod common;

use std::f64::consts::PI;

use common::*;
use starlike_core::jack::{probe_at, PROBE_TOL};
use starlike_core::{boundary_argmax, jack_probe, Complex64, FamilyId, SchwarzFunction, Theorem};

fn builtin_ws() -> Vec<SchwarzFunction> {
    vec![
        SchwarzFunction::Monomial(1),
        SchwarzFunction::Monomial(2),
        SchwarzFunction::Monomial(5),
        SchwarzFunction::blaschke(c(0.5, 0.0)).unwrap(),
        SchwarzFunction::blaschke(c(-0.3, 0.6)).unwrap(),
    ]
}

fn induced_ws() -> Vec<SchwarzFunction> {
    let mut v = vec![
        SchwarzFunction::induced(Theorem::One, builtin(FamilyId::Quadratic), 2.0).unwrap(),
        SchwarzFunction::induced(Theorem::Two, builtin(FamilyId::HalfPlane), -1.0).unwrap(),
    ];
    for (id, theorem) in [
        (FamilyId::Ex1High, Theorem::One),
        (FamilyId::Ex1Low, Theorem::One),
        (FamilyId::Ex2Pos, Theorem::Two),
        (FamilyId::Ex2Neg, Theorem::Two),
    ] {
        for beta in beta_grid(id, 3) {
            v.push(SchwarzFunction::induced(theorem, parametric(id, beta), beta).unwrap());
        }
    }
    v
}

#[test]
fn probes_find_real_ratio_at_least_one() {
    for w in builtin_ws().into_iter().chain(induced_ws()) {
        for r in [0.5, 0.9, 0.99] {
            let probe = jack_probe(&w, r, 4096).unwrap();
            assert!(probe.ratio.im.abs() <= PROBE_TOL, "{w} r={r}: {probe:?}");
            assert!(probe.k_estimate >= 1.0 - PROBE_TOL, "{w} r={r}: {probe:?}");
        }
    }
}

#[test]
fn monomial_ratio_is_exact_degree() {
    for n in [1u32, 2, 5] {
        for r in [0.5, 0.9, 0.99] {
            let probe = jack_probe(&SchwarzFunction::Monomial(n), r, 4096).unwrap();
            assert!(
                (probe.k_estimate - n as f64).abs() <= 1e-6,
                "{n} {r}: {probe:?}"
            );
            // Any angle is an argmax for a monomial.
            let elsewhere = probe_at(&SchwarzFunction::Monomial(n), r, 2.0).unwrap();
            assert!((elsewhere.k_estimate - n as f64).abs() <= 1e-6);
        }
    }
}

#[test]
fn schwarz_bound_on_circles() {
    for w in builtin_ws().into_iter().chain(induced_ws()) {
        for r in [0.5, 0.9, 0.99] {
            let (_, max) = boundary_argmax(&w, r, 2048).unwrap();
            assert!(max <= r + 1e-9, "{w} r={r}: {max}");
        }
    }
}

#[test]
fn rotation_leaves_probe_unchanged() {
    let phi = PI / 3.0;
    for w in builtin_ws().into_iter().chain(induced_ws()) {
        let base = jack_probe(&w, 0.9, 4096).unwrap();
        let turned = jack_probe(&w.clone().rotated(phi), 0.9, 4096).unwrap();
        // With |w| constant on the circle every angle is an argmax and the
        // reported one is decided by rounding; only k is comparable then.
        let moduli: Vec<f64> = (0..256)
            .map(|j| {
                w.eval(Complex64::from_polar(0.9, j as f64 * PI / 128.0))
                    .unwrap()
                    .norm()
            })
            .collect();
        let spread = moduli.iter().cloned().fold(f64::MIN, f64::max)
            - moduli.iter().cloned().fold(f64::MAX, f64::min);
        let dt = (base.theta_star - turned.theta_star).abs();
        let dk = (base.k_estimate - turned.k_estimate).abs();
        if spread > 1e-9 {
            assert!(dt <= 1e-9, "{w}: dtheta {dt:e}");
        }
        assert!(dk <= 1e-9, "{w}: dk {dk:e}");
    }
}

#[test]
fn every_w_vanishes_at_origin() {
    for w in builtin_ws().into_iter().chain(induced_ws()) {
        assert!(
            w.eval(Complex64::new(0.0, 0.0)).unwrap().norm() <= 1e-10,
            "{w}"
        );
    }
}

#[test]
fn blaschke_probe_at_large_radius() {
    let w = SchwarzFunction::blaschke(c(0.5, 0.0)).unwrap();
    let probe = jack_probe(&w, 0.99, 4096).unwrap();
    assert!((probe.theta_star - PI).abs() < 1e-6);
    assert!(probe.holds(PROBE_TOL));
    // z w'/w = 1 + z/(z - a) + ā z/(1 - ā z) at z = -0.99
    let z = -0.99;
    let exact = 1.0 + z / (z - 0.5) + 0.5 * z / (1.0 - 0.5 * z);
    assert!((probe.k_estimate - exact).abs() <= 1e-6);
}
