mod common;

use std::f64::consts::{PI, TAU};

use common::*;
use starlike_core::criteria::{
    induced_w, proof_extremal, run, t1_bound_branch, t2_order, T1Branch,
};
use starlike_core::{
    order_of_convexity, order_of_starlikeness, proof_boundary_value_t1, proof_boundary_value_t2,
    proof_extremal_t1, proof_extremal_t2, run_t1, run_t2, t1_bound, t2_bound, Complex64,
    ConclusionChecks, FamilyId, SamplingGrid, Theorem,
};

fn family_theorem(id: FamilyId) -> Theorem {
    match id {
        FamilyId::Ex1High | FamilyId::Ex1Low => Theorem::One,
        _ => Theorem::Two,
    }
}

#[test]
fn branch_point_constant_from_both_branches() {
    assert_eq!(t1_bound(2.0).unwrap(), 1.5);
    assert_eq!(t1_bound_branch(2.0, T1Branch::High), 1.5);
    assert_eq!(t1_bound_branch(2.0, T1Branch::Low), 1.5);
}

#[test]
fn extremal_scans_reproduce_sharp_constants() {
    let t1: Vec<f64> = (1..=50).map(|i| 1.0 + 2.0 * i as f64 / 51.0).collect();
    for beta in t1 {
        let scan = proof_extremal_t1(beta, 4096).unwrap();
        let d = (scan.extremal_value - t1_bound(beta).unwrap()).abs();
        assert!(d <= 1e-9, "beta={beta}: {d:e}");
        assert!((0.0..TAU).contains(&scan.theta_star));
    }
    for beta in linspace(-8.0, -1.0, 50)
        .into_iter()
        .chain(linspace(1.02, 8.0, 50))
    {
        let scan = proof_extremal_t2(beta, 4096).unwrap();
        let d = (scan.extremal_value - t2_bound(beta).unwrap()).abs();
        assert!(d <= 1e-9, "beta={beta}: {d:e}");
    }
}

#[test]
fn extremal_scans_with_odd_resolution_still_refine() {
    // 1001 angles does not contain θ = π; refinement has to find it.
    let scan = proof_extremal_t1(1.5, 1001).unwrap();
    assert!((scan.extremal_value - 1.3).abs() <= 1e-9);
    assert!((scan.theta_star - PI).abs() < 1e-4);
    let scan = proof_extremal(Theorem::Two, 3.0, 1001).unwrap();
    assert!((scan.extremal_value - 5.0 / 12.0).abs() <= 1e-9);
}

#[test]
fn boundary_value_is_monotone_in_k() {
    for beta in linspace(1.05, 2.95, 12) {
        for theta in linspace(0.0, TAU, 17) {
            let v: Vec<f64> = [1.0, 2.0, 5.0]
                .iter()
                .map(|&k| proof_boundary_value_t1(beta, theta, k).unwrap())
                .collect();
            // Slope in k is (β²-1)/(2D) > 0.
            assert!(v[0] < v[1] && v[1] < v[2], "{beta} {theta} {v:?}");
        }
    }
    for beta in linspace(-6.0, -1.05, 8)
        .into_iter()
        .chain(linspace(1.05, 6.0, 8))
    {
        for theta in linspace(0.0, TAU, 17) {
            let v: Vec<f64> = [1.0, 2.0, 5.0]
                .iter()
                .map(|&k| proof_boundary_value_t2(beta, theta, k).unwrap())
                .collect();
            assert!(v[0] > v[1] && v[1] > v[2], "{beta} {theta} {v:?}");
        }
    }
}

#[test]
fn boundary_values_match_direct_evaluation() {
    // Re(1 + zf''/f') from the w-parametrization with w = e^{iθ}, zw' = kw,
    // computed in complex arithmetic rather than from the real-part formula.
    for beta in [1.3, 2.0, 2.7] {
        for theta in linspace(0.1, 6.2, 9) {
            for k in [1.0, 1.7, 4.0] {
                let w = Complex64::from_polar(1.0, theta);
                let zw = k * w;
                let p = beta * (1.0 - w) / (beta - w) - zw / (1.0 - w) + zw / (beta - w);
                let v = proof_boundary_value_t1(beta, theta, k).unwrap();
                assert!((p.re - v).abs() <= 1e-12, "{beta} {theta} {k}");
            }
        }
    }
    for beta in [-3.0, -1.5, 1.5, 4.0] {
        for theta in linspace(0.1, 6.2, 9) {
            for k in [1.0, 1.7, 4.0] {
                let w = Complex64::from_polar(1.0, theta);
                let zw = k * w;
                let p = (beta - w) / (beta * (1.0 - w)) + zw / (1.0 - w) - zw / (beta - w);
                let v = proof_boundary_value_t2(beta, theta, k).unwrap();
                assert!((p.re - v).abs() <= 1e-12, "{beta} {theta} {k}");
            }
        }
    }
}

#[test]
fn quadratic_induces_identity() {
    let grid = SamplingGrid::default();
    let fh = builtin(FamilyId::Quadratic);
    let worst = grid
        .points()
        .map(|z| (induced_w(Theorem::One, &fh, 2.0, z).unwrap() - z).norm())
        .fold(0.0, f64::max);
    assert!(worst <= 1e-9, "{worst:e}");
    let (hyp, conc) = run_t1(&fh, 2.0, &grid).unwrap();
    assert!(hyp.satisfied);
    assert!(conc
        .per_radius
        .iter()
        .all(|rc| rc.disk_slack.unwrap() > 0.0));
    assert!(conc.holds(Theorem::One, 2.0, &ConclusionChecks::default()));
}

#[test]
fn ex1_high_hypothesis_margin_shrinks_toward_boundary() {
    let fh = parametric(FamilyId::Ex1High, 2.5);
    let (hyp, _) = run_t1(&fh, 2.5, &SamplingGrid::default()).unwrap();
    assert!(hyp.satisfied);
    assert!(hyp.margin_at_rmax > 0.0 && hyp.margin_at_rmax < 1e-2);
    // sup Re p on |z| = r is μ + (1-μ)/(1+r), attained at z = -r.
    let mu = 2.0 / 1.5;
    for re in &hyp.per_radius {
        let sup = mu + (1.0 - mu) / (1.0 + re.r);
        assert!((re.extreme - sup).abs() <= 1e-12);
        assert!((re.witness - Complex64::new(-re.r, 0.0)).norm() <= 1e-12);
    }
}

#[test]
fn koebe_fails_first_hypothesis() {
    let fh = builtin(FamilyId::Koebe);
    let (hyp, _) = run_t1(&fh, 2.0, &SamplingGrid::default()).unwrap();
    assert!(!hyp.satisfied);
    assert!(hyp.margin_at_rmax < 0.0);
}

#[test]
fn halfplane_second_theorem_special_case() {
    let grid = SamplingGrid::default();
    let fh = builtin(FamilyId::HalfPlane);
    let worst = grid
        .points()
        .map(|z| (induced_w(Theorem::Two, &fh, -1.0, z).unwrap() - z / (2.0 - z)).norm())
        .fold(0.0, f64::max);
    assert!(worst <= 1e-9, "{worst:e}");
    let (hyp, conc) = run_t2(&fh, -1.0, &grid).unwrap();
    assert_eq!(hyp.bound, 0.0);
    assert!(hyp.satisfied);
    assert!(conc.per_radius.iter().all(|rc| rc.disk_slack.is_none()));
}

#[test]
fn second_theorem_reports_are_total() {
    let fh = builtin(FamilyId::Quadratic);
    let (hyp, conc) = run_t2(&fh, -1.0, &SamplingGrid::default()).unwrap();
    assert_eq!(hyp.per_radius.len(), 3);
    assert_eq!(conc.per_radius.len(), 3);
    // Re p of z - z²/2 goes to -98 at z = 0.99, far below the bound 0.
    assert!(!hyp.satisfied);
}

#[test]
fn ex2_pos_order_meets_target() {
    let fh = parametric(FamilyId::Ex2Pos, 3.0);
    let (hyp, conc) = run_t2(&fh, 3.0, &SamplingGrid::default()).unwrap();
    assert!(hyp.satisfied);
    let min_re_q = conc.per_radius.last().unwrap().min_re_q;
    assert!(min_re_q >= 2.0 / 3.0 - 1e-2);
}

#[test]
fn implication_holds_for_every_family() {
    let grid = SamplingGrid::default();
    let checks = ConclusionChecks::default();
    for id in FamilyId::PARAMETRIC {
        let theorem = family_theorem(id);
        for beta in beta_grid(id, 10) {
            let fh = parametric(id, beta);
            let run = run(theorem, &fh, beta, &grid).unwrap();
            assert!(run.hypothesis.satisfied, "{id} {beta}");
            for rc in &run.conclusion.per_radius {
                assert!(rc.max_abs_w < 1.0, "{id} {beta} {rc:?}");
                assert!(rc.schwarz_ratio <= 1.0 + 1e-6, "{id} {beta} {rc:?}");
                if theorem == Theorem::One {
                    assert!(rc.disk_slack.unwrap() > 0.0, "{id} {beta} {rc:?}");
                }
            }
            assert!(run.conclusion.w_origin.norm() <= 1e-10);
            if theorem == Theorem::Two {
                assert!(
                    run.conclusion.order_estimate >= t2_order(beta) - 1e-2,
                    "{id} {beta}"
                );
            }
            assert!(run.passes(&checks), "{id} {beta}");
        }
    }
}

#[test]
fn hypothesis_margin_decreases_with_radius() {
    for id in FamilyId::PARAMETRIC {
        let theorem = family_theorem(id);
        for beta in beta_grid(id, 5) {
            let fh = parametric(id, beta);
            let margins: Vec<f64> = [0.9, 0.99, 0.999]
                .iter()
                .map(|&r| {
                    let grid = SamplingGrid::new(vec![r], 1024).unwrap();
                    run(theorem, &fh, beta, &grid)
                        .unwrap()
                        .hypothesis
                        .margin_at_rmax
                })
                .collect();
            if (id == FamilyId::Ex2Neg && beta == -1.0) || margins[0] == 0.0 {
                continue;
            }
            assert!(
                margins[0] > margins[1] && margins[1] > margins[2],
                "{id} {beta} {margins:?}"
            );
        }
    }
}

#[test]
fn ex2_neg_meets_the_minus_sign_bound() {
    // Re p → (1 + μ)/2 = -(β+1)/(2β(β-1)) on the boundary: the family sits on
    // the bound with the minus sign, which is the stronger of the two readings.
    for beta in linspace(-6.0, -1.1, 8) {
        let fh = parametric(FamilyId::Ex2Neg, beta);
        let (hyp, _) = run_t2(&fh, beta, &SamplingGrid::default()).unwrap();
        let plus_sign = (beta + 1.0) / (2.0 * beta * (beta - 1.0));
        assert!(hyp.satisfied, "{beta}");
        assert!(hyp.bound > plus_sign);
        assert!(hyp.margin_at_rmax < 1e-2);
    }
}

fn dense_min_re<F: Fn(Complex64) -> Complex64>(r: f64, n: usize, g: F) -> f64 {
    (0..n)
        .map(|j| g(Complex64::from_polar(r, TAU * j as f64 / n as f64)).re)
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn order_estimates_match_dense_scans() {
    let grid = SamplingGrid::default();
    let half = builtin(FamilyId::HalfPlane);
    let s = order_of_starlikeness(&half, &grid).unwrap();
    assert!((s - 1.0 / 1.99).abs() <= 1e-12);
    assert!((s - 0.502513).abs() <= 1e-6);
    let cvx = order_of_convexity(&half, &grid).unwrap();
    assert!((cvx - 0.01 / 1.99).abs() <= 1e-12);

    let koebe = builtin(FamilyId::Koebe);
    let s = order_of_starlikeness(&koebe, &grid).unwrap();
    assert!((s - 0.01 / 1.99).abs() <= 1e-12);

    let id = builtin(FamilyId::Monomial(1));
    assert_eq!(order_of_starlikeness(&id, &grid).unwrap(), 1.0);
    assert_eq!(order_of_convexity(&id, &grid).unwrap(), 1.0);

    let quad = builtin(FamilyId::Quadratic);
    let oracle = dense_min_re(0.99, 1_000_000, |z| (1.0 - 2.0 * z) / (1.0 - z));
    let cvx = order_of_convexity(&quad, &grid).unwrap();
    assert!((cvx - oracle).abs() <= 1e-6, "{cvx} vs {oracle}");
}
