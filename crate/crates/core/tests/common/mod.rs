#![allow(dead_code)]

use std::f64::consts::TAU;

use starlike_core::{make_family, Complex64, FamilyId, FamilySpec, FunctionHandle};

/// Radical inverse in `base`, the building block of a Halton sequence.
fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let mut inv = 1.0 / base as f64;
    let mut x = 0.0;
    while i > 0 {
        x += (i % base) as f64 * inv;
        i /= base;
        inv /= base as f64;
    }
    x
}

/// `count` quasi-random points, area-uniform in the disk `|z| ≤ r_max`.
pub fn halton_disk(count: usize, r_max: f64) -> Vec<Complex64> {
    (1..=count as u64)
        .map(|i| {
            let r = r_max * radical_inverse(i, 2).sqrt();
            Complex64::from_polar(r, TAU * radical_inverse(i, 3))
        })
        .collect()
}

/// `n` points of `[lo, hi]`, both endpoints included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// A sample of admissible β per parametric family; `count` values each, skipping
/// the singular exponent of `ex2_pos`.
pub fn beta_grid(id: FamilyId, count: usize) -> Vec<f64> {
    match id {
        FamilyId::Ex1High => linspace(2.0, 2.95, count),
        FamilyId::Ex1Low => linspace(1.05, 2.0, count),
        FamilyId::Ex2Pos => linspace(1.1, 6.0, count),
        FamilyId::Ex2Neg => linspace(-6.0, -1.0, count),
        _ => vec![],
    }
}

pub fn parametric(id: FamilyId, beta: f64) -> FunctionHandle {
    make_family(FamilySpec::parametric(id, beta).unwrap()).unwrap()
}

pub fn builtin(id: FamilyId) -> FunctionHandle {
    make_family(FamilySpec::builtin(id).unwrap()).unwrap()
}

pub fn builtins() -> Vec<FunctionHandle> {
    [
        FamilyId::Koebe,
        FamilyId::HalfPlane,
        FamilyId::Quadratic,
        FamilyId::Monomial(1),
        FamilyId::Monomial(3),
    ]
    .into_iter()
    .map(builtin)
    .collect()
}

/// Parametric families at a few β each, plus builtins and one series.
pub fn all_handles() -> Vec<FunctionHandle> {
    let mut v = builtins();
    for id in FamilyId::PARAMETRIC {
        for beta in beta_grid(id, 4) {
            v.push(parametric(id, beta));
        }
    }
    v.push(parametric(FamilyId::Ex2Pos, 1.0 + 2f64.sqrt()));
    v.push(
        FunctionHandle::series(vec![
            Complex64::new(0.2, -0.1),
            Complex64::new(0.05, 0.0),
            Complex64::new(-0.01, 0.02),
        ])
        .unwrap(),
    );
    v
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
