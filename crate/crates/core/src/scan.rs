//! Extremum search over the angle of a circle: a uniform coarse scan followed
//! by golden-section refinement around the best sample.

use std::f64::consts::TAU;

use rayon::prelude::*;

/// Bracket width at which golden-section refinement stops.
pub const THETA_TOL: f64 = 1e-12;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

impl Sense {
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Sense::Min => a < b,
            Sense::Max => a > b,
        }
    }

    /// `a` beats `b` by more than rounding noise in `b`.
    fn clearly_better(self, a: f64, b: f64) -> bool {
        let noise = 64.0 * f64::EPSILON * b.abs();
        match self {
            Sense::Min => a < b - noise,
            Sense::Max => a > b + noise,
        }
    }
}

/// Best angle in `[0, 2π)` and the value there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleExtremum {
    pub theta: f64,
    pub value: f64,
}

/// Scans `objective` at `n` uniform angles, then refines the best one.
///
/// Ties in the coarse scan, up to rounding noise, go to the smallest index. The refined point is
/// kept only if it beats the coarse sample by more than rounding noise, so
/// flat objectives report a grid angle.
pub fn extremum_on_circle<F, E>(objective: F, n: usize, sense: Sense) -> Result<AngleExtremum, E>
where
    F: Fn(f64) -> Result<f64, E> + Sync,
    E: Send,
{
    let step = TAU / n as f64;
    let samples: Vec<Result<f64, E>> = (0..n)
        .into_par_iter()
        .map(|j| objective(TAU * j as f64 / n as f64))
        .collect();

    let mut best: Option<(usize, f64)> = None;
    for (j, value) in samples.into_iter().enumerate() {
        let value = value?;
        match best {
            Some((_, b)) if !sense.clearly_better(value, b) => {}
            _ => best = Some((j, value)),
        }
    }
    let (j, coarse) = best.expect("n >= 1");
    let theta0 = TAU * j as f64 / n as f64;

    let refined = golden_section(&objective, theta0 - step, theta0 + step, sense)?;
    if sense.clearly_better(refined.value, coarse) {
        Ok(AngleExtremum {
            theta: refined.theta.rem_euclid(TAU),
            value: refined.value,
        })
    } else {
        Ok(AngleExtremum {
            theta: theta0,
            value: coarse,
        })
    }
}

fn golden_section<F, E>(
    objective: &F,
    mut a: f64,
    mut b: f64,
    sense: Sense,
) -> Result<AngleExtremum, E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = objective(c)?;
    let mut fd = objective(d)?;
    while (b - a).abs() > THETA_TOL {
        if sense.better(fc, fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = objective(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = objective(d)?;
        }
    }
    let (theta, value) = if sense.better(fc, fd) {
        (c, fc)
    } else {
        (d, fd)
    };
    Ok(AngleExtremum { theta, value })
}
