//! Bounds of the two convexity-to-starlikeness criteria, grid checks of their
//! hypotheses and conclusions, order estimates, and boundary-extremal scans
//! that re-derive the sharp constants.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::analytic::{
    convexity_p, mobius_invert_t1, mobius_invert_t2, starlike_q, target_disk, Analytic,
    ComplexPoint, SamplingGrid,
};
use crate::error::{Error, Result};
use crate::scan::{extremum_on_circle, Sense};

/// Minimum angular resolution of a boundary-extremal scan.
pub const MIN_THETA_SAMPLES: usize = 256;

/// `|w(0)|` above this fails the conclusion checks.
pub const W_ORIGIN_TOL: f64 = 1e-10;

const T1_INTERVAL: &str = "(1, 3)";
const T2_INTERVAL: &str = "(-inf, -1] or (1, inf)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Upper bound on `Re(1 + zf''/f')`, `1 < β < 3`; `zf'/f ≺ β(1-z)/(β-z)`.
    One,
    /// Lower bound on `Re(1 + zf''/f')`, `β ≤ -1` or `β > 1`; `f/(zf') ≺ β(1-z)/(β-z)`.
    Two,
}

impl Theorem {
    pub fn number(self) -> u8 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
        }
    }

    pub fn interval(self) -> &'static str {
        match self {
            Theorem::One => T1_INTERVAL,
            Theorem::Two => T2_INTERVAL,
        }
    }

    pub fn admits(self, beta: f64) -> bool {
        match self {
            Theorem::One => beta > 1.0 && beta < 3.0,
            Theorem::Two => beta <= -1.0 || (beta > 1.0 && beta.is_finite()),
        }
    }

    pub fn check_beta(self, beta: f64) -> Result<()> {
        if self.admits(beta) {
            Ok(())
        } else {
            Err(Error::Domain {
                name: "beta",
                value: beta,
                interval: self.interval(),
            })
        }
    }

    /// The hypothesis bound at `beta`.
    pub fn bound(self, beta: f64) -> Result<f64> {
        match self {
            Theorem::One => t1_bound(beta),
            Theorem::Two => t2_bound(beta),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "t1" => Ok(Theorem::One),
            "2" | "t2" => Ok(Theorem::Two),
            other => Err(Error::Invalid(format!(
                "theorem must be 1 or 2, got {other:?}"
            ))),
        }
    }
}

/// The two formulas of the first bound; they meet at `β = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum T1Branch {
    /// `(β+1)/(2(β-1))`, used for `2 ≤ β < 3`.
    High,
    /// `(5β-1)/(2(β+1))`, used for `1 < β < 2`.
    Low,
}

/// Evaluates one branch formula without range checks.
pub fn t1_bound_branch(beta: f64, branch: T1Branch) -> f64 {
    match branch {
        T1Branch::High => (beta + 1.0) / (2.0 * (beta - 1.0)),
        T1Branch::Low => (5.0 * beta - 1.0) / (2.0 * (beta + 1.0)),
    }
}

pub fn t1_bound(beta: f64) -> Result<f64> {
    Theorem::One.check_beta(beta)?;
    let branch = if beta >= 2.0 {
        T1Branch::High
    } else {
        T1Branch::Low
    };
    Ok(t1_bound_branch(beta, branch))
}

pub fn t2_bound(beta: f64) -> Result<f64> {
    Theorem::Two.check_beta(beta)?;
    if beta <= -1.0 {
        // Written so that β = -1 gives +0 rather than -0.
        Ok((-beta - 1.0) / (2.0 * beta * (beta - 1.0)))
    } else {
        Ok((3.0 * beta + 1.0) / (2.0 * beta * (beta + 1.0)))
    }
}

/// Order of starlikeness guaranteed by the second criterion, `(β+1)/(2β)`.
pub fn t2_order(beta: f64) -> f64 {
    (beta + 1.0) / (2.0 * beta)
}

/// The function `w` defined by the theorem's subordination, evaluated at `z`.
pub fn induced_w<F: Analytic + ?Sized>(
    theorem: Theorem,
    f: &F,
    beta: f64,
    z: ComplexPoint,
) -> Result<Complex64> {
    let q = starlike_q(f, z)?;
    match theorem {
        Theorem::One => mobius_invert_t1(beta, q),
        Theorem::Two => mobius_invert_t2(beta, q),
    }
}

/// Extreme of `Re(1 + zf''/f')` on one circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusExtreme {
    pub r: f64,
    /// Supremum for the first criterion, infimum for the second.
    pub extreme: f64,
    pub witness: ComplexPoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub per_radius: Vec<RadiusExtreme>,
    pub bound: f64,
    /// Strict inequality at every grid point.
    pub satisfied: bool,
    /// Distance from the extreme at the largest radius to the bound, positive
    /// when the inequality holds there.
    pub margin_at_rmax: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusConclusion {
    pub r: f64,
    pub max_abs_w: f64,
    /// `max_abs_w / r`; at most 1 for a Schwarz function.
    pub schwarz_ratio: f64,
    /// `ρ - max|q - ρ|` with `ρ = β/(β+1)`; first criterion only.
    pub disk_slack: Option<f64>,
    pub min_re_q: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConclusionReport {
    pub per_radius: Vec<RadiusConclusion>,
    /// Minimum of `Re(zf'/f)` on the largest circle.
    pub order_estimate: f64,
    pub w_origin: Complex64,
}

/// Tolerances applied to a [`ConclusionReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConclusionChecks {
    pub schwarz_tol: f64,
    /// Slack allowed between the order estimate and `(β+1)/(2β)`.
    pub order_tol: f64,
}

impl Default for ConclusionChecks {
    fn default() -> Self {
        Self {
            schwarz_tol: 1e-6,
            order_tol: 1e-2,
        }
    }
}

impl ConclusionReport {
    /// Whether every conclusion invariant holds on the grid.
    pub fn holds(&self, theorem: Theorem, beta: f64, checks: &ConclusionChecks) -> bool {
        let radii_ok = self.per_radius.iter().all(|rc| {
            rc.max_abs_w < 1.0
                && rc.schwarz_ratio <= 1.0 + checks.schwarz_tol
                && rc.disk_slack.is_none_or(|s| s > 0.0)
        });
        let order_ok = match theorem {
            Theorem::One => true,
            Theorem::Two => self.order_estimate >= t2_order(beta) - checks.order_tol,
        };
        radii_ok && order_ok && self.w_origin.norm() <= W_ORIGIN_TOL
    }
}

/// Both halves of a theorem check on one handle.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremRun {
    pub theorem: Theorem,
    pub beta: f64,
    pub hypothesis: HypothesisReport,
    pub conclusion: ConclusionReport,
}

impl TheoremRun {
    pub fn conclusion_holds(&self, checks: &ConclusionChecks) -> bool {
        self.conclusion.holds(self.theorem, self.beta, checks)
    }

    pub fn passes(&self, checks: &ConclusionChecks) -> bool {
        self.hypothesis.satisfied && self.conclusion_holds(checks)
    }
}

struct Sample {
    z: ComplexPoint,
    re_p: f64,
    q: Complex64,
    w: Complex64,
}

fn sample_circle<F: Analytic + ?Sized>(
    theorem: Theorem,
    f: &F,
    beta: f64,
    grid: &SamplingGrid,
    r: f64,
) -> Result<Vec<Sample>> {
    let raw: Vec<Result<Sample>> = (0..grid.angular_count())
        .into_par_iter()
        .map(|j| {
            let z = Complex64::from_polar(r, grid.theta(j));
            let p = convexity_p(f, z)?;
            let q = starlike_q(f, z)?;
            let w = match theorem {
                Theorem::One => mobius_invert_t1(beta, q)?,
                Theorem::Two => mobius_invert_t2(beta, q)?,
            };
            Ok(Sample {
                z,
                re_p: p.re,
                q,
                w,
            })
        })
        .collect();
    // First failure in angle order, independent of scheduling.
    raw.into_iter().collect()
}

/// Runs either criterion over the grid.
pub fn run<F: Analytic + ?Sized>(
    theorem: Theorem,
    f: &F,
    beta: f64,
    grid: &SamplingGrid,
) -> Result<TheoremRun> {
    let bound = theorem.bound(beta)?;
    let disk = match theorem {
        Theorem::One => Some(target_disk(beta)?),
        Theorem::Two => None,
    };
    let hyp_sense = match theorem {
        Theorem::One => Sense::Max,
        Theorem::Two => Sense::Min,
    };
    let strict = |re_p: f64| match theorem {
        Theorem::One => re_p < bound,
        Theorem::Two => re_p > bound,
    };

    let mut extremes = Vec::with_capacity(grid.radii().len());
    let mut conclusions = Vec::with_capacity(grid.radii().len());
    let mut satisfied = true;

    for &r in grid.radii() {
        let samples = sample_circle(theorem, f, beta, grid, r)?;

        let mut ext = RadiusExtreme {
            r,
            extreme: samples[0].re_p,
            witness: samples[0].z,
        };
        let mut conc = RadiusConclusion {
            r,
            max_abs_w: 0.0,
            schwarz_ratio: 0.0,
            disk_slack: disk.map(|_| f64::INFINITY),
            min_re_q: f64::INFINITY,
        };
        for s in &samples {
            satisfied &= strict(s.re_p);
            let better = match hyp_sense {
                Sense::Max => s.re_p > ext.extreme,
                Sense::Min => s.re_p < ext.extreme,
            };
            if better || s.re_p.is_nan() {
                ext.extreme = s.re_p;
                ext.witness = s.z;
            }
            conc.max_abs_w = conc.max_abs_w.max(s.w.norm());
            conc.min_re_q = conc.min_re_q.min(s.q.re);
            if let (Some(d), Some(slack)) = (disk, conc.disk_slack.as_mut()) {
                *slack = slack.min(d.slack(s.q));
            }
        }
        conc.schwarz_ratio = conc.max_abs_w / r;
        extremes.push(ext);
        conclusions.push(conc);
    }

    let last = extremes.last().expect("grid has a radius");
    let margin_at_rmax = match theorem {
        Theorem::One => bound - last.extreme,
        Theorem::Two => last.extreme - bound,
    };
    let order_estimate = conclusions.last().expect("grid has a radius").min_re_q;
    let w_origin = induced_w(theorem, f, beta, Complex64::new(0.0, 0.0))?;

    Ok(TheoremRun {
        theorem,
        beta,
        hypothesis: HypothesisReport {
            per_radius: extremes,
            bound,
            satisfied,
            margin_at_rmax,
        },
        conclusion: ConclusionReport {
            per_radius: conclusions,
            order_estimate,
            w_origin,
        },
    })
}

pub fn run_t1<F: Analytic + ?Sized>(
    f: &F,
    beta: f64,
    grid: &SamplingGrid,
) -> Result<(HypothesisReport, ConclusionReport)> {
    let run = run(Theorem::One, f, beta, grid)?;
    Ok((run.hypothesis, run.conclusion))
}

pub fn run_t2<F: Analytic + ?Sized>(
    f: &F,
    beta: f64,
    grid: &SamplingGrid,
) -> Result<(HypothesisReport, ConclusionReport)> {
    let run = run(Theorem::Two, f, beta, grid)?;
    Ok((run.hypothesis, run.conclusion))
}

fn min_re_on_largest_circle<F>(grid: &SamplingGrid, functional: F) -> Result<f64>
where
    F: Fn(ComplexPoint) -> Result<Complex64> + Sync,
{
    let values: Vec<Result<f64>> = grid
        .circle(grid.r_max())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|z| functional(z).map(|v| v.re))
        .collect();
    values
        .into_iter()
        .try_fold(f64::INFINITY, |acc, v| v.map(|v| acc.min(v)))
}

/// `min Re(zf'/f)` on the largest circle of the grid.
pub fn order_of_starlikeness<F: Analytic + ?Sized>(f: &F, grid: &SamplingGrid) -> Result<f64> {
    min_re_on_largest_circle(grid, |z| starlike_q(f, z))
}

/// `min Re(1 + zf''/f')` on the largest circle of the grid.
pub fn order_of_convexity<F: Analytic + ?Sized>(f: &F, grid: &SamplingGrid) -> Result<f64> {
    min_re_on_largest_circle(grid, |z| convexity_p(f, z))
}

fn check_k(k: f64) -> Result<()> {
    if k >= 1.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "k",
            value: k,
            interval: "[1, inf)",
        })
    }
}

/// `|β - e^{iθ}|² = 1 + β² - 2β cos θ`.
fn boundary_denominator(beta: f64, theta: f64) -> f64 {
    1.0 + beta * beta - 2.0 * beta * theta.cos()
}

/// `Re(1 + zf''/f')` at a point where `w = e^{iθ}` and `zw' = kw`, first criterion.
pub fn proof_boundary_value_t1(beta: f64, theta: f64, k: f64) -> Result<f64> {
    Theorem::One.check_beta(beta)?;
    check_k(k)?;
    let den = boundary_denominator(beta, theta);
    Ok(0.5 * (1.0 + beta) + (beta * beta - 1.0) * (1.0 - beta + k) / (2.0 * den))
}

/// Same boundary value for the second criterion.
pub fn proof_boundary_value_t2(beta: f64, theta: f64, k: f64) -> Result<f64> {
    Theorem::Two.check_beta(beta)?;
    check_k(k)?;
    let num = beta * beta - 1.0;
    // At β = -1 the k-term is identically zero, including θ = π where the
    // denominator vanishes too.
    let k_term = if num == 0.0 {
        0.0
    } else {
        k * num / (2.0 * boundary_denominator(beta, theta))
    };
    Ok(0.5 + 0.5 / beta - k_term)
}

/// Result of a boundary-extremal scan at `k = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryScan {
    pub theta_samples: usize,
    pub k: f64,
    pub extremal_value: f64,
    /// In `[0, 2π)`.
    pub theta_star: f64,
}

fn check_theta_samples(n: usize) -> Result<()> {
    if n < MIN_THETA_SAMPLES {
        return Err(Error::Invalid(format!(
            "boundary scan needs at least {MIN_THETA_SAMPLES} angles, got {n}"
        )));
    }
    Ok(())
}

/// Minimum over θ of [`proof_boundary_value_t1`] at `k = 1`; equals `t1_bound(β)`.
pub fn proof_extremal_t1(beta: f64, theta_samples: usize) -> Result<BoundaryScan> {
    Theorem::One.check_beta(beta)?;
    check_theta_samples(theta_samples)?;
    let ext = extremum_on_circle(
        |theta| proof_boundary_value_t1(beta, theta, 1.0),
        theta_samples,
        Sense::Min,
    )?;
    Ok(BoundaryScan {
        theta_samples,
        k: 1.0,
        extremal_value: ext.value,
        theta_star: ext.theta,
    })
}

/// Maximum over θ of [`proof_boundary_value_t2`] at `k = 1`; equals `t2_bound(β)`.
pub fn proof_extremal_t2(beta: f64, theta_samples: usize) -> Result<BoundaryScan> {
    Theorem::Two.check_beta(beta)?;
    check_theta_samples(theta_samples)?;
    let ext = extremum_on_circle(
        |theta| proof_boundary_value_t2(beta, theta, 1.0),
        theta_samples,
        Sense::Max,
    )?;
    Ok(BoundaryScan {
        theta_samples,
        k: 1.0,
        extremal_value: ext.value,
        theta_star: ext.theta,
    })
}

pub fn proof_extremal(theorem: Theorem, beta: f64, theta_samples: usize) -> Result<BoundaryScan> {
    match theorem {
        Theorem::One => proof_extremal_t1(beta, theta_samples),
        Theorem::Two => proof_extremal_t2(beta, theta_samples),
    }
}
