//! Normalized analytic functions on the unit disk and the functionals built
//! from them: `zf'/f`, `1 + zf''/f'`, the Möbius maps `β(1-z)/(β-z)` and their
//! inverses, and the Alexander transform `∫₀^z f(t)/t dt`.

use std::f64::consts::TAU;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::families::FamilySpec;

/// A point of the complex plane. Evaluation points must satisfy `|z| < 1`.
pub type ComplexPoint = Complex64;

/// Below this modulus `zf'/f` is replaced by its two-term Taylor expansion.
pub const SMALL_Z: f64 = 1e-6;

/// Moduli below this count as "vanishes" for `f`, `f'` and Möbius denominators.
pub const ZERO_THRESHOLD: f64 = 1e-14;

/// Longest coefficient list accepted by [`FunctionHandle::series`].
pub const MAX_SERIES_COEFFS: usize = 64;

/// Default node count for the Alexander-transform quadrature.
pub const DEFAULT_QUAD_NODES: usize = 32;

/// Value and first two derivatives of a function at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2 {
    pub f: Complex64,
    pub df: Complex64,
    pub d2f: Complex64,
}

impl Jet2 {
    pub fn is_finite(&self) -> bool {
        self.f.is_finite() && self.df.is_finite() && self.d2f.is_finite()
    }
}

/// Anything that can produce a second-order jet at interior points of the disk.
pub trait Analytic: Sync {
    fn jet(&self, z: ComplexPoint) -> Result<Jet2>;
}

/// Where a [`FunctionHandle`] came from.
#[derive(Debug, Clone, PartialEq)]
pub enum Descriptor {
    /// A parametric family or builtin, see [`crate::families`].
    Family(FamilySpec),
    /// Truncated series `z + Σ aₙ zⁿ`; holds `a₂, a₃, …`.
    Series(Vec<Complex64>),
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Kernel {
    /// `(1 - (1-z)^μ) / μ`.
    Power { mu: f64 },
    /// `-Log(1-z)`, the `μ → 0` limit of `Power`.
    NegLog,
    /// `z / (1-z)²`.
    Koebe,
    /// `z / (1-z)`.
    HalfPlane,
    /// `z - z²/2`.
    Quadratic,
    /// `z` for `n = 1`, otherwise `z + zⁿ/n`.
    Monomial(u32),
    /// `z + Σ aₙ zⁿ`, holds `a₂, a₃, …`.
    Series(Vec<Complex64>),
}

/// A function of class 𝒜 (`f(0) = 0`, `f'(0) = 1`), immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionHandle {
    descriptor: Descriptor,
    kernel: Kernel,
}

impl FunctionHandle {
    pub(crate) fn from_parts(descriptor: Descriptor, kernel: Kernel) -> Self {
        Self { descriptor, kernel }
    }

    /// Truncated power series `z + a₂z² + … + a_N z^N` from `[a₂, …, a_N]`.
    pub fn series(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() > MAX_SERIES_COEFFS {
            return Err(Error::Invalid(format!(
                "series has {} coefficients, at most {MAX_SERIES_COEFFS} are accepted",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Invalid("series coefficients must be finite".into()));
        }
        Ok(Self::from_parts(
            Descriptor::Series(coeffs.clone()),
            Kernel::Series(coeffs),
        ))
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    #[cfg(test)]
    pub(crate) fn kernel_for_tests(&self) -> &Kernel {
        &self.kernel
    }

    /// Value and derivatives at `z`, `|z| < 1`.
    pub fn eval_jet(&self, z: ComplexPoint) -> Result<Jet2> {
        check_interior(z)?;
        let jet = match &self.kernel {
            Kernel::Power { mu } => power_jet(*mu, z),
            Kernel::NegLog => {
                let inv = (Complex64::new(1.0, 0.0) - z).inv();
                Jet2 {
                    f: -log1p(-z),
                    df: inv,
                    d2f: inv * inv,
                }
            }
            Kernel::Koebe => {
                let inv = (Complex64::new(1.0, 0.0) - z).inv();
                let inv2 = inv * inv;
                Jet2 {
                    f: z * inv2,
                    df: (1.0 + z) * inv2 * inv,
                    d2f: (4.0 + 2.0 * z) * inv2 * inv2,
                }
            }
            Kernel::HalfPlane => {
                let inv = (Complex64::new(1.0, 0.0) - z).inv();
                Jet2 {
                    f: z * inv,
                    df: inv * inv,
                    d2f: 2.0 * inv * inv * inv,
                }
            }
            Kernel::Quadratic => Jet2 {
                f: z - 0.5 * z * z,
                df: 1.0 - z,
                d2f: Complex64::new(-1.0, 0.0),
            },
            Kernel::Monomial(n) => monomial_jet(*n, z),
            Kernel::Series(coeffs) => series_jet(coeffs, z),
        };
        Ok(jet)
    }
}

impl Analytic for FunctionHandle {
    fn jet(&self, z: ComplexPoint) -> Result<Jet2> {
        self.eval_jet(z)
    }
}

pub(crate) fn check_interior(z: ComplexPoint) -> Result<()> {
    if z.is_finite() && z.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisk { z })
    }
}

/// Principal `Log(1 + w)`, accurate for small `w`.
pub fn log1p(w: Complex64) -> Complex64 {
    let (x, y) = (w.re, w.im);
    // |1 + w|² - 1 without forming 1 + w
    let t = x * (2.0 + x) + y * y;
    Complex64::new(0.5 * t.ln_1p(), y.atan2(1.0 + x))
}

/// `exp(w) - 1`, accurate for small `w`.
pub fn expm1(w: Complex64) -> Complex64 {
    let half_sin = (0.5 * w.im).sin();
    Complex64::new(
        w.re.exp_m1() * w.im.cos() - 2.0 * half_sin * half_sin,
        w.re.exp() * w.im.sin(),
    )
}

/// `(1 - z)^p` on the principal branch.
pub fn one_minus_z_pow(z: Complex64, p: f64) -> Complex64 {
    (p * log1p(-z)).exp()
}

fn power_jet(mu: f64, z: Complex64) -> Jet2 {
    let log = log1p(-z);
    Jet2 {
        f: -expm1(mu * log) / mu,
        df: ((mu - 1.0) * log).exp(),
        d2f: -(mu - 1.0) * ((mu - 2.0) * log).exp(),
    }
}

fn monomial_jet(n: u32, z: Complex64) -> Jet2 {
    if n <= 1 {
        return Jet2 {
            f: z,
            df: Complex64::new(1.0, 0.0),
            d2f: Complex64::new(0.0, 0.0),
        };
    }
    let nf = n as f64;
    let zn2 = z.powu(n - 2);
    let zn1 = zn2 * z;
    Jet2 {
        f: z + zn1 * z / nf,
        df: 1.0 + zn1,
        d2f: (nf - 1.0) * zn2,
    }
}

fn series_jet(coeffs: &[Complex64], z: Complex64) -> Jet2 {
    // Horner over Σ_{n≥2} aₙ zⁿ, carrying first and second derivatives.
    let zero = Complex64::new(0.0, 0.0);
    let (mut p, mut dp, mut d2p) = (zero, zero, zero);
    for a in coeffs.iter().rev() {
        d2p = d2p * z + 2.0 * dp;
        dp = dp * z + p;
        p = p * z + a;
    }
    // p(z) = Σ aₙ z^{n-2}; the tail is z²·p.
    let z2 = z * z;
    Jet2 {
        f: z + z2 * p,
        df: 1.0 + 2.0 * z * p + z2 * dp,
        d2f: 2.0 * p + 4.0 * z * dp + z2 * d2p,
    }
}

/// `zf'(z)/f(z)`, with the removable singularity at the origin filled in.
pub fn starlike_q<F: Analytic + ?Sized>(f: &F, z: ComplexPoint) -> Result<Complex64> {
    check_interior(z)?;
    if z.norm() <= SMALL_Z {
        let origin = f.jet(Complex64::new(0.0, 0.0))?;
        return Ok(1.0 + 0.5 * origin.d2f * z);
    }
    let jet = f.jet(z)?;
    if jet.f.norm() < ZERO_THRESHOLD {
        return Err(Error::ZeroOfF { z });
    }
    Ok(z * jet.df / jet.f)
}

/// `1 + zf''(z)/f'(z)`.
pub fn convexity_p<F: Analytic + ?Sized>(f: &F, z: ComplexPoint) -> Result<Complex64> {
    let jet = f.jet(z)?;
    if jet.df.norm() < ZERO_THRESHOLD {
        return Err(Error::CriticalPoint { z });
    }
    Ok(1.0 + z * jet.d2f / jet.df)
}

fn check_beta_nonzero(beta: f64) -> Result<()> {
    if beta == 0.0 || !beta.is_finite() {
        return Err(Error::Domain {
            name: "beta",
            value: beta,
            interval: "finite, nonzero",
        });
    }
    Ok(())
}

/// The subordinating map `β(1-z)/(β-z)`.
pub fn mobius_target(beta: f64, z: Complex64) -> Result<Complex64> {
    check_beta_nonzero(beta)?;
    let den = beta - z;
    if den.norm() < ZERO_THRESHOLD {
        return Err(Error::Pole {
            map: "beta(1-z)/(beta-z)",
            at: z,
        });
    }
    Ok(beta * (1.0 - z) / den)
}

/// Inverse of [`mobius_target`]: `w = β(q-1)/(q-β)`.
pub fn mobius_invert_t1(beta: f64, q: Complex64) -> Result<Complex64> {
    check_beta_nonzero(beta)?;
    let den = q - beta;
    if den.norm() < ZERO_THRESHOLD {
        return Err(Error::Pole {
            map: "beta(q-1)/(q-beta)",
            at: q,
        });
    }
    Ok(beta * (q - 1.0) / den)
}

/// `w = β(1-q)/(1-βq)`, the inverse of `1/q = β(1-w)/(β-w)` written in `q`.
pub fn mobius_invert_t2(beta: f64, q: Complex64) -> Result<Complex64> {
    check_beta_nonzero(beta)?;
    let den = 1.0 - beta * q;
    if den.norm() < ZERO_THRESHOLD {
        return Err(Error::Pole {
            map: "beta(1-q)/(1-beta*q)",
            at: q,
        });
    }
    Ok(beta * (1.0 - q) / den)
}

/// A closed disk in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskSpec {
    pub center: Complex64,
    pub radius: f64,
}

impl DiskSpec {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Invalid(format!(
                "disk radius must be positive, got {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    /// `radius - |q - center|`; positive strictly inside.
    pub fn slack(&self, q: Complex64) -> f64 {
        self.radius - (q - self.center).norm()
    }
}

/// Image of the unit disk under `β(1-z)/(β-z)` for `β > 1`.
pub fn target_disk(beta: f64) -> Result<DiskSpec> {
    if !(beta > 1.0) || !beta.is_finite() {
        return Err(Error::Domain {
            name: "beta",
            value: beta,
            interval: "(1, inf)",
        });
    }
    let rho = beta / (beta + 1.0);
    DiskSpec::new(Complex64::new(rho, 0.0), rho)
}

/// The Alexander transform `g(z) = ∫₀^z f(t)/t dt` of a handle.
///
/// Only `g` itself needs quadrature; `g' = f/z` and `g'' = (zf' - f)/z²` are
/// closed form.
pub struct Alexander<'a> {
    f: &'a FunctionHandle,
    rule: GaussLegendre,
}

impl<'a> Alexander<'a> {
    pub fn new(f: &'a FunctionHandle, quad_nodes: usize) -> Result<Self> {
        if quad_nodes < 8 {
            return Err(Error::Invalid(format!(
                "quadrature needs at least 8 nodes, got {quad_nodes}"
            )));
        }
        let nodes = NonZeroUsize::new(quad_nodes).expect("checked above");
        Ok(Self {
            f,
            rule: GaussLegendre::new(nodes),
        })
    }

    fn integrate(&self, z: Complex64) -> Result<Complex64> {
        // t = s·z, s ∈ [0, 1]; dt/t = ds/s, so g(z) = ∫₀¹ f(sz)/s ds.
        let mut acc = Complex64::new(0.0, 0.0);
        for &(x, w) in self.rule.as_node_weight_pairs() {
            let s = 0.5 * (x + 1.0);
            let t = s * z;
            let ft = self.f.eval_jet(t)?.f;
            acc += 0.5 * w * ft / s;
        }
        Ok(acc)
    }
}

impl Analytic for Alexander<'_> {
    fn jet(&self, z: ComplexPoint) -> Result<Jet2> {
        let base = self.f.eval_jet(z)?;
        if z == Complex64::new(0.0, 0.0) {
            return Ok(Jet2 {
                f: Complex64::new(0.0, 0.0),
                df: Complex64::new(1.0, 0.0),
                d2f: 0.5 * base.d2f,
            });
        }
        Ok(Jet2 {
            f: self.integrate(z)?,
            df: base.f / z,
            d2f: (z * base.df - base.f) / (z * z),
        })
    }
}

/// Jet of the Alexander transform of `f` at `z`.
pub fn alexander_jet(f: &FunctionHandle, z: ComplexPoint, quad_nodes: usize) -> Result<Jet2> {
    Alexander::new(f, quad_nodes)?.jet(z)
}

/// Largest relative deviation between the closed-form `f'`, `f''` of `fh` and
/// central differences with step `h` along `+1` and `+i`, averaged.
///
/// `f'` is differenced from `f` and `f''` from the closed-form `f'`; a second
/// difference of `f` at `h = 1e-5` already carries rounding error near 1e-6.
/// Averaging the two directions cancels the `h²` term for analytic functions.
/// Deviations are relative to `max(|closed form|, 1)`.
pub fn derivative_check(fh: &FunctionHandle, z: ComplexPoint, h: f64) -> Result<f64> {
    if !(h > 0.0) || z.norm() + h >= 1.0 {
        return Err(Error::Invalid(format!(
            "step h = {h} must be positive with |z| + h < 1"
        )));
    }
    let jet = fh.eval_jet(z)?;
    let central = |g: &dyn Fn(Jet2) -> Complex64| -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for step in [Complex64::new(h, 0.0), Complex64::new(0.0, h)] {
            let plus = g(fh.eval_jet(z + step)?);
            let minus = g(fh.eval_jet(z - step)?);
            acc += (plus - minus) / (2.0 * step);
        }
        Ok(0.5 * acc)
    };
    let d1 = central(&|j| j.f)?;
    let d2 = central(&|j| j.df)?;

    let rel = |approx: Complex64, exact: Complex64| (approx - exact).norm() / exact.norm().max(1.0);
    Ok(rel(d1, jet.df).max(rel(d2, jet.d2f)))
}

/// Circles and angles on which disk functionals are sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingGrid {
    radii: Vec<f64>,
    angular_count: usize,
}

impl SamplingGrid {
    pub const DEFAULT_RADII: [f64; 3] = [0.5, 0.9, 0.99];
    pub const DEFAULT_ANGLES: usize = 4096;

    pub fn new(radii: Vec<f64>, angular_count: usize) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::Invalid("grid needs at least one radius".into()));
        }
        if radii.iter().any(|r| !(*r > 0.0 && *r < 1.0)) {
            return Err(Error::Invalid(format!(
                "radii must lie in (0, 1), got {radii:?}"
            )));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!(
                "radii must be strictly increasing, got {radii:?}"
            )));
        }
        if angular_count < 8 {
            return Err(Error::Invalid(format!(
                "angular count must be at least 8, got {angular_count}"
            )));
        }
        Ok(Self {
            radii,
            angular_count,
        })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }

    pub fn r_max(&self) -> f64 {
        *self.radii.last().expect("grid has at least one radius")
    }

    pub fn theta(&self, j: usize) -> f64 {
        TAU * j as f64 / self.angular_count as f64
    }

    /// The sample points on the circle of radius `r`, in angle order.
    pub fn circle(&self, r: f64) -> impl Iterator<Item = ComplexPoint> + '_ {
        (0..self.angular_count).map(move |j| Complex64::from_polar(r, self.theta(j)))
    }

    /// Every grid point, radius-major.
    pub fn points(&self) -> impl Iterator<Item = ComplexPoint> + '_ {
        self.radii.iter().flat_map(move |&r| self.circle(r))
    }
}

impl Default for SamplingGrid {
    fn default() -> Self {
        Self::new(Self::DEFAULT_RADII.to_vec(), Self::DEFAULT_ANGLES).expect("valid default grid")
    }
}
