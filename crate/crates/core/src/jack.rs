//! Boundary-maximum probes for functions `w` with `w(0) = 0`: find where `|w|`
//! peaks on a circle and measure `z₀w'(z₀)/w(z₀)` there, which should be a
//! real number at least 1.

use std::fmt;

use num_complex::Complex64;

use crate::analytic::{check_interior, FunctionHandle};
use crate::criteria::{induced_w, Theorem};
use crate::error::{Error, Result};
use crate::scan::{extremum_on_circle, Sense};

/// Minimum angular resolution of the coarse scan.
pub const MIN_PROBE_ANGLES: usize = 256;

/// Tolerance on `Im ratio` and on `k ≥ 1`.
pub const PROBE_TOL: f64 = 1e-3;

const DEGENERATE_MODULUS: f64 = 1e-13;

/// An analytic `w` on the disk with `w(0) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum SchwarzFunction {
    /// `zⁿ`
    Monomial(u32),
    /// `z · (z - a)/(1 - ā z)`, `|a| < 1`.
    Blaschke { a: Complex64 },
    /// `w` induced by one of the criteria from `zf'/f`.
    Induced {
        theorem: Theorem,
        f: FunctionHandle,
        beta: f64,
    },
    /// `e^{iφ} · inner`.
    Rotated {
        phi: f64,
        inner: Box<SchwarzFunction>,
    },
}

impl SchwarzFunction {
    pub fn monomial(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("monomial degree must be at least 1".into()));
        }
        Ok(Self::Monomial(n))
    }

    pub fn blaschke(a: Complex64) -> Result<Self> {
        if !(a.norm() < 1.0) {
            return Err(Error::Invalid(format!(
                "Blaschke factor needs |a| < 1, got {a}"
            )));
        }
        Ok(Self::Blaschke { a })
    }

    pub fn induced(theorem: Theorem, f: FunctionHandle, beta: f64) -> Result<Self> {
        theorem.check_beta(beta)?;
        Ok(Self::Induced { theorem, f, beta })
    }

    pub fn rotated(self, phi: f64) -> Self {
        Self::Rotated {
            phi,
            inner: Box::new(self),
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_interior(z)?;
        match self {
            Self::Monomial(n) => Ok(z.powu(*n)),
            Self::Blaschke { a } => Ok(z * (z - a) / (1.0 - a.conj() * z)),
            Self::Induced { theorem, f, beta } => induced_w(*theorem, f, *beta, z),
            Self::Rotated { phi, inner } => Ok(Complex64::from_polar(1.0, *phi) * inner.eval(z)?),
        }
    }
}

impl fmt::Display for SchwarzFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Monomial(n) => write!(f, "monomial:{n}"),
            Self::Blaschke { a } if a.im == 0.0 => write!(f, "blaschke:{}", a.re),
            Self::Blaschke { a } => write!(f, "blaschke:{},{}", a.re, a.im),
            Self::Induced {
                theorem,
                f: fh,
                beta,
            } => {
                let name = match fh.descriptor() {
                    crate::analytic::Descriptor::Family(spec) => spec.id.to_string(),
                    crate::analytic::Descriptor::Series(_) => "series".to_string(),
                };
                write!(f, "induced:t{theorem}:{name}:{beta}")
            }
            Self::Rotated { phi, inner } => write!(f, "rotated({phi}):{inner}"),
        }
    }
}

/// Angle in `[0, 2π)` maximizing `|w(r e^{iθ})|` and the maximum modulus.
pub fn boundary_argmax(w: &SchwarzFunction, r: f64, n: usize) -> Result<(f64, f64)> {
    check_probe_args(r, n)?;
    let ext = extremum_on_circle(
        |theta| w.eval(Complex64::from_polar(r, theta)).map(|v| v.norm()),
        n,
        Sense::Max,
    )?;
    if ext.value < DEGENERATE_MODULUS {
        return Err(Error::Degenerate {
            what: "w (vanishes on the circle)",
            r,
        });
    }
    Ok((ext.theta, ext.value))
}

fn check_probe_args(r: f64, n: usize) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain {
            name: "r",
            value: r,
            interval: "(0, 1)",
        });
    }
    if n < MIN_PROBE_ANGLES {
        return Err(Error::Invalid(format!(
            "probe needs at least {MIN_PROBE_ANGLES} angles, got {n}"
        )));
    }
    Ok(())
}

/// Probe of `z₀w'(z₀)/w(z₀)` at the boundary maximum of `|w|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JackProbe {
    pub r: f64,
    pub theta_star: f64,
    pub w_at_max: Complex64,
    pub ratio: Complex64,
    /// `Re ratio`.
    pub k_estimate: f64,
}

impl JackProbe {
    /// `|Im ratio| ≤ tol` and `Re ratio ≥ 1 - tol`.
    pub fn holds(&self, tol: f64) -> bool {
        self.ratio.im.abs() <= tol && self.k_estimate >= 1.0 - tol
    }
}

pub fn jack_probe(w: &SchwarzFunction, r: f64, n: usize) -> Result<JackProbe> {
    let (theta_star, _) = boundary_argmax(w, r, n)?;
    probe_at(w, r, theta_star)
}

/// Measures the ratio at `z₀ = r e^{iθ}` with central differences along `+1`
/// and `+i`, step `1e-6 · (1 - r)`.
pub fn probe_at(w: &SchwarzFunction, r: f64, theta: f64) -> Result<JackProbe> {
    let z0 = Complex64::from_polar(r, theta);
    let w0 = w.eval(z0)?;
    if w0.norm() < DEGENERATE_MODULUS {
        return Err(Error::Degenerate {
            what: "w(z0) (division by zero in z0 w'/w)",
            r,
        });
    }
    let h = 1e-6 * (1.0 - r);
    let hr = Complex64::new(h, 0.0);
    let hi = Complex64::new(0.0, h);
    let dw_r = (w.eval(z0 + hr)? - w.eval(z0 - hr)?) / (2.0 * hr);
    let dw_i = (w.eval(z0 + hi)? - w.eval(z0 - hi)?) / (2.0 * hi);
    let dw = 0.5 * (dw_r + dw_i);
    let ratio = z0 * dw / w0;
    Ok(JackProbe {
        r,
        theta_star: theta,
        w_at_max: w0,
        ratio,
        k_estimate: ratio.re,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilyId, FamilySpec};
    use std::f64::consts::PI;

    fn family(id: FamilyId, beta: Option<f64>) -> FunctionHandle {
        make_family(FamilySpec::new(id, beta).unwrap()).unwrap()
    }

    #[test]
    fn monomial_modulus_is_constant() {
        let (theta, max) = boundary_argmax(&SchwarzFunction::Monomial(3), 0.9, 1024).unwrap();
        assert!((max - 0.729).abs() < 1e-15);
        assert_eq!(theta, 0.0);
    }

    #[test]
    fn blaschke_peaks_at_minus_r() {
        let w = SchwarzFunction::blaschke(Complex64::new(0.5, 0.0)).unwrap();
        let (theta, max) = boundary_argmax(&w, 0.9, 1024).unwrap();
        assert!((theta - PI).abs() < 1e-6);
        assert!((max - 0.9 * 1.4 / 1.45).abs() < 1e-12);
    }

    #[test]
    fn induced_identity_for_quadratic() {
        let w =
            SchwarzFunction::induced(Theorem::One, family(FamilyId::Quadratic, None), 2.0).unwrap();
        let (_, max) = boundary_argmax(&w, 0.9, 1024).unwrap();
        assert!((max - 0.9).abs() < 1e-12);
    }

    #[test]
    fn monomial_ratio_is_degree() {
        for n in [1, 2, 5] {
            let probe = jack_probe(&SchwarzFunction::Monomial(n), 0.9, 1024).unwrap();
            assert!((probe.k_estimate - n as f64).abs() < 1e-6, "{n}: {probe:?}");
        }
    }

    #[test]
    fn halfplane_probe_uses_argmax_not_argmin() {
        let w = SchwarzFunction::induced(Theorem::Two, family(FamilyId::HalfPlane, None), -1.0)
            .unwrap();
        let probe = jack_probe(&w, 0.9, 4096).unwrap();
        assert!(probe.theta_star.min(2.0 * PI - probe.theta_star) < 1e-6);
        assert!((probe.k_estimate - 2.0 / 1.1).abs() < 1e-6);
        // At θ = π, a critical point of |w| that is a minimum, the ratio is below 1.
        let at_min = probe_at(&w, 0.9, PI).unwrap();
        assert!((at_min.k_estimate - 2.0 / 2.9).abs() < 1e-6);
        assert!(!at_min.holds(PROBE_TOL));
    }

    #[test]
    fn degenerate_and_invalid_inputs() {
        let zero_w =
            SchwarzFunction::induced(Theorem::One, family(FamilyId::Monomial(1), None), 2.0)
                .unwrap();
        assert!(matches!(
            boundary_argmax(&zero_w, 0.5, 256),
            Err(Error::Degenerate { .. })
        ));
        assert!(boundary_argmax(&SchwarzFunction::Monomial(2), 1.0, 256).is_err());
        assert!(boundary_argmax(&SchwarzFunction::Monomial(2), 0.5, 255).is_err());
        assert!(SchwarzFunction::blaschke(Complex64::new(1.0, 0.0)).is_err());
        assert!(SchwarzFunction::monomial(0).is_err());
    }
}
