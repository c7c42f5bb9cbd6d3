//! The four parametric families `f = (1 - (1-z)^μ)/μ` attached to the two
//! starlikeness criteria, plus a few builtin functions with known answers.
//!
//! Each family also exposes closed forms for `zf'/f` and
//! `1 + zf''/f'`; they are evaluated independently of the generic jet path
//! and serve as cross-check oracles.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::analytic::{one_minus_z_pow, ComplexPoint, Descriptor, FunctionHandle, Kernel};
use crate::error::{Error, Result};

/// Below this `|μ|` a family is replaced by its limit `-Log(1-z)`.
pub const LOG_LIMIT_MU: f64 = 1e-9;

/// Identifies a parametric family or a builtin function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// `(β-1)/2 · (1 - (1-z)^{2/(β-1)})`, `2 ≤ β < 3`.
    Ex1High,
    /// `(β+1)/(2(2β-1)) · (1 - (1-z)^{2(2β-1)/(β+1)})`, `1 < β ≤ 2`.
    Ex1Low,
    /// `β > 1`.
    Ex2Pos,
    /// `β ≤ -1`.
    Ex2Neg,
    /// `z/(1-z)²`
    Koebe,
    /// `z/(1-z)`
    HalfPlane,
    /// `z - z²/2`
    Quadratic,
    /// `z` for `n = 1`, otherwise `z + zⁿ/n`.
    Monomial(u32),
}

impl FamilyId {
    pub const PARAMETRIC: [FamilyId; 4] = [Self::Ex1High, Self::Ex1Low, Self::Ex2Pos, Self::Ex2Neg];

    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            Self::Ex1High | Self::Ex1Low | Self::Ex2Pos | Self::Ex2Neg
        )
    }

    /// Human-readable admissible β interval; builtins take no β.
    pub fn interval(self) -> &'static str {
        match self {
            Self::Ex1High => "[2, 3)",
            Self::Ex1Low => "(1, 2]",
            Self::Ex2Pos => "(1, inf)",
            Self::Ex2Neg => "(-inf, -1]",
            _ => "none (builtin takes no beta)",
        }
    }

    pub fn admits(self, beta: f64) -> bool {
        if !beta.is_finite() {
            return false;
        }
        match self {
            Self::Ex1High => (2.0..3.0).contains(&beta),
            Self::Ex1Low => beta > 1.0 && beta <= 2.0,
            Self::Ex2Pos => beta > 1.0,
            Self::Ex2Neg => beta <= -1.0,
            _ => false,
        }
    }

    /// Exponent μ of the family at `beta`.
    pub fn exponent(self, beta: f64) -> Option<f64> {
        let b = beta;
        match self {
            Self::Ex1High => Some(2.0 / (b - 1.0)),
            Self::Ex1Low => Some(2.0 * (2.0 * b - 1.0) / (b + 1.0)),
            Self::Ex2Pos => Some((-b * b + 2.0 * b + 1.0) / (b * (b + 1.0))),
            Self::Ex2Neg => Some(-(b * b + 1.0) / (b * (b - 1.0))),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ex1High => f.write_str("ex1_high"),
            Self::Ex1Low => f.write_str("ex1_low"),
            Self::Ex2Pos => f.write_str("ex2_pos"),
            Self::Ex2Neg => f.write_str("ex2_neg"),
            Self::Koebe => f.write_str("builtin_koebe"),
            Self::HalfPlane => f.write_str("builtin_halfplane"),
            Self::Quadratic => f.write_str("builtin_quadratic"),
            Self::Monomial(n) => write!(f, "builtin_monomial:{n}"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "ex1_high" => Self::Ex1High,
            "ex1_low" => Self::Ex1Low,
            "ex2_pos" => Self::Ex2Pos,
            "ex2_neg" => Self::Ex2Neg,
            "builtin_koebe" => Self::Koebe,
            "builtin_halfplane" => Self::HalfPlane,
            "builtin_quadratic" => Self::Quadratic,
            "builtin_identity" => Self::Monomial(1),
            other => {
                let n = other
                    .strip_prefix("builtin_monomial:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .filter(|n| *n >= 1)
                    .ok_or_else(|| {
                        Error::Invalid(format!(
                            "unknown family {other:?}; expected one of ex1_high, ex1_low, \
                             ex2_pos, ex2_neg, builtin_koebe, builtin_halfplane, \
                             builtin_quadratic, builtin_identity, builtin_monomial:<n>"
                        ))
                    })?;
                Self::Monomial(n)
            }
        };
        Ok(id)
    }
}

/// A family id together with its β (absent for builtins).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub beta: Option<f64>,
}

impl FamilySpec {
    /// Validates β against the id's admissible interval.
    pub fn new(id: FamilyId, beta: Option<f64>) -> Result<Self> {
        match (id.is_parametric(), beta) {
            (true, Some(b)) if id.admits(b) => Ok(Self { id, beta }),
            (true, Some(b)) => Err(Error::Domain {
                name: "beta",
                value: b,
                interval: id.interval(),
            }),
            (true, None) => Err(Error::Invalid(format!(
                "family {id} requires beta in {}",
                id.interval()
            ))),
            (false, _) => Ok(Self { id, beta: None }),
        }
    }

    pub fn parametric(id: FamilyId, beta: f64) -> Result<Self> {
        Self::new(id, Some(beta))
    }

    pub fn builtin(id: FamilyId) -> Result<Self> {
        if id.is_parametric() {
            return Err(Error::Invalid(format!("{id} is not a builtin")));
        }
        Self::new(id, None)
    }

    fn parametric_parts(&self) -> Result<(FamilyId, f64)> {
        match (self.id.is_parametric(), self.beta) {
            (true, Some(b)) => Ok((self.id, b)),
            _ => Err(Error::Invalid(format!("no closed form for {}", self.id))),
        }
    }
}

/// Builds the handle for a family; near `μ = 0` the log limit takes over.
pub fn make_family(spec: FamilySpec) -> Result<FunctionHandle> {
    let spec = FamilySpec::new(spec.id, spec.beta)?;
    let kernel = match spec.id {
        FamilyId::Koebe => Kernel::Koebe,
        FamilyId::HalfPlane => Kernel::HalfPlane,
        FamilyId::Quadratic => Kernel::Quadratic,
        FamilyId::Monomial(n) => Kernel::Monomial(n),
        id => {
            let beta = spec.beta.expect("validated parametric family");
            let mu = id.exponent(beta).expect("parametric family");
            if mu.abs() < LOG_LIMIT_MU {
                Kernel::NegLog
            } else {
                Kernel::Power { mu }
            }
        }
    };
    Ok(FunctionHandle::from_parts(Descriptor::Family(spec), kernel))
}

fn at_origin(z: ComplexPoint) -> bool {
    z == Complex64::new(0.0, 0.0)
}

/// Closed form for `zf'/f` of a parametric family.
pub fn closed_form_q(spec: &FamilySpec, z: ComplexPoint) -> Result<Complex64> {
    let (id, b) = spec.parametric_parts()?;
    if at_origin(z) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let pw = |p: f64| one_minus_z_pow(z, p);
    let q = match id {
        FamilyId::Ex1High => {
            2.0 * z * pw((3.0 - b) / (b - 1.0)) / ((b - 1.0) * (1.0 - pw(2.0 / (b - 1.0))))
        }
        FamilyId::Ex1Low => {
            2.0 * (2.0 * b - 1.0) * z * pw(3.0 * (b - 1.0) / (b + 1.0))
                / ((b + 1.0) * (1.0 - pw(2.0 * (2.0 * b - 1.0) / (b + 1.0))))
        }
        FamilyId::Ex2Pos => {
            let s = b * (b + 1.0);
            let num = -b * b + 2.0 * b + 1.0;
            num * z / (s * pw((2.0 * b * b - b - 1.0) / s) * (1.0 - pw(num / s)))
        }
        FamilyId::Ex2Neg => {
            let s = b * (b - 1.0);
            let num = b * b + 1.0;
            -num * z / (s * pw((2.0 * b * b - b + 1.0) / s) * (1.0 - pw(-num / s)))
        }
        _ => unreachable!("parametric_parts admits parametric families only"),
    };
    if !q.is_finite() {
        // μ = 0 makes the closed-form quotient 0/0.
        return Err(Error::Invalid(format!(
            "closed form for {id} is singular at beta = {b}"
        )));
    }
    Ok(q)
}

/// Rational closed form for `1 + zf''/f'` of a parametric family.
pub fn closed_form_p(spec: &FamilySpec, z: ComplexPoint) -> Result<Complex64> {
    let (id, b) = spec.parametric_parts()?;
    let one_minus = 1.0 - z;
    if one_minus.norm() == 0.0 {
        return Err(Error::Pole {
            map: "closed form 1 + zf''/f'",
            at: z,
        });
    }
    let p = match id {
        FamilyId::Ex1High => (b - 1.0 - 2.0 * z) / ((b - 1.0) * one_minus),
        FamilyId::Ex1Low => (b + 1.0 - 2.0 * (2.0 * b - 1.0) * z) / ((b + 1.0) * one_minus),
        FamilyId::Ex2Pos => {
            let s = b * (b + 1.0);
            (s + (b * b - 2.0 * b - 1.0) * z) / (s * one_minus)
        }
        FamilyId::Ex2Neg => {
            let s = b * (b - 1.0);
            (s + (b * b + 1.0) * z) / (s * one_minus)
        }
        _ => unreachable!("parametric_parts admits parametric families only"),
    };
    Ok(p)
}
