use num_complex::Complex64;
use thiserror::Error;

/// Errors raised while evaluating functions and functionals on the unit disk.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {z} is not inside the open unit disk")]
    OutsideDisk { z: Complex64 },

    #[error("{name} = {value} is outside the admissible interval {interval}")]
    Domain {
        name: &'static str,
        value: f64,
        interval: &'static str,
    },

    #[error("zero of f inside disk at {z}; zf'/f is singular there")]
    ZeroOfF { z: Complex64 },

    #[error("critical point of f at {z}; 1 + zf''/f' is singular there")]
    CriticalPoint { z: Complex64 },

    #[error("pole of {map} at {at}")]
    Pole { map: &'static str, at: Complex64 },

    #[error("degenerate {what} on the circle |z| = {r}")]
    Degenerate { what: &'static str, r: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
