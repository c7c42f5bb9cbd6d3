//! Numerical checks of sufficient conditions for starlikeness and convexity of
//! normalized analytic functions on the unit disk.
//!
//! The crate evaluates second-order jets of functions of class 𝒜, the
//! functionals `zf'/f` and `1 + zf''/f'`, and runs grid checks of two
//! convexity-to-starlikeness criteria whose conclusions are subordinations to
//! the Möbius map `β(1-z)/(β-z)`. A boundary-maximum probe exhibits the
//! `z₀w'(z₀) = k w(z₀)`, `k ≥ 1` relation the criteria rest on.

// Range checks are written `!(x > lo)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod criteria;
pub mod error;
pub mod families;
pub mod jack;
pub mod scan;

pub use analytic::{
    alexander_jet, convexity_p, derivative_check, mobius_invert_t1, mobius_invert_t2,
    mobius_target, starlike_q, target_disk, Alexander, Analytic, ComplexPoint, Descriptor,
    DiskSpec, FunctionHandle, Jet2, SamplingGrid,
};
pub use criteria::{
    order_of_convexity, order_of_starlikeness, proof_boundary_value_t1, proof_boundary_value_t2,
    proof_extremal_t1, proof_extremal_t2, run_t1, run_t2, t1_bound, t2_bound, BoundaryScan,
    ConclusionChecks, ConclusionReport, HypothesisReport, Theorem, TheoremRun,
};
pub use error::{Error, Result};
pub use families::{closed_form_p, closed_form_q, make_family, FamilyId, FamilySpec};
pub use jack::{boundary_argmax, jack_probe, JackProbe, SchwarzFunction};
pub use num_complex::Complex64;
