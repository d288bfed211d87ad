//! Bound states of a neutral fermion in 1+1 dimensions coupled to the
//! pseudoscalar potential `V(x) = -ħ c q / |x| + V0`.
//!
//! The crate is `no_std` (it needs `alloc`) and has no IO. It provides
//!
//! * [`params`]: unit system, potential parameters, effective Kratzer
//!   quantities and the classification of the coupling regime,
//! * [`specfun`]: generalized Laguerre polynomials, Kummer's function and
//!   Gauss quadrature rules built on [`tridiag`],
//! * [`analytic`]: the closed-form spectrum, spinor assembly,
//!   normalization and residual/continuity checks,
//! * [`oracle`]: an independent finite-difference Sturm–Liouville solver
//!   and the common-eigenvalue matching between spinor components.
//!
//! Sign convention: the first-order system is
//! `(-E ± mc²) ψ± = i ħ c ψ∓' ± i V ψ∓`, so the upper component on `x > 0`
//! feels the inverse-square coefficient `ħ² q (q + 1) / 2m_eff`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analytic;
mod error;
pub(crate) mod math;
pub mod oracle;
pub mod params;
pub mod specfun;
pub mod tridiag;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use params::{
    classify_case, effective_params, exponents, CaseClass, EffectiveParams, PhysicalParams,
    PotentialParams, UnboundReason,
};
