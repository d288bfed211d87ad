//! Special-function kernels: generalized Laguerre polynomials of real
//! order, Kummer's confluent hypergeometric function and Gauss quadrature
//! rules built from Jacobi matrices.

mod kummer;
pub(crate) mod laguerre;
mod quadrature;

pub use kummer::kummer_m;
pub use laguerre::{binomial, laguerre, laguerre_derivative};
pub use quadrature::{gauss_laguerre, gauss_legendre, LegendreRule, QuadratureRule};

/// `Γ(x)` for real `x`.
pub fn gamma(x: f64) -> f64 {
    crate::math::tgamma(x)
}

/// `ln |Γ(x)|`.
pub fn ln_gamma(x: f64) -> f64 {
    crate::math::lgamma(x)
}
