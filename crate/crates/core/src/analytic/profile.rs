use crate::math;
use crate::specfun::laguerre::{laguerre_derivative_unchecked, laguerre_unchecked};

/// Half-line on which a profile lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn of(x: f64) -> Side {
        if x < 0.0 {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// `dz/dx / (2κ)`.
    pub fn orientation(&self) -> f64 {
        match self {
            Side::Left => -1.0,
            Side::Right => 1.0,
        }
    }
}

/// `f(z) = z^s e^{-z/2} L_n^{2s-1}(z)` with `z = 2 κ |x|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Profile {
    pub s: f64,
    pub degree: u32,
    pub kappa: f64,
}

impl Profile {
    pub fn new(s: f64, degree: u32, kappa: f64) -> Self {
        Self { s, degree, kappa }
    }

    pub fn order(&self) -> f64 {
        2.0 * self.s - 1.0
    }

    pub fn z(&self, x: f64) -> f64 {
        2.0 * self.kappa * math::abs(x)
    }

    pub fn polynomial(&self, z: f64) -> f64 {
        laguerre_unchecked(self.degree, self.order(), z)
    }

    pub fn value_z(&self, z: f64) -> f64 {
        if z <= 0.0 {
            return 0.0;
        }
        math::exp(self.s * math::ln(z) - 0.5 * z) * self.polynomial(z)
    }

    /// `df/dz`.
    pub fn derivative_z(&self, z: f64) -> f64 {
        if z <= 0.0 {
            return 0.0;
        }
        let alpha = self.order();
        let l = laguerre_unchecked(self.degree, alpha, z);
        let dl = laguerre_derivative_unchecked(self.degree, alpha, z);
        math::exp((self.s - 1.0) * math::ln(z) - 0.5 * z) * ((self.s - 0.5 * z) * l + z * dl)
    }

    /// Value at position `x` (either sign).
    pub fn value(&self, x: f64) -> f64 {
        self.value_z(self.z(x))
    }

    /// `d/dx` at position `x`.
    pub fn derivative(&self, x: f64) -> f64 {
        2.0 * self.kappa * Side::of(x).orientation() * self.derivative_z(self.z(x))
    }

    /// Number of sign changes of the polynomial factor on `(0, ∞)`.
    pub fn nodes(&self) -> u32 {
        self.degree
    }
}
