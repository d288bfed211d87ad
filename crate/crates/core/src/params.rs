//! Unit system, potential parameters and the effective Kratzer problem.
//!
//! Squaring the first-order Dirac system turns each spinor component into a
//! Schrödinger-like problem with mass `m_eff`, Coulomb strength `ħ c q_eff`
//! and an inverse-square coefficient that depends on the component and on
//! the side of the origin.

use core::fmt;

use crate::error::{Error, Result};
use crate::math;

/// Rest mass, light speed and reduced Planck constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    pub mass: f64,
    pub c: f64,
    pub hbar: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, c: f64, hbar: f64) -> Result<Self> {
        if !(mass.is_finite() && mass >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "mass",
                value: mass,
                expected: "finite and >= 0",
            });
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParameter {
                name: "c",
                value: c,
                expected: "finite and > 0",
            });
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidParameter {
                name: "hbar",
                value: hbar,
                expected: "finite and > 0",
            });
        }
        Ok(Self { mass, c, hbar })
    }

    /// `m c²`.
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.c * self.c
    }
}

impl Default for PhysicalParams {
    /// Natural units, `m = c = ħ = 1`.
    fn default() -> Self {
        Self {
            mass: 1.0,
            c: 1.0,
            hbar: 1.0,
        }
    }
}

/// Dimensionless coupling `q` and background `V0` of
/// `V(x) = -ħ c q / |x| + V0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub q: f64,
    pub v0: f64,
}

impl PotentialParams {
    pub fn new(q: f64, v0: f64) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::InvalidParameter {
                name: "q",
                value: q,
                expected: "finite",
            });
        }
        if !v0.is_finite() {
            return Err(Error::InvalidParameter {
                name: "V0",
                value: v0,
                expected: "finite",
            });
        }
        Ok(Self { q, v0 })
    }

    /// `V(x)`; singular at the origin.
    pub fn potential(&self, phys: &PhysicalParams, x: f64) -> f64 {
        -phys.hbar * phys.c * self.q / math::abs(x) + self.v0
    }

    /// The map `(q, V0) -> (-q, -V0)`, which exchanges the roles of the two
    /// spinor components.
    pub fn conjugate(&self) -> Self {
        Self {
            q: -self.q,
            v0: -self.v0,
        }
    }
}

/// Parameters of the effective Kratzer problems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveParams {
    pub m_eff: f64,
    pub q_eff: f64,
    /// Inverse-square coefficient felt by `ψ+` for `x > 0`.
    pub a_upper_right: f64,
    /// Inverse-square coefficient felt by `ψ+` for `x < 0`.
    pub a_upper_left: f64,
    /// Inverse-square coefficient felt by `ψ-` for `x > 0`.
    pub a_lower_right: f64,
    /// Inverse-square coefficient felt by `ψ-` for `x < 0`.
    pub a_lower_left: f64,
    /// Effective Compton wavelength `ħ / (m_eff c)`.
    pub lambda_c_eff: f64,
    pub(crate) hbar: f64,
    pub(crate) c: f64,
}

impl EffectiveParams {
    /// `-ħ² / (8 m_eff)`; an inverse-square coefficient below this value
    /// would make the Hamiltonian collapse to the centre.
    pub fn critical_coefficient(&self) -> f64 {
        -self.hbar * self.hbar / (8.0 * self.m_eff)
    }

    /// `m_eff c²`, the continuum threshold.
    pub fn threshold(&self) -> f64 {
        self.m_eff * self.c * self.c
    }

    /// Coulomb strength `ħ c q_eff` of the effective problem.
    pub fn coulomb_strength(&self) -> f64 {
        self.hbar * self.c * self.q_eff
    }

    pub fn coefficient(&self, channel: Channel) -> f64 {
        match channel {
            Channel::UpperRight => self.a_upper_right,
            Channel::UpperLeft => self.a_upper_left,
            Channel::LowerRight => self.a_lower_right,
            Channel::LowerLeft => self.a_lower_left,
        }
    }
}

/// One spinor component restricted to one half-line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    UpperRight,
    UpperLeft,
    LowerRight,
    LowerLeft,
}

impl Channel {
    pub const ALL: [Channel; 4] = [
        Channel::UpperRight,
        Channel::UpperLeft,
        Channel::LowerRight,
        Channel::LowerLeft,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Channel::UpperRight => "upper_right",
            Channel::UpperLeft => "upper_left",
            Channel::LowerRight => "lower_right",
            Channel::LowerLeft => "lower_left",
        }
    }
}

/// Computes `m_eff`, `q_eff`, the four inverse-square coefficients and the
/// effective Compton wavelength.
pub fn effective_params(phys: &PhysicalParams, pot: &PotentialParams) -> Result<EffectiveParams> {
    let PhysicalParams { mass, c, hbar } = *phys;
    if mass == 0.0 && pot.v0 == 0.0 {
        return Err(Error::DegenerateParameters);
    }
    let c2 = c * c;
    // sqrt(m² + V0²/c⁴) stays finite for a massless fermion
    let m_eff = math::sqrt(mass * mass + (pot.v0 / c2) * (pot.v0 / c2));
    let q_eff = pot.q * pot.v0 / (m_eff * c2);
    let unit = hbar * hbar / (2.0 * m_eff);
    let repulsive = unit * pot.q * (pot.q + 1.0);
    let attractive = unit * pot.q * (pot.q - 1.0);
    Ok(EffectiveParams {
        m_eff,
        q_eff,
        a_upper_right: repulsive,
        a_upper_left: attractive,
        a_lower_right: attractive,
        a_lower_left: repulsive,
        lambda_c_eff: hbar / (m_eff * c),
        hbar,
        c,
    })
}

/// Why a parameter set binds nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnboundReason {
    ZeroBackground,
    SubcriticalCoupling,
    SignMismatch,
}

impl UnboundReason {
    pub fn code(&self) -> &'static str {
        match self {
            UnboundReason::ZeroBackground => "ZeroBackground",
            UnboundReason::SubcriticalCoupling => "SubcriticalCoupling",
            UnboundReason::SignMismatch => "SignMismatch",
        }
    }
}

impl fmt::Display for UnboundReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Spectral family of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseClass {
    /// `q >= 1/2`, `V0 > 0`; principal index `n = 1, 2, ...`.
    CaseA,
    /// `q <= -1/2`, `V0 < 0`; principal index `n = 0, 1, ...`.
    CaseB,
    Unbound(UnboundReason),
}

impl CaseClass {
    pub fn is_bound(&self) -> bool {
        !matches!(self, CaseClass::Unbound(_))
    }

    /// Smallest admissible principal index, `None` when unbound.
    pub fn min_index(&self) -> Option<u32> {
        match self {
            CaseClass::CaseA => Some(1),
            CaseClass::CaseB => Some(0),
            CaseClass::Unbound(_) => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CaseClass::CaseA => "A",
            CaseClass::CaseB => "B",
            CaseClass::Unbound(_) => "Unbound",
        }
    }
}

pub fn classify_case(pot: &PotentialParams) -> CaseClass {
    let PotentialParams { q, v0 } = *pot;
    if v0 == 0.0 {
        CaseClass::Unbound(UnboundReason::ZeroBackground)
    } else if math::abs(q) < 0.5 {
        CaseClass::Unbound(UnboundReason::SubcriticalCoupling)
    } else if q >= 0.5 && v0 > 0.0 {
        CaseClass::CaseA
    } else if q <= -0.5 && v0 < 0.0 {
        CaseClass::CaseB
    } else {
        CaseClass::Unbound(UnboundReason::SignMismatch)
    }
}

/// Origin exponents `(s+, s-)` of the upper and lower components on
/// `x > 0`: `s± = 1/2 + |q ± 1/2|`. On `x < 0` the two values swap.
pub fn exponents(q: f64) -> (f64, f64) {
    (0.5 + math::abs(q + 0.5), 0.5 + math::abs(q - 0.5))
}

/// Larger root of `s (s - 1) = 2 m a / ħ²`, the square-integrable origin
/// exponent of a channel with inverse-square coefficient `a`.
pub fn indicial_exponent(coefficient: f64, m_eff: f64, hbar: f64) -> f64 {
    let disc = 1.0 + 8.0 * m_eff * coefficient / (hbar * hbar);
    0.5 * (1.0 + math::sqrt(disc.max(0.0)))
}
