use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::params::{indicial_exponent, Channel, EffectiveParams};
use crate::tridiag::SymTridiagonal;

/// Largest admissible `h κ` for the ground level.
pub const RESOLUTION_LIMIT: f64 = 0.05;
/// Domain length in units of `(B + 1) / κ_B` for the targeted level.
pub const DEFAULT_LENGTH_FACTOR: f64 = 12.0;

const MIN_POINTS: usize = 100;
const OUTER_FRACTION: f64 = 0.1;
const OUTER_MASS_LIMIT: f64 = 1e-6;

/// Uniform grid on `(0, L)` with nodes `h, 2h, ..., npts h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdGrid {
    pub length: f64,
    pub npts: usize,
    pub h: f64,
}

impl FdGrid {
    pub fn new(length: f64, npts: usize) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidParameter {
                name: "length",
                value: length,
                expected: "finite and > 0",
            });
        }
        if npts < MIN_POINTS {
            return Err(Error::InvalidParameter {
                name: "npts",
                value: npts as f64,
                expected: ">= 100",
            });
        }
        Ok(Self {
            length,
            npts,
            h: length / (npts + 1) as f64,
        })
    }

    /// Grid sized for the first `levels` levels of `channel`:
    /// `L = factor (B + 1) / κ_B` for the highest of them.
    pub fn for_channel(channel: &ChannelSpec, levels: u32, npts: usize, factor: f64) -> Result<Self> {
        if levels == 0 {
            return Err(Error::Domain("at least one level is needed to size the grid"));
        }
        if channel.coulomb_strength <= 0.0 {
            return Err(Error::Domain("a repulsive channel has no bound-state length scale"));
        }
        let b = channel.exponent() + (levels - 1) as f64;
        Self::new(factor * (b + 1.0) / channel.kappa(levels - 1), npts)
    }

    pub fn node(&self, i: usize) -> f64 {
        (i + 1) as f64 * self.h
    }

    /// Same domain with the spacing halved.
    pub fn refined(&self) -> Self {
        Self {
            length: self.length,
            npts: 2 * self.npts + 1,
            h: self.h / 2.0,
        }
    }
}

/// `-ħ²/2m_eff ψ'' + (-g/x + a/x²) ψ = E_eff ψ` on `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    /// `g = ħ c q_eff`.
    pub coulomb_strength: f64,
    pub inv_square_coeff: f64,
    pub m_eff: f64,
    pub hbar: f64,
}

impl ChannelSpec {
    pub fn new(coulomb_strength: f64, inv_square_coeff: f64, m_eff: f64, hbar: f64) -> Result<Self> {
        if !(m_eff.is_finite() && m_eff > 0.0 && hbar.is_finite() && hbar > 0.0) {
            return Err(Error::Domain("channel needs finite positive m_eff and hbar"));
        }
        if !(coulomb_strength.is_finite() && inv_square_coeff.is_finite()) {
            return Err(Error::Domain("channel coefficients must be finite"));
        }
        let critical = -hbar * hbar / (8.0 * m_eff);
        if inv_square_coeff < critical * (1.0 + 1e-12) {
            return Err(Error::InvalidParameter {
                name: "inv_square_coeff",
                value: inv_square_coeff,
                expected: ">= -hbar^2 / (8 m_eff)",
            });
        }
        Ok(Self {
            coulomb_strength,
            inv_square_coeff,
            m_eff,
            hbar,
        })
    }

    pub fn from_effective(eff: &EffectiveParams, channel: Channel) -> Self {
        Self {
            coulomb_strength: eff.coulomb_strength(),
            inv_square_coeff: eff.coefficient(channel),
            m_eff: eff.m_eff,
            hbar: eff.hbar,
        }
    }

    /// Origin exponent `s` with `ψ ~ x^s`.
    pub fn exponent(&self) -> f64 {
        indicial_exponent(self.inv_square_coeff, self.m_eff, self.hbar)
    }

    pub fn potential(&self, x: f64) -> f64 {
        -self.coulomb_strength / x + self.inv_square_coeff / (x * x)
    }

    /// `κ_k = m g / (ħ² (s + k))`.
    pub fn kappa(&self, k: u32) -> f64 {
        self.m_eff * self.coulomb_strength / (self.hbar * self.hbar * (self.exponent() + k as f64))
    }

    /// Closed-form level `-m g² / (2 ħ² (s + k)²)`, `None` without an
    /// attractive Coulomb tail.
    pub fn analytic_level(&self, k: u32) -> Option<f64> {
        if self.coulomb_strength <= 0.0 {
            return None;
        }
        let b = self.exponent() + k as f64;
        let g = self.coulomb_strength / self.hbar;
        Some(-self.m_eff * g * g / (2.0 * b * b))
    }

    pub fn analytic_levels(&self, count: u32) -> Vec<f64> {
        (0..count).filter_map(|k| self.analytic_level(k)).collect()
    }
}

/// How the inverse-square term enters the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FdScheme {
    /// `a / x_i²` sampled at the nodes.
    Sampled,
    /// The node value that makes the discrete Laplacian annihilate the
    /// origin power law `x^s`, namely
    /// `ħ²/(2m h²) ((i+1)^s - 2 i^s + (i-1)^s) / i^s`; it tends to `a / x_i²`
    /// away from the origin.
    ExponentMatched,
}

impl FdScheme {
    /// Leading power of `h` in the eigenvalue error: `min(2, 2s - 1)` when
    /// sampled, `min(2, 2s)` when exponent-matched.
    pub fn order(&self, channel: &ChannelSpec) -> f64 {
        let s = channel.exponent();
        match self {
            FdScheme::Sampled => (2.0 * s - 1.0).min(2.0),
            FdScheme::ExponentMatched => (2.0 * s).min(2.0),
        }
    }
}

/// Negative finite-difference eigenvalues of one channel.
#[derive(Debug, Clone, PartialEq)]
pub struct FdLevels {
    pub levels: Vec<f64>,
    /// `h κ` of the lowest level, when there is one.
    pub h_kappa: Option<f64>,
    /// The highest reported level has more than `1e-6` of its weight in
    /// the outer tenth of the domain.
    pub truncated: bool,
    pub outer_mass: f64,
}

/// The (at most) `k` lowest levels of the three-point discretization with
/// the potential sampled at the nodes and Dirichlet ends; only negative
/// eigenvalues are reported.
pub fn fd_effective_levels(channel: &ChannelSpec, grid: &FdGrid, k: usize) -> Result<FdLevels> {
    fd_levels_with(channel, grid, k, FdScheme::Sampled)
}

pub fn fd_levels_with(channel: &ChannelSpec, grid: &FdGrid, k: usize, scheme: FdScheme) -> Result<FdLevels> {
    let n = grid.npts;
    let kinetic = channel.hbar * channel.hbar / (2.0 * channel.m_eff * grid.h * grid.h);
    let s = channel.exponent();
    let diag: Vec<f64> = (0..n)
        .map(|i| {
            let x = grid.node(i);
            let inv_square = match scheme {
                FdScheme::Sampled => channel.inv_square_coeff / (x * x),
                FdScheme::ExponentMatched => {
                    let j = (i + 1) as f64;
                    let here = math::powf(j, s);
                    let below = if i == 0 { 0.0 } else { math::powf(j - 1.0, s) };
                    kinetic * (math::powf(j + 1.0, s) - 2.0 * here + below) / here
                }
            };
            2.0 * kinetic - channel.coulomb_strength / x + inv_square
        })
        .collect();
    let off = alloc::vec![-kinetic; n - 1];
    let matrix = SymTridiagonal::new(diag, off)?;
    let levels: Vec<f64> = matrix
        .lowest(k)
        .into_iter()
        .take_while(|e| *e < 0.0)
        .collect();
    let h_kappa = levels
        .first()
        .map(|e| grid.h * math::sqrt(-2.0 * channel.m_eff * e) / channel.hbar);
    if let Some(hk) = h_kappa {
        if hk > RESOLUTION_LIMIT {
            return Err(Error::Resolution {
                h_kappa: hk,
                limit: RESOLUTION_LIMIT,
            });
        }
    }
    let outer_mass = match levels.last() {
        Some(&e) => {
            let v = matrix.eigenvector(e);
            let start = ((1.0 - OUTER_FRACTION) * n as f64) as usize;
            let total: f64 = v.iter().map(|x| x * x).sum();
            v[start..].iter().map(|x| x * x).sum::<f64>() / total
        }
        None => 0.0,
    };
    Ok(FdLevels {
        levels,
        h_kappa,
        truncated: outer_mass > OUTER_MASS_LIMIT,
        outer_mass,
    })
}

/// One Richardson step between `grid` and its refinement, with the error
/// order of `scheme`. Levels present on both grids are combined.
pub fn richardson_levels(channel: &ChannelSpec, grid: &FdGrid, k: usize, scheme: FdScheme) -> Result<Vec<f64>> {
    let coarse = fd_levels_with(channel, grid, k, scheme)?;
    let fine = fd_levels_with(channel, &grid.refined(), k, scheme)?;
    let gain = math::powf(2.0, scheme.order(channel)) - 1.0;
    Ok(coarse
        .levels
        .iter()
        .zip(&fine.levels)
        .map(|(c, f)| f + (f - c) / gain)
        .collect())
}
