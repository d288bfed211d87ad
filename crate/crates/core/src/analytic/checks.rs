use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;
use crate::params::{PhysicalParams, PotentialParams};

use super::profile::{Profile, Side};
use super::spinor::Eigenspinor;

const IDENTITY_TOL: f64 = 1e-8;
const TANH_SINH_STEP: f64 = 1.0 / 32.0;
const TANH_SINH_RANGE: f64 = 5.0;

/// Continuity data for one half-width `δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionRow {
    pub delta: f64,
    /// `|ψ+(δ) - ψ+(-δ)|`.
    pub jump_plus: f64,
    /// `|ψ-(δ) - ψ-(-δ)|`.
    pub jump_minus: f64,
    /// `|q| ∫_{-δ}^{δ} |ψ+| / |x| dx`.
    pub singular_plus: f64,
    /// `|q| ∫_{-δ}^{δ} |ψ-| / |x| dx`.
    pub singular_minus: f64,
    /// Upper bound on `jump_plus` from the integrated first-order system.
    pub bound_plus: f64,
    pub bound_minus: f64,
    /// Relative mismatch between each jump and the integrated right-hand
    /// side, larger of the two components.
    pub identity_residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionReport {
    pub rows: Vec<ConnectionRow>,
    /// Jumps and singular integrals shrink along the `δ` sequence.
    pub monotone: bool,
    /// Every jump stays below its bound.
    pub bounded: bool,
    pub identity_max: f64,
    pub pass: bool,
}

/// Integrates the first-order system across `(-δ, δ)` for each `δ` and
/// compares the component jumps with the integrated potential terms.
pub fn connection_check(spinor: &Eigenspinor, deltas: &[f64]) -> Result<ConnectionReport> {
    if !spinor.is_normalized() {
        return Err(Error::Unnormalized);
    }
    if deltas.is_empty()
        || deltas.iter().any(|d| !(d.is_finite() && *d > 0.0))
        || deltas.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::Domain("deltas must be positive and strictly decreasing"));
    }
    let rows: Vec<ConnectionRow> = deltas.iter().map(|&d| connection_row(spinor, d)).collect();
    let monotone = rows.windows(2).all(|w| {
        w[1].jump_plus <= w[0].jump_plus
            && w[1].jump_minus <= w[0].jump_minus
            && w[1].singular_plus <= w[0].singular_plus
            && w[1].singular_minus <= w[0].singular_minus
    });
    let slack = 1.0 + 1e-10;
    let bounded = rows
        .iter()
        .all(|r| r.jump_plus <= r.bound_plus * slack && r.jump_minus <= r.bound_minus * slack);
    let identity_max = rows.iter().fold(0.0f64, |m, r| m.max(r.identity_residual));
    Ok(ConnectionReport {
        rows,
        monotone,
        bounded,
        identity_max,
        pass: monotone && bounded && identity_max <= IDENTITY_TOL,
    })
}

struct Integrals {
    over_x: Complex64,
    plain: Complex64,
    abs_over_x: f64,
    abs_plain: f64,
}

fn component_integrals(parts: [(Complex64, Profile); 2], delta: f64) -> Integrals {
    let mut out = Integrals {
        over_x: Complex64::new(0.0, 0.0),
        plain: Complex64::new(0.0, 0.0),
        abs_over_x: 0.0,
        abs_plain: 0.0,
    };
    for (amp, p) in parts {
        let zd = 2.0 * p.kappa * delta;
        let h = |t: f64| {
            let z = zd * t;
            math::exp(-0.5 * z) * p.polynomial(z)
        };
        // ∫_0^δ f(2κx)/x dx = zd^s ∫_0^1 t^{s-1} h(zd t) dt
        let lead = math::powf(zd, p.s);
        let over_x = lead * tanh_sinh_unit(p.s - 1.0, h);
        let abs_over_x = lead * tanh_sinh_unit(p.s - 1.0, |t| math::abs(h(t)));
        let plain = delta * lead * tanh_sinh_unit(p.s, h);
        let abs_plain = delta * lead * tanh_sinh_unit(p.s, |t| math::abs(h(t)));
        out.over_x += amp * over_x;
        out.plain += amp * plain;
        out.abs_over_x += amp.norm() * abs_over_x;
        out.abs_plain += amp.norm() * abs_plain;
    }
    out
}

fn connection_row(spinor: &Eigenspinor, delta: f64) -> ConnectionRow {
    let st = &spinor.state;
    let phys = &spinor.phys;
    let q = spinor.pot.q;
    let hbar_c = phys.hbar * phys.c;
    let v0 = spinor.pot.v0 / hbar_c;
    let rest = phys.rest_energy();
    let e = spinor.energy;
    let i = Complex64::i();

    let left = spinor.point(-delta);
    let right = spinor.point(delta);
    let jump_plus = right.psi_plus - left.psi_plus;
    let jump_minus = right.psi_minus - left.psi_minus;

    let scale = spinor.norm_const.unwrap_or(1.0);
    let upper = component_integrals(
        [
            (Complex64::new(scale * spinor.upper_left, 0.0), st.upper_profile(Side::Left)),
            (Complex64::new(scale, 0.0), st.upper_profile(Side::Right)),
        ],
        delta,
    );
    let n = spinor.rel_const * scale;
    let lower = component_integrals(
        [(n, st.lower_profile(Side::Left)), (n, st.lower_profile(Side::Right))],
        delta,
    );

    let plus_terms = [
        -q * upper.over_x,
        v0 * upper.plain,
        i * ((e + rest) / hbar_c) * lower.plain,
    ];
    let minus_terms = [
        q * lower.over_x,
        -v0 * lower.plain,
        -i * ((rest - e) / hbar_c) * upper.plain,
    ];
    let mismatch = |jump: Complex64, terms: &[Complex64; 3]| {
        let rhs: Complex64 = terms.iter().sum();
        let scale = jump.norm() + terms.iter().map(|t| t.norm()).sum::<f64>();
        if scale > 0.0 {
            (jump - rhs).norm() / scale
        } else {
            0.0
        }
    };
    let identity_residual = mismatch(jump_plus, &plus_terms).max(mismatch(jump_minus, &minus_terms));

    let singular_plus = math::abs(q) * upper.abs_over_x;
    let singular_minus = math::abs(q) * lower.abs_over_x;
    ConnectionRow {
        delta,
        jump_plus: jump_plus.norm(),
        jump_minus: jump_minus.norm(),
        singular_plus,
        singular_minus,
        bound_plus: singular_plus
            + math::abs(v0) * upper.abs_plain
            + math::abs((e + rest) / hbar_c) * lower.abs_plain,
        bound_minus: singular_minus
            + math::abs(v0) * lower.abs_plain
            + math::abs((rest - e) / hbar_c) * upper.abs_plain,
        identity_residual,
    }
}

/// `∫_0^1 t^power f(t) dt` for `power > -1` by the tanh-sinh rule, which
/// absorbs the endpoint power law.
fn tanh_sinh_unit<F: Fn(f64) -> f64>(power: f64, f: F) -> f64 {
    let steps = (TANH_SINH_RANGE / TANH_SINH_STEP) as i32;
    let mut sum = 0.0;
    for k in -steps..=steps {
        let tau = k as f64 * TANH_SINH_STEP;
        let y = core::f64::consts::PI * math::sinh(tau);
        // t = 1 / (1 + e^{-y}) and 1 - t = 1 / (1 + e^{y}), both without cancellation
        let t = 1.0 / (1.0 + math::exp(-y));
        let one_minus_t = 1.0 / (1.0 + math::exp(y));
        if t <= 0.0 || one_minus_t <= 0.0 {
            continue;
        }
        let jac = core::f64::consts::PI * math::cosh(tau) * one_minus_t;
        // t^power · t(1 - t)
        let weight = math::exp((power + 1.0) * math::ln(t)) * jac;
        sum += weight * f(t);
    }
    sum * TANH_SINH_STEP
}

/// Local behaviour `|x|^power e^{rate |x|}` of a candidate mode on one
/// half-line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndBehaviour {
    pub power: f64,
    pub rate: f64,
}

impl EndBehaviour {
    fn integrable_at_origin(&self) -> bool {
        self.power > -0.5
    }

    fn integrable_at_infinity(&self) -> bool {
        self.rate < 0.0 || (self.rate == 0.0 && self.power < -0.5)
    }

    fn origin_limit(&self) -> f64 {
        if self.power > 0.0 {
            0.0
        } else if self.power == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    }
}

/// One candidate solution at `E = ±mc²`, namely `e^{∓v}` with
/// `v(x) = ∫ V / ħc = -q sgn(x) ln|x| + V0 x / ħc`, taken with one amplitude
/// across the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsolatedMode {
    pub energy: f64,
    /// `"lower"` for `E = +mc²`, `"upper"` for `E = -mc²`.
    pub component: &'static str,
    /// `-1` for `e^{-v}`, `+1` for `e^{+v}`.
    pub exponent_sign: f64,
    pub left: EndBehaviour,
    pub right: EndBehaviour,
    pub square_integrable: bool,
    pub continuous_at_origin: bool,
    pub admissible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsolatedModesReport {
    pub modes: [IsolatedMode; 2],
    pub any_admissible: bool,
}

pub fn isolated_modes_check(phys: &PhysicalParams, pot: &PotentialParams) -> IsolatedModesReport {
    let rate = pot.v0 / (phys.hbar * phys.c);
    let mode = |sigma: f64, energy: f64, component: &'static str| {
        let right = EndBehaviour {
            power: -sigma * pot.q,
            rate: sigma * rate,
        };
        let left = EndBehaviour {
            power: sigma * pot.q,
            rate: -sigma * rate,
        };
        let square_integrable = left.integrable_at_origin()
            && right.integrable_at_origin()
            && left.integrable_at_infinity()
            && right.integrable_at_infinity();
        let (l, r) = (left.origin_limit(), right.origin_limit());
        let continuous_at_origin = l == r && l.is_finite();
        IsolatedMode {
            energy,
            component,
            exponent_sign: sigma,
            left,
            right,
            square_integrable,
            continuous_at_origin,
            admissible: square_integrable && continuous_at_origin,
        }
    };
    let rest = phys.rest_energy();
    let modes = [mode(-1.0, rest, "lower"), mode(1.0, -rest, "upper")];
    IsolatedModesReport {
        modes,
        any_admissible: modes.iter().any(|m| m.admissible),
    }
}
