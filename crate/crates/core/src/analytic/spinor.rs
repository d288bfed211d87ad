use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;
use crate::params::{PhysicalParams, PotentialParams};
use crate::specfun::{gauss_laguerre, QuadratureRule};

use super::profile::{Profile, Side};
use super::spectrum::BoundState;

const REFERENCE_Z: f64 = 2.0;
const MAX_SHIFTS: usize = 5;
const NODE_GUARD: f64 = 1e-4;
const COARSE_POINTS: usize = 64;
const FINE_POINTS: usize = 128;
const RULE_AGREEMENT: f64 = 1e-9;
const GRID_POINTS: usize = 400;
const GRID_INNER: f64 = 1e-3;
const GRID_OUTER: f64 = 30.0;

/// Which member of the `±E` pair a spinor belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnergySign {
    Positive,
    Negative,
}

impl EnergySign {
    pub const BOTH: [EnergySign; 2] = [EnergySign::Positive, EnergySign::Negative];

    pub fn value(&self) -> f64 {
        match self {
            EnergySign::Positive => 1.0,
            EnergySign::Negative => -1.0,
        }
    }
}

/// Both components and their first derivatives at one position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorPoint {
    pub psi_plus: Complex64,
    pub psi_minus: Complex64,
    pub dpsi_plus: Complex64,
    pub dpsi_minus: Complex64,
}

/// Spinor values on a grid that excludes the origin.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpinorSample {
    pub xs: Vec<f64>,
    pub psi_plus: Vec<Complex64>,
    pub psi_minus: Vec<Complex64>,
}

impl SpinorSample {
    /// `|ψ+|² + |ψ-|²` at each sample.
    pub fn density(&self) -> Vec<f64> {
        self.psi_plus
            .iter()
            .zip(&self.psi_minus)
            .map(|(p, m)| p.norm_sqr() + m.norm_sqr())
            .collect()
    }
}

/// A bound state with its energy sign fixed and the component amplitudes
/// fitted.
///
/// `ψ+ = A [θ(-x) u_L f_{L+} + θ(x) f_{R+}]` and
/// `ψ- = A N [θ(-x) f_{L-} + θ(x) f_{R-}]`, where `u_L` is
/// [`upper_left`](Self::upper_left), `N` is [`rel_const`](Self::rel_const)
/// and `A` is [`norm_const`](Self::norm_const).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenspinor {
    pub state: BoundState,
    pub sign: EnergySign,
    pub energy: f64,
    pub upper_left: f64,
    pub rel_const: Complex64,
    pub norm_const: Option<f64>,
    pub phys: PhysicalParams,
    pub pot: PotentialParams,
}

impl Eigenspinor {
    pub fn new(
        state: &BoundState,
        phys: &PhysicalParams,
        pot: &PotentialParams,
        sign: EnergySign,
    ) -> Result<Self> {
        Self::with_energy(state, phys, pot, sign.value() * state.e_abs)
    }

    /// Fits the amplitudes for an arbitrary trial energy while keeping the
    /// profiles of `state`. Only the exact energies give a vanishing
    /// residual.
    pub fn with_energy(
        state: &BoundState,
        phys: &PhysicalParams,
        pot: &PotentialParams,
        energy: f64,
    ) -> Result<Self> {
        if !energy.is_finite() {
            return Err(Error::InvalidParameter {
                name: "energy",
                value: energy,
                expected: "finite",
            });
        }
        let right = fit_side(state, phys, pot, Side::Right, energy)?;
        let left = fit_side(state, phys, pot, Side::Left, energy)?;
        let ratio = right / left;
        Ok(Self {
            state: *state,
            sign: if energy < 0.0 {
                EnergySign::Negative
            } else {
                EnergySign::Positive
            },
            energy,
            upper_left: ratio.re,
            rel_const: right,
            norm_const: None,
            phys: *phys,
            pot: *pot,
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.norm_const.is_some()
    }

    /// Copy with the global scale set so that `∫ |ψ+|² + |ψ-|² dx = 1`.
    pub fn normalized(&self) -> Result<Self> {
        let raw = Self {
            norm_const: None,
            ..*self
        };
        let total = raw.moments()?[0];
        if !(total.is_finite() && total > 0.0) {
            return Err(Error::Domain("spinor norm is not positive and finite"));
        }
        Ok(Self {
            norm_const: Some(1.0 / math::sqrt(total)),
            ..*self
        })
    }

    fn scale(&self) -> f64 {
        self.norm_const.unwrap_or(1.0)
    }

    fn upper_amplitude(&self, side: Side) -> f64 {
        match side {
            Side::Left => self.upper_left * self.scale(),
            Side::Right => self.scale(),
        }
    }

    fn lower_amplitude(&self) -> Complex64 {
        self.rel_const * self.scale()
    }

    /// Values and derivatives at `x != 0`; the current scale is applied
    /// whether or not the spinor is normalized.
    pub fn point(&self, x: f64) -> SpinorPoint {
        let side = Side::of(x);
        let up = self.state.upper_profile(side);
        let lo = self.state.lower_profile(side);
        let a = self.upper_amplitude(side);
        let n = self.lower_amplitude();
        SpinorPoint {
            psi_plus: Complex64::new(a * up.value(x), 0.0),
            psi_minus: n * lo.value(x),
            dpsi_plus: Complex64::new(a * up.derivative(x), 0.0),
            dpsi_minus: n * lo.derivative(x),
        }
    }

    /// `[∫ρ, ∫xρ, ∫x²ρ]` for `ρ = |ψ+|² + |ψ-|²`.
    pub fn moments(&self) -> Result<[f64; 3]> {
        let rules = RulePair::new(2.0 * self.state.s_plus.min(self.state.s_minus))?;
        let n2 = self.lower_amplitude().norm_sqr();
        let mut out = [0.0; 3];
        for side in [Side::Left, Side::Right] {
            let a2 = self.upper_amplitude(side).powi(2);
            let up = self.state.upper_profile(side);
            let lo = self.state.lower_profile(side);
            for (power, slot) in out.iter_mut().enumerate() {
                let parity = if power % 2 == 1 { side.orientation() } else { 1.0 };
                let part = a2 * rules.squared_moment(&up, power as i32)?
                    + n2 * rules.squared_moment(&lo, power as i32)?;
                *slot += parity * part;
            }
        }
        Ok(out)
    }

    /// `(∫|ψ+|², ∫|ψ-|²)` over the whole line.
    pub fn component_weights(&self) -> Result<(f64, f64)> {
        let rules = RulePair::new(2.0 * self.state.s_plus.min(self.state.s_minus))?;
        let n2 = self.lower_amplitude().norm_sqr();
        let mut upper = 0.0;
        let mut lower = 0.0;
        for side in [Side::Left, Side::Right] {
            upper += self.upper_amplitude(side).powi(2)
                * rules.squared_moment(&self.state.upper_profile(side), 0)?;
            lower += n2 * rules.squared_moment(&self.state.lower_profile(side), 0)?;
        }
        Ok((upper, lower))
    }
}

fn fit_side(
    state: &BoundState,
    phys: &PhysicalParams,
    pot: &PotentialParams,
    side: Side,
    energy: f64,
) -> Result<Complex64> {
    let denom = energy + phys.rest_energy();
    if denom == 0.0 {
        return Err(Error::Domain("E = -mc² leaves the lower component undetermined"));
    }
    let upper = state.upper_profile(side);
    let lower = state.lower_profile(side);
    let spacing = node_spacing(&lower);
    let hbar_c = phys.hbar * phys.c;
    let mut z = REFERENCE_Z;
    for _ in 0..=MAX_SHIFTS {
        if !near_node(&lower, z, spacing) {
            let x = side.orientation() * z / (2.0 * state.kappa);
            let v = pot.potential(phys, x);
            let drive = hbar_c * upper.derivative(x) - v * upper.value(x);
            let target = Complex64::new(0.0, -drive / denom);
            return Ok(target / lower.value(x));
        }
        z += 0.5 * spacing;
    }
    Err(Error::NumericalDegeneracy { shifts: MAX_SHIFTS })
}

fn node_spacing(p: &Profile) -> f64 {
    let n = p.degree as f64;
    (4.0 * n + 2.0 * p.order() + 2.0) / (n + 1.0)
}

fn near_node(p: &Profile, z: f64, spacing: f64) -> bool {
    if p.degree == 0 {
        return false;
    }
    let here = math::abs(p.polynomial(z));
    let around = math::abs(p.polynomial(z - 0.5 * spacing)).max(math::abs(p.polynomial(z + 0.5 * spacing)));
    here <= NODE_GUARD * around
}

/// Gauss–Laguerre rules of two sizes sharing one weight exponent.
struct RulePair {
    coarse: QuadratureRule,
    fine: QuadratureRule,
}

impl RulePair {
    fn new(alpha: f64) -> Result<Self> {
        Ok(Self {
            coarse: gauss_laguerre(COARSE_POINTS, alpha)?,
            fine: gauss_laguerre(FINE_POINTS, alpha)?,
        })
    }

    /// `∫_0^∞ x^power f(2κx)² dx`.
    fn squared_moment(&self, p: &Profile, power: i32) -> Result<f64> {
        let extra = 2.0 * p.s - self.fine.alpha + power as f64;
        let g = |z: f64| {
            let l = p.polynomial(z);
            math::powf(z, extra) * l * l
        };
        let jac = math::powf(2.0 * p.kappa, -(power as f64 + 1.0));
        let coarse = jac * self.coarse.integrate(g);
        let fine = jac * self.fine.integrate(g);
        agree(coarse, fine, math::abs(fine))
    }

    /// `∫_0^∞ f_a(2κ_a x) f_b(2κ_b x) dx`.
    fn cross(a: &Profile, b: &Profile) -> Result<f64> {
        let rules = Self::new(a.s + b.s)?;
        let beta = a.kappa + b.kappa;
        let pre = math::powf(2.0 * a.kappa, a.s) * math::powf(2.0 * b.kappa, b.s);
        let g = |x: f64| a.polynomial(2.0 * a.kappa * x) * b.polynomial(2.0 * b.kappa * x);
        let coarse = pre * rules.coarse.integrate_scaled(beta, g);
        let fine = pre * rules.fine.integrate_scaled(beta, g);
        let magnitude = math::abs(pre) * rules.fine.integrate_scaled(beta, |x| math::abs(g(x)));
        agree(coarse, fine, magnitude)
    }
}

// `magnitude` bounds the integral of the absolute integrand, so cancelling
// integrals are compared on the scale of their parts
fn agree(coarse: f64, fine: f64, magnitude: f64) -> Result<f64> {
    let scale = magnitude.max(math::abs(fine)).max(f64::MIN_POSITIVE);
    if !fine.is_finite() || math::abs(coarse - fine) > RULE_AGREEMENT * scale {
        return Err(Error::QuadratureFailure { coarse, fine });
    }
    Ok(fine)
}

/// Fitted lower-to-upper constant `N` on `x > 0` for one sign of the energy.
pub fn relative_constant(
    state: &BoundState,
    phys: &PhysicalParams,
    pot: &PotentialParams,
    sign: EnergySign,
) -> Result<Complex64> {
    Eigenspinor::new(state, phys, pot, sign).map(|s| s.rel_const)
}

/// Fits and normalizes the spinor of `state` with the given energy sign.
pub fn normalize(
    state: &BoundState,
    phys: &PhysicalParams,
    pot: &PotentialParams,
    sign: EnergySign,
) -> Result<Eigenspinor> {
    Eigenspinor::new(state, phys, pot, sign)?.normalized()
}

pub fn assemble_spinor(spinor: &Eigenspinor, xs: &[f64]) -> Result<SpinorSample> {
    if !spinor.is_normalized() {
        return Err(Error::Unnormalized);
    }
    if xs.iter().any(|x| *x == 0.0 || !x.is_finite()) {
        return Err(Error::Domain("sample positions must be finite and exclude the origin"));
    }
    let mut out = SpinorSample {
        xs: xs.to_vec(),
        psi_plus: Vec::with_capacity(xs.len()),
        psi_minus: Vec::with_capacity(xs.len()),
    };
    for &x in xs {
        let p = spinor.point(x);
        out.psi_plus.push(p.psi_plus);
        out.psi_minus.push(p.psi_minus);
    }
    Ok(out)
}

/// Largest relative residual of the first-order system over `xs`, each
/// residual divided by the sum of the magnitudes of its terms. The origin
/// is skipped.
pub fn dirac_residual(spinor: &Eigenspinor, xs: &[f64]) -> f64 {
    let phys = &spinor.phys;
    let rest = phys.rest_energy();
    let hbar_c = phys.hbar * phys.c;
    let e = spinor.energy;
    let i = Complex64::i();
    let mut worst = 0.0f64;
    for &x in xs {
        if x == 0.0 {
            continue;
        }
        let v = spinor.pot.potential(phys, x);
        let p = spinor.point(x);
        let upper = [
            p.psi_plus * (rest - e),
            -i * hbar_c * p.dpsi_minus,
            -i * v * p.psi_minus,
        ];
        let lower = [
            p.psi_minus * (-e - rest),
            -i * hbar_c * p.dpsi_plus,
            i * v * p.psi_plus,
        ];
        for terms in [upper, lower] {
            let sum: Complex64 = terms.iter().sum();
            let scale: f64 = terms.iter().map(|t| t.norm()).sum();
            if scale > 0.0 {
                worst = worst.max(sum.norm() / scale);
            }
        }
    }
    worst
}

/// Geometric grid in `|x|` from `1e-3/κ` to `30/κ`, 400 points per side,
/// sorted ascending.
pub fn standard_grid(kappa: f64) -> Vec<f64> {
    let lo = GRID_INNER / kappa;
    let ratio = math::powf(GRID_OUTER / GRID_INNER, 1.0 / (GRID_POINTS - 1) as f64);
    let right: Vec<f64> = (0..GRID_POINTS)
        .map(|k| lo * math::powf(ratio, k as f64))
        .collect();
    right
        .iter()
        .rev()
        .map(|x| -x)
        .chain(right.iter().copied())
        .collect()
}

/// `sqrt(<x²> - <x>²)` of the full spinor density.
pub fn position_uncertainty(spinor: &Eigenspinor) -> Result<f64> {
    if !spinor.is_normalized() {
        return Err(Error::Unnormalized);
    }
    let [m0, m1, m2] = spinor.moments()?;
    let mean = m1 / m0;
    Ok(math::sqrt((m2 / m0 - mean * mean).max(0.0)))
}

/// Overlap of the upper components of two states on one half-line,
/// divided by the geometric mean of their norms there.
pub fn upper_overlap(a: &BoundState, b: &BoundState, side: Side) -> Result<f64> {
    let pa = a.upper_profile(side);
    let pb = b.upper_profile(side);
    let ab = RulePair::cross(&pa, &pb)?;
    let aa = RulePair::cross(&pa, &pa)?;
    let bb = RulePair::cross(&pb, &pb)?;
    Ok(ab / math::sqrt(aa * bb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::spectrum::lowest_levels;
    use approx::assert_relative_eq;
    use core::f64::consts::FRAC_PI_2;

    fn pot(q: f64, v0: f64) -> PotentialParams {
        PotentialParams::new(q, v0).unwrap()
    }

    fn state(q: f64, v0: f64, n: u32) -> BoundState {
        BoundState::new(&PhysicalParams::default(), &pot(q, v0), n).unwrap()
    }

    fn spinor(q: f64, v0: f64, n: u32, sign: EnergySign) -> Eigenspinor {
        normalize(&state(q, v0, n), &PhysicalParams::default(), &pot(q, v0), sign).unwrap()
    }

    #[test]
    fn hand_derived_amplitudes() {
        // ψ+ = x² e^{-x/2} on the right and ψ- ∝ x(2 - x) e^{-x/2}; the
        // reference point z = 2 sits on the node and must be shifted
        let s = state(1.0, 1.0, 1);
        let sp = Eigenspinor::new(&s, &PhysicalParams::default(), &pot(1.0, 1.0), EnergySign::Positive).unwrap();
        let e = 1.75f64.sqrt();
        assert_relative_eq!(sp.rel_const.im, -1.5 / (e + 1.0), max_relative = 1e-13);
        assert_eq!(sp.rel_const.re, 0.0);
        assert_relative_eq!(sp.upper_left, 3.0, max_relative = 1e-13);
    }

    #[test]
    fn finite_difference_lower_component() {
        let phys = PhysicalParams::default();
        let p = pot(2.5, 0.7);
        let sp = spinor(2.5, 0.7, 2, EnergySign::Positive);
        let x = 0.8 / sp.state.kappa;
        let h = 1e-5 * x;
        let dplus = (sp.point(x + h).psi_plus - sp.point(x - h).psi_plus) / (2.0 * h);
        let v = p.potential(&phys, x);
        let expect = -Complex64::i() * (dplus - v * sp.point(x).psi_plus) / (sp.energy + 1.0);
        assert_relative_eq!(sp.point(x).psi_minus.im, expect.im, max_relative = 1e-7);
    }

    #[test]
    fn relative_constant_is_imaginary() {
        for (q, v0, n) in [(1.0, 1.0, 1), (1.0, 1.0, 3), (-1.5, -1.2, 0), (2.5, 0.7, 2), (0.5, 2.0, 1)] {
            for sign in EnergySign::BOTH {
                let s = state(q, v0, n);
                let c = relative_constant(&s, &PhysicalParams::default(), &pot(q, v0), sign).unwrap();
                assert!((c.arg().abs() - FRAC_PI_2).abs() < 1e-10, "q={q} n={n}: {c}");
            }
        }
    }

    #[test]
    fn sign_flip_rescales_relative_constant() {
        let phys = PhysicalParams::default();
        for (q, v0, n) in [(1.0, 1.0, 2), (-1.0, -1.0, 0), (3.0, 0.4, 1)] {
            let s = state(q, v0, n);
            let plus = relative_constant(&s, &phys, &pot(q, v0), EnergySign::Positive).unwrap();
            let minus = relative_constant(&s, &phys, &pot(q, v0), EnergySign::Negative).unwrap();
            let e = s.e_abs;
            assert_relative_eq!(minus.im * (1.0 - e), plus.im * (1.0 + e), max_relative = 1e-12);
        }
    }

    #[test]
    fn residual_vanishes_for_exact_states() {
        for (q, v0, n) in [(1.0, 1.0, 1), (1.0, 1.0, 3), (-1.5, -1.2, 0), (-1.5, -1.2, 2), (2.5, 0.7, 1), (0.5, 1.0, 2)] {
            for sign in EnergySign::BOTH {
                let sp = spinor(q, v0, n, sign);
                let r = dirac_residual(&sp, &standard_grid(sp.state.kappa));
                assert!(r <= 1e-8, "q={q} v0={v0} n={n} {sign:?}: {r}");
            }
        }
    }

    #[test]
    fn residual_ignores_overall_scale() {
        let sp = spinor(1.0, 1.0, 2, EnergySign::Negative);
        let raw = Eigenspinor { norm_const: None, ..sp };
        let grid = standard_grid(sp.state.kappa);
        let a = dirac_residual(&sp, &grid);
        let b = dirac_residual(&raw, &grid);
        assert!((a - b).abs() <= 1e-15);
    }

    #[test]
    fn perturbed_energy_is_detected() {
        let phys = PhysicalParams::default();
        let s = state(1.0, 1.0, 1);
        let sp = Eigenspinor::with_energy(&s, &phys, &pot(1.0, 1.0), s.e_abs + 1e-4).unwrap();
        assert!(dirac_residual(&sp, &standard_grid(s.kappa)) > 1e-5);
    }

    #[test]
    fn unit_norm_and_rule_stability() {
        for (q, v0, n) in [(1.0, 1.0, 1), (-1.5, -1.2, 3), (2.5, 0.7, 4)] {
            let sp = spinor(q, v0, n, EnergySign::Positive);
            assert_relative_eq!(sp.moments().unwrap()[0], 1.0, max_relative = 1e-10);
        }
    }

    #[test]
    fn upper_components_are_orthogonal() {
        let phys = PhysicalParams::default();
        let levels = lowest_levels(&phys, &pot(1.0, 1.0), 4);
        for side in [Side::Left, Side::Right] {
            for (i, a) in levels.iter().enumerate() {
                assert_relative_eq!(upper_overlap(a, a, side).unwrap(), 1.0, max_relative = 1e-12);
                for b in &levels[i + 1..] {
                    let o = upper_overlap(a, b, side).unwrap();
                    assert!(o.abs() < 1e-9, "{side:?} n={} m={}: {o}", a.n, b.n);
                }
            }
        }
    }

    #[test]
    fn mirror_ratio_is_constant() {
        let sp = spinor(-1.5, -1.2, 1, EnergySign::Positive);
        let xs: Vec<f64> = (1..60).map(|k| 0.13 * k as f64).collect();
        let ratios: Vec<f64> = xs
            .iter()
            .map(|&x| sp.point(-x).psi_plus.norm() / sp.point(x).psi_minus.norm())
            .filter(|r| r.is_finite())
            .collect();
        for r in &ratios {
            assert_relative_eq!(*r, ratios[0], max_relative = 1e-10);
        }
    }

    fn sign_changes(values: impl Iterator<Item = f64>) -> u32 {
        let mut last = 0.0f64;
        let mut count = 0;
        for v in values {
            if v != 0.0 {
                if last != 0.0 && (v > 0.0) != (last > 0.0) {
                    count += 1;
                }
                last = v;
            }
        }
        count
    }

    #[test]
    fn node_counts() {
        for (q, v0, n) in [(1.0, 1.0, 3), (-2.0, -0.5, 2), (0.7, 3.0, 4)] {
            let sp = spinor(q, v0, n, EnergySign::Positive);
            let xs: Vec<f64> = (1..20000).map(|k| k as f64 * 4e-3 / sp.state.kappa).collect();
            let plus = sign_changes(xs.iter().map(|&x| sp.point(x).psi_plus.re));
            let minus = sign_changes(xs.iter().map(|&x| sp.point(x).psi_minus.im));
            assert_eq!((plus, minus), (sp.state.n_plus, sp.state.n_minus));
        }
    }

    #[test]
    fn upper_component_positive_near_origin() {
        for (q, v0, n) in [(1.0, 1.0, 2), (-1.0, -1.0, 3)] {
            let sp = spinor(q, v0, n, EnergySign::Negative);
            assert!(sp.point(1e-4 / sp.state.kappa).psi_plus.re > 0.0);
        }
    }

    #[test]
    fn assembly_requires_normalization() {
        let s = state(1.0, 1.0, 1);
        let raw = Eigenspinor::new(&s, &PhysicalParams::default(), &pot(1.0, 1.0), EnergySign::Positive).unwrap();
        assert_eq!(assemble_spinor(&raw, &[1.0]), Err(Error::Unnormalized));
        let sp = raw.normalized().unwrap();
        assert!(assemble_spinor(&sp, &[-1.0, 0.0]).is_err());
        let sample = assemble_spinor(&sp, &[-1e-9, 1e-9, 2.0]).unwrap();
        assert!(sample.density()[0] < 1e-8 && sample.density()[1] < 1e-8);
    }

    #[test]
    fn standard_grid_shape() {
        let g = standard_grid(0.5);
        assert_eq!(g.len(), 800);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_relative_eq!(g[400], 2e-3, max_relative = 1e-14);
        assert_relative_eq!(g[799], 60.0, max_relative = 1e-12);
        assert_eq!(g[0], -g[799]);
    }

    #[test]
    fn uncertainty_shrinks_with_background() {
        let dx: Vec<f64> = [1.0, 2.0, 4.0]
            .iter()
            .map(|&v0| position_uncertainty(&spinor(1.0, v0, 1, EnergySign::Positive)).unwrap())
            .collect();
        assert!(dx[0] > dx[1] && dx[1] > dx[2]);
    }

    #[test]
    fn uncertainty_scales_with_length() {
        // same dimensionless state in units with ħ doubled: lengths double
        let p = pot(1.0, 1.0);
        let a = BoundState::new(&PhysicalParams::default(), &p, 2).unwrap();
        let phys2 = PhysicalParams::new(1.0, 1.0, 2.0).unwrap();
        let b = BoundState::new(&phys2, &p, 2).unwrap();
        let da = position_uncertainty(&normalize(&a, &PhysicalParams::default(), &p, EnergySign::Positive).unwrap()).unwrap();
        let db = position_uncertainty(&normalize(&b, &phys2, &p, EnergySign::Positive).unwrap()).unwrap();
        assert_relative_eq!(da * a.kappa, db * b.kappa, max_relative = 1e-10);
    }

    #[test]
    fn nonrelativistic_lower_weight_is_small() {
        let sp = spinor(1.0, 1e-2, 1, EnergySign::Positive);
        let (up, lo) = sp.component_weights().unwrap();
        assert!(lo / up <= 1e-3);
        assert_relative_eq!(up + lo, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn massless_states_assemble() {
        let phys = PhysicalParams::new(0.0, 1.0, 1.0).unwrap();
        let p = pot(-2.0, -1.0);
        let s = BoundState::new(&phys, &p, 1).unwrap();
        for sign in EnergySign::BOTH {
            let sp = normalize(&s, &phys, &p, sign).unwrap();
            assert!(dirac_residual(&sp, &standard_grid(s.kappa)) <= 1e-8);
        }
    }
}
