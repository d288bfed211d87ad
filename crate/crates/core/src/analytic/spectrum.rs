use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::params::{classify_case, effective_params, CaseClass, PhysicalParams, PotentialParams};

use super::profile::{Profile, Side};

/// Quantum numbers of one level, quoted for `x > 0`.
///
/// On `x < 0` the upper component carries `(s_minus, n_minus)` and the lower
/// one `(s_plus, n_plus)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantization {
    pub n_plus: u32,
    pub n_minus: u32,
    pub s_plus: f64,
    pub s_minus: f64,
    /// `B = s+ + n+ = s- + n-`.
    pub b: f64,
}

/// Closed-form quantum numbers for principal index `n`.
///
/// Both families reduce to `B = |q| + k` with level ordinal `k >= 1`
/// (`k = n` in case A, `k = n + 1` in case B); the component with the
/// smaller exponent `|q|` carries one more node than its partner.
pub fn quantization(case: CaseClass, q: f64, n: u32) -> Result<Quantization> {
    let abs_q = math::abs(q);
    match case {
        CaseClass::CaseA => {
            if q < 0.5 {
                return Err(Error::Domain("case A needs q >= 1/2"));
            }
            if n < 1 {
                return Err(Error::InvalidIndex { n, min: 1 });
            }
            Ok(Quantization {
                n_plus: n - 1,
                n_minus: n,
                s_plus: abs_q + 1.0,
                s_minus: abs_q,
                b: abs_q + n as f64,
            })
        }
        CaseClass::CaseB => {
            if q > -0.5 {
                return Err(Error::Domain("case B needs q <= -1/2"));
            }
            Ok(Quantization {
                n_plus: n + 1,
                n_minus: n,
                s_plus: abs_q,
                s_minus: abs_q + 1.0,
                b: abs_q + (n + 1) as f64,
            })
        }
        CaseClass::Unbound(reason) => Err(Error::Unbound(reason)),
    }
}

/// Signed energy pair and effective eigenvalue of one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Energies {
    pub e_plus: f64,
    pub e_minus: f64,
    pub e_eff: f64,
}

/// One bound level; the `±E` pair shares this record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub case: CaseClass,
    pub n: u32,
    pub n_plus: u32,
    pub n_minus: u32,
    pub s_plus: f64,
    pub s_minus: f64,
    pub b: f64,
    pub e_eff: f64,
    /// Positive root; the physical levels are `±e_abs`.
    pub e_abs: f64,
    /// Inverse length with `z = 2 κ |x|`.
    pub kappa: f64,
}

impl BoundState {
    pub fn new(phys: &PhysicalParams, pot: &PotentialParams, n: u32) -> Result<Self> {
        let case = classify_case(pot);
        let qn = quantization(case, pot.q, n)?;
        let eff = effective_params(phys, pot)?;
        let c2 = phys.c * phys.c;
        let e_eff = -eff.m_eff * c2 * eff.q_eff * eff.q_eff / (2.0 * qn.b * qn.b);
        let ratio = pot.q / qn.b;
        let rest = phys.rest_energy();
        let e_abs = math::sqrt(rest * rest + pot.v0 * pot.v0 * (1.0 - ratio * ratio));
        let kappa = math::abs(pot.q * pot.v0) / (phys.hbar * phys.c * qn.b);
        Ok(Self {
            case,
            n,
            n_plus: qn.n_plus,
            n_minus: qn.n_minus,
            s_plus: qn.s_plus,
            s_minus: qn.s_minus,
            b: qn.b,
            e_eff,
            e_abs,
            kappa,
        })
    }

    /// 1-based position of the level within its family.
    pub fn ordinal(&self) -> u32 {
        match self.case {
            CaseClass::CaseB => self.n + 1,
            _ => self.n,
        }
    }

    pub fn energies(&self) -> Energies {
        Energies {
            e_plus: self.e_abs,
            e_minus: -self.e_abs,
            e_eff: self.e_eff,
        }
    }

    /// `|E| - m c²` without cancellation, for the nonrelativistic limit.
    pub fn energy_above_rest(&self, phys: &PhysicalParams, pot: &PotentialParams) -> f64 {
        let ratio = pot.q / self.b;
        pot.v0 * pot.v0 * (1.0 - ratio * ratio) / (self.e_abs + phys.rest_energy())
    }

    /// Radial profile of the upper component on one side.
    pub fn upper_profile(&self, side: Side) -> Profile {
        match side {
            Side::Right => Profile::new(self.s_plus, self.n_plus, self.kappa),
            Side::Left => Profile::new(self.s_minus, self.n_minus, self.kappa),
        }
    }

    /// Radial profile of the lower component on one side.
    pub fn lower_profile(&self, side: Side) -> Profile {
        match side {
            Side::Right => Profile::new(self.s_minus, self.n_minus, self.kappa),
            Side::Left => Profile::new(self.s_plus, self.n_plus, self.kappa),
        }
    }
}

/// `(+E, -E, E_eff)` for principal index `n`.
pub fn energy(phys: &PhysicalParams, pot: &PotentialParams, n: u32) -> Result<Energies> {
    BoundState::new(phys, pot, n).map(|s| s.energies())
}

/// Every level with principal index up to `n_max`, in increasing `|E|`.
/// Empty when the parameters bind nothing.
pub fn spectrum(phys: &PhysicalParams, pot: &PotentialParams, n_max: u32) -> Vec<BoundState> {
    let case = classify_case(pot);
    let Some(min) = case.min_index() else {
        return Vec::new();
    };
    (min..=n_max)
        .filter_map(|n| BoundState::new(phys, pot, n).ok())
        .collect()
}

/// The `count` lowest levels.
pub fn lowest_levels(phys: &PhysicalParams, pot: &PotentialParams, count: u32) -> Vec<BoundState> {
    let case = classify_case(pot);
    let Some(min) = case.min_index() else {
        return Vec::new();
    };
    (min..min + count)
        .filter_map(|n| BoundState::new(phys, pot, n).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::UnboundReason;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn pot(q: f64, v0: f64) -> PotentialParams {
        PotentialParams::new(q, v0).unwrap()
    }

    #[test]
    fn quantization_examples() {
        let a = quantization(CaseClass::CaseA, 1.0, 1).unwrap();
        assert_eq!((a.n_plus, a.n_minus, a.s_plus, a.s_minus, a.b), (0, 1, 2.0, 1.0, 2.0));
        let b = quantization(CaseClass::CaseB, -1.0, 0).unwrap();
        assert_eq!((b.n_plus, b.n_minus, b.s_plus, b.s_minus, b.b), (1, 0, 1.0, 2.0, 2.0));
        assert_eq!(
            quantization(CaseClass::CaseA, 1.0, 0),
            Err(Error::InvalidIndex { n: 0, min: 1 })
        );
        assert!(quantization(CaseClass::Unbound(UnboundReason::ZeroBackground), 1.0, 1).is_err());
    }

    #[test]
    fn ground_energy_case_a() {
        let phys = PhysicalParams::default();
        let e = energy(&phys, &pot(1.0, 1.0), 1).unwrap();
        assert_relative_eq!(e.e_plus, 1.75f64.sqrt(), max_relative = 1e-15);
        assert_eq!(e.e_minus, -e.e_plus);
        assert_relative_eq!(e.e_eff, -(2f64.sqrt()) / 16.0, max_relative = 1e-15);
    }

    #[test]
    fn conjugate_parameters_share_levels() {
        let phys = PhysicalParams::default();
        let a = energy(&phys, &pot(1.0, 1.0), 1).unwrap();
        let b = energy(&phys, &pot(-1.0, -1.0), 0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn spectrum_examples() {
        let phys = PhysicalParams::default();
        let levels = spectrum(&phys, &pot(1.0, 1.0), 3);
        let e: Vec<f64> = levels.iter().map(|s| s.e_abs).collect();
        assert_eq!(levels.iter().map(|s| s.n).collect::<Vec<_>>(), [1, 2, 3]);
        assert_relative_eq!(e[0], 1.75f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(e[1], (1.0 + 8.0 / 9.0f64).sqrt(), max_relative = 1e-15);
        assert_relative_eq!(e[2], (1.0 + 15.0 / 16.0f64).sqrt(), max_relative = 1e-15);
        assert!(spectrum(&phys, &pot(1.0, 0.0), 5).is_empty());
        assert!(spectrum(&phys, &pot(0.3, 1.0), 5).is_empty());
        assert_eq!(spectrum(&phys, &pot(-1.0, -1.0), 2).len(), 3);
        assert!(spectrum(&phys, &pot(1.0, 1.0), 0).is_empty());
    }

    #[test]
    fn approaches_threshold() {
        let phys = PhysicalParams::default();
        let far = energy(&phys, &pot(1.0, 1.0), 5000).unwrap();
        assert!(far.e_plus < 2f64.sqrt());
        assert!(2f64.sqrt() - far.e_plus < 1e-7);
    }

    #[test]
    fn lowest_levels_counts() {
        let phys = PhysicalParams::default();
        let b = lowest_levels(&phys, &pot(-1.5, -1.2), 4);
        assert_eq!(b.iter().map(|s| s.n).collect::<Vec<_>>(), [0, 1, 2, 3]);
        assert_eq!(b.iter().map(|s| s.ordinal()).collect::<Vec<_>>(), [1, 2, 3, 4]);
    }

    #[test]
    fn nonrelativistic_offset_is_stable() {
        let phys = PhysicalParams::default();
        let p = pot(1.0, 1e-3);
        let s = BoundState::new(&phys, &p, 1).unwrap();
        assert_relative_eq!(s.energy_above_rest(&phys, &p), 0.5e-6 * 0.75, max_relative = 1e-6);
    }

    proptest! {
        #[test]
        fn level_invariants(q in 0.5f64..30.0, v0 in 0.01f64..30.0, n in 1u32..40,
                            mass in 0.0f64..3.0, flip in proptest::bool::ANY) {
            let phys = PhysicalParams::new(mass, 1.3, 0.7).unwrap();
            let p = if flip { pot(-q, -v0) } else { pot(q, v0) };
            let idx = if flip { n - 1 } else { n };
            let s = BoundState::new(&phys, &p, idx).unwrap();
            let eff = effective_params(&phys, &p).unwrap();
            let c2 = phys.c * phys.c;
            prop_assert!((s.s_plus + s.n_plus as f64 - s.b).abs() <= 1e-13 * s.b);
            prop_assert!((s.s_minus + s.n_minus as f64 - s.b).abs() <= 1e-13 * s.b);
            prop_assert!(s.e_eff < 0.0);
            prop_assert!(s.e_abs >= phys.rest_energy());
            prop_assert!(s.e_abs < eff.threshold());
            let lhs = s.e_abs * s.e_abs;
            let rhs = eff.m_eff * eff.m_eff * c2 * c2 + 2.0 * eff.m_eff * c2 * s.e_eff;
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.max(eff.m_eff * eff.m_eff * c2 * c2));
            let kappa = (-2.0 * eff.m_eff * s.e_eff).sqrt() / phys.hbar;
            prop_assert!((kappa - s.kappa).abs() <= 1e-12 * kappa);
            let next = BoundState::new(&phys, &p, idx + 1).unwrap();
            prop_assert!(next.e_abs > s.e_abs);
        }
    }
}
