use alloc::vec::Vec;

use crate::analytic::quantization;
use crate::error::{Error, Result};
use crate::params::{classify_case, PhysicalParams, PotentialParams};

/// Nonrelativistic level measured from the rest energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NrLevel {
    pub n: u32,
    pub b: f64,
    pub e_nr: f64,
}

/// Levels of the Schrödinger problem for the upper component with the
/// potential `V²/2mc² + ħ V'/2mc`, a Kratzer problem whose levels are
/// `V0²/(2mc²) (1 - q²/B²)`.
pub fn nr_kratzer_levels(phys: &PhysicalParams, pot: &PotentialParams, n_max: u32) -> Result<Vec<NrLevel>> {
    if phys.mass <= 0.0 {
        return Err(Error::Domain("the nonrelativistic limit needs m > 0"));
    }
    let case = classify_case(pot);
    let min = case.min_index().ok_or(match case {
        crate::params::CaseClass::Unbound(reason) => Error::Unbound(reason),
        _ => Error::Domain("unclassified parameters"),
    })?;
    let rest = phys.rest_energy();
    (min..=n_max)
        .map(|n| {
            let b = quantization(case, pot.q, n)?.b;
            let ratio = pot.q / b;
            Ok(NrLevel {
                n,
                b,
                e_nr: pot.v0 * pot.v0 / (2.0 * rest) * (1.0 - ratio * ratio),
            })
        })
        .collect()
}
