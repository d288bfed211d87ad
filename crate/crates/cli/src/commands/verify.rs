use dirac1d_core::analytic::{
    lowest_levels, standard_grid, upper_overlap, BoundState, Eigenspinor, EnergySign, Side,
};
use dirac1d_core::oracle::{
    channel_wronskian, fd_effective_levels, match_common_levels, nr_kratzer_levels,
    richardson_levels, ChannelSpec, FdGrid, FdScheme, MatchReport,
};
use dirac1d_core::params::Channel;
use dirac1d_core::{effective_params, EffectiveParams, Error as CoreError, PhysicalParams, PotentialParams};
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliResult;

const RESIDUAL_TOL: f64 = 1e-8;
const NORM_TOL: f64 = 1e-10;
const ORTHOGONALITY_TOL: f64 = 1e-9;
const NR_TOL: f64 = 1e-5;
const NR_LOWER_WEIGHT: f64 = 1e-3;
const NR_BACKGROUND: f64 = 1e-3;
/// Accuracy asked of finite-difference levels against their closed forms.
pub const FD_TOL: f64 = 1e-3;
/// Looser bound for attractive inverse-square channels, which converge
/// slowly.
pub const SUBZERO_TOL: f64 = 1e-2;
/// Below this origin exponent sampling `a / x²` costs convergence order.
const SAMPLED_MIN_EXPONENT: f64 = 1.5;
/// Domain length for channels without a Coulomb tail, in effective Compton
/// wavelengths.
const REPULSIVE_LENGTH: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VerifyOptions {
    /// Relative error applied to every analytic energy before the spinors
    /// are fitted; a negative control for the residual check.
    pub inject_energy_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyticLevel {
    pub n: u32,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "E_plus")]
    pub e_plus: f64,
    #[serde(rename = "E_minus")]
    pub e_minus: f64,
    #[serde(rename = "E_eff")]
    pub e_eff: f64,
}

/// Finite-difference levels of one channel next to their closed forms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelLevels {
    pub channel: &'static str,
    pub inv_square_coeff: f64,
    pub exponent: f64,
    /// `sampled`, or `matched_richardson` where sampling the inverse-square
    /// term would converge slower than `h²`.
    pub scheme: &'static str,
    pub npts: usize,
    pub length: f64,
    pub levels: Vec<f64>,
    pub closed_form: Vec<f64>,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub truncated: bool,
}

impl ChannelLevels {
    pub fn within_tolerance(&self) -> bool {
        self.levels.len() == self.closed_form.len() && self.max_rel_err <= self.tolerance
    }
}

/// The `count` lowest levels of one channel. Channels with `a = 0` or an
/// origin exponent of at least 3/2 use the sampled scheme; the others use
/// the exponent-matched scheme with one Richardson step onto the refined
/// grid.
pub fn channel_levels(
    eff: &EffectiveParams,
    channel: Channel,
    count: u32,
    npts: usize,
    length_factor: f64,
) -> Result<ChannelLevels, CoreError> {
    let spec = ChannelSpec::from_effective(eff, channel);
    let grid = if spec.coulomb_strength > 0.0 {
        FdGrid::for_channel(&spec, count, npts, length_factor)?
    } else {
        FdGrid::new(REPULSIVE_LENGTH * eff.lambda_c_eff, npts)?
    };
    let matched = spec.inv_square_coeff != 0.0 && spec.exponent() < SAMPLED_MIN_EXPONENT;
    let (scheme, levels, truncated) = if matched {
        let levels = richardson_levels(&spec, &grid, count as usize, FdScheme::ExponentMatched)?;
        ("matched_richardson", levels, false)
    } else {
        let fd = fd_effective_levels(&spec, &grid, count as usize)?;
        ("sampled", fd.levels, fd.truncated)
    };
    let closed_form = spec.analytic_levels(count);
    let max_rel_err = levels
        .iter()
        .zip(&closed_form)
        .map(|(e, x)| ((e - x) / x).abs())
        .fold(0.0, f64::max);
    Ok(ChannelLevels {
        channel: channel.name(),
        inv_square_coeff: spec.inv_square_coeff,
        exponent: spec.exponent(),
        scheme,
        npts,
        length: grid.length,
        levels,
        closed_form,
        max_rel_err,
        tolerance: if spec.inv_square_coeff < 0.0 { SUBZERO_TOL } else { FD_TOL },
        truncated,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairJson {
    pub upper: usize,
    pub lower: usize,
    pub rel_gap: f64,
}

/// Common-eigenvalue matching between the upper and lower channels of one
/// half-line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SideMatch {
    pub side: &'static str,
    pub upper_levels: Vec<f64>,
    pub lower_levels: Vec<f64>,
    pub matched: Vec<PairJson>,
    pub unmatched_upper: Vec<usize>,
    pub unmatched_lower: Vec<usize>,
    pub analytic_ref: Vec<f64>,
    pub max_rel_err: f64,
}

impl SideMatch {
    fn new(side: &'static str, r: MatchReport) -> Self {
        Self {
            side,
            matched: r
                .matched
                .iter()
                .map(|m| PairJson {
                    upper: m.upper,
                    lower: m.lower,
                    rel_gap: m.rel_gap,
                })
                .collect(),
            upper_levels: r.upper_levels,
            lower_levels: r.lower_levels,
            unmatched_upper: r.unmatched_upper,
            unmatched_lower: r.unmatched_lower,
            analytic_ref: r.analytic_ref,
            max_rel_err: r.max_rel_err,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchSummary {
    pub tol: f64,
    pub sides: Vec<SideMatch>,
    pub matched_pairs: usize,
    pub max_rel_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NrLevelCheck {
    pub n: u32,
    pub exact: f64,
    pub kratzer: f64,
    pub rel_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NrLimitCheck {
    #[serde(rename = "V0")]
    pub v0: f64,
    pub levels: Vec<NrLevelCheck>,
    pub max_rel_err: f64,
    pub lower_weight_ratio: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Checks {
    pub fd_levels: bool,
    pub matching: bool,
    pub dirac_residual: bool,
    pub wronskian: bool,
    pub orthogonality: bool,
    pub norm: bool,
    pub nr_limit: bool,
}

impl Checks {
    fn all(&self) -> bool {
        self.fd_levels
            && self.matching
            && self.dirac_residual
            && self.wronskian
            && self.orthogonality
            && self.norm
            && self.nr_limit
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub q: f64,
    #[serde(rename = "V0")]
    pub v0: f64,
    pub case: &'static str,
    pub analytic_levels: Vec<AnalyticLevel>,
    pub fd_levels_per_channel: Vec<ChannelLevels>,
    pub match_report: MatchSummary,
    pub dirac_residual_max: f64,
    /// Largest extrapolated boundary Wronskian relative to its natural
    /// scale, over distinct level pairs on both sides.
    pub wronskian_limit: f64,
    pub orthogonality_max: f64,
    pub norm_errors: Vec<f64>,
    /// Absent when the rest mass vanishes or nothing is bound.
    pub nr_limit_check: Option<NrLimitCheck>,
    pub injected_energy_error: f64,
    pub checks: Checks,
    pub pass: bool,
}

fn wronskian_positions(kappa: f64) -> Vec<f64> {
    (1..=8).map(|k| 10f64.powi(-k) / kappa).collect()
}

fn nr_limit(phys: &PhysicalParams, pot: &PotentialParams, levels: u32) -> Result<Option<NrLimitCheck>, CoreError> {
    let rest = phys.rest_energy();
    if rest == 0.0 || !dirac1d_core::classify_case(pot).is_bound() {
        return Ok(None);
    }
    let weak = PotentialParams::new(pot.q, NR_BACKGROUND * rest * pot.v0.signum())?;
    let states = lowest_levels(phys, &weak, levels);
    let Some(top) = states.last() else {
        return Ok(None);
    };
    let kratzer = nr_kratzer_levels(phys, &weak, top.n)?;
    let mut rows = Vec::new();
    for s in &states {
        if let Some(k) = kratzer.iter().find(|k| k.n == s.n) {
            let exact = s.energy_above_rest(phys, &weak);
            rows.push(NrLevelCheck {
                n: s.n,
                exact,
                kratzer: k.e_nr,
                rel_err: ((exact - k.e_nr) / k.e_nr).abs(),
            });
        }
    }
    let max_rel_err = rows.iter().map(|r| r.rel_err).fold(0.0, f64::max);
    let spinor = Eigenspinor::new(&states[0], phys, &weak, EnergySign::Positive)?;
    let (upper, lower) = spinor.component_weights()?;
    let lower_weight_ratio = lower / upper;
    Ok(Some(NrLimitCheck {
        v0: weak.v0,
        pass: rows.len() == states.len() && max_rel_err <= NR_TOL && lower_weight_ratio <= NR_LOWER_WEIGHT,
        levels: rows,
        max_rel_err,
        lower_weight_ratio,
    }))
}

pub fn verify_report(config: &RunConfig, options: VerifyOptions) -> CliResult<VerifyReport> {
    let (phys, pot) = (&config.phys, &config.pot);
    let case = dirac1d_core::classify_case(pot);
    let eff = effective_params(phys, pot)?;
    let states: Vec<BoundState> = lowest_levels(phys, pot, config.levels);
    let analytic_levels = states
        .iter()
        .map(|s| AnalyticLevel {
            n: s.n,
            b: s.b,
            e_plus: s.e_abs,
            e_minus: -s.e_abs,
            e_eff: s.e_eff,
        })
        .collect();

    let channels = Channel::ALL
        .iter()
        .map(|&ch| channel_levels(&eff, ch, config.levels, config.grid_npts, config.length_factor))
        .collect::<Result<Vec<_>, _>>()?;
    let level_of = |ch: Channel| {
        channels
            .iter()
            .find(|c| c.channel == ch.name())
            .map(|c| c.levels.clone())
            .unwrap_or_default()
    };
    let reference: Vec<f64> = states.iter().map(|s| s.e_eff).collect();
    let sides = [
        ("right", Channel::UpperRight, Channel::LowerRight),
        ("left", Channel::UpperLeft, Channel::LowerLeft),
    ]
    .into_iter()
    .map(|(name, up, lo)| {
        let report = match_common_levels(&level_of(up), &level_of(lo), config.tol).with_reference(&reference);
        SideMatch::new(name, report)
    })
    .collect::<Vec<_>>();
    let matched_pairs = sides.iter().map(|s| s.matched.len()).sum();
    let match_max = sides.iter().map(|s| s.max_rel_err).fold(0.0, f64::max);
    let matching = if case.is_bound() {
        let expected = config.levels as usize - 1;
        sides.iter().all(|s| s.matched.len() == expected) && match_max <= config.tol
    } else {
        matched_pairs == 0
    };

    let mut dirac_residual_max = 0.0f64;
    let mut norm_errors = Vec::new();
    for s in &states {
        for sign in EnergySign::BOTH {
            let energy = sign.value() * s.e_abs * (1.0 + options.inject_energy_error);
            let spinor = Eigenspinor::with_energy(s, phys, pot, energy)?.normalized()?;
            dirac_residual_max = dirac_residual_max.max(dirac1d_core::analytic::dirac_residual(
                &spinor,
                &standard_grid(s.kappa),
            ));
            norm_errors.push((spinor.moments()?[0] - 1.0).abs());
        }
    }

    let mut wronskian_limit = 0.0f64;
    let mut wronskian_pass = true;
    let mut orthogonality_max = 0.0f64;
    for (i, a) in states.iter().enumerate() {
        for b in &states[i + 1..] {
            for side in [Side::Left, Side::Right] {
                let w = channel_wronskian(a, b, side, &wronskian_positions(a.kappa.max(b.kappa)))?;
                wronskian_limit = wronskian_limit.max(w.limit.abs() / w.scale);
                wronskian_pass &= w.pass;
                orthogonality_max = orthogonality_max.max(upper_overlap(a, b, side)?.abs());
            }
        }
    }

    let nr_limit_check = nr_limit(phys, pot, config.levels)?;
    let checks = Checks {
        fd_levels: channels
            .iter()
            .filter(|c| !c.closed_form.is_empty())
            .all(|c| c.within_tolerance()),
        matching,
        dirac_residual: dirac_residual_max <= RESIDUAL_TOL,
        wronskian: wronskian_pass,
        orthogonality: orthogonality_max <= ORTHOGONALITY_TOL,
        norm: norm_errors.iter().all(|e| *e <= NORM_TOL),
        nr_limit: nr_limit_check.as_ref().is_none_or(|c| c.pass),
    };
    Ok(VerifyReport {
        q: pot.q,
        v0: pot.v0,
        case: case.label(),
        analytic_levels,
        fd_levels_per_channel: channels,
        match_report: MatchSummary {
            tol: config.tol,
            sides,
            matched_pairs,
            max_rel_err: match_max,
        },
        dirac_residual_max,
        wronskian_limit,
        orthogonality_max,
        norm_errors,
        nr_limit_check,
        injected_energy_error: options.inject_energy_error,
        pass: checks.all(),
        checks,
    })
}
