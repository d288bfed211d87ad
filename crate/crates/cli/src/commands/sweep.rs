use std::thread;

use dirac1d_core::analytic::{normalize, position_uncertainty, BoundState, EnergySign};
use dirac1d_core::{classify_case, effective_params, PhysicalParams, PotentialParams};
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::formats::{number, optional, to_json, Csv};

const COLUMNS: [&str; 7] = ["q", "V0", "case", "E_plus", "gap_to_meff", "delta_x", "lambda_c_eff"];

/// Parses `start:stop:count` into `count >= 2` evenly spaced values with
/// both ends included.
pub fn parse_range(text: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Usage(format!("range {text:?} is not start:stop:count with count >= 2"));
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, count] = parts[..] else {
        return Err(bad());
    };
    let start: f64 = start.trim().parse().map_err(|_| bad())?;
    let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
    let count: usize = count.trim().parse().map_err(|_| bad())?;
    if count < 2 || !start.is_finite() || !stop.is_finite() {
        return Err(bad());
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| if i == count - 1 { stop } else { start + step * i as f64 })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub qs: Vec<f64>,
    pub v0s: Vec<f64>,
    /// 1-based position within the family: the first level is `n = 1` in
    /// case A and `n = 0` in case B.
    pub level: u32,
}

/// Empty numeric fields mark parameter points that bind nothing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub q: f64,
    #[serde(rename = "V0")]
    pub v0: f64,
    pub case: &'static str,
    #[serde(rename = "E_plus")]
    pub e_plus: Option<f64>,
    pub gap_to_meff: Option<f64>,
    pub delta_x: Option<f64>,
    pub lambda_c_eff: Option<f64>,
}

fn evaluate(phys: &PhysicalParams, q: f64, v0: f64, level: u32) -> CliResult<SweepRow> {
    let pot = PotentialParams::new(q, v0)?;
    let case = classify_case(&pot);
    let mut row = SweepRow {
        q,
        v0,
        case: case.label(),
        e_plus: None,
        gap_to_meff: None,
        delta_x: None,
        lambda_c_eff: None,
    };
    let Some(min) = case.min_index() else {
        return Ok(row);
    };
    let eff = effective_params(phys, &pot)?;
    let state = BoundState::new(phys, &pot, min + level - 1)?;
    let spinor = normalize(&state, phys, &pot, EnergySign::Positive)?;
    row.e_plus = Some(state.e_abs);
    row.gap_to_meff = Some(eff.threshold() - state.e_abs);
    row.delta_x = Some(position_uncertainty(&spinor)?);
    row.lambda_c_eff = Some(eff.lambda_c_eff);
    Ok(row)
}

/// Rows in q-major order. Points are split into contiguous blocks, one per
/// worker, and written into a buffer indexed by grid position, so the
/// result does not depend on `threads`.
pub fn sweep_rows(phys: &PhysicalParams, spec: &SweepSpec, threads: usize) -> CliResult<Vec<SweepRow>> {
    if spec.level < 1 {
        return Err(CliError::Usage("level must be >= 1".into()));
    }
    let points: Vec<(f64, f64)> = spec
        .qs
        .iter()
        .flat_map(|&q| spec.v0s.iter().map(move |&v0| (q, v0)))
        .collect();
    let mut slots: Vec<Option<CliResult<SweepRow>>> = (0..points.len()).map(|_| None).collect();
    let block = points.len().div_ceil(threads.max(1)).max(1);
    thread::scope(|scope| {
        for (chunk, out) in points.chunks(block).zip(slots.chunks_mut(block)) {
            scope.spawn(move || {
                for (&(q, v0), slot) in chunk.iter().zip(out.iter_mut()) {
                    *slot = Some(evaluate(phys, q, v0, spec.level));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("every slot is filled by its worker"))
        .collect()
}

pub fn sweep_table(config: &RunConfig, spec: &SweepSpec) -> CliResult<String> {
    let rows = sweep_rows(&config.phys, spec, config.threads)?;
    Ok(match config.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut csv = Csv::new(&COLUMNS);
            for r in &rows {
                csv.push(vec![
                    number(r.q),
                    number(r.v0),
                    r.case.to_string(),
                    optional(r.e_plus),
                    optional(r.gap_to_meff),
                    optional(r.delta_x),
                    optional(r.lambda_c_eff),
                ]);
            }
            csv.render()
        }
    })
}
