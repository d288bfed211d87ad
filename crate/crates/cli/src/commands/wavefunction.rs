use dirac1d_core::analytic::{assemble_spinor, normalize, BoundState, EnergySign};
use dirac1d_core::classify_case;
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::formats::{number, to_json, Csv};

const COLUMNS: [&str; 6] = ["x", "re_psi_plus", "im_psi_plus", "re_psi_minus", "im_psi_minus", "density"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WavefunctionRow {
    pub x: f64,
    pub re_psi_plus: f64,
    pub im_psi_plus: f64,
    pub re_psi_minus: f64,
    pub im_psi_minus: f64,
    pub density: f64,
}

/// Positive-energy spinor of level `n` on `points` equally spaced positions
/// over `[xmin, xmax]`; a position falling exactly on the origin is left
/// out.
pub fn wavefunction_sample(config: &RunConfig) -> CliResult<Vec<WavefunctionRow>> {
    if !(config.xmin < 0.0 && config.xmax > 0.0) {
        return Err(CliError::Usage("wavefunction needs xmin < 0 < xmax".into()));
    }
    let case = classify_case(&config.pot);
    let min = case.min_index().ok_or_else(|| {
        CliError::Domain(format!("no bound states: {}", case.label()))
    })?;
    let n = config.n.unwrap_or(min);
    let state = BoundState::new(&config.phys, &config.pot, n)?;
    let spinor = normalize(&state, &config.phys, &config.pot, EnergySign::Positive)?;
    let step = (config.xmax - config.xmin) / (config.points - 1) as f64;
    let xs: Vec<f64> = (0..config.points)
        .map(|i| config.xmin + step * i as f64)
        .filter(|x| *x != 0.0)
        .collect();
    let sample = assemble_spinor(&spinor, &xs)?;
    Ok(sample
        .density()
        .into_iter()
        .enumerate()
        .map(|(i, density)| WavefunctionRow {
            x: xs[i],
            re_psi_plus: sample.psi_plus[i].re,
            im_psi_plus: sample.psi_plus[i].im,
            re_psi_minus: sample.psi_minus[i].re,
            im_psi_minus: sample.psi_minus[i].im,
            density,
        })
        .collect())
}

pub fn wavefunction_table(config: &RunConfig) -> CliResult<String> {
    let rows = wavefunction_sample(config)?;
    Ok(match config.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut csv = Csv::new(&COLUMNS);
            for r in &rows {
                csv.push(
                    [r.x, r.re_psi_plus, r.im_psi_plus, r.re_psi_minus, r.im_psi_minus, r.density]
                        .into_iter()
                        .map(number)
                        .collect(),
                );
            }
            csv.render()
        }
    })
}
