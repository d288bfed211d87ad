use dirac1d_core::analytic::lowest_levels;
use dirac1d_core::{classify_case, effective_params, CaseClass};
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::CliResult;
use crate::formats::{number, to_json, Csv};

const COLUMNS: [&str; 12] = [
    "case", "q", "V0", "n", "E_plus", "E_minus", "E_eff", "s_plus", "s_minus", "B", "kappa", "lambda_c_eff",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub case: &'static str,
    pub q: f64,
    #[serde(rename = "V0")]
    pub v0: f64,
    pub n: u32,
    #[serde(rename = "E_plus")]
    pub e_plus: f64,
    #[serde(rename = "E_minus")]
    pub e_minus: f64,
    #[serde(rename = "E_eff")]
    pub e_eff: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub kappa: f64,
    pub lambda_c_eff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumTable {
    pub case: &'static str,
    /// Set when the parameters bind nothing.
    pub reason: Option<&'static str>,
    pub rows: Vec<SpectrumRow>,
}

/// The `levels` lowest states; empty with a reason when unbound.
pub fn spectrum_rows(config: &RunConfig) -> CliResult<SpectrumTable> {
    let case = classify_case(&config.pot);
    if let CaseClass::Unbound(reason) = case {
        return Ok(SpectrumTable {
            case: case.label(),
            reason: Some(reason.code()),
            rows: Vec::new(),
        });
    }
    let eff = effective_params(&config.phys, &config.pot)?;
    let rows = lowest_levels(&config.phys, &config.pot, config.levels)
        .into_iter()
        .map(|s| SpectrumRow {
            case: case.label(),
            q: config.pot.q,
            v0: config.pot.v0,
            n: s.n,
            e_plus: s.e_abs,
            e_minus: -s.e_abs,
            e_eff: s.e_eff,
            s_plus: s.s_plus,
            s_minus: s.s_minus,
            b: s.b,
            kappa: s.kappa,
            lambda_c_eff: eff.lambda_c_eff,
        })
        .collect();
    Ok(SpectrumTable {
        case: case.label(),
        reason: None,
        rows,
    })
}

pub fn spectrum_table(config: &RunConfig) -> CliResult<String> {
    let table = spectrum_rows(config)?;
    Ok(match config.format {
        Format::Json => to_json(&table),
        Format::Csv => {
            let mut csv = Csv::new(&COLUMNS);
            if let Some(reason) = table.reason {
                csv.comment(format!("reason={reason}"));
            }
            for r in &table.rows {
                csv.push(vec![
                    r.case.to_string(),
                    number(r.q),
                    number(r.v0),
                    r.n.to_string(),
                    number(r.e_plus),
                    number(r.e_minus),
                    number(r.e_eff),
                    number(r.s_plus),
                    number(r.s_minus),
                    number(r.b),
                    number(r.kappa),
                    number(r.lambda_c_eff),
                ]);
            }
            csv.render()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dirac1d_core::PotentialParams;

    fn config(q: f64, v0: f64, levels: u32) -> RunConfig {
        RunConfig {
            pot: PotentialParams::new(q, v0).unwrap(),
            levels,
            ..RunConfig::defaults()
        }
    }

    #[test]
    fn first_two_levels() {
        let t = spectrum_rows(&config(1.0, 1.0, 2)).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert!((t.rows[0].e_plus - 1.75f64.sqrt()).abs() < 1e-12);
        assert!((t.rows[1].e_plus - (1.0 + 8.0 / 9.0f64).sqrt()).abs() < 1e-12);
        assert_eq!(t.rows[0].e_minus, -t.rows[0].e_plus);
    }

    #[test]
    fn unbound_reasons() {
        let csv = spectrum_table(&config(1.0, 0.0, 3)).unwrap();
        assert_eq!(csv.lines().next(), Some("# reason=ZeroBackground"));
        assert_eq!(csv.lines().count(), 2);
        let t = spectrum_rows(&config(0.3, 1.0, 3)).unwrap();
        assert_eq!(t.reason, Some("SubcriticalCoupling"));
        assert!(t.rows.is_empty());
    }

    #[test]
    fn case_b_starts_at_zero() {
        let t = spectrum_rows(&config(-1.0, -1.0, 1)).unwrap();
        assert_eq!(t.rows[0].n, 0);
        assert_eq!(t.rows[0].case, "B");
    }
}
