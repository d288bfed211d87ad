use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use dirac1d_core::{PhysicalParams, PotentialParams};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

pub const THREADS_ENV: &str = "DIRAC1D_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Flags shared by every verb. Unset flags fall back to the config file and
/// then to the built-in defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Coupling of the inversely linear term [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Uniform pseudoscalar background [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    pub v0: Option<f64>,
    /// Fermion mass [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    pub mass: Option<f64>,
    /// Speed of light [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Reduced Planck constant [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    pub hbar: Option<f64>,
    /// Number of levels to report [default: 3]
    #[arg(long)]
    pub levels: Option<u32>,
    /// Level index for wavefunction [default: lowest in the family]
    #[arg(long)]
    pub n: Option<u32>,
    /// Left end of the wavefunction grid [default: -20]
    #[arg(long, allow_hyphen_values = true)]
    pub xmin: Option<f64>,
    /// Right end of the wavefunction grid [default: 20]
    #[arg(long, allow_hyphen_values = true)]
    pub xmax: Option<f64>,
    /// Number of wavefunction grid points [default: 2001]
    #[arg(long)]
    pub points: Option<usize>,
    /// Interior points of the finite-difference grid [default: 4000]
    #[arg(long = "grid-npts")]
    pub grid_npts: Option<usize>,
    /// Domain length of the finite-difference grid in units of `(B+1)/κ_B`.
    #[arg(long = "length-factor")]
    pub length_factor: Option<f64>,
    /// Relative tolerance for matching oracle levels [default: 1e-3]
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<f64>,
    /// Output format [default: csv]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweep, also read from DIRAC1D_THREADS [default: 1]
    #[arg(long)]
    pub threads: Option<usize>,
    /// JSON file with any of the above keys; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Contents of a `--config` JSON file; every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub q: Option<f64>,
    pub v0: Option<f64>,
    pub mass: Option<f64>,
    pub c: Option<f64>,
    pub hbar: Option<f64>,
    pub levels: Option<u32>,
    pub n: Option<u32>,
    pub xmin: Option<f64>,
    pub xmax: Option<f64>,
    pub points: Option<usize>,
    pub grid_npts: Option<usize>,
    pub length_factor: Option<f64>,
    pub tol: Option<f64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("malformed config {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub phys: PhysicalParams,
    pub pot: PotentialParams,
    pub levels: u32,
    /// `None` selects the lowest index of the case.
    pub n: Option<u32>,
    pub xmin: f64,
    pub xmax: f64,
    pub points: usize,
    pub grid_npts: usize,
    pub length_factor: f64,
    pub tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub threads: usize,
}

impl RunConfig {
    pub fn defaults() -> Self {
        Self {
            phys: PhysicalParams::default(),
            pot: PotentialParams { q: 1.0, v0: 1.0 },
            levels: 3,
            n: None,
            xmin: -20.0,
            xmax: 20.0,
            points: 2001,
            grid_npts: 4000,
            length_factor: dirac1d_core::oracle::DEFAULT_LENGTH_FACTOR,
            tol: 1e-3,
            format: Format::Csv,
            out: None,
            threads: 1,
        }
    }

    /// Merges flags over the config file over the defaults. `env_threads` is
    /// the raw value of `DIRAC1D_THREADS`, which sits between the flag and
    /// the file for the thread count only.
    pub fn resolve(args: &CommonArgs, env_threads: Option<&str>) -> CliResult<Self> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let d = Self::defaults();
        let env_threads = match env_threads {
            Some(raw) => Some(raw.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!("{THREADS_ENV} must be an integer >= 1, got {raw:?}"))
            })?),
            None => None,
        };
        let phys = PhysicalParams::new(
            args.mass.or(file.mass).unwrap_or(d.phys.mass),
            args.c.or(file.c).unwrap_or(d.phys.c),
            args.hbar.or(file.hbar).unwrap_or(d.phys.hbar),
        )?;
        let pot = PotentialParams::new(
            args.q.or(file.q).unwrap_or(d.pot.q),
            args.v0.or(file.v0).unwrap_or(d.pot.v0),
        )?;
        let config = Self {
            phys,
            pot,
            levels: args.levels.or(file.levels).unwrap_or(d.levels),
            n: args.n.or(file.n),
            xmin: args.xmin.or(file.xmin).unwrap_or(d.xmin),
            xmax: args.xmax.or(file.xmax).unwrap_or(d.xmax),
            points: args.points.or(file.points).unwrap_or(d.points),
            grid_npts: args.grid_npts.or(file.grid_npts).unwrap_or(d.grid_npts),
            length_factor: args.length_factor.or(file.length_factor).unwrap_or(d.length_factor),
            tol: args.tol.or(file.tol).unwrap_or(d.tol),
            format: args.format.or(file.format).unwrap_or(d.format),
            out: args.out.clone().or(file.out),
            threads: args.threads.or(env_threads).or(file.threads).unwrap_or(d.threads),
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> CliResult<()> {
        let fail = |msg: &str| Err(CliError::Usage(msg.to_string()));
        if self.levels < 1 {
            return fail("levels must be >= 1");
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return fail("tol must be finite and > 0");
        }
        if self.threads < 1 {
            return fail("threads must be >= 1");
        }
        if !(self.length_factor.is_finite() && self.length_factor > 0.0) {
            return fail("length-factor must be finite and > 0");
        }
        if !(self.xmin.is_finite() && self.xmax.is_finite()) {
            return fail("xmin and xmax must be finite");
        }
        if self.points < 2 {
            return fail("points must be >= 2");
        }
        Ok(())
    }
}
