use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use crate::commands::{parse_range, spectrum_table, sweep_table, verify_report, wavefunction_table, SweepSpec, VerifyOptions};
use crate::config::{CommonArgs, RunConfig, THREADS_ENV};
use crate::error::{CliError, CliResult};
use crate::formats::{emit, to_json};

#[derive(Debug, Parser)]
#[command(name = "dirac1d", version, about = "Bound states of a neutral fermion in a pseudoscalar inversely linear potential")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form levels.
    Spectrum(CommonArgs),
    /// Normalized positive-energy spinor on a uniform grid.
    Wavefunction(CommonArgs),
    /// Analytic results against the finite-difference oracle; exits 1 on
    /// any failed check.
    Verify(VerifyArgs),
    /// One level over a grid of (q, V0).
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Relative error applied to each analytic energy before the spinor checks.
    #[arg(long = "inject-energy-error", allow_hyphen_values = true)]
    pub inject_energy_error: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// `start:stop:count`; defaults to the single value of `--q`.
    #[arg(long = "q-range", allow_hyphen_values = true)]
    pub q_range: Option<String>,
    /// `start:stop:count`; defaults to the single value of `--v0`.
    #[arg(long = "v0-range", allow_hyphen_values = true)]
    pub v0_range: Option<String>,
    /// 1-based position of the level within its family.
    #[arg(long, default_value_t = 1)]
    pub level: u32,
}

fn resolve(common: &CommonArgs) -> CliResult<RunConfig> {
    let env = std::env::var(THREADS_ENV).ok();
    RunConfig::resolve(common, env.as_deref())
}

pub fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Spectrum(args) => {
            let config = resolve(&args)?;
            emit(&spectrum_table(&config)?, config.out.as_deref())
        }
        Command::Wavefunction(args) => {
            let config = resolve(&args)?;
            emit(&wavefunction_table(&config)?, config.out.as_deref())
        }
        Command::Verify(args) => {
            let config = resolve(&args.common)?;
            let inject = args.inject_energy_error.unwrap_or(0.0);
            if !inject.is_finite() {
                return Err(CliError::Usage("inject-energy-error must be finite".into()));
            }
            let report = verify_report(
                &config,
                VerifyOptions {
                    inject_energy_error: inject,
                },
            )?;
            emit(&to_json(&report), config.out.as_deref())?;
            if report.pass {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Sweep(args) => {
            let config = resolve(&args.common)?;
            let axis = |range: &Option<String>, single: f64| match range {
                Some(text) => parse_range(text),
                None => Ok(vec![single]),
            };
            let spec = SweepSpec {
                qs: axis(&args.q_range, config.pot.q)?,
                v0s: axis(&args.v0_range, config.pot.v0)?,
                level: args.level,
            };
            emit(&sweep_table(&config, &spec)?, config.out.as_deref())
        }
    }
}

/// Parses `argv`, runs the verb and returns the process exit code. Errors
/// are reported on stderr.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(e, CliError::VerificationFailed) {
                eprintln!("dirac1d: {e}");
            }
            e.exit_code()
        }
    }
}
