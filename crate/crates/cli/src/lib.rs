//! Command-line surface of the `dirac1d` tool: spectra, sampled spinors,
//! the verification battery and parameter sweeps, written as CSV or JSON.

pub mod commands;
pub mod config;
pub mod error;
pub mod formats;
pub mod run;
