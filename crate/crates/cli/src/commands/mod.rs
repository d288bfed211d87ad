mod spectrum;
mod sweep;
mod verify;
mod wavefunction;

pub use spectrum::{spectrum_rows, spectrum_table, SpectrumRow, SpectrumTable};
pub use sweep::{parse_range, sweep_rows, sweep_table, SweepRow, SweepSpec};
pub use verify::{channel_levels, verify_report, ChannelLevels, SideMatch, VerifyOptions, VerifyReport};
pub use wavefunction::{wavefunction_sample, wavefunction_table, WavefunctionRow};
