//! Independent numerical checks of the closed-form results: a
//! finite-difference solver for each effective Kratzer channel, matching of
//! the upper and lower channel spectra, the boundary Wronskian at the
//! origin and the nonrelativistic Kratzer levels.

mod fd;
mod kratzer;
mod matching;
mod wronskian;

pub use fd::{fd_effective_levels, fd_levels_with, richardson_levels, ChannelSpec, FdScheme, FdGrid, FdLevels, DEFAULT_LENGTH_FACTOR, RESOLUTION_LIMIT};
pub use kratzer::{nr_kratzer_levels, NrLevel};
pub use matching::{match_common_levels, MatchReport, MatchedPair};
pub use wronskian::{channel_wronskian, hermiticity_wronskian, WronskianReport};
