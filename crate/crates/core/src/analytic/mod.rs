//! Closed-form spectrum, spinor assembly and the checks that tie the
//! assembled spinors back to the first-order system.
//!
//! Bound energies satisfy `mc² <= |E| < m_eff c²`: the levels sit above the
//! bare rest energy and below the effective continuum threshold.

mod checks;
mod profile;
mod spectrum;
mod spinor;

pub use checks::{
    connection_check, isolated_modes_check, ConnectionReport, ConnectionRow, EndBehaviour,
    IsolatedMode, IsolatedModesReport,
};
pub use profile::{Profile, Side};
pub use spectrum::{energy, lowest_levels, quantization, spectrum, BoundState, Energies, Quantization};
pub use spinor::{
    assemble_spinor, dirac_residual, normalize, position_uncertainty, relative_constant,
    standard_grid, upper_overlap, EnergySign, Eigenspinor, SpinorPoint, SpinorSample,
};
