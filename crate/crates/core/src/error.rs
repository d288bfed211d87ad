use crate::params::UnboundReason;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {expected}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    #[error("degenerate parameters: m = 0 and V0 = 0 leave no mass scale")]
    DegenerateParameters,
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("series did not converge after {terms} terms")]
    ConvergenceFailure { terms: usize },
    #[error("index n = {n} below the minimum {min} for this case")]
    InvalidIndex { n: u32, min: u32 },
    #[error("no bound states: {0}")]
    Unbound(UnboundReason),
    #[error("reference point sits on a node after {shifts} shifts")]
    NumericalDegeneracy { shifts: usize },
    #[error("spinor has not been normalized")]
    Unnormalized,
    #[error("quadrature sizes disagree: {coarse} vs {fine}")]
    QuadratureFailure { coarse: f64, fine: f64 },
    #[error("grid too coarse: h*kappa = {h_kappa} exceeds {limit}")]
    Resolution { h_kappa: f64, limit: f64 },
}
