use crate::error::{Error, Result};
use crate::math;

const MAX_TERMS: usize = 10_000;

/// Kummer's function `M(a, b, z)` by direct power series.
///
/// The series stops when a term falls below `1e-14` of the running sum, or
/// exactly when `a` is a nonpositive integer.
pub fn kummer_m(a: f64, b: f64, z: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(Error::Domain("Kummer arguments must be finite"));
    }
    if b <= 0.0 && b == libm::floor(b) {
        return Err(Error::Domain("b must not be a nonpositive integer"));
    }
    if math::abs(z) > 50.0 {
        return Err(Error::Domain("power series limited to |z| <= 50"));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term == 0.0 || math::abs(term) <= 1e-14 * math::abs(sum) {
            return Ok(sum);
        }
    }
    Err(Error::ConvergenceFailure { terms: MAX_TERMS })
}
