use alloc::vec::Vec;

use crate::analytic::{BoundState, Profile, Side};
use crate::error::{Error, Result};
use crate::math;

const LIMIT_TOL: f64 = 1e-8;
const PEAK_SAMPLES: usize = 400;

/// Boundary Wronskian `ψ_a ψ_b' - ψ_a' ψ_b` along positions approaching the
/// origin.
#[derive(Debug, Clone, PartialEq)]
pub struct WronskianReport {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
    /// Aitken extrapolation of the last three values.
    pub limit: f64,
    /// `2 κ max|f_a| max|f_b|`, the natural size of the Wronskian.
    pub scale: f64,
    /// Magnitudes never grow along the sequence.
    pub decreasing: bool,
    pub pass: bool,
}

fn peak(p: &Profile) -> f64 {
    let top = 4.0 * (p.s + p.degree as f64) + 10.0;
    (1..=PEAK_SAMPLES)
        .map(|k| math::abs(p.value_z(top * k as f64 / PEAK_SAMPLES as f64)))
        .fold(0.0, f64::max)
}

fn aitken(w: &[f64]) -> f64 {
    let [a, b, c] = [w[w.len() - 3], w[w.len() - 2], w[w.len() - 1]];
    let denom = c - 2.0 * b + a;
    if denom == 0.0 || !denom.is_finite() {
        return c;
    }
    let accel = c - (c - b) * (c - b) / denom;
    if accel.is_finite() {
        accel
    } else {
        c
    }
}

/// Wronskian of two real radial profiles at `side.orientation() * x` for
/// each `x` in `xs`, which must be positive, strictly decreasing and at
/// least three long.
pub fn hermiticity_wronskian(a: &Profile, b: &Profile, side: Side, xs: &[f64]) -> Result<WronskianReport> {
    if xs.len() < 3 || xs.iter().any(|x| !(x.is_finite() && *x > 0.0)) || xs.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Domain("need at least three positive, strictly decreasing positions"));
    }
    let values: Vec<f64> = xs
        .iter()
        .map(|&x| {
            let x = side.orientation() * x;
            a.value(x) * b.derivative(x) - a.derivative(x) * b.value(x)
        })
        .collect();
    let limit = aitken(&values);
    let scale = 2.0 * a.kappa.max(b.kappa) * peak(a) * peak(b);
    let decreasing = values
        .windows(2)
        .all(|w| math::abs(w[1]) <= math::abs(w[0]));
    Ok(WronskianReport {
        xs: xs.to_vec(),
        values,
        limit,
        scale,
        decreasing,
        pass: decreasing && math::abs(limit) <= LIMIT_TOL * scale,
    })
}

/// Wronskian of the upper components of two levels of one parameter set
/// on one half-line, where they obey the same Sturm–Liouville problem.
pub fn channel_wronskian(first: &BoundState, second: &BoundState, side: Side, xs: &[f64]) -> Result<WronskianReport> {
    hermiticity_wronskian(&first.upper_profile(side), &second.upper_profile(side), side, xs)
}
