//! Gauss rules from the Jacobi matrix of a three-term recurrence.
//!
//! Nodes are the eigenvalues of the Jacobi matrix (bisection, then a Newton
//! polish on the orthonormal polynomial). The weight of node `λ` is
//! `μ0 / Σ_k p_k(λ)²`, which is `μ0` times the squared first component of the
//! normalized eigenvector.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::tridiag::SymTridiagonal;

const MAX_POINTS: usize = 512;
const RESCALE: f64 = 1e150;

/// Generalized Gauss–Laguerre rule for the weight `z^α e^{-z}` on `[0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫_0^∞ z^α e^{-z} f(z) dz`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&z, &w)| w * f(z))
            .sum()
    }

    /// `∫_0^∞ x^α e^{-βx} g(x) dx` for a decay rate `β > 0`.
    pub fn integrate_scaled<F: FnMut(f64) -> f64>(&self, beta: f64, mut g: F) -> f64 {
        let scale = math::powf(beta, -(self.alpha + 1.0));
        scale * self.integrate(|t| g(t / beta))
    }
}

/// Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl LegendreRule {
    /// `∫_a^b f(x) dx`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(mid + half * t))
            .sum::<f64>()
    }
}

pub fn gauss_laguerre(npts: usize, alpha: f64) -> Result<QuadratureRule> {
    if !(alpha.is_finite() && alpha > -1.0) {
        return Err(Error::Domain("Gauss-Laguerre weight exponent must satisfy alpha > -1"));
    }
    check_points(npts)?;
    let diag: Vec<f64> = (0..npts).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    // off[k] = b_k for k = 0..=npts, b_0 unused
    let off: Vec<f64> = (0..=npts)
        .map(|k| {
            let k = k as f64;
            math::sqrt(k * (k + alpha))
        })
        .collect();
    let (nodes, weights) = golub_welsch(&diag, &off, math::lgamma(alpha + 1.0))?;
    Ok(QuadratureRule {
        alpha,
        nodes,
        weights,
    })
}

pub fn gauss_legendre(npts: usize) -> Result<LegendreRule> {
    check_points(npts)?;
    let diag = alloc::vec![0.0; npts];
    let off: Vec<f64> = (0..=npts)
        .map(|k| {
            if k == 0 {
                return 0.0;
            }
            let k = k as f64;
            k / math::sqrt(4.0 * k * k - 1.0)
        })
        .collect();
    let (nodes, weights) = golub_welsch(&diag, &off, core::f64::consts::LN_2)?;
    Ok(LegendreRule { nodes, weights })
}

fn check_points(npts: usize) -> Result<()> {
    if npts == 0 || npts > MAX_POINTS {
        return Err(Error::Domain("quadrature size must be in 1..=512"));
    }
    Ok(())
}

/// `diag` has the `n` recurrence centres, `off` the `n + 1` couplings with
/// `off[0]` ignored and `off[n]` used only for the Newton polish.
fn golub_welsch(diag: &[f64], off: &[f64], ln_mu0: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    let jacobi = SymTridiagonal::new(diag.to_vec(), off[1..n].to_vec())?;
    let mut nodes = jacobi.eigenvalues();
    for i in 0..n {
        let lo = if i > 0 { nodes[i - 1] } else { f64::NEG_INFINITY };
        let hi = if i + 1 < n { nodes[i + 1] } else { f64::INFINITY };
        nodes[i] = polish(nodes[i], lo, hi, diag, off);
    }
    let weights = nodes
        .iter()
        .map(|&x| math::exp(ln_mu0 - ln_sum_squares(x, diag, off)))
        .collect();
    Ok((nodes, weights))
}

fn polish(mut x: f64, lo: f64, hi: f64, diag: &[f64], off: &[f64]) -> f64 {
    for _ in 0..3 {
        let (p, dp) = orthonormal_with_derivative(x, diag, off);
        if dp == 0.0 || !dp.is_finite() {
            break;
        }
        let step = p / dp;
        let next = x - step;
        if !(next > lo && next < hi) || math::abs(step) > 1e-6 * (1.0 + math::abs(x)) {
            break;
        }
        if next == x {
            break;
        }
        x = next;
    }
    x
}

// p_n and p_n' up to a common scale factor
fn orthonormal_with_derivative(x: f64, diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let (mut p_prev, mut p) = (0.0, 1.0);
    let (mut d_prev, mut d) = (0.0, 0.0);
    for k in 0..n {
        let p_next = ((x - diag[k]) * p - off[k] * p_prev) / off[k + 1];
        let d_next = ((x - diag[k]) * d + p - off[k] * d_prev) / off[k + 1];
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
        let big = math::abs(p).max(math::abs(d));
        if big > RESCALE {
            p /= RESCALE;
            p_prev /= RESCALE;
            d /= RESCALE;
            d_prev /= RESCALE;
        }
    }
    (p, d)
}

// ln Σ_{k<n} p_k(x)² with p_0 = 1
fn ln_sum_squares(x: f64, diag: &[f64], off: &[f64]) -> f64 {
    let n = diag.len();
    let (mut p_prev, mut p) = (0.0, 1.0);
    let mut sum = 1.0;
    let mut ln_scale = 0.0;
    for k in 0..n - 1 {
        let p_next = ((x - diag[k]) * p - off[k] * p_prev) / off[k + 1];
        p_prev = p;
        p = p_next;
        sum += p * p;
        if math::abs(p) > RESCALE {
            p /= RESCALE;
            p_prev /= RESCALE;
            sum /= RESCALE * RESCALE;
            ln_scale += 2.0 * math::ln(RESCALE);
        }
    }
    math::ln(sum) + ln_scale
}
