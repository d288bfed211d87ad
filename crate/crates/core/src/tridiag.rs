//! Symmetric tridiagonal eigenproblems.
//!
//! Eigenvalues come from bisection on the Sturm count, eigenvectors from
//! inverse iteration with a pivoted tridiagonal LU. Both the
//! finite-difference oracle and the Gauss quadrature nodes go through here.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    /// `off[i]` couples rows `i` and `i + 1`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Domain("empty matrix"));
        }
        if off.len() + 1 != diag.len() {
            return Err(Error::Domain("off-diagonal length must be n - 1"));
        }
        if diag.iter().chain(off.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Domain("matrix entries must be finite"));
        }
        Ok(Self { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    /// Interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { math::abs(self.off[i - 1]) } else { 0.0 };
            let right = if i + 1 < n { math::abs(self.off[i]) } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    fn pivmin(&self) -> f64 {
        let max_off2 = self.off.iter().fold(1.0f64, |m, b| m.max(b * b));
        f64::MIN_POSITIVE * max_off2
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let pivmin = self.pivmin();
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if math::abs(d) < pivmin {
            d = -pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
        for i in 1..self.len() {
            let b = self.off[i - 1];
            d = (self.diag[i] - x) - b * b / d;
            if math::abs(d) < pivmin {
                d = -pivmin;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.len(), "eigenvalue index out of range");
        let (glo, ghi) = self.gershgorin();
        let pad = f64::EPSILON * (math::abs(glo) + math::abs(ghi)) + f64::MIN_POSITIVE;
        self.bisect(k, glo - pad, ghi + pad)
    }

    fn bisect(&self, k: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..2048 {
            let mid = lo + 0.5 * (hi - lo);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo + 0.5 * (hi - lo)
    }

    /// The `k` smallest eigenvalues in ascending order.
    pub fn lowest(&self, k: usize) -> Vec<f64> {
        let k = k.min(self.len());
        (0..k).map(|i| self.eigenvalue(i)).collect()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.lowest(self.len())
    }

    /// Unit eigenvector for an (accurate) eigenvalue `lambda`.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        if n == 1 {
            return vec![1.0];
        }
        let (glo, ghi) = self.gershgorin();
        let scale = math::abs(glo).max(math::abs(ghi)).max(f64::MIN_POSITIVE);
        let lu = ShiftedLu::factor(self, lambda, f64::EPSILON * scale);
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 1e-3 * (i % 7) as f64).collect();
        for _ in 0..4 {
            lu.solve(&mut v);
            let norm = math::sqrt(v.iter().map(|x| x * x).sum::<f64>());
            if !(norm.is_finite() && norm > 0.0) {
                break;
            }
            v.iter_mut().for_each(|x| *x /= norm);
        }
        // fix the sign so the largest component is positive
        let big = v
            .iter()
            .copied()
            .fold(0.0f64, |m, x| if math::abs(x) > math::abs(m) { x } else { m });
        if big < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        v
    }
}

/// LU factorization of `T - shift I` with partial pivoting.
struct ShiftedLu {
    // row i of U holds u0[i] at column i, u1[i] at i+1, u2[i] at i+2
    u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    mult: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(t: &SymTridiagonal, shift: f64, tiny: f64) -> Self {
        let n = t.len();
        let mut d: Vec<f64> = t.diag.iter().map(|a| a - shift).collect();
        let mut du: Vec<f64> = t.off.clone();
        let mut dl: Vec<f64> = t.off.clone();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut mult = vec![0.0; n.saturating_sub(1)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n - 1 {
            if math::abs(d[i]) >= math::abs(dl[i]) {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                let f = dl[i] / d[i];
                mult[i] = f;
                d[i + 1] -= f * du[i];
            } else {
                let f = d[i] / dl[i];
                d[i] = dl[i];
                mult[i] = f;
                let tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - f * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -f;
                }
                swapped[i] = true;
            }
            dl[i] = 0.0;
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = tiny;
        }
        for x in d.iter_mut() {
            if math::abs(*x) < tiny {
                *x = if *x < 0.0 { -tiny } else { tiny };
            }
        }
        Self {
            u0: d,
            u1: du,
            u2: du2,
            mult,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.u0.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                b.swap(i, i + 1);
                b[i + 1] -= self.mult[i] * b[i];
            } else {
                b[i + 1] -= self.mult[i] * b[i];
            }
        }
        for i in (0..n).rev() {
            let mut s = b[i];
            if i + 1 < n {
                s -= self.u1[i] * b[i + 1];
            }
            if i + 2 < n {
                s -= self.u2[i] * b[i + 2];
            }
            b[i] = s / self.u0[i];
        }
    }
}
