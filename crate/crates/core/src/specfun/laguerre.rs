use crate::error::{Error, Result};

fn check_order(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > -1.0) {
        return Err(Error::Domain("Laguerre order must satisfy alpha > -1"));
    }
    Ok(())
}

/// Generalized Laguerre polynomial `L_n^α(z)` by upward recurrence in `n`.
pub fn laguerre(n: u32, alpha: f64, z: f64) -> Result<f64> {
    check_order(alpha)?;
    Ok(laguerre_unchecked(n, alpha, z))
}

pub(crate) fn laguerre_unchecked(n: u32, alpha: f64, z: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - z;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + alpha + 1.0 - z) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `d/dz L_n^α(z) = -L_{n-1}^{α+1}(z)`.
pub fn laguerre_derivative(n: u32, alpha: f64, z: f64) -> Result<f64> {
    check_order(alpha)?;
    Ok(laguerre_derivative_unchecked(n, alpha, z))
}

pub(crate) fn laguerre_derivative_unchecked(n: u32, alpha: f64, z: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -laguerre_unchecked(n - 1, alpha + 1.0, z)
    }
}

/// `binom(top, k)` for real `top` and integer `k`, as a finite product.
pub fn binomial(top: f64, k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, j| acc * (top - (k - j) as f64) / j as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn low_degree_closed_forms() {
        assert_eq!(laguerre(0, 1.5, 3.7).unwrap(), 1.0);
        assert_eq!(laguerre(1, 2.0, 1.0).unwrap(), 2.0);
        assert_eq!(laguerre(2, 1.0, 2.0).unwrap(), -1.0);
    }

    #[test]
    fn value_at_origin_is_binomial() {
        for n in 0..12 {
            for alpha in [0.0, 0.5, 2.3, 7.0] {
                assert_relative_eq!(
                    laguerre(n, alpha, 0.0).unwrap(),
                    binomial(n as f64 + alpha, n),
                    max_relative = 1e-13
                );
            }
        }
    }

    #[test]
    fn rejects_order_at_minus_one() {
        assert!(laguerre(3, -1.0, 0.5).is_err());
        assert!(laguerre_derivative(3, -1.5, 0.5).is_err());
        assert!(laguerre(3, -0.99, 0.5).is_ok());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(laguerre_derivative(0, 3.3, 9.0).unwrap(), 0.0);
        assert_eq!(laguerre_derivative(1, 1.0, 0.5).unwrap(), -1.0);
        // central difference oracle
        let h = 1e-5;
        let fd = (laguerre(2, 1.0, 2.0 + h).unwrap() - laguerre(2, 1.0, 2.0 - h).unwrap()) / (2.0 * h);
        assert!((laguerre_derivative(2, 1.0, 2.0).unwrap() - fd).abs() < 1e-8);
    }

    #[test]
    fn binomial_integers() {
        assert_eq!(binomial(5.0, 2), 10.0);
        assert_eq!(binomial(3.0, 0), 1.0);
        assert_relative_eq!(binomial(2.5, 2), 2.5 * 1.5 / 2.0, max_relative = 1e-15);
    }

    proptest! {
        #[test]
        fn three_term_recurrence(n in 1u32..10, alpha in -0.9f64..6.0, z in 0.0f64..30.0) {
            let l = |k| laguerre(k, alpha, z).unwrap();
            let nf = n as f64;
            let lhs = (nf + 1.0) * l(n + 1);
            let rhs = (2.0 * nf + alpha + 1.0 - z) * l(n) - (nf + alpha) * l(n - 1);
            let scale = ((nf + 1.0) * l(n + 1)).abs()
                + ((2.0 * nf + alpha + 1.0 - z) * l(n)).abs()
                + ((nf + alpha) * l(n - 1)).abs();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale.max(1.0));
        }

        #[test]
        fn derivative_matches_central_difference(n in 0u32..8, alpha in 0.0f64..4.0, z in 0.5f64..12.0) {
            let h = 1e-5 * (1.0 + z);
            let fd = (laguerre(n, alpha, z + h).unwrap() - laguerre(n, alpha, z - h).unwrap()) / (2.0 * h);
            let d = laguerre_derivative(n, alpha, z).unwrap();
            prop_assert!((d - fd).abs() <= 1e-6 * (1.0 + d.abs()));
        }
    }
}
