//! Floating-point cross-checks. Nothing here feeds back into the exact pipeline.

use std::f64::consts::PI;

use super::extract::ZetaValue;
use crate::error::{Error, Result};
use crate::exactmath::rational_to_f64;

/// Inputs closer to the pole at 0 than this are rejected.
pub const POLE_GUARD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PfdCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_error: f64,
    /// `|z0| / (2π² N)`, an upper bound for the dropped tail.
    pub tail_bound: f64,
}

/// Compares `1/(e^z0 - 1)` with the pole expansion
/// `-1/2 + 1/z0 + Σ_{n=1}^{N} 2 z0 / (z0² + 4n²π²)`.
pub fn pfd_numeric_check(z0: f64, terms: u64) -> Result<PfdCheck> {
    if !z0.is_finite() || z0.abs() < POLE_GUARD {
        return Err(Error::PoleTooClose { z0 });
    }
    if z0.abs() >= 2.0 * PI {
        return Err(Error::OutsideConvergence { z0 });
    }
    if terms == 0 {
        return Err(Error::InvalidArgument("terms must be positive".into()));
    }
    let lhs = 1.0 / z0.exp_m1();
    let z2 = z0 * z0;
    // smallest terms first
    let tail: f64 = (1..=terms)
        .rev()
        .map(|n| {
            let w = 2.0 * PI * n as f64;
            2.0 * z0 / (z2 + w * w)
        })
        .sum();
    let rhs = -0.5 + 1.0 / z0 + tail;
    Ok(PfdCheck {
        lhs,
        rhs,
        abs_error: (lhs - rhs).abs(),
        tail_bound: z0.abs() / (2.0 * PI * PI * terms as f64),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaNumericCheck {
    pub symbolic: f64,
    pub partial_sum: f64,
    pub rel_error: f64,
    /// `1/((k-1) N^{k-1}) / symbolic`, an upper bound for the relative tail.
    pub tail_bound: f64,
}

/// Compares `rational * π^k` with `Σ_{n=1}^{terms} n^-k`.
pub fn zeta_numeric_check(v: &ZetaValue, terms: u64) -> Result<ZetaNumericCheck> {
    if terms == 0 {
        return Err(Error::InvalidArgument("terms must be positive".into()));
    }
    let k = v.k as i32;
    let symbolic = rational_to_f64(&v.rational) * PI.powi(k);
    let partial_sum: f64 = (1..=terms).rev().map(|n| (n as f64).powi(-k)).sum();
    let tail = 1.0 / (f64::from(v.k - 1) * (terms as f64).powi(k - 1));
    Ok(ZetaNumericCheck {
        symbolic,
        partial_sum,
        rel_error: (symbolic - partial_sum).abs() / symbolic,
        tail_bound: tail / symbolic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn pfd_at_one() {
        let c = pfd_numeric_check(1.0, 1000).unwrap();
        assert!((c.lhs - 0.581_976_706_869_326_4).abs() < 1e-15);
        assert!(c.abs_error <= 5e-4);
        assert!(c.abs_error <= c.tail_bound);
        let coarse = pfd_numeric_check(1.0, 100).unwrap();
        assert!(c.abs_error < coarse.abs_error);
    }

    #[test]
    fn pfd_odd_symmetry() {
        for &z in &[0.3, 1.0, 2.5, 6.0] {
            for &n in &[1, 10, 500] {
                let a = pfd_numeric_check(z, n).unwrap();
                let b = pfd_numeric_check(-z, n).unwrap();
                assert!((a.rhs + b.rhs + 1.0).abs() < 1e-12, "z={z} n={n}");
                assert!((a.lhs + b.lhs + 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pfd_rejects_bad_points() {
        assert!(matches!(
            pfd_numeric_check(0.0, 10),
            Err(Error::PoleTooClose { .. })
        ));
        assert!(matches!(
            pfd_numeric_check(1e-7, 10),
            Err(Error::PoleTooClose { .. })
        ));
        assert!(matches!(
            pfd_numeric_check(7.0, 10),
            Err(Error::OutsideConvergence { .. })
        ));
        assert!(matches!(
            pfd_numeric_check(f64::NAN, 10),
            Err(Error::PoleTooClose { .. })
        ));
        assert!(pfd_numeric_check(1.0, 0).is_err());
    }

    #[test]
    fn zeta_checks() {
        let z2 = ZetaValue {
            k: 2,
            rational: rat(1, 6),
        };
        let one = zeta_numeric_check(&z2, 1).unwrap();
        assert_eq!(one.partial_sum, 1.0);
        assert!(zeta_numeric_check(&z2, 1_000_000).unwrap().rel_error < 1e-5);
        let z4 = ZetaValue {
            k: 4,
            rational: rat(1, 90),
        };
        let c4 = zeta_numeric_check(&z4, 1000).unwrap();
        assert!(c4.rel_error < 1e-8);
        assert!(c4.rel_error <= c4.tail_bound);
    }
}
