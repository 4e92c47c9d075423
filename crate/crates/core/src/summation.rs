//! Exact solutions of `f(x+1) - f(x) = g(x)` for polynomial `g`.
//!
//! Taylor's theorem turns the difference equation into `(e^z - 1) f = g`.
//! Writing `e^z - 1 = z φ(z)` with `φ = Σ z^n/(n+1)!` gives
//! `f = φ^{-1} z^{-1} g`, where `z^{-1}` is the antiderivative from 0 and
//! `φ^{-1}` has the Bernoulli coefficients `B_n/n!`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::exactmath::{factorial, Polynomial};
use crate::opseries::OperatorSeries;

const NORMALIZATION_NOTE: &str = "unique up to adding a 1-periodic function; \
     for polynomial solutions only its constant matters, fixed by f(0) = 0";

/// Particular solution of `f(x+1) - f(x) = g(x)` normalized so `f(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceSolution {
    pub particular: Polynomial,
    /// Describes the free periodic part of the general solution.
    pub normalization_note: String,
}

/// Solves `f(x+1) - f(x) = g(x)` through the inverse of `(e^z - 1)/z`.
pub fn solve_difference(g: &Polynomial) -> DifferenceSolution {
    let order = g.degree().map_or(2, |d| d + 2);
    let phi_inv = OperatorSeries::exp_minus_one_over_z(order)
        .reciprocal()
        .expect("(e^z - 1)/z is x-free with constant term 1");
    let integrated = g.antiderivative(1);
    let f = phi_inv
        .apply(&integrated)
        .expect("truncation order deg(g) + 2 covers the antiderivative");
    let particular = &f - &Polynomial::constant(f.constant_term());
    DifferenceSolution {
        particular,
        normalization_note: NORMALIZATION_NOTE.to_string(),
    }
}

/// The polynomial `f` with `f(x+1) - f(x) = x^m` and `f(0) = 0`, so that
/// `f(N) = Σ_{k=1}^{N} (k-1)^m`.
pub fn faulhaber(m: usize) -> Polynomial {
    solve_difference(&Polynomial::monomial(BigRational::one(), m)).particular
}

/// `Σ_{k=1}^{n} (k-1)^m` by direct integer summation (`0^0 = 1`).
pub fn brute_force_sum(m: usize, n: u64) -> BigRational {
    let exp = u32::try_from(m).expect("exponent fits in u32");
    let total: BigInt = (0..n).map(|k| Pow::pow(BigInt::from(k), exp)).sum();
    BigRational::from_integer(total)
}

/// The `(k+1)`-fold antiderivative of `g` from 0, computed through the
/// single-integral kernel `∫_0^x (x-t)^k g(t) dt / k!`.
pub fn iterated_integral(g: &Polynomial, k: usize) -> Polynomial {
    // (x - t)^k = Σ_j C(k,j) x^{k-j} (-t)^j, so the integral is
    // Σ_j C(k,j) (-1)^j x^{k-j} ∫_0^x t^j g(t) dt.
    let kfact = BigRational::from_integer(factorial(k));
    let mut acc = Polynomial::zero();
    for j in 0..=k {
        let tj_g = &Polynomial::monomial(BigRational::one(), j) * g;
        let integral = tj_g.antiderivative(1);
        let mut c = BigRational::from_integer(crate::exactmath::binomial(k, j)) / &kfact;
        if j % 2 == 1 {
            c = -c;
        }
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&Polynomial::monomial(c, k - j) * &integral);
    }
    acc
}
