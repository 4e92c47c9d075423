//! Truncated differential operators of infinite order.
//!
//! An [`OperatorSeries`] stands for `F(x, z) = Σ_{n=0}^{N} F_n(x) z^n` where
//! `z = d/dx`, so applying it to `u` yields `Σ F_n(x) u^(n)(x)`. Every series
//! carries its truncation order `N` explicitly; on a polynomial `u` with
//! `deg u <= N` application is exact because higher derivatives vanish.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, inv_factorial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorSeries {
    /// Always `truncation_order + 1` entries; zero coefficients are stored.
    coeffs: Vec<Polynomial>,
}

impl OperatorSeries {
    /// Series with the given coefficients; the truncation order is `len - 1`.
    /// An empty list is read as the zero operator of order 0.
    pub fn new(mut coeffs: Vec<Polynomial>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Polynomial::zero());
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Polynomial::zero(); order + 1],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::multiplication(Polynomial::one(), order)
    }

    /// Multiplication by the function `p(x)`.
    pub fn multiplication(p: Polynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = p;
        s
    }

    /// `z^k`, i.e. the `k`-th derivative. Zero when `k > order`.
    pub fn z_power(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = Polynomial::one();
        }
        s
    }

    /// x-free series from constant coefficients, padded with zeros or cut to `order`.
    pub fn from_constants(values: &[BigRational], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, v) in s.coeffs.iter_mut().zip(values) {
            *slot = Polynomial::constant(v.clone());
        }
        s
    }

    /// Taylor operator `e^{a z}`, coefficients `a^n / n!`; acts as `u(x) -> u(x + a)`.
    pub fn exp(a: &BigRational, order: usize) -> Self {
        let mut a_pow = BigRational::one();
        let values: Vec<BigRational> = (0..=order)
            .map(|n| {
                let v = &a_pow * inv_factorial(n);
                a_pow *= a;
                v
            })
            .collect();
        Self::from_constants(&values, order)
    }

    /// `(e^z - 1)/z`, coefficients `1/(n+1)!`.
    pub fn exp_minus_one_over_z(order: usize) -> Self {
        let values: Vec<BigRational> = (0..=order).map(|n| inv_factorial(n + 1)).collect();
        Self::from_constants(&values, order)
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    /// Structural x-freeness: every coefficient is a constant polynomial.
    pub fn is_x_free(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_constant)
    }

    /// Re-truncates to `order`, dropping or zero-padding coefficients.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Polynomial::zero());
        Self { coeffs }
    }

    fn check_order(&self, required: usize) -> Result<()> {
        if self.truncation_order() < required {
            return Err(Error::TruncationTooLow {
                order: self.truncation_order(),
                required,
            });
        }
        Ok(())
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.truncation_order() != other.truncation_order() {
            return Err(Error::TruncationMismatch {
                left: self.truncation_order(),
                right: other.truncation_order(),
            });
        }
        Ok(())
    }

    /// `Σ F_n(x) u^(n)(x)`. Fails when the truncation order is below `deg u`,
    /// since the result would silently drop terms.
    pub fn apply(&self, u: &Polynomial) -> Result<Polynomial> {
        let Some(deg) = u.degree() else {
            return Ok(Polynomial::zero());
        };
        self.check_order(deg)?;
        let mut acc = Polynomial::zero();
        let mut deriv = u.clone();
        for f in self.coeffs.iter().take(deg + 1) {
            if !f.is_zero() {
                acc = &acc + &(f * &deriv);
            }
            deriv = deriv.derivative(1);
        }
        Ok(acc)
    }

    /// `(1/k!) ∂^k F / ∂z^k`: coefficient `n` is `C(n+k, k) F_{n+k}(x)`, and the
    /// truncation order drops to `N - k`.
    pub fn z_derivative_shifted(&self, k: usize) -> Result<Self> {
        self.check_order(k)?;
        let coeffs = (0..=self.truncation_order() - k)
            .map(|n| {
                let c = BigRational::from_integer(binomial(n + k, k));
                self.coeffs[n + k].scale(&c)
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// `∂^n F / ∂x^n`, coefficientwise.
    pub fn x_derivative(&self, n: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|f| f.derivative(n)).collect(),
        }
    }

    /// Applies `F` to `u v` through the expansion `Σ_n v^(n) ((1/n!) F_z^(n)) u`.
    pub fn apply_to_product(&self, u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
        let (Some(du), Some(dv)) = (u.degree(), v.degree()) else {
            return Ok(Polynomial::zero());
        };
        self.check_order(du + dv)?;
        let mut acc = Polynomial::zero();
        let mut v_deriv = v.clone();
        for n in 0..=dv {
            let inner = self.z_derivative_shifted(n)?.apply(u)?;
            acc = &acc + &(&v_deriv * &inner);
            v_deriv = v_deriv.derivative(1);
        }
        Ok(acc)
    }

    /// Symbol product: coefficient polynomials multiply as functions and
    /// powers of `z` add, truncated at this series' order. For x-free series
    /// this is the ordinary Cauchy product of power series in `z`.
    pub fn cauchy_product(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let order = self.truncation_order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Operator composition `X F = Σ_n (1/n!) (∂^n X/∂z^n)(∂^n F/∂x^n)`,
    /// with every partial product truncated at the shared order `N`.
    ///
    /// Applied to any `u` with `deg u <= N` (and `deg(F u) <= N`), the result
    /// agrees with `X` applied to `F u`.
    pub fn bourlet_product(&self, f: &Self) -> Result<Self> {
        self.check_same_order(f)?;
        let order = self.truncation_order();
        let mut out = Self::zero(order);
        for n in 0..=order {
            let fx = f.x_derivative(n);
            if fx.coeffs.iter().all(Polynomial::is_zero) {
                break;
            }
            let xz = self.z_derivative_shifted(n)?.with_order(order);
            let term = xz.cauchy_product(&fx)?;
            for (acc, t) in out.coeffs.iter_mut().zip(term.coeffs) {
                *acc = &*acc + &t;
            }
        }
        Ok(out)
    }

    /// Inverse of an x-free series: `X_0 = 1/F_0`,
    /// `X_n = -(1/F_0) Σ_{k=1}^{n} F_k X_{n-k}`.
    pub fn reciprocal(&self) -> Result<Self> {
        if let Some(index) = self.coeffs.iter().position(|c| !c.is_constant()) {
            return Err(Error::NotXFree { index });
        }
        let f: Vec<BigRational> = self.coeffs.iter().map(Polynomial::constant_term).collect();
        if f[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = f[0].recip();
        let mut x: Vec<BigRational> = Vec::with_capacity(f.len());
        x.push(inv0.clone());
        for n in 1..f.len() {
            let s = (1..=n).fold(BigRational::zero(), |acc, k| acc + &f[k] * &x[n - k]);
            x.push(-(&inv0 * s));
        }
        Ok(Self::from_constants(&x, self.truncation_order()))
    }

    /// Seeded random series with coefficients of x-degree at most
    /// `max_x_degree` and small rational entries.
    pub fn random(rng: &mut impl Rng, order: usize, max_x_degree: usize) -> Self {
        Self {
            coeffs: (0..=order)
                .map(|_| random_polynomial(rng, max_x_degree))
                .collect(),
        }
    }
}

/// Random polynomial of degree at most `max_degree` with entries `p/q`,
/// `|p| <= 5`, `1 <= q <= 4`.
pub fn random_polynomial(rng: &mut impl Rng, max_degree: usize) -> Polynomial {
    let deg = rng.gen_range(0..=max_degree);
    Polynomial::new(
        (0..=deg)
            .map(|_| {
                BigRational::new(
                    BigInt::from(rng.gen_range(-5i64..=5)),
                    BigInt::from(rng.gen_range(1i64..=4)),
                )
            })
            .collect(),
    )
}

/// Ascending `(F_0) + (F_1)*z + (F_2)*z^2 ...`, zero terms omitted.
impl fmt::Display for OperatorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Outcome of [`bourlet_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BourletReport {
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    /// Indices of failing cases.
    pub failures: Vec<usize>,
}

/// Largest x-degree of random coefficients and test polynomials in [`bourlet_check`].
pub const BOURLET_MAX_X_DEGREE: usize = 3;
/// z-order of the random operators in [`bourlet_check`].
pub const BOURLET_Z_ORDER: usize = 6;

/// Checks `bourlet_product(X, F) u == X (F u)` exactly on `cases` seeded
/// random triples. Deterministic for a fixed seed.
pub fn bourlet_check(seed: u64, cases: usize) -> Result<BourletReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let x = OperatorSeries::random(&mut rng, BOURLET_Z_ORDER, BOURLET_MAX_X_DEGREE);
        let f = OperatorSeries::random(&mut rng, BOURLET_Z_ORDER, BOURLET_MAX_X_DEGREE);
        let u = random_polynomial(&mut rng, BOURLET_MAX_X_DEGREE);
        let product = x.bourlet_product(&f)?;
        if product.apply(&u)? != x.apply(&f.apply(&u)?)? {
            failures.push(case);
        }
    }
    Ok(BourletReport {
        seed,
        cases,
        passed: cases - failures.len(),
        failures,
    })
}
