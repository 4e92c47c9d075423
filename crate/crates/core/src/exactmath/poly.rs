use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::combinat::inv_factorial;

/// Dense univariate polynomial in `x` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient is
/// always nonzero; the zero polynomial stores no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: BigRational, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = c;
        Self { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact `order`-th derivative.
    pub fn derivative(&self, order: usize) -> Self {
        if order == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= order {
            return Self::zero();
        }
        let coeffs = (order..self.coeffs.len())
            .map(|i| {
                // i (i-1) ... (i-order+1)
                let falling: BigInt = (i + 1 - order..=i).map(BigInt::from).product();
                &self.coeffs[i] * BigRational::from_integer(falling)
            })
            .collect();
        Self::new(coeffs)
    }

    /// Repeated antiderivative with every integration constant set to zero,
    /// so the result and its first `order - 1` derivatives vanish at `x = 0`.
    pub fn antiderivative(&self, order: usize) -> Self {
        if order == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); order];
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, c)| {
            let rising: BigInt = (i + 1..=i + order).map(BigInt::from).product();
            c / BigRational::from_integer(rising)
        }));
        Self::new(coeffs)
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x0: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x0 + c)
    }

    /// `q(x) = p(x + a)` via the finite Taylor sum `Σ p^(n)(x) a^n / n!`.
    pub fn shift(&self, a: &BigRational) -> Self {
        if a.is_zero() || self.is_constant() {
            return self.clone();
        }
        let mut result = Self::zero();
        let mut a_pow = BigRational::one();
        let mut deriv = self.clone();
        let mut n = 0;
        while !deriv.is_zero() {
            result = &result + &deriv.scale(&(&a_pow * inv_factorial(n)));
            deriv = deriv.derivative(1);
            a_pow *= a;
            n += 1;
        }
        result
    }

    /// `p(x+1) - p(x)`.
    pub fn forward_difference(&self) -> Self {
        &self.shift(&BigRational::one()) - self
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Floating-point evaluation, for numeric spot checks only.
    pub fn eval_f64(&self, x0: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x0 + super::rational_to_f64(c))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Descending powers with exact rationals, e.g. `1/3*x^3 - 1/2*x^2 + 1/6*x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn sum_of_squares() -> Polynomial {
        Polynomial::new(vec![rat(0, 1), rat(1, 6), rat(-1, 2), rat(1, 3)])
    }

    #[test]
    fn arithmetic_examples() {
        let a = Polynomial::from_integers(&[1, 0, 1]);
        let b = Polynomial::from_integers(&[0, 0, -1]);
        assert_eq!(&a + &b, Polynomial::one());
        assert_eq!(
            &Polynomial::x() * &Polynomial::x(),
            Polynomial::monomial(rat(1, 1), 2)
        );
        let p = sum_of_squares();
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn derivative_examples() {
        let cube = Polynomial::monomial(rat(1, 1), 3);
        assert_eq!(cube.derivative(1), Polynomial::monomial(rat(3, 1), 2));
        assert!(cube.derivative(4).is_zero());
        assert_eq!(
            sum_of_squares().derivative(1),
            Polynomial::new(vec![rat(1, 6), rat(-1, 1), rat(1, 1)])
        );
    }

    #[test]
    fn antiderivative_examples() {
        assert_eq!(Polynomial::one().antiderivative(1), Polynomial::x());
        assert_eq!(
            Polynomial::one().antiderivative(2),
            Polynomial::monomial(rat(1, 2), 2)
        );
        assert_eq!(
            Polynomial::monomial(rat(1, 1), 2).antiderivative(1),
            Polynomial::monomial(rat(1, 3), 3)
        );
        assert!(Polynomial::zero().antiderivative(3).is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = sum_of_squares();
        assert_eq!(p.eval(&rat(0, 1)), rat(0, 1));
        assert_eq!(p.eval(&rat(3, 1)), rat(5, 1));
        assert_eq!(
            Polynomial::monomial(rat(1, 1), 2).eval(&rat(-1, 1)),
            rat(1, 1)
        );
    }

    #[test]
    fn shift_examples() {
        let sq = Polynomial::monomial(rat(1, 1), 2);
        assert_eq!(sq.shift(&rat(1, 1)), Polynomial::from_integers(&[1, 2, 1]));
        let p = sum_of_squares();
        assert_eq!(p.shift(&rat(0, 1)), p);
        assert_eq!(p.forward_difference(), sq);
    }

    #[test]
    fn rendering() {
        assert_eq!(sum_of_squares().to_string(), "1/3*x^3 - 1/2*x^2 + 1/6*x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::x().to_string(), "x");
        assert_eq!(Polynomial::from_integers(&[-1, -1]).to_string(), "-x - 1");
        assert_eq!(
            Polynomial::new(vec![rat(0, 1), rat(-1, 4)]).to_string(),
            "-1/4*x"
        );
        assert_eq!(Polynomial::from_integers(&[5]).to_string(), "5");
    }
}
