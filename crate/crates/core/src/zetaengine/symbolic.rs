use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::Polynomial;

/// `pure + Σ_k c_k Z_k / π^k` over even `k >= 2`, where `Z_k` is the formal
/// symbol for `Σ_{n>=1} n^{-k}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolicCoefficient {
    pub pure: BigRational,
    zeta_terms: BTreeMap<u32, BigRational>,
}

impl SymbolicCoefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(pure: BigRational) -> Self {
        Self {
            pure,
            zeta_terms: BTreeMap::new(),
        }
    }

    /// `c Z_k / π^k`. Panics unless `k` is even and at least 2.
    pub fn zeta(k: u32, c: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_zeta(k, c);
        s
    }

    /// Adds `c Z_k / π^k`, dropping the entry if it cancels.
    pub fn add_zeta(&mut self, k: u32, c: BigRational) {
        assert!(
            k >= 2 && k.is_multiple_of(2),
            "zeta symbols are indexed by even k >= 2, got {k}"
        );
        let entry = self.zeta_terms.entry(k).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.zeta_terms.remove(&k);
        }
    }

    pub fn zeta_terms(&self) -> &BTreeMap<u32, BigRational> {
        &self.zeta_terms
    }

    pub fn zeta_coeff(&self, k: u32) -> BigRational {
        self.zeta_terms
            .get(&k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.pure.is_zero() && self.zeta_terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.pure += &other.pure;
        for (&k, c) in &other.zeta_terms {
            out.add_zeta(k, c.clone());
        }
        out
    }

    /// Replaces each `Z_k / π^k` by `values[k]`. `None` if a needed value is missing.
    pub fn substitute(&self, values: &BTreeMap<u32, BigRational>) -> Option<BigRational> {
        self.zeta_terms
            .iter()
            .try_fold(self.pure.clone(), |acc, (k, c)| {
                values.get(k).map(|v| acc + c * v)
            })
    }
}

impl fmt::Display for SymbolicCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.pure.is_zero() {
            parts.push((self.pure.is_negative(), self.pure.abs().to_string()));
        }
        for (k, c) in &self.zeta_terms {
            let abs = c.abs();
            let body = if abs.is_one() {
                format!("Z{k}/pi^{k}")
            } else {
                format!("{abs}*Z{k}/pi^{k}")
            };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `x` whose coefficients are [`SymbolicCoefficient`]s.
/// Trailing zero coefficients are stripped, as for [`Polynomial`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolicPolynomial {
    coeffs: Vec<SymbolicCoefficient>,
}

impl SymbolicPolynomial {
    pub fn new(coeffs: Vec<SymbolicCoefficient>) -> Self {
        let mut p = Self { coeffs };
        while p.coeffs.last().is_some_and(SymbolicCoefficient::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_polynomial(p: &Polynomial) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .cloned()
                .map(SymbolicCoefficient::rational)
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[SymbolicCoefficient] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> SymbolicCoefficient {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    /// Adds `c Z_k / π^k x^i`.
    pub fn add_zeta_term(&mut self, i: usize, k: u32, c: BigRational) {
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, SymbolicCoefficient::zero());
        }
        self.coeffs[i].add_zeta(k, c);
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }

    /// Every zeta index occurring in any coefficient.
    pub fn zeta_indices(&self) -> Vec<u32> {
        let mut ks: Vec<u32> = self
            .coeffs
            .iter()
            .flat_map(|c| c.zeta_terms.keys().copied())
            .collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }

    pub fn substitute(&self, values: &BTreeMap<u32, BigRational>) -> Option<Polynomial> {
        self.coeffs
            .iter()
            .map(|c| c.substitute(values))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }
}

impl fmt::Display for SymbolicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn cancellation_leaves_no_entries() {
        let mut c = SymbolicCoefficient::zeta(2, rat(1, 3));
        c.add_zeta(2, rat(-1, 3));
        assert!(c.is_zero());
        assert!(c.zeta_terms().is_empty());
    }

    #[test]
    #[should_panic]
    fn odd_index_rejected() {
        SymbolicCoefficient::zeta(3, rat(1, 1));
    }

    #[test]
    fn substitution() {
        let c =
            SymbolicCoefficient::rational(rat(-1, 2)).add(&SymbolicCoefficient::zeta(2, rat(3, 1)));
        let mut values = BTreeMap::new();
        assert_eq!(c.substitute(&values), None);
        values.insert(2, rat(1, 6));
        assert_eq!(c.substitute(&values), Some(rat(0, 1)));
    }

    #[test]
    fn rendering() {
        let mut p = SymbolicPolynomial::from_polynomial(&Polynomial::new(vec![
            rat(0, 1),
            rat(0, 1),
            rat(-1, 2),
            rat(1, 3),
        ]));
        p.add_zeta_term(1, 2, rat(1, 1));
        assert_eq!(p.to_string(), "(1/3)*x^3 + (-1/2)*x^2 + (Z2/pi^2)*x");
        let c =
            SymbolicCoefficient::rational(rat(1, 5)).add(&SymbolicCoefficient::zeta(4, rat(-3, 1)));
        assert_eq!(c.to_string(), "1/5 - 3*Z4/pi^4");
        assert_eq!(SymbolicPolynomial::default().to_string(), "0");
    }
}
