use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::kernel::cosine_kernel_integral;
use super::linsolve::{solve_exact, LinearEquation, LinearSolveError};
use super::symbolic::{SymbolicCoefficient, SymbolicPolynomial};
use crate::error::{Error, Result};
use crate::exactmath::Polynomial;
use crate::summation::faulhaber;

/// `ζ(k) = rational * π^k` for even `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZetaValue {
    pub k: u32,
    pub rational: BigRational,
}

impl fmt::Display for ZetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({}) = {} * pi^{}", self.k, self.rational, self.k)
    }
}

/// Non-periodic part of `-g/2 + ∫_0^x g + 2 Σ_n ∫_0^x cos(2nπ(x-t)) g(t) dt`
/// for `g = t^m`.
///
/// Each kernel monomial `c x^i n^-a π^-a` sums over `n` to `c Z_a/π^a x^i`.
/// The sin/cos terms are periodic with period 1 and are dropped.
pub fn particular_solution_spectral(m: usize) -> Result<SymbolicPolynomial> {
    let half = BigRational::new(1.into(), 2.into());
    let g = Polynomial::monomial(BigRational::one(), m);
    let rational = &g.antiderivative(1) - &g.scale(&half);
    let mut out = SymbolicPolynomial::from_polynomial(&rational);
    let two = BigRational::from_integer(2.into());
    for term in cosine_kernel_integral(m).polynomial_part {
        if term.exponent % 2 == 1 {
            return Err(Error::OddExponentSurvives {
                power_of_x: term.power_of_x,
                exponent: term.exponent,
            });
        }
        out.add_zeta_term(term.power_of_x, term.exponent, &two * &term.coeff);
    }
    Ok(out)
}

/// `faulhaber(m)` minus the spectral solution with `Z_k/π^k` replaced by the
/// solved rationals. On success the difference is a constant (the constant
/// of the periodic part at integers), which is returned.
pub fn spectral_residual(m: usize, values: &BTreeMap<u32, BigRational>) -> Result<BigRational> {
    let spectral = particular_solution_spectral(m)?;
    let substituted = spectral.substitute(values).ok_or_else(|| {
        Error::InconsistentSystem(format!(
            "g = x^{m} needs zeta indices {:?}, solved only {:?}",
            spectral.zeta_indices(),
            values.keys().collect::<Vec<_>>()
        ))
    })?;
    let residual = &faulhaber(m) - &substituted;
    if !residual.is_constant() {
        return Err(Error::ResidualNonZero {
            m,
            residual: residual.to_string(),
        });
    }
    Ok(residual.constant_term())
}

/// One coefficient comparison reduced by the already known values:
/// `Σ open[k] * Z_k/π^k = rhs`.
struct Comparison {
    open: BTreeMap<u32, BigRational>,
    rhs: BigRational,
    source: String,
}

fn reduce(
    c: &SymbolicCoefficient,
    target: &BigRational,
    solved: &BTreeMap<u32, BigRational>,
    source: String,
) -> Comparison {
    let mut rhs = target - &c.pure;
    let mut open = BTreeMap::new();
    for (k, ck) in c.zeta_terms() {
        match solved.get(k) {
            Some(v) => rhs -= ck * v,
            None => {
                open.insert(*k, ck.clone());
            }
        }
    }
    Comparison { open, rhs, source }
}

/// Solves the comparisons that forward substitution could not, by exact
/// elimination over the union of their open unknowns.
fn eliminate(pending: Vec<Comparison>, solved: &mut BTreeMap<u32, BigRational>) -> Result<()> {
    // Re-reduce: later comparisons may have fixed some of the unknowns.
    let pending: Vec<Comparison> = pending
        .into_iter()
        .map(|c| {
            let coeff = c
                .open
                .iter()
                .fold(SymbolicCoefficient::zero(), |acc, (&k, v)| {
                    acc.add(&SymbolicCoefficient::zeta(k, v.clone()))
                });
            reduce(&coeff, &c.rhs, solved, c.source)
        })
        .collect();
    let unknowns: Vec<u32> = {
        let mut ks: Vec<u32> = pending
            .iter()
            .flat_map(|c| c.open.keys().copied())
            .collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    };
    let equations: Vec<LinearEquation> = pending
        .iter()
        .map(|c| LinearEquation {
            coeffs: unknowns
                .iter()
                .map(|k| c.open.get(k).cloned().unwrap_or_else(BigRational::zero))
                .collect(),
            rhs: c.rhs.clone(),
        })
        .collect();
    let sources = || {
        pending
            .iter()
            .map(|c| c.source.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    };
    match solve_exact(&equations, unknowns.len()) {
        Ok(values) => {
            solved.extend(unknowns.into_iter().zip(values));
            Ok(())
        }
        Err(LinearSolveError::Inconsistent) => Err(Error::InconsistentSystem(sources())),
        Err(LinearSolveError::Underdetermined) => Err(Error::NonTriangular(sources())),
    }
}

/// `ζ(2), ζ(4), ..., ζ(max_k)` as exact multiples of powers of π.
///
/// For each even `m` the Faulhaber polynomial is compared coefficientwise
/// (`x^1 ... x^{m+1}`) with the spectral particular solution. The `x^1`
/// comparison introduces `Z_m` as its only new unknown; the others must be
/// satisfied by the values already found. Afterwards every spectral solution
/// must reproduce its Faulhaber polynomial up to a constant.
pub fn extract_zeta(max_k: u32) -> Result<Vec<ZetaValue>> {
    if max_k < 2 || max_k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "max_k must be an even integer >= 2, got {max_k}"
        )));
    }
    let mut solved: BTreeMap<u32, BigRational> = BTreeMap::new();
    for m in (2..=max_k).step_by(2) {
        let degree = m as usize;
        let spectral = particular_solution_spectral(degree)?;
        let target = faulhaber(degree);
        let mut pending = Vec::new();
        for i in 1..=degree + 1 {
            let source = format!("x^{i} for g = x^{m}");
            let cmp = reduce(&spectral.coeff(i), &target.coeff(i), &solved, source);
            match cmp.open.len() {
                0 if cmp.rhs.is_zero() => {}
                0 => {
                    return Err(Error::InconsistentSystem(format!(
                        "{}: residual {}",
                        cmp.source, cmp.rhs
                    )))
                }
                1 => {
                    let (k, ck) = cmp.open.into_iter().next().expect("one open unknown");
                    solved.insert(k, cmp.rhs / ck);
                }
                _ => pending.push(cmp),
            }
        }
        if !pending.is_empty() {
            eliminate(pending, &mut solved)?;
        }
        if !solved.contains_key(&m) {
            return Err(Error::NonTriangular(format!(
                "Z{m} is not determined by g = x^{m}"
            )));
        }
    }

    for m in (2..=max_k).step_by(2) {
        spectral_residual(m as usize, &solved)?;
    }

    solved
        .into_iter()
        .map(|(k, rational)| {
            if !rational.is_positive() {
                return Err(Error::InconsistentSystem(format!(
                    "zeta({k}) came out as {rational} * pi^{k}, not positive"
                )));
            }
            Ok(ZetaValue { k, rational })
        })
        .collect()
}

/// Map form of a list of values, as used by [`spectral_residual`].
pub fn zeta_table(values: &[ZetaValue]) -> BTreeMap<u32, BigRational> {
    values.iter().map(|v| (v.k, v.rational.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn spectral_constant_and_quadratic() {
        let s0 = particular_solution_spectral(0).unwrap();
        assert_eq!(
            s0,
            SymbolicPolynomial::from_polynomial(&Polynomial::new(vec![rat(-1, 2), rat(1, 1)]))
        );

        let s2 = particular_solution_spectral(2).unwrap();
        let mut expected = SymbolicPolynomial::from_polynomial(&Polynomial::new(vec![
            rat(0, 1),
            rat(0, 1),
            rat(-1, 2),
            rat(1, 3),
        ]));
        expected.add_zeta_term(1, 2, rat(1, 1));
        assert_eq!(s2, expected);
    }

    #[test]
    fn spectral_quartic() {
        let s4 = particular_solution_spectral(4).unwrap();
        assert_eq!(s4.degree(), Some(5));
        assert_eq!(s4.coeff(5), SymbolicCoefficient::rational(rat(1, 5)));
        assert_eq!(s4.coeff(4), SymbolicCoefficient::rational(rat(-1, 2)));
        assert_eq!(s4.coeff(3), SymbolicCoefficient::zeta(2, rat(2, 1)));
        assert_eq!(s4.coeff(2), SymbolicCoefficient::zero());
        assert_eq!(s4.coeff(1), SymbolicCoefficient::zeta(4, rat(-3, 1)));
        assert_eq!(s4.coeff(0), SymbolicCoefficient::zero());
    }

    #[test]
    fn basel() {
        let z = extract_zeta(2).unwrap();
        assert_eq!(
            z,
            vec![ZetaValue {
                k: 2,
                rational: rat(1, 6)
            }]
        );
        assert_eq!(z[0].to_string(), "zeta(2) = 1/6 * pi^2");
    }

    #[test]
    fn even_values_through_eight() {
        let z = extract_zeta(8).unwrap();
        let expected = [rat(1, 6), rat(1, 90), rat(1, 945), rat(1, 9450)];
        assert_eq!(z.len(), 4);
        for (v, e) in z.iter().zip(expected) {
            assert_eq!(v.rational, e, "zeta({})", v.k);
        }
    }

    #[test]
    fn rejects_bad_max_k() {
        assert!(matches!(extract_zeta(3), Err(Error::InvalidArgument(_))));
        assert!(matches!(extract_zeta(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn residual_detects_wrong_value() {
        let mut table = zeta_table(&extract_zeta(4).unwrap());
        assert_eq!(spectral_residual(4, &table).unwrap(), rat(0, 1));
        table.insert(4, rat(1, 91));
        assert!(matches!(
            spectral_residual(4, &table),
            Err(Error::ResidualNonZero { m: 4, .. })
        ));
        assert!(matches!(
            spectral_residual(6, &table),
            Err(Error::InconsistentSystem(_))
        ));
    }
}
