//! Closed form of `∫_0^x cos(2nπ(x-t)) t^m dt` with `n` kept symbolic.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmath::rational_to_f64;

/// `coeff * x^power_of_x * n^-exponent * π^-exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KernelTerm {
    pub power_of_x: usize,
    pub exponent: u32,
    pub coeff: BigRational,
}

/// `coeff * n^-exponent * π^-exponent` multiplying `sin(2nπx)` or `cos(2nπx)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicTerm {
    pub exponent: u32,
    pub coeff: BigRational,
}

/// Kernel integral split into a polynomial part and a part periodic in `x`
/// with period `1/n`. All stored coefficients are nonzero, exponents >= 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KernelResult {
    pub polynomial_part: Vec<KernelTerm>,
    pub sin_part: Vec<PeriodicTerm>,
    pub cos_part: Vec<PeriodicTerm>,
}

impl KernelResult {
    /// Numeric value at integer frequency `n` and point `x`.
    pub fn eval_f64(&self, n: u32, x: f64) -> f64 {
        let w = f64::from(n) * PI;
        let scale = |a: u32| w.powi(-(a as i32));
        let poly: f64 = self
            .polynomial_part
            .iter()
            .map(|t| rational_to_f64(&t.coeff) * x.powi(t.power_of_x as i32) * scale(t.exponent))
            .sum();
        let arg = 2.0 * w * x;
        let sin: f64 = self
            .sin_part
            .iter()
            .map(|t| rational_to_f64(&t.coeff) * scale(t.exponent))
            .sum();
        let cos: f64 = self
            .cos_part
            .iter()
            .map(|t| rational_to_f64(&t.coeff) * scale(t.exponent))
            .sum();
        poly + sin * arg.sin() + cos * arg.cos()
    }
}

/// Terms in powers of `1/ω`, `ω = 2nπ`.
#[derive(Clone, Default)]
struct OmegaTerms {
    poly: BTreeMap<(usize, u32), BigRational>,
    sin: BTreeMap<u32, BigRational>,
    cos: BTreeMap<u32, BigRational>,
}

impl OmegaTerms {
    /// `(c/ω) * self`.
    fn scaled_over_omega(&self, c: &BigRational) -> Self {
        let bump = |m: &BTreeMap<u32, BigRational>| {
            m.iter()
                .map(|(&a, v)| (a + 1, v * c))
                .collect::<BTreeMap<_, _>>()
        };
        Self {
            poly: self
                .poly
                .iter()
                .map(|(&(i, a), v)| ((i, a + 1), v * c))
                .collect(),
            sin: bump(&self.sin),
            cos: bump(&self.cos),
        }
    }

    fn into_kernel(self) -> KernelResult {
        // ω^-a = 2^-a n^-a π^-a
        let halve = |a: u32, v: BigRational| v / BigRational::from_integer(BigInt::from(2).pow(a));
        let periodic = |m: BTreeMap<u32, BigRational>| {
            m.into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(a, v)| PeriodicTerm {
                    exponent: a,
                    coeff: halve(a, v),
                })
                .collect()
        };
        KernelResult {
            polynomial_part: self
                .poly
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|((i, a), v)| KernelTerm {
                    power_of_x: i,
                    exponent: a,
                    coeff: halve(a, v),
                })
                .collect(),
            sin_part: periodic(self.sin),
            cos_part: periodic(self.cos),
        }
    }
}

/// `∫_0^x cos(2nπ(x-t)) t^m dt` by repeated integration by parts.
///
/// With `C_m = ∫_0^x cos(ω(x-t)) t^m dt` and `S_m` the sine analogue:
///
/// ```text
/// C_0 = sin(ωx)/ω              S_0 = (1 - cos(ωx))/ω
/// C_m = (m/ω) S_{m-1}          S_m = x^m/ω - (m/ω) C_{m-1}
/// ```
pub fn cosine_kernel_integral(m: usize) -> KernelResult {
    let one = BigRational::one();
    let mut c = OmegaTerms::default();
    c.sin.insert(1, one.clone());
    let mut s = OmegaTerms::default();
    s.poly.insert((0, 1), one.clone());
    s.cos.insert(1, -one.clone());

    for k in 1..=m {
        let kq = BigRational::from_integer(BigInt::from(k));
        let next_c = s.scaled_over_omega(&kq);
        let mut next_s = c.scaled_over_omega(&-kq);
        let e = next_s.poly.entry((k, 1)).or_insert_with(BigRational::zero);
        *e += &one;
        c = next_c;
        s = next_s;
    }
    c.into_kernel()
}
