#![allow(dead_code)]

use num_bigint::BigInt;
use opcalc::exactmath::{rat, BigRational, Polynomial};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

pub fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(Polynomial::new)
}

/// Bernoulli numbers from `Σ_{k=0}^{n-1} C(n,k) B_k = 0`, `B_0 = 1`, using a
/// Pascal-triangle binomial independent of the library.
pub fn bernoulli_by_recurrence(max_n: usize) -> Vec<BigRational> {
    let mut pascal: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for n in 1..=max_n + 1 {
        let prev = &pascal[n - 1];
        let mut row = vec![BigInt::from(1); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        pascal.push(row);
    }
    let mut b: Vec<BigRational> = vec![rat(1, 1)];
    for n in 1..=max_n {
        // C(n+1, n) B_n = -Σ_{k<n} C(n+1, k) B_k
        let s = (0..n).fold(rat(0, 1), |acc, k| {
            acc + BigRational::from_integer(pascal[n + 1][k].clone()) * &b[k]
        });
        b.push(-s / BigRational::from_integer(pascal[n + 1][n].clone()));
    }
    b
}
