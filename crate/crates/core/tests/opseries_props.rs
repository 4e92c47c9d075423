mod common;

use common::{bernoulli_by_recurrence, polynomial, rational};
use opcalc::exactmath::{binomial, factorial, BigRational, Polynomial};
use opcalc::opseries::bourlet_check;
use opcalc::OperatorSeries;
use proptest::prelude::*;

fn series(order: usize, max_x_degree: usize) -> impl Strategy<Value = OperatorSeries> {
    prop::collection::vec(polynomial(max_x_degree), order + 1).prop_map(OperatorSeries::new)
}

fn x_free_series(order: usize) -> impl Strategy<Value = OperatorSeries> {
    (
        rational().prop_filter("invertible", |c| *c != BigRational::from_integer(0.into())),
        prop::collection::vec(rational(), order),
    )
        .prop_map(move |(c0, rest)| {
            let mut values = vec![c0];
            values.extend(rest);
            OperatorSeries::from_constants(&values, order)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bourlet_product_composes(x in series(6, 3), f in series(6, 3), u in polynomial(3)) {
        let lhs = x.bourlet_product(&f).unwrap().apply(&u).unwrap();
        let rhs = x.apply(&f.apply(&u).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #[test]
    fn z_derivative_coefficients(f in series(7, 3)) {
        for k in 0..=7 {
            let d = f.z_derivative_shifted(k).unwrap();
            prop_assert_eq!(d.truncation_order(), 7 - k);
            for n in 0..=7 - k {
                let c = BigRational::from_integer(binomial(n + k, k));
                prop_assert_eq!(d.coeff(n), &f.coeff(n + k).scale(&c));
            }
        }
    }

    #[test]
    fn apply_to_product_matches_direct(f in series(8, 3), u in polynomial(4), v in polynomial(4)) {
        prop_assert_eq!(f.apply_to_product(&u, &v).unwrap(), f.apply(&(&u * &v)).unwrap());
    }

    #[test]
    fn reciprocal_is_inverse(f in x_free_series(8)) {
        let inv = f.reciprocal().unwrap();
        prop_assert_eq!(f.cauchy_product(&inv).unwrap(), OperatorSeries::identity(8));
        prop_assert_eq!(inv.bourlet_product(&f).unwrap(), OperatorSeries::identity(8));
    }
}

#[test]
fn bernoulli_numbers_from_reciprocal() {
    let inv = OperatorSeries::exp_minus_one_over_z(20)
        .reciprocal()
        .unwrap();
    let oracle = bernoulli_by_recurrence(20);
    for (n, expected) in oracle.iter().enumerate() {
        let b_n = inv.coeff(n).constant_term() * BigRational::from_integer(factorial(n));
        assert_eq!(&b_n, expected, "B_{n}");
    }
    // the recurrence itself, Σ_{k<n} C(n,k) B_k = 0
    for n in 2..=20 {
        let s = (0..n).fold(BigRational::from_integer(0.into()), |acc, k| {
            acc + BigRational::from_integer(binomial(n, k))
                * inv.coeff(k).constant_term()
                * BigRational::from_integer(factorial(k))
        });
        assert_eq!(s, BigRational::from_integer(0.into()), "n={n}");
    }
}

#[test]
fn seeded_bourlet_check_passes() {
    let report = bourlet_check(42, 200).unwrap();
    assert_eq!(report.passed, 200);
    assert_eq!(report, bourlet_check(42, 200).unwrap());
    assert_ne!(bourlet_check(1, 3).unwrap().seed, report.seed);
}

#[test]
fn shift_operator_matches_taylor_shift() {
    let p = Polynomial::from_integers(&[3, -1, 0, 2, 5]);
    for a in [-3i64, -1, 2, 7] {
        let a = BigRational::from_integer(a.into());
        assert_eq!(OperatorSeries::exp(&a, 4).apply(&p).unwrap(), p.shift(&a));
    }
}
