mod common;

use common::{polynomial, rational};
use num_integer::Integer;
use num_traits::{One, Signed};
use opcalc::exactmath::{binomial, parse_polynomial, BigRational, Polynomial};
use proptest::prelude::*;

fn lowest_terms(p: &Polynomial) -> bool {
    p.coeffs()
        .iter()
        .all(|c| c.denom().is_positive() && c.numer().gcd(c.denom()).is_one())
}

proptest! {
    #[test]
    fn leibniz_rule(p in polynomial(6), q in polynomial(6), n in 0usize..10) {
        let lhs = (&p * &q).derivative(n);
        let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
            let c = BigRational::from_integer(binomial(n, k));
            &acc + &(&p.derivative(k) * &q.derivative(n - k)).scale(&c)
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antiderivative_inverts_derivative(p in polynomial(10)) {
        let back = p.derivative(1).antiderivative(1);
        prop_assert_eq!(back, &p - &Polynomial::constant(p.constant_term()));
        prop_assert_eq!(p.antiderivative(1).derivative(1), p);
    }

    #[test]
    fn shifts_compose(p in polynomial(8), a in rational(), b in rational()) {
        prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&(&a + &b)));
    }

    #[test]
    fn shift_matches_evaluation(p in polynomial(10), a in rational(), x0 in rational()) {
        let shifted = p.shift(&a);
        prop_assert_eq!(shifted.eval(&x0), p.eval(&(&x0 + &a)));
        prop_assert!(lowest_terms(&shifted));
    }

    #[test]
    fn results_stay_in_lowest_terms(p in polynomial(6), q in polynomial(6), a in rational()) {
        for r in [&p + &q, &p - &q, &p * &q, p.derivative(2), p.antiderivative(3), p.shift(&a)] {
            prop_assert!(lowest_terms(&r));
            prop_assert!(r.leading_coeff().is_none_or(|c| *c != BigRational::from_integer(0.into())));
        }
    }

    #[test]
    fn text_round_trip(p in polynomial(10)) {
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }
}
