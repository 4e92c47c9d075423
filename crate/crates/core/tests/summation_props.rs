mod common;

use common::polynomial;
use opcalc::exactmath::{int, rat};
use opcalc::summation::{brute_force_sum, faulhaber, iterated_integral, solve_difference};
use proptest::prelude::*;

proptest! {
    #[test]
    fn particular_solution_solves_difference(g in polynomial(8)) {
        let f = solve_difference(&g).particular;
        prop_assert_eq!(f.forward_difference(), g);
        prop_assert_eq!(f.constant_term(), rat(0, 1));
    }

    #[test]
    fn kernel_form_matches_repeated_antiderivative(g in polynomial(6), k in 0usize..=5) {
        prop_assert_eq!(iterated_integral(&g, k), g.antiderivative(k + 1));
    }
}

#[test]
fn faulhaber_matches_brute_force() {
    for m in 0..=8 {
        let f = faulhaber(m);
        for n in 1..=100u64 {
            assert_eq!(
                f.eval(&int(n as i64)),
                brute_force_sum(m, n),
                "m={m}, N={n}"
            );
        }
    }
}

#[test]
fn faulhaber_shape() {
    for m in 0..=20 {
        let f = faulhaber(m);
        assert_eq!(f.degree(), Some(m + 1));
        assert_eq!(f.leading_coeff(), Some(&rat(1, m as i64 + 1)));
        assert_eq!(f.constant_term(), rat(0, 1));
    }
}

#[test]
fn linearity_of_solutions() {
    let g: opcalc::Polynomial = "1/2*x".parse().unwrap();
    assert_eq!(
        solve_difference(&g).particular.to_string(),
        "1/4*x^2 - 1/4*x"
    );
}
