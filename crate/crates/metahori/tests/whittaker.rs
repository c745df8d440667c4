use metahori::weyl::almost_dominant_decompose;
use metahori::whittaker::{self, theta_of, WhittakerVector};
use metahori::{Error, GaussRing, LaurentPoly, Permutation};
use proptest::prelude::*;

/// A random vector satisfying the grading: each monomial sits in the
/// component its exponent determines.
fn graded(n: u32, r: usize) -> impl Strategy<Value = WhittakerVector> {
    prop::collection::vec((prop::collection::vec(-4i32..=4, r), -3i64..=3, 0i64..n as i64), 0..6).prop_map(move |terms| {
        let ring = GaussRing::new(n);
        let mut f = WhittakerVector::zero(n, r);
        for (lambda, c, a) in terms {
            let theta = theta_of(n, &lambda);
            f.add_to(theta, &LaurentPoly::monomial(lambda, &ring.int(c) * &ring.gauss_symbol(a)));
        }
        f
    })
}

fn case() -> impl Strategy<Value = (usize, WhittakerVector)> {
    (1u32..=3, 2usize..=3).prop_flat_map(|(n, r)| (1..r, graded(n, r)))
}

#[test]
fn ungraded_input_is_rejected() {
    let f = WhittakerVector::single(vec![1, 0], &LaurentPoly::z_pow(2, vec![1, 0]));
    assert!(f.check_grading().is_err());
    assert!(matches!(whittaker::apply_t(1, &f), Err(Error::GradingViolation(_))));
}

#[test]
fn non_almost_dominant_arguments() {
    let e = Permutation::identity(2);
    assert!(matches!(whittaker::base_case(2, &[-1, 0], &e), Err(Error::NotAlmostDominant(_))));
    let phi = whittaker::evaluate_vector(2, &Permutation::simple(2, 1), &[-1, 0], &e).unwrap();
    assert!(phi.is_zero());
}

#[test]
fn ground_state_values() {
    for mu in [vec![2, 0], vec![0, 3], vec![1, 1]] {
        let pair = almost_dominant_decompose(&mu);
        let phi = whittaker::evaluate_vector(3, &pair.w_prime, &pair.lambda, &pair.w_prime).unwrap();
        assert_eq!(phi.components().count(), 1, "mu={mu:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn inverse_round_trip((i, f) in case()) {
        let t = whittaker::apply_t(i, &f).unwrap();
        prop_assert!(t.check_grading().is_ok());
        prop_assert_eq!(&whittaker::apply_t_inv(i, &t).unwrap(), &f);
        prop_assert_eq!(&whittaker::apply_t(i, &whittaker::apply_t_inv(i, &f).unwrap()).unwrap(), &f);
    }

    #[test]
    fn closed_form_matches_rational_form((i, f) in case()) {
        prop_assert_eq!(whittaker::apply_t(i, &f).unwrap(), whittaker::apply_t_verbatim(i, &f).unwrap());
    }

    #[test]
    fn quadratic_relation((i, f) in case()) {
        prop_assert!(whittaker::quadratic_relation(i, &f).unwrap().is_zero());
    }

    #[test]
    fn operators_are_linear((i, f, g) in (1u32..=3, 2usize..=3).prop_flat_map(|(n, r)| (1..r, graded(n, r), graded(n, r)))) {
        let lhs = whittaker::apply_t(i, &(&f + &g)).unwrap();
        let rhs = &whittaker::apply_t(i, &f).unwrap() + &whittaker::apply_t(i, &g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(f in (1u32..=3, 1usize..=3).prop_flat_map(|(n, r)| graded(n, r))) {
        prop_assert_eq!(WhittakerVector::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn example_state_matches_whittaker_value() {
    let w = Permutation::parse(3, "s1 s2").unwrap();
    let rep = metahori::verify::main_theorem_case(3, &[4, 2, 0], &w);
    assert!(rep.passed(), "{:?}", rep.failures);
    assert_eq!(rep.checked, 27);
}
