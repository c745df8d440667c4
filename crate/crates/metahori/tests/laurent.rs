use metahori::{GaussRing, GaussValues, LaurentPoly, Permutation};
use num::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;

const N: u32 = 3;

fn poly(r: usize, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, r), -3i64..=3, 0i32..=1, 0i64..3), 0..=max_terms).prop_map(
        move |terms| {
            let ring = GaussRing::new(N);
            let mut acc = LaurentPoly::zero(N, r);
            for (lambda, c, k, a) in terms {
                let coeff = &ring.int(c).shift_v(k) * &ring.gauss_symbol(a);
                acc += &LaurentPoly::monomial(lambda, coeff);
            }
            acc
        },
    )
}

/// Distinct exponents with monomial (hence invertible) coefficients.
fn unit_poly(r: usize, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::btree_map(prop::collection::vec(-3i32..=3, r), (prop::sample::select(vec![-2i64, -1, 1, 3]), -1i32..=1, 0i64..3), 1..=max_terms)
        .prop_map(move |terms| {
            let ring = GaussRing::new(N);
            let mut acc = LaurentPoly::zero(N, r);
            for (lambda, (c, k, a)) in terms {
                acc += &LaurentPoly::monomial(lambda, &ring.int(c).shift_v(k) * &ring.gauss_symbol(a));
            }
            acc
        })
}

fn perm(r: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=r).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_one_line(v).unwrap())
}

fn point(r: usize, seed: u64) -> (Vec<BigRational>, BigRational, GaussValues) {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let vals = GaussValues::random(N, &mut rng);
    let zs = (0..r).map(|k| BigRational::new((k as i64 + 2).into(), (k as i64 + 5).into())).collect();
    (zs, vals.v.clone(), vals)
}

proptest! {
    #[test]
    fn ring_axioms((p, q, s) in (1usize..=3).prop_flat_map(|r| (poly(r, 8), poly(r, 8), poly(r, 8)))) {
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
        for (_, c) in p.terms() {
            prop_assert!(!c.is_zero());
        }
    }

    #[test]
    fn exact_division_recovers_factor((p, q) in (1usize..=3).prop_flat_map(|r| (poly(r, 5), unit_poly(r, 4)))) {
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p.clone());
        let bumped = &(&p * &q) + &LaurentPoly::monomial(vec![9; p.rank()], GaussRing::new(N).one());
        prop_assert!(bumped.exact_div(&q).is_err() || q.num_terms() == 1);
    }

    #[test]
    fn weyl_action_is_a_homomorphism((p, q, u, w) in (1usize..=4).prop_flat_map(|r| (poly(r, 5), poly(r, 5), perm(r), perm(r)))) {
        prop_assert_eq!((&p * &q).weyl_act(&w), &p.weyl_act(&w) * &q.weyl_act(&w));
        prop_assert_eq!((&p + &q).weyl_act(&w), &p.weyl_act(&w) + &q.weyl_act(&w));
        prop_assert_eq!(p.weyl_act(&u.compose(&w)), p.weyl_act(&w).weyl_act(&u));
    }

    #[test]
    fn specialization_commutes_with_permutation((p, w) in (1usize..=4).prop_flat_map(|r| (poly(r, 6), perm(r))), seed in any::<u64>()) {
        let r = p.rank();
        let (zs, v, vals) = point(r, seed);
        let permuted: Vec<BigRational> = (1..=r).map(|k| zs[w.apply(k) - 1].clone()).collect();
        prop_assert_eq!(
            p.weyl_act(&w).specialize_z(&zs, &v, &vals).unwrap(),
            p.specialize_z(&permuted, &v, &vals).unwrap()
        );
    }

    #[test]
    fn text_and_json_round_trip(p in (1usize..=3).prop_flat_map(|r| poly(r, 6))) {
        prop_assert_eq!(LaurentPoly::parse(N, p.rank(), &p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }
}
