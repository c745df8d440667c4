use metahori::{GaussElem, GaussRing, GaussValues};
use num::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;

fn elem(n: u32) -> impl Strategy<Value = GaussElem> {
    prop::collection::vec((-4i64..=4, 1i64..=3, -2i32..=2, prop::collection::vec(0i64..n as i64, 0..3)), 0..5).prop_map(
        move |terms| {
            let ring = GaussRing::new(n);
            let mut acc = ring.zero();
            for (p, q, k, gs) in terms {
                let mut t = ring.rational(BigRational::new(p.into(), q.into())).shift_v(k);
                for a in gs {
                    t = &t * &ring.gauss_symbol(a);
                }
                acc += &t;
            }
            acc
        },
    )
}

fn values(n: u32, seed: u64) -> GaussValues {
    GaussValues::random(n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
}

#[test]
fn opposite_gauss_sums_multiply_to_v() {
    for n in 1..=8 {
        let ring = GaussRing::new(n);
        for a in 1..n as i64 {
            assert_eq!(&ring.gauss_symbol(a) * &ring.gauss_symbol(n as i64 - a), ring.v(), "n={n} a={a}");
        }
        assert_eq!(ring.gauss_symbol(0), -ring.v());
    }
}

#[test]
fn parse_rejects_garbage() {
    assert!(GaussElem::parse(3, "g[1]***v").is_err());
    assert!(GaussElem::parse(3, "1 + g[").is_err());
}

proptest! {
    #[test]
    fn products_of_generators_are_normal(n in 1u32..=6, gens in prop::collection::vec((0i64..8, any::<bool>()), 1..=6)) {
        let ring = GaussRing::new(n);
        let mut x = ring.one();
        for (a, use_v) in gens {
            let g = if use_v { ring.v() } else { ring.gauss_symbol(a) };
            x = &x * &g;
        }
        for (m, _) in x.terms() {
            prop_assert!(m.is_normal(n));
        }
        let again = &x * &ring.one();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(GaussElem::parse(n, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn ring_axioms((x, y, z) in (1u32..=5).prop_flat_map(|n| (elem(n), elem(n), elem(n)))) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn specialization_is_a_homomorphism((n, x, y) in (1u32..=5).prop_flat_map(|n| (Just(n), elem(n), elem(n))), seed in any::<u64>()) {
        let vals = values(n, seed);
        let s = |e: &GaussElem| e.specialize_numeric(&vals.v, &vals).unwrap();
        prop_assert_eq!(s(&(&x * &y)), s(&x) * s(&y));
        prop_assert_eq!(s(&(&x + &y)), s(&x) + s(&y));
    }

    #[test]
    fn inverse_of_monomials(n in 1u32..=6, a in 0i64..6, k in -3i32..=3) {
        let ring = GaussRing::new(n);
        let x = ring.gauss_symbol(a).shift_v(k);
        prop_assert!((&x * &x.invert().unwrap()).is_one());
    }

    #[test]
    fn json_round_trip(x in (1u32..=5).prop_flat_map(elem)) {
        prop_assert_eq!(GaussElem::from_json(&x.to_json()).unwrap(), x);
    }
}
