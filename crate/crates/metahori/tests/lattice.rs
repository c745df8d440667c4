use std::collections::HashSet;

use metahori::lattice::{enumerate_states, partition_function, partition_function_by_states, state_weight, SystemSpec, Variant};
use metahori::whittaker::all_thetas;
use metahori::{LaurentPoly, Permutation};
use proptest::prelude::*;

fn spec(n: u32, mu: &[i32], theta: &[u32], w: &Permutation) -> SystemSpec {
    SystemSpec::new(n, mu.to_vec(), theta.to_vec(), w.clone()).unwrap()
}

fn spec_strategy() -> impl Strategy<Value = SystemSpec> {
    (1u32..=3, 1usize..=3).prop_flat_map(|(n, r)| {
        (
            Just(n),
            prop::collection::vec(0i32..=3, r),
            prop::collection::vec(0u32..n, r),
            Just((1..=r).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(|(n, mu, theta, w)| spec(n, &mu, &theta, &Permutation::from_one_line(w).unwrap()))
    })
}

#[test]
fn states_are_determined_by_their_colored_edges() {
    for (n, r) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
        for mu in metahori::verify::all_mus(r, 2) {
            for theta in all_thetas(n, r) {
                for w in Permutation::all(r) {
                    // Fully-fused verticals carry (color, scolor) pairs, so there the
                    // colored paths leave the scolor pairing free.
                    for variant in [Variant::Monochrome, Variant::ColorFused] {
                        let s = spec(n, &mu, &theta, &w).with_variant(variant);
                        let states = enumerate_states(&s);
                        let colors: HashSet<_> = states.iter().map(|st| st.color_projection()).collect();
                        assert_eq!(colors.len(), states.len(), "{s}");
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let s = spec(3, &[4, 2, 0], &[1, 0, 2], &Permutation::parse(3, "s1 s2").unwrap());
    let a: Vec<String> = enumerate_states(&s).iter().map(|st| st.dump()).collect();
    let b: Vec<String> = enumerate_states(&s).iter().map(|st| st.dump()).collect();
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn empty_systems_have_zero_partition_function() {
    let s = spec(2, &[2, 3, 0], &[0, 0, 0], &Permutation::parse(3, "s1").unwrap());
    assert!(enumerate_states(&s).is_empty());
    assert_eq!(partition_function(&s), LaurentPoly::zero(2, 3));
}

#[test]
fn invalid_specs_are_rejected() {
    let w = Permutation::identity(2);
    assert!(SystemSpec::new(2, vec![1, -1], vec![0, 0], w.clone()).is_err());
    assert!(SystemSpec::new(2, vec![1, 0], vec![0, 2], w.clone()).is_err());
    assert!(SystemSpec::new(2, vec![1, 0, 0], vec![0, 0], w.clone()).is_err());
    assert!(spec(2, &[3, 0], &[0, 0], &w).with_blocks(1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn extra_blocks_do_not_change_z(s in spec_strategy(), extra in 1usize..=2) {
        let z = partition_function(&s);
        let wider = s.clone().with_blocks(s.blocks + extra).unwrap();
        prop_assert_eq!(partition_function(&wider), z);
    }

    #[test]
    fn variants_agree(s in spec_strategy()) {
        let z = partition_function(&s);
        prop_assert_eq!(&partition_function_by_states(&s), &z);
        for v in Variant::ALL {
            let other = s.clone().with_variant(v);
            prop_assert_eq!(&partition_function(&other), &z);
            let summed = enumerate_states(&other).iter().fold(LaurentPoly::zero(s.n, s.r), |acc, st| &acc + &state_weight(&other, st));
            prop_assert_eq!(&summed, &z);
        }
    }
}
