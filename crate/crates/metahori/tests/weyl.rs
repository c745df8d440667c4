use metahori::laurent::rho;
use metahori::weyl::{almost_dominant_decompose, bruhat_path, is_almost_dominant, random_path, replay_path};
use metahori::Permutation;
use proptest::prelude::*;
use rand::SeedableRng;

fn perm(r: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=r).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_one_line(v).unwrap())
}

fn mus(r: usize, max: i32) -> Vec<Vec<i32>> {
    (0..r).fold(vec![vec![]], |acc, _| {
        acc.into_iter().flat_map(|m| (0..=max).map(move |x| [m.clone(), vec![x]].concat())).collect()
    })
}

#[test]
fn decomposition_matches_exhaustive_search() {
    for r in 1..=4 {
        let rho = rho(r);
        for mu in mus(r, 4) {
            let found: Vec<(Permutation, Vec<i32>)> = Permutation::all(r)
                .into_iter()
                .map(|w| {
                    let lambda: Vec<i32> = w.act_on_weight(&mu).iter().zip(&rho).map(|(a, b)| a - b).collect();
                    (w, lambda)
                })
                .filter(|(w, lambda)| is_almost_dominant(lambda, w))
                .collect();
            assert_eq!(found.len(), 1, "mu={mu:?}: {} candidates", found.len());
            let pair = almost_dominant_decompose(&mu);
            assert_eq!((pair.w_prime.clone(), pair.lambda.clone()), found[0], "mu={mu:?}");
            let shifted: Vec<i32> = pair.lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
            assert!(shifted.windows(2).all(|p| p[0] >= p[1]), "mu={mu:?}");
        }
    }
}

#[test]
fn group_sizes() {
    for r in 1..=5 {
        let all = Permutation::all(r);
        assert_eq!(all.len(), (1..=r).product::<usize>());
        assert_eq!(all.iter().filter(|w| w.length() == r * (r - 1) / 2).count(), 1);
    }
}

proptest! {
    #[test]
    fn composition_and_inverse((u, w, x) in (1usize..=5).prop_flat_map(|r| (perm(r), perm(r), perm(r)))) {
        let e = Permutation::identity(u.rank());
        prop_assert_eq!(u.compose(&u.inverse()), e.clone());
        prop_assert_eq!(u.compose(&w).compose(&x), u.compose(&w.compose(&x)));
        prop_assert_eq!(u.length(), u.inverse().length());
        let lu = u.length() as i64;
        let luw = u.compose(&w).length() as i64;
        prop_assert!((luw - lu).abs() <= w.length() as i64);
    }

    #[test]
    fn reduced_words(w in (1usize..=5).prop_flat_map(perm), seed in any::<u64>()) {
        let r = w.rank();
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(r, &word).unwrap(), w.clone());
        let other = w.random_reduced_word(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(other.len(), w.length());
        prop_assert_eq!(Permutation::from_word(r, &other).unwrap(), w.clone());
        prop_assert_eq!(Permutation::parse(r, &w.word_string()).unwrap(), w.clone());
        prop_assert_eq!(Permutation::parse(r, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn paths_replay((a, b) in (1usize..=5).prop_flat_map(|r| (perm(r), perm(r))), extra in 0usize..3, seed in any::<u64>()) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for path in [bruhat_path(&a, &b), random_path(&a, &b, extra, &mut rng)] {
            prop_assert_eq!(replay_path(&a, &path), b.clone());
            let mut cur = a.clone();
            for step in &path {
                let next = cur.mul_simple_left(step.index);
                prop_assert_eq!(step.ascent, next.length() > cur.length());
                cur = next;
            }
        }
    }
}
