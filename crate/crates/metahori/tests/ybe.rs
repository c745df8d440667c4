use metahori::lattice::{SystemSpec, Variant};
use metahori::ybe::{self, RContext};
use metahori::Permutation;
use rand::{Rng, SeedableRng};

#[test]
fn fused_r_is_the_extreme_monochrome_r() {
    for n in 1..=4 {
        for r in 1..=4 {
            let rep = ybe::verify_fused_r_specialization(n, r);
            assert!(rep.passed(), "n={n} r={r}: {:?}", rep.failures.first());
        }
    }
}

#[test]
fn r_weights_conserve_colors() {
    for n in 1..=3 {
        for r in 1..=3 {
            assert!(ybe::verify_conservation(n, r).passed(), "n={n} r={r}");
        }
    }
}

#[test]
fn contexts_cycle_through_every_column() {
    for n in 1..=3 {
        for r in 1..=3usize {
            let start = RContext::fused(n, r);
            let mut ctx = start;
            for _ in 0..n as usize * r {
                ctx = ctx.successor();
            }
            assert_eq!(ctx, start);
        }
    }
}

#[test]
fn small_yang_baxter_equations() {
    for (n, r) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        assert!(ybe::verify_aux_ybe(n, r).passed(), "aux n={n} r={r}");
        assert!(ybe::verify_rrr(n, r).passed(), "rrr n={n} r={r}");
    }
    assert!(ybe::verify_fused_rtt(1, 2).passed());
    assert!(ybe::verify_aux_ybe_numeric(3, 3, 5, 2).passed());
}

#[test]
fn recursion_follows_from_r_matrix() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10 {
        let n = rng.gen_range(1..=3u32);
        let r = rng.gen_range(2..=3usize);
        let mu: Vec<i32> = (0..r).map(|_| rng.gen_range(0..=3)).collect();
        let theta: Vec<u32> = (0..r).map(|_| rng.gen_range(0..n)).collect();
        let ws = Permutation::all(r);
        let w = ws[rng.gen_range(0..ws.len())].clone();
        let i = rng.gen_range(1..r);
        let s = SystemSpec::new(n, mu, theta, w).unwrap().with_variant(Variant::ColorFused);
        let (l, rr) = ybe::recursion_via_r_matrix(&s, i);
        assert_eq!(l, rr, "{s} i={i}");
        let (l, rr) = metahori::lattice::recursion_sides(&s, i);
        assert_eq!(l, rr, "{s} i={i}");
    }
}
