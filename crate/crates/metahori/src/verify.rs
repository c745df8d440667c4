//! Verification sweeps over boundary data, one per suite.
//!
//! Every sweep fans out over independent cases with rayon and assembles its
//! [`Report`] in canonical case order, so output is identical for any number
//! of worker threads.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{rho, LaurentPoly};
use crate::lattice::{partition_function, partition_function_by_states, recursion_sides_with, SystemSpec, Variant};
use crate::report::{Failure, Report};
use crate::weyl::{almost_dominant_decompose, bruhat_path, random_path, Permutation};
use crate::whittaker::{self, all_thetas, box_exponents, graded_basis, WhittakerVector};
use crate::ybe;

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    MainTheorem,
    YbeAux,
    YbeRtt,
    YbeRrr,
    Hecke,
    Fusion,
    GroundState,
    Recursion,
    TauUnitarity,
    Averaged,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::MainTheorem,
        Suite::YbeAux,
        Suite::YbeRtt,
        Suite::YbeRrr,
        Suite::Hecke,
        Suite::Fusion,
        Suite::GroundState,
        Suite::Recursion,
        Suite::TauUnitarity,
        Suite::Averaged,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::YbeAux => "ybe-aux",
            Suite::YbeRtt => "ybe-rtt",
            Suite::YbeRrr => "ybe-rrr",
            Suite::Hecke => "hecke",
            Suite::Fusion => "fusion",
            Suite::GroundState => "ground-state",
            Suite::Recursion => "recursion",
            Suite::TauUnitarity => "tau-unitarity",
            Suite::Averaged => "averaged",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Sweep bounds: every `n <= max_n`, `r <= max_r` and `mu` with parts
/// `<= max_mu`; `samples` randomized numeric checks seeded by `seed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: u32,
    pub max_r: usize,
    pub max_mu: i32,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_n: 2, max_r: 2, max_mu: 2, samples: 0, seed: 1 }
    }
}

/// Run one suite within the given bounds.
pub fn run(suite: Suite, b: &Bounds) -> Report {
    let grid = |min_r: usize| -> Vec<(u32, usize)> {
        (1..=b.max_n).flat_map(|n| (min_r..=b.max_r).map(move |r| (n, r))).collect()
    };
    match suite {
        Suite::MainTheorem => main_theorem(&grid(1), b.max_mu),
        Suite::GroundState => ground_state(&grid(1), b.max_mu),
        Suite::Fusion => fusion(&grid(1), b.max_mu),
        Suite::Recursion => recursion(&grid(2), b.max_mu),
        Suite::YbeAux => {
            let mut rep: Report = grid(1).into_iter().map(|(n, r)| ybe::verify_aux_ybe(n, r)).collect();
            if b.samples > 0 {
                rep.merge(ybe::verify_aux_ybe_numeric(b.max_n, b.max_r, b.samples, b.seed));
            }
            rep
        }
        Suite::YbeRtt => {
            let cases: Vec<_> = grid(1).into_iter().filter(|&(n, r)| n as usize * r <= 6).collect();
            fused_rtt(&cases)
        }
        Suite::YbeRrr => {
            let mut rep: Report = grid(1).into_iter().map(|(n, r)| ybe::verify_rrr(n, r)).collect();
            if b.samples > 0 {
                rep.merge(ybe::verify_rrr_numeric(b.max_n, b.max_r, b.samples, b.seed));
            }
            rep
        }
        Suite::Hecke => hecke(&grid(2), b.seed),
        Suite::TauUnitarity => tau_unitarity(&grid(2)),
        Suite::Averaged => averaged(&grid(2)),
    }
}

/// All `mu` with `r` parts in `0..=max_mu`, lexicographically.
pub fn all_mus(r: usize, max_mu: i32) -> Vec<Vec<i32>> {
    box_exponents(r, max_mu)
        .into_iter()
        .filter(|m| m.iter().all(|&x| x >= 0))
        .collect()
}

fn spec(n: u32, mu: &[i32], theta: &[u32], w: &Permutation) -> SystemSpec {
    SystemSpec::new(n, mu.to_vec(), theta.to_vec(), w.clone()).expect("valid sweep spec")
}

fn fmt_case(n: u32, mu: &[i32], theta: &[u32], w: &Permutation) -> String {
    format!("n={n} mu={mu:?} theta={theta:?} w={}", w.word_string())
}

fn error_failure(case: String, e: &Error) -> Report {
    Report { checked: 1, failures: vec![Failure::new(case, e.to_string(), "")] }
}

fn collect_par<T: Sync, F: Fn(&T) -> Report + Sync + Send>(items: &[T], f: F) -> Report {
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().collect()
}

/// The ground-state law at `w = w'`: `Z = v^{l(w')} z^{λ+ρ}` when
/// `theta ≡ λ + ρ (mod n)`, else 0.
pub fn ground_state(cases: &[(u32, usize)], max_mu: i32) -> Report {
    let items: Vec<(u32, Vec<i32>)> =
        cases.iter().flat_map(|&(n, r)| all_mus(r, max_mu).into_iter().map(move |m| (n, m))).collect();
    collect_par(&items, |(n, mu)| {
        let n = *n;
        let r = mu.len();
        let pair = almost_dominant_decompose(mu);
        let shifted: Vec<i32> = pair.lambda.iter().zip(rho(r)).map(|(l, p)| l + p).collect();
        let ring = crate::coefficients::GaussRing::new(n);
        let mut rep = Report::default();
        for theta in all_thetas(n, r) {
            let matches = shifted.iter().zip(&theta).all(|(&x, &t)| x.rem_euclid(n as i32) == t as i32);
            let expected = if matches {
                LaurentPoly::monomial(shifted.clone(), ring.v_pow(pair.w_prime.length() as i32))
            } else {
                LaurentPoly::zero(n, r)
            };
            let z = partition_function(&spec(n, mu, &theta, &pair.w_prime));
            rep.check(|| fmt_case(n, mu, &theta, &pair.w_prime), &z, &expected);
        }
        rep
    })
}

/// `Z(S_{mu,theta,w}) = z^ρ phi_{theta,w}(z; ϖ^{-λ} w')` for every `mu`,
/// `theta` and `w`, with partition functions from explicit state enumeration.
pub fn main_theorem(cases: &[(u32, usize)], max_mu: i32) -> Report {
    let items: Vec<(u32, Vec<i32>, Permutation)> = cases
        .iter()
        .flat_map(|&(n, r)| {
            all_mus(r, max_mu)
                .into_iter()
                .flat_map(move |m| Permutation::all(r).into_iter().map(move |w| (n, m.clone(), w)))
        })
        .collect();
    collect_par(&items, |(n, mu, w)| main_theorem_case(*n, mu, w))
}

/// One `(mu, w)` of the main theorem, across all `theta`.
pub fn main_theorem_case(n: u32, mu: &[i32], w: &Permutation) -> Report {
    let r = mu.len();
    let pair = almost_dominant_decompose(mu);
    let phi = match whittaker::evaluate_vector(n, w, &pair.lambda, &pair.w_prime) {
        Ok(p) => p,
        Err(e) => return error_failure(format!("n={n} mu={mu:?} w={}", w.word_string()), &e),
    };
    let mut rep = Report::default();
    for theta in all_thetas(n, r) {
        let z = partition_function_by_states(&spec(n, mu, &theta, w));
        let rhs = phi.component(&theta).shift(&rho(r));
        rep.check(|| fmt_case(n, mu, &theta, w), &z, &rhs);
    }
    rep
}

/// Partition functions agree across the three models and under `N -> N+1`.
pub fn fusion(cases: &[(u32, usize)], max_mu: i32) -> Report {
    let items: Vec<(u32, Vec<i32>, Vec<u32>)> = cases
        .iter()
        .flat_map(|&(n, r)| {
            all_mus(r, max_mu)
                .into_iter()
                .flat_map(move |m| all_thetas(n, r).into_iter().map(move |t| (n, m.clone(), t)))
        })
        .collect();
    collect_par(&items, |(n, mu, theta)| {
        let mut rep = Report::default();
        for w in Permutation::all(mu.len()) {
            let s = spec(*n, mu, theta, &w);
            let z = partition_function(&s);
            for v in [Variant::ColorFused, Variant::FullyFused] {
                let other = partition_function(&s.clone().with_variant(v));
                rep.check(|| format!("{} [{}]", fmt_case(*n, mu, theta, &w), v.name()), &other, &z);
            }
            let wider = s.clone().with_blocks(s.blocks + 1).expect("more blocks");
            rep.check(|| format!("{} [N+1]", fmt_case(*n, mu, theta, &w)), &partition_function(&wider), &z);
        }
        rep
    })
}

/// The lattice recursion, its rederivation through R-matrix weights, and the
/// Whittaker functional equation, for every `(mu, theta, w, i)`.
pub fn recursion(cases: &[(u32, usize)], max_mu: i32) -> Report {
    let items: Vec<(u32, Vec<i32>)> =
        cases.iter().flat_map(|&(n, r)| all_mus(r, max_mu).into_iter().map(move |m| (n, m))).collect();
    collect_par(&items, |(n, mu)| recursion_case(*n, mu))
}

fn recursion_case(n: u32, mu: &[i32]) -> Report {
    let r = mu.len();
    let thetas = all_thetas(n, r);
    let ws = Permutation::all(r);
    let mut table: HashMap<(Vec<u32>, Permutation), LaurentPoly> = HashMap::new();
    for t in &thetas {
        for w in &ws {
            table.insert((t.clone(), w.clone()), partition_function(&spec(n, mu, t, w)));
        }
    }
    let z_of = |s: &SystemSpec| table[&(s.theta.clone(), s.w.clone())].clone();
    let pair = almost_dominant_decompose(mu);
    let mut rep = Report::default();
    for t in &thetas {
        for w in &ws {
            let s = spec(n, mu, t, w);
            for i in 1..r {
                let case = || format!("{} i={i}", fmt_case(n, mu, t, w));
                let (l, rr) = recursion_sides_with(&s, i, z_of);
                rep.check(|| format!("{} [lattice]", case()), &l, &rr);
                let (l, rr) = ybe::recursion_via_r_matrix_with(&s, i, z_of);
                rep.check(|| format!("{} [R-matrix]", case()), &l, &rr);
                match whittaker::functional_equation_sides(n, t, w, &pair.lambda, &pair.w_prime, i) {
                    Ok((l, rr)) => rep.check(|| format!("{} [functional]", case()), &l, &rr),
                    Err(e) => rep.merge(error_failure(case(), &e)),
                }
            }
        }
    }
    rep
}

/// Fused RTT relation, fused/monochrome R agreement and conservation.
pub fn fused_rtt(cases: &[(u32, usize)]) -> Report {
    cases
        .iter()
        .flat_map(|&(n, r)| {
            [ybe::verify_fused_rtt(n, r), ybe::verify_fused_r_specialization(n, r), ybe::verify_conservation(n, r)]
        })
        .collect()
}

fn check_vec(rep: &mut Report, case: impl FnOnce() -> String, res: Result<(WhittakerVector, WhittakerVector)>) {
    match res {
        Ok((a, b)) => rep.check(case, &a, &b),
        Err(e) => rep.merge(error_failure(case(), &e)),
    }
}

/// Quadratic and braid relations, the Bernstein relation, agreement with the
/// rational forms of `T_i^{±1}`, and path independence of evaluation.
pub fn hecke(cases: &[(u32, usize)], seed: u64) -> Report {
    collect_par(cases, |&(n, r)| {
        let mut rep = Report::default();
        let zero = WhittakerVector::zero(n, r);
        let basis = graded_basis(n, r, n as i32);
        for f in &basis {
            let label = || format!("n={n} r={r} f={}", f.to_string().replace('\n', "; "));
            for i in 1..r {
                check_vec(&mut rep, || format!("{} i={i} [quadratic]", label()), whittaker::quadratic_relation(i, f).map(|q| (q, zero.clone())));
                check_vec(
                    &mut rep,
                    || format!("{} i={i} [rational T]", label()),
                    whittaker::apply_t(i, f).and_then(|a| Ok((a, whittaker::apply_t_verbatim(i, f)?))),
                );
                check_vec(
                    &mut rep,
                    || format!("{} i={i} [rational T^-1]", label()),
                    whittaker::apply_t_inv(i, f).and_then(|a| Ok((a, whittaker::apply_t_inv_verbatim(i, f)?))),
                );
                check_vec(
                    &mut rep,
                    || format!("{} i={i} [inverse]", label()),
                    whittaker::apply_t(i, f).and_then(|t| Ok((whittaker::apply_t_inv(i, &t)?, f.clone()))),
                );
                for j in 1..=r {
                    for sign in [1, -1] {
                        let mut lambda = vec![0; r];
                        lambda[j - 1] = sign * n as i32;
                        check_vec(
                            &mut rep,
                            || format!("{} i={i} lambda={lambda:?} [bernstein]", label()),
                            whittaker::bernstein_sides(i, &lambda, f),
                        );
                    }
                }
                if i + 1 < r {
                    check_vec(&mut rep, || format!("{} i={i} [braid]", label()), whittaker::braid_sides(i, i + 1, f));
                }
                for j in i + 2..r {
                    check_vec(
                        &mut rep,
                        || format!("{} i={i} j={j} [commute]", label()),
                        whittaker::apply_t(i, f)
                            .and_then(|a| whittaker::apply_t(j, &a))
                            .and_then(|a| Ok((a, whittaker::apply_t(i, &whittaker::apply_t(j, f)?)?))),
                    );
                }
            }
        }
        rep.merge(path_independence(n, r, seed));
        rep
    })
}

/// Evaluation along three random paths agrees with the reduced path.
pub fn path_independence(n: u32, r: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(n) << 32) ^ r as u64);
    let ws = Permutation::all(r);
    let mut rep = Report::default();
    for _ in 0..8 {
        let w = ws[rng.gen_range(0..ws.len())].clone();
        let mu: Vec<i32> = (0..r).map(|_| rng.gen_range(0..=3)).collect();
        let pair = almost_dominant_decompose(&mu);
        let reference = whittaker::evaluate_along(n, &pair.lambda, &pair.w_prime, &bruhat_path(&pair.w_prime, &w));
        for extra in [0, 1, 2] {
            let path = random_path(&pair.w_prime, &w, extra, &mut rng);
            let other = whittaker::evaluate_along(n, &pair.lambda, &pair.w_prime, &path);
            let case = || format!("n={n} mu={mu:?} w={} extra={extra} [path]", w.word_string());
            match (&reference, other) {
                (Ok(a), Ok(b)) => rep.check(case, a, &b),
                (Err(e), _) => rep.merge(error_failure(case(), e)),
                (_, Err(e)) => rep.merge(error_failure(case(), &e)),
            }
        }
    }
    rep
}

/// `Σ_ν τ_{μ,ν}(s_i z) τ_{ν,λ}(z) = c_{α_i} c_{-α_i} δ_{μ,λ}`.
pub fn tau_unitarity(cases: &[(u32, usize)]) -> Report {
    collect_par(cases, |&(n, r)| (1..r).map(|i| whittaker::tau_unitarity_check(n, r, i)).collect())
}

/// The averaged operator equals the component sum of the vector operator on
/// lifted monomials; the Chinta–Gunnells action is an involution.
pub fn averaged(cases: &[(u32, usize)]) -> Report {
    collect_par(cases, |&(n, r)| {
        let ring = crate::coefficients::GaussRing::new(n);
        let mut rep = Report::default();
        for lambda in box_exponents(r, n as i32) {
            let p = LaurentPoly::monomial(lambda.clone(), ring.one());
            for i in 1..r {
                let case = || format!("n={n} r={r} lambda={lambda:?} i={i}");
                let vector = whittaker::apply_t(i, &WhittakerVector::lift(&p)).map(|v| v.component_sum());
                match (whittaker::averaged_t(i, &p), vector) {
                    (Ok(a), Ok(b)) => rep.check(|| format!("{} [averaged]", case()), &a, &b),
                    (Err(e), _) | (_, Err(e)) => rep.merge(error_failure(case(), &e)),
                }
                match whittaker::cg_star_rational(i, &whittaker::cg_star(i, &p)) {
                    Ok(q) => rep.check(
                        || format!("{} [involution]", case()),
                        &q,
                        &crate::laurent::RationalLaurent::from_poly(p.clone()),
                    ),
                    Err(e) => rep.merge(error_failure(case(), &e)),
                }
            }
        }
        rep
    })
}

/// Size the global rayon pool from `METAHORI_WORKERS`, if set.
pub fn init_workers() -> Result<()> {
    if let Ok(v) = std::env::var("METAHORI_WORKERS") {
        let k: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("METAHORI_WORKERS must be a positive integer, got {v:?}")))?;
        if k == 0 {
            return Err(Error::Parse("METAHORI_WORKERS must be positive".into()));
        }
        // A pool that is already initialized keeps its size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    Ok(())
}
