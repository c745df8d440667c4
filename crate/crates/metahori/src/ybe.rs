//! R-matrices and Yang–Baxter verifiers.
//!
//! An R-vertex has four horizontal edges: bottom-left, top-left, top-right
//! and bottom-right. In `R_{z_a, z_b}` the line entering bottom-left carries
//! `z_a` and leaves top-right; the line entering top-left carries `z_b`.
//!
//! All verifiers compose sparse transition tables, so the same code checks
//! symbolic identities (weights in [`LaurentPoly`]) and numeric
//! specializations (weights in `BigRational`).

use std::collections::{BTreeMap, HashMap};

use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coefficients::{GaussRing, GaussValues};
use crate::lattice::weights::{fully_fused_transitions, monochrome_transitions};
use crate::lattice::{partition_function, HSpin, SystemSpec};
pub use crate::report::{Failure, Report};
use crate::laurent::LaurentPoly;

/// Which variables of a rank-`rank` polynomial ring play `z_a`, `z_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vars {
    pub rank: usize,
    /// 1-based index of the bottom-left line's parameter.
    pub a: usize,
    /// 1-based index of the top-left line's parameter.
    pub b: usize,
}

impl Vars {
    pub fn pair() -> Self {
        Vars { rank: 2, a: 1, b: 2 }
    }
}

/// Color and scolor labelling the monochrome R-matrix `R^{cw}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RContext {
    pub n: u32,
    pub r: usize,
    pub c: u8,
    pub w: u8,
}

impl RContext {
    /// The successor `(c', w')` in the column order of the grid.
    pub fn successor(&self) -> RContext {
        if (self.c as usize) < self.r {
            RContext { c: self.c + 1, ..*self }
        } else if self.w > 0 {
            RContext { c: 1, w: self.w - 1, ..*self }
        } else {
            RContext { c: 1, w: (self.n - 1) as u8, ..*self }
        }
    }

    /// The context whose R-matrix is the fully-fused one.
    pub fn fused(n: u32, r: usize) -> RContext {
        RContext { n, r, c: 1, w: (n - 1) as u8 }
    }
}

struct Mono {
    n: u32,
    rank: usize,
    a: usize,
    b: usize,
    ring: GaussRing,
}

impl Mono {
    fn new(n: u32, vars: Vars) -> Self {
        Mono { n, rank: vars.rank, a: vars.a, b: vars.b, ring: GaussRing::new(n) }
    }

    /// `coeff * z_a^ea * z_b^eb`.
    fn m(&self, coeff: crate::coefficients::GaussElem, ea: i32, eb: i32) -> LaurentPoly {
        let mut e = vec![0; self.rank];
        e[self.a - 1] += ea;
        e[self.b - 1] += eb;
        LaurentPoly::monomial(e, coeff)
    }

    fn one_minus_v_times(&self, ea: i32, eb: i32) -> LaurentPoly {
        self.m(self.ring.one_minus_v(), ea, eb)
    }

    /// `z_a^n - k z_b^n` style binomials: `ca z_a^n + cb z_b^n`.
    fn binom(&self, ca: crate::coefficients::GaussElem, cb: crate::coefficients::GaussElem) -> LaurentPoly {
        let n = self.n as i32;
        &self.m(ca, n, 0) + &self.m(cb, 0, n)
    }
}

/// Weight of the monochrome R-matrix `R^{cw}_{z_a, z_b}` at the configuration
/// `(bl, tl, tr, br)`; zero outside the table.
pub fn r_weight_mono(ctx: &RContext, vars: Vars, bl: HSpin, tl: HSpin, tr: HSpin, br: HSpin) -> LaurentPoly {
    use HSpin::{Color, Scolor};
    let m = Mono::new(ctx.n, vars);
    let ring = m.ring;
    let n = ctx.n as i32;
    let (c, w) = (ctx.c, i32::from(ctx.w));
    let one = ring.one();
    let v = ring.v();
    let zero = LaurentPoly::zero(ctx.n, vars.rank);
    match (bl, tl, tr, br) {
        (Color(a), Color(a2), Color(a3), Color(a4)) if a == a2 && a == a3 && a == a4 => m.binom(one, -v),
        (Color(a), Color(b), Color(a3), Color(b4)) if a == a3 && b == b4 => {
            // straight through
            if a < b {
                m.binom(v.clone(), -v)
            } else {
                m.binom(one.clone(), -one)
            }
        }
        (Color(a), Color(b), Color(b3), Color(a4)) if a == a4 && b == b3 => {
            // the lines bounce
            if a < b {
                if b < c || c <= a {
                    m.one_minus_v_times(n, 0)
                } else {
                    m.one_minus_v_times(n - 1, 1)
                }
            } else if c <= b || c > a {
                m.one_minus_v_times(0, n)
            } else {
                m.one_minus_v_times(1, n - 1)
            }
        }
        (Scolor(x), Scolor(x2), Scolor(x3), Scolor(x4)) if x == x2 && x == x3 && x == x4 => m.binom(-v, one),
        (Scolor(x), Scolor(y), Scolor(x3), Scolor(y4)) if x == x3 && y == y4 => {
            m.binom(ring.gauss_symbol(i64::from(y) - i64::from(x)), -ring.gauss_symbol(i64::from(y) - i64::from(x)))
        }
        (Scolor(x), Scolor(y), Scolor(y3), Scolor(x4)) if x == x4 && y == y3 => {
            let d = i32::from(y) - i32::from(x);
            if y > x {
                m.one_minus_v_times(n - d, d)
            } else {
                m.one_minus_v_times(-d, n + d)
            }
        }
        (Scolor(x), Color(a), Scolor(x3), Color(a4)) if x == x3 && a == a4 => m.binom(v.clone(), -v),
        (Color(a), Scolor(x), Color(a3), Scolor(x4)) if x == x4 && a == a3 => m.binom(one.clone(), -one),
        (Color(a), Scolor(x), Scolor(x3), Color(a4)) if x == x3 && a == a4 => {
            // scolor stays on top, color stays below
            let x = i32::from(x);
            let k = if a < c { x - w } else { x - w - 1 };
            let on_a = if a < c { w <= x } else { w < x };
            if on_a {
                m.one_minus_v_times(n - k, k)
            } else {
                m.one_minus_v_times(-k, n + k)
            }
        }
        (Scolor(x), Color(a), Color(a3), Scolor(x4)) if x == x4 && a == a3 => {
            // scolor stays below, color stays on top
            let x = i32::from(x);
            let k = if a < c { x - w } else { x - w - 1 };
            let on_b = if a < c { w <= x } else { w < x };
            if on_b {
                m.one_minus_v_times(k, n - k)
            } else {
                m.one_minus_v_times(n + k, -k)
            }
        }
        _ => zero,
    }
}

/// Weight of the fully-fused R-matrix, from its own table.
pub fn r_weight_fused(n: u32, vars: Vars, bl: HSpin, tl: HSpin, tr: HSpin, br: HSpin) -> LaurentPoly {
    use HSpin::{Color, Scolor};
    let m = Mono::new(n, vars);
    let ring = m.ring;
    let nn = n as i32;
    let one = ring.one();
    let v = ring.v();
    match (bl, tl, tr, br) {
        (Color(a), Color(a2), Color(a3), Color(a4)) if a == a2 && a == a3 && a == a4 => m.binom(one, -v),
        (Color(a), Color(b), Color(a3), Color(b4)) if a == a3 && b == b4 => {
            if a < b {
                m.binom(v.clone(), -v)
            } else {
                m.binom(one.clone(), -one)
            }
        }
        (Color(a), Color(b), Color(b3), Color(a4)) if a == a4 && b == b3 => {
            if a < b {
                m.one_minus_v_times(nn, 0)
            } else {
                m.one_minus_v_times(0, nn)
            }
        }
        (Scolor(x), Scolor(x2), Scolor(x3), Scolor(x4)) if x == x2 && x == x3 && x == x4 => m.binom(-v, one),
        (Scolor(x), Scolor(y), Scolor(x3), Scolor(y4)) if x == x3 && y == y4 => {
            let g = ring.gauss_symbol(i64::from(y) - i64::from(x));
            m.binom(g.clone(), -g)
        }
        (Scolor(x), Scolor(y), Scolor(y3), Scolor(x4)) if x == x4 && y == y3 => {
            let d = i32::from(y) - i32::from(x);
            if y > x {
                m.one_minus_v_times(nn - d, d)
            } else {
                m.one_minus_v_times(-d, nn + d)
            }
        }
        (Scolor(x), Color(a), Scolor(x3), Color(a4)) if x == x3 && a == a4 => m.binom(v.clone(), -v),
        (Color(a), Scolor(x), Color(a3), Scolor(x4)) if x == x4 && a == a3 => m.binom(one.clone(), -one),
        (Color(a), Scolor(x), Scolor(x3), Color(a4)) if x == x3 && a == a4 => {
            let x = i32::from(x);
            m.one_minus_v_times(nn - x, x)
        }
        (Scolor(x), Color(a), Color(a3), Scolor(x4)) if x == x4 && a == a3 => {
            let x = i32::from(x);
            m.one_minus_v_times(x, nn - x)
        }
        _ => LaurentPoly::zero(n, vars.rank),
    }
}

/// A commutative ring of weights the verifiers can compose in.
pub trait Weight: Clone + PartialEq + Send + Sync {
    fn is_zero_w(&self) -> bool;
    fn add_w(&mut self, other: &Self);
    fn mul_w(&self, other: &Self) -> Self;
    fn describe(&self) -> String;
}

impl Weight for LaurentPoly {
    fn is_zero_w(&self) -> bool {
        self.is_zero()
    }
    fn add_w(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_w(&self, other: &Self) -> Self {
        self * other
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Weight for BigRational {
    fn is_zero_w(&self) -> bool {
        self.is_zero()
    }
    fn add_w(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_w(&self, other: &Self) -> Self {
        self * other
    }
    fn describe(&self) -> String {
        crate::coefficients::fmt_rational(self)
    }
}

/// Sparse R table: `(bl, tl) -> [(tr, br, weight)]`.
pub type RTable<W> = HashMap<(HSpin, HSpin), Vec<(HSpin, HSpin, W)>>;
/// Sparse T table: `(top, left) -> [(bottom, right, weight)]`.
pub type TTable<W> = HashMap<(u64, HSpin), Vec<(u64, HSpin, W)>>;

fn r_table<F>(spins: &[HSpin], f: F) -> RTable<LaurentPoly>
where
    F: Fn(HSpin, HSpin, HSpin, HSpin) -> LaurentPoly,
{
    let mut t = RTable::new();
    for &bl in spins {
        for &tl in spins {
            let mut row = Vec::new();
            for &tr in spins {
                for &br in spins {
                    let wt = f(bl, tl, tr, br);
                    if !wt.is_zero() {
                        row.push((tr, br, wt));
                    }
                }
            }
            t.insert((bl, tl), row);
        }
    }
    t
}

fn t_table_mono(ctx: &RContext, spins: &[HSpin], rank: usize, row: usize) -> TTable<LaurentPoly> {
    let ring = GaussRing::new(ctx.n);
    let mut t = TTable::new();
    for top in 0..2u64 {
        for &left in spins {
            let tr = monochrome_transitions(&ring, ctx.c, ctx.w, top, left)
                .into_iter()
                .map(|tr| (tr.bottom, tr.right, tr.weight.to_poly(rank, row)))
                .collect();
            t.insert((top, left), tr);
        }
    }
    t
}

fn t_table_fused(n: u32, r: usize, spins: &[HSpin], rank: usize, row: usize) -> TTable<LaurentPoly> {
    let ring = GaussRing::new(n);
    let mut t = TTable::new();
    for top in 0..(1u64 << (n as usize * r)) {
        for &left in spins {
            let tr = fully_fused_transitions(&ring, r, top, left)
                .into_iter()
                .map(|tr| (tr.bottom, tr.right, tr.weight.to_poly(rank, row)))
                .collect();
            t.insert((top, left), tr);
        }
    }
    t
}

fn map_r<W: Weight, F: Fn(&LaurentPoly) -> W>(t: &RTable<LaurentPoly>, f: &F) -> RTable<W> {
    t.iter().map(|(k, v)| (*k, v.iter().map(|(a, b, w)| (*a, *b, f(w))).collect())).collect()
}

fn map_t<W: Weight, F: Fn(&LaurentPoly) -> W>(t: &TTable<LaurentPoly>, f: &F) -> TTable<W> {
    t.iter().map(|(k, v)| (*k, v.iter().map(|(a, b, w)| (*a, *b, f(w))).collect())).collect()
}

fn accumulate<K: Ord, W: Weight>(acc: &mut BTreeMap<K, W>, k: K, w: W) {
    match acc.get_mut(&k) {
        Some(prev) => prev.add_w(&w),
        None => {
            acc.insert(k, w);
        }
    }
}

fn prune<K: Ord, W: Weight>(m: BTreeMap<K, W>) -> BTreeMap<K, W> {
    m.into_iter().filter(|(_, w)| !w.is_zero_w()).collect()
}

fn empty<W>() -> Vec<W> {
    Vec::new()
}

/// Left side of the RTT relation for fixed inputs `(sigma, tau, beta)`:
/// outputs `(alpha, theta, rho) -> weight`.
fn rtt_left<W: Weight>(
    r: &RTable<W>,
    ti: &TTable<W>,
    tj: &TTable<W>,
    sigma: HSpin,
    tau: HSpin,
    beta: u64,
) -> BTreeMap<(u64, HSpin, HSpin), W> {
    let mut acc = BTreeMap::new();
    for (nu, mu, wr) in r.get(&(sigma, tau)).unwrap_or(&empty()) {
        for (gamma, theta, w1) in ti.get(&(beta, *nu)).unwrap_or(&empty()) {
            let w01 = wr.mul_w(w1);
            for (alpha, rho, w2) in tj.get(&(*gamma, *mu)).unwrap_or(&empty()) {
                accumulate(&mut acc, (*alpha, *theta, *rho), w01.mul_w(w2));
            }
        }
    }
    prune(acc)
}

fn rtt_right<W: Weight>(
    r: &RTable<W>,
    ti: &TTable<W>,
    tj: &TTable<W>,
    sigma: HSpin,
    tau: HSpin,
    beta: u64,
) -> BTreeMap<(u64, HSpin, HSpin), W> {
    let mut acc = BTreeMap::new();
    for (delta, psi, w1) in tj.get(&(beta, tau)).unwrap_or(&empty()) {
        for (alpha, phi, w2) in ti.get(&(*delta, sigma)).unwrap_or(&empty()) {
            let w12 = w1.mul_w(w2);
            for (theta, rho, wr) in r.get(&(*phi, *psi)).unwrap_or(&empty()) {
                accumulate(&mut acc, (*alpha, *theta, *rho), w12.mul_w(wr));
            }
        }
    }
    prune(acc)
}

fn fmt_vert(mask: u64) -> String {
    format!("{mask:b}")
}

/// Compare both sides of an RTT relation for every `(sigma, tau, beta)`.
fn compare_rtt<W: Weight>(
    label: &str,
    spins: &[HSpin],
    verts: &[u64],
    r_left: &RTable<W>,
    r_right: &RTable<W>,
    ti: &TTable<W>,
    tj: &TTable<W>,
) -> Report {
    let mut report = Report::default();
    let outputs = (verts.len() * spins.len() * spins.len()) as u64;
    for &sigma in spins {
        for &tau in spins {
            for &beta in verts {
                report.checked += outputs;
                let lhs = rtt_left(r_left, ti, tj, sigma, tau, beta);
                let rhs = rtt_right(r_right, ti, tj, sigma, tau, beta);
                if lhs != rhs {
                    let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).cloned().collect();
                    for k in keys {
                        let (l, r) = (lhs.get(&k), rhs.get(&k));
                        if l != r {
                            report.failures.push(Failure {
                                boundary: format!(
                                    "{label} sigma={sigma} tau={tau} beta={} alpha={} theta={} rho={}",
                                    fmt_vert(beta),
                                    fmt_vert(k.0),
                                    k.1,
                                    k.2
                                ),
                                lhs: l.map_or("0".into(), Weight::describe),
                                rhs: r.map_or("0".into(), Weight::describe),
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

fn all_contexts(n: u32, r: usize) -> Vec<RContext> {
    let mut out = Vec::new();
    for w in (0..n as u8).rev() {
        for c in 1..=r as u8 {
            out.push(RContext { n, r, c, w });
        }
    }
    out
}

struct AuxTables {
    ctx: RContext,
    r_left: RTable<LaurentPoly>,
    r_right: RTable<LaurentPoly>,
    ti: TTable<LaurentPoly>,
    tj: TTable<LaurentPoly>,
}

fn aux_tables(ctx: RContext) -> AuxTables {
    let spins = HSpin::all(ctx.n, ctx.r);
    let vars = Vars::pair();
    let next = ctx.successor();
    AuxTables {
        ctx,
        r_left: r_table(&spins, |a, b, c, d| r_weight_mono(&ctx, vars, a, b, c, d)),
        r_right: r_table(&spins, |a, b, c, d| r_weight_mono(&next, vars, a, b, c, d)),
        ti: t_table_mono(&ctx, &spins, 2, 1),
        tj: t_table_mono(&ctx, &spins, 2, 2),
    }
}

/// The auxiliary RTT relation for every `(c, w)` and every boundary, as exact
/// Laurent polynomial identities in `z_i, z_j`.
pub fn verify_aux_ybe(n: u32, r: usize) -> Report {
    let spins = HSpin::all(n, r);
    all_contexts(n, r)
        .into_par_iter()
        .map(|ctx| {
            let t = aux_tables(ctx);
            compare_rtt(
                &format!("c={} w={}", ctx.c, ctx.w),
                &spins,
                &[0, 1],
                &t.r_left,
                &t.r_right,
                &t.ti,
                &t.tj,
            )
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Random numeric values for `z_1..z_k` (nonzero) together with admissible
/// `v` and `g`.
pub fn random_point<R: Rng>(n: u32, k: usize, rng: &mut R) -> (Vec<BigRational>, GaussValues) {
    let g = GaussValues::random(n, rng);
    let z = (0..k)
        .map(|_| {
            let mut p: i64 = rng.gen_range(1..=12);
            if rng.gen_bool(0.5) {
                p = -p;
            }
            BigRational::new(p.into(), rng.gen_range(1..=12i64).into())
        })
        .collect();
    (z, g)
}

/// The auxiliary RTT relation at `samples` random admissible numeric points.
pub fn verify_aux_ybe_numeric(n: u32, r: usize, samples: usize, seed: u64) -> Report {
    let spins = HSpin::all(n, r);
    let tables: Vec<AuxTables> = all_contexts(n, r).into_iter().map(aux_tables).collect();
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(s as u64));
            let (z, g) = random_point(n, 2, &mut rng);
            let v = g.v.clone();
            let eval = |p: &LaurentPoly| p.specialize_unchecked(&z, &v, &g);
            let mut report = Report::default();
            for t in &tables {
                report.merge(compare_rtt(
                    &format!("sample={s} c={} w={}", t.ctx.c, t.ctx.w),
                    &spins,
                    &[0, 1],
                    &map_r(&t.r_left, &eval),
                    &map_r(&t.r_right, &eval),
                    &map_t(&t.ti, &eval),
                    &map_t(&t.tj, &eval),
                ));
            }
            report
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// The RTT relation for the fully-fused model on `V ⊗ V ⊗ W`, with `W`
/// spanned by all `2^{nr}` subsets of color–scolor pairs.
pub fn verify_fused_rtt(n: u32, r: usize) -> Report {
    assert!(n as usize * r <= 6, "fused RTT check needs n*r <= 6");
    let spins = HSpin::all(n, r);
    let vars = Vars::pair();
    let rt = r_table(&spins, |a, b, c, d| r_weight_fused(n, vars, a, b, c, d));
    let ti = t_table_fused(n, r, &spins, 2, 1);
    let tj = t_table_fused(n, r, &spins, 2, 2);
    let verts: Vec<u64> = (0..(1u64 << (n as usize * r))).collect();
    compare_rtt("fused", &spins, &verts, &rt, &rt, &ti, &tj)
}

/// The fused R-matrix table agrees with the monochrome one at `(c_1, w_{n-1})`.
pub fn verify_fused_r_specialization(n: u32, r: usize) -> Report {
    let spins = HSpin::all(n, r);
    let ctx = RContext::fused(n, r);
    let vars = Vars::pair();
    let mut report = Report::default();
    for &a in &spins {
        for &b in &spins {
            for &c in &spins {
                for &d in &spins {
                    report.checked += 1;
                    let f = r_weight_fused(n, vars, a, b, c, d);
                    let m = r_weight_mono(&ctx, vars, a, b, c, d);
                    if f != m {
                        report.failures.push(Failure {
                            boundary: format!("bl={a} tl={b} tr={c} br={d}"),
                            lhs: f.to_string(),
                            rhs: m.to_string(),
                        });
                    }
                }
            }
        }
    }
    report
}

/// Both R tables vanish whenever the multisets of colors or scolors on the
/// two sides differ.
pub fn verify_conservation(n: u32, r: usize) -> Report {
    let spins = HSpin::all(n, r);
    let mut report = Report::default();
    let vars = Vars::pair();
    let key = |x: HSpin, y: HSpin| {
        let mut v = vec![x, y];
        v.sort();
        v
    };
    for ctx in all_contexts(n, r) {
        for &a in &spins {
            for &b in &spins {
                for &c in &spins {
                    for &d in &spins {
                        if key(a, b) == key(c, d) {
                            continue;
                        }
                        report.checked += 1;
                        let m = r_weight_mono(&ctx, vars, a, b, c, d);
                        let f = r_weight_fused(n, vars, a, b, c, d);
                        if !m.is_zero() || !f.is_zero() {
                            report.failures.push(Failure {
                                boundary: format!("c={} w={} bl={a} tl={b} tr={c} br={d}", ctx.c, ctx.w),
                                lhs: m.to_string(),
                                rhs: f.to_string(),
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

type Triple = (HSpin, HSpin, HSpin);

fn rrr_sides<W: Weight>(
    spins: &[HSpin],
    rij: &RTable<W>,
    rik: &RTable<W>,
    rjk: &RTable<W>,
    input: Triple,
) -> (BTreeMap<Triple, W>, BTreeMap<Triple, W>) {
    let (t0, m0, b0) = input;
    let _ = spins;
    let mut left = BTreeMap::new();
    for (m1, b1, w1) in rij.get(&(b0, m0)).unwrap_or(&empty()) {
        for (t1, m2, w2) in rik.get(&(*m1, t0)).unwrap_or(&empty()) {
            let w12 = w1.mul_w(w2);
            for (m3, b3, w3) in rjk.get(&(*b1, *m2)).unwrap_or(&empty()) {
                accumulate(&mut left, (*t1, *m3, *b3), w12.mul_w(w3));
            }
        }
    }
    let mut right = BTreeMap::new();
    for (t1, m1, w1) in rjk.get(&(m0, t0)).unwrap_or(&empty()) {
        for (m2, b2, w2) in rik.get(&(b0, *m1)).unwrap_or(&empty()) {
            let w12 = w1.mul_w(w2);
            for (t3, m3, w3) in rij.get(&(*m2, *t1)).unwrap_or(&empty()) {
                accumulate(&mut right, (*t3, *m3, *b2), w12.mul_w(w3));
            }
        }
    }
    (prune(left), prune(right))
}

fn rrr_tables(n: u32, r: usize) -> [RTable<LaurentPoly>; 3] {
    let spins = HSpin::all(n, r);
    let mk = |a, b| {
        let vars = Vars { rank: 3, a, b };
        r_table(&spins, move |p, q, s, t| r_weight_fused(n, vars, p, q, s, t))
    };
    [mk(1, 2), mk(1, 3), mk(2, 3)]
}

fn compare_rrr<W: Weight>(label: &str, spins: &[HSpin], t: &[RTable<W>; 3]) -> Report {
    let mut report = Report::default();
    let k = spins.len() as u64;
    for &a in spins {
        for &b in spins {
            for &c in spins {
                report.checked += k * k * k;
                let (l, r) = rrr_sides(spins, &t[0], &t[1], &t[2], (a, b, c));
                if l != r {
                    let keys: std::collections::BTreeSet<_> = l.keys().chain(r.keys()).cloned().collect();
                    for key in keys {
                        if l.get(&key) != r.get(&key) {
                            report.failures.push(Failure {
                                boundary: format!(
                                    "{label} in=({a},{b},{c}) out=({},{},{})",
                                    key.0, key.1, key.2
                                ),
                                lhs: l.get(&key).map_or("0".into(), Weight::describe),
                                rhs: r.get(&key).map_or("0".into(), Weight::describe),
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// `R_12 R_13 R_23 = R_23 R_13 R_12` for the fully-fused R-matrix, as
/// Laurent polynomial identities in `z_i, z_j, z_k`.
pub fn verify_rrr(n: u32, r: usize) -> Report {
    let spins = HSpin::all(n, r);
    compare_rrr("symbolic", &spins, &rrr_tables(n, r))
}

/// The RRR relation at random admissible numeric points.
pub fn verify_rrr_numeric(n: u32, r: usize, samples: usize, seed: u64) -> Report {
    let spins = HSpin::all(n, r);
    let tables = rrr_tables(n, r);
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(s as u64));
            let (z, g) = random_point(n, 3, &mut rng);
            let v = g.v.clone();
            let eval = |p: &LaurentPoly| p.specialize_unchecked(&z, &v, &g);
            let t = [map_r(&tables[0], &eval), map_r(&tables[1], &eval), map_r(&tables[2], &eval)];
            compare_rrr(&format!("sample={s}"), &spins, &t)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// The lattice recursion in rows `i, i+1` obtained by attaching the fused
/// R-matrix to the right and left of the system: returns `(lhs, rhs)`.
pub fn recursion_via_r_matrix(spec: &SystemSpec, i: usize) -> (LaurentPoly, LaurentPoly) {
    recursion_via_r_matrix_with(spec, i, partition_function)
}

/// As [`recursion_via_r_matrix`], with partition functions supplied by `z_of`.
pub fn recursion_via_r_matrix_with<F>(spec: &SystemSpec, i: usize, z_of: F) -> (LaurentPoly, LaurentPoly)
where
    F: Fn(&SystemSpec) -> LaurentPoly,
{
    let (n, r) = (spec.n, spec.r);
    let vars = Vars { rank: r, a: i, b: i + 1 };
    let wt = |a, b, c, d| r_weight_fused(n, vars, a, b, c, d);
    let y = spec.theta[i - 1] as u8;
    let x = spec.theta[i] as u8;
    let (sx, sy) = (HSpin::Scolor(x), HSpin::Scolor(y));
    let winv = spec.w.inverse();
    let d = HSpin::Color((r + 1 - winv.apply(i)) as u8);
    let c = HSpin::Color((r + 1 - winv.apply(i + 1)) as u8);

    let z = z_of(spec);
    let lhs = if x != y {
        let mut swapped = spec.clone();
        swapped.theta.swap(i - 1, i);
        &(&wt(sx, sy, sx, sy) * &z_of(&swapped)) + &(&wt(sx, sy, sy, sx) * &z)
    } else {
        &wt(sx, sx, sx, sx) * &z
    };
    let mut sw = spec.clone();
    sw.w = spec.w.mul_simple_left(i);
    let z_sw = z_of(&sw).swap_vars(i);
    let rhs = &(&wt(d, c, d, c) * &z_sw) + &(&wt(c, d, d, c) * &z.swap_vars(i));
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let ctx = RContext { n: 2, r: 2, c: 1, w: 1 };
        let vars = Vars::pair();
        let a = HSpin::Color(1);
        let x = HSpin::Scolor(0);
        assert_eq!(r_weight_mono(&ctx, vars, a, a, a, a).to_string(), "z1^2 + -v*z2^2");
        assert_eq!(r_weight_mono(&ctx, vars, x, x, x, x).to_string(), "-v*z1^2 + z2^2");
        assert_eq!(r_weight_mono(&ctx, vars, x, a, x, a).to_string(), "v*z1^2 + -v*z2^2");
        assert!(r_weight_mono(&ctx, vars, x, a, a, a).is_zero());
    }

    #[test]
    fn successor_cycle() {
        let ctx = RContext { n: 2, r: 2, c: 1, w: 1 };
        let s = ctx.successor();
        assert_eq!((s.c, s.w), (2, 1));
        let s = s.successor();
        assert_eq!((s.c, s.w), (1, 0));
        let s = s.successor().successor();
        assert_eq!((s.c, s.w), (1, 1));
    }

    #[test]
    fn aux_small() {
        let rep = verify_aux_ybe(2, 2);
        assert!(rep.passed(), "{:#?}", &rep.failures[..rep.failures.len().min(5)]);
    }

    #[test]
    fn fused_specialization() {
        for n in 1..=3 {
            for r in 1..=3 {
                assert!(verify_fused_r_specialization(n, r).passed());
            }
        }
    }
}
