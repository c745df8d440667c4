//! The systems `S_{mu, theta, w}`: grids, boundary conditions, state
//! enumeration and partition functions in the monochrome, color-fused and
//! fully-fused models.
//!
//! Rows `1..r` run top to bottom and carry `z_1..z_r`. Columns are indexed
//! from the left starting at 0; in the monochrome grid the blocks run
//! `Nn-1, ..., 0` left to right, block `b` has scolor `w_{b mod n}`, and
//! within a block the colors run `c_1..c_r`.

pub mod weights;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::coefficients::{GaussElem, GaussRing};
use crate::error::{Error, Result};
use crate::laurent::{ExponentVec, LaurentPoly};
use crate::weyl::Permutation;

pub use weights::{HSpin, Transition, VertexWeight};

/// Which of the three equivalent models to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Monochrome,
    ColorFused,
    FullyFused,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Monochrome, Variant::ColorFused, Variant::FullyFused];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Monochrome => "monochrome",
            Variant::ColorFused => "color-fused",
            Variant::FullyFused => "fully-fused",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "monochrome" | "mono" => Ok(Variant::Monochrome),
            "color-fused" | "colour-fused" => Ok(Variant::ColorFused),
            "fully-fused" => Ok(Variant::FullyFused),
            _ => Err(Error::Parse(format!("unknown variant `{s}`"))),
        }
    }
}

/// Boundary data of a system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SystemSpec {
    pub n: u32,
    pub r: usize,
    pub mu: ExponentVec,
    pub theta: Vec<u32>,
    pub w: Permutation,
    pub variant: Variant,
    /// Number of fully-fused columns; the monochrome grid has `N n r` columns.
    pub blocks: usize,
}

/// The smallest admissible `N`, i.e. `ceil((max mu + 1) / n)`.
pub fn default_blocks(n: u32, mu: &[i32]) -> usize {
    let m = mu.iter().copied().max().unwrap_or(0).max(0) as usize;
    (m + 1).div_ceil(n as usize)
}

impl SystemSpec {
    pub fn new(n: u32, mu: ExponentVec, theta: Vec<u32>, w: Permutation) -> Result<Self> {
        let blocks = default_blocks(n.max(1), &mu);
        let spec = SystemSpec { n, r: mu.len(), mu, theta, w, variant: Variant::Monochrome, blocks };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_blocks(mut self, blocks: usize) -> Result<Self> {
        self.blocks = blocks;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Invalid(m));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if self.r == 0 || self.r > 8 {
            return bad(format!("r must be in 1..=8, got {}", self.r));
        }
        if self.mu.len() != self.r || self.theta.len() != self.r || self.w.rank() != self.r {
            return bad(format!(
                "mu, theta and w must all have length r={} (got {}, {}, {})",
                self.r,
                self.mu.len(),
                self.theta.len(),
                self.w.rank()
            ));
        }
        if self.mu.iter().any(|&m| m < 0) {
            return bad(format!("mu must have nonnegative parts, got {:?}", self.mu));
        }
        if let Some(t) = self.theta.iter().find(|&&t| t >= self.n) {
            return bad(format!("theta entries must be residues mod n={}, got {t}", self.n));
        }
        let max_mu = self.mu.iter().copied().max().unwrap_or(0) as usize;
        if self.blocks * (self.n as usize) <= max_mu {
            return bad(format!("N*n = {} must exceed max(mu) = {max_mu}", self.blocks * self.n as usize));
        }
        if self.variant == Variant::FullyFused && self.n as usize * self.r > 62 {
            return bad("fully-fused vertical spins need n*r <= 62".into());
        }
        Ok(())
    }

    /// The same boundary data in the next fused model.
    pub fn fuse(&self, target: Variant) -> Result<SystemSpec> {
        match (self.variant, target) {
            (Variant::Monochrome, Variant::ColorFused) | (Variant::ColorFused, Variant::FullyFused) => {
                Ok(self.clone().with_variant(target))
            }
            (from, to) => Err(Error::Invalid(format!("cannot fuse {} into {}", from.name(), to.name()))),
        }
    }

    /// Number of columns in this variant's grid.
    pub fn width(&self) -> usize {
        match self.variant {
            Variant::Monochrome => self.blocks * self.n as usize * self.r,
            Variant::ColorFused => self.blocks * self.n as usize,
            Variant::FullyFused => self.blocks,
        }
    }

    pub fn ring(&self) -> GaussRing {
        GaussRing::new(self.n)
    }

    /// `(color, scolor)` of monochrome column `t` (0-based from the left).
    pub fn mono_column(&self, t: usize) -> (u8, u8) {
        let block = self.blocks * self.n as usize - 1 - t / self.r;
        ((t % self.r + 1) as u8, (block % self.n as usize) as u8)
    }

    /// Scolor of color-fused column `t`.
    pub fn color_fused_column(&self, t: usize) -> u8 {
        let block = self.blocks * self.n as usize - 1 - t;
        (block % self.n as usize) as u8
    }

    /// Boundary spins in this variant's encoding.
    pub fn boundary(&self) -> Boundary {
        let (n, r) = (self.n as usize, self.r);
        let mut top = vec![0u64; self.width()];
        for j in 1..=r {
            let block = self.mu[j - 1] as usize;
            let color = r + 1 - j;
            match self.variant {
                Variant::Monochrome => top[(self.blocks * n - 1 - block) * r + color - 1] = 1,
                Variant::ColorFused => top[self.blocks * n - 1 - block] |= 1 << (color - 1),
                Variant::FullyFused => {
                    top[self.blocks - 1 - block / n] |= 1 << ((block % n) * r + color - 1);
                }
            }
        }
        let winv = self.w.inverse();
        Boundary {
            top,
            left: self.theta.iter().map(|&t| HSpin::Scolor(t as u8)).collect(),
            right: (1..=r).map(|i| HSpin::Color((r + 1 - winv.apply(i)) as u8)).collect(),
        }
    }
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} r={} mu={:?} theta={:?} w={} [{}] N={}",
            self.n,
            self.r,
            self.mu,
            self.theta,
            self.w.word_string(),
            self.variant.name(),
            self.blocks
        )
    }
}

/// Boundary spins: top verticals per column, left and right horizontals per
/// row. The bottom boundary is always empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub top: Vec<u64>,
    pub left: Vec<HSpin>,
    pub right: Vec<HSpin>,
}

/// Transitions keyed by (column, top spin, left spin).
type TransitionCache = HashMap<(usize, u64, HSpin), Rc<Vec<Transition>>>;

/// Cached vertex transitions for one system.
struct Model {
    spec: SystemSpec,
    ring: GaussRing,
    cache: RefCell<TransitionCache>,
}

impl Model {
    fn new(spec: &SystemSpec) -> Self {
        Model { spec: spec.clone(), ring: spec.ring(), cache: RefCell::new(HashMap::new()) }
    }

    /// Columns sharing a weight table share a cache key.
    fn kind(&self, col: usize) -> usize {
        match self.spec.variant {
            Variant::Monochrome => {
                let (c, w) = self.spec.mono_column(col);
                (c as usize - 1) + self.spec.r * w as usize
            }
            Variant::ColorFused => self.spec.color_fused_column(col) as usize,
            Variant::FullyFused => 0,
        }
    }

    fn transitions(&self, col: usize, top: u64, left: HSpin) -> Rc<Vec<Transition>> {
        let key = (self.kind(col), top, left);
        if let Some(t) = self.cache.borrow().get(&key) {
            return t.clone();
        }
        let t = Rc::new(match self.spec.variant {
            Variant::Monochrome => {
                let (c, w) = self.spec.mono_column(col);
                weights::monochrome_transitions(&self.ring, c, w, top, left)
            }
            Variant::ColorFused => {
                weights::color_fused_transitions(&self.ring, self.spec.r, self.spec.color_fused_column(col), top, left)
            }
            Variant::FullyFused => weights::fully_fused_transitions(&self.ring, self.spec.r, top, left),
        });
        self.cache.borrow_mut().insert(key, t.clone());
        t
    }

    fn weight(&self, col: usize, top: u64, left: HSpin, bottom: u64, right: HSpin) -> Option<VertexWeight> {
        self.transitions(col, top, left)
            .iter()
            .find(|t| t.bottom == bottom && t.right == right)
            .map(|t| t.weight.clone())
    }
}

/// One admissible state: a spin on every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeState {
    pub variant: Variant,
    pub n: u32,
    pub r: usize,
    /// `horizontal[i][t]` is the edge left of column `t` in row `i + 1`
    /// (`t = width` is the right boundary).
    pub horizontal: Vec<Vec<HSpin>>,
    /// `vertical[i][t]` is the edge above row `i + 1` in column `t`
    /// (`i = r` is the bottom boundary).
    pub vertical: Vec<Vec<u64>>,
    /// Column attributes used for printing monochrome spins.
    mono_columns: Vec<(u8, u8)>,
    fused_scolors: Vec<u8>,
}

impl LatticeState {
    pub fn width(&self) -> usize {
        self.vertical[0].len()
    }

    fn fmt_vertical(&self, t: usize, mask: u64) -> String {
        if mask == 0 {
            return "+".into();
        }
        match self.variant {
            Variant::Monochrome => {
                let (c, w) = self.mono_columns[t];
                format!("c{c}w{w}")
            }
            Variant::ColorFused => {
                let w = self.fused_scolors[t];
                let items: Vec<String> =
                    (0..self.r).filter(|c| mask & (1 << c) != 0).map(|c| format!("c{}w{w}", c + 1)).collect();
                format!("{{{}}}", items.join(","))
            }
            Variant::FullyFused => {
                let mut items = Vec::new();
                for x in 0..self.n as usize {
                    for c in 0..self.r {
                        if mask & (1 << (x * self.r + c)) != 0 {
                            items.push((c + 1, x));
                        }
                    }
                }
                items.sort();
                let items: Vec<String> = items.iter().map(|(c, x)| format!("c{c}w{x}")).collect();
                format!("{{{}}}", items.join(","))
            }
        }
    }

    /// Debug dump: one `row,col,side=spin` line per edge, rows and columns
    /// 1-based.
    pub fn dump(&self) -> String {
        let mut lines = Vec::new();
        let width = self.width();
        for i in 0..self.r {
            for t in 0..width {
                lines.push(format!("{},{},top={}", i + 1, t + 1, self.fmt_vertical(t, self.vertical[i][t])));
                lines.push(format!("{},{},left={}", i + 1, t + 1, self.horizontal[i][t]));
            }
            lines.push(format!("{},{},right={}", i + 1, width, self.horizontal[i][width]));
        }
        for t in 0..width {
            lines.push(format!("{},{},bottom={}", self.r, t + 1, self.fmt_vertical(t, self.vertical[self.r][t])));
        }
        lines.join("\n")
    }

    /// The state with scolors dropped: per edge only which colors it
    /// carries.
    pub fn color_projection(&self) -> (Vec<Vec<Option<u8>>>, Vec<Vec<u64>>) {
        let h = self
            .horizontal
            .iter()
            .map(|row| row.iter().map(|s| if let HSpin::Color(c) = s { Some(*c) } else { None }).collect())
            .collect();
        let v = self
            .vertical
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&m| match self.variant {
                        Variant::FullyFused => {
                            let mut colors = 0u64;
                            for x in 0..self.n as usize {
                                colors |= (m >> (x * self.r)) & ((1 << self.r) - 1);
                            }
                            colors
                        }
                        _ => m,
                    })
                    .collect()
            })
            .collect();
        (h, v)
    }
}

fn state_skeleton(spec: &SystemSpec) -> LatticeState {
    let width = spec.width();
    LatticeState {
        variant: spec.variant,
        n: spec.n,
        r: spec.r,
        horizontal: vec![vec![HSpin::Scolor(0); width + 1]; spec.r],
        vertical: vec![vec![0; width]; spec.r + 1],
        mono_columns: match spec.variant {
            Variant::Monochrome => (0..width).map(|t| spec.mono_column(t)).collect(),
            _ => Vec::new(),
        },
        fused_scolors: match spec.variant {
            Variant::ColorFused => (0..width).map(|t| spec.color_fused_column(t)).collect(),
            _ => Vec::new(),
        },
    }
}

/// All admissible states in deterministic DFS order (rows top to bottom,
/// columns left to right, continuations in table order).
pub fn enumerate_states(spec: &SystemSpec) -> Vec<LatticeState> {
    let model = Model::new(spec);
    let bd = spec.boundary();
    let mut state = state_skeleton(spec);
    state.vertical[0] = bd.top.clone();
    let mut out = Vec::new();
    dfs_states(&model, &bd, 0, 0, &mut state, &mut out);
    out
}

fn dfs_states(model: &Model, bd: &Boundary, row: usize, col: usize, state: &mut LatticeState, out: &mut Vec<LatticeState>) {
    let width = state.width();
    if row == state.r {
        if state.vertical[row].iter().all(|&m| m == 0) {
            out.push(state.clone());
        }
        return;
    }
    if col == 0 {
        state.horizontal[row][0] = bd.left[row];
    }
    if col == width {
        if state.horizontal[row][width] == bd.right[row] {
            dfs_states(model, bd, row + 1, 0, state, out);
        }
        return;
    }
    let top = state.vertical[row][col];
    let left = state.horizontal[row][col];
    for tr in model.transitions(col, top, left).iter() {
        state.vertical[row + 1][col] = tr.bottom;
        state.horizontal[row][col + 1] = tr.right;
        dfs_states(model, bd, row, col + 1, state, out);
    }
}

/// Boltzmann weight of a state (product of vertex weights) as a monomial.
pub fn state_weight(spec: &SystemSpec, state: &LatticeState) -> LaurentPoly {
    let model = Model::new(spec);
    let ring = spec.ring();
    let mut coeff = ring.one();
    let mut exps = vec![0i32; spec.r];
    for (i, e) in exps.iter_mut().enumerate() {
        for t in 0..state.width() {
            match model.weight(t, state.vertical[i][t], state.horizontal[i][t], state.vertical[i + 1][t], state.horizontal[i][t + 1]) {
                Some(wt) => {
                    coeff = &coeff * &wt.coeff;
                    *e += wt.z_pow as i32;
                }
                None => return LaurentPoly::zero(spec.n, spec.r),
            }
        }
    }
    LaurentPoly::monomial(exps, coeff)
}

/// Partition function by row-to-row transfer: states are grouped by the
/// vertical spins between rows, so the cost is governed by the number of
/// distinct row boundaries rather than the number of states.
pub fn partition_function(spec: &SystemSpec) -> LaurentPoly {
    let model = Model::new(spec);
    let bd = spec.boundary();
    let width = spec.width();
    let ring = spec.ring();
    let mut layer: BTreeMap<Vec<u64>, LaurentPoly> = BTreeMap::new();
    layer.insert(bd.top.clone(), LaurentPoly::one(spec.n, spec.r));
    for row in 0..spec.r {
        let mut next: BTreeMap<Vec<u64>, LaurentPoly> = BTreeMap::new();
        for (verts, poly) in &layer {
            let mut row_out: BTreeMap<Vec<u64>, BTreeMap<u32, GaussElem>> = BTreeMap::new();
            let mut below = vec![0u64; width];
            row_dfs(&model, verts, &bd, row, 0, bd.left[row], ring.one(), 0, &mut below, &mut row_out);
            for (new_verts, by_pow) in row_out {
                let mut contrib = LaurentPoly::zero(spec.n, spec.r);
                for (p, c) in by_pow {
                    let mut e = vec![0; spec.r];
                    e[row] = p as i32;
                    contrib += &LaurentPoly::monomial(e, c);
                }
                let entry = next.entry(new_verts).or_insert_with(|| LaurentPoly::zero(spec.n, spec.r));
                *entry += &(poly * &contrib);
            }
        }
        layer = next;
    }
    let empty = vec![0u64; width];
    layer.remove(&empty).unwrap_or_else(|| LaurentPoly::zero(spec.n, spec.r))
}

#[allow(clippy::too_many_arguments)]
fn row_dfs(
    model: &Model,
    top: &[u64],
    bd: &Boundary,
    row: usize,
    col: usize,
    left: HSpin,
    coeff: GaussElem,
    z_pow: u32,
    below: &mut Vec<u64>,
    out: &mut BTreeMap<Vec<u64>, BTreeMap<u32, GaussElem>>,
) {
    if col == top.len() {
        if left == bd.right[row] {
            let slot = out.entry(below.clone()).or_default();
            match slot.get_mut(&z_pow) {
                Some(c) => *c += &coeff,
                None => {
                    slot.insert(z_pow, coeff);
                }
            }
        }
        return;
    }
    for tr in model.transitions(col, top[col], left).iter() {
        below[col] = tr.bottom;
        let c = if tr.weight.coeff.is_one() { coeff.clone() } else { &coeff * &tr.weight.coeff };
        row_dfs(model, top, bd, row, col + 1, tr.right, c, z_pow + tr.weight.z_pow, below, out);
    }
}

/// Partition function as the sum of the weights of the enumerated states.
pub fn partition_function_by_states(spec: &SystemSpec) -> LaurentPoly {
    let mut z = LaurentPoly::zero(spec.n, spec.r);
    for s in enumerate_states(spec) {
        z += &state_weight(spec, &s);
    }
    z
}

/// Map a state to the corresponding state of the next fused model.
pub fn fuse_state(spec: &SystemSpec, state: &LatticeState) -> Result<(SystemSpec, LatticeState)> {
    let (target, group) = match spec.variant {
        Variant::Monochrome => (Variant::ColorFused, spec.r),
        Variant::ColorFused => (Variant::FullyFused, spec.n as usize),
        Variant::FullyFused => return Err(Error::Invalid("fully-fused states cannot be fused further".into())),
    };
    let fused = spec.fuse(target)?;
    let mut out = state_skeleton(&fused);
    for i in 0..spec.r {
        for t in 0..=fused.width() {
            out.horizontal[i][t] = state.horizontal[i][t * group];
        }
    }
    for i in 0..=spec.r {
        for t in 0..fused.width() {
            let mut mask = 0u64;
            for k in 0..group {
                let m = state.vertical[i][t * group + k];
                mask |= match spec.variant {
                    // column t*r + k carries color k+1
                    Variant::Monochrome => (m & 1) << k,
                    // sub-column k carries scolor n-1-k
                    _ => m << ((group - 1 - k) * spec.r),
                };
            }
            out.vertical[i][t] = mask;
        }
    }
    Ok((fused, out))
}

/// The ground-state value `v^{l(w')} z^{lambda + rho}` when
/// `theta = lambda + rho mod n`, else 0.
pub fn ground_state_value(n: u32, mu: &[i32], theta: &[u32]) -> LaurentPoly {
    let r = mu.len();
    let pair = crate::weyl::almost_dominant_decompose(mu);
    let shifted = pair.w_prime.act_on_weight(mu);
    let ring = GaussRing::new(n);
    let ok = shifted.iter().zip(theta).all(|(&x, &t)| crate::weyl::floorn(i64::from(x), n) == i64::from(t));
    if ok {
        LaurentPoly::monomial(shifted, ring.v_pow(pair.w_prime.length() as i32))
    } else {
        LaurentPoly::zero(n, r)
    }
}

/// Both sides of the lattice recursion in rows `i, i+1`, relating
/// `Z(S_{mu,theta,w})`, `Z(S_{mu,s_i theta,w})` at `z` with
/// `Z(S_{mu,theta,w})`, `Z(S_{mu,theta,s_i w})` at `s_i z`.
pub fn recursion_sides(spec: &SystemSpec, i: usize) -> (LaurentPoly, LaurentPoly) {
    recursion_sides_with(spec, i, partition_function)
}

/// As [`recursion_sides`], with partition functions supplied by `z_of`.
pub fn recursion_sides_with<F>(spec: &SystemSpec, i: usize, z_of: F) -> (LaurentPoly, LaurentPoly)
where
    F: Fn(&SystemSpec) -> LaurentPoly,
{
    let (n, r) = (spec.n, spec.r);
    let ring = spec.ring();
    let nn = n as i32;
    let za = |k: i32| LaurentPoly::z_pow(n, crate::laurent::scale_exp(&crate::laurent::simple_root(r, i), k));
    let diff = i64::from(spec.theta[i - 1]) - i64::from(spec.theta[i]);
    let c = crate::weyl::ceiln(diff, n) as i32;
    let omv = LaurentPoly::constant(ring.one_minus_v(), r);
    let minus = &LaurentPoly::one(n, r) - &za(-nn);
    let g = LaurentPoly::constant(ring.gauss_symbol(diff), r);

    let z = z_of(spec);
    let mut swapped = spec.clone();
    swapped.theta.swap(i - 1, i);
    let lhs = &(&(&omv * &za(-c)) * &z) + &(&(&g * &minus) * &z_of(&swapped));

    let mut sw = spec.clone();
    sw.w = spec.w.mul_simple_left(i);
    let a = z.swap_vars(i);
    let b = z_of(&sw).swap_vars(i);
    let rhs = if sw.w.length() > spec.w.length() {
        &(&omv * &a) + &(&minus * &b)
    } else {
        let v = LaurentPoly::constant(ring.v(), r);
        &(&(&omv * &za(-nn)) * &a) + &(&(&v * &minus) * &b)
    };
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, mu: &[i32], theta: &[u32], w: &str) -> SystemSpec {
        let r = mu.len();
        SystemSpec::new(n, mu.to_vec(), theta.to_vec(), Permutation::parse(r, w).unwrap()).unwrap()
    }

    #[test]
    fn boundary_example() {
        let s = spec(2, &[1, 0], &[0, 1], "e");
        let bd = s.boundary();
        // columns: (c1,w1) (c2,w1) (c1,w0) (c2,w0)
        assert_eq!(bd.top, vec![0, 1, 1, 0]);
        assert_eq!(bd.right, vec![HSpin::Color(2), HSpin::Color(1)]);
        assert_eq!(bd.left, vec![HSpin::Scolor(0), HSpin::Scolor(1)]);
    }

    #[test]
    fn single_state_example() {
        let s = spec(2, &[1, 0], &[0, 1], "s1");
        let states = enumerate_states(&s);
        assert_eq!(states.len(), 1);
        let ring = GaussRing::new(2);
        let expected = LaurentPoly::monomial(vec![0, 1], ring.gauss_symbol(1));
        assert_eq!(state_weight(&s, &states[0]), expected);
        for v in Variant::ALL {
            assert_eq!(partition_function(&s.clone().with_variant(v)), expected, "{}", v.name());
        }
    }

    #[test]
    fn ground_state_example() {
        let s = spec(2, &[2, 3, 0], &[1, 0, 0], "s1");
        let z = partition_function(&s);
        assert_eq!(z.to_string(), "v*z1^3*z2^2");
        assert_eq!(enumerate_states(&s).len(), 1);
        let s = spec(2, &[2, 3, 0], &[0, 0, 0], "s1");
        assert!(partition_function(&s).is_zero());
        assert!(enumerate_states(&s).is_empty());
    }

    #[test]
    fn rank_one() {
        for n in 1..=3 {
            for m in 0..5 {
                let s = spec(n, &[m], &[(m as u32) % n], "e");
                assert_eq!(partition_function(&s), LaurentPoly::z_pow(n, vec![m]));
            }
        }
    }

    #[test]
    fn dump_format() {
        let s = spec(2, &[1, 0], &[0, 1], "s1");
        let st = &enumerate_states(&s)[0];
        let d = st.dump();
        assert!(d.contains("1,2,top=c2w1"), "{d}");
        assert!(d.contains("1,1,left=w0"));
        assert!(d.contains("2,4,right=c2"));
        let (fs, fst) = fuse_state(&s, st).unwrap();
        assert!(fst.dump().contains("1,1,top={c2w1}"), "{}", fst.dump());
        assert_eq!(state_weight(&fs, &fst), state_weight(&s, st));
    }
}
