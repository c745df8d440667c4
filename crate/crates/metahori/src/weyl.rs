//! The symmetric group `S_r` as the Weyl group of `GL_r`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::laurent::{rho, ExponentVec};

/// A permutation of `{1..r}` in one-line notation `(w(1), ..., w(r))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { one_line: (1..=r).collect() }
    }

    /// The simple reflection `s_i` (1-based, `1 <= i < r`).
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "s_{i} is not a simple reflection of S_{r}");
        let mut p = Self::identity(r);
        p.one_line.swap(i - 1, i);
        p
    }

    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self> {
        let r = one_line.len();
        let mut seen = vec![false; r];
        for &x in &one_line {
            if x == 0 || x > r || seen[x - 1] {
                return Err(Error::Invalid(format!("{one_line:?} is not a permutation of 1..{r}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    /// `s_{a_1} s_{a_2} ... s_{a_k}`.
    pub fn from_word(r: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(r);
        for &a in word {
            if a == 0 || a >= r {
                return Err(Error::Invalid(format!("s{a} is not a simple reflection of S_{r}")));
            }
            p = p.mul_simple_right(a);
        }
        Ok(p)
    }

    /// Parse `"e"`, a word `"s1 s2"` / `"s1s2"`, or one-line `"2 1 3"` / `"2,1,3"`.
    pub fn parse(r: usize, s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "e" || t == "id" || t.is_empty() {
            return Ok(Self::identity(r));
        }
        if t.starts_with('s') {
            let mut word = Vec::new();
            for part in t.split(|c: char| c == 's' || c.is_whitespace() || c == '*' || c == ',') {
                if part.is_empty() {
                    continue;
                }
                word.push(part.parse::<usize>().map_err(|_| Error::Parse(format!("bad Weyl word `{s}`")))?);
            }
            return Self::from_word(r, &word);
        }
        let vals: std::result::Result<Vec<usize>, _> =
            t.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).map(str::parse).collect();
        let vals = vals.map_err(|_| Error::Parse(format!("bad permutation `{s}`")))?;
        if vals.len() != r {
            return Err(Error::Invalid(format!("permutation `{s}` has length {}, expected {r}", vals.len())));
        }
        Self::from_one_line(vals)
    }

    pub fn rank(&self) -> usize {
        self.one_line.len()
    }

    /// Values `w(1), ..., w(r)` (1-based).
    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.rank()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        Permutation { one_line: other.one_line.iter().map(|&i| self.one_line[i - 1]).collect() }
    }

    /// `s_i * self`: swaps the values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let one_line = self
            .one_line
            .iter()
            .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
            .collect();
        Permutation { one_line }
    }

    /// `self * s_i`: swaps the positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.one_line.swap(i - 1, i);
        p
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut inv = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Whether `l(s_i w) > l(w)`, i.e. `w^{-1}(i) < w^{-1}(i+1)`.
    pub fn is_left_ascent(&self, i: usize) -> bool {
        let pos = |v: usize| self.one_line.iter().position(|&x| x == v).unwrap();
        pos(i) < pos(i + 1)
    }

    pub fn longest(r: usize) -> Self {
        Permutation { one_line: (1..=r).rev().collect() }
    }

    /// A reduced word `[a_1, ..., a_k]` with `self = s_{a_1} ... s_{a_k}`,
    /// peeling the leftmost right descent each time.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = self.clone();
        while let Some(p) = (1..x.rank()).find(|&p| x.one_line[p - 1] > x.one_line[p]) {
            word.push(p);
            x = x.mul_simple_right(p);
        }
        word.reverse();
        word
    }

    /// A uniformly random reduced word: at each step peel a random right descent.
    pub fn random_reduced_word<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = self.clone();
        loop {
            let descents: Vec<usize> = (1..x.rank()).filter(|&p| x.one_line[p - 1] > x.one_line[p]).collect();
            match descents.choose(rng) {
                None => break,
                Some(&p) => {
                    word.push(p);
                    x = x.mul_simple_right(p);
                }
            }
        }
        word.reverse();
        word
    }

    /// All elements of `S_r` in lexicographic one-line order.
    pub fn all(r: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=r).collect();
        loop {
            out.push(Permutation { one_line: cur.clone() });
            // next lexicographic permutation
            let Some(k) = (0..r.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else { break };
            let l = (k + 1..r).rev().find(|&l| cur[k] < cur[l]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }

    /// `(w lambda)_j = lambda_{w^{-1}(j)}`.
    pub fn act_on_weight(&self, lambda: &[i32]) -> ExponentVec {
        let mut out = vec![0; lambda.len()];
        for (k, &x) in lambda.iter().enumerate() {
            out[self.one_line[k] - 1] = x;
        }
        out
    }

    /// Reduced-word text, `"e"` for the identity.
    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "e".into()
        } else {
            w.iter().map(|a| format!("s{a}")).collect::<Vec<_>>().join(" ")
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// One step of a path in the Weyl group: left multiplication by `s_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub index: usize,
    pub ascent: bool,
}

/// Steps `s_{i_1}, ..., s_{i_k}` with `s_{i_k} ... s_{i_1} from = to`.
pub fn bruhat_path(from: &Permutation, to: &Permutation) -> Vec<PathStep> {
    let x = to.compose(&from.inverse());
    let mut word = x.reduced_word();
    word.reverse();
    path_from_word(from, &word)
}

/// Replay `word` (applied left-to-right as successive left multiplications)
/// from `from`, flagging ascents.
pub fn path_from_word(from: &Permutation, word: &[usize]) -> Vec<PathStep> {
    let mut u = from.clone();
    let mut steps = Vec::with_capacity(word.len());
    for &i in word {
        let ascent = u.is_left_ascent(i);
        steps.push(PathStep { index: i, ascent });
        u = u.mul_simple_left(i);
    }
    steps
}

/// The endpoint of a path.
pub fn replay_path(from: &Permutation, path: &[PathStep]) -> Permutation {
    path.iter().fold(from.clone(), |u, s| u.mul_simple_left(s.index))
}

/// A random (generally non-reduced) path from `from` to `to`: a random
/// reduced word with `extra` inserted `s_i s_i` pairs.
pub fn random_path<R: Rng>(from: &Permutation, to: &Permutation, extra: usize, rng: &mut R) -> Vec<PathStep> {
    let x = to.compose(&from.inverse());
    let mut word = x.random_reduced_word(rng);
    word.reverse();
    let r = from.rank();
    if r >= 2 {
        for _ in 0..extra {
            let pos = rng.gen_range(0..=word.len());
            let i = rng.gen_range(1..r);
            word.splice(pos..pos, [i, i]);
        }
    }
    path_from_word(from, &word)
}

/// Least strictly positive residue: `0 < ceiln(x, n) <= n`.
pub fn ceiln(x: i64, n: u32) -> i64 {
    let n = i64::from(n);
    let r = x.rem_euclid(n);
    if r == 0 {
        n
    } else {
        r
    }
}

/// Least nonnegative residue: `0 <= floorn(x, n) < n`.
pub fn floorn(x: i64, n: u32) -> i64 {
    x.rem_euclid(i64::from(n))
}

/// A pair `(w', lambda)` with `lambda` `w'`-almost dominant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostDominantPair {
    pub w_prime: Permutation,
    pub lambda: ExponentVec,
}

/// Whether `lambda` is `w'`-almost dominant: `<alpha_i, lambda> >= 0` when
/// `w'^{-1} alpha_i > 0` and `>= -1` otherwise.
pub fn is_almost_dominant(lambda: &[i32], w_prime: &Permutation) -> bool {
    let inv = w_prime.inverse();
    (1..lambda.len()).all(|i| {
        let d = lambda[i - 1] - lambda[i];
        let bound = if inv.apply(i) < inv.apply(i + 1) { 0 } else { -1 };
        d >= bound
    })
}

/// The unique `(w', lambda)` with `w' mu = lambda + rho` and `lambda`
/// `w'`-almost dominant.
///
/// `w'` sorts `mu` into weakly decreasing order; among equal parts the one
/// with the larger index comes first, so the colors at a shared block read
/// in ascending order from left to right.
pub fn almost_dominant_decompose(mu: &[i32]) -> AlmostDominantPair {
    let r = mu.len();
    let mut order: Vec<usize> = (1..=r).collect();
    order.sort_by(|&a, &b| mu[b - 1].cmp(&mu[a - 1]).then(b.cmp(&a)));
    // order[j-1] = w'^{-1}(j)
    let w_prime = Permutation { one_line: order }.inverse();
    let lambda: ExponentVec = w_prime.act_on_weight(mu).iter().zip(rho(r)).map(|(x, p)| x - p).collect();
    AlmostDominantPair { w_prime, lambda }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(3).length(), 0);
        assert_eq!(Permutation::simple(3, 1).length(), 1);
        assert_eq!(Permutation::longest(3).length(), 3);
    }

    #[test]
    fn parsing() {
        let s1 = Permutation::simple(3, 1);
        assert_eq!(Permutation::parse(3, "s1").unwrap(), s1);
        assert_eq!(Permutation::parse(3, "2 1 3").unwrap(), s1);
        assert_eq!(Permutation::parse(3, "2,1,3").unwrap(), s1);
        assert_eq!(Permutation::parse(3, "e").unwrap(), Permutation::identity(3));
        let w = Permutation::parse(3, "s1 s2").unwrap();
        assert_eq!(w, Permutation::simple(3, 1).compose(&Permutation::simple(3, 2)));
        assert_eq!(Permutation::parse(3, "s1s2").unwrap(), w);
        assert!(Permutation::parse(3, "s3").is_err());
        assert!(Permutation::parse(3, "1 1 2").is_err());
    }

    #[test]
    fn path_examples() {
        let e = Permutation::identity(2);
        let s1 = Permutation::simple(2, 1);
        assert_eq!(bruhat_path(&e, &s1), vec![PathStep { index: 1, ascent: true }]);
        assert!(bruhat_path(&s1, &s1).is_empty());
        let s1 = Permutation::simple(3, 1);
        let s2s1 = Permutation::simple(3, 2).compose(&s1);
        assert_eq!(bruhat_path(&s1, &s2s1), vec![PathStep { index: 2, ascent: true }]);
    }

    #[test]
    fn residues() {
        assert_eq!(ceiln(0, 3), 3);
        assert_eq!(ceiln(1 - 2, 3), 2);
        assert_eq!(floorn(-1, 3), 2);
        assert_eq!(ceiln(4, 3), 1);
    }

    #[test]
    fn decompositions() {
        let p = almost_dominant_decompose(&[4, 2, 0]);
        assert_eq!((p.w_prime, p.lambda), (Permutation::identity(3), vec![2, 1, 0]));
        let p = almost_dominant_decompose(&[2, 3, 0]);
        assert_eq!((p.w_prime, p.lambda), (Permutation::simple(3, 1), vec![1, 1, 0]));
        let p = almost_dominant_decompose(&[1, 1]);
        assert_eq!((p.w_prime, p.lambda), (Permutation::simple(2, 1), vec![0, 1]));
    }

    #[test]
    fn all_permutations() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        assert_eq!(all[5], Permutation::longest(3));
        assert_eq!(Permutation::all(1).len(), 1);
    }
}
