//! Exact Laurent polynomials in `z_1, ..., z_r` over [`GaussElem`].
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector and iterated in
//! descending lexicographic order, which is also the monomial order used by
//! [`LaurentPoly::exact_div`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::coefficients::{parse_gauss_factor, FactorForm, GaussElem, GaussRing, GaussValues};
use crate::error::{Error, Result};
use crate::weyl::Permutation;

/// An exponent vector in `Z^r`.
pub type ExponentVec = Vec<i32>;

/// `alpha_i = e_i - e_{i+1}` for a 1-based simple index `i`.
pub fn simple_root(r: usize, i: usize) -> ExponentVec {
    let mut a = vec![0; r];
    a[i - 1] = 1;
    a[i] = -1;
    a
}

/// The staircase `rho = (r-1, ..., 1, 0)`.
pub fn rho(r: usize) -> ExponentVec {
    (0..r).map(|k| (r - 1 - k) as i32).collect()
}

pub fn add_exp(a: &[i32], b: &[i32]) -> ExponentVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_exp(a: &[i32], b: &[i32]) -> ExponentVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_exp(a: &[i32], k: i32) -> ExponentVec {
    a.iter().map(|x| x * k).collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: u32,
    rank: usize,
    terms: BTreeMap<ExponentVec, GaussElem>,
}

impl LaurentPoly {
    pub fn zero(n: u32, rank: usize) -> Self {
        LaurentPoly { n, rank, terms: BTreeMap::new() }
    }

    pub fn one(n: u32, rank: usize) -> Self {
        Self::constant(GaussRing::new(n).one(), rank)
    }

    pub fn constant(c: GaussElem, rank: usize) -> Self {
        Self::monomial(vec![0; rank], c)
    }

    /// `c * z^lambda`.
    pub fn monomial(lambda: ExponentVec, c: GaussElem) -> Self {
        let mut p = LaurentPoly { n: c.n(), rank: lambda.len(), terms: BTreeMap::new() };
        if !c.is_zero() {
            p.terms.insert(lambda, c);
        }
        p
    }

    /// `z^lambda` with unit coefficient.
    pub fn z_pow(n: u32, lambda: ExponentVec) -> Self {
        Self::monomial(lambda, GaussRing::new(n).one())
    }

    /// The variable `z_i` (1-based) raised to `e`.
    pub fn var_pow(n: u32, rank: usize, i: usize, e: i32) -> Self {
        let mut lam = vec![0; rank];
        lam[i - 1] = e;
        Self::z_pow(n, lam)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> GaussRing {
        GaussRing::new(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &GaussElem)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, lambda: &[i32]) -> GaussElem {
        self.terms.get(lambda).cloned().unwrap_or_else(|| self.ring().zero())
    }

    fn leading(&self) -> Option<(&ExponentVec, &GaussElem)> {
        self.terms.iter().next_back()
    }

    /// Coordinatewise minimum and maximum exponents of a nonzero polynomial.
    fn exponent_box(&self) -> (ExponentVec, ExponentVec) {
        let mut lo = vec![i32::MAX; self.rank];
        let mut hi = vec![i32::MIN; self.rank];
        for e in self.terms.keys() {
            for k in 0..self.rank {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        (lo, hi)
    }

    fn add_term(&mut self, e: ExponentVec, c: &GaussElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "coefficient ring mismatch");
        assert_eq!(self.rank, other.rank, "rank mismatch: {} vs {}", self.rank, other.rank);
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &GaussElem) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.n, self.rank);
        if c.is_zero() {
            return out;
        }
        for (e, x) in &self.terms {
            out.add_term(e.clone(), &(x * c));
        }
        out
    }

    /// Multiply by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (add_exp(e, shift), c.clone())).collect(),
        }
    }

    /// Apply `z_i -> z_{w(i)}`.
    pub fn weyl_act(&self, w: &Permutation) -> LaurentPoly {
        assert_eq!(w.rank(), self.rank, "permutation rank mismatch");
        let img = w.one_line();
        let mut out = LaurentPoly::zero(self.n, self.rank);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.rank];
            for (i, &x) in e.iter().enumerate() {
                f[img[i] - 1] = x;
            }
            out.terms.insert(f, c.clone());
        }
        out
    }

    /// Swap `z_i` and `z_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.n, self.rank);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.swap(i - 1, i);
            out.terms.insert(f, c.clone());
        }
        out
    }

    /// The exact quotient `p / q`, or `NotDivisible`.
    ///
    /// Leading-term elimination in descending lex order; the leading
    /// coefficient of `q` must be a unit (a monomial in `v` and the `g`'s).
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        self.check(q);
        let (q_lead_e, q_lead_c) = q.leading().ok_or_else(|| Error::Invalid("division by zero".into()))?;
        let q_lead_inv = q_lead_c
            .invert()
            .map_err(|_| Error::Invalid(format!("divisor leading coefficient {q_lead_c} is not a unit")))?;
        let mut quotient = LaurentPoly::zero(self.n, self.rank);
        if self.is_zero() {
            return Ok(quotient);
        }
        // Newton polytopes add, so each coordinate of a quotient exponent lies
        // in [min_k p - min_k q, max_k p - max_k q]; a finite box, so the
        // lex-descending elimination terminates.
        let (p_lo, p_hi) = self.exponent_box();
        let (q_lo, q_hi) = q.exponent_box();
        let lo = sub_exp(&p_lo, &q_lo);
        let hi = sub_exp(&p_hi, &q_hi);
        let mut rem = self.clone();
        while let Some((e, c)) = rem.leading() {
            let t_e = sub_exp(e, q_lead_e);
            if (0..self.rank).any(|k| t_e[k] < lo[k] || t_e[k] > hi[k]) {
                return Err(Error::not_divisible(format!("({self}) / ({q})")));
            }
            let t_c = c * &q_lead_inv;
            let t = LaurentPoly::monomial(t_e, t_c);
            rem = &rem - &(&t * q);
            quotient = &quotient + &t;
        }
        Ok(quotient)
    }

    /// Full numeric evaluation.
    pub fn specialize_z(&self, z_vals: &[BigRational], v_val: &BigRational, g_vals: &GaussValues) -> Result<BigRational> {
        g_vals.check(self.n, v_val)?;
        if z_vals.len() != self.rank {
            return Err(Error::Invalid(format!("expected {} z-values, got {}", self.rank, z_vals.len())));
        }
        if z_vals.iter().any(num::Zero::is_zero) {
            return Err(Error::Invalid("z-values must be nonzero".into()));
        }
        Ok(self.specialize_unchecked(z_vals, v_val, g_vals))
    }

    pub fn specialize_unchecked(&self, z_vals: &[BigRational], v_val: &BigRational, g_vals: &GaussValues) -> BigRational {
        let mut acc = BigRational::from_integer(0.into());
        for (e, c) in &self.terms {
            let mut t = c.specialize_unchecked(v_val, g_vals);
            for (z, &k) in z_vals.iter().zip(e) {
                let zk = num::pow::pow(z.clone(), k.unsigned_abs() as usize);
                if k >= 0 {
                    t *= zk;
                } else {
                    t /= zk;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = LaurentJson {
            rank: self.rank,
            n: self.n,
            terms: self.terms().map(|(e, c)| LaurentTermJson { z_exp: e.clone(), coeff: c.to_json() }).collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LaurentPoly> {
        let j: LaurentJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = LaurentPoly::zero(j.n, j.rank);
        for t in j.terms {
            if t.z_exp.len() != j.rank {
                return Err(Error::Parse("exponent length does not match rank".into()));
            }
            let c = GaussElem::from_json(&t.coeff)?;
            if c.n() != j.n {
                return Err(Error::Parse("coefficient ring mismatch".into()));
            }
            p.add_term(t.z_exp, &c);
        }
        Ok(p)
    }

    /// Parse the canonical text form, e.g. `"(1 + -v)*z1 + g[1]*z1^-1*z2"`.
    pub fn parse(n: u32, rank: usize, s: &str) -> Result<LaurentPoly> {
        let ring = GaussRing::new(n);
        let mut out = LaurentPoly::zero(n, rank);
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for term in split_top_level(s, " + ") {
            let term = term.trim();
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) if !rest.starts_with(|c: char| c.is_ascii_digit()) => (true, rest),
                _ => (false, term),
            };
            let mut coeff = ring.one();
            let mut lam = vec![0; rank];
            for factor in split_top_level(body, "*") {
                if let Some(inner) = factor.strip_prefix('(').and_then(|f| f.strip_suffix(')')) {
                    coeff = &coeff * &GaussElem::parse(n, inner)?;
                } else if let Some(var) = factor.strip_prefix('z') {
                    let (idx, e) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
                    if idx == 0 || idx > rank {
                        return Err(Error::Parse(format!("variable `{factor}` out of range for rank {rank}")));
                    }
                    lam[idx - 1] += e;
                } else {
                    coeff = &coeff * &parse_gauss_factor(&ring, factor)?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(lam, &coeff);
        }
        Ok(out)
    }
}

fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            parts.push(&s[start..i]);
            i += sep.len();
            start = i;
            continue;
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

#[derive(Serialize, Deserialize)]
struct LaurentTermJson {
    z_exp: Vec<i32>,
    coeff: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    rank: usize,
    n: u32,
    terms: Vec<LaurentTermJson>,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, k) })
                .collect();
            let vars = vars.join("*");
            match (c.fmt_as_factor(), vars.is_empty()) {
                (FactorForm::One, true) => write!(f, "1")?,
                (FactorForm::MinusOne, true) => write!(f, "-1")?,
                (FactorForm::Plain(s) | FactorForm::Paren(s), true) => {
                    // A bare constant needs no parentheses.
                    let s = if c.is_compound() { c.to_string() } else { s };
                    write!(f, "{s}")?
                }
                (FactorForm::One, false) => write!(f, "{vars}")?,
                (FactorForm::MinusOne, false) => write!(f, "-{vars}")?,
                (FactorForm::Plain(s) | FactorForm::Paren(s), false) => write!(f, "{s}*{vars}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[n={}, r={}]({})", self.n, self.rank, self)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &(-c.clone()));
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = LaurentPoly::zero(self.n, self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(ea, eb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

/// A formal quotient `num / den` of Laurent polynomials.
#[derive(Clone, Debug)]
pub struct RationalLaurent {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalLaurent {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalLaurent { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.n(), p.rank());
        RationalLaurent { num: p, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn weyl_act(&self, w: &Permutation) -> Self {
        RationalLaurent { num: self.num.weyl_act(w), den: self.den.weyl_act(w) }
    }

    pub fn swap_vars(&self, i: usize) -> Self {
        RationalLaurent { num: self.num.swap_vars(i), den: self.den.swap_vars(i) }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        RationalLaurent { num: &self.num * p, den: self.den.clone() }
    }

    /// Reduce to a Laurent polynomial by exact division.
    pub fn reduce(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }
}

impl PartialEq for RationalLaurent {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a> Add<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, rhs: &RationalLaurent) -> RationalLaurent {
        if self.den == rhs.den {
            return RationalLaurent { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        RationalLaurent {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a> Sub<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn sub(self, rhs: &RationalLaurent) -> RationalLaurent {
        let neg = RationalLaurent { num: -rhs.num.clone(), den: rhs.den.clone() };
        self + &neg
    }
}

impl<'a> Mul<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn mul(self, rhs: &RationalLaurent) -> RationalLaurent {
        RationalLaurent { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl fmt::Display for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_text() {
        let r = GaussRing::new(2);
        assert_eq!(LaurentPoly::monomial(vec![0, 0], r.one()).to_string(), "1");
        assert_eq!(LaurentPoly::monomial(vec![3, 2, 0], r.v()).to_string(), "v*z1^3*z2^2");
        assert_eq!(LaurentPoly::monomial(vec![-1, 1], r.gauss_symbol(1)).to_string(), "g[1]*z1^-1*z2");
        assert_eq!(LaurentPoly::zero(2, 2).to_string(), "0");
        let p = LaurentPoly::monomial(vec![1, 0], r.one_minus_v());
        assert_eq!(p.to_string(), "(1 + -v)*z1");
        assert_eq!(LaurentPoly::constant(r.one_minus_v(), 2).to_string(), "1 + -v");
    }

    #[test]
    fn text_round_trip() {
        let r = GaussRing::new(3);
        let p = &(&LaurentPoly::monomial(vec![1, 0], r.one_minus_v())
            + &LaurentPoly::monomial(vec![-1, 2], r.gauss_symbol(2).scale(&BigRational::new((-3).into(), 2.into()))))
            + &LaurentPoly::monomial(vec![0, 0], r.int(-1));
        let s = p.to_string();
        assert_eq!(LaurentPoly::parse(3, 2, &s).unwrap(), p, "{s}");
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn weyl_action_examples() {
        let s1 = Permutation::simple(2, 1);
        let z1 = LaurentPoly::var_pow(1, 2, 1, 1);
        assert_eq!(z1.weyl_act(&s1), LaurentPoly::var_pow(1, 2, 2, 1));
        let p = LaurentPoly::z_pow(1, vec![3, 2]);
        assert_eq!(p.weyl_act(&s1), LaurentPoly::z_pow(1, vec![2, 3]));
        assert_eq!(p.weyl_act(&Permutation::identity(2)), p);
    }

    #[test]
    fn exact_division_examples() {
        let n = 2;
        let one = LaurentPoly::one(n, 2);
        let num = &LaurentPoly::var_pow(n, 2, 1, 4) - &one;
        let den = &LaurentPoly::var_pow(n, 2, 1, 2) - &one;
        assert_eq!(num.exact_div(&den).unwrap(), &LaurentPoly::var_pow(n, 2, 1, 2) + &one);
        let a = &LaurentPoly::var_pow(n, 2, 1, 1) - &LaurentPoly::var_pow(n, 2, 2, 1);
        let b = &LaurentPoly::var_pow(n, 2, 1, 1) + &LaurentPoly::var_pow(n, 2, 2, 1);
        assert!(matches!(a.exact_div(&b), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn specialization_examples() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let r = GaussRing::new(2);
        let g = GaussValues::new(2, q(1, 9), [(1, q(-1, 3))].into_iter().collect());
        let p = LaurentPoly::monomial(vec![0, 1], r.gauss_symbol(1));
        assert_eq!(p.specialize_z(&[q(5, 1), q(7, 1)], &q(1, 9), &g).unwrap(), q(-7, 3));
        let p = LaurentPoly::z_pow(2, vec![1, 1]);
        assert_eq!(p.specialize_z(&[q(2, 1), q(3, 1)], &q(1, 9), &g).unwrap(), q(6, 1));
    }
}
