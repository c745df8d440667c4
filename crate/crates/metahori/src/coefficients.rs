//! The coefficient ring `Q[v, v^-1, g(1), ..., g(n-1)]` modulo the Gauss-sum
//! relations `g(0) = -v` and `g(a) g(n-a) = v`.
//!
//! Elements are kept in a confluent normal form, so structural equality is
//! ring equality:
//!
//! * `g(0)` never appears as a symbol;
//! * for `a != n - a`, at most one of `g(a)`, `g(n-a)` occurs in a monomial;
//! * for even `n`, `g(n/2)` occurs with exponent at most one.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Least nonnegative residue of `a` modulo `n`.
pub(crate) fn residue(a: i64, n: u32) -> u32 {
    a.rem_euclid(i64::from(n)) as u32
}

/// A monomial `v^v_exp * prod g(a)^g_exp[a-1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussMonomial {
    pub v_exp: i32,
    /// Exponent of `g(a)` stored at index `a - 1`.
    pub g_exp: Vec<u32>,
}

impl GaussMonomial {
    fn one(n: u32) -> Self {
        GaussMonomial { v_exp: 0, g_exp: vec![0; n.saturating_sub(1) as usize] }
    }

    fn is_one(&self) -> bool {
        self.v_exp == 0 && self.g_exp.iter().all(|&e| e == 0)
    }

    /// Rewrite opposite pairs to powers of `v`. Returns whether the input was
    /// already normal.
    fn normalize(&mut self, n: u32) -> bool {
        let mut changed = false;
        for a in 1..n {
            let b = n - a;
            let (ia, ib) = ((a - 1) as usize, (b - 1) as usize);
            if a < b {
                let m = self.g_exp[ia].min(self.g_exp[ib]);
                if m > 0 {
                    self.g_exp[ia] -= m;
                    self.g_exp[ib] -= m;
                    self.v_exp += m as i32;
                    changed = true;
                }
            } else if a == b && self.g_exp[ia] >= 2 {
                let m = self.g_exp[ia] / 2;
                self.g_exp[ia] -= 2 * m;
                self.v_exp += m as i32;
                changed = true;
            }
        }
        !changed
    }

    /// Whether the normal-form invariants hold.
    pub fn is_normal(&self, n: u32) -> bool {
        let mut m = self.clone();
        m.g_exp.len() == n.saturating_sub(1) as usize && m.normalize(n)
    }

    fn mul(&self, other: &Self, n: u32) -> Self {
        let mut m = GaussMonomial {
            v_exp: self.v_exp + other.v_exp,
            g_exp: self.g_exp.iter().zip(&other.g_exp).map(|(a, b)| a + b).collect(),
        };
        m.normalize(n);
        m
    }
}

/// An element of the coefficient ring for a fixed cover degree `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussElem {
    n: u32,
    terms: BTreeMap<GaussMonomial, BigRational>,
}

/// Factory for elements of the ring with a fixed `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussRing {
    pub n: u32,
}

impl GaussRing {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "cover degree must be positive");
        GaussRing { n }
    }

    pub fn zero(&self) -> GaussElem {
        GaussElem { n: self.n, terms: BTreeMap::new() }
    }

    pub fn one(&self) -> GaussElem {
        self.rational(BigRational::one())
    }

    pub fn int(&self, k: i64) -> GaussElem {
        self.rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn rational(&self, q: BigRational) -> GaussElem {
        GaussElem::from_monomial(self.n, GaussMonomial::one(self.n), q)
    }

    /// `v^k`.
    pub fn v_pow(&self, k: i32) -> GaussElem {
        let mut m = GaussMonomial::one(self.n);
        m.v_exp = k;
        GaussElem::from_monomial(self.n, m, BigRational::one())
    }

    pub fn v(&self) -> GaussElem {
        self.v_pow(1)
    }

    /// `1 - v`, which shows up in most weights.
    pub fn one_minus_v(&self) -> GaussElem {
        &self.one() - &self.v()
    }

    /// The Gauss-sum symbol `g(a)`; `g(0)` is `-v`.
    pub fn gauss_symbol(&self, a: i64) -> GaussElem {
        let a = residue(a, self.n);
        if a == 0 {
            return -self.v();
        }
        let mut m = GaussMonomial::one(self.n);
        m.g_exp[(a - 1) as usize] = 1;
        GaussElem::from_monomial(self.n, m, BigRational::one())
    }

    /// Build an element from raw terms, normalizing each monomial.
    pub fn from_terms<I>(&self, terms: I) -> Result<GaussElem>
    where
        I: IntoIterator<Item = (GaussMonomial, BigRational)>,
    {
        let mut out = self.zero();
        for (mut m, c) in terms {
            if m.g_exp.len() != self.n.saturating_sub(1) as usize {
                return Err(Error::Parse(format!(
                    "monomial has {} g-exponents, ring n={} needs {}",
                    m.g_exp.len(),
                    self.n,
                    self.n.saturating_sub(1)
                )));
            }
            m.normalize(self.n);
            out.add_term(m, c);
        }
        Ok(out)
    }
}

impl GaussElem {
    fn from_monomial(n: u32, m: GaussMonomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GaussElem { n, terms }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ring(&self) -> GaussRing {
        GaussRing { n: self.n }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&GaussMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Whether the element is a single monomial with nonzero coefficient.
    pub fn as_monomial(&self) -> Option<(&GaussMonomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// A rational constant, if the element is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    fn add_term(&mut self, m: GaussMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.n, other.n, "coefficient ring mismatch: n={} vs n={}", self.n, other.n);
    }

    pub fn scale(&self, q: &BigRational) -> GaussElem {
        if q.is_zero() {
            return self.ring().zero();
        }
        GaussElem {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Multiply by `v^k`; exact and cheap.
    pub fn shift_v(&self, k: i32) -> GaussElem {
        GaussElem {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.v_exp += k;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> GaussElem {
        let mut acc = self.ring().one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a nonzero monomial, using `g(a)^-1 = v^-1 g(n-a)`.
    pub fn invert(&self) -> Result<GaussElem> {
        let (m, c) = self.as_monomial().ok_or_else(|| {
            Error::NotInvertible(if self.is_zero() {
                "zero".to_string()
            } else {
                format!("non-monomial {self}")
            })
        })?;
        let n = self.n;
        let mut inv = GaussMonomial::one(n);
        inv.v_exp = -m.v_exp;
        for a in 1..n {
            let e = m.g_exp[(a - 1) as usize];
            if e > 0 {
                inv.v_exp -= e as i32;
                inv.g_exp[(n - a - 1) as usize] += e;
            }
        }
        inv.normalize(n);
        Ok(GaussElem::from_monomial(n, inv, c.recip()))
    }

    /// Evaluate at `v = v_val` and `g(a) = g_vals[a]`, after checking that the
    /// values satisfy the ring relations.
    pub fn specialize_numeric(&self, v_val: &BigRational, g_vals: &GaussValues) -> Result<BigRational> {
        g_vals.check(self.n, v_val)?;
        Ok(self.specialize_unchecked(v_val, g_vals))
    }

    /// As [`specialize_numeric`](Self::specialize_numeric) without the
    /// admissibility check; for hot loops over pre-validated values.
    pub fn specialize_unchecked(&self, v_val: &BigRational, g_vals: &GaussValues) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            t *= pow_rational(v_val, m.v_exp);
            for (idx, &e) in m.g_exp.iter().enumerate() {
                if e > 0 {
                    t *= pow_rational(&g_vals.get(idx as u32 + 1), e as i32);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GaussElemJson::from(self)).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<GaussElem> {
        let j: GaussElemJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        j.into_elem()
    }

    /// Parse the canonical text form, e.g. `"1 + -v"` or `"-3/2*v^-1*g[1]^2"`.
    pub fn parse(n: u32, s: &str) -> Result<GaussElem> {
        let ring = GaussRing::new(n);
        let s = s.trim();
        if s == "0" {
            return Ok(ring.zero());
        }
        let mut out = ring.zero();
        for term in s.split(" + ") {
            let t = parse_gauss_term(&ring, term.trim())?;
            out = &out + &t;
        }
        Ok(out)
    }

    /// Whether this element prints with more than one term (and so needs
    /// parentheses as a factor).
    pub(crate) fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }

    /// Canonical text of a single term, or `None` for the bare unit (`1`).
    pub(crate) fn fmt_as_factor(&self) -> FactorForm {
        if self.is_compound() {
            return FactorForm::Paren(format!("({self})"));
        }
        match self.terms.iter().next() {
            None => FactorForm::Plain("0".into()),
            Some((m, c)) if m.is_one() => {
                if c.is_one() {
                    FactorForm::One
                } else if (-c).is_one() {
                    FactorForm::MinusOne
                } else {
                    FactorForm::Plain(fmt_rational(c))
                }
            }
            Some(_) => FactorForm::Plain(self.to_string()),
        }
    }
}

pub(crate) enum FactorForm {
    One,
    MinusOne,
    Plain(String),
    Paren(String),
}

fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_gauss_term(ring: &GaussRing, term: &str) -> Result<GaussElem> {
    let (neg, body) = match term.strip_prefix('-') {
        Some(rest) if !rest.starts_with(|c: char| c.is_ascii_digit()) => (true, rest),
        _ => (false, term),
    };
    let mut acc = ring.one();
    for factor in body.split('*') {
        acc = &acc * &parse_gauss_factor(ring, factor)?;
    }
    Ok(if neg { -acc } else { acc })
}

pub(crate) fn parse_gauss_factor(ring: &GaussRing, f: &str) -> Result<GaussElem> {
    let bad = || Error::Parse(format!("bad coefficient factor `{f}`"));
    let (base, exp) = match f.split_once('^') {
        Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
        None => (f, 1),
    };
    if base == "v" {
        return Ok(ring.v_pow(exp));
    }
    if let Some(inner) = base.strip_prefix("g[").and_then(|s| s.strip_suffix(']')) {
        let a: i64 = inner.parse().map_err(|_| bad())?;
        if exp < 0 {
            return Err(bad());
        }
        return Ok(ring.gauss_symbol(a).pow(exp as u32));
    }
    if f.contains('^') {
        return Err(bad());
    }
    Ok(ring.rational(parse_rational(base)?))
}

impl fmt::Display for GaussElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if m.v_exp == 1 {
                factors.push("v".into());
            } else if m.v_exp != 0 {
                factors.push(format!("v^{}", m.v_exp));
            }
            for (idx, &e) in m.g_exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("g[{}]", idx + 1)),
                    _ => factors.push(format!("g[{}]^{}", idx + 1, e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(c))?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else if (-c).is_one() {
                write!(f, "-{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(c), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GaussElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussElem[n={}]({})", self.n, self)
    }
}

impl<'a> Add<&'a GaussElem> for &'a GaussElem {
    type Output = GaussElem;
    fn add(self, rhs: &GaussElem) -> GaussElem {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl AddAssign<&GaussElem> for GaussElem {
    fn add_assign(&mut self, rhs: &GaussElem) {
        self.check_ring(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> Sub<&'a GaussElem> for &'a GaussElem {
    type Output = GaussElem;
    fn sub(self, rhs: &GaussElem) -> GaussElem {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a GaussElem> for &'a GaussElem {
    type Output = GaussElem;
    fn mul(self, rhs: &GaussElem) -> GaussElem {
        self.check_ring(rhs);
        let mut out = self.ring().zero();
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb, self.n), ca * cb);
            }
        }
        out
    }
}

impl Neg for GaussElem {
    type Output = GaussElem;
    fn neg(mut self) -> GaussElem {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

/// Numeric values for `g(1), ..., g(n-1)`; `g(0)` is implied by `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussValues {
    pub n: u32,
    pub v: BigRational,
    values: HashMap<u32, BigRational>,
}

impl GaussValues {
    pub fn new(n: u32, v: BigRational, values: HashMap<u32, BigRational>) -> Self {
        GaussValues { n, v, values }
    }

    /// Value of `g(a)` for any integer `a`.
    pub fn get(&self, a: u32) -> BigRational {
        let a = a % self.n;
        if a == 0 {
            -self.v.clone()
        } else {
            self.values.get(&a).cloned().unwrap_or_else(BigRational::zero)
        }
    }

    /// Check the ring relations at `v = v_val`.
    pub fn check(&self, n: u32, v_val: &BigRational) -> Result<()> {
        if v_val.is_zero() {
            return Err(Error::Inadmissible("v must be nonzero".into()));
        }
        if self.n != n || &self.v != v_val {
            return Err(Error::Inadmissible(format!(
                "values prepared for n={}, v={} used with n={}, v={}",
                self.n,
                fmt_rational(&self.v),
                n,
                fmt_rational(v_val)
            )));
        }
        for a in 1..n {
            let prod = self.get(a) * self.get(n - a);
            if &prod != v_val {
                return Err(Error::Inadmissible(format!(
                    "g({a})*g({}) = {} but v = {}",
                    n - a,
                    fmt_rational(&prod),
                    fmt_rational(v_val)
                )));
            }
        }
        Ok(())
    }

    /// Random admissible values: `v = t^2` and for each pair `a < n-a` a random
    /// `g(a)` with `g(n-a) = v / g(a)`; for even `n`, `g(n/2) = ±t`.
    pub fn random<R: rand::Rng>(n: u32, rng: &mut R) -> Self {
        let small = |rng: &mut R| -> BigRational {
            let mut p: i64 = rng.gen_range(1..=9);
            if rng.gen_bool(0.5) {
                p = -p;
            }
            let q: i64 = rng.gen_range(1..=9);
            BigRational::new(BigInt::from(p), BigInt::from(q))
        };
        let t = small(rng);
        let v = &t * &t;
        let mut values = HashMap::new();
        for a in 1..n {
            let b = n - a;
            if a < b {
                let ga = small(rng);
                values.insert(b, &v / &ga);
                values.insert(a, ga);
            } else if a == b {
                values.insert(a, if rng.gen_bool(0.5) { t.clone() } else { -t.clone() });
            }
        }
        GaussValues { n, v, values }
    }
}

#[derive(Serialize, Deserialize)]
struct GaussTermJson {
    coeff: String,
    v: i32,
    g: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct GaussElemJson {
    n: u32,
    terms: Vec<GaussTermJson>,
}

impl From<&GaussElem> for GaussElemJson {
    fn from(x: &GaussElem) -> Self {
        GaussElemJson {
            n: x.n,
            terms: x
                .terms
                .iter()
                .map(|(m, c)| GaussTermJson { coeff: fmt_rational(c), v: m.v_exp, g: m.g_exp.clone() })
                .collect(),
        }
    }
}

impl GaussElemJson {
    fn into_elem(self) -> Result<GaussElem> {
        let ring = GaussRing::new(self.n);
        let mut terms = Vec::new();
        for t in self.terms {
            terms.push((GaussMonomial { v_exp: t.v, g_exp: t.g }, parse_rational(&t.coeff)?));
        }
        ring.from_terms(terms)
    }
}

/// Sign helper used by weight tables: `(-v)^k`.
pub(crate) fn minus_v_pow(ring: &GaussRing, k: u32) -> GaussElem {
    let p = ring.v_pow(k as i32);
    if k % 2 == 1 {
        -p
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn g_zero_is_minus_v() {
        let r = GaussRing::new(3);
        assert_eq!(r.gauss_symbol(0), -r.v());
        assert_eq!(r.gauss_symbol(0).to_string(), "-v");
        assert_eq!(r.gauss_symbol(3), -r.v());
    }

    #[test]
    fn opposite_pairs_reduce() {
        let r = GaussRing::new(3);
        assert_eq!(&r.gauss_symbol(1) * &r.gauss_symbol(2), r.v());
        let sq = &r.gauss_symbol(1) * &r.gauss_symbol(1);
        assert_eq!(sq.to_string(), "g[1]^2");
        let r2 = GaussRing::new(2);
        assert_eq!(&r2.gauss_symbol(1) * &r2.gauss_symbol(1), r2.v());
        assert_eq!(r.gauss_symbol(-1), r.gauss_symbol(2));
    }

    #[test]
    fn inverses() {
        let r = GaussRing::new(3);
        assert_eq!(r.v().invert().unwrap(), r.v_pow(-1));
        let inv = r.gauss_symbol(1).invert().unwrap();
        assert_eq!(inv.to_string(), "v^-1*g[2]");
        assert!((&inv * &r.gauss_symbol(1)).is_one());
        assert_eq!((-r.v()).invert().unwrap(), -r.v_pow(-1));
        assert!(r.zero().invert().is_err());
        assert!(r.one_minus_v().invert().is_err());
    }

    #[test]
    fn canonical_text() {
        let r = GaussRing::new(3);
        let x = (&r.v_pow(-1) * &r.gauss_symbol(1).pow(2)).scale(&q(-3, 2));
        assert_eq!(x.to_string(), "-3/2*v^-1*g[1]^2");
        assert_eq!(r.one_minus_v().to_string(), "1 + -v");
        assert_eq!(GaussElem::parse(3, "-3/2*v^-1*g[1]^2").unwrap(), x);
        assert_eq!(GaussElem::parse(3, "1 + -v").unwrap(), r.one_minus_v());
        assert_eq!(GaussElem::parse(3, "-2").unwrap(), r.int(-2));
    }

    #[test]
    fn specialization_examples() {
        let r3 = GaussRing::new(3);
        let v = q(1, 4);
        let g = GaussValues::new(3, v.clone(), [(1, q(1, 2)), (2, q(1, 2))].into_iter().collect());
        let x = &r3.gauss_symbol(1) * &r3.gauss_symbol(2);
        assert_eq!(x.specialize_numeric(&v, &g).unwrap(), q(1, 4));

        let r2 = GaussRing::new(2);
        let v = q(1, 9);
        let g = GaussValues::new(2, v.clone(), [(1, q(-1, 3))].into_iter().collect());
        let x = &r2.v() + &r2.gauss_symbol(1);
        assert_eq!(x.specialize_numeric(&v, &g).unwrap(), q(-2, 9));
        assert_eq!(r2.zero().specialize_numeric(&v, &g).unwrap(), q(0, 1));

        let bad = GaussValues::new(2, v.clone(), [(1, q(1, 2))].into_iter().collect());
        assert!(x.specialize_numeric(&v, &bad).is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = GaussRing::new(4);
        let x = &(&r.gauss_symbol(1) * &r.gauss_symbol(2)) + &r.int(-5).shift_v(-2);
        let back = GaussElem::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
    }
}
