//! Vertex weights of the monochrome, color-fused and fully-fused models.
//!
//! Every vertex is described by its transitions: given the spins on the top
//! and left edges, the admissible `(bottom, right)` pairs with their weights.
//! Vertical spins are bitmasks:
//!
//! * monochrome column `(c, w)`: bit 0 set iff the edge carries `cw`;
//! * color-fused column of scolor `w`: bit `c - 1` for each color `c` present;
//! * fully-fused column: bit `x * r + (c - 1)` for each pair `c w_x` present.

use std::collections::BTreeMap;
use std::fmt;

use crate::coefficients::{minus_v_pow, GaussElem, GaussRing};
use crate::laurent::LaurentPoly;

/// A horizontal spin: a color `c_1..c_r` or a scolor `w_0..w_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HSpin {
    Color(u8),
    Scolor(u8),
}

impl HSpin {
    /// All `r + n` horizontal spins: colors first, then scolors.
    pub fn all(n: u32, r: usize) -> Vec<HSpin> {
        (1..=r as u8).map(HSpin::Color).chain((0..n as u8).map(HSpin::Scolor)).collect()
    }

    pub fn is_color(self) -> bool {
        matches!(self, HSpin::Color(_))
    }
}

impl fmt::Display for HSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HSpin::Color(c) => write!(f, "c{c}"),
            HSpin::Scolor(x) => write!(f, "w{x}"),
        }
    }
}

/// A weight `coeff * z^z_pow` in the row's spectral parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWeight {
    pub coeff: GaussElem,
    pub z_pow: u32,
}

impl VertexWeight {
    pub fn one(ring: &GaussRing) -> Self {
        VertexWeight { coeff: ring.one(), z_pow: 0 }
    }

    pub fn mul(&self, other: &Self) -> Self {
        VertexWeight { coeff: &self.coeff * &other.coeff, z_pow: self.z_pow + other.z_pow }
    }

    /// As a Laurent polynomial in `z_row` (1-based) of the given rank.
    pub fn to_poly(&self, rank: usize, row: usize) -> LaurentPoly {
        let mut e = vec![0; rank];
        e[row - 1] = self.z_pow as i32;
        LaurentPoly::monomial(e, self.coeff.clone())
    }
}

/// One admissible continuation of a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub bottom: u64,
    pub right: HSpin,
    pub weight: VertexWeight,
}

fn w(coeff: GaussElem, z_pow: u32) -> VertexWeight {
    VertexWeight { coeff, z_pow }
}

/// Transitions at the monochrome vertex `T^{cw}`.
pub fn monochrome_transitions(ring: &GaussRing, c: u8, scolor: u8, top: u64, left: HSpin) -> Vec<Transition> {
    let mut out = Vec::with_capacity(2);
    match (top != 0, left) {
        // a1
        (false, HSpin::Scolor(_)) => out.push(Transition { bottom: 0, right: left, weight: w(ring.one(), 0) }),
        (false, HSpin::Color(a)) => {
            // b2
            let z = u32::from(a == c);
            out.push(Transition { bottom: 0, right: left, weight: w(ring.one(), z) });
            // c1
            if a == c {
                out.push(Transition { bottom: 1, right: HSpin::Scolor(scolor), weight: w(ring.one_minus_v(), 1) });
            }
        }
        // a2
        (true, HSpin::Color(a)) => {
            let weight = if c > a {
                w(ring.v(), 0)
            } else if c == a {
                w(ring.one(), 1)
            } else {
                w(ring.one(), 0)
            };
            out.push(Transition { bottom: 1, right: left, weight });
        }
        (true, HSpin::Scolor(y)) => {
            // b1
            let g = ring.gauss_symbol(i64::from(y) - i64::from(scolor));
            out.push(Transition { bottom: 1, right: left, weight: w(g, 0) });
            // c2
            if y == scolor {
                out.push(Transition { bottom: 0, right: HSpin::Color(c), weight: w(ring.one(), 0) });
            }
        }
    }
    out
}

/// Weight of a full monochrome configuration (zero if not in the table).
pub fn monochrome_weight(ring: &GaussRing, c: u8, scolor: u8, top: u64, left: HSpin, bottom: u64, right: HSpin) -> VertexWeight {
    monochrome_transitions(ring, c, scolor, top, left)
        .into_iter()
        .find(|t| t.bottom == bottom && t.right == right)
        .map(|t| t.weight)
        .unwrap_or(VertexWeight { coeff: ring.zero(), z_pow: 0 })
}

fn count_bits(mask: u64, lo: u8, hi: u8) -> u32 {
    // colors c with lo < c < hi present in mask (bit c-1)
    (lo + 1..hi).filter(|&c| mask & (1 << (c - 1)) != 0).count() as u32
}

/// Transitions at the color-fused vertex `T^w` for `r` colors, taken
/// directly from the fused weight table (not by multiplying out).
pub fn color_fused_transitions(ring: &GaussRing, r: usize, scolor: u8, top: u64, left: HSpin) -> Vec<Transition> {
    let r8 = r as u8;
    let has = |c: u8| top & (1 << (c - 1)) != 0;
    let mut out = Vec::new();
    match left {
        HSpin::Color(i) => {
            // the color passes straight through
            out.push(Transition {
                bottom: top,
                right: left,
                weight: w(ring.v_pow(count_bits(top, i, r8 + 1) as i32), 1),
            });
            if !has(i) {
                // it turns down here and a larger color c_j leaves right
                for j in i + 1..=r8 {
                    if has(j) {
                        let coeff = &(&ring.one_minus_v() * &minus_v_pow(ring, count_bits(top, i, j)))
                            * &ring.v_pow(count_bits(top, j, r8 + 1) as i32);
                        out.push(Transition {
                            bottom: (top & !(1 << (j - 1))) | (1 << (i - 1)),
                            right: HSpin::Color(j),
                            weight: w(coeff, 1),
                        });
                    }
                }
                // it turns down and the scolor w leaves right
                let coeff = &ring.one_minus_v() * &minus_v_pow(ring, count_bits(top, i, r8 + 1));
                out.push(Transition { bottom: top | (1 << (i - 1)), right: HSpin::Scolor(scolor), weight: w(coeff, 1) });
            }
        }
        HSpin::Scolor(y) => {
            let g = ring.gauss_symbol(i64::from(y) - i64::from(scolor));
            out.push(Transition { bottom: top, right: left, weight: w(g.pow(top.count_ones()), 0) });
            if y == scolor {
                for i in 1..=r8 {
                    if has(i) {
                        let coeff = &minus_v_pow(ring, count_bits(top, 0, i))
                            * &ring.v_pow(count_bits(top, i, r8 + 1) as i32);
                        out.push(Transition { bottom: top & !(1 << (i - 1)), right: HSpin::Color(i), weight: w(coeff, 0) });
                    }
                }
            }
        }
    }
    out
}

/// Color-fused transitions computed by multiplying the `r` monochrome
/// vertices `T^{c_1 w}, ..., T^{c_r w}` and summing over interior edges.
pub fn color_fused_by_product(ring: &GaussRing, r: usize, scolor: u8, top: u64, left: HSpin) -> BTreeMap<(u64, HSpin), VertexWeight> {
    let mut acc: Vec<(u64, HSpin, VertexWeight)> = vec![(0, left, VertexWeight::one(ring))];
    for c in 1..=r as u8 {
        let bit = 1u64 << (c - 1);
        let t = u64::from(top & bit != 0);
        let mut next = Vec::new();
        for (bottom, h, wt) in &acc {
            for tr in monochrome_transitions(ring, c, scolor, t, *h) {
                next.push((bottom | if tr.bottom != 0 { bit } else { 0 }, tr.right, wt.mul(&tr.weight)));
            }
        }
        acc = next;
    }
    collect_weights(acc)
}

fn collect_weights(items: Vec<(u64, HSpin, VertexWeight)>) -> BTreeMap<(u64, HSpin), VertexWeight> {
    let mut out: BTreeMap<(u64, HSpin), VertexWeight> = BTreeMap::new();
    for (b, h, wt) in items {
        if wt.coeff.is_zero() {
            continue;
        }
        match out.get_mut(&(b, h)) {
            Some(prev) => {
                assert_eq!(prev.z_pow, wt.z_pow, "fused vertex weight is not homogeneous in z");
                prev.coeff += &wt.coeff;
            }
            None => {
                out.insert((b, h), wt);
            }
        }
    }
    out.retain(|_, wt| !wt.coeff.is_zero());
    out
}

/// Transitions at a fully-fused vertex: the color-fused vertices of
/// scolors `n-1, ..., 0` (left to right) multiplied out.
pub fn fully_fused_transitions(ring: &GaussRing, r: usize, top: u64, left: HSpin) -> Vec<Transition> {
    let n = ring.n;
    let slice_mask = (1u64 << r) - 1;
    let mut acc: Vec<(u64, HSpin, VertexWeight)> = vec![(0, left, VertexWeight::one(ring))];
    for x in (0..n).rev() {
        let shift = x as usize * r;
        let t = (top >> shift) & slice_mask;
        let mut next = Vec::new();
        for (bottom, h, wt) in &acc {
            for tr in color_fused_transitions(ring, r, x as u8, t, *h) {
                next.push((bottom | (tr.bottom << shift), tr.right, wt.mul(&tr.weight)));
            }
        }
        acc = next;
    }
    collect_weights(acc)
        .into_iter()
        .map(|((bottom, right), weight)| Transition { bottom, right, weight })
        .collect()
}
