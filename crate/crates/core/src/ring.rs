//! The ring R = F2 + vF2 + v^2F2 with v^3 = v.
//!
//! An element `a + vb + v^2c` is stored as its coefficient triple. The Gray
//! map sends it to `(a, b, a + c)`; Lee weight is the Hamming weight of that
//! image.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};
use core::str::FromStr;

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// An element `a + v*b + v^2*c` of R.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElem {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

/// Units, zero, and the remaining zero divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Zero,
    Unit,
    ZeroDivisor,
}

impl RingElem {
    pub const ZERO: RingElem = RingElem::new(false, false, false);
    pub const ONE: RingElem = RingElem::new(true, false, false);
    pub const V: RingElem = RingElem::new(false, true, false);
    pub const V2: RingElem = RingElem::new(false, false, true);
    pub const ONE_PLUS_V: RingElem = RingElem::new(true, true, false);
    pub const ONE_PLUS_V2: RingElem = RingElem::new(true, false, true);
    pub const V_PLUS_V2: RingElem = RingElem::new(false, true, true);
    pub const ONE_PLUS_V_PLUS_V2: RingElem = RingElem::new(true, true, true);

    pub const fn new(a: bool, b: bool, c: bool) -> Self {
        Self { a, b, c }
    }

    /// Decodes the 3-bit index `a | b << 1 | c << 2`.
    pub const fn from_index(i: u8) -> Self {
        Self::new(i & 1 != 0, i & 2 != 0, i & 4 != 0)
    }

    pub const fn index(self) -> u8 {
        self.a as u8 | (self.b as u8) << 1 | (self.c as u8) << 2
    }

    /// All eight elements, in index order.
    pub fn all() -> impl Iterator<Item = RingElem> {
        (0u8..8).map(RingElem::from_index)
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Component-wise XOR.
    pub const fn add(self, o: RingElem) -> RingElem {
        RingElem::new(self.a ^ o.a, self.b ^ o.b, self.c ^ o.c)
    }

    /// Product reduced with `v^3 = v`, `v^4 = v^2`:
    ///
    /// ```text
    /// a1a2 + v(a1b2 + b1a2 + b1c2 + c1b2) + v^2(a1c2 + b1b2 + c1a2 + c1c2)
    /// ```
    pub const fn mul(self, o: RingElem) -> RingElem {
        let (a1, b1, c1) = (self.a, self.b, self.c);
        let (a2, b2, c2) = (o.a, o.b, o.c);
        RingElem::new(
            a1 & a2,
            (a1 & b2) ^ (b1 & a2) ^ (b1 & c2) ^ (c1 & b2),
            (a1 & c2) ^ (b1 & b2) ^ (c1 & a2) ^ (c1 & c2),
        )
    }

    /// Units are exactly 1 and 1 + v + v^2.
    pub fn classify(self) -> Class {
        if self.is_zero() {
            Class::Zero
        } else if self == Self::ONE || self == Self::ONE_PLUS_V_PLUS_V2 {
            Class::Unit
        } else {
            Class::ZeroDivisor
        }
    }

    /// `{r * self : r in R}`, sorted by index.
    pub fn principal_ideal(self) -> Vec<RingElem> {
        let mut out: Vec<RingElem> = RingElem::all().map(|r| r.mul(self)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Lee weight from the published table.
    pub const fn lee_weight(self) -> u32 {
        match self.index() {
            0 => 0,             // 0
            1 => 2,             // 1
            2 => 1,             // v
            4 => 1,             // v^2
            3 => 3,             // 1+v
            5 => 1,             // 1+v^2
            6 => 2,             // v+v^2
            7 => 2,             // 1+v+v^2
            _ => unreachable!(),
        }
    }

    /// Gray image `(a, b, a + c)`.
    pub const fn gray(self) -> [bool; 3] {
        [self.a, self.b, self.a ^ self.c]
    }

    pub const fn gray_inverse(t: [bool; 3]) -> RingElem {
        RingElem::new(t[0], t[1], t[0] ^ t[2])
    }
}

impl Add for RingElem {
    type Output = RingElem;

    fn add(self, rhs: RingElem) -> RingElem {
        RingElem::add(self, rhs)
    }
}

impl Mul for RingElem {
    type Output = RingElem;

    fn mul(self, rhs: RingElem) -> RingElem {
        RingElem::mul(self, rhs)
    }
}

impl fmt::Display for RingElem {
    /// `0`, or a `+`-joined subset of `1`, `v`, `v^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (on, name) in [(self.a, "1"), (self.b, "v"), (self.c, "v^2")] {
            if on {
                if !first {
                    f.write_str("+")?;
                }
                f.write_str(name)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem({self})")
    }
}

impl FromStr for RingElem {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) form; repeated terms cancel.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if trimmed == "0" {
            return Ok(RingElem::ZERO);
        }
        let mut x = RingElem::ZERO;
        let mut pos = 0;
        for term in trimmed.split('+') {
            let t = match term {
                "1" => RingElem::ONE,
                "v" => RingElem::V,
                "v^2" => RingElem::V2,
                _ => {
                    return Err(Error::Parse {
                        position: pos,
                        message: alloc::format!("unknown ring term '{term}'"),
                    })
                }
            };
            x = x + t;
            pos += term.len() + 1;
        }
        Ok(x)
    }
}

/// A vector in R^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingVector(pub Vec<RingElem>);

impl RingVector {
    pub fn zeros(n: usize) -> Self {
        Self(alloc::vec![RingElem::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// `scalar * bits`, where `bits` is read as a 0/1 vector inside R^n.
    pub fn scaled_binary(scalar: RingElem, bits: &[bool]) -> Self {
        Self(
            bits.iter()
                .map(|&b| if b { scalar } else { RingElem::ZERO })
                .collect(),
        )
    }

    pub fn add(&self, other: &RingVector) -> Result<RingVector> {
        check_len(self.len(), other.len())?;
        Ok(RingVector(
            self.0.iter().zip(&other.0).map(|(x, y)| *x + *y).collect(),
        ))
    }

    pub fn scale(&self, r: RingElem) -> RingVector {
        RingVector(self.0.iter().map(|x| r * *x).collect())
    }

    /// `sum x_i y_i` over R.
    pub fn inner_product(&self, other: &RingVector) -> Result<RingElem> {
        check_len(self.len(), other.len())?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(RingElem::ZERO, |acc, (x, y)| acc + *x * *y))
    }

    pub fn lee_weight(&self) -> u32 {
        self.0.iter().map(|x| x.lee_weight()).sum()
    }

    /// Right cyclic shift `(r0, .., r_{n-1}) -> (r_{n-1}, r0, .., r_{n-2})`.
    pub fn sigma(&self) -> RingVector {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_right(1);
        }
        RingVector(v)
    }

    /// Gray image laid out blockwise: all `a_i`, then all `b_i`, then all
    /// `a_i + c_i`.
    pub fn gray(&self) -> BitVec {
        let n = self.len();
        let mut out = BitVec::zeros(3 * n);
        for (i, x) in self.0.iter().enumerate() {
            let [g0, g1, g2] = x.gray();
            out.set(i, g0);
            out.set(n + i, g1);
            out.set(2 * n + i, g2);
        }
        out
    }

    /// Inverse of [`RingVector::gray`].
    ///
    /// # Panics
    ///
    /// Panics if the length is not a multiple of 3.
    pub fn from_gray(bits: &BitVec) -> RingVector {
        assert_eq!(bits.len() % 3, 0, "Gray image length must be a multiple of 3");
        let n = bits.len() / 3;
        RingVector(
            (0..n)
                .map(|i| RingElem::gray_inverse([bits.get(i), bits.get(n + i), bits.get(2 * n + i)]))
                .collect(),
        )
    }

    /// Raw coefficient planes: all `a_i`, then all `b_i`, then all `c_i`.
    /// Unlike [`RingVector::gray`] this involves no change of coordinates.
    pub fn planes(&self) -> BitVec {
        let n = self.len();
        let mut out = BitVec::zeros(3 * n);
        for (i, x) in self.0.iter().enumerate() {
            out.set(i, x.a);
            out.set(n + i, x.b);
            out.set(2 * n + i, x.c);
        }
        out
    }

    pub fn from_planes(bits: &BitVec) -> RingVector {
        assert_eq!(bits.len() % 3, 0, "plane layout length must be a multiple of 3");
        let n = bits.len() / 3;
        RingVector(
            (0..n)
                .map(|i| RingElem::new(bits.get(i), bits.get(n + i), bits.get(2 * n + i)))
                .collect(),
        )
    }
}

impl From<Vec<RingElem>> for RingVector {
    fn from(v: Vec<RingElem>) -> Self {
        RingVector(v)
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingVector{self}")
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

/// Blockwise cyclic shift on `F2^(3n)`: each third is rotated right by one.
pub fn phi(bits: &BitVec) -> Result<BitVec> {
    if bits.len() % 3 != 0 {
        return Err(Error::LengthMismatch {
            expected: bits.len().next_multiple_of(3),
            found: bits.len(),
        });
    }
    Ok(bits.rotate_blocks_right(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn r(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    fn rv(items: &[&str]) -> RingVector {
        RingVector(items.iter().map(|s| r(s)).collect())
    }

    #[test]
    fn addition() {
        assert_eq!(r("v") + r("v"), RingElem::ZERO);
        assert_eq!(r("1") + r("v^2"), r("1+v^2"));
        assert_eq!(r("1+v") + r("v+v^2"), r("1+v^2"));
    }

    #[test]
    fn multiplication() {
        assert_eq!(r("v") * r("v^2"), r("v"));
        assert_eq!(r("1+v") * r("1+v^2"), r("1+v^2"));
        assert_eq!(r("1+v+v^2") * r("1+v+v^2"), RingElem::ONE);
    }

    #[test]
    fn multiplication_table_matches_polynomial_reduction() {
        // Reduce (a1 + b1 v + c1 v^2)(a2 + b2 v + c2 v^2) as a polynomial in v
        // of degree <= 4, then fold v^3 -> v and v^4 -> v^2.
        for x in RingElem::all() {
            for y in RingElem::all() {
                let p = [x.a, x.b, x.c];
                let q = [y.a, y.b, y.c];
                let mut prod = [false; 5];
                for i in 0..3 {
                    for j in 0..3 {
                        prod[i + j] ^= p[i] & q[j];
                    }
                }
                let expect = RingElem::new(prod[0], prod[1] ^ prod[3], prod[2] ^ prod[4]);
                assert_eq!(x * y, expect, "{x} * {y}");
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in RingElem::all() {
            assert_eq!(x * RingElem::ONE, x);
            for y in RingElem::all() {
                assert_eq!(x * y, y * x);
                for z in RingElem::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn classification() {
        assert_eq!(r("1+v+v^2").classify(), Class::Unit);
        assert_eq!(r("v").classify(), Class::ZeroDivisor);
        assert_eq!(RingElem::ZERO.classify(), Class::Zero);
        let units: Vec<_> = RingElem::all().filter(|x| x.classify() == Class::Unit).collect();
        assert_eq!(units, vec![RingElem::ONE, RingElem::ONE_PLUS_V_PLUS_V2]);
        for x in RingElem::all() {
            assert_eq!(x.classify() == Class::Unit, x.principal_ideal().len() == 8);
        }
    }

    #[test]
    fn principal_ideals() {
        let mut want = vec![r("0"), r("v"), r("v^2"), r("v+v^2")];
        want.sort();
        assert_eq!(r("v").principal_ideal(), want);
        assert_eq!(r("v^2").principal_ideal(), want);
        let mut want = vec![r("0"), r("1+v"), r("1+v^2"), r("v+v^2")];
        want.sort();
        assert_eq!(r("1+v").principal_ideal(), want);
        assert_eq!(r("1+v^2").principal_ideal(), vec![r("0"), r("1+v^2")]);
        assert_eq!(r("v+v^2").principal_ideal(), vec![r("0"), r("v+v^2")]);
        assert_eq!(r("1+v+v^2").principal_ideal().len(), 8);
    }

    #[test]
    fn lee_weight_table() {
        let table = [
            ("0", 0),
            ("1", 2),
            ("v", 1),
            ("v^2", 1),
            ("1+v", 3),
            ("1+v^2", 1),
            ("v+v^2", 2),
            ("1+v+v^2", 2),
        ];
        for (s, w) in table {
            assert_eq!(r(s).lee_weight(), w, "{s}");
        }
    }

    #[test]
    fn gray_map() {
        assert_eq!(r("v").gray(), [false, true, false]);
        assert_eq!(r("1+v^2").gray(), [true, false, false]);
        assert_eq!(RingElem::ZERO.gray(), [false; 3]);
        assert_eq!(RingElem::gray_inverse([true, true, true]), r("1+v"));
        assert_eq!(RingElem::gray_inverse([false, false, true]), r("v^2"));
        assert_eq!(RingElem::gray_inverse([false; 3]), RingElem::ZERO);
    }

    #[test]
    fn gray_is_a_linear_isometry_on_elements() {
        for x in RingElem::all() {
            let g = x.gray();
            assert_eq!(x.lee_weight(), g.iter().filter(|&&b| b).count() as u32);
            assert_eq!(RingElem::gray_inverse(g), x);
            for y in RingElem::all() {
                let gy = y.gray();
                let sum = (x + y).gray();
                assert_eq!(sum, [g[0] ^ gy[0], g[1] ^ gy[1], g[2] ^ gy[2]]);
            }
        }
        for i in 0u8..8 {
            let t = [i & 1 != 0, i & 2 != 0, i & 4 != 0];
            assert_eq!(RingElem::gray_inverse(t).gray(), t);
        }
    }

    #[test]
    fn vector_gray_layout() {
        let g = rv(&["v", "1"]).gray();
        assert_eq!(g.to_bools(), vec![false, true, true, false, false, true]);
        assert!(RingVector::zeros(4).gray().is_zero());
        assert_eq!(rv(&["1+v"]).gray().to_bools(), vec![true, true, true]);
    }

    #[test]
    fn inner_products() {
        assert_eq!(rv(&["v"]).inner_product(&rv(&["v"])).unwrap(), r("v^2"));
        assert_eq!(rv(&["1+v"]).inner_product(&rv(&["v+v^2"])).unwrap(), RingElem::ZERO);
        assert_eq!(
            RingVector::zeros(3).inner_product(&rv(&["1", "v", "1+v"])).unwrap(),
            RingElem::ZERO
        );
        assert_eq!(
            rv(&["1"]).inner_product(&rv(&["1", "1"])),
            Err(Error::LengthMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn shifts() {
        let x = rv(&["1", "v", "v^2"]);
        assert_eq!(x.sigma(), rv(&["v^2", "1", "v"]));
        assert_eq!(rv(&["1+v"]).sigma(), rv(&["1+v"]));
        let b = BitVec::from_bools(&[true, false, false, true, true, true]);
        assert_eq!(
            phi(&b).unwrap().to_bools(),
            vec![false, true, true, false, true, true]
        );
        assert!(phi(&BitVec::zeros(4)).is_err());
    }

    #[test]
    fn text_form() {
        for x in RingElem::all() {
            assert_eq!(x.to_string().parse::<RingElem>().unwrap(), x);
        }
        assert_eq!(r("1+v^2").to_string(), "1+v^2");
        assert!("v^3".parse::<RingElem>().is_err());
    }
}
