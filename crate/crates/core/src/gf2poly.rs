//! Binary polynomials.
//!
//! A [`BinPoly`] is an element of F2[x], stored as packed coefficient bits:
//! bit `i` of the packing is the coefficient of `x^i`. The packing is kept
//! trimmed, so the zero polynomial stores no words and two equal polynomials
//! always have identical storage.
//!
//! Text input accepts either the algebraic grammar
//!
//! ```text
//! poly := term ('+' term)*      term := '1' | 'x' | 'x^' uint
//! ```
//!
//! (with `0` for the zero polynomial and repeated terms cancelling), or the
//! coefficient bitmask written as a hexadecimal integer, e.g. `0xF` for
//! `x^3+x^2+x+1`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};
use core::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A polynomial over F2.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    words: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self { words: vec![2] }
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Self::zero();
        p.toggle(k);
        p
    }

    /// `x^n + 1`. For `n = 0` this is the zero polynomial.
    pub fn xn_plus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.toggle(0);
        p
    }

    /// Sum of `x^e` over the listed exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    /// Polynomial whose coefficient bitmask is `mask`.
    pub fn from_mask(mask: u128) -> Self {
        Self::from_words(vec![mask as u64, (mask >> 64) as u64])
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Self { words };
        p.trim();
        p
    }

    /// Packed coefficient words, least significant first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn toggle(&mut self, k: usize) {
        let w = k / WORD;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << (k % WORD);
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, with `None` for the zero polynomial. `None` orders below
    /// `Some(0)`, so degree comparisons need no special case.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - top.leading_zeros() as usize))
    }

    /// Degree with the zero polynomial mapped to 0. Convenient for parameter
    /// formulas where only divisors of `x^n + 1` (never zero) appear.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn xor_shifted(&mut self, other: &BinPoly, shift: usize) {
        let (ws, bs) = (shift / WORD, shift % WORD);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (WORD - bs);
            }
        }
        self.trim();
    }

    /// `self * x^k`.
    pub fn shl(&self, k: usize) -> BinPoly {
        let mut out = BinPoly::zero();
        out.xor_shifted(self, k);
        out
    }

    pub fn mul(&self, other: &BinPoly) -> BinPoly {
        if self.is_zero() || other.is_zero() {
            return BinPoly::zero();
        }
        let mut out = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            for (j, &b) in other.words.iter().enumerate() {
                let prod = clmul(a, b);
                out[i + j] ^= prod as u64;
                out[i + j + 1] ^= (prod >> 64) as u64;
            }
        }
        BinPoly::from_words(out)
    }

    pub fn square(&self) -> BinPoly {
        self.mul(self)
    }

    pub fn pow(&self, mut e: u32) -> BinPoly {
        let mut base = self.clone();
        let mut acc = BinPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder, `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = BinPoly::zero();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            r.xor_shifted(d, shift);
            q.toggle(shift);
        }
        Ok((q, r))
    }

    pub fn rem(&self, d: &BinPoly) -> Result<BinPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn divides(&self, p: &BinPoly) -> bool {
        !self.is_zero() && p.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd. Errors only for `gcd(0, 0)`.
    pub fn gcd(&self, other: &BinPoly) -> Result<BinPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Reciprocal `x^deg f * f(1/x)`: the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Result<BinPoly> {
        if !self.coeff(0) {
            return Err(Error::ZeroConstantTerm);
        }
        let d = self.deg();
        Ok(BinPoly::from_exponents(self.exponents().map(|e| d - e)))
    }

    /// Formal derivative. Over F2 only odd exponents survive.
    pub fn derivative(&self) -> BinPoly {
        BinPoly::from_exponents(self.exponents().filter(|e| e % 2 == 1).map(|e| e - 1))
    }

    /// `self * other mod m`.
    pub fn mul_mod(&self, other: &BinPoly, m: &BinPoly) -> Result<BinPoly> {
        self.mul(other).rem(m)
    }

    /// Coefficient bitmask as `0x...` (lowercase hex, no leading zeros).
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0x0".to_string();
        }
        let mut s = String::from("0x");
        let top = self.words.len() - 1;
        s.push_str(&format!("{:x}", self.words[top]));
        for w in self.words[..top].iter().rev() {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }

    /// Coefficient vector of length `n` (ascending), for `deg < n`.
    pub fn coeff_bits(&self, n: usize) -> Vec<bool> {
        (0..n).map(|i| self.coeff(i)).collect()
    }
}

/// Carry-less 64x64 -> 128 bit product.
#[inline]
fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        acc ^= (b as u128) << i;
        rest &= rest - 1;
    }
    acc
}

impl Ord for BinPoly {
    /// Canonical order: by degree (zero first), then by the coefficient
    /// bitmask read as an integer.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BinPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &BinPoly {
    type Output = BinPoly;

    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BinPoly {
    type Output = BinPoly;

    fn add(mut self, rhs: BinPoly) -> BinPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BinPoly> for BinPoly {
    fn add_assign(&mut self, rhs: &BinPoly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.trim();
    }
}

impl Mul for &BinPoly {
    type Output = BinPoly;

    fn mul(self, rhs: &BinPoly) -> BinPoly {
        BinPoly::mul(self, rhs)
    }
}

impl fmt::Display for BinPoly {
    /// Descending-degree algebraic form, e.g. `x^3+x+1`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let exps: Vec<usize> = self.exponents().collect();
        for (i, e) in exps.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses the algebraic grammar or a `0x` bitmask. Whitespace is ignored.
pub fn parse_poly(text: &str) -> Result<BinPoly> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(parse_err(0, "empty polynomial"));
    }
    if chars.len() >= 2 && chars[0].1 == '0' && matches!(chars[1].1, 'x' | 'X') {
        return parse_hex(&chars[2..], chars[1].0 + 1);
    }
    if chars.len() == 1 && chars[0].1 == '0' {
        return Ok(BinPoly::zero());
    }

    let mut p = BinPoly::zero();
    let mut i = 0;
    loop {
        let Some(&(pos, c)) = chars.get(i) else {
            return Err(parse_err(text.len(), "expected a term"));
        };
        match c {
            '1' => {
                p.toggle(0);
                i += 1;
            }
            'x' => {
                i += 1;
                if chars.get(i).map(|&(_, c)| c) == Some('^') {
                    i += 1;
                    let start = i;
                    let mut e: usize = 0;
                    while let Some(&(dpos, d)) = chars.get(i) {
                        let Some(v) = d.to_digit(10) else { break };
                        e = e
                            .checked_mul(10)
                            .and_then(|e| e.checked_add(v as usize))
                            .filter(|&e| e <= 1 << 20)
                            .ok_or_else(|| parse_err(dpos, "exponent too large"))?;
                        i += 1;
                    }
                    if i == start {
                        let at = chars.get(i).map_or(text.len(), |&(p, _)| p);
                        return Err(parse_err(at, "expected exponent after '^'"));
                    }
                    p.toggle(e);
                } else {
                    p.toggle(1);
                }
            }
            other => return Err(parse_err(pos, format!("unexpected '{other}'"))),
        }
        match chars.get(i) {
            None => return Ok(p),
            Some(&(_, '+')) => i += 1,
            Some(&(pos, other)) => {
                return Err(parse_err(pos, format!("expected '+', found '{other}'")))
            }
        }
    }
}

fn parse_hex(digits: &[(usize, char)], after_prefix: usize) -> Result<BinPoly> {
    if digits.is_empty() {
        return Err(parse_err(after_prefix, "expected hex digits after 0x"));
    }
    let mut words: Vec<u64> = Vec::new();
    let mut bit = 0usize;
    for &(pos, c) in digits.iter().rev() {
        let v = c
            .to_digit(16)
            .ok_or_else(|| parse_err(pos, format!("invalid hex digit '{c}'")))?;
        if bit / WORD >= words.len() {
            words.push(0);
        }
        words[bit / WORD] |= (v as u64) << (bit % WORD);
        bit += 4;
    }
    Ok(BinPoly::from_words(words))
}
