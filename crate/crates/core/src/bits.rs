//! Bit-packed vectors over F2 and row reduction.
//!
//! Everything in the crate that needs exact linear algebra over F2 (code
//! bases, duals, Berlekamp kernels, span enumeration) goes through
//! [`BitVec`] and [`Echelon`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over F2, packed 64 bits per word.
///
/// Bit `i` lives in word `i / 64` at position `i % 64`. Bits beyond `len`
/// are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector of length `len` with the listed positions set.
    ///
    /// # Panics
    ///
    /// Panics if a position is out of range.
    pub fn from_ones<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from raw words, masking off anything past `len`.
    pub fn from_words(len: usize, words: &[u64]) -> Self {
        let mut v = Self::zeros(len);
        let n = v.words.len().min(words.len());
        v.words[..n].copy_from_slice(&words[..n]);
        v.clear_tail();
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// `self ^= other`.
    ///
    /// # Panics
    ///
    /// Panics on a length mismatch.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "length mismatch in and");
        BitVec {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Standard dot product over F2.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
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

    /// Copies `len` bits starting at `start`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len, "slice out of range");
        let mut out = BitVec::zeros(len);
        for i in self.iter_ones().filter(|&i| i >= start && i < start + len) {
            out.set(i - start, true);
        }
        out
    }

    /// Concatenation of the given pieces.
    pub fn concat(parts: &[&BitVec]) -> BitVec {
        let total = parts.iter().map(|p| p.len).sum();
        let mut out = BitVec::zeros(total);
        let mut offset = 0;
        for p in parts {
            for i in p.iter_ones() {
                out.set(offset + i, true);
            }
            offset += p.len;
        }
        out
    }

    /// Cyclic right shift by one: `(v0, .., v_{n-1}) -> (v_{n-1}, v0, .., v_{n-2})`.
    pub fn rotate_right(&self) -> BitVec {
        if self.len == 0 {
            return self.clone();
        }
        let mut out = BitVec::zeros(self.len);
        for i in self.iter_ones() {
            out.set((i + 1) % self.len, true);
        }
        out
    }

    /// Cyclic right shift applied independently to each of `blocks` equal blocks.
    ///
    /// # Panics
    ///
    /// Panics if the length is not a multiple of `blocks`.
    pub fn rotate_blocks_right(&self, blocks: usize) -> BitVec {
        assert!(blocks > 0 && self.len % blocks == 0, "length not divisible into blocks");
        let n = self.len / blocks;
        let mut out = BitVec::zeros(self.len);
        for i in self.iter_ones() {
            let (blk, pos) = (i / n, i % n);
            out.set(blk * n + (pos + 1) % n, true);
        }
        out
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BitVec(")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Reduced row echelon form over F2 with lowest-index-first pivoting.
///
/// Rows are sorted by pivot column; each pivot column contains exactly one
/// set bit across all rows. Two echelon forms of the same width describe the
/// same row space iff their rows are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Echelon {
    width: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Row-reduces `rows`, all of which must have length `width`.
    pub fn new<I: IntoIterator<Item = BitVec>>(width: usize, rows: I) -> Self {
        let mut e = Self::empty(width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    /// Reduces `v` against the current rows; the result is zero iff `v` is in
    /// the row space.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds a row, keeping the form fully reduced. Returns `false` if the row
    /// was already in the span.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let r = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Row-space containment.
    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.width == other.width && self.rows.iter().all(|r| other.contains(r))
    }

    /// Basis of `{x : x . r = 0 for every row r}`, itself in echelon form.
    pub fn null_space(&self) -> Echelon {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.width).filter(|&j| !is_pivot[j]).map(|free| {
            let mut x = BitVec::zeros(self.width);
            x.set(free, true);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row.get(free) {
                    x.set(p, true);
                }
            }
            x
        });
        Echelon::new(self.width, basis)
    }

    /// Calls `visit` on every vector of the row space (including zero), in
    /// Gray-code order. Stops early if `visit` returns `false`.
    pub fn for_each_in_span<F: FnMut(&BitVec) -> bool>(&self, mut visit: F) {
        let k = self.rows.len();
        assert!(k < 64, "span of dimension {k} is too large to walk");
        let mut cur = BitVec::zeros(self.width);
        if !visit(&cur) {
            return;
        }
        for i in 1u64..(1u64 << k) {
            cur.xor_assign(&self.rows[i.trailing_zeros() as usize]);
            if !visit(&cur) {
                return;
            }
        }
    }
}
