use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bits::BitVec;
use crate::ring::RingVector;

/// Whether a [`CodewordSet`] holds ring vectors or binary vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    /// Vectors in R^n, stored by coefficient planes (all a, all b, all c).
    Ring { n: usize },
    Binary { len: usize },
}

impl SetKind {
    /// Number of stored bits per element.
    pub fn bit_len(self) -> usize {
        match self {
            SetKind::Ring { n } => 3 * n,
            SetKind::Binary { len } => len,
        }
    }
}

/// An explicit, sorted, deduplicated set of vectors.
///
/// Elements are packed back to back in one word buffer, so sets near the
/// default enumeration cap (2^24 elements) stay affordable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordSet {
    kind: SetKind,
    stride: usize,
    data: Vec<u64>,
}

impl CodewordSet {
    /// Collects `items` (each of length `kind.bit_len()`), sorting and
    /// removing duplicates.
    pub fn from_bits<I: IntoIterator<Item = BitVec>>(kind: SetKind, items: I) -> Self {
        let bit_len = kind.bit_len();
        let stride = bit_len.div_ceil(64).max(1);
        let data = if stride == 1 {
            let mut words: Vec<u64> = items
                .into_iter()
                .map(|v| {
                    assert_eq!(v.len(), bit_len, "element length mismatch");
                    v.words().first().copied().unwrap_or(0)
                })
                .collect();
            words.sort_unstable();
            words.dedup();
            words
        } else {
            let mut vs: Vec<BitVec> = items
                .into_iter()
                .inspect(|v| assert_eq!(v.len(), bit_len, "element length mismatch"))
                .collect();
            vs.sort();
            vs.dedup();
            vs.iter().flat_map(|v| v.words().iter().copied()).collect()
        };
        Self { kind, stride, data }
    }

    pub fn from_ring_vectors<I: IntoIterator<Item = RingVector>>(n: usize, items: I) -> Self {
        Self::from_bits(SetKind::Ring { n }, items.into_iter().map(|v| v.planes()))
    }

    /// The set `{0}`.
    pub fn zero(kind: SetKind) -> Self {
        Self::from_bits(kind, [BitVec::zeros(kind.bit_len())])
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    /// Ring length `n` or binary length.
    pub fn length(&self) -> usize {
        match self.kind {
            SetKind::Ring { n } => n,
            SetKind::Binary { len } => len,
        }
    }

    pub fn size(&self) -> u64 {
        (self.data.len() / self.stride) as u64
    }

    fn chunk(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn search(&self, key: &[u64]) -> bool {
        let (mut lo, mut hi) = (0usize, self.size() as usize);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.chunk(mid).cmp(key) {
                Ordering::Equal => return true,
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
            }
        }
        false
    }

    /// Membership of a raw element (planes for ring sets).
    pub fn contains_bits(&self, v: &BitVec) -> bool {
        if v.len() != self.kind.bit_len() {
            return false;
        }
        if v.words().is_empty() {
            return self.search(&[0]);
        }
        self.search(v.words())
    }

    pub fn contains_ring(&self, v: &RingVector) -> bool {
        matches!(self.kind, SetKind::Ring { n } if n == v.len()) && self.contains_bits(&v.planes())
    }

    /// Raw elements in sorted order.
    pub fn iter_bits(&self) -> impl Iterator<Item = BitVec> + '_ {
        let len = self.kind.bit_len();
        self.data
            .chunks(self.stride)
            .map(move |w| BitVec::from_words(len, w))
    }

    /// Ring vectors of a ring set.
    ///
    /// # Panics
    ///
    /// Panics for a binary set.
    pub fn iter_ring(&self) -> impl Iterator<Item = RingVector> + '_ {
        assert!(matches!(self.kind, SetKind::Ring { .. }), "not a ring set");
        self.iter_bits().map(|b| RingVector::from_planes(&b))
    }

    /// Gray image of a ring set, as a binary set of length `3n`.
    pub fn gray_image(&self) -> CodewordSet {
        let SetKind::Ring { n } = self.kind else {
            panic!("gray image of a binary set");
        };
        CodewordSet::from_bits(
            SetKind::Binary { len: 3 * n },
            self.iter_ring().map(|v| v.gray()),
        )
    }

    pub fn is_subset_of(&self, other: &CodewordSet) -> bool {
        self.kind == other.kind && self.iter_bits().all(|v| other.contains_bits(&v))
    }
}
