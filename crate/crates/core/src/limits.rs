/// Resource caps for the exhaustive parts of the library.
///
/// Every operation that enumerates something states its estimate up front
/// and refuses with [`Error::EnumerationCapExceeded`](crate::Error) (or the
/// divisor variant) instead of running away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring-code span (or Gray image) that may be enumerated.
    pub enum_cap: u64,
    /// Largest binary code enumerated for a minimum-distance computation.
    pub hamming_cap: u64,
    /// Largest Gray-image length `3n` for which dual containment is checked
    /// by rank computation.
    pub rank_cap: usize,
    /// Largest number of divisors of `x^n + 1` a search may enumerate.
    pub divisor_cap: u64,
    /// Largest `n` accepted for factorization of `x^n + 1`.
    pub factor_bound: usize,
    /// Largest `8^n` scanned by the brute-force ring dual.
    pub dual_brute_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enum_cap: 1 << 24,
            hamming_cap: 1 << 20,
            rank_cap: 96,
            divisor_cap: crate::factor::DEFAULT_DIVISOR_CAP,
            factor_bound: crate::factor::DEFAULT_FACTOR_BOUND,
            dual_brute_cap: 1 << 24,
        }
    }
}

/// `2^k`, saturating.
pub(crate) fn pow2(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        1u64 << k
    }
}
