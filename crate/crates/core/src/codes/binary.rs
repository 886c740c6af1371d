use alloc::string::ToString;
use alloc::vec::Vec;

use crate::bits::{BitVec, Echelon};
use crate::error::{Error, Result};
use crate::gf2poly::BinPoly;
use crate::limits::pow2;

/// A binary linear code, held as the reduced echelon basis of its row space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCode {
    basis: Echelon,
}

impl BinaryCode {
    /// Row space of `rows`; every row must have length `n`.
    pub fn new<I: IntoIterator<Item = BitVec>>(n: usize, rows: I) -> Result<Self> {
        let mut basis = Echelon::empty(n);
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            basis.insert(r);
        }
        Ok(Self { basis })
    }

    pub fn from_echelon(basis: Echelon) -> Self {
        Self { basis }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            basis: Echelon::empty(n),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            basis: Echelon::new(n, (0..n).map(|i| BitVec::from_ones(n, [i]))),
        }
    }

    pub fn n(&self) -> usize {
        self.basis.width()
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &[BitVec] {
        self.basis.rows()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.basis
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        v.len() == self.n() && self.basis.contains(v)
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.basis.is_subspace_of(&other.basis)
    }

    /// The dual code under the standard dot product.
    pub fn dual(&self) -> BinaryCode {
        Self {
            basis: self.basis.null_space(),
        }
    }

    /// `C^perp ⊆ C`.
    pub fn contains_dual(&self) -> bool {
        self.dual().is_subcode_of(self)
    }

    /// Every pair of codewords is orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.basis();
        rows.iter()
            .enumerate()
            .all(|(i, x)| rows[i..].iter().all(|y| !x.dot(y)))
    }

    /// Minimum weight of a nonzero codeword, by enumerating all `2^dim`
    /// codewords.
    pub fn min_distance(&self, cap: u64) -> Result<u32> {
        self.min_distance_with_floor(cap, 1)
    }

    /// Like [`BinaryCode::min_distance`], but stops as soon as a codeword of
    /// weight `floor` is seen. Only sound when `floor` is a proven lower
    /// bound on the minimum distance.
    pub fn min_distance_with_floor(&self, cap: u64, floor: u32) -> Result<u32> {
        let k = self.dim();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        if k == self.n() {
            return Ok(1);
        }
        let estimate = pow2(k);
        if estimate > cap {
            return Err(Error::EnumerationCapExceeded { cap, estimate });
        }
        let mut best = u32::MAX;
        self.basis.for_each_in_span(|v| {
            let w = v.weight() as u32;
            if w > 0 && w < best {
                best = w;
            }
            best > floor.max(1)
        });
        Ok(best)
    }

    /// A nonzero codeword of minimum weight, least in [`BitVec`] order among
    /// those.
    pub fn min_weight_word(&self, cap: u64) -> Result<BitVec> {
        let k = self.dim();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        let estimate = pow2(k);
        if estimate > cap {
            return Err(Error::EnumerationCapExceeded { cap, estimate });
        }
        let mut best: Option<(usize, BitVec)> = None;
        self.basis.for_each_in_span(|v| {
            let w = v.weight();
            let better = match &best {
                None => w > 0,
                Some((bw, bv)) => w > 0 && (w < *bw || (w == *bw && v < bv)),
            };
            if better {
                best = Some((w, v.clone()));
            }
            true
        });
        Ok(best.expect("nonzero code").1)
    }

    /// Restriction to the coordinates `start..start + len`.
    pub fn project(&self, start: usize, len: usize) -> BinaryCode {
        Self {
            basis: Echelon::new(len, self.basis().iter().map(|r| r.slice(start, len))),
        }
    }
}

/// Reduces `g` modulo `x^n + 1` and returns its length-`n` coefficient vector.
pub fn cyclic_coeffs(g: &BinPoly, n: usize) -> BitVec {
    let r = g
        .rem(&BinPoly::xn_plus_one(n))
        .expect("x^n + 1 is nonzero for n >= 1");
    BitVec::from_ones(n, r.exponents())
}

/// Checks `g | x^n + 1`, naming the polynomial `label` in the error.
pub(crate) fn require_divisor(label: &str, g: &BinPoly, n: usize) -> Result<()> {
    if n > 0 && g.divides(&BinPoly::xn_plus_one(n)) {
        Ok(())
    } else {
        Err(Error::NotADivisor {
            label: label.to_string(),
            generator: g.to_string(),
            n,
        })
    }
}

/// Binary cyclic code of length `n` generated by `g | x^n + 1`, with basis
/// `x^i g`, `0 <= i < n - deg g`.
pub fn binary_cyclic(n: usize, g: &BinPoly) -> Result<BinaryCode> {
    require_divisor("g", g, n)?;
    let k = n - g.deg();
    let rows: Vec<BitVec> = (0..k)
        .map(|i| BitVec::from_ones(n, g.exponents().map(|e| e + i)))
        .collect();
    BinaryCode::new(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_dimensions() {
        assert_eq!(binary_cyclic(7, &p("x^3+x+1")).unwrap().dim(), 4);
        assert_eq!(binary_cyclic(8, &p("x^3+x^2+x+1")).unwrap().dim(), 5);
        assert_eq!(binary_cyclic(6, &BinPoly::one()).unwrap(), BinaryCode::full(6));
        assert_eq!(binary_cyclic(7, &BinPoly::xn_plus_one(7)).unwrap().dim(), 0);
        assert!(matches!(
            binary_cyclic(7, &p("x^2+x+1")),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn hamming_code_has_sixteen_words_at_distance_three() {
        let c = binary_cyclic(7, &p("x^3+x+1")).unwrap();
        let mut count = 0;
        c.echelon().for_each_in_span(|_| {
            count += 1;
            true
        });
        assert_eq!(count, 16);
        assert_eq!(c.min_distance(1 << 20).unwrap(), 3);
        assert_eq!(c.min_weight_word(1 << 20).unwrap(), BitVec::from_ones(7, [0, 1, 3]));
    }

    #[test]
    fn minimum_distances() {
        assert_eq!(binary_cyclic(8, &p("x^3+x^2+x+1")).unwrap().min_distance(1 << 20).unwrap(), 2);
        assert_eq!(BinaryCode::full(5).min_distance(1 << 20).unwrap(), 1);
        assert_eq!(BinaryCode::zero(5).min_distance(1 << 20), Err(Error::ZeroCode));
        assert_eq!(BinaryCode::full(300).min_distance(1 << 20), Ok(1));
        let even = BinaryCode::new(31, [BitVec::from_ones(31, 0..31)]).unwrap().dual();
        assert_eq!(
            even.min_distance(1 << 20),
            Err(Error::EnumerationCapExceeded { cap: 1 << 20, estimate: 1 << 30 })
        );
    }

    #[test]
    fn duals() {
        assert_eq!(BinaryCode::full(4).dual(), BinaryCode::zero(4));
        let c = binary_cyclic(8, &p("x^3+x^2+x+1")).unwrap();
        assert_eq!(c.dual(), binary_cyclic(8, &p("x^5+x^4+x+1")).unwrap());
        let rep = BinaryCode::new(6, [BitVec::from_ones(6, 0..6)]).unwrap();
        let even = rep.dual();
        assert_eq!(even.dim(), 5);
        assert!(even.basis().iter().all(|r| r.weight() % 2 == 0));
    }

    #[test]
    fn dual_dimension_and_orthogonality() {
        let c = binary_cyclic(15, &p("x^4+x+1")).unwrap();
        let d = c.dual();
        assert_eq!(c.dim() + d.dim(), 15);
        for x in c.basis() {
            for y in d.basis() {
                assert!(!x.dot(y));
            }
        }
    }
}
