//! Factorization of `x^n + 1` over F2 and enumeration of its divisors.
//!
//! Writing `n = 2^a * m` with `m` odd, `x^n + 1 = (x^m + 1)^(2^a)` and
//! `x^m + 1` is squarefree, so only the odd part is actually factored.
//! That part is split with Berlekamp's algorithm. Factors can have large
//! degree (`x^125 + 1` has one of degree 100).

use alloc::vec::Vec;

use crate::bits::{BitVec, Echelon};
use crate::error::{Error, Result};
use crate::gf2poly::BinPoly;

pub const DEFAULT_FACTOR_BOUND: usize = 128;
pub const DEFAULT_DIVISOR_CAP: u64 = 1 << 16;

/// Complete factorization of `x^n + 1`: distinct irreducible factors in
/// canonical order, each with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    factors: Vec<(BinPoly, u32)>,
}

impl Factorization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[(BinPoly, u32)] {
        &self.factors
    }

    /// Product of all factors with multiplicity; equals `x^n + 1`.
    pub fn product(&self) -> BinPoly {
        self.factors
            .iter()
            .fold(BinPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    /// Number of monic divisors, `prod (m_i + 1)`. Saturates at `u64::MAX`.
    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, (_, m)| acc.saturating_mul(u64::from(*m) + 1))
    }

    /// All monic divisors of `x^n + 1`, canonical order, deduplicated.
    pub fn divisors(&self, cap: u64) -> Result<Vec<BinPoly>> {
        let count = self.divisor_count();
        if count > cap {
            return Err(Error::DivisorCapExceeded { cap, count });
        }
        let mut out = Vec::with_capacity(count as usize);
        out.push(BinPoly::one());
        for (f, m) in &self.factors {
            let mut powers = Vec::with_capacity(*m as usize);
            let mut p = f.clone();
            for _ in 0..*m {
                powers.push(p.clone());
                p = p.mul(f);
            }
            let base = out.len();
            for pw in &powers {
                for i in 0..base {
                    let d = out[i].mul(pw);
                    out.push(d);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// Factors `x^n + 1` for `1 <= n <= bound`.
pub fn factor_xn1(n: usize, bound: usize) -> Result<Factorization> {
    if n == 0 || n > bound {
        return Err(Error::LengthOutOfRange { n, bound });
    }
    let a = n.trailing_zeros();
    let m = n >> a;
    let mut factors: Vec<(BinPoly, u32)> = berlekamp(&BinPoly::xn_plus_one(m))
        .into_iter()
        .map(|f| (f, 1u32 << a))
        .collect();
    factors.sort();
    Ok(Factorization { n, factors })
}

/// Monic divisors of `x^n + 1` in canonical order.
pub fn enumerate_divisors(n: usize, bound: usize, cap: u64) -> Result<Vec<BinPoly>> {
    factor_xn1(n, bound)?.divisors(cap)
}

/// Splits a squarefree polynomial of positive degree into its irreducible
/// factors (unordered).
///
/// The Berlekamp subalgebra `{b : b^2 = b mod f}` has dimension equal to the
/// number of irreducible factors; every basis element `b` splits each
/// current factor `g` as `gcd(g, b) * gcd(g, b + 1)`.
pub fn berlekamp(f: &BinPoly) -> Vec<BinPoly> {
    let d = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return alloc::vec![f.clone()],
        Some(d) => d,
    };

    // Column i of (Q - I) is (x^(2i) mod f) + x^i; store it transposed so the
    // null space of the row echelon form is the kernel we want.
    let x2 = BinPoly::monomial(2);
    let mut rows: Vec<BitVec> = (0..d).map(|_| BitVec::zeros(d)).collect();
    let mut power = BinPoly::one();
    for i in 0..d {
        for r in power.exponents() {
            rows[r].flip(i);
        }
        rows[i].flip(i);
        power = power.mul_mod(&x2, f).expect("f is nonzero");
    }
    let kernel = Echelon::new(d, rows).null_space();
    let count = kernel.rank();

    let mut factors = alloc::vec![f.clone()];
    for b in kernel.rows() {
        if factors.len() == count {
            break;
        }
        let b = BinPoly::from_exponents(b.iter_ones());
        if b.degree() <= Some(0) {
            continue;
        }
        let b1 = &b + &BinPoly::one();
        let mut next = Vec::with_capacity(factors.len() * 2);
        for g in factors {
            if g.deg() == 1 {
                next.push(g);
                continue;
            }
            let u = g.gcd(&b).expect("g is nonzero");
            if u.deg() == 0 || u.deg() == g.deg() {
                next.push(g);
            } else {
                next.push(g.gcd(&b1).expect("g is nonzero"));
                next.push(u);
            }
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), count);
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};
    use alloc::vec;

    fn shown(n: usize) -> Vec<(String, u32)> {
        factor_xn1(n, DEFAULT_FACTOR_BOUND)
            .unwrap()
            .factors()
            .iter()
            .map(|(f, m)| (f.to_string(), *m))
            .collect()
    }

    fn s(v: &[(&str, u32)]) -> Vec<(String, u32)> {
        v.iter().map(|(f, m)| (f.to_string(), *m)).collect()
    }

    #[test]
    fn published_factor_lists() {
        assert_eq!(shown(7), s(&[("x+1", 1), ("x^3+x+1", 1), ("x^3+x^2+1", 1)]));
        assert_eq!(shown(8), s(&[("x+1", 8)]));
        assert_eq!(shown(16), s(&[("x+1", 16)]));
        assert_eq!(
            shown(15),
            s(&[
                ("x+1", 1),
                ("x^2+x+1", 1),
                ("x^4+x+1", 1),
                ("x^4+x^3+1", 1),
                ("x^4+x^3+x^2+x+1", 1)
            ])
        );
        assert_eq!(
            shown(21),
            s(&[
                ("x+1", 1),
                ("x^2+x+1", 1),
                ("x^3+x+1", 1),
                ("x^3+x^2+1", 1),
                ("x^6+x^4+x^2+x+1", 1),
                ("x^6+x^5+x^4+x^2+1", 1)
            ])
        );
        assert_eq!(shown(1), s(&[("x+1", 1)]));
    }

    #[test]
    fn large_factor_degrees() {
        // ord_125(2) = 100 and ord_127(2) = 7.
        let f = factor_xn1(125, 128).unwrap();
        let degs: Vec<usize> = f.factors().iter().map(|(p, _)| p.deg()).collect();
        assert_eq!(degs, vec![1, 4, 20, 100]);
        assert_eq!(f.product(), BinPoly::xn_plus_one(125));
        let f = factor_xn1(127, 128).unwrap();
        assert_eq!(f.factors().len(), 19);
        assert_eq!(f.product(), BinPoly::xn_plus_one(127));
    }

    #[test]
    fn bounds() {
        assert_eq!(factor_xn1(0, 128), Err(Error::LengthOutOfRange { n: 0, bound: 128 }));
        assert_eq!(factor_xn1(129, 128), Err(Error::LengthOutOfRange { n: 129, bound: 128 }));
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(enumerate_divisors(7, 128, 1 << 16).unwrap().len(), 8);
        let d8 = enumerate_divisors(8, 128, 1 << 16).unwrap();
        assert_eq!(d8.len(), 9);
        for (k, d) in d8.iter().enumerate() {
            assert_eq!(*d, BinPoly::from_exponents([0, 1]).pow(k as u32));
        }
        let d1 = enumerate_divisors(1, 128, 1 << 16).unwrap();
        assert_eq!(d1, vec![BinPoly::one(), "x+1".parse().unwrap()]);
    }

    #[test]
    fn divisor_cap_is_reported() {
        assert_eq!(
            enumerate_divisors(21, 128, 10),
            Err(Error::DivisorCapExceeded { cap: 10, count: 64 })
        );
    }
}
