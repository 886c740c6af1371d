use alloc::vec::Vec;

use super::binary::{cyclic_coeffs, require_divisor, BinaryCode};
use super::set::{CodewordSet, SetKind};
use crate::bits::{BitVec, Echelon};
use crate::error::{Error, Result};
use crate::gf2poly::BinPoly;
use crate::limits::pow2;
use crate::ring::{RingElem, RingVector};

/// Scalars whose F2-span is R; multiplying generators by these yields an
/// F2-spanning set of the R-submodule.
const F2_BASIS_OF_R: [RingElem; 3] = [RingElem::ONE, RingElem::V, RingElem::V2];

/// A linear code over R of length `n`, given by generators.
///
/// When `cyclic` is set the code is the R-submodule generated by the
/// generators together with all of their cyclic shifts, i.e. the ideal of
/// R[x]/(x^n - 1) they generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCode {
    n: usize,
    generators: Vec<RingVector>,
    cyclic: bool,
}

impl RingCode {
    pub fn new(n: usize, generators: Vec<RingVector>, cyclic: bool) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: g.len(),
            });
        }
        Ok(Self {
            n,
            generators,
            cyclic,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[RingVector] {
        &self.generators
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    /// Generators, plus all cyclic shifts when the code is cyclic.
    fn expanded_generators(&self) -> Vec<RingVector> {
        let mut out = Vec::new();
        for g in &self.generators {
            let mut s = g.clone();
            let shifts = if self.cyclic { self.n } else { 1 };
            for _ in 0..shifts {
                let next = s.sigma();
                out.push(s);
                s = next;
            }
        }
        out
    }

    /// F2-basis of the code in coefficient-plane coordinates. No Gray map is
    /// involved.
    pub fn plane_basis(&self) -> Echelon {
        Echelon::new(
            3 * self.n,
            self.expanded_generators()
                .iter()
                .flat_map(|g| F2_BASIS_OF_R.iter().map(move |&r| g.scale(r).planes())),
        )
    }

    /// `log2 |C|`.
    pub fn size_log2(&self) -> usize {
        self.plane_basis().rank()
    }
}

/// Enumerates the R-span of the code.
pub fn span_enumerate(code: &RingCode, cap: u64) -> Result<CodewordSet> {
    let basis = code.plane_basis();
    let estimate = pow2(basis.rank());
    if estimate > cap {
        return Err(Error::EnumerationCapExceeded { cap, estimate });
    }
    let mut items = Vec::with_capacity(estimate as usize);
    basis.for_each_in_span(|v| {
        items.push(v.clone());
        true
    });
    Ok(CodewordSet::from_bits(SetKind::Ring { n: code.n }, items))
}

fn scaled_poly(r: RingElem, f: &BinPoly, n: usize) -> RingVector {
    RingVector::scaled_binary(r, &cyclic_coeffs(f, n).to_bools())
}

/// The cyclic code `<v f1, (1+v) f2, (1+v^2) f3>`; each `fi` must divide
/// `x^n + 1`.
pub fn build_ring_cyclic(n: usize, f1: &BinPoly, f2: &BinPoly, f3: &BinPoly) -> Result<RingCode> {
    require_divisor("f1", f1, n)?;
    require_divisor("f2", f2, n)?;
    require_divisor("f3", f3, n)?;
    RingCode::new(
        n,
        alloc::vec![
            scaled_poly(RingElem::V, f1, n),
            scaled_poly(RingElem::ONE_PLUS_V, f2, n),
            scaled_poly(RingElem::ONE_PLUS_V2, f3, n),
        ],
        true,
    )
}

/// Single-generator cyclic code `<v f1 + (1+v) f2 + (1+v^2) f3>`.
pub fn single_generator_code(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
) -> Result<RingCode> {
    let g = scaled_poly(RingElem::V, f1, n)
        .add(&scaled_poly(RingElem::ONE_PLUS_V, f2, n))?
        .add(&scaled_poly(RingElem::ONE_PLUS_V2, f3, n))?;
    RingCode::new(n, alloc::vec![g], true)
}

/// The claimed dual `<v h1* + (1+v) h2* + (1+v^2) h3*>` with
/// `hi = (x^n + 1) / fi` and `hi*` its reciprocal.
pub fn dual_ring_formula(n: usize, f1: &BinPoly, f2: &BinPoly, f3: &BinPoly) -> Result<RingCode> {
    let xn1 = BinPoly::xn_plus_one(n);
    let mut hs = Vec::with_capacity(3);
    for (label, f) in [("f1", f1), ("f2", f2), ("f3", f3)] {
        require_divisor(label, f, n)?;
        let (h, _) = xn1.div_rem(f)?;
        hs.push(h.reciprocal()?);
    }
    single_generator_code(n, &hs[0], &hs[1], &hs[2])
}

/// Gray image of the code as a binary code of length `3n`.
pub fn gray_image_basis(code: &RingCode) -> BinaryCode {
    BinaryCode::from_echelon(Echelon::new(
        3 * code.n,
        code.expanded_generators()
            .iter()
            .flat_map(|g| F2_BASIS_OF_R.iter().map(move |&r| g.scale(r).gray())),
    ))
}

/// Binary codes of a-parts, b-parts and (a+c)-parts of an enumerated ring
/// code.
pub fn projections(set: &CodewordSet) -> [BinaryCode; 3] {
    let n = set.length();
    let mut eche = [Echelon::empty(n), Echelon::empty(n), Echelon::empty(n)];
    for v in set.iter_bits() {
        let a = v.slice(0, n);
        let b = v.slice(n, n);
        let c = v.slice(2 * n, n);
        eche[2].insert(a.xor(&c));
        eche[0].insert(a);
        eche[1].insert(b);
    }
    eche.map(BinaryCode::from_echelon)
}

/// The same three codes read off a Gray-image basis (block projections).
pub fn projections_from_gray(gray: &BinaryCode) -> [BinaryCode; 3] {
    let n = gray.n() / 3;
    [0, 1, 2].map(|j| gray.project(j * n, n))
}

/// Result of scanning all of R^n for vectors orthogonal to a code.
#[derive(Clone, Debug)]
pub struct BruteForceDual {
    pub dual: CodewordSet,
    /// `|C| * |C^perp| == 8^n`.
    pub size_product_holds: bool,
}

/// Ring inner product of two plane-packed vectors of length `n <= 21`.
#[inline]
fn packed_inner(x: u64, y: u64, n: usize) -> (bool, bool, bool) {
    let mask = (1u64 << n) - 1;
    let (a1, b1, c1) = (x & mask, (x >> n) & mask, (x >> (2 * n)) & mask);
    let (a2, b2, c2) = (y & mask, (y >> n) & mask, (y >> (2 * n)) & mask);
    let par = |w: u64| w.count_ones() & 1 == 1;
    (
        par(a1 & a2),
        par((a1 & b2) ^ (b1 & a2) ^ (b1 & c2) ^ (c1 & b2)),
        par((a1 & c2) ^ (b1 & b2) ^ (c1 & a2) ^ (c1 & c2)),
    )
}

/// `{x in R^n : x . y = 0 for all y in S}` by scanning all `8^n` vectors.
///
/// The ring inner product is F2-bilinear, so testing against an F2-basis of
/// `S` (in coefficient planes) is the same as testing against all of `S`.
pub fn dual_ring_bruteforce(set: &CodewordSet, cap: u64) -> Result<BruteForceDual> {
    let SetKind::Ring { n } = set.kind() else {
        panic!("brute-force ring dual of a binary set");
    };
    let estimate = 8u64.checked_pow(n as u32).unwrap_or(u64::MAX);
    if estimate > cap || 3 * n > 63 {
        return Err(Error::EnumerationCapExceeded { cap, estimate });
    }
    let basis: Vec<u64> = Echelon::new(3 * n, set.iter_bits())
        .rows()
        .iter()
        .map(|r| r.words().first().copied().unwrap_or(0))
        .collect();
    let mut dual = Vec::new();
    for x in 0..estimate {
        if basis.iter().all(|&y| packed_inner(x, y, n) == (false, false, false)) {
            dual.push(BitVec::from_words(3 * n, &[x]));
        }
    }
    let dual = CodewordSet::from_bits(SetKind::Ring { n }, dual);
    let size_product_holds = set.size().checked_mul(dual.size()) == Some(estimate);
    Ok(BruteForceDual {
        dual,
        size_product_holds,
    })
}

/// Minimum Lee weight over the nonzero elements of an enumerated ring code.
pub fn min_lee_enum(set: &CodewordSet) -> Result<u32> {
    set.iter_ring()
        .filter(|v| !v.is_zero())
        .map(|v| v.lee_weight())
        .min()
        .ok_or(Error::ZeroCode)
}

/// `min{d_H(C1), d_H(C2), d_H(C3)}`; every component must be nonzero.
pub fn min_lee_formula(components: &[BinaryCode; 3], cap: u64) -> Result<u32> {
    if components.iter().any(|c| c.dim() == 0) {
        return Err(Error::ZeroCode);
    }
    component_distance(components, cap)
}

/// Minimum of the component distances, skipping zero components. This is a
/// lower bound on the Lee distance: a nonzero codeword has some nonzero block
/// and that block lies in the matching component.
pub fn component_distance(components: &[BinaryCode; 3], cap: u64) -> Result<u32> {
    let mut best: Option<u32> = None;
    for c in components.iter().filter(|c| c.dim() > 0) {
        let d = c.min_distance(cap)?;
        best = Some(best.map_or(d, |b| b.min(d)));
    }
    best.ok_or(Error::ZeroCode)
}

/// Closure of an enumerated ring set under the cyclic shift.
pub fn is_cyclic(set: &CodewordSet) -> bool {
    set.iter_ring().all(|v| set.contains_ring(&v.sigma()))
}

/// Closure of a binary set of length `3n` under the blockwise shift.
pub fn is_quasicyclic3(set: &CodewordSet) -> bool {
    let SetKind::Binary { len } = set.kind() else {
        panic!("quasi-cyclicity of a ring set");
    };
    len % 3 == 0 && set.iter_bits().all(|v| set.contains_bits(&v.rotate_blocks_right(3)))
}
