//! Checks of structural claims about codes over R against enumeration and
//! exact linear algebra. Every failed check carries a witness that can be
//! verified independently of this crate.

use alloc::vec::Vec;

use super::binary::BinaryCode;
use super::ring_code::{
    build_ring_cyclic, dual_ring_bruteforce, dual_ring_formula, gray_image_basis, projections,
    single_generator_code, span_enumerate, RingCode,
};
use super::set::{CodewordSet, SetKind};
use crate::bits::{BitVec, Echelon};
use crate::error::{Error, Result};
use crate::gf2poly::BinPoly;
use crate::limits::{pow2, Limits};
use crate::ring::{RingElem, RingVector};

/// Which side of a comparison a witness belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    OnlyLeft,
    OnlyRight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<T> {
    pub side: Side,
    pub vector: T,
}

/// Outcome of comparing two linear sets. Sizes are `log2` of the cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison<T> {
    pub left_log2: usize,
    pub right_log2: usize,
    pub witness: Option<Witness<T>>,
}

impl<T> Comparison<T> {
    pub fn equal(&self) -> bool {
        self.witness.is_none()
    }
}

fn log2_size(set: &CodewordSet) -> usize {
    debug_assert!(set.size().is_power_of_two());
    set.size().trailing_zeros() as usize
}

/// Compares two enumerated sets of the same kind; the witness is the least
/// element of the symmetric difference under `key`.
fn compare_sets<K: Ord>(
    left: &CodewordSet,
    right: &CodewordSet,
    key: impl Fn(&BitVec) -> K,
) -> Comparison<BitVec> {
    let only = |a: &CodewordSet, b: &CodewordSet, side| {
        a.iter_bits()
            .filter(|v| !b.contains_bits(v))
            .map(|v| (key(&v), v, side))
            .min_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)))
    };
    let witness = [only(left, right, Side::OnlyLeft), only(right, left, Side::OnlyRight)]
        .into_iter()
        .flatten()
        .min_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)))
        .map(|(_, vector, side)| Witness { side, vector });
    Comparison {
        left_log2: log2_size(left),
        right_log2: log2_size(right),
        witness,
    }
}

fn ring_witness(c: Comparison<BitVec>) -> Comparison<RingVector> {
    Comparison {
        left_log2: c.left_log2,
        right_log2: c.right_log2,
        witness: c.witness.map(|w| Witness {
            side: w.side,
            vector: RingVector::from_planes(&w.vector),
        }),
    }
}

/// Compares enumerated ring sets; witnesses are least by Lee weight.
pub fn compare_ring_sets(left: &CodewordSet, right: &CodewordSet) -> Comparison<RingVector> {
    ring_witness(compare_sets(left, right, |v| {
        RingVector::from_planes(v).lee_weight()
    }))
}

/// Compares two ring codes through their Gray-image bases, without
/// enumeration. A witness is a Gray basis row of one side outside the other,
/// pulled back to R^n.
pub fn compare_codes(left: &RingCode, right: &RingCode) -> Comparison<RingVector> {
    let (l, r) = (gray_image_basis(left), gray_image_basis(right));
    let witness = l
        .basis()
        .iter()
        .find(|v| !r.contains(v))
        .map(|v| (Side::OnlyLeft, v))
        .or_else(|| r.basis().iter().find(|v| !l.contains(v)).map(|v| (Side::OnlyRight, v)))
        .map(|(side, v)| Witness {
            side,
            vector: RingVector::from_gray(v),
        });
    Comparison {
        left_log2: l.dim(),
        right_log2: r.dim(),
        witness,
    }
}

/// Decomposition checks on an enumerated ring code `S` with projections
/// `C1, C2, C3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionAudit {
    pub size_log2: usize,
    /// `dim C1, dim C2, dim C3`.
    pub component_dims: [usize; 3],
    /// `psi(S)` (left) against `C1 x C2 x C3` (right), in Gray coordinates.
    pub product: Comparison<BitVec>,
    /// `S` (left) against `v C1 + (1+v) C2 + (1+v^2) C3` (right).
    pub reconstruction: Comparison<RingVector>,
}

impl DecompositionAudit {
    pub fn product_log2(&self) -> usize {
        self.component_dims.iter().sum()
    }

    pub fn passed(&self) -> bool {
        self.product.equal() && self.reconstruction.equal()
    }
}

fn enumerate_echelon(kind: SetKind, basis: &Echelon, cap: u64) -> Result<CodewordSet> {
    let estimate = pow2(basis.rank());
    if estimate > cap {
        return Err(Error::EnumerationCapExceeded { cap, estimate });
    }
    let mut items = Vec::with_capacity(estimate as usize);
    basis.for_each_in_span(|v| {
        items.push(v.clone());
        true
    });
    Ok(CodewordSet::from_bits(kind, items))
}

/// Tests `psi(S) = C1 x C2 x C3` and `S = v C1 + (1+v) C2 + (1+v^2) C3`.
pub fn audit_decomposition(set: &CodewordSet, cap: u64) -> Result<DecompositionAudit> {
    let SetKind::Ring { n } = set.kind() else {
        panic!("decomposition audit of a binary set");
    };
    let comps = projections(set);
    let embed = |j: usize, v: &BitVec| {
        let mut out = BitVec::zeros(3 * n);
        for i in v.iter_ones() {
            out.set(j * n + i, true);
        }
        out
    };
    let product_basis = Echelon::new(
        3 * n,
        comps
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.basis().iter().map(move |v| embed(j, v))),
    );
    let product = enumerate_echelon(SetKind::Binary { len: 3 * n }, &product_basis, cap)?;
    let gray = set.gray_image();

    let scalars = [RingElem::V, RingElem::ONE_PLUS_V, RingElem::ONE_PLUS_V2];
    let recon_basis = Echelon::new(
        3 * n,
        comps.iter().zip(scalars).flat_map(|(c, r)| {
            c.basis()
                .iter()
                .map(move |v| RingVector::scaled_binary(r, &v.to_bools()).planes())
        }),
    );
    let recon = enumerate_echelon(SetKind::Ring { n }, &recon_basis, cap)?;

    Ok(DecompositionAudit {
        size_log2: log2_size(set),
        component_dims: comps.each_ref().map(BinaryCode::dim),
        product: compare_sets(&gray, &product, |v| v.weight()),
        reconstruction: compare_ring_sets(set, &recon),
    })
}

/// The claimed size `3n - sum deg fi` against the rank of the code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeAudit {
    pub claimed_log2: usize,
    pub actual_log2: usize,
}

impl SizeAudit {
    pub fn passed(&self) -> bool {
        self.claimed_log2 == self.actual_log2
    }
}

pub fn audit_size_formula(n: usize, f1: &BinPoly, f2: &BinPoly, f3: &BinPoly) -> Result<SizeAudit> {
    let code = build_ring_cyclic(n, f1, f2, f3)?;
    Ok(SizeAudit {
        claimed_log2: 3 * n - f1.deg() - f2.deg() - f3.deg(),
        actual_log2: code.size_log2(),
    })
}

/// `<v f1, (1+v) f2, (1+v^2) f3>` (left) against the single-generator code
/// `<v f1 + (1+v) f2 + (1+v^2) f3>` (right).
pub fn audit_single_generator(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
) -> Result<Comparison<RingVector>> {
    Ok(compare_codes(
        &build_ring_cyclic(n, f1, f2, f3)?,
        &single_generator_code(n, f1, f2, f3)?,
    ))
}

/// `<v f1, (1+v) f2, (1+v^2) f3>` (left) against `<v^2 g>` (right).
pub fn audit_v2_generator(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
    g: &BinPoly,
) -> Result<Comparison<RingVector>> {
    let code = build_ring_cyclic(n, f1, f2, f3)?;
    let claimed = RingCode::new(
        n,
        alloc::vec![RingVector::scaled_binary(
            RingElem::V2,
            &super::binary::cyclic_coeffs(g, n).to_bools()
        )],
        true,
    )?;
    Ok(compare_codes(&code, &claimed))
}

/// The dual of a ring code, read back from the null space of its Gray image.
///
/// The binary dot product of Gray images is the `v^2` coefficient of the
/// ring inner product, and the `v^2` coefficients of `x.y`, `v(x.y)` and
/// `v^2(x.y)` are the three coefficients of `x.y`; hence
/// `psi(C^perp) = psi(C)^perp` for every submodule `C`.
pub fn dual_code(code: &RingCode) -> RingCode {
    let rows = gray_image_basis(code)
        .dual()
        .basis()
        .iter()
        .map(RingVector::from_gray)
        .collect();
    RingCode::new(code.n(), rows, false).expect("rows have length n")
}

/// How the true dual was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualMethod {
    /// Scan of all `8^n` vectors.
    BruteForce,
    /// Null space of the Gray image, pulled back through the Gray map.
    GrayNullSpace,
}

/// Claimed dual generator span (left) against the true dual (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAudit {
    pub method: DualMethod,
    pub comparison: Comparison<RingVector>,
    /// `deg f1 + deg f2 + deg f3`, the claimed `log2 |C^perp|`.
    pub claimed_size_log2: usize,
    /// For a witness on the claimed side: a codeword of `C` whose inner
    /// product with the witness is nonzero.
    pub non_orthogonal_partner: Option<RingVector>,
    /// `|C| |C^perp| = 8^n` (brute force only).
    pub size_product_holds: Option<bool>,
}

impl DualAudit {
    pub fn passed(&self) -> bool {
        self.comparison.equal() && self.comparison.right_log2 == self.claimed_size_log2
    }
}

pub fn audit_dual_formula(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
    limits: &Limits,
) -> Result<DualAudit> {
    let code = build_ring_cyclic(n, f1, f2, f3)?;
    let formula = dual_ring_formula(n, f1, f2, f3)?;
    let brute_feasible = 3 * n <= 63 && 8u64.saturating_pow(n as u32) <= limits.dual_brute_cap;
    let (method, comparison, size_product_holds) = if brute_feasible {
        let set = span_enumerate(&code, limits.enum_cap)?;
        let truth = dual_ring_bruteforce(&set, limits.dual_brute_cap)?;
        let claimed = span_enumerate(&formula, limits.enum_cap)?;
        (
            DualMethod::BruteForce,
            compare_ring_sets(&claimed, &truth.dual),
            Some(truth.size_product_holds),
        )
    } else {
        let truth = dual_code(&code);
        (DualMethod::GrayNullSpace, compare_codes(&formula, &truth), None)
    };
    let non_orthogonal_partner = match &comparison.witness {
        Some(Witness {
            side: Side::OnlyLeft,
            vector,
        }) => find_non_orthogonal(&code, vector),
        _ => None,
    };
    Ok(DualAudit {
        method,
        comparison,
        claimed_size_log2: f1.deg() + f2.deg() + f3.deg(),
        non_orthogonal_partner,
        size_product_holds,
    })
}

/// A codeword of `code` with nonzero inner product against `x`, searched
/// among the generators, their shifts and their `v`, `v^2` multiples (which
/// span the code over F2, so one exists whenever `x` is not in the dual).
fn find_non_orthogonal(code: &RingCode, x: &RingVector) -> Option<RingVector> {
    let shifts = if code.is_cyclic() { code.n() } else { 1 };
    code.generators().iter().find_map(|g| {
        let mut s = g.clone();
        for _ in 0..shifts {
            for r in [RingElem::ONE, RingElem::V, RingElem::V2] {
                let y = s.scale(r);
                if !x.inner_product(&y).ok()?.is_zero() {
                    return Some(y);
                }
            }
            s = s.sigma();
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    fn span_of(items: &[&str]) -> CodewordSet {
        let code = RingCode::new(items.len(), vec![RingVector(items.iter().map(|s| r(s)).collect())], false)
            .unwrap();
        span_enumerate(&code, 1 << 24).unwrap()
    }

    #[test]
    fn one_plus_v_breaks_the_product_decomposition() {
        let a = audit_decomposition(&span_of(&["1+v"]), 1 << 24).unwrap();
        assert_eq!((a.size_log2, a.product_log2()), (2, 3));
        let w = a.product.witness.as_ref().unwrap();
        assert_eq!(w.side, Side::OnlyRight);
        let back = RingVector::from_gray(&w.vector);
        assert!(!span_of(&["1+v"]).contains_ring(&back));
        assert_eq!(back, RingVector(vec![RingElem::V]));
        assert!(!a.passed());
    }

    #[test]
    fn v_matches_product_but_not_reconstruction() {
        let a = audit_decomposition(&span_of(&["v"]), 1 << 24).unwrap();
        assert_eq!(a.component_dims, [0, 1, 1]);
        assert!(a.product.equal());
        let w = a.reconstruction.witness.unwrap();
        assert_eq!(w.side, Side::OnlyLeft);
        assert_eq!(w.vector.lee_weight(), 1);
    }

    #[test]
    fn zero_code_passes() {
        let a = audit_decomposition(&CodewordSet::zero(SetKind::Ring { n: 2 }), 1 << 24).unwrap();
        assert!(a.passed());
    }

    #[test]
    fn size_formula_for_distinct_triples() {
        let f = p("x^3+x^2+x+1");
        assert!(audit_size_formula(8, &f, &f, &f).unwrap().passed());
        let s = audit_size_formula(2, &BinPoly::one(), &BinPoly::one(), &p("x^2+1")).unwrap();
        assert_eq!((s.claimed_log2, s.actual_log2), (4, 6));
    }

    #[test]
    fn dual_formula_example_nineteen_fails_with_witness() {
        let f = p("x^3+x^2+x+1");
        let limits = Limits {
            dual_brute_cap: 1 << 20,
            ..Limits::default()
        };
        let a = audit_dual_formula(8, &f, &f, &f, &limits).unwrap();
        assert_eq!(a.method, DualMethod::GrayNullSpace);
        assert_eq!((a.comparison.left_log2, a.comparison.right_log2), (6, 9));
        assert_eq!(a.comparison.witness.as_ref().unwrap().side, Side::OnlyRight);
        assert!(!a.passed());
    }

    #[test]
    fn dual_formula_brute_force_small() {
        let g = p("x+1");
        let a = audit_dual_formula(2, &g, &g, &g, &Limits::default()).unwrap();
        assert_eq!(a.method, DualMethod::BruteForce);
        assert_eq!(a.size_product_holds, Some(true));
        if let Some(w) = &a.comparison.witness {
            if w.side == Side::OnlyLeft {
                let y = a.non_orthogonal_partner.as_ref().unwrap();
                assert!(!w.vector.inner_product(y).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn brute_force_and_null_space_agree() {
        let limits = Limits {
            dual_brute_cap: 1,
            ..Limits::default()
        };
        for n in 1..=3usize {
            let divs = crate::factor::enumerate_divisors(n, 128, 1 << 16).unwrap();
            for f1 in &divs {
                for f3 in &divs {
                    let a = audit_dual_formula(n, f1, &BinPoly::one(), f3, &Limits::default()).unwrap();
                    let b = audit_dual_formula(n, f1, &BinPoly::one(), f3, &limits).unwrap();
                    assert_eq!(a.comparison.right_log2, b.comparison.right_log2);
                    assert_eq!(a.comparison.equal(), b.comparison.equal());
                }
            }
        }
    }

    #[test]
    fn v2_generator_claims() {
        let f = p("x^3+x+1");
        let c = audit_v2_generator(7, &f, &f, &f, &f).unwrap();
        assert_eq!((c.left_log2, c.right_log2), (12, 8));
        assert_eq!(c.witness.unwrap().side, Side::OnlyLeft);
        let f = p("x^3+x^2+x+1");
        assert!(!audit_single_generator(8, &f, &f, &f).unwrap().equal());
    }

    #[test]
    fn single_generator_equal_case() {
        let z = BinPoly::xn_plus_one(3);
        assert!(audit_single_generator(3, &z, &z, &z).unwrap().equal());
        let one = BinPoly::one();
        let c = audit_single_generator(3, &one, &one, &one).unwrap();
        assert_eq!((c.left_log2, c.right_log2), (9, 6));
    }
}
