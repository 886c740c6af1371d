//! Dual containment, CSS parameters and divisor-triple search.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::codes::{
    build_ring_cyclic, gray_image_basis, projections_from_gray, require_divisor, BinaryCode,
};
use crate::error::{Error, Result};
use crate::factor::enumerate_divisors;
use crate::gf2poly::BinPoly;
use crate::limits::{pow2, Limits};

/// `f f^* | x^n + 1`, the polynomial test for `<f>^perp ⊆ <f>` over F2.
pub fn dual_containing_poly(n: usize, f: &BinPoly) -> Result<bool> {
    require_divisor("f", f, n)?;
    let ff = f.mul(&f.reciprocal()?);
    Ok(ff.divides(&BinPoly::xn_plus_one(n)))
}

/// How the distance `D` of a record was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DMethod {
    /// Minimum weight over the whole enumerated Gray image.
    Enumerated,
    /// Minimum of the distances of the three block projections.
    ComponentFormula,
}

impl DMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DMethod::Enumerated => "enumerated",
            DMethod::ComponentFormula => "component_formula",
        }
    }
}

/// Parameters `[[N, K, D]]` of the CSS code built from the Gray image of
/// `<v f1, (1+v) f2, (1+v^2) f3>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumCodeRecord {
    pub n: usize,
    pub f1: BinPoly,
    pub f2: BinPoly,
    pub f3: BinPoly,
    pub big_n: usize,
    /// `2 (3n - sum deg fi) - 3n`.
    pub k: i64,
    pub d: u32,
    pub d_method: DMethod,
    /// Dual containment of the Gray image and its dimension were both
    /// confirmed by rank computation.
    pub validated: bool,
    pub notes: Vec<String>,
}

impl QuantumCodeRecord {
    pub fn params(&self) -> (usize, i64, u32) {
        (self.big_n, self.k, self.d)
    }
}

/// Binary-level check of the CSS hypothesis on `B = psi(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssValidation {
    /// `3n - sum deg fi`.
    pub expected_dim: usize,
    /// `dim B` and `dim B^perp`; `None` when `3n` exceeds the rank cap.
    pub dims: Option<(usize, usize)>,
    pub contains_dual: Option<bool>,
}

impl CssValidation {
    pub fn ran(&self) -> bool {
        self.dims.is_some()
    }

    pub fn validated(&self) -> bool {
        self.contains_dual == Some(true)
            && self.dims.is_some_and(|(k, _)| k == self.expected_dim)
    }
}

fn validate_basis(n: usize, degs: usize, b: &BinaryCode, rank_cap: usize) -> CssValidation {
    let expected_dim = 3 * n - degs;
    if 3 * n > rank_cap {
        return CssValidation {
            expected_dim,
            dims: None,
            contains_dual: None,
        };
    }
    let dual = b.dual();
    CssValidation {
        expected_dim,
        dims: Some((b.dim(), dual.dim())),
        contains_dual: Some(dual.is_subcode_of(b)),
    }
}

/// Builds `B = psi(C)` and checks `B^perp ⊆ B` and `dim B = 3n - sum deg fi`
/// when `3n <= rank_cap`.
pub fn validate_css_binary(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
    rank_cap: usize,
) -> Result<CssValidation> {
    let b = gray_image_basis(&build_ring_cyclic(n, f1, f2, f3)?);
    Ok(validate_basis(n, f1.deg() + f2.deg() + f3.deg(), &b, rank_cap))
}

fn check_dual_containing(n: usize, fs: [&BinPoly; 3]) -> Result<()> {
    for (label, f) in ["f1", "f2", "f3"].into_iter().zip(fs) {
        require_divisor(label, f, n)?;
        if !dual_containing_poly(n, f)? {
            return Err(Error::NotDualContaining {
                label: label.to_string(),
                generator: f.to_string(),
                n,
            });
        }
    }
    Ok(())
}

/// Memo of component distances, keyed by the canonical basis.
type DistanceMemo = BTreeMap<BinaryCode, u32>;

fn component_floor(b: &BinaryCode, limits: &Limits, memo: &mut DistanceMemo) -> Result<u32> {
    let n = b.n() / 3;
    let mut best: Option<u32> = None;
    for c in projections_from_gray(b) {
        if c.dim() == 0 {
            continue;
        }
        let d = match memo.get(&c) {
            Some(&d) => d,
            None => {
                let d = c.min_distance(limits.hamming_cap)?;
                memo.insert(c, d);
                d
            }
        };
        best = Some(best.map_or(d, |x| x.min(d)));
    }
    debug_assert!(n == 0 || best.is_some());
    best.ok_or(Error::ZeroCode)
}

/// `D` per the distance policy: enumerate `B` when `2^dim B <= enum_cap`,
/// else take the component formula. The formula is a lower bound on the
/// true distance and serves as an early exit while enumerating.
fn distance(b: &BinaryCode, limits: &Limits, memo: &mut DistanceMemo) -> Result<(u32, DMethod)> {
    let enumerable = pow2(b.dim()) <= limits.enum_cap;
    let floor = match component_floor(b, limits, memo) {
        Ok(d) => Some(d),
        Err(e @ Error::EnumerationCapExceeded { .. }) if !enumerable => return Err(e),
        Err(Error::EnumerationCapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    if !enumerable {
        return Ok((floor.expect("set above"), DMethod::ComponentFormula));
    }
    let floor = floor.unwrap_or(1);
    let d = if b.basis().iter().any(|r| r.weight() as u32 == floor) {
        floor
    } else {
        b.min_distance_with_floor(limits.enum_cap, floor)?
    };
    Ok((d, DMethod::Enumerated))
}

/// Distance of a Gray image under the same policy as the records.
pub fn code_distance(b: &BinaryCode, limits: &Limits) -> Result<(u32, DMethod)> {
    distance(b, limits, &mut DistanceMemo::new())
}

fn evaluate(
    n: usize,
    fs: [&BinPoly; 3],
    limits: &Limits,
    memo: &mut DistanceMemo,
) -> Result<QuantumCodeRecord> {
    let code = build_ring_cyclic(n, fs[0], fs[1], fs[2])?;
    let b = gray_image_basis(&code);
    if b.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let degs: usize = fs.iter().map(|f| f.deg()).sum();
    let k = 2 * (3 * n - degs) as i64 - 3 * n as i64;
    let (d, d_method) = distance(&b, limits, memo)?;
    let v = validate_basis(n, degs, &b, limits.rank_cap);

    let mut notes = Vec::new();
    if k <= 0 {
        notes.push(format!("degenerate parameters: K = {k}"));
    }
    match (v.dims, v.contains_dual) {
        (None, _) => notes.push(format!(
            "not validated: 3n = {} exceeds the rank cap {}",
            3 * n,
            limits.rank_cap
        )),
        (Some((dim, _)), contains) => {
            if dim != v.expected_dim {
                notes.push(format!(
                    "Gray image has dimension {dim}, not 3n - sum deg fi = {}; rank-based K = {}",
                    v.expected_dim,
                    2 * dim as i64 - 3 * n as i64
                ));
            }
            if contains == Some(false) {
                notes.push("Gray image does not contain its dual".to_string());
            }
        }
    }
    Ok(QuantumCodeRecord {
        n,
        f1: fs[0].clone(),
        f2: fs[1].clone(),
        f3: fs[2].clone(),
        big_n: 3 * n,
        k,
        d,
        d_method,
        validated: v.validated(),
        notes,
    })
}

/// CSS parameters for a triple that passes the polynomial dual-containment
/// test componentwise.
pub fn css_from_triple(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
    limits: &Limits,
) -> Result<QuantumCodeRecord> {
    check_dual_containing(n, [f1, f2, f3])?;
    evaluate(n, [f1, f2, f3], limits, &mut DistanceMemo::new())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Keep only triples whose components all pass the polynomial test.
    pub require_dual_containing: bool,
    /// Only triples with `f1 = f2 = f3`.
    pub equal_only: bool,
    pub min_k: Option<i64>,
    pub max_results: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            require_dual_containing: true,
            equal_only: false,
            min_k: None,
            max_results: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub records: Vec<QuantumCodeRecord>,
    pub divisors: usize,
    /// Triples considered.
    pub scanned: u64,
    /// Triples passing the dual-containment filter.
    pub admissible: u64,
    /// Admissible triples giving the zero code.
    pub zero_codes: u64,
    /// Records dropped by `min_k`.
    pub below_min_k: u64,
    /// Records dropped by `max_results`.
    pub truncated: u64,
}

/// Evaluates every admissible triple of divisors of `x^n + 1`. Records come
/// out by descending `K`, then by `(f1, f2, f3)` in polynomial order.
pub fn search_triples(n: usize, opts: &SearchOptions, limits: &Limits) -> Result<SearchOutcome> {
    let divisors = enumerate_divisors(n, limits.factor_bound, limits.divisor_cap)?;
    let mut passes = Vec::with_capacity(divisors.len());
    for f in &divisors {
        passes.push(dual_containing_poly(n, f)?);
    }
    let idx: Vec<usize> = (0..divisors.len()).collect();
    let mut triples: Vec<[usize; 3]> = Vec::new();
    if opts.equal_only {
        triples.extend(idx.iter().map(|&i| [i, i, i]));
    } else {
        for &i in &idx {
            for &j in &idx {
                for &l in &idx {
                    triples.push([i, j, l]);
                }
            }
        }
    }
    let scanned = triples.len() as u64;
    let mut memo = DistanceMemo::new();
    let mut records = Vec::new();
    let (mut admissible, mut zero_codes, mut below_min_k) = (0, 0, 0);
    for t in triples {
        let all_pass = t.iter().all(|&i| passes[i]);
        if opts.require_dual_containing && !all_pass {
            continue;
        }
        admissible += 1;
        let fs = t.map(|i| &divisors[i]);
        let mut rec = match evaluate(n, fs, limits, &mut memo) {
            Ok(r) => r,
            Err(Error::ZeroCode) => {
                zero_codes += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if !all_pass {
            for (label, &i) in ["f1", "f2", "f3"].iter().zip(&t) {
                if !passes[i] {
                    rec.notes.push(format!("{label} fails the polynomial dual-containment test"));
                }
            }
        }
        if opts.min_k.is_some_and(|m| rec.k < m) {
            below_min_k += 1;
            continue;
        }
        records.push(rec);
    }
    records.sort_by(|a, b| {
        b.k.cmp(&a.k)
            .then_with(|| a.f1.cmp(&b.f1))
            .then_with(|| a.f2.cmp(&b.f2))
            .then_with(|| a.f3.cmp(&b.f3))
    });
    let mut truncated = 0;
    if let Some(m) = opts.max_results {
        truncated = records.len().saturating_sub(m) as u64;
        records.truncate(m);
    }
    Ok(SearchOutcome {
        records,
        divisors: divisors.len(),
        scanned,
        admissible,
        zero_codes,
        below_min_k,
        truncated,
    })
}
