use ringq_core::codes::audit::{
    audit_decomposition, audit_dual_formula, audit_single_generator, audit_size_formula,
    Comparison, DualMethod, Side,
};
use ringq_core::codes::{
    build_ring_cyclic, component_distance, gray_image_basis, min_lee_enum, projections_from_gray,
    span_enumerate, RingCode,
};
use ringq_core::quantum::{
    code_distance, css_from_triple, dual_containing_poly, search_triples, validate_css_binary,
    DMethod, QuantumCodeRecord, SearchOptions,
};
use ringq_core::{enumerate_divisors, factor_xn1, BinPoly, Error, Limits, RingElem, RingVector};

use crate::published::reproduce;
use crate::report::{Field, Kind, ReportLine};

pub fn factor(n: usize, limits: &Limits) -> Result<Vec<ReportLine>, Error> {
    let fac = factor_xn1(n, limits.factor_bound)?;
    Ok(vec![ReportLine::new(Kind::Factorization)
        .with("n", n)
        .with("factors", Field::Factors(fac.factors().to_vec()))
        .with("distinct_factors", fac.factors().len())
        .with("divisor_count", fac.divisor_count())])
}

fn triple_label(n: usize, f1: &BinPoly, f2: &BinPoly, f3: &BinPoly) -> String {
    format!("n={n} f1={f1} f2={f2} f3={f3}")
}

fn code_params(c: &ringq_core::BinaryCode, limits: &Limits) -> String {
    match c.min_distance(limits.hamming_cap) {
        Ok(d) => format!("[{},{},{d}]", c.n(), c.dim()),
        Err(_) => format!("[{},{},-]", c.n(), c.dim()),
    }
}

fn record_line(kind: Kind, r: &QuantumCodeRecord) -> ReportLine {
    ReportLine::new(kind)
        .with("n", r.n)
        .with("f1", &r.f1)
        .with("f2", &r.f2)
        .with("f3", &r.f3)
        .with("params", Field::Params(r.big_n, r.k, r.d))
        .with("d_method", r.d_method.as_str())
        .with("validated", r.validated)
        .with("notes", Field::List(r.notes.clone()))
}

pub fn inspect(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
    limits: &Limits,
) -> Result<Vec<ReportLine>, Error> {
    let code = build_ring_cyclic(n, f1, f2, f3)?;
    let b = gray_image_basis(&code);
    let head = ReportLine::new(Kind::Inspection)
        .with("n", n)
        .with("f1", f1)
        .with("f2", f2)
        .with("f3", f3);
    if b.dim() == 0 {
        return Ok(vec![head
            .with("size_log2", 0usize)
            .with("notes", Field::List(vec!["zero code: no nonzero codeword, no quantum code".into()]))]);
    }

    let mut notes = Vec::new();
    let span = (1u64.checked_shl(b.dim() as u32).unwrap_or(u64::MAX) <= limits.enum_cap)
        .then(|| span_enumerate(&code, limits.enum_cap))
        .transpose()?;
    let (size_log2, size_method) = match &span {
        Some(s) => (s.size().trailing_zeros() as usize, "enumerated"),
        None => (b.dim(), "rank"),
    };
    let claimed = 3 * n - f1.deg() - f2.deg() - f3.deg();
    let comps = projections_from_gray(&b);
    let (d_l, d_method) = code_distance(&b, limits)?;
    if d_method == DMethod::Enumerated {
        if let Ok(formula) = component_distance(&comps, limits.hamming_cap) {
            if formula != d_l {
                notes.push(format!(
                    "component formula gives {formula}, enumeration gives {d_l}"
                ));
            }
        }
        if let Some(s) = &span {
            let lee = min_lee_enum(s)?;
            if lee != d_l {
                notes.push(format!("minimum Lee weight {lee} differs from Gray distance {d_l}"));
            }
        }
    }
    let mut poly_ok = [false; 3];
    for (ok, f) in poly_ok.iter_mut().zip([f1, f2, f3]) {
        *ok = dual_containing_poly(n, f)?;
    }
    let validation = validate_css_binary(n, f1, f2, f3, limits.rank_cap)?;
    let quantum = if poly_ok.iter().all(|&x| x) {
        let r = css_from_triple(n, f1, f2, f3, limits)?;
        notes.extend(r.notes.iter().cloned());
        Some(r)
    } else {
        for (label, ok) in ["f1", "f2", "f3"].iter().zip(poly_ok) {
            if !ok {
                notes.push(format!("{label} fails the polynomial dual-containment test"));
            }
        }
        notes.push("no quantum code".into());
        None
    };

    let mut lines = vec![head
        .with("size_log2", size_log2)
        .with("size_method", size_method)
        .with("claimed_size_log2", claimed)
        .with("C1", code_params(&comps[0], limits))
        .with("C2", code_params(&comps[1], limits))
        .with("C3", code_params(&comps[2], limits))
        .with("d_L", d_l)
        .with("d_method", d_method.as_str())
        .with("dual_containing_f1", poly_ok[0])
        .with("dual_containing_f2", poly_ok[1])
        .with("dual_containing_f3", poly_ok[2])
        .with("gray_dual_contained", validation.contains_dual)
        .with("gray_dims", validation.dims.map(|(k, kd)| format!("{k}+{kd}")))
        .with(
            "quantum",
            quantum.as_ref().map_or(Field::Null, |r| Field::Params(r.big_n, r.k, r.d)),
        )
        .with("validated", quantum.as_ref().map(|r| r.validated))
        .with("notes", Field::List(notes))];
    lines.extend(triple_audits(n, f1, f2, f3, span.is_some(), limits)?);
    Ok(lines)
}

pub struct SearchArgs {
    pub n: usize,
    pub min_k: Option<i64>,
    pub equal_only: bool,
    pub max_results: Option<usize>,
    pub require_dual_containing: bool,
}

pub fn search(args: &SearchArgs, limits: &Limits) -> Result<Vec<ReportLine>, Error> {
    let opts = SearchOptions {
        require_dual_containing: args.require_dual_containing,
        equal_only: args.equal_only,
        min_k: args.min_k,
        max_results: args.max_results,
    };
    let out = search_triples(args.n, &opts, limits)?;
    let mut lines: Vec<ReportLine> = out
        .records
        .iter()
        .map(|r| record_line(Kind::SearchResult, r))
        .collect();
    lines.push(
        ReportLine::new(Kind::Summary)
            .with("n", args.n)
            .with("divisors", out.divisors)
            .with("triples_scanned", out.scanned)
            .with("admissible", out.admissible)
            .with("zero_codes_rejected", out.zero_codes)
            .with("below_min_k", out.below_min_k)
            .with("truncated", out.truncated)
            .with("emitted", out.records.len()),
    );
    Ok(lines)
}

/// Reproduction rows and whether all of them matched.
pub fn reproduce_published(limits: &Limits) -> (Vec<ReportLine>, bool) {
    let rows = reproduce(limits);
    let matched = rows.iter().filter(|r| r.matches()).count();
    let mut lines: Vec<ReportLine> = rows.iter().enumerate().map(|(i, r)| r.to_line(i + 1)).collect();
    lines.push(
        ReportLine::new(Kind::Summary)
            .with("rows", rows.len())
            .with("matched", matched)
            .with("status", if matched == rows.len() { "PASS" } else { "FAIL" }),
    );
    (lines, matched == rows.len())
}

fn audit_line<T: ToString>(
    subject: &str,
    n: usize,
    check: &str,
    c: &Comparison<T>,
    method: &str,
) -> ReportLine {
    let (side, witness, gray) = match &c.witness {
        None => (Field::Null, Field::Null, Field::Null),
        Some(w) => (
            Field::from(match w.side {
                Side::OnlyLeft => "left_only",
                Side::OnlyRight => "right_only",
            }),
            Field::Str(w.vector.to_string()),
            Field::Null,
        ),
    };
    ReportLine::new(Kind::Audit)
        .with("subject", subject)
        .with("n", n)
        .with("check", check)
        .with("status", if c.equal() { "PASS" } else { "FAIL" })
        .with("left_log2", c.left_log2)
        .with("right_log2", c.right_log2)
        .with("method", method)
        .with("witness_side", side)
        .with("witness", witness)
        .with("witness_gray", gray)
        .with("partner", Field::Null)
}

fn set_field(line: &mut ReportLine, key: &str, value: Field) {
    if let Some(slot) = line.fields.iter_mut().find(|(k, _)| *k == key) {
        slot.1 = value;
    }
}

fn decomposition_lines(
    subject: &str,
    set: &ringq_core::CodewordSet,
    limits: &Limits,
) -> Result<Vec<ReportLine>, Error> {
    let n = set.length();
    let a = audit_decomposition(set, limits.enum_cap)?;
    let mut product = audit_line(subject, n, "gray_product", &a.product, "enumerated");
    if let Some(w) = &a.product.witness {
        set_field(&mut product, "witness", Field::Ring(RingVector::from_gray(&w.vector)));
        set_field(&mut product, "witness_gray", Field::Bits(w.vector.clone()));
    }
    let mut recon = audit_line(subject, n, "reconstruction", &a.reconstruction, "enumerated");
    if let Some(w) = &a.reconstruction.witness {
        set_field(&mut recon, "witness", Field::Ring(w.vector.clone()));
        set_field(&mut recon, "witness_gray", Field::Bits(w.vector.gray()));
    }
    Ok(vec![product, recon])
}

fn ring_witness_fields(line: &mut ReportLine, c: &Comparison<RingVector>) {
    if let Some(w) = &c.witness {
        set_field(line, "witness", Field::Ring(w.vector.clone()));
        set_field(line, "witness_gray", Field::Bits(w.vector.gray()));
    }
}

/// Size-formula, decomposition, dual-formula and single-generator audits of
/// one cyclic code.
pub fn triple_audits(
    n: usize,
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
    enumerable: bool,
    limits: &Limits,
) -> Result<Vec<ReportLine>, Error> {
    let subject = triple_label(n, f1, f2, f3);
    let mut lines = Vec::new();

    let s = audit_size_formula(n, f1, f2, f3)?;
    let size = Comparison::<RingVector> {
        left_log2: s.claimed_log2,
        right_log2: s.actual_log2,
        witness: None,
    };
    let mut line = audit_line(&subject, n, "size_formula", &size, "rank");
    if !s.passed() {
        set_field(&mut line, "status", "FAIL".into());
    }
    lines.push(line);

    if enumerable {
        let set = span_enumerate(&build_ring_cyclic(n, f1, f2, f3)?, limits.enum_cap)?;
        lines.extend(decomposition_lines(&subject, &set, limits)?);
    }

    let d = audit_dual_formula(n, f1, f2, f3, limits)?;
    let method = match d.method {
        DualMethod::BruteForce => "brute_force",
        DualMethod::GrayNullSpace => "gray_null_space",
    };
    let mut line = audit_line(&subject, n, "dual_formula", &d.comparison, method);
    ring_witness_fields(&mut line, &d.comparison);
    if let Some(y) = &d.non_orthogonal_partner {
        set_field(&mut line, "partner", Field::Ring(y.clone()));
    }
    if !d.passed() {
        set_field(&mut line, "status", "FAIL".into());
    }
    lines.push(line);

    let g = audit_single_generator(n, f1, f2, f3)?;
    let mut line = audit_line(&subject, n, "single_generator", &g, "rank");
    ring_witness_fields(&mut line, &g);
    lines.push(line);
    Ok(lines)
}

fn catalog() -> Vec<(&'static str, RingCode)> {
    let r = |s: &str| s.parse::<RingElem>().expect("catalog element");
    let single = |items: &[&str]| {
        RingCode::new(items.len(), vec![RingVector(items.iter().map(|s| r(s)).collect())], false)
            .expect("consistent length")
    };
    vec![
        ("<1+v>", single(&["1+v"])),
        ("<v>", single(&["v"])),
        ("<v+v^2>", single(&["v+v^2"])),
        ("<1+v^2>", single(&["1+v^2"])),
        ("zero", RingCode::new(1, vec![], false).expect("empty")),
        ("<(v,0)>", single(&["v", "0"])),
        ("<(v,v)>", single(&["v", "v"])),
        ("<(1+v,1+v)>", single(&["1+v", "1+v"])),
        ("<(1,1,1,1)>", single(&["1", "1", "1", "1"])),
        ("<(1,v,1+v^2)>", single(&["1", "v", "1+v^2"])),
    ]
}

fn self_orthogonal(set: &ringq_core::CodewordSet) -> bool {
    let rows: Vec<RingVector> = set.iter_ring().collect();
    rows.iter()
        .all(|x| rows.iter().all(|y| x.inner_product(y).is_ok_and(|p| p.is_zero())))
}

/// Audits the catalog of small codes and every cyclic code of length at
/// most `n_max`.
pub fn audit(n_max: usize, limits: &Limits) -> Result<Vec<ReportLine>, Error> {
    let mut lines = Vec::new();
    for (name, code) in catalog() {
        let set = span_enumerate(&code, limits.enum_cap)?;
        lines.extend(decomposition_lines(name, &set, limits)?);
        if set.size() > 1 && self_orthogonal(&set) {
            let image = gray_image_basis(&code);
            let ok = image.is_self_orthogonal();
            let c = Comparison::<RingVector> {
                left_log2: set.size().trailing_zeros() as usize,
                right_log2: image.dim(),
                witness: None,
            };
            let mut line = audit_line(name, code.n(), "self_orthogonal_image", &c, "rank");
            if !ok {
                set_field(&mut line, "status", "FAIL".into());
            }
            lines.push(line);
        }
    }
    for n in 1..=n_max {
        let divisors = enumerate_divisors(n, limits.factor_bound, limits.divisor_cap)?;
        for f1 in &divisors {
            for f2 in &divisors {
                for f3 in &divisors {
                    lines.extend(triple_audits(n, f1, f2, f3, true, limits)?);
                }
            }
        }
    }
    let failed = lines
        .iter()
        .filter(|l| l.get("status") == Some(&Field::from("FAIL")))
        .count();
    let total = lines.len();
    lines.push(
        ReportLine::new(Kind::Summary)
            .with("checks", total)
            .with("passed", total - failed)
            .with("failed", failed),
    );
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn factor_fifteen() {
        let l = &factor(15, &Limits::default()).unwrap()[0];
        assert_eq!(
            l.get("factors").unwrap().to_text(),
            "(x+1)(x^2+x+1)(x^4+x+1)(x^4+x^3+1)(x^4+x^3+x^2+x+1)"
        );
        assert_eq!(l.get("divisor_count"), Some(&Field::Int(32)));
    }

    #[test]
    fn inspect_length_eight() {
        let f = p("x^3+x^2+x+1");
        let lines = inspect(8, &f, &f, &f, &Limits::default()).unwrap();
        assert_eq!(lines[0].get("quantum"), Some(&Field::Params(24, 6, 2)));
        assert_eq!(lines[0].get("size_method"), Some(&Field::from("enumerated")));
        assert!(lines[1..].iter().all(|l| l.kind == Kind::Audit));
    }

    #[test]
    fn inspect_zero_code() {
        let f = p("x+1");
        let lines = inspect(1, &f, &f, &f, &Limits::default()).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].get("quantum").is_none());
    }

    #[test]
    fn audit_flags_one_plus_v() {
        let lines = audit(1, &Limits::default()).unwrap();
        let l = lines
            .iter()
            .find(|l| {
                l.get("subject") == Some(&Field::from("<1+v>"))
                    && l.get("check") == Some(&Field::from("gray_product"))
            })
            .unwrap();
        assert_eq!(l.get("status"), Some(&Field::from("FAIL")));
        assert_eq!(l.get("left_log2"), Some(&Field::Int(2)));
        assert_eq!(l.get("right_log2"), Some(&Field::Int(3)));
        assert_eq!(l.get("witness").unwrap().to_text(), "(v)");
    }
}
