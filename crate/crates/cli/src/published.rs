//! The nine published parameter sets and the generator claims printed next
//! to them.

use ringq_core::codes::audit::{audit_v2_generator, compare_codes, dual_code, Side};
use ringq_core::codes::{build_ring_cyclic, gray_image_basis, projections_from_gray, RingCode};
use ringq_core::quantum::{css_from_triple, QuantumCodeRecord};
use ringq_core::{BinPoly, Error, Limits, RingElem, RingVector};

use crate::report::{Field, Kind, ReportLine};

#[derive(Clone, Copy, Debug)]
pub struct PublishedRow {
    pub n: usize,
    /// `f1 = f2 = f3`.
    pub f: &'static str,
    pub expected: (usize, i64, u32),
    /// `g` in the printed single generator `<v^2 g>` of the code.
    pub printed_generator: Option<&'static str>,
    /// `h` in the printed dual generator `<v^2 h>`.
    pub printed_dual: Option<&'static str>,
}

pub const ROWS: [PublishedRow; 9] = [
    PublishedRow {
        n: 8,
        f: "x^3+x^2+x+1",
        expected: (24, 6, 2),
        printed_generator: Some("x^3+x^2+x+1"),
        printed_dual: Some("x^5+x^4+x+1"),
    },
    PublishedRow {
        n: 8,
        f: "x^2+1",
        expected: (24, 12, 2),
        printed_generator: Some("x^2+1"),
        printed_dual: Some("x^6+x^4+x^2+1"),
    },
    PublishedRow {
        n: 8,
        f: "x+1",
        expected: (24, 18, 2),
        printed_generator: None,
        printed_dual: None,
    },
    PublishedRow {
        n: 7,
        f: "x^3+x+1",
        expected: (21, 3, 3),
        printed_generator: Some("x^3+x+1"),
        printed_dual: Some("x^4+x^2+x+1"),
    },
    PublishedRow {
        n: 15,
        f: "x^4+x+1",
        expected: (45, 21, 3),
        printed_generator: Some("x^4+x+1"),
        printed_dual: None,
    },
    PublishedRow {
        n: 16,
        f: "x^3+x^2+x+1",
        expected: (48, 30, 2),
        printed_generator: Some("x^3+x^2+x+1"),
        printed_dual: Some("x^13+x^12+x^9+x^8+x^5+x^4+x+1"),
    },
    PublishedRow {
        n: 16,
        f: "x^4+1",
        expected: (48, 24, 2),
        printed_generator: None,
        printed_dual: None,
    },
    PublishedRow {
        n: 21,
        f: "x^6+x^5+x^4+x^2+1",
        expected: (63, 27, 3),
        printed_generator: Some("x^4+x+1"),
        printed_dual: None,
    },
    PublishedRow {
        n: 21,
        f: "x^3+x^2+1",
        expected: (63, 45, 3),
        printed_generator: None,
        printed_dual: None,
    },
];

fn p(s: &str) -> BinPoly {
    s.parse().expect("table polynomials parse")
}

fn v2_code(n: usize, g: &BinPoly) -> RingCode {
    let bits = ringq_core::codes::cyclic_coeffs(g, n).to_bools();
    RingCode::new(n, vec![RingVector::scaled_binary(RingElem::V2, &bits)], true)
        .expect("length n")
}

fn bits_poly(bits: &ringq_core::BitVec) -> BinPoly {
    BinPoly::from_exponents(bits.iter_ones())
}

#[derive(Clone, Debug)]
pub struct RowOutcome {
    pub row: PublishedRow,
    pub record: Result<QuantumCodeRecord, Error>,
    /// Discrepancies between the printed claims and the computed code.
    pub errata: Vec<String>,
}

impl RowOutcome {
    pub fn matches(&self) -> bool {
        self.record.as_ref().is_ok_and(|r| r.params() == self.row.expected)
    }

    pub fn to_line(&self, index: usize) -> ReportLine {
        let (got, d_method, validated, mut notes) = match &self.record {
            Ok(r) => (
                Field::Params(r.big_n, r.k, r.d),
                Field::from(r.d_method.as_str()),
                Field::Bool(r.validated),
                r.notes.clone(),
            ),
            Err(e) => (Field::Null, Field::Null, Field::Null, vec![e.to_string()]),
        };
        notes.extend(self.errata.iter().cloned());
        let (en, ek, ed) = self.row.expected;
        ReportLine::new(Kind::Reproduction)
            .with("row", index)
            .with("n", self.row.n)
            .with("f", &p(self.row.f))
            .with("expected", Field::Params(en, ek, ed))
            .with("computed", got)
            .with("status", if self.matches() { "PASS" } else { "FAIL" })
            .with("d_method", d_method)
            .with("validated", validated)
            .with("notes", Field::List(notes))
    }
}

fn errata(row: &PublishedRow, limits: &Limits, record: Option<&QuantumCodeRecord>) -> Vec<String> {
    let n = row.n;
    let f = p(row.f);
    let xn1 = BinPoly::xn_plus_one(n);
    let mut out = Vec::new();
    let code = match build_ring_cyclic(n, &f, &f, &f) {
        Ok(c) => c,
        Err(_) => return out,
    };

    if let Some(g) = row.printed_generator.map(p) {
        if !g.divides(&xn1) {
            out.push(format!(
                "printed generator v^2({g}) does not match f = {f}: {g} does not divide x^{n}+1"
            ));
        } else if let Ok(c) = audit_v2_generator(n, &f, &f, &f, &g) {
            if let Some(w) = c.witness {
                out.push(format!(
                    "printed generator <v^2({g})> has 2^{} codewords, the code has 2^{}; {} is in {}",
                    c.right_log2,
                    c.left_log2,
                    w.vector,
                    if w.side == Side::OnlyLeft { "the code only" } else { "<v^2 g> only" },
                ));
            }
        }
    }

    if let Some(h) = row.printed_dual.map(p) {
        let (hh, _) = xn1.div_rem(&f).expect("f divides");
        let hstar = hh.reciprocal().expect("h(0) = 1");
        if h == hh && hh != hstar {
            out.push(format!("printed dual generator uses h = {hh}; its reciprocal is {hstar}"));
        }
        let c = compare_codes(&v2_code(n, &h), &dual_code(&code));
        if let Some(w) = c.witness {
            out.push(format!(
                "printed dual <v^2({h})> has 2^{} codewords, the dual has 2^{}; {} is in {}",
                c.left_log2,
                c.right_log2,
                w.vector,
                if w.side == Side::OnlyLeft { "<v^2 h> only" } else { "the dual only" },
            ));
        }
    }

    if let Some(r) = record {
        if r.d < row.expected.2 {
            let comps = projections_from_gray(&gray_image_basis(&code));
            for (j, c) in comps.iter().enumerate() {
                if let Ok(w) = c.min_weight_word(limits.hamming_cap) {
                    if w.weight() as u32 == r.d {
                        out.push(format!(
                            "block {} of the Gray image contains {} of weight {}",
                            j + 1,
                            bits_poly(&w),
                            r.d
                        ));
                        break;
                    }
                }
            }
        }
    }
    out
}

/// Recomputes every row.
pub fn reproduce(limits: &Limits) -> Vec<RowOutcome> {
    ROWS.iter()
        .map(|row| {
            let f = p(row.f);
            let record = css_from_triple(row.n, &f, &f, &f, limits);
            let errata = errata(row, limits, record.as_ref().ok());
            RowOutcome {
                row: *row,
                record,
                errata,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_divisors_and_dual_containing() {
        for r in ROWS {
            let f = p(r.f);
            assert!(ringq_core::quantum::dual_containing_poly(r.n, &f).unwrap());
        }
    }

    #[test]
    fn printed_dual_of_length_seven_is_not_reciprocated() {
        let out = reproduce(&Limits::default());
        assert!(out[3].errata.iter().any(|s| s.contains("its reciprocal is x^4+x^3+x^2+1")));
        assert!(out[7].errata.iter().any(|s| s.contains("does not divide x^21+1")));
    }
}
