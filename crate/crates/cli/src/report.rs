//! Report lines and their two renderings: aligned tables and JSON lines.

use std::fmt::Write as _;
use std::io::{self, Write};

use ringq_core::{BinPoly, BitVec, RingVector};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Factorization,
    Inspection,
    SearchResult,
    Audit,
    Reproduction,
    Summary,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Factorization => "factorization",
            Kind::Inspection => "inspection",
            Kind::SearchResult => "search_result",
            Kind::Audit => "audit",
            Kind::Reproduction => "reproduction",
            Kind::Summary => "summary",
        }
    }
}

/// A field value, kept typed so each format can render it its own way.
#[derive(Clone, Debug, PartialEq)]
pub enum Field {
    Null,
    Bool(bool),
    Int(i64),
    Str(String),
    Poly(BinPoly),
    Factors(Vec<(BinPoly, u32)>),
    Params(usize, i64, u32),
    Ring(RingVector),
    Bits(BitVec),
    List(Vec<String>),
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Str(s.to_string())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Str(s)
    }
}

impl From<&BinPoly> for Field {
    fn from(p: &BinPoly) -> Self {
        Field::Poly(p.clone())
    }
}

macro_rules! int_field {
    ($($t:ty),*) => {$(
        impl From<$t> for Field {
            fn from(x: $t) -> Self {
                Field::Int(x as i64)
            }
        }
    )*};
}
int_field!(i64, u64, u32, usize);

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(x: Option<T>) -> Self {
        x.map_or(Field::Null, Into::into)
    }
}

fn poly_json(p: &BinPoly) -> Value {
    json!({ "text": p.to_string(), "hex": p.to_hex() })
}

impl Field {
    pub fn to_json(&self) -> Value {
        match self {
            Field::Null => Value::Null,
            Field::Bool(b) => Value::Bool(*b),
            Field::Int(i) => json!(i),
            Field::Str(s) => json!(s),
            Field::Poly(p) => poly_json(p),
            Field::Factors(fs) => Value::Array(
                fs.iter()
                    .map(|(p, m)| {
                        let mut o = poly_json(p);
                        o["multiplicity"] = json!(m);
                        o
                    })
                    .collect(),
            ),
            Field::Params(n, k, d) => json!({ "N": n, "K": k, "D": d }),
            Field::Ring(v) => json!(v.to_string()),
            Field::Bits(b) => json!(b.to_string()),
            Field::List(xs) => json!(xs),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Field::Null => "-".to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Int(i) => i.to_string(),
            Field::Str(s) => s.clone(),
            Field::Poly(p) => p.to_string(),
            Field::Factors(fs) => fs.iter().fold(String::new(), |mut s, (p, m)| {
                let _ = write!(s, "({p})");
                if *m > 1 {
                    let _ = write!(s, "^{m}");
                }
                s
            }),
            Field::Params(n, k, d) => format!("[[{n},{k},{d}]]"),
            Field::Ring(v) => v.to_string(),
            Field::Bits(b) => b.to_string(),
            Field::List(xs) if xs.is_empty() => "-".to_string(),
            Field::List(xs) => xs.join("; "),
        }
    }
}

/// One output record: a kind and ordered named fields.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportLine {
    pub kind: Kind,
    pub fields: Vec<(&'static str, Field)>,
}

impl ReportLine {
    pub fn new(kind: Kind) -> Self {
        Self {
            kind,
            fields: Vec::new(),
        }
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Field>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind.as_str()));
        for (k, v) in &self.fields {
            m.insert((*k).into(), v.to_json());
        }
        Value::Object(m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Records,
}

pub fn render(lines: &[ReportLine], format: Format, out: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Records => {
            for l in lines {
                writeln!(out, "{}", l.to_json())?;
            }
            Ok(())
        }
        Format::Table => render_tables(lines, out),
    }
}

fn same_shape(a: &ReportLine, b: &ReportLine) -> bool {
    a.kind == b.kind
        && a.fields.len() == b.fields.len()
        && a.fields.iter().zip(&b.fields).all(|(x, y)| x.0 == y.0)
}

/// Runs of lines with the same kind and keys become one aligned table; a
/// lone line is printed as key/value pairs.
fn render_tables(lines: &[ReportLine], out: &mut impl Write) -> io::Result<()> {
    let mut i = 0;
    let mut first = true;
    while i < lines.len() {
        let mut j = i + 1;
        while j < lines.len() && same_shape(&lines[i], &lines[j]) {
            j += 1;
        }
        if !first {
            writeln!(out)?;
        }
        first = false;
        let group = &lines[i..j];
        if group.len() == 1 {
            let l = &group[0];
            let width = l.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            writeln!(out, "# {}", l.kind.as_str())?;
            for (k, v) in &l.fields {
                writeln!(out, "{k:<width$}  {}", v.to_text())?;
            }
        } else {
            let headers: Vec<&str> = group[0].fields.iter().map(|(k, _)| *k).collect();
            let cells: Vec<Vec<String>> = group
                .iter()
                .map(|l| l.fields.iter().map(|(_, v)| v.to_text()).collect())
                .collect();
            let widths: Vec<usize> = (0..headers.len())
                .map(|c| cells.iter().map(|r| r[c].len()).chain([headers[c].len()]).max().unwrap())
                .collect();
            writeln!(out, "# {}", group[0].kind.as_str())?;
            write_row(out, headers.iter().copied(), &widths)?;
            for r in &cells {
                write_row(out, r.iter().map(String::as_str), &widths)?;
            }
        }
        i = j;
    }
    Ok(())
}

fn write_row<'a>(
    out: &mut impl Write,
    cells: impl Iterator<Item = &'a str>,
    widths: &[usize],
) -> io::Result<()> {
    let mut line = String::new();
    for (c, (cell, w)) in cells.zip(widths).enumerate() {
        if c > 0 {
            line.push_str("  ");
        }
        let _ = write!(line, "{cell:<w$}");
    }
    writeln!(out, "{}", line.trim_end())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn records_keep_field_order() {
        let l = ReportLine::new(Kind::Factorization)
            .with("n", 7usize)
            .with("g", &p("x^3+x+1"))
            .with("ok", true);
        assert_eq!(
            l.to_json().to_string(),
            r#"{"kind":"factorization","n":7,"g":{"text":"x^3+x+1","hex":"0xb"},"ok":true}"#
        );
    }

    #[test]
    fn tables_group_rows() {
        let rows: Vec<ReportLine> = (0..2)
            .map(|i| ReportLine::new(Kind::SearchResult).with("K", i as i64).with("code", "abc"))
            .collect();
        let mut out = Vec::new();
        render(&rows, Format::Table, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "# search_result\nK  code\n0  abc\n1  abc\n");
    }

    #[test]
    fn text_forms() {
        let f = Field::Factors(vec![(p("x+1"), 2), (p("x^3+x+1"), 1)]);
        assert_eq!(f.to_text(), "(x+1)^2(x^3+x+1)");
        assert_eq!(Field::Params(24, 6, 2).to_text(), "[[24,6,2]]");
        assert_eq!(Field::from(None::<u32>).to_text(), "-");
    }
}
