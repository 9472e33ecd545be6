//! Table formats. Values are exact rationals written as `p/q` (or `p` for
//! integers).

use std::fmt::Write as _;

use appell_core::Rational;
use serde::{Deserialize, Serialize};

use crate::{CliError, EXIT_FAILURE};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueRow {
    pub n: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub family: String,
    pub order: u32,
    pub values: Vec<ValueRow>,
}

impl TableDocument {
    pub fn new(family: String, order: u32, values: &[Rational]) -> Self {
        TableDocument {
            family,
            order,
            values: values
                .iter()
                .enumerate()
                .map(|(n, v)| ValueRow {
                    n,
                    value: v.clone(),
                })
                .collect(),
        }
    }
}

pub fn render_csv(doc: &TableDocument) -> String {
    let mut out = String::from("n,value\n");
    for row in &doc.values {
        let _ = writeln!(out, "{},{}", row.n, row.value);
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<ValueRow>, CliError> {
    let bad = |msg: String| CliError::new(EXIT_FAILURE, msg);
    let mut lines = text.lines();
    match lines.next() {
        Some("n,value") => {}
        other => return Err(bad(format!("unexpected CSV header {other:?}"))),
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|line| {
            let (n, v) = line
                .split_once(',')
                .ok_or_else(|| bad(format!("malformed row {line:?}")))?;
            Ok(ValueRow {
                n: n.parse()
                    .map_err(|_| bad(format!("bad index in {line:?}")))?,
                value: v
                    .parse()
                    .map_err(|_| bad(format!("bad value in {line:?}")))?,
            })
        })
        .collect()
}

pub fn render_json(doc: &TableDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("table serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<TableDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::new(EXIT_FAILURE, e.to_string()))
}

pub fn render_pretty(doc: &TableDocument, algorithm: &str) -> String {
    let width = doc
        .values
        .last()
        .map_or(1, |r| r.n.to_string().len())
        .max(1);
    let mut out = format!("# {} order {} ({})\n", doc.family, doc.order, algorithm);
    for row in &doc.values {
        let _ = writeln!(out, "{:>width$}  {}", row.n, row.value);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc() -> TableDocument {
        let values: Vec<Rational> = ["1", "-1/2", "1/6", "0", "-1/30"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        TableDocument::new("bernoulli".into(), 1, &values)
    }

    #[test]
    fn csv_layout_and_roundtrip() {
        let text = render_csv(&doc());
        assert_eq!(text, "n,value\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n");
        assert_eq!(parse_csv(&text).unwrap(), doc().values);
        assert!(parse_csv("x,y\n").is_err());
        assert!(parse_csv("n,value\n1;2\n").is_err());
    }

    #[test]
    fn json_schema_and_roundtrip() {
        let text = render_json(&doc());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["family"], "bernoulli");
        assert_eq!(v["order"], 1);
        assert_eq!(v["values"][1]["n"], 1);
        assert_eq!(v["values"][1]["value"], "-1/2");
        assert_eq!(parse_json(&text).unwrap(), doc());
    }

    #[test]
    fn pretty_is_aligned() {
        let text = render_pretty(&doc(), "recurrence");
        assert!(text.starts_with("# bernoulli order 1 (recurrence)\n"));
        assert!(text.contains("\n1  -1/2\n"));
    }
}
