//! Raw samples: a table of draws, each mapped to the outcome it observed.
//!
//! The CSV form has a `draw,outcome` header. Outcomes that were never drawn
//! can be declared separately and become exponent-0 positions.

use std::collections::{BTreeMap, HashSet};
use std::io::{BufRead, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::poly::FinPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SampleTable {
    pub rows: Vec<(String, String)>,
    pub declared_outcomes: Vec<String>,
}

impl SampleTable {
    pub fn new(rows: Vec<(String, String)>) -> Self {
        SampleTable {
            rows,
            declared_outcomes: Vec::new(),
        }
    }

    pub fn from_csv_reader(reader: impl Read) -> Result<Self> {
        let mut csv = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = csv.headers().map_err(|e| malformed(&e, 1))?.clone();
        if headers.len() != 2 || &headers[0] != "draw" || &headers[1] != "outcome" {
            return Err(Error::MalformedRow {
                line: 1,
                reason: "expected header `draw,outcome`".into(),
            });
        }
        let mut rows = Vec::new();
        for record in csv.records() {
            let record = record.map_err(|e| malformed(&e, 0))?;
            let line = record.position().map_or(0, |p| p.line());
            if record.len() != 2 {
                return Err(Error::MalformedRow {
                    line,
                    reason: format!("expected 2 fields, found {}", record.len()),
                });
            }
            if record[0].is_empty() || record[1].is_empty() {
                return Err(Error::MalformedRow {
                    line,
                    reason: "empty field".into(),
                });
            }
            rows.push((record[0].to_string(), record[1].to_string()));
        }
        Ok(SampleTable::new(rows))
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_csv_reader(std::fs::File::open(path)?)
    }

    /// Reads one outcome id per line; blank lines are skipped.
    pub fn declare_outcomes(&mut self, reader: impl BufRead) -> Result<()> {
        for line in reader.lines() {
            let line = line?;
            let id = line.trim();
            if !id.is_empty() {
                self.declared_outcomes.push(id.to_string());
            }
        }
        Ok(())
    }

    pub fn declare_outcomes_from_path(&mut self, path: impl AsRef<Path>) -> Result<()> {
        self.declare_outcomes(std::io::BufReader::new(std::fs::File::open(path)?))
    }
}

fn malformed(err: &csv::Error, fallback_line: u64) -> Error {
    let line = err.position().map_or(fallback_line, |p| p.line());
    Error::MalformedRow {
        line,
        reason: err.to_string(),
    }
}

/// One position per outcome, with exponent equal to its number of draws.
pub fn poly_from_sample(table: &SampleTable) -> Result<FinPoly> {
    let mut draws = HashSet::with_capacity(table.rows.len());
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for (draw, outcome) in &table.rows {
        if !draws.insert(draw.as_str()) {
            return Err(Error::DuplicateDraw(draw.clone()));
        }
        *counts.entry(outcome).or_default() += 1;
    }
    for outcome in &table.declared_outcomes {
        counts.entry(outcome).or_default();
    }
    Ok(FinPoly::canonicalize(counts.into_values()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[(&str, &str)]) -> SampleTable {
        SampleTable::new(rows.iter().map(|(d, o)| (d.to_string(), o.to_string())).collect())
    }

    #[test]
    fn worked_sample() {
        let csv = "draw,outcome\nd1,o1\nd2,o1\nd3,o1\nd4,o1\nd5,o2\nd6,o3\nd7,o4\nd8,o5\n";
        let t = SampleTable::from_csv_reader(csv.as_bytes()).unwrap();
        assert_eq!(t.rows.len(), 8);
        assert_eq!(poly_from_sample(&t).unwrap().to_string(), "y^4 + 4y");
    }

    #[test]
    fn empty_table_is_zero() {
        let t = SampleTable::from_csv_reader("draw,outcome\n".as_bytes()).unwrap();
        assert_eq!(poly_from_sample(&t).unwrap(), FinPoly::zero());
    }

    #[test]
    fn uniform_draws() {
        let t = table(&[("a", "x"), ("b", "z"), ("c", "x"), ("d", "z"), ("e", "x"), ("f", "z")]);
        assert_eq!(poly_from_sample(&t).unwrap(), FinPoly::monomial(2, 3));
    }

    #[test]
    fn declared_outcomes_become_constants() {
        let mut t = table(&[("a", "x"), ("b", "x")]);
        t.declare_outcomes("x\nunseen\n\nother\n".as_bytes()).unwrap();
        assert_eq!(poly_from_sample(&t).unwrap().to_string(), "y^2 + 2");
    }

    #[test]
    fn duplicate_draws_are_rejected() {
        let t = table(&[("a", "x"), ("a", "z")]);
        assert!(matches!(poly_from_sample(&t), Err(Error::DuplicateDraw(d)) if d == "a"));
    }

    #[test]
    fn malformed_csv() {
        let bad_header = SampleTable::from_csv_reader("id,value\n1,2\n".as_bytes());
        assert!(matches!(bad_header, Err(Error::MalformedRow { line: 1, .. })));
        let short = SampleTable::from_csv_reader("draw,outcome\nd1,o1\nd2\n".as_bytes());
        assert!(matches!(short, Err(Error::MalformedRow { line: 3, .. })));
        let empty = SampleTable::from_csv_reader("draw,outcome\nd1,\n".as_bytes());
        assert!(matches!(empty, Err(Error::MalformedRow { line: 2, .. })));
    }
}
