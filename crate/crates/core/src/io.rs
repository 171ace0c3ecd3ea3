//! Text encodings of tables and series: JSON that round-trips, and CSV with
//! exact scalars as strings.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::algebra::{RatFun, Rational, Ring};
use crate::families::PolyTable;
use crate::series::Series;
use crate::Error;

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(json_err)
}

/// A table over either coefficient field, as read back from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyTable {
    Rational(Box<PolyTable<Rational>>),
    Symbolic(Box<PolyTable<RatFun>>),
}

pub fn parse_table(json: &str) -> Result<AnyTable, Error> {
    serde_json::from_str(json).map_err(json_err)
}

fn write_csv(header: Vec<String>, rows: Vec<Vec<String>>) -> Result<String, Error> {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(&header).map_err(csv_err)?;
    for r in rows {
        w.write_record(&r).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Header `n, x^0, ..., x^d`; one row per `n`, coefficients ascending and
/// padded with `0` up to the largest degree.
pub fn table_to_csv<F: Ring + Display>(table: &PolyTable<F>) -> Result<String, Error> {
    let width = table.rows.iter().map(|r| r.coeffs().len()).max().unwrap_or(0).max(1);
    let header = std::iter::once("n".to_string()).chain((0..width).map(|k| format!("x^{k}"))).collect();
    let rows = table
        .rows
        .iter()
        .enumerate()
        .map(|(n, row)| std::iter::once(n.to_string()).chain((0..width).map(|k| row.coeff(k).to_string())).collect())
        .collect();
    write_csv(header, rows)
}

/// `n, n! [t^n] s` for every retained coefficient.
pub fn egf_to_csv<C: Ring + Display>(series: &Series<C>) -> Result<String, Error> {
    let rows = series.egf_table().into_iter().map(|(n, v)| vec![n.to_string(), v.to_string()]).collect();
    write_csv(vec!["n".into(), "egf".into()], rows)
}
