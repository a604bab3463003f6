//! Structure-constant files and JSON reports.
//!
//! An algebra file is JSON Lines: one header object, then one object per
//! table (`mult`, `unit`, `comult`, `counit`, `antipode`). Every table lists
//! sparse records whose last entry is a scalar in canonical string form:
//!
//! ```text
//! {"format":"hopfkit-algebra","version":1,"field":"Q","dim":2,"basis":["1","a"]}
//! {"table":"mult","entries":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]]}
//! {"table":"unit","entries":[[0,"1"]]}
//! {"table":"comult","entries":[[0,0,0,"1"],[1,1,1,"1"]]}
//! {"table":"counit","entries":[[0,"1"],[1,"1"]]}
//! {"table":"antipode","entries":[[0,0,"1"],[1,1,"1"]]}
//! ```
//!
//! `mult` records `[i, j, k, c]` mean eᵢeⱼ has coefficient c at eₖ; `comult`
//! records `[i, j, k, c]` mean Δeᵢ contains c·eⱼ⊗eₖ; `antipode` records
//! `[i, k, c]` mean S(eᵢ) has coefficient c at eₖ.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::hopf::{HopfAlgebra, HopfError, HopfPresentation};
use crate::linalg::Matrix;
use crate::report::{Check, Status, VerificationReport};
use crate::scalar::{FieldSpec, Scalar};

pub const FORMAT_NAME: &str = "hopfkit-algebra";
pub const FORMAT_VERSION: u32 = 1;
pub const TABLES: [&str; 5] = ["mult", "unit", "comult", "counit", "antipode"];

/// The JSON Schema every report document validates against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty algebra file")]
    Empty,
    #[error("line {line}: {message}")]
    Json { line: usize, message: String },
    #[error("line {line}, field `{field}`: {message}")]
    Field {
        line: usize,
        field: String,
        message: String,
    },
    #[error("line {line}: unknown table `{table}`")]
    UnknownTable { line: usize, table: String },
    #[error("line {line}: table `{table}` appears twice")]
    DuplicateTable { line: usize, table: String },
    #[error("missing table `{0}`")]
    MissingTable(&'static str),
    #[error("cannot read algebra file: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    field: String,
    dim: usize,
    basis: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TableLine {
    table: String,
    entries: Vec<Vec<Value>>,
}

fn field_err(line: usize, field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        line,
        field: field.into(),
        message: message.into(),
    }
}

struct TableParser<'a> {
    line: usize,
    table: &'a str,
    field: &'a FieldSpec,
    dim: usize,
}

impl TableParser<'_> {
    fn record(&self, idx: usize, entry: &[Value], indices: usize) -> Result<(Vec<usize>, Scalar), ParseError> {
        let path = |k: usize| format!("{}.entries[{idx}][{k}]", self.table);
        if entry.len() != indices + 1 {
            return Err(field_err(
                self.line,
                format!("{}.entries[{idx}]", self.table),
                format!("expected {} values, found {}", indices + 1, entry.len()),
            ));
        }
        let mut out = Vec::with_capacity(indices);
        for (k, v) in entry[..indices].iter().enumerate() {
            let i = v
                .as_u64()
                .ok_or_else(|| field_err(self.line, path(k), "expected a basis index"))? as usize;
            if i >= self.dim {
                return Err(field_err(
                    self.line,
                    path(k),
                    format!("index {i} out of range for dimension {}", self.dim),
                ));
            }
            out.push(i);
        }
        let text = entry[indices]
            .as_str()
            .ok_or_else(|| field_err(self.line, path(indices), "scalars are written as strings"))?;
        let c = self
            .field
            .parse_scalar(text)
            .map_err(|e| field_err(self.line, path(indices), e.to_string()))?;
        Ok((out, c))
    }
}

/// Parse an algebra file without checking the Hopf axioms.
pub fn parse_presentation(text: &str) -> Result<HopfPresentation, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, htext) = lines.next().ok_or(ParseError::Empty)?;
    let header: Header = serde_json::from_str(htext).map_err(|e| ParseError::Json {
        line: hline,
        message: e.to_string(),
    })?;
    if header.format != FORMAT_NAME {
        return Err(field_err(hline, "format", format!("expected \"{FORMAT_NAME}\"")));
    }
    if header.version != FORMAT_VERSION {
        return Err(field_err(hline, "version", format!("unsupported version {}", header.version)));
    }
    let field: FieldSpec = header
        .field
        .parse()
        .map_err(|e: crate::scalar::ScalarError| field_err(hline, "field", e.to_string()))?;
    let n = header.dim;
    if header.basis.len() != n {
        return Err(field_err(
            hline,
            "basis",
            format!("{} names for dimension {n}", header.basis.len()),
        ));
    }

    let mut seen: [Option<(usize, Vec<Vec<Value>>)>; 5] = Default::default();
    for (line, l) in lines {
        let t: TableLine = serde_json::from_str(l).map_err(|e| ParseError::Json {
            line,
            message: e.to_string(),
        })?;
        let slot = TABLES
            .iter()
            .position(|name| *name == t.table)
            .ok_or_else(|| ParseError::UnknownTable {
                line,
                table: t.table.clone(),
            })?;
        if seen[slot].is_some() {
            return Err(ParseError::DuplicateTable { line, table: t.table });
        }
        seen[slot] = Some((line, t.entries));
    }
    let mut take = |slot: usize| seen[slot].take().ok_or(ParseError::MissingTable(TABLES[slot]));
    let tables = [take(0)?, take(1)?, take(2)?, take(3)?, take(4)?];
    let parser = |slot: usize| TableParser {
        line: tables[slot].0,
        table: TABLES[slot],
        field: &field,
        dim: n,
    };
    let records = |slot: usize, indices: usize| {
        let p = parser(slot);
        tables[slot]
            .1
            .iter()
            .enumerate()
            .map(|(idx, e)| p.record(idx, e, indices))
            .collect::<Result<Vec<_>, _>>()
    };

    let mut mult = vec![Vec::new(); n * n];
    for (ix, c) in records(0, 3)? {
        mult[ix[0] * n + ix[1]].push((ix[2], c));
    }
    let mut unit = vec![field.zero(); n];
    for (ix, c) in records(1, 1)? {
        unit[ix[0]] = &unit[ix[0]] + &c;
    }
    let mut comult = vec![Vec::new(); n];
    for (ix, c) in records(2, 3)? {
        comult[ix[0]].push((ix[1], ix[2], c));
    }
    let mut counit = vec![field.zero(); n];
    for (ix, c) in records(3, 1)? {
        counit[ix[0]] = &counit[ix[0]] + &c;
    }
    let mut antipode = Matrix::zeros(&field, n, n);
    for (ix, c) in records(4, 2)? {
        let v = &antipode.get(ix[1], ix[0]) + &c;
        antipode.set(ix[1], ix[0], v);
    }
    Ok(HopfPresentation {
        field,
        basis_names: header.basis,
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

/// Parse, then check the Hopf axioms.
pub fn parse_algebra(text: &str) -> Result<HopfAlgebra, LoadError> {
    Ok(HopfAlgebra::new(parse_presentation(text)?)?)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<HopfAlgebra, LoadError> {
    let text = std::fs::read_to_string(path).map_err(ParseError::Io)?;
    parse_algebra(&text)
}

fn scalar_value(c: &Scalar) -> Value {
    Value::String(c.to_string())
}

fn table_line(table: &str, mut entries: Vec<(Vec<usize>, Scalar)>) -> String {
    entries.retain(|(_, c)| !c.is_zero());
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let line = TableLine {
        table: table.to_string(),
        entries: entries
            .into_iter()
            .map(|(ix, c)| {
                let mut v: Vec<Value> = ix.into_iter().map(Value::from).collect();
                v.push(scalar_value(&c));
                v
            })
            .collect(),
    };
    serde_json::to_string(&line).expect("table lines serialize")
}

/// The canonical file text: sorted sparse records, zeros dropped.
pub fn write_presentation(p: &HopfPresentation) -> String {
    let n = p.dim();
    let header = Header {
        format: FORMAT_NAME.into(),
        version: FORMAT_VERSION,
        field: p.field.to_string(),
        dim: n,
        basis: p.basis_names.clone(),
    };
    let mut out = serde_json::to_string(&header).expect("header serializes");
    out.push('\n');
    let mult = p
        .mult
        .iter()
        .enumerate()
        .flat_map(|(ij, v)| v.iter().map(move |(k, c)| (vec![ij / n, ij % n, *k], c.clone())))
        .collect();
    let unit = p.unit.iter().enumerate().map(|(i, c)| (vec![i], c.clone())).collect();
    let comult = p
        .comult
        .iter()
        .enumerate()
        .flat_map(|(i, v)| v.iter().map(move |(j, k, c)| (vec![i, *j, *k], c.clone())))
        .collect();
    let counit = p.counit.iter().enumerate().map(|(i, c)| (vec![i], c.clone())).collect();
    let antipode = p
        .antipode
        .entries()
        .map(|(row, col, c)| (vec![col, row], c.clone()))
        .collect();
    for (name, entries) in TABLES.iter().zip([mult, unit, comult, counit, antipode]) {
        out.push_str(&table_line(name, entries));
        out.push('\n');
    }
    out
}

pub fn save_algebra(h: &HopfPresentation, path: impl AsRef<Path>) -> std::io::Result<()> {
    std::fs::write(path, write_presentation(h))
}

/// What was verified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    pub target: String,
    pub field: String,
    /// `None` for the infinite-dimensional engines.
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub window: Option<i64>,
    pub degree: Option<u32>,
    pub order_bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

/// The machine-readable form of a verification run. Field order is the
/// serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub engine_version: String,
    pub algebra: AlgebraDescriptor,
    pub battery: String,
    pub parameters: Parameters,
    pub status: Status,
    pub summary: Summary,
    pub checks: Vec<Check>,
}

impl ReportDocument {
    pub fn new(
        algebra: AlgebraDescriptor,
        battery: &str,
        parameters: Parameters,
        report: &VerificationReport,
    ) -> Self {
        let count = |s: Status| report.checks.iter().filter(|c| c.status == s).count();
        ReportDocument {
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            algebra,
            battery: battery.to_string(),
            parameters,
            status: if report.all_passed() {
                Status::Pass
            } else {
                Status::Fail
            },
            summary: Summary {
                passed: count(Status::Pass),
                failed: count(Status::Fail),
                not_applicable: count(Status::NotApplicable),
            },
            checks: report.checks.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
