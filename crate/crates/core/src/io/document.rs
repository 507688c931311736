//! `tpc-1` and `tps-1` JSON documents.
//!
//! ```text
//! {
//!   "format": "tpc-1",
//!   "vertex_count": 5,
//!   "triangles": [],
//!   "pentagons": [
//!     [0, 1, 2, 3, 4]
//!   ]
//! }
//! ```
//!
//! A `tps-1` document carries `"centers": {"5": 0}` (center vertex to pentagon index)
//! in place of `pentagons`. Both accept an optional `"labels"` array of strings, one
//! per vertex. Cells are written sorted, one per line, so the output is canonical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::complex::{build_tp_complex, CellComplex, SimplicialComplex2D, TPComplex};
use crate::error::TopologyError;

pub const TP_FORMAT: &str = "tpc-1";
pub const STAR_FORMAT: &str = "tps-1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("input is not UTF-8 (byte {offset})")]
    Utf8 { offset: usize },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("invalid complex: {0}")]
    Validation(#[from] TopologyError),
}

impl DocumentError {
    fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError::Schema { path: path.into(), message: message.into() }
    }
}

/// Either kind of complex a document can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complex {
    Tp(TPComplex),
    Star(SimplicialComplex2D),
}

impl Complex {
    pub fn format(&self) -> &'static str {
        match self {
            Complex::Tp(_) => TP_FORMAT,
            Complex::Star(_) => STAR_FORMAT,
        }
    }

    pub fn as_cell_complex(&self) -> &dyn CellComplex {
        match self {
            Complex::Tp(x) => x,
            Complex::Star(x) => x,
        }
    }
}

impl From<TPComplex> for Complex {
    fn from(x: TPComplex) -> Self {
        Complex::Tp(x)
    }
}

impl From<SimplicialComplex2D> for Complex {
    fn from(x: SimplicialComplex2D) -> Self {
        Complex::Star(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDocument {
    pub complex: Complex,
    pub labels: Option<Vec<String>>,
}

impl ComplexDocument {
    pub fn new(complex: impl Into<Complex>) -> Self {
        ComplexDocument { complex: complex.into(), labels: None }
    }
}

/// Parses and fully validates a document.
pub fn parse(bytes: &[u8]) -> Result<ComplexDocument, DocumentError> {
    let text = std::str::from_utf8(bytes).map_err(|e| DocumentError::Utf8 { offset: e.valid_up_to() })?;
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Object(obj) = value else {
        return Err(DocumentError::schema("$", "expected an object"));
    };
    let format = match obj.get("format") {
        Some(Value::String(s)) => s.as_str(),
        Some(_) => return Err(DocumentError::schema("$.format", "expected a string")),
        None => return Err(DocumentError::schema("$.format", "missing field")),
    };
    let cell_key = match format {
        TP_FORMAT => "pentagons",
        STAR_FORMAT => "centers",
        other => return Err(DocumentError::schema("$.format", format!("unknown format `{other}`"))),
    };
    let allowed = ["format", "vertex_count", "triangles", cell_key, "labels"];
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(DocumentError::schema(format!("$.{k}"), format!("unexpected field for {format}")));
    }

    let vertex_count = index(required(&obj, "vertex_count")?, "$.vertex_count")?;
    let triangles: Vec<[usize; 3]> = cells(required(&obj, "triangles")?, "$.triangles")?;
    let labels = match obj.get("labels") {
        None => None,
        Some(v) => Some(labels(v, vertex_count)?),
    };
    let complex = if format == TP_FORMAT {
        let pentagons: Vec<[usize; 5]> = cells(required(&obj, "pentagons")?, "$.pentagons")?;
        Complex::Tp(build_tp_complex(vertex_count, &triangles, &pentagons)?)
    } else {
        let centers = centers(required(&obj, "centers")?)?;
        Complex::Star(SimplicialComplex2D::with_centers(vertex_count, &triangles, &centers)?)
    };
    Ok(ComplexDocument { complex, labels })
}

/// Parses a document and drops its labels.
pub fn parse_complex(bytes: &[u8]) -> Result<Complex, DocumentError> {
    parse(bytes).map(|d| d.complex)
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, DocumentError> {
    obj.get(key).ok_or_else(|| DocumentError::schema(format!("$.{key}"), "missing field"))
}

fn index(v: &Value, path: &str) -> Result<usize, DocumentError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| DocumentError::schema(path, "expected a non-negative integer"))
}

fn cells<const N: usize>(v: &Value, path: &str) -> Result<Vec<[usize; N]>, DocumentError> {
    let Value::Array(items) = v else {
        return Err(DocumentError::schema(path, "expected an array"));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let here = format!("{path}[{i}]");
            match item {
                Value::Array(vs) if vs.len() == N => {
                    let mut cell = [0; N];
                    for (j, x) in vs.iter().enumerate() {
                        cell[j] = index(x, &format!("{here}[{j}]"))?;
                    }
                    Ok(cell)
                }
                Value::Array(vs) => Err(DocumentError::schema(here, format!("expected {N} vertices, found {}", vs.len()))),
                _ => Err(DocumentError::schema(here, "expected an array of vertices")),
            }
        })
        .collect()
}

/// `{"center": pentagon_index}` with indices exactly `0..k`; returns centers by index.
fn centers(v: &Value) -> Result<Vec<usize>, DocumentError> {
    let Value::Object(map) = v else {
        return Err(DocumentError::schema("$.centers", "expected an object"));
    };
    let mut by_index = BTreeMap::new();
    for (key, idx) in map {
        let here = format!("$.centers[{key:?}]");
        let center = key
            .parse::<usize>()
            .ok()
            .filter(|c| c.to_string() == *key)
            .ok_or_else(|| DocumentError::schema(here.clone(), "center keys are decimal vertex indices"))?;
        let i = index(idx, &here)?;
        if by_index.insert(i, center).is_some() {
            return Err(DocumentError::schema(here, format!("pentagon index {i} used twice")));
        }
    }
    if let Some((_, &i)) = by_index.keys().enumerate().find(|&(pos, &i)| pos != i) {
        return Err(DocumentError::schema("$.centers", format!("pentagon indices must be 0..{}, found {i}", map.len())));
    }
    Ok(by_index.into_values().collect())
}

fn labels(v: &Value, vertex_count: usize) -> Result<Vec<String>, DocumentError> {
    let Value::Array(items) = v else {
        return Err(DocumentError::schema("$.labels", "expected an array"));
    };
    if items.len() != vertex_count {
        return Err(DocumentError::schema("$.labels", format!("expected {vertex_count} labels, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.as_str().map(str::to_owned).ok_or_else(|| DocumentError::schema(format!("$.labels[{i}]"), "expected a string"))
        })
        .collect()
}

/// Canonical document text, newline-terminated.
pub fn serialize(doc: &ComplexDocument) -> String {
    let mut out = String::new();
    let (vertex_count, triangles) = match &doc.complex {
        Complex::Tp(x) => (x.vertex_count(), x.triangles()),
        Complex::Star(x) => (x.vertex_count(), x.triangles()),
    };
    writeln!(out, "{{\n  \"format\": \"{}\",", doc.complex.format()).unwrap();
    writeln!(out, "  \"vertex_count\": {vertex_count},").unwrap();
    write_cells(&mut out, "triangles", triangles.iter().map(|t| &t[..]));
    match &doc.complex {
        Complex::Tp(x) => {
            out.push_str(",\n");
            write_cells(&mut out, "pentagons", x.pentagons().iter().map(|p| &p[..]));
        }
        Complex::Star(x) => {
            let mut entries: Vec<(usize, usize)> = x.center_of().iter().enumerate().map(|(i, &c)| (c, i)).collect();
            entries.sort_unstable();
            out.push_str(",\n  \"centers\": {");
            if !entries.is_empty() {
                let body: Vec<String> = entries.iter().map(|(c, i)| format!("\n    \"{c}\": {i}")).collect();
                out.push_str(&body.join(","));
                out.push_str("\n  ");
            }
            out.push('}');
        }
    }
    if let Some(labels) = &doc.labels {
        let quoted: Vec<String> = labels.iter().map(|l| Value::String(l.clone()).to_string()).collect();
        write!(out, ",\n  \"labels\": [{}]", quoted.join(", ")).unwrap();
    }
    out.push_str("\n}\n");
    out
}

pub fn serialize_complex(complex: impl Into<Complex>) -> String {
    serialize(&ComplexDocument::new(complex))
}

fn write_cells<'a>(out: &mut String, key: &str, cells: impl Iterator<Item = &'a [usize]>) {
    let rows: Vec<String> = cells
        .map(|c| format!("    [{}]", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    if rows.is_empty() {
        write!(out, "  \"{key}\": []").unwrap();
    } else {
        write!(out, "  \"{key}\": [\n{}\n  ]", rows.join(",\n")).unwrap();
    }
}
