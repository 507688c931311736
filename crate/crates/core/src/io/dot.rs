//! Graphviz export of the 1-skeleton.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use super::document::Complex;
use crate::complex::link_of;
use crate::error::TopologyError;
use crate::locality::enumerate_dwheels;

/// Dwheels addressed by `dwheel:I` are those with boundary length at most this.
pub const DWHEEL_EXPORT_BOUND: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Highlight {
    #[default]
    None,
    Centers,
    /// The link of a vertex.
    Girth(usize),
    /// Entry `I` of the dwheel enumeration.
    Dwheel(usize),
}

impl FromStr for Highlight {
    type Err = DotError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DotError::BadHighlight(s.to_string());
        if s == "centers" {
            return Ok(Highlight::Centers);
        }
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = arg.parse().map_err(|_| bad())?;
        match kind {
            "girth" => Ok(Highlight::Girth(n)),
            "dwheel" => Ok(Highlight::Dwheel(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Highlight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Highlight::None => f.write_str("none"),
            Highlight::Centers => f.write_str("centers"),
            Highlight::Girth(v) => write!(f, "girth:{v}"),
            Highlight::Dwheel(i) => write!(f, "dwheel:{i}"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    pub highlight: Highlight,
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("cannot read highlight `{0}` (expected centers, girth:V or dwheel:I)")]
    BadHighlight(String),
    #[error("unknown witness reference {reference}: {reason}")]
    UnknownWitnessReference { reference: String, reason: String },
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

const MARK: &str = "color=red, penwidth=2";

/// DOT text for the 1-skeleton. Center vertices are always drawn as double circles.
///
/// Link edges of `girth:V` that are not skeleton edges (pentagon corners) are added
/// dashed.
pub fn export_dot(complex: &Complex, options: &DotOptions) -> Result<String, DotError> {
    let x = complex.as_cell_complex();
    let centers: BTreeSet<usize> = match complex {
        Complex::Tp(_) => BTreeSet::new(),
        Complex::Star(s) => s.center_of().iter().copied().collect(),
    };
    let unknown = |reason: String| DotError::UnknownWitnessReference { reference: options.highlight.to_string(), reason };

    let mut marked_nodes = BTreeSet::new();
    let mut marked_edges = BTreeSet::new();
    let mut extra_edges = BTreeSet::new();
    match options.highlight {
        Highlight::None | Highlight::Centers => {}
        Highlight::Girth(v) => {
            if v >= x.vertex_count() {
                return Err(unknown(format!("no vertex {v}")));
            }
            let link = link_of(x, v)?;
            marked_nodes.insert(v);
            for e in &link.edges {
                let edge = (e.a.min(e.b), e.a.max(e.b));
                if x.has_edge(edge.0, edge.1) {
                    marked_edges.insert(edge);
                } else {
                    extra_edges.insert(edge);
                }
            }
        }
        Highlight::Dwheel(i) => {
            let Complex::Star(s) = complex else {
                return Err(unknown("dwheels are defined on subdivided complexes".into()));
            };
            let dwheels = enumerate_dwheels(s, DWHEEL_EXPORT_BOUND)?;
            let d = dwheels.get(i).ok_or_else(|| unknown(format!("only {} dwheels", dwheels.len())))?;
            marked_nodes.extend([d.wheel1.hub, d.wheel2.hub]);
            for w in [&d.wheel1, &d.wheel2] {
                marked_edges.extend(w.subcomplex().edges);
            }
        }
    }

    let mut out = String::from("graph tpkit {\n  node [shape=circle];\n");
    for v in 0..x.vertex_count() {
        let mut attrs = Vec::new();
        if let Some(label) = options.labels.as_ref().and_then(|l| l.get(v)) {
            attrs.push(format!("label={}", quote(label)));
        }
        if centers.contains(&v) {
            attrs.push("shape=doublecircle".to_string());
            if options.highlight == Highlight::Centers {
                attrs.push("style=filled, fillcolor=gold".to_string());
            }
        }
        if marked_nodes.contains(&v) {
            attrs.push(MARK.to_string());
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for (a, b) in x.skeleton().edges() {
        if marked_edges.contains(&(a, b)) {
            writeln!(out, "  {a} -- {b} [{MARK}];").unwrap();
        } else {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
    }
    for (a, b) in extra_edges {
        writeln!(out, "  {a} -- {b} [{MARK}, style=dashed];").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
