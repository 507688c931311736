//! Structured check reports.
//!
//! The link condition runs on the input as given. The combinatorial checks (local
//! largeness, location, the 5/8-condition, girths) run on the simplicial complex:
//! the input itself for `tps-1`, its subdivision for `tpc-1`.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::document::{serialize_complex, Complex};
use crate::complex::{SimplicialComplex2D, VertexCycle, VertexOrigin};
use crate::curvature::{check_link_condition_with, is_cat0_disc, DiscVerdict, LinkConditionReport};
use crate::error::{Result, TopologyError};
use crate::locality::{
    check_58_condition_with, combinatorial_girth, is_locally_k_large_with, is_m_located, link_girths_with, ClauseStatus,
    FiveEightReport, Girth, LargenessReport, LocationReport,
};
use crate::subdivision::subdivide;
use crate::Verdict;

pub const TOOL: &str = "tpkit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which checks to run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub link_condition: bool,
    pub locally_large: Option<usize>,
    pub located: Option<usize>,
    pub five_eight: bool,
    pub girth: bool,
    pub parallel: bool,
}

impl CheckOptions {
    /// `k` used for local largeness by [`CheckOptions::all`].
    pub const DEFAULT_K: usize = 5;
    /// `m` used for location by [`CheckOptions::all`].
    pub const DEFAULT_M: usize = 7;

    pub fn all() -> Self {
        CheckOptions {
            link_condition: true,
            locally_large: Some(Self::DEFAULT_K),
            located: Some(Self::DEFAULT_M),
            five_eight: true,
            girth: true,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputSummary {
    pub format: &'static str,
    /// SHA-256 of the canonical document.
    pub sha256: String,
    pub vertex_count: usize,
    pub cell_count: usize,
    /// Whether the combinatorial checks ran on the subdivision of the input.
    pub subdivided: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidateSection {
    pub verdict: Verdict,
    pub flag: bool,
    pub cat0_disc: DiscVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GirthRecord {
    pub vertex: usize,
    pub origin: VertexOrigin,
    pub link_girth: Girth,
    pub combinatorial_girth: usize,
    pub witness: Option<VertexCycle>,
}

/// Informational; its verdict is always pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GirthSection {
    pub verdict: Verdict,
    pub vertices: Vec<GirthRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct CheckReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub input: InputSummary,
    pub verdict: Verdict,
    pub validate: ValidateSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link_condition: Option<LinkConditionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locally_large: Option<LargenessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub located: Option<LocationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub five_eight: Option<FiveEightReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<GirthSection>,
}

/// Runs the requested checks. Fails only if the simplicial complex is not flag.
pub fn check(complex: &Complex, options: &CheckOptions) -> Result<CheckReport> {
    let par = options.parallel;
    let x = complex.as_cell_complex();
    let star: SimplicialComplex2D = match complex {
        Complex::Tp(tp) => subdivide(tp)?,
        Complex::Star(s) => s.clone(),
    };
    if let Some(clique) = star.flag_violation() {
        return Err(TopologyError::FlagViolation { clique });
    }
    let input = InputSummary {
        format: complex.format(),
        sha256: format!("{:x}", Sha256::digest(serialize_complex(complex.clone()).as_bytes())),
        vertex_count: x.vertex_count(),
        cell_count: x.cells().len(),
        subdivided: matches!(complex, Complex::Tp(_)),
    };
    let validate = ValidateSection { verdict: Verdict::Pass, flag: true, cat0_disc: is_cat0_disc(x) };

    let link_condition = options.link_condition.then(|| check_link_condition_with(x, par)).transpose()?;
    let locally_large = options.locally_large.map(|k| is_locally_k_large_with(&star, k, par)).transpose()?;
    let located = options.located.map(|m| is_m_located(&star, m)).transpose()?;
    let five_eight = options.five_eight.then(|| check_58_condition_with(&star, par)).transpose()?;
    let girth = options.girth.then(|| girth_section(&star, par)).transpose()?;

    let verdicts = [
        link_condition.as_ref().map(|r| r.verdict),
        locally_large.as_ref().map(|r| r.verdict),
        located.as_ref().map(|r| Verdict::from_ok(r.violating.is_empty())),
        five_eight.as_ref().map(|r| r.verdict),
    ];
    let verdict = Verdict::from_ok(verdicts.iter().flatten().all(|v| v.is_pass()));
    Ok(CheckReport {
        tool: TOOL,
        version: VERSION,
        input,
        verdict,
        validate,
        link_condition,
        locally_large,
        located,
        five_eight,
        girth,
    })
}

fn girth_section(x: &SimplicialComplex2D, parallel: bool) -> Result<GirthSection> {
    let vertices = link_girths_with(x, parallel)?
        .into_iter()
        .enumerate()
        .map(|(v, (link_girth, witness))| {
            Ok(GirthRecord {
                vertex: v,
                origin: x.vertex_origin(v)?,
                link_girth,
                combinatorial_girth: combinatorial_girth(x, v)?,
                witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GirthSection { verdict: Verdict::Pass, vertices })
}

/// Pretty JSON with a trailing newline.
pub fn report_json(report: &CheckReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
    }
}

fn clause(s: ClauseStatus) -> &'static str {
    match s {
        ClauseStatus::Pass => "pass",
        ClauseStatus::Fail => "FAIL",
        ClauseStatus::Vacuous => "vacuous",
    }
}

/// One line per section, then one line per violation.
pub fn human_summary(r: &CheckReport) -> String {
    let mut out = String::new();
    let i = &r.input;
    writeln!(out, "validate        pass  {} with {} vertices, {} cells", i.format, i.vertex_count, i.cell_count).unwrap();
    if let Some(lc) = &r.link_condition {
        writeln!(out, "link-condition  {}  violating vertices: {}", word(lc.verdict), lc.violations.len()).unwrap();
        for rec in lc.vertices.iter().filter(|rec| lc.violations.contains(&rec.vertex)) {
            let lp = rec.shortest_link_loop.expect("violations have a loop");
            writeln!(
                out,
                "  vertex {}: angle sum {} units ({}), shortest link loop {} units < 60",
                rec.vertex,
                rec.angle_sum.units(),
                rec.angle_sum,
                lp.units()
            )
            .unwrap();
        }
    }
    if let Some(ll) = &r.locally_large {
        writeln!(out, "locally-large   {}  k = {}, violating vertices: {}", word(ll.verdict), ll.k, ll.violations.len()).unwrap();
        for v in &ll.violations {
            writeln!(out, "  vertex {}: full link cycle {} of length {}", v.vertex, v.cycle, v.cycle.len()).unwrap();
        }
    }
    if let Some(lo) = &r.located {
        let v = Verdict::from_ok(lo.violating.is_empty());
        writeln!(out, "located         {}  m = {}, {} dwheels, {} not in a vertex link", word(v), lo.m, lo.dwheels_found.len(), lo.violating.len())
            .unwrap();
        for &k in &lo.violating {
            let d = &lo.dwheels_found[k];
            writeln!(
                out,
                "  dwheel {k}: hubs {} and {}, {:?}, boundary length {}",
                d.wheel1.hub, d.wheel2.hub, d.kind, d.boundary_length
            )
            .unwrap();
        }
    }
    if let Some(f) = &r.five_eight {
        writeln!(
            out,
            "five-eight      {}  (5/8) {}, (6/7) {}",
            word(f.verdict),
            clause(f.clause_5_8.status),
            clause(f.clause_6_7.status)
        )
        .unwrap();
        for w in f.clause_5_8.witnesses.iter().chain(&f.clause_6_7.witnesses) {
            writeln!(out, "  vertex {}: neighbour {} has link girth {}", w.vertex, w.neighbour, w.neighbour_girth).unwrap();
        }
    }
    if let Some(g) = &r.girth {
        let min = g.vertices.iter().map(|rec| rec.link_girth).min().unwrap_or(Girth::Infinite);
        writeln!(out, "girth           info  minimum link girth {min}").unwrap();
    }
    writeln!(out, "overall         {}", word(r.verdict)).unwrap();
    out
}
