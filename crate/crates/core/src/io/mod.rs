//! File formats, Graphviz export and check reports.

mod document;
mod dot;
mod report;

pub use document::{
    parse, parse_complex, serialize, serialize_complex, Complex, ComplexDocument, DocumentError, STAR_FORMAT, TP_FORMAT,
};
pub use dot::{export_dot, DotError, DotOptions, Highlight, DWHEEL_EXPORT_BOUND};
pub use report::{
    check, human_summary, report_json, CheckOptions, CheckReport, GirthRecord, GirthSection, InputSummary,
    ValidateSection, TOOL, VERSION,
};
