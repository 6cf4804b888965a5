//! Expression parsing, JSON reports and SVG figures.

pub mod parser;
pub mod report;
pub mod svg;

pub use parser::{parse_poly, parse_rational, parse_rational_pair};
pub use report::{emit_json, emit_json_batch, ReportBody, ReportDocument};
pub use svg::emit_svg;
