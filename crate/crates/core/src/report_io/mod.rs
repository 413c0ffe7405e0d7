//! Reading citation profiles, writing reports, and sampling distortion
//! curves for plotting.
//!
//! Profile files come in two formats:
//!
//! * CSV, one researcher per line, citation counts separated by `;` in the
//!   second column: `R1,50;50;3;1`. An optional header row is recognised by
//!   a non-numeric second field.
//! * JSON, an array of `{"id": "R1", "citations": [50, 50, 3, 1]}` objects.

use std::path::Path;

mod curves;
mod profiles;
mod reports;

pub mod cli;

pub use curves::{curves_csv, emit_curves, CurveKind, CurveSample};
pub use profiles::{emit_profiles, load_profiles, parse_profiles, ProfileFormat};
pub use reports::{emit_report, emit_reports, OutputFormat};

impl ProfileFormat {
    /// `.json` files are JSON, everything else is CSV.
    pub fn infer(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => ProfileFormat::Json,
            _ => ProfileFormat::Csv,
        }
    }
}
