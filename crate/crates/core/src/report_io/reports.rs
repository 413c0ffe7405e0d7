use std::fmt::Write as _;
use std::str::FromStr;

use crate::core_indices::IndexReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown output format {other:?} (expected table, json or csv)")),
        }
    }
}

const COLUMNS: [&str; 16] = [
    "id",
    "distortion",
    "h",
    "sharp_c_h",
    "g",
    "n_papers",
    "total_citations",
    "a_index",
    "r_index",
    "r_m",
    "r_g",
    "r_n",
    "euclidean",
    "ci_h",
    "ci_g",
    "ci_n",
];

/// Six significant digits, fixed notation.
fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&magnitude) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn row(report: &IndexReport, real: fn(f64) -> String) -> [String; 16] {
    [
        report.id.clone(),
        report.distortion.to_string(),
        report.h.to_string(),
        report.sharp_c_h.to_string(),
        report.g.to_string(),
        report.n_papers.to_string(),
        report.total_citations.to_string(),
        real(report.a_index),
        real(report.r_index),
        real(report.r_m),
        real(report.r_g),
        real(report.r_n),
        real(report.euclidean),
        real(report.ci_h),
        real(report.ci_g),
        real(report.ci_n),
    ]
}

pub fn emit_report(report: &IndexReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        _ => emit_reports(std::slice::from_ref(report), format),
    }
}

/// Renders several reports; JSON output is an array.
pub fn emit_reports(reports: &[IndexReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => table(reports),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(COLUMNS).expect("write to Vec");
            for r in reports {
                writer.write_record(row(r, |x| format!("{x}"))).expect("write to Vec");
            }
            String::from_utf8(writer.into_inner().expect("flush to Vec")).expect("utf-8")
        }
    }
}

fn table(reports: &[IndexReport]) -> String {
    let rows: Vec<[String; 16]> = reports.iter().map(|r| row(r, sig6)).collect();
    let mut widths = COLUMNS.map(str::len);
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        for (i, (cell, &w)) in cells.zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            // id and distortion left-aligned, numbers right-aligned
            if i < 2 {
                let _ = write!(out, "{cell:<w$}");
            } else {
                let _ = write!(out, "{cell:>w$}");
            }
        }
        let trimmed = out.trim_end().len();
        out.truncate(trimmed);
        out.push('\n');
    };
    line(&mut COLUMNS.iter().copied());
    for r in &rows {
        line(&mut r.iter().map(String::as_str));
    }
    out
}
