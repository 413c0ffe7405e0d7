//! Reading profiles from CSV and JSON and writing reports as a table, JSON
//! and CSV.
//!
//! Run with `cargo run --example load_and_report`.

use ci_metrics::report_io::{emit_profiles, emit_reports, parse_profiles, OutputFormat, ProfileFormat};
use ci_metrics::{DistortionSpec, IndexReport};

const CSV: &str = "\
id,citations
alice,40;30;20;13;4
bob,103;1
carol,10;10;10;10;10;10;10;10;10;10;3
";

fn main() {
    let profiles = parse_profiles(CSV, ProfileFormat::Csv).expect("well-formed CSV");
    let q: DistortionSpec = "wang:p=0.75".parse().expect("valid spec");
    let reports: Vec<IndexReport> = profiles.iter().map(|p| IndexReport::compute(p, &q)).collect();

    println!("{}", emit_reports(&reports, OutputFormat::Table));
    println!("{}", emit_reports(&reports, OutputFormat::Csv));
    println!("{}", emit_reports(&reports[..1], OutputFormat::Json));

    // Profiles round-trip through JSON.
    let json = emit_profiles(&profiles, ProfileFormat::Json);
    let back = parse_profiles(&json, ProfileFormat::Json).expect("own output parses");
    assert_eq!(back, profiles);

    // Bad records name the offending line and id.
    match parse_profiles("dave,3;x;1\n", ProfileFormat::Csv) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("{e} (exit code {})", e.exit_code()),
    }
}
