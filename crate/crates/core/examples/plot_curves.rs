//! Plot data for a distortion curve and its rank weights, as CSV.
//!
//! Run with `cargo run --example plot_curves -- beta:a=0.5,b=2 > curves.csv`.

use ci_metrics::report_io::{curves_csv, emit_curves};
use ci_metrics::DistortionSpec;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "power:a=0.5".to_string());
    let q: DistortionSpec = match text.parse() {
        Ok(q) => q,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    };
    let (curve, bars) = emit_curves(&q, 10, 50).expect("grid >= 2");
    print!("{}", curves_csv(&[curve, bars]));
}
