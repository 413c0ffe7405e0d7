//! Every distortion family: values on a grid, curvature and rank weights.
//!
//! Run with `cargo run --example distortion_families`.

use ci_metrics::{classify_shape, make_weights, DistortionSpec};

fn main() {
    let specs = [
        "identity",
        "power:a=0.5",
        "power:a=2",
        "dualpower:b=2",
        "beta:a=0.5,b=2",
        "wang:p=0.75",
        "wang:p=0.25",
        "lookback:p=0.5",
    ];
    let xs = [0.1, 0.25, 0.5, 0.75, 0.9];

    print!("{:<16} {:<9}", "spec", "shape");
    for x in xs {
        print!(" Q({x:<4})");
    }
    println!("  weights (m = 5)");

    for text in specs {
        let q: DistortionSpec = text.parse().expect("valid spec");
        let shape = classify_shape(&q, 200).expect("grid >= 3");
        print!("{:<16} {:<9}", q.to_string(), format!("{shape:?}"));
        for x in xs {
            print!(" {:>7.4}", q.evaluate(x).expect("x in [0, 1]"));
        }
        let w = make_weights(&q, 5).expect("m >= 1");
        let w: Vec<String> = w.iter().map(|v| format!("{v:.3}")).collect();
        println!("  [{}]", w.join(", "));
    }

    // Out-of-range parameters are rejected when the spec is built.
    for bad in ["power:a=0", "wang:p=1", "beta:a=1", "cubic"] {
        match bad.parse::<DistortionSpec>() {
            Ok(q) => println!("{bad}: unexpectedly parsed as {q}"),
            Err(e) => println!("{bad}: {e}"),
        }
    }
}
