//! Lexicographic ranking by (CI_h, CI_g, CI_N), with the rule that decided
//! each neighbouring pair.
//!
//! Run with `cargo run --example rank_researchers`.

use ci_metrics::{compare, rank, DistortionSpec, IndexReport, ResearcherProfile, DEFAULT_TOLERANCE};

fn main() {
    let profiles = vec![
        ResearcherProfile::new("steady", [10; 10]),
        ResearcherProfile::new("four-hits", [25, 25, 25, 25, 0]),
        ResearcherProfile::new("two-hits", [50, 50, 0]),
        ResearcherProfile::new("one-hit", [100, 0]),
    ];
    let q: DistortionSpec = "power:a=0.5".parse().expect("valid spec");

    let result = rank(&profiles, &q, DEFAULT_TOLERANCE).expect("non-empty, unique ids");
    println!("worst first: {}", result.chain(false));
    println!("best first:  {}", result.chain(true));
    println!();
    for step in result.steps() {
        println!(
            "{:<10} {} {:<10} rule {}  margin {:.4}",
            step.lower,
            step.outcome.relation.symbol(),
            step.upper,
            step.outcome.deciding_rule,
            step.outcome.margin
        );
    }

    // All four share CI_h = 10, so a loose tolerance merges them into one class.
    let loose = rank(&profiles, &q, 0.5).expect("valid tolerance");
    println!();
    println!("tolerance 0.5: {loose}");

    let a = IndexReport::compute(&profiles[0], &q);
    let b = IndexReport::compute(&profiles[3], &q);
    let outcome = compare(&a, &b, DEFAULT_TOLERANCE).expect("same distortion");
    println!("compare(steady, one-hit) = {:?} by rule {}", outcome.relation, outcome.deciding_rule);
}
