//! Profiles the Euclidean index cannot tell apart, separated by CI-ranking.
//!
//! Run with `cargo run --example euclidean_degeneracy`.

use ci_metrics::{classic_indices, rank, DistortionSpec, ResearcherProfile, DEFAULT_TOLERANCE};

fn main() {
    // Each has sum of squared citations = 10000.
    let profiles = vec![
        ResearcherProfile::new("A", [100]),
        ResearcherProfile::new("B", [50, 50, 50, 50]),
        ResearcherProfile::new("C", vec![1; 10_000]),
    ];
    for p in &profiles {
        let c = classic_indices(p);
        println!("{:<2} papers {:>6}  euclidean {:>7.2}  h {:>2}", p.id(), c.n_papers, c.euclidean, c.h);
    }
    println!();
    for text in ["identity", "power:a=0.5", "dualpower:b=2"] {
        let q: DistortionSpec = text.parse().expect("valid spec");
        let result = rank(&profiles, &q, DEFAULT_TOLERANCE).expect("valid input");
        println!("{:<15} {}", text, result);
    }
}
