//! Classic indices and the three CI-indices for a single researcher.
//!
//! Run with `cargo run --example basic_indices`.

use ci_metrics::{classic_indices, ci_g, ci_h, ci_n, g_core, h_core, DistortionSpec, ResearcherProfile};

fn main() {
    let profile = ResearcherProfile::new("example", [42, 30, 17, 9, 9, 6, 3, 1, 0]);
    let q: DistortionSpec = "power:a=0.5".parse().expect("valid spec");

    let c = classic_indices(&profile);
    println!("citations       {:?}", profile.citations());
    println!("h = {}  g = {}  papers = {}  total = {}", c.h, c.g, c.n_papers, c.total_citations);
    println!("h-core {:?}", h_core(&profile).values());
    println!("g-core {:?}", g_core(&profile).values());
    println!();
    println!("A         {:8.4}", c.a_index);
    println!("R         {:8.4}", c.r_index);
    println!("R_m       {:8.4}", c.r_m);
    println!("R_g       {:8.4}", c.r_g);
    println!("R_N       {:8.4}", c.r_n);
    println!("Euclidean {:8.4}", c.euclidean);
    println!();
    println!("under {q}:");
    println!("CI_h      {:8.4}", ci_h(&profile, &q));
    println!("CI_g      {:8.4}", ci_g(&profile, &q));
    println!("CI_N      {:8.4}", ci_n(&profile, &q));
}
