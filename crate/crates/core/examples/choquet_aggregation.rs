//! The discrete Choquet integral on its own, with explicit weights and the
//! staircase form it is equal to.
//!
//! Run with `cargo run --example choquet_aggregation`.

use ci_metrics::{choquet_value, make_weights, ChoquetInput, DistortionSpec};

fn main() {
    let values = [50.0, 50.0, 3.0, 1.0];
    let q = DistortionSpec::power(0.5).expect("a > 0");

    let weights = make_weights(&q, values.len()).expect("m >= 1");
    println!("weights {:?}", weights.as_slice());

    let input = ChoquetInput::new(values.to_vec(), weights).expect("sorted, matching length");
    let direct = input.value();

    let m = values.len();
    let staircase: f64 = (0..m)
        .map(|j| {
            let next = values.get(j + 1).copied().unwrap_or(0.0);
            (values[j] - next) * q.evaluate((j + 1) as f64 / m as f64).unwrap()
        })
        .sum();

    println!("sum x_j w_j                 {direct:.12}");
    println!("sum (x_j - x_j+1) Q(j/m)    {staircase:.12}");
    println!("CI = sqrt(m * value)        {:.6}", (m as f64 * direct).sqrt());

    // Shortcut that builds the weights itself.
    let same = choquet_value(&values, &q).expect("valid input");
    assert!((same - direct).abs() < 1e-12);

    // Input must be ranked largest first.
    match choquet_value(&[1.0, 3.0], &q) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("unsorted input: {e}"),
    }
}
