//! Discrete Choquet integral with respect to a distorted uniform measure,
//! and the CI-indices built on it.
//!
//! For values x_1 ≥ … ≥ x_m, each carrying probability 1/m, the Choquet
//! integral ∫₀^∞ Q(S(x)) dx of the empirical survival function S reduces to
//! the rank-weighted sum Σ x_j [Q(j/m) − Q((j−1)/m)].
//!
//! A CI-index over a core of size m is √(m · Choquet value of the core).

use crate::core_indices::{g_core_with, h_core, CoreSet, GConvention, ResearcherProfile};
use crate::distortion::{make_weights, rank_weight, DistortionSpec, WeightVector};
use crate::error::{Error, Result};

/// Values ranked largest first, paired with rank weights of the same length.
#[derive(Clone, Debug, PartialEq)]
pub struct ChoquetInput {
    values: Vec<f64>,
    weights: WeightVector,
}

impl ChoquetInput {
    /// Rejects empty, unsorted, negative or non-finite values and length
    /// mismatches. Values are never re-sorted.
    pub fn new(values: Vec<f64>, weights: WeightVector) -> Result<Self> {
        check_values(&values)?;
        if values.len() != weights.len() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                weights: weights.len(),
            });
        }
        Ok(ChoquetInput { values, weights })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Σ x_j w_j.
    pub fn value(&self) -> f64 {
        self.values.iter().zip(self.weights.iter()).map(|(x, w)| x * w).sum()
    }
}

fn check_values(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Empty("choquet values"));
    }
    if let Some(&bad) = values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
        return Err(Error::Domain {
            function: "choquet_value",
            value: bad,
            domain: "finite values >= 0",
        });
    }
    if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::Unsorted { position: i + 1 });
    }
    Ok(())
}

/// Distortion expectation of the uniform distribution on `values`.
///
/// `values` must be non-empty, non-negative and already sorted largest
/// first.
pub fn choquet_value(values: &[f64], spec: &DistortionSpec) -> Result<f64> {
    check_values(values)?;
    let weights = make_weights(spec, values.len())?;
    Ok(values.iter().zip(weights.iter()).map(|(x, w)| x * w).sum())
}

/// √(m · Σ_{j≤len} y_j · w_j(m)) where `values` are the top entries of an
/// m-long rank vector whose remaining entries are zero.
fn padded_index(values: &[u64], m: usize, spec: &DistortionSpec) -> f64 {
    if m == 0 {
        return 0.0;
    }
    debug_assert!(values.len() <= m);
    let weighted: f64 = values
        .iter()
        .enumerate()
        .take_while(|&(_, &y)| y > 0)
        .map(|(i, &y)| y as f64 * rank_weight(spec, i + 1, m))
        .sum();
    (m as f64 * weighted).sqrt()
}

/// CI-index of an h- or g-core: √(♯C · Σ y_j w_j).
pub fn core_index(core: &CoreSet, spec: &DistortionSpec) -> f64 {
    let m = core.size();
    let Ok(weights) = make_weights(spec, m) else {
        return 0.0;
    };
    let weighted: f64 = core
        .values()
        .iter()
        .zip(weights.iter())
        .map(|(&y, w)| y as f64 * w)
        .sum();
    (m as f64 * weighted).sqrt()
}

/// CI_h: the CI-index over the h-core (default [`HCoreRule`]).
///
/// [`HCoreRule`]: crate::core_indices::HCoreRule
pub fn ci_h(profile: &ResearcherProfile, spec: &DistortionSpec) -> f64 {
    core_index(&h_core(profile), spec)
}

/// CI_g over the zero-padded g-core.
pub fn ci_g(profile: &ResearcherProfile, spec: &DistortionSpec) -> f64 {
    ci_g_with(profile, spec, GConvention::Unbounded)
}

pub fn ci_g_with(profile: &ResearcherProfile, spec: &DistortionSpec, convention: GConvention) -> f64 {
    core_index(&g_core_with(profile, convention), spec)
}

/// CI_N: the paper counts zero-padded to N = total citations, weighted with
/// Q(j/N) − Q((j−1)/N).
///
/// Only the first n weights are evaluated, so the cost is O(n) whatever N is.
pub fn ci_n(profile: &ResearcherProfile, spec: &DistortionSpec) -> f64 {
    let total = profile.total_citations();
    let n = usize::try_from(total).unwrap_or(usize::MAX);
    padded_index(profile.citations(), n, spec)
}
