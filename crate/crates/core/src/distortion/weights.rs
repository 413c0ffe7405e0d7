use crate::error::{Error, Result};

use super::DistortionSpec;

const SUM_TOLERANCE: f64 = 1e-10;
const LINEAR_TOLERANCE: f64 = 1e-9;

/// Rank weights w_1..w_m: non-negative, summing to one.
///
/// Index 0 holds the weight of the top-ranked (largest) value.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    /// Wraps explicit weights after checking the weight-vector constraints.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty("weight vector"));
        }
        if let Some(&bad) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
            return Err(Error::Domain {
                function: "WeightVector::new",
                value: bad,
                domain: "[0, 1]",
            });
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::Domain {
                function: "WeightVector::new",
                value: sum,
                domain: "sum of weights = 1",
            });
        }
        Ok(WeightVector { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.weights.iter()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.weights
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.weights[index]
    }
}

/// Single rank weight Q(j/m) − Q((j−1)/m) for 1 ≤ j ≤ m, clamped at zero.
///
/// Lets callers sum over a prefix of a long rank vector without building it.
pub fn rank_weight(spec: &DistortionSpec, j: usize, m: usize) -> f64 {
    debug_assert!(j >= 1 && j <= m);
    let m_f = m as f64;
    let upper = if j == m { 1.0 } else { j as f64 / m_f };
    let lower = (j - 1) as f64 / m_f;
    (spec.value_at(upper) - spec.value_at(lower)).max(0.0)
}

/// Weights w_j = Q(j/m) − Q((j−1)/m), j = 1..m, applied to values ranked
/// from largest to smallest.
///
/// A concave Q puts more weight on the top ranks. Increments lost to
/// floating-point cancellation are clamped to zero; the vector is
/// renormalized only if its sum then drifts past 1e-10.
pub fn make_weights(spec: &DistortionSpec, m: usize) -> Result<WeightVector> {
    if m == 0 {
        return Err(Error::Domain {
            function: "make_weights",
            value: 0.0,
            domain: "m >= 1",
        });
    }
    let mut weights: Vec<f64> = (1..=m).map(|j| rank_weight(spec, j, m)).collect();
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > SUM_TOLERANCE && sum > 0.0 {
        weights.iter_mut().for_each(|w| *w /= sum);
    }
    Ok(WeightVector { weights })
}

/// Shape of a distortion function on [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Curvature {
    Convex,
    Concave,
    Linear,
    Neither,
}

/// Classifies Q from the signs of its second differences on `grid_size`
/// uniform points, treating |Δ²Q| ≤ 1e-9 as zero.
pub fn classify_shape(spec: &DistortionSpec, grid_size: usize) -> Result<Curvature> {
    if grid_size < 3 {
        return Err(Error::Domain {
            function: "classify_shape",
            value: grid_size as f64,
            domain: "grid_size >= 3",
        });
    }
    let last = (grid_size - 1) as f64;
    let q: Vec<f64> = (0..grid_size)
        .map(|i| spec.value_at(if i + 1 == grid_size { 1.0 } else { i as f64 / last }))
        .collect();

    let (mut any_up, mut any_down) = (false, false);
    for w in q.windows(3) {
        let d2 = w[0] - 2.0 * w[1] + w[2];
        if d2 > LINEAR_TOLERANCE {
            any_up = true;
        } else if d2 < -LINEAR_TOLERANCE {
            any_down = true;
        }
    }
    Ok(match (any_up, any_down) {
        (false, false) => Curvature::Linear,
        (true, false) => Curvature::Convex,
        (false, true) => Curvature::Concave,
        (true, true) => Curvature::Neither,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(s: &str) -> DistortionSpec {
        s.parse().unwrap()
    }

    #[test]
    fn identity_weights_are_uniform() {
        let w = make_weights(&DistortionSpec::identity(), 4).unwrap();
        for &x in w.iter() {
            assert!((x - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn sqrt_weights_frozen() {
        // (√j − √(j−1)) / 2, mpmath at 40 digits
        let expected = [0.5, 0.207_106_781_186_547_5, 0.158_918_622_597_891_1, 0.133_974_596_215_561_35];
        let w = make_weights(&spec("power:a=0.5"), 4).unwrap();
        for (got, want) in w.iter().zip(expected) {
            assert!((got - want).abs() < 1e-15, "{got} vs {want}");
        }
    }

    #[test]
    fn single_rank_gets_everything() {
        for s in ["identity", "power:a=3", "beta:a=2,b=5", "wang:p=0.1", "lookback:p=0.2"] {
            assert_eq!(make_weights(&spec(s), 1).unwrap().as_slice(), &[1.0]);
        }
    }

    #[test]
    fn zero_ranks_rejected() {
        assert!(make_weights(&DistortionSpec::identity(), 0).is_err());
    }

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::new(vec![0.5, 0.5]).is_ok());
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![0.5, 0.6]).is_err());
        assert!(WeightVector::new(vec![1.5, -0.5]).is_err());
    }

    #[test]
    fn shape_examples() {
        assert_eq!(classify_shape(&spec("power:a=0.5"), 1001).unwrap(), Curvature::Concave);
        assert_eq!(classify_shape(&spec("power:a=2"), 1001).unwrap(), Curvature::Convex);
        assert_eq!(classify_shape(&spec("dualpower:b=0.5"), 1001).unwrap(), Curvature::Convex);
        assert_eq!(classify_shape(&spec("dualpower:b=2"), 1001).unwrap(), Curvature::Concave);
        assert_eq!(classify_shape(&spec("identity"), 1001).unwrap(), Curvature::Linear);
        assert_eq!(classify_shape(&spec("power:a=1"), 1001).unwrap(), Curvature::Linear);
        assert_eq!(classify_shape(&spec("beta:a=2,b=3"), 1001).unwrap(), Curvature::Neither);
        assert_eq!(classify_shape(&spec("beta:a=0.5,b=2"), 1001).unwrap(), Curvature::Concave);
        assert!(classify_shape(&spec("identity"), 2).is_err());
    }

    #[test]
    fn wang_shape_follows_p() {
        for p in [0.55, 0.75, 0.9, 0.99] {
            let q = DistortionSpec::wang(p).unwrap();
            assert_eq!(classify_shape(&q, 1001).unwrap(), Curvature::Concave, "p={p}");
        }
        for p in [0.01, 0.25, 0.45] {
            let q = DistortionSpec::wang(p).unwrap();
            assert_eq!(classify_shape(&q, 1001).unwrap(), Curvature::Convex, "p={p}");
        }
        let q = DistortionSpec::wang(0.5).unwrap();
        assert_eq!(classify_shape(&q, 1001).unwrap(), Curvature::Linear);
    }

    #[test]
    fn lookback_is_concave() {
        for p in [0.05, 0.3, 0.5, 0.8, 1.0] {
            let q = DistortionSpec::lookback(p).unwrap();
            assert_eq!(classify_shape(&q, 1001).unwrap(), Curvature::Concave, "p={p}");
        }
    }

    proptest! {
        #[test]
        fn weights_sum_to_one(q in crate::distortion::tests::any_spec(), m in 1usize..300) {
            let w = make_weights(&q, m).unwrap();
            prop_assert_eq!(w.len(), m);
            let sum: f64 = w.iter().sum();
            prop_assert!((sum - 1.0).abs() <= 1e-10, "{} m={} sum={}", q, m, sum);
            prop_assert!(w.iter().all(|&x| (0.0..=1.0).contains(&x)));
        }

        #[test]
        fn weight_direction_matches_shape(q in crate::distortion::tests::any_spec(), m in 2usize..120) {
            let w = make_weights(&q, m).unwrap();
            match classify_shape(&q, 1001).unwrap() {
                Curvature::Concave => {
                    for p in w.as_slice().windows(2) {
                        prop_assert!(p[0] + 1e-12 >= p[1], "{} {:?}", q, p);
                    }
                }
                Curvature::Convex => {
                    for p in w.as_slice().windows(2) {
                        prop_assert!(p[0] <= p[1] + 1e-12, "{} {:?}", q, p);
                    }
                }
                _ => {}
            }
        }
    }
}
