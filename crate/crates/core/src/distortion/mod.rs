//! Distortion functions Q: [0,1] → [0,1] and the rank weights they generate.
//!
//! A distortion is non-decreasing with Q(0) = 0 and Q(1) = 1. The crate
//! supports a closed set of families:
//!
//! | family            | Q(x)                         | parameters      |
//! |-------------------|------------------------------|-----------------|
//! | `identity`        | x                            |                 |
//! | `power`           | x^a                          | a > 0           |
//! | `dualpower`       | 1 − (1 − x)^b                | b > 0           |
//! | `beta`            | I_x(a, b)                    | a > 0, b > 0    |
//! | `wang`            | Φ(Φ⁻¹(x) + Φ⁻¹(p))           | 0 < p < 1       |
//! | `lookback`        | x^p (1 − p ln x)             | 0 < p ≤ 1       |
//!
//! Specs parse from and display as the compact strings used on the command
//! line, e.g. `power:a=0.5` or `beta:a=0.5,b=2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub mod special;
mod weights;

pub use weights::{classify_shape, make_weights, rank_weight, Curvature, WeightVector};

/// Distortion family tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Identity,
    Power,
    DualPower,
    IncompleteBeta,
    Wang,
    Lookback,
}

impl Family {
    /// Name used in spec strings.
    pub fn name(self) -> &'static str {
        match self {
            Family::Identity => "identity",
            Family::Power => "power",
            Family::DualPower => "dualpower",
            Family::IncompleteBeta => "beta",
            Family::Wang => "wang",
            Family::Lookback => "lookback",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Kind {
    Identity,
    Power { a: f64 },
    DualPower { b: f64 },
    IncompleteBeta { a: f64, b: f64 },
    // `shift` caches Φ⁻¹(p).
    Wang { p: f64, shift: f64 },
    Lookback { p: f64 },
}

/// A validated distortion function.
///
/// Only the constructors below (and [`FromStr`]) create values, so every
/// `DistortionSpec` satisfies its family's parameter constraints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistortionSpec {
    kind: Kind,
}

fn positive(family: Family, name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            family: family.name(),
            name,
            value,
            constraint: "a finite real > 0",
        })
    }
}

impl DistortionSpec {
    pub fn identity() -> Self {
        DistortionSpec { kind: Kind::Identity }
    }

    /// Q(x) = x^a.
    pub fn power(a: f64) -> Result<Self> {
        let a = positive(Family::Power, "a", a)?;
        Ok(DistortionSpec { kind: Kind::Power { a } })
    }

    /// Q(x) = 1 − (1 − x)^b.
    pub fn dual_power(b: f64) -> Result<Self> {
        let b = positive(Family::DualPower, "b", b)?;
        Ok(DistortionSpec { kind: Kind::DualPower { b } })
    }

    /// Q(x) = I_x(a, b), the regularized incomplete beta function.
    pub fn incomplete_beta(a: f64, b: f64) -> Result<Self> {
        let a = positive(Family::IncompleteBeta, "a", a)?;
        let b = positive(Family::IncompleteBeta, "b", b)?;
        Ok(DistortionSpec { kind: Kind::IncompleteBeta { a, b } })
    }

    /// Wang transform Q(x) = Φ(Φ⁻¹(x) + Φ⁻¹(p)), 0 < p < 1.
    pub fn wang(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidParameter {
                family: Family::Wang.name(),
                name: "p",
                value: p,
                constraint: "in (0, 1)",
            });
        }
        let shift = special::normal_quantile(p)?;
        Ok(DistortionSpec { kind: Kind::Wang { p, shift } })
    }

    /// Lookback distortion Q(x) = x^p (1 − p ln x), 0 < p ≤ 1.
    pub fn lookback(p: f64) -> Result<Self> {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::InvalidParameter {
                family: Family::Lookback.name(),
                name: "p",
                value: p,
                constraint: "in (0, 1]",
            });
        }
        Ok(DistortionSpec { kind: Kind::Lookback { p } })
    }

    pub fn family(&self) -> Family {
        match self.kind {
            Kind::Identity => Family::Identity,
            Kind::Power { .. } => Family::Power,
            Kind::DualPower { .. } => Family::DualPower,
            Kind::IncompleteBeta { .. } => Family::IncompleteBeta,
            Kind::Wang { .. } => Family::Wang,
            Kind::Lookback { .. } => Family::Lookback,
        }
    }

    /// Power exponent or first beta shape.
    pub fn a(&self) -> Option<f64> {
        match self.kind {
            Kind::Power { a } | Kind::IncompleteBeta { a, .. } => Some(a),
            _ => None,
        }
    }

    /// Dual-power exponent or second beta shape.
    pub fn b(&self) -> Option<f64> {
        match self.kind {
            Kind::DualPower { b } | Kind::IncompleteBeta { b, .. } => Some(b),
            _ => None,
        }
    }

    /// Wang or lookback level.
    pub fn p(&self) -> Option<f64> {
        match self.kind {
            Kind::Wang { p, .. } | Kind::Lookback { p } => Some(p),
            _ => None,
        }
    }

    /// Q(x) for x in [0, 1].
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Domain {
                function: "distortion",
                value: x,
                domain: "[0, 1]",
            });
        }
        Ok(self.value_at(x))
    }

    /// Q(x) without the domain check; `x` must lie in [0, 1].
    pub(crate) fn value_at(&self, x: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&x));
        if x == 0.0 {
            return 0.0;
        }
        if x == 1.0 {
            return 1.0;
        }
        let q = match self.kind {
            Kind::Identity => x,
            Kind::Power { a } => x.powf(a),
            Kind::DualPower { b } => -(b * (-x).ln_1p()).exp_m1(),
            Kind::IncompleteBeta { a, b } => beta_unchecked(a, b, x),
            Kind::Wang { shift, .. } => {
                special::normal_cdf(special::normal_quantile(x).unwrap_or(0.0) + shift)
            }
            Kind::Lookback { p } => x.powf(p) * (1.0 - p * x.ln()),
        };
        q.clamp(0.0, 1.0)
    }
}

fn beta_unchecked(a: f64, b: f64, x: f64) -> f64 {
    // parameters are validated at construction and x is interior here
    special::regularized_incomplete_beta(a, b, x).unwrap_or(f64::NAN)
}

impl Default for DistortionSpec {
    fn default() -> Self {
        DistortionSpec::identity()
    }
}

impl fmt::Display for DistortionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Identity => f.write_str("identity"),
            Kind::Power { a } => write!(f, "power:a={a}"),
            Kind::DualPower { b } => write!(f, "dualpower:b={b}"),
            Kind::IncompleteBeta { a, b } => write!(f, "beta:a={a},b={b}"),
            Kind::Wang { p, .. } => write!(f, "wang:p={p}"),
            Kind::Lookback { p } => write!(f, "lookback:p={p}"),
        }
    }
}

impl FromStr for DistortionSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let syntax = |reason: String| Error::SpecSyntax {
            input: input.to_string(),
            reason,
        };
        let lowered = input.trim().to_ascii_lowercase();
        let (name, params) = match lowered.split_once(':') {
            Some((name, params)) => (name.trim(), params.trim()),
            None => (lowered.as_str(), ""),
        };

        let mut a = None;
        let mut b = None;
        let mut p = None;
        if !params.is_empty() {
            for pair in params.split(',') {
                let (key, value) = pair
                    .split_once('=')
                    .ok_or_else(|| syntax(format!("expected key=value, got {pair:?}")))?;
                let value = value.trim();
                let parsed: f64 = value
                    .parse()
                    .ok()
                    .filter(|v: &f64| v.is_finite())
                    .ok_or_else(|| syntax(format!("{value:?} is not a decimal number")))?;
                let slot = match key.trim() {
                    "a" => &mut a,
                    "b" => &mut b,
                    "p" => &mut p,
                    other => return Err(syntax(format!("unknown parameter {other:?}"))),
                };
                if slot.replace(parsed).is_some() {
                    return Err(syntax(format!("parameter {key:?} given twice")));
                }
            }
        }

        let (allowed, family): (&[&str], Family) = match name {
            "identity" => (&[], Family::Identity),
            "power" => (&["a"], Family::Power),
            "dualpower" | "dual-power" | "dual_power" => (&["b"], Family::DualPower),
            "beta" | "incompletebeta" | "incomplete-beta" => (&["a", "b"], Family::IncompleteBeta),
            "wang" => (&["p"], Family::Wang),
            "lookback" => (&["p"], Family::Lookback),
            other => return Err(syntax(format!("unknown distortion family {other:?}"))),
        };
        for (key, given) in [("a", a), ("b", b), ("p", p)] {
            let wanted = allowed.contains(&key);
            if wanted && given.is_none() {
                return Err(syntax(format!("{} requires parameter {key}", family.name())));
            }
            if !wanted && given.is_some() {
                return Err(syntax(format!("{} takes no parameter {key}", family.name())));
            }
        }

        match family {
            Family::Identity => Ok(DistortionSpec::identity()),
            Family::Power => DistortionSpec::power(a.unwrap_or_default()),
            Family::DualPower => DistortionSpec::dual_power(b.unwrap_or_default()),
            Family::IncompleteBeta => {
                DistortionSpec::incomplete_beta(a.unwrap_or_default(), b.unwrap_or_default())
            }
            Family::Wang => DistortionSpec::wang(p.unwrap_or_default()),
            Family::Lookback => DistortionSpec::lookback(p.unwrap_or_default()),
        }
    }
}

impl Serialize for DistortionSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DistortionSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(s: &str) -> DistortionSpec {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(spec("power:a=2").evaluate(0.5).unwrap(), 0.25);
        assert!((spec("wang:p=0.5").evaluate(0.3).unwrap() - 0.3).abs() < 1e-15);
        assert!((spec("beta:a=1,b=1").evaluate(0.7).unwrap() - 0.7).abs() < 1e-14);
        // 12 (x²/2 − 2x³/3 + x⁴/4) at x = 1/4
        let oracle = {
            let x: f64 = 0.25;
            12.0 * (x * x / 2.0 - 2.0 * x.powi(3) / 3.0 + x.powi(4) / 4.0)
        };
        assert!((oracle - 0.261_718_75).abs() < 1e-15);
        assert!((spec("beta:a=2,b=3").evaluate(0.25).unwrap() - oracle).abs() < 1e-12);
        assert!((spec("dualpower:b=2").evaluate(0.5).unwrap() - 0.75).abs() < 1e-15);
        let lb = spec("lookback:p=0.5").evaluate(0.25).unwrap();
        assert!((lb - 0.5 * (1.0 + 0.5 * 4f64.ln())).abs() < 1e-15);
    }

    #[test]
    fn endpoints_exact() {
        for s in [
            "identity",
            "power:a=0.3",
            "dualpower:b=4",
            "beta:a=0.5,b=2",
            "wang:p=0.9",
            "lookback:p=1",
        ] {
            let q = spec(s);
            assert_eq!(q.evaluate(0.0).unwrap(), 0.0, "{s}");
            assert_eq!(q.evaluate(1.0).unwrap(), 1.0, "{s}");
        }
    }

    #[test]
    fn domain_errors() {
        let q = spec("power:a=2");
        assert!(matches!(q.evaluate(-0.01), Err(Error::Domain { .. })));
        assert!(matches!(q.evaluate(1.01), Err(Error::Domain { .. })));
        assert!(q.evaluate(f64::NAN).is_err());
    }

    #[test]
    fn constructors_reject_bad_parameters() {
        assert!(DistortionSpec::power(0.0).is_err());
        assert!(DistortionSpec::power(f64::INFINITY).is_err());
        assert!(DistortionSpec::dual_power(-1.0).is_err());
        assert!(DistortionSpec::incomplete_beta(1.0, 0.0).is_err());
        assert!(DistortionSpec::wang(0.0).is_err());
        assert!(DistortionSpec::wang(1.0).is_err());
        assert!(DistortionSpec::lookback(0.0).is_err());
        assert!(DistortionSpec::lookback(1.0).is_ok());
        assert!(DistortionSpec::lookback(1.2).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(spec("identity"), DistortionSpec::identity());
        assert_eq!(spec(" Power:A=0.5 "), DistortionSpec::power(0.5).unwrap());
        assert_eq!(spec("DUALPOWER:b=2"), DistortionSpec::dual_power(2.0).unwrap());
        assert_eq!(
            spec("beta:b=2,a=0.5"),
            DistortionSpec::incomplete_beta(0.5, 2.0).unwrap()
        );
        assert_eq!(spec("wang:p=0.75").p(), Some(0.75));
        assert_eq!(spec("lookback:p=0.5").family(), Family::Lookback);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "gamma:a=1", "power", "power:a", "power:a=x", "power:b=2", "beta:a=1", "power:a=1,a=2", "identity:p=0.5", "power:a=inf"] {
            assert!(matches!(bad.parse::<DistortionSpec>(), Err(Error::SpecSyntax { .. })), "{bad}");
        }
        assert!(matches!("wang:p=1.5".parse::<DistortionSpec>(), Err(Error::InvalidParameter { .. })));
        assert!(matches!("power:a=-1".parse::<DistortionSpec>(), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in ["identity", "power:a=0.5", "dualpower:b=2", "beta:a=0.5,b=2", "wang:p=0.75", "lookback:p=0.5"] {
            assert_eq!(spec(s).to_string(), s);
        }
    }

    #[test]
    fn serde_as_string() {
        let q = spec("beta:a=0.5,b=2");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "\"beta:a=0.5,b=2\"");
        assert_eq!(serde_json::from_str::<DistortionSpec>(&json).unwrap(), q);
    }

    pub(crate) fn any_spec() -> impl Strategy<Value = DistortionSpec> {
        prop_oneof![
            Just(DistortionSpec::identity()),
            (0.05f64..5.0).prop_map(|a| DistortionSpec::power(a).unwrap()),
            (0.05f64..5.0).prop_map(|b| DistortionSpec::dual_power(b).unwrap()),
            (0.1f64..6.0, 0.1f64..6.0)
                .prop_map(|(a, b)| DistortionSpec::incomplete_beta(a, b).unwrap()),
            (0.01f64..0.99).prop_map(|p| DistortionSpec::wang(p).unwrap()),
            (0.01f64..=1.0).prop_map(|p| DistortionSpec::lookback(p).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn non_decreasing(q in any_spec(), mut xs in proptest::collection::vec(0.0f64..=1.0, 2..40)) {
            xs.sort_by(f64::total_cmp);
            let ys: Vec<f64> = xs.iter().map(|&x| q.evaluate(x).unwrap()).collect();
            for pair in ys.windows(2) {
                prop_assert!(pair[0] <= pair[1] + 1e-12, "{q}: {pair:?}");
            }
            for y in ys {
                prop_assert!((0.0..=1.0).contains(&y));
            }
        }
    }
}
