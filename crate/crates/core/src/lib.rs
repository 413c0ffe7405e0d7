//! Choquet-integral citation indices.
//!
//! Classic citation indices (h, g, A, R, Euclidean) treat every paper in a
//! core alike. The CI-indices here aggregate a core with a discrete Choquet
//! integral instead: citations are ranked, and rank j out of m receives the
//! weight Q(j/m) − Q((j−1)/m) for a distortion function Q. A concave Q gives
//! highly cited papers more weight.
//!
//! ```
//! use ci_metrics::{ci_h, ci_g, DistortionSpec, ResearcherProfile};
//!
//! let q: DistortionSpec = "power:a=0.5".parse().unwrap();
//! let researcher = ResearcherProfile::new("R1", [50, 50, 3, 1]);
//! assert!((ci_h(&researcher, &q) - 11.14).abs() < 0.005);
//! assert!(ci_g(&researcher, &q) >= ci_h(&researcher, &q));
//! ```
//!
//! | module           | contents                                             |
//! |------------------|------------------------------------------------------|
//! | [`distortion`]   | distortion families, rank weights, shape check       |
//! | [`core_indices`] | profiles, h/g cores, classic indices, reports        |
//! | [`choquet`]      | Choquet value and CI_h, CI_g, CI_N                   |
//! | [`ranking`]      | lexicographic comparison and ranking                 |
//! | [`report_io`]    | CSV/JSON input, report output, curve sampling, CLI   |

pub mod choquet;
pub mod core_indices;
pub mod distortion;
pub mod error;
pub mod ranking;
pub mod report_io;

pub use choquet::{choquet_value, ci_g, ci_g_with, ci_h, ci_n, ChoquetInput};
pub use core_indices::{
    classic_indices, classic_indices_with, g_core, g_core_with, g_index, g_index_with, h_core, h_core_with, h_index,
    ClassicIndices, Conventions, CoreKind, CoreSet, GConvention, HCoreRule, IndexReport, ResearcherProfile,
};
pub use distortion::special::{normal_cdf, normal_quantile, regularized_incomplete_beta};
pub use distortion::{classify_shape, make_weights, Curvature, DistortionSpec, Family, WeightVector};
pub use error::{Error, Result};
pub use ranking::{compare, rank, rank_reports, rank_with, ComparisonOutcome, RankResult, Relation, DEFAULT_TOLERANCE};
