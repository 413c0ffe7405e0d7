//! Lexicographic ranking of researchers by (CI_h, CI_g, CI_N).
//!
//! Two researchers are compared on CI_h first; a tie there falls through to
//! CI_g, then to CI_N. The seven outcomes are numbered:
//!
//! | rule | CI_h | CI_g | CI_N | relation   |
//! |------|------|------|------|------------|
//! | 1    | >    |      |      | Better     |
//! | 2    | <    |      |      | Worse      |
//! | 3    | =    | >    |      | Better     |
//! | 4    | =    | <    |      | Worse      |
//! | 5    | =    | =    | >    | Better     |
//! | 6    | =    | =    | <    | Worse      |
//! | 7    | =    | =    | =    | Equivalent |
//!
//! "=" is equality within a relative tolerance, [`DEFAULT_TOLERANCE`] unless
//! the caller says otherwise.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::core_indices::{Conventions, IndexReport, ResearcherProfile};
use crate::distortion::DistortionSpec;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Better,
    Worse,
    Equivalent,
}

impl Relation {
    pub fn reversed(self) -> Self {
        match self {
            Relation::Better => Relation::Worse,
            Relation::Worse => Relation::Better,
            Relation::Equivalent => Relation::Equivalent,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Better => "≻",
            Relation::Worse => "≺",
            Relation::Equivalent => "~",
        }
    }
}

/// Result of comparing two reports, from the first report's side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComparisonOutcome {
    pub relation: Relation,
    /// Which of rules 1–7 decided.
    pub deciding_rule: u8,
    /// |difference| at the deciding level; 0 for rule 7.
    pub margin: f64,
}

fn check_tolerance(tol: f64) -> Result<()> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            function: "ranking tolerance",
            value: tol,
            domain: "finite, >= 0",
        })
    }
}

fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

fn levels(r: &IndexReport) -> [f64; 3] {
    [r.ci_h, r.ci_g, r.ci_n]
}

/// Compares `left` against `right` by CI_h, then CI_g, then CI_N.
///
/// Both reports must share a distortion.
pub fn compare(left: &IndexReport, right: &IndexReport, tol: f64) -> Result<ComparisonOutcome> {
    check_tolerance(tol)?;
    if left.distortion != right.distortion {
        return Err(Error::MismatchedDistortion {
            left: left.distortion.to_string(),
            right: right.distortion.to_string(),
        });
    }
    for (level, (a, b)) in levels(left).into_iter().zip(levels(right)).enumerate() {
        if approx_eq(a, b, tol) {
            continue;
        }
        let better_rule = 1 + 2 * level as u8;
        let (relation, deciding_rule) = if a > b {
            (Relation::Better, better_rule)
        } else {
            (Relation::Worse, better_rule + 1)
        };
        return Ok(ComparisonOutcome {
            relation,
            deciding_rule,
            margin: (a - b).abs(),
        });
    }
    Ok(ComparisonOutcome {
        relation: Relation::Equivalent,
        deciding_rule: 7,
        margin: 0.0,
    })
}

/// The comparison between two neighbouring equivalence groups.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjacentStep {
    /// First member of the lower-ranked group.
    pub lower: String,
    /// First member of the higher-ranked group.
    pub upper: String,
    /// `compare(lower, upper)`; always `Worse`.
    pub outcome: ComparisonOutcome,
}

/// A total preorder over profiles, worst group first.
#[derive(Clone, Debug, PartialEq)]
pub struct RankResult {
    groups: Vec<Vec<String>>,
    steps: Vec<AdjacentStep>,
    reports: Vec<IndexReport>,
    distortion: DistortionSpec,
    tolerance: f64,
}

impl RankResult {
    /// Equivalence classes of ids, worst first. Members of a class keep
    /// their input order.
    pub fn ordered_groups(&self) -> &[Vec<String>] {
        &self.groups
    }

    pub fn steps(&self) -> &[AdjacentStep] {
        &self.steps
    }

    /// Reports in input order.
    pub fn reports(&self) -> &[IndexReport] {
        &self.reports
    }

    pub fn report(&self, id: &str) -> Option<&IndexReport> {
        self.reports.iter().find(|r| r.id == id)
    }

    pub fn distortion(&self) -> &DistortionSpec {
        &self.distortion
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Zero-based position of `id`'s group, counted from the best group.
    pub fn position_from_best(&self, id: &str) -> Option<usize> {
        let from_worst = self.groups.iter().position(|g| g.iter().any(|m| m == id))?;
        Some(self.groups.len() - 1 - from_worst)
    }

    /// `A ≺ {B ~ C} ≺ D`, or `D ≻ {B ~ C} ≻ A` when `best_first`.
    pub fn chain(&self, best_first: bool) -> String {
        let render = |g: &Vec<String>| {
            if g.len() == 1 {
                g[0].clone()
            } else {
                format!("{{{}}}", g.join(" ~ "))
            }
        };
        let rendered: Vec<String> = if best_first {
            self.groups.iter().rev().map(render).collect()
        } else {
            self.groups.iter().map(render).collect()
        };
        let sep = if best_first { " ≻ " } else { " ≺ " };
        rendered.join(sep)
    }
}

impl fmt::Display for RankResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.chain(false))
    }
}

/// Computes every profile's report under `spec` and ranks them.
pub fn rank(profiles: &[ResearcherProfile], spec: &DistortionSpec, tol: f64) -> Result<RankResult> {
    rank_with(profiles, spec, tol, Conventions::default())
}

pub fn rank_with(
    profiles: &[ResearcherProfile],
    spec: &DistortionSpec,
    tol: f64,
    conventions: Conventions,
) -> Result<RankResult> {
    check_tolerance(tol)?;
    if profiles.is_empty() {
        return Err(Error::Empty("profile collection"));
    }
    check_unique(profiles.iter().map(ResearcherProfile::id))?;
    let reports: Vec<IndexReport> = profiles
        .par_iter()
        .map(|p| IndexReport::compute_with(p, spec, conventions))
        .collect();
    rank_reports(reports, tol)
}

fn check_unique<'a>(ids: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
    }
    Ok(())
}

/// Ranks precomputed reports. All must share a distortion.
pub fn rank_reports(reports: Vec<IndexReport>, tol: f64) -> Result<RankResult> {
    check_tolerance(tol)?;
    let Some(first) = reports.first() else {
        return Err(Error::Empty("report collection"));
    };
    let distortion = first.distortion;
    if let Some(other) = reports.iter().find(|r| r.distortion != distortion) {
        return Err(Error::MismatchedDistortion {
            left: distortion.to_string(),
            right: other.distortion.to_string(),
        });
    }
    check_unique(reports.iter().map(|r| r.id.as_str()))?;

    let mut index_groups = Vec::new();
    split_level(&reports, (0..reports.len()).collect(), 0, tol, &mut index_groups);

    let mut steps = Vec::with_capacity(index_groups.len().saturating_sub(1));
    for pair in index_groups.windows(2) {
        let (lo, hi) = (&reports[pair[0][0]], &reports[pair[1][0]]);
        steps.push(AdjacentStep {
            lower: lo.id.clone(),
            upper: hi.id.clone(),
            outcome: compare(lo, hi, tol)?,
        });
    }
    let groups = index_groups
        .into_iter()
        .map(|g| g.into_iter().map(|i| reports[i].id.clone()).collect())
        .collect();
    Ok(RankResult {
        groups,
        steps,
        reports,
        distortion,
        tolerance: tol,
    })
}

/// Orders `members` by the given level and splits them wherever two
/// neighbours differ beyond the tolerance, then refines each run on the next
/// level. Chained near-ties merge into one run, which keeps the result a
/// total preorder even when tolerance equality is not transitive.
fn split_level(
    reports: &[IndexReport],
    mut members: Vec<usize>,
    level: usize,
    tol: f64,
    out: &mut Vec<Vec<usize>>,
) {
    if level == 3 {
        members.sort_unstable();
        out.push(members);
        return;
    }
    let key = |i: usize| levels(&reports[i])[level];
    members.sort_by(|&a, &b| key(a).total_cmp(&key(b)).then(a.cmp(&b)));

    let mut run = Vec::new();
    for i in members {
        if let Some(&prev) = run.last() {
            if !approx_eq(key(prev), key(i), tol) {
                split_level(reports, std::mem::take(&mut run), level + 1, tol, out);
            }
        }
        run.push(i);
    }
    if !run.is_empty() {
        split_level(reports, run, level + 1, tol, out);
    }
}

/// Orders two reports the way [`rank_reports`] would place them.
pub fn ordering(left: &IndexReport, right: &IndexReport, tol: f64) -> Result<Ordering> {
    Ok(match compare(left, right, tol)?.relation {
        Relation::Better => Ordering::Greater,
        Relation::Worse => Ordering::Less,
        Relation::Equivalent => Ordering::Equal,
    })
}
