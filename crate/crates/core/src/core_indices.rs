//! Researcher profiles, the h- and g-cores, and the classic indices the
//! CI-indices extend (h, g, A, R, R_m, R_g, R_N, Euclidean).

use serde::{Deserialize, Serialize};

use crate::choquet;
use crate::distortion::DistortionSpec;

/// A researcher: an identifier plus one citation count per paper.
///
/// Citations are kept sorted in non-increasing order; input order is not
/// meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResearcherProfile {
    id: String,
    citations: Vec<u64>,
}

impl ResearcherProfile {
    pub fn new(id: impl Into<String>, citations: impl IntoIterator<Item = u64>) -> Self {
        let mut citations: Vec<u64> = citations.into_iter().collect();
        citations.sort_unstable_by(|a, b| b.cmp(a));
        ResearcherProfile {
            id: id.into(),
            citations,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Citation counts, largest first.
    pub fn citations(&self) -> &[u64] {
        &self.citations
    }

    pub fn n_papers(&self) -> usize {
        self.citations.len()
    }

    pub fn total_citations(&self) -> u64 {
        self.citations.iter().sum()
    }

    /// Scales every citation count by `factor`.
    pub fn scaled(&self, factor: u64) -> Self {
        ResearcherProfile {
            id: self.id.clone(),
            citations: self.citations.iter().map(|c| c * factor).collect(),
        }
    }
}

/// Whether the g-index may exceed the number of papers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GConvention {
    /// Pad with fictitious zero-citation papers; g may exceed n.
    #[default]
    Unbounded,
    /// Classic definition, g ≤ n.
    Capped,
}

/// Which papers beyond the top h belong to the h-core.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HCoreRule {
    /// Papers cited at least as often as the h-th most cited paper: the top h
    /// plus anything tied with the h-th.
    #[default]
    TiedWithHth,
    /// Every paper with at least h citations.
    AtLeastH,
}

/// Core-construction choices shared by every index computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Conventions {
    pub h_core: HCoreRule,
    pub g: GConvention,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoreKind {
    HCore,
    GCore,
}

/// Citation counts of the papers in an h- or g-core, largest first.
///
/// An h-core holds the top h papers plus any tied with the h-th (see
/// [`HCoreRule`]), so it can be larger than h. A g-core has exactly g entries, zero-padded when g
/// exceeds the paper count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSet {
    kind: CoreKind,
    values: Vec<u64>,
}

impl CoreSet {
    pub fn kind(&self) -> CoreKind {
        self.kind
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// ♯C: number of members counted with multiplicity.
    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }
}

/// Largest h such that h papers have at least h citations each.
pub fn h_index(profile: &ResearcherProfile) -> usize {
    profile
        .citations
        .iter()
        .enumerate()
        .take_while(|&(i, &c)| c >= (i + 1) as u64)
        .count()
}

/// The h-core under the default [`HCoreRule::TiedWithHth`].
pub fn h_core(profile: &ResearcherProfile) -> CoreSet {
    h_core_with(profile, HCoreRule::TiedWithHth)
}

pub fn h_core_with(profile: &ResearcherProfile, rule: HCoreRule) -> CoreSet {
    let h = h_index(profile);
    let values = if h == 0 {
        Vec::new()
    } else {
        let threshold = match rule {
            HCoreRule::TiedWithHth => profile.citations[h - 1],
            HCoreRule::AtLeastH => h as u64,
        };
        profile.citations.iter().copied().take_while(|&c| c >= threshold).collect()
    };
    CoreSet {
        kind: CoreKind::HCore,
        values,
    }
}

/// g-index with fictitious zero-citation papers allowed.
pub fn g_index(profile: &ResearcherProfile) -> usize {
    g_index_with(profile, GConvention::Unbounded)
}

/// Largest g such that the top g papers jointly have at least g² citations.
pub fn g_index_with(profile: &ResearcherProfile, convention: GConvention) -> usize {
    // Σ_{i≤g} x_i − g² has non-increasing increments, so the admissible g
    // form a prefix of the naturals.
    let mut sum: u128 = 0;
    let mut g = 0usize;
    for (i, &c) in profile.citations.iter().enumerate() {
        sum += c as u128;
        let rank = (i + 1) as u128;
        if sum >= rank * rank {
            g = i + 1;
        } else {
            return g;
        }
    }
    match convention {
        GConvention::Capped => g,
        // every real paper passed; the padded condition is N ≥ g²
        GConvention::Unbounded => g.max(sum.isqrt() as usize),
    }
}

pub fn g_core(profile: &ResearcherProfile) -> CoreSet {
    g_core_with(profile, GConvention::Unbounded)
}

pub fn g_core_with(profile: &ResearcherProfile, convention: GConvention) -> CoreSet {
    let g = g_index_with(profile, convention);
    let mut values: Vec<u64> = profile.citations.iter().copied().take(g).collect();
    values.resize(g, 0);
    CoreSet {
        kind: CoreKind::GCore,
        values,
    }
}

/// The indices that do not depend on a distortion function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicIndices {
    pub h: usize,
    pub sharp_c_h: usize,
    pub g: usize,
    pub n_papers: usize,
    pub total_citations: u64,
    pub a_index: f64,
    pub r_index: f64,
    pub r_m: f64,
    pub r_g: f64,
    pub r_n: f64,
    pub euclidean: f64,
}

pub fn classic_indices(profile: &ResearcherProfile) -> ClassicIndices {
    classic_indices_with(profile, Conventions::default())
}

pub fn classic_indices_with(profile: &ResearcherProfile, conventions: Conventions) -> ClassicIndices {
    let h_core = h_core_with(profile, conventions.h_core);
    let g_core = g_core_with(profile, conventions.g);
    classic_from_cores(profile, &h_core, &g_core)
}

fn classic_from_cores(profile: &ResearcherProfile, h_core: &CoreSet, g_core: &CoreSet) -> ClassicIndices {
    let h = h_index(profile);
    let top_h: u64 = profile.citations[..h].iter().sum();
    let total = profile.total_citations();
    let squares: u128 = profile.citations.iter().map(|&c| c as u128 * c as u128).sum();
    ClassicIndices {
        h,
        sharp_c_h: h_core.size(),
        g: g_core.size(),
        n_papers: profile.n_papers(),
        total_citations: total,
        a_index: if h == 0 { 0.0 } else { top_h as f64 / h as f64 },
        r_index: (top_h as f64).sqrt(),
        r_m: (h_core.sum() as f64).sqrt(),
        r_g: (g_core.sum() as f64).sqrt(),
        r_n: (total as f64).sqrt(),
        euclidean: (squares as f64).sqrt(),
    }
}

/// Every index for one profile under one distortion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub id: String,
    pub distortion: DistortionSpec,
    pub h: usize,
    pub sharp_c_h: usize,
    pub g: usize,
    pub n_papers: usize,
    pub total_citations: u64,
    pub a_index: f64,
    pub r_index: f64,
    pub r_m: f64,
    pub r_g: f64,
    pub r_n: f64,
    pub euclidean: f64,
    pub ci_h: f64,
    pub ci_g: f64,
    pub ci_n: f64,
}

impl IndexReport {
    pub fn compute(profile: &ResearcherProfile, spec: &DistortionSpec) -> Self {
        Self::compute_with(profile, spec, Conventions::default())
    }

    pub fn compute_with(profile: &ResearcherProfile, spec: &DistortionSpec, conventions: Conventions) -> Self {
        let h_core = h_core_with(profile, conventions.h_core);
        let g_core = g_core_with(profile, conventions.g);
        let classic = classic_from_cores(profile, &h_core, &g_core);
        IndexReport {
            id: profile.id.clone(),
            distortion: *spec,
            h: classic.h,
            sharp_c_h: classic.sharp_c_h,
            g: classic.g,
            n_papers: classic.n_papers,
            total_citations: classic.total_citations,
            a_index: classic.a_index,
            r_index: classic.r_index,
            r_m: classic.r_m,
            r_g: classic.r_g,
            r_n: classic.r_n,
            euclidean: classic.euclidean,
            ci_h: choquet::core_index(&h_core, spec),
            ci_g: choquet::core_index(&g_core, spec),
            ci_n: choquet::ci_n(profile, spec),
        }
    }

    pub fn classic(&self) -> ClassicIndices {
        ClassicIndices {
            h: self.h,
            sharp_c_h: self.sharp_c_h,
            g: self.g,
            n_papers: self.n_papers,
            total_citations: self.total_citations,
            a_index: self.a_index,
            r_index: self.r_index,
            r_m: self.r_m,
            r_g: self.r_g,
            r_n: self.r_n,
            euclidean: self.euclidean,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[u64]) -> ResearcherProfile {
        ResearcherProfile::new("t", c.iter().copied())
    }

    fn brute_h(c: &[u64]) -> usize {
        (0..=c.len())
            .filter(|&h| c.iter().filter(|&&x| x >= h as u64).count() >= h)
            .max()
            .unwrap()
    }

    fn brute_g(c: &[u64], capped: bool) -> usize {
        let mut sorted = c.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let total: u64 = sorted.iter().sum();
        let limit = if capped { c.len() } else { c.len() + total as usize };
        (0..=limit)
            .filter(|&g| sorted.iter().take(g).sum::<u64>() >= (g * g) as u64)
            .max()
            .unwrap()
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_index(&p(&[50, 50, 3, 1])), 3);
        assert_eq!(h_index(&p(&[])), 0);
        assert_eq!(h_index(&p(&[0, 0, 0])), 0);
        assert_eq!(h_index(&p(&[5, 5, 5, 3, 3])), 3);
        assert_eq!(h_index(&p(&[1, 5, 3, 5, 5])), 3);
    }

    #[test]
    fn h_core_examples() {
        let core = h_core(&p(&[50, 50, 3, 3, 1]));
        assert_eq!(core.values(), &[50, 50, 3, 3]);
        assert_eq!(core.size(), 4);
        assert_eq!(core.kind(), CoreKind::HCore);
        assert_eq!(h_core(&p(&[90, 10, 3, 1])).values(), &[90, 10, 3]);
        assert!(h_core(&p(&[0, 0])).is_empty());
        // ties with the h-th paper join the core, lower counts do not
        assert_eq!(h_core(&p(&[40, 30, 20, 13, 4])).values(), &[40, 30, 20, 13]);
        assert_eq!(h_core(&p(&[103, 1])).values(), &[103]);
        assert_eq!(h_core(&p(&[5, 5, 5, 3, 3])).values(), &[5, 5, 5]);
        assert_eq!(h_core(&p(&[10, 4, 4, 4, 4, 2])).values(), &[10, 4, 4, 4, 4]);
    }

    #[test]
    fn h_core_at_least_h() {
        let rule = HCoreRule::AtLeastH;
        assert_eq!(h_core_with(&p(&[50, 50, 3, 3, 1]), rule).values(), &[50, 50, 3, 3]);
        assert_eq!(h_core_with(&p(&[40, 30, 20, 13, 4]), rule).values(), &[40, 30, 20, 13, 4]);
        assert_eq!(h_core_with(&p(&[103, 1]), rule).values(), &[103, 1]);
        assert_eq!(h_core_with(&p(&[5, 5, 5, 3, 3]), rule).values(), &[5, 5, 5, 3, 3]);
        assert!(h_core_with(&p(&[0]), rule).is_empty());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_index(&p(&[100, 0])), 10);
        assert_eq!(g_index(&p(&[10; 10])), 10);
        assert_eq!(g_index(&p(&[])), 0);
        assert_eq!(g_index(&p(&[0, 0])), 0);
        assert_eq!(g_index_with(&p(&[100, 0]), GConvention::Capped), 2);
        assert_eq!(g_index_with(&p(&[100]), GConvention::Capped), 1);
    }

    #[test]
    fn g_core_examples() {
        let core = g_core(&p(&[100, 0]));
        assert_eq!(core.size(), 10);
        assert_eq!(core.values()[0], 100);
        assert!(core.values()[1..].iter().all(|&v| v == 0));
        assert_eq!(
            g_core(&p(&[25, 25, 25, 25, 0])).values(),
            &[25, 25, 25, 25, 0, 0, 0, 0, 0, 0]
        );
        assert!(g_core(&p(&[0])).is_empty());
    }

    #[test]
    fn classic_examples() {
        let c = classic_indices(&p(&[50, 50, 3, 1]));
        assert_eq!(c.r_index, 103f64.sqrt());
        assert!((c.a_index - 103.0 / 3.0).abs() < 1e-12);
        let c = classic_indices(&p(&[50, 50, 3, 3, 1]));
        assert_eq!(c.r_m, 106f64.sqrt());
        assert_eq!(c.r_index, 103f64.sqrt());
        let c = classic_indices(&p(&[10; 100]));
        assert_eq!(c.euclidean, 100.0);
    }

    #[test]
    fn empty_profile_is_all_zero() {
        let c = classic_indices(&p(&[]));
        assert_eq!(
            c,
            ClassicIndices {
                h: 0,
                sharp_c_h: 0,
                g: 0,
                n_papers: 0,
                total_citations: 0,
                a_index: 0.0,
                r_index: 0.0,
                r_m: 0.0,
                r_g: 0.0,
                r_n: 0.0,
                euclidean: 0.0,
            }
        );
    }

    #[test]
    fn exhaustive_small_profiles_match_brute_force() {
        // every multiset of up to 8 papers with citations ≤ 12 is too many;
        // walk all sorted sequences of length ≤ 5 plus a strided sample of 8
        fn walk(prefix: &mut Vec<u64>, max: u64, depth: usize, f: &mut dyn FnMut(&[u64])) {
            f(prefix);
            if depth == 0 {
                return;
            }
            for c in 0..=max {
                prefix.push(c);
                walk(prefix, c, depth - 1, f);
                prefix.pop();
            }
        }
        let mut check = |c: &[u64]| {
            let prof = p(c);
            assert_eq!(h_index(&prof), brute_h(c), "{c:?}");
            assert_eq!(g_index(&prof), brute_g(c, false), "{c:?}");
            assert_eq!(g_index_with(&prof, GConvention::Capped), brute_g(c, true), "{c:?}");
        };
        walk(&mut Vec::new(), 12, 5, &mut check);
    }

    proptest! {
        #[test]
        fn h_and_g_invariants(c in proptest::collection::vec(0u64..60, 0..40)) {
            let prof = p(&c);
            let h = h_index(&prof);
            let g = g_index(&prof);
            prop_assert!(h <= g);
            prop_assert!(h <= prof.n_papers());
            prop_assert!(h as u64 <= prof.citations().first().copied().unwrap_or(0));
            prop_assert!(g_index_with(&prof, GConvention::Capped) <= g);

            let core = h_core(&prof);
            let wide = h_core_with(&prof, HCoreRule::AtLeastH);
            if h > 0 {
                prop_assert!(core.size() >= h);
                let hth = prof.citations()[h - 1];
                prop_assert!(core.values()[h - 1..].iter().all(|&v| v == hth));
                prop_assert!(prof.citations()[core.size()..].iter().all(|&v| v < hth));
                prop_assert!(prof.citations()[wide.size()..].iter().all(|&v| v < h as u64));
            } else {
                prop_assert!(core.is_empty() && wide.is_empty());
            }
            prop_assert!(core.values().iter().all(|&v| v >= h as u64));
            prop_assert!(core.size() <= wide.size());

            let gc = g_core(&prof);
            let g2 = (g * g) as u64;
            prop_assert!(gc.sum() >= g2);
            let next: u64 = prof.citations().iter().take(g + 1).sum();
            prop_assert!(next < ((g + 1) * (g + 1)) as u64);
            // recomputing g on the padded core is idempotent
            prop_assert_eq!(g_index(&ResearcherProfile::new("g", gc.values().iter().copied())), g);

            let classic = classic_indices(&prof);
            prop_assert!(classic.r_index <= classic.r_m);
            let r2 = classic.r_index * classic.r_index;
            let ha = classic.h as f64 * classic.a_index;
            prop_assert!((r2 - ha).abs() <= 1e-9 * r2.max(1.0));
        }
    }
}
