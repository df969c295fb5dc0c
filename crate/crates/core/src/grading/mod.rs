//! |k|-gradings as subsets Σ of simple roots.
//!
//! A subset Σ defines the grading in which a root space `g_α` sits in degree
//! `ht_Σ(α)`. It is a |k|-grading exactly when the highest root has Σ-height k.
//! Graded-piece dimensions are obtained by counting positive roots by Σ-height;
//! the negative side mirrors the positive side.

mod closed_form;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use closed_form::{classical_pattern, closed_form_dims, ClassicalPattern, ClosedFormDims};

use crate::error::{Error, Result};
use crate::rootsys::{diagram_automorphisms, NodePermutation, RootSystem, SimpleLieType};

/// A nonempty, strictly increasing set of 1-based simple-root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Sigma(Vec<usize>);

impl Sigma {
    pub fn new(indices: impl IntoIterator<Item = usize>, rank: usize) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::InvalidSigma("the subset must be nonempty".into()));
        }
        if let Some(&bad) = v.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSigma(format!("duplicate index in {v:?}")));
        }
        Ok(Sigma(v))
    }

    /// Parses a comma-separated index list such as `"1,4,5"`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let indices = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidSigma(format!("cannot parse `{s}` as a list of indices"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Sigma::new(indices, rank)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    /// Image under a diagram automorphism.
    pub fn mapped(&self, perm: &NodePermutation) -> Sigma {
        let mut v: Vec<usize> = self.0.iter().map(|&i| perm.image(i)).collect();
        v.sort_unstable();
        Sigma(v)
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Dimensions of the graded pieces of one |k|-grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingDims {
    #[serde(rename = "type")]
    pub ty: SimpleLieType,
    pub sigma: Sigma,
    pub k: u32,
    /// `dim n_{-1}, ..., dim n_{-k}`.
    pub neg_dims: Vec<u64>,
    pub dim_n0: u64,
    /// Positive roots of Σ-height zero.
    pub ht0_root_count: u64,
}

impl GradingDims {
    pub fn dim_negative_part(&self) -> u64 {
        self.neg_dims.iter().sum()
    }

    /// `dim n_0 + 2 Σ dim n_{-i}`; equals the dimension of the algebra.
    pub fn total_dimension(&self) -> u64 {
        self.dim_n0 + 2 * self.dim_negative_part()
    }
}

/// Σ-heights of every positive root, in [`RootSystem::positive_roots`] order.
pub(crate) fn root_heights(rs: &RootSystem, sigma: &Sigma) -> Vec<i64> {
    rs.positive_roots()
        .iter()
        .map(|r| {
            sigma
                .indices()
                .iter()
                .map(|&i| i64::from(r.coeffs()[i - 1]))
                .sum()
        })
        .collect()
}

fn theta_height(rs: &RootSystem, sigma: &Sigma) -> Result<i64> {
    if let Some(&bad) = sigma.indices().iter().find(|&&i| i > rs.rank()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: rs.rank(),
        });
    }
    Ok(sigma
        .indices()
        .iter()
        .map(|&i| i64::from(rs.highest_root().coeffs()[i - 1]))
        .sum())
}

/// Fails unless Σ is valid for `rs` and defines a |k|-grading.
pub fn check_grading(rs: &RootSystem, sigma: &Sigma, k: u32) -> Result<()> {
    let actual = theta_height(rs, sigma)?;
    if actual != i64::from(k) {
        return Err(Error::HeightMismatch {
            expected: k,
            actual,
        });
    }
    Ok(())
}

/// All nonempty Σ with `ht_Σ(θ) = k`, in lexicographic order.
pub fn enumerate_sigmas(rs: &RootSystem, k: u32) -> Vec<Sigma> {
    let theta = rs.highest_root().coeffs();
    let mut out = Vec::new();
    let mut current = Vec::new();

    // suffix[i] = sum of theta[i..]; prunes branches that cannot reach k
    let mut suffix = vec![0i64; theta.len() + 1];
    for i in (0..theta.len()).rev() {
        suffix[i] = suffix[i + 1] + i64::from(theta[i]);
    }

    // Pre-order DFS over increasing index lists yields lexicographic order.
    fn dfs(
        theta: &[i32],
        suffix: &[i64],
        start: usize,
        remaining: i64,
        current: &mut Vec<usize>,
        out: &mut Vec<Sigma>,
    ) {
        for i in start..theta.len() {
            if suffix[i] < remaining {
                break;
            }
            let c = i64::from(theta[i]);
            if c > remaining {
                continue;
            }
            current.push(i + 1);
            if c == remaining {
                out.push(Sigma(current.clone()));
            } else {
                dfs(theta, suffix, i + 1, remaining - c, current, out);
            }
            current.pop();
        }
    }

    if k > 0 {
        dfs(theta, &suffix, 0, i64::from(k), &mut current, &mut out);
    }
    out
}

/// An orbit of subsets under the diagram automorphism group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaClass {
    /// Lexicographically least member.
    pub representative: Sigma,
    /// All members of the orbit present in the input, representative first.
    pub members: Vec<Sigma>,
}

/// Partitions `sigmas` into orbits under the automorphisms of the Dynkin diagram of `rs`.
///
/// Classes are ordered by representative.
pub fn dedupe_sigmas(rs: &RootSystem, sigmas: &[Sigma]) -> Vec<SigmaClass> {
    let autos = diagram_automorphisms(&rs.dynkin_diagram());
    let mut classes: BTreeMap<Sigma, Vec<Sigma>> = BTreeMap::new();
    for s in sigmas {
        let canonical = autos
            .iter()
            .map(|p| s.mapped(p))
            .min()
            .unwrap_or_else(|| s.clone());
        classes.entry(canonical).or_default().push(s.clone());
    }
    classes
        .into_values()
        .map(|mut members| {
            members.sort();
            members.dedup();
            SigmaClass {
                representative: members[0].clone(),
                members,
            }
        })
        .collect()
}

/// Wraps each subset in its own singleton class, for callers that skip deduplication.
pub fn singleton_classes(sigmas: &[Sigma]) -> Vec<SigmaClass> {
    sigmas
        .iter()
        .map(|s| SigmaClass {
            representative: s.clone(),
            members: vec![s.clone()],
        })
        .collect()
}

/// Counts positive roots by Σ-height.
pub fn graded_dimensions(rs: &RootSystem, sigma: &Sigma, k: u32) -> Result<GradingDims> {
    dims_from_heights(rs, sigma, k, &root_heights(rs, sigma))
}

/// [`graded_dimensions`] from precomputed [`root_heights`].
pub(crate) fn dims_from_heights(
    rs: &RootSystem,
    sigma: &Sigma,
    k: u32,
    heights: &[i64],
) -> Result<GradingDims> {
    check_grading(rs, sigma, k)?;
    let mut counts = vec![0u64; k as usize + 1];
    for &h in heights {
        counts[h as usize] += 1;
    }
    let ht0 = counts[0];
    Ok(GradingDims {
        ty: rs.simple_lie_type(),
        sigma: sigma.clone(),
        k,
        neg_dims: counts[1..].to_vec(),
        dim_n0: rs.rank() as u64 + 2 * ht0,
        ht0_root_count: ht0,
    })
}

/// Whether every positive root of Σ-height `i + 1` (1 ≤ i < k) is a sum of a
/// positive root of Σ-height 1 and a positive root of Σ-height `i`, i.e. the
/// degree −1 piece generates the negative part.
pub fn generation_check(rs: &RootSystem, sigma: &Sigma, k: u32) -> bool {
    let heights = root_heights(rs, sigma);
    generated_by_degree_one(rs, &heights, k)
}

pub(crate) fn generated_by_degree_one(rs: &RootSystem, heights: &[i64], k: u32) -> bool {
    let sums = rs.sum_decompositions();
    heights.iter().enumerate().all(|(g, &h)| {
        h < 2 || h > i64::from(k) || {
            sums[g]
                .iter()
                .any(|&(a, b)| heights[a as usize] == 1 || heights[b as usize] == 1)
        }
    })
}
