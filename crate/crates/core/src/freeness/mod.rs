//! Is the negative part of a grading a free nilpotent Lie algebra?
//!
//! The degree −1 piece generates the negative part, so the universal map from
//! the free nilpotent algebra on `r = dim n_{-1}` generators is a surjective
//! graded morphism. Equal dimensions in every degree therefore force an
//! isomorphism, and freeness reduces to comparing with Witt's formula once
//! generation is confirmed.
//!
//! Two independent obstructions are also provided: a pair of commuting degree
//! −1 root vectors (impossible in a free algebra, whose degree −2 piece is the
//! full exterior square), and the cubic dimension count.

mod certificate;
mod diophantine;
mod witt;

use serde::{Deserialize, Serialize};

pub use certificate::{
    an_matrix_certificate, dense_commutator, elementary_commutator, lemma_case, AnCertificate,
    LemmaCase, DENSE_CHECK_MAX_N,
};
pub use diophantine::{
    diophantine_witness, DiophantineCase, DiophantineReport, RelationCheck, RelationFn,
    RelationStatus, WittEquation, SEARCH_BOUND,
};
pub use witt::{mobius, witt_dimensions, WittDims};

use crate::error::{Error, Result};
use crate::grading::{root_heights, GradingDims, Sigma};
use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Reason {
    /// Every degree matches Witt's formula and degree −1 generates.
    DimsMatch,
    /// The free algebra on `r` generators vanishes in the grading's top degree.
    DepthMismatch {
        witt: Vec<u64>,
    },
    /// First degree (1-based) where the dimensions differ.
    WittMismatch {
        degree: usize,
        expected: u64,
        actual: u64,
    },
    CommutingPair {
        first: Root,
        second: Root,
    },
    NotGenerated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessVerdict {
    pub free: bool,
    pub r: Option<u64>,
    pub reason: Reason,
}

fn narrow(w: u128) -> Result<u64> {
    u64::try_from(w).map_err(|_| Error::Overflow("free Lie algebra dimension"))
}

/// Decides freeness from the negative dimensions `(dim n_{-1}, ..., dim n_{-k})`
/// and the outcome of the generation check.
pub fn verdict_from_dims(neg_dims: &[u64], generated: bool) -> Result<FreenessVerdict> {
    let Some(&r) = neg_dims.first() else {
        return Err(Error::InvalidParameters(
            "a grading has at least one negative degree".into(),
        ));
    };
    if r == 0 {
        return Err(Error::InvalidParameters("dim n_-1 must be positive".into()));
    }
    // Past degree `exact`, r^d no longer fits in i128. The free dimensions outgrow
    // any u64 long before that, so a mismatch always shows up in the prefix.
    let len = neg_dims.len() as u32;
    let exact = if r == 1 {
        len
    } else {
        len.min(i128::MAX.ilog(i128::from(r)))
    };
    let witt = witt_dimensions(r, exact)?;
    let top = neg_dims.len() - 1;
    let reason = if r == 1 && witt.dims[top] == 0 && neg_dims[top] > 0 {
        // only possible for r = 1, where the free dims are (1, 0, ...)
        Reason::DepthMismatch {
            witt: witt
                .dims
                .iter()
                .map(|&w| narrow(w))
                .collect::<Result<_>>()?,
        }
    } else if let Some(d) = (0..exact as usize).find(|&d| witt.dims[d] != u128::from(neg_dims[d])) {
        Reason::WittMismatch {
            degree: d + 1,
            // bounded by r times the matching dimension below it
            expected: narrow(witt.dims[d])?,
            actual: neg_dims[d],
        }
    } else if exact < len {
        return Err(Error::Overflow("free Lie algebra dimension"));
    } else if !generated {
        Reason::NotGenerated
    } else {
        Reason::DimsMatch
    };
    Ok(FreenessVerdict {
        free: reason == Reason::DimsMatch,
        r: Some(r),
        reason,
    })
}

/// Freeness verdict for a computed grading; `generated` is the result of
/// [`generation_check`](crate::grading::generation_check).
pub fn freeness_check(dims: &GradingDims, generated: bool) -> Result<FreenessVerdict> {
    verdict_from_dims(&dims.neg_dims, generated)
}

/// Positions of Σ-height-1 positive roots in the order used for witness search:
/// ordinary height ascending, then coefficient vector descending, which lists
/// simple roots as α_1, α_2, ...
fn degree_one_positions(rs: &RootSystem, heights: &[i64]) -> Vec<usize> {
    // positive roots are stored in lexicographic order, so position order is root order
    rs.positions_by_height()
        .iter()
        .map(|&p| p as usize)
        .filter(|&p| heights[p] == 1)
        .collect()
}

/// First pair of distinct Σ-height-1 positive roots whose sum is not a root.
///
/// `[g_{-α}, g_{-β}] = 0` exactly when α + β is not a root, so such a pair spans
/// a commuting two-dimensional subspace of `n_{-1}`. This rules out freeness
/// only for depth at least 2.
pub fn commuting_pair(rs: &RootSystem, sigma: &Sigma) -> Result<Option<(Root, Root)>> {
    if let Some(&bad) = sigma.indices().iter().find(|&&i| i > rs.rank()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: rs.rank(),
        });
    }
    let heights = root_heights(rs, sigma);
    Ok(commuting_pair_with(rs, &heights))
}

pub(crate) fn commuting_pair_with(rs: &RootSystem, heights: &[i64]) -> Option<(Root, Root)> {
    let pos = degree_one_positions(rs, heights);
    let roots = rs.positive_roots();
    for (n, &a) in pos.iter().enumerate() {
        for &b in &pos[n + 1..] {
            if !rs.sum_is_root(a, b) {
                return Some((roots[a].clone(), roots[b].clone()));
            }
        }
    }
    None
}

/// Integers `r ≥ 2` with `2r³ + 3r² + r = 3(dim g − dim n_0)`.
///
/// If the negative part is free on `r` generators, `dim g = dim n_0 +
/// 2(r + (r² − r)/2 + (r³ − r)/3)`, which rearranges to this cubic.
pub fn cubic_filter(dim_g: u64, dim_n0: u64) -> Result<Vec<u64>> {
    if dim_g <= dim_n0 {
        return Err(Error::InvalidParameters(format!(
            "cubic filter needs dim g > dim n_0 (got {dim_g} and {dim_n0})"
        )));
    }
    let target = 3 * u128::from(dim_g - dim_n0);
    let cubic = |r: u128| 2 * r * r * r + 3 * r * r + r;
    Ok((2u128..)
        .take_while(|&r| 2 * r * r * r <= target)
        .filter(|&r| cubic(r) == target)
        .map(|r| r as u64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deep_gradings_do_not_overflow() {
        // A_n with every node in Σ: dims (n, n-1, ..., 1)
        let dims: Vec<u64> = (1..=200).rev().collect();
        let v = verdict_from_dims(&dims, true).unwrap();
        assert_eq!(
            v.reason,
            Reason::WittMismatch {
                degree: 2,
                expected: 19900,
                actual: 199
            }
        );
        let v = verdict_from_dims(&[1, 1], true).unwrap();
        assert!(matches!(v.reason, Reason::DepthMismatch { .. }));
    }

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(t.parse().unwrap())
    }

    fn sig(v: &[usize], rank: usize) -> Sigma {
        Sigma::new(v.iter().copied(), rank).unwrap()
    }

    #[test]
    fn verdict_examples() {
        let g2 = verdict_from_dims(&[2, 1, 2], true).unwrap();
        assert!(g2.free);
        assert_eq!(g2.r, Some(2));

        let f4 = verdict_from_dims(&[12, 6, 2], true).unwrap();
        assert!(!f4.free);
        assert_eq!(
            f4.reason,
            Reason::WittMismatch {
                degree: 2,
                expected: 66,
                actual: 6
            }
        );

        let c3 = verdict_from_dims(&[5, 2, 1], true).unwrap();
        assert_eq!(
            c3.reason,
            Reason::WittMismatch {
                degree: 2,
                expected: 10,
                actual: 2
            }
        );
    }

    #[test]
    fn verdict_reasons() {
        assert!(matches!(
            verdict_from_dims(&[1, 0, 1], true).unwrap().reason,
            Reason::DepthMismatch { .. }
        ));
        assert_eq!(
            verdict_from_dims(&[2, 1, 2], false).unwrap().reason,
            Reason::NotGenerated
        );
        assert!(verdict_from_dims(&[], true).is_err());
        assert!(verdict_from_dims(&[0, 1], true).is_err());
    }

    #[test]
    fn commuting_pair_examples() {
        let a4 = rs("A4");
        let (x, y) = commuting_pair(&a4, &sig(&[1, 2, 3], 4)).unwrap().unwrap();
        assert_eq!(
            (x.coeffs(), y.coeffs()),
            (&[1, 0, 0, 0][..], &[0, 0, 1, 0][..])
        );

        assert_eq!(commuting_pair(&rs("G2"), &sig(&[1], 2)).unwrap(), None);
        assert!(commuting_pair(&rs("B4"), &sig(&[1, 2], 4))
            .unwrap()
            .is_some());
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(cubic_filter(14, 4).unwrap(), vec![2]);
        assert!(cubic_filter(52, 12).unwrap().is_empty());
        assert!(cubic_filter(248, 82).unwrap().is_empty());
        assert!(cubic_filter(4, 4).is_err());
    }
}
