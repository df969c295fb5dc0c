//! The reductive degree-zero piece `n_0` of a grading.
//!
//! `n_0` has a center of dimension |Σ|; its semisimple part has the Dynkin
//! diagram obtained by deleting Σ's nodes (and their edges). Each remaining
//! connected component is classified by shape.
//!
//! Low-rank coincidences get canonical labels: a lone node is `A1`, a two-node
//! double edge is `B2`, and a fork with three single-node arms is `D4` (the
//! three-node "D3" shape is a path, hence `A3`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::Sigma;
use crate::rootsys::{dynkin_diagram, DynkinDiagram, Family, SimpleLieType};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductiveDescription {
    pub center_dim: u64,
    /// Simple factors, sorted by family letter then rank descending.
    pub factors: Vec<SimpleLieType>,
    pub total_dim: u64,
}

impl ReductiveDescription {
    pub fn new(center_dim: u64, mut factors: Vec<SimpleLieType>) -> Self {
        sort_factors(&mut factors);
        let total_dim = center_dim + factors.iter().map(SimpleLieType::dimension).sum::<u64>();
        ReductiveDescription {
            center_dim,
            factors,
            total_dim,
        }
    }

    /// Human-readable form, e.g. `C^2+A3+A1`.
    pub fn label(&self) -> String {
        let mut parts = Vec::with_capacity(self.factors.len() + 1);
        match self.center_dim {
            0 => {}
            1 => parts.push("C".to_string()),
            c => parts.push(format!("C^{c}")),
        }
        parts.extend(self.factors.iter().map(ToString::to_string));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// Family letter ascending, then rank descending.
pub fn sort_factors(factors: &mut [SimpleLieType]) {
    factors.sort_by(|a, b| a.family().cmp(&b.family()).then(b.rank().cmp(&a.rank())));
}

/// Center dimension plus the simple factors of `n_0` for the grading Σ of `ty`.
pub fn levi_structure(ty: SimpleLieType, sigma: &Sigma) -> Result<ReductiveDescription> {
    if let Some(&bad) = sigma.indices().iter().find(|&&i| i > ty.rank()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: ty.rank(),
        });
    }
    levi_in(&dynkin_diagram(ty), sigma)
}

/// [`levi_structure`] on a prebuilt diagram; Σ must be in range.
pub(crate) fn levi_in(diagram: &DynkinDiagram, sigma: &Sigma) -> Result<ReductiveDescription> {
    let remaining = diagram.delete_nodes(sigma.indices());
    let factors = remaining
        .components()
        .iter()
        .map(classify_component)
        .collect::<Result<Vec<_>>>()?;
    Ok(ReductiveDescription::new(sigma.len() as u64, factors))
}

/// `center_dim + Σ dim(factor)`.
pub fn reductive_dimension(desc: &ReductiveDescription) -> u64 {
    desc.center_dim
        + desc
            .factors
            .iter()
            .map(SimpleLieType::dimension)
            .sum::<u64>()
}

/// Recognises a connected sub-diagram of a Dynkin diagram.
pub fn classify_component(sub: &DynkinDiagram) -> Result<SimpleLieType> {
    let n = sub.len();
    let unknown = || {
        Error::Inconsistency(format!(
            "connected diagram on nodes {:?} with edges {:?} matches no simple type",
            sub.nodes(),
            sub.edges()
        ))
    };
    if n == 0 || !sub.is_connected() || sub.edges().len() != n - 1 {
        return Err(unknown());
    }
    if n == 1 {
        return SimpleLieType::new(Family::A, 1);
    }

    let multiple: Vec<_> = sub.edges().iter().filter(|e| e.multiplicity > 1).collect();
    let degrees = sub.degrees();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);

    match multiple.as_slice() {
        [] => {
            if max_degree <= 2 {
                return SimpleLieType::new(Family::A, n);
            }
            let forks: Vec<usize> = sub
                .nodes()
                .iter()
                .zip(&degrees)
                .filter(|&(_, &d)| d == 3)
                .map(|(&v, _)| v)
                .collect();
            if forks.len() != 1 || max_degree != 3 {
                return Err(unknown());
            }
            let mut arms = arm_lengths(sub, forks[0]).ok_or_else(unknown)?;
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, c] => SimpleLieType::new(Family::D, c + 3),
                [1, 2, 2] => SimpleLieType::new(Family::E, 6),
                [1, 2, 3] => SimpleLieType::new(Family::E, 7),
                [1, 2, 4] => SimpleLieType::new(Family::E, 8),
                _ => Err(unknown()),
            }
        }
        [e] => {
            if max_degree > 2 {
                return Err(unknown());
            }
            let short = e.short_end.ok_or_else(unknown)?;
            let long = e.other(short).ok_or_else(unknown)?;
            match e.multiplicity {
                3 if n == 2 => SimpleLieType::new(Family::G, 2),
                2 if n == 2 => SimpleLieType::new(Family::B, 2),
                2 if sub.degree(short) == 1 => SimpleLieType::new(Family::B, n),
                2 if sub.degree(long) == 1 => SimpleLieType::new(Family::C, n),
                2 if n == 4 => SimpleLieType::new(Family::F, 4),
                _ => Err(unknown()),
            }
        }
        _ => Err(unknown()),
    }
}

/// Number of nodes on each arm leaving `fork`, provided every arm is a path.
fn arm_lengths(sub: &DynkinDiagram, fork: usize) -> Option<Vec<usize>> {
    sub.neighbors(fork)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (fork, first, 1);
            loop {
                let next: Vec<usize> = sub.neighbors(cur).filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [] => return Some(len),
                    [w] => {
                        prev = cur;
                        cur = *w;
                        len += 1;
                    }
                    _ => return None,
                }
            }
        })
        .collect()
}
