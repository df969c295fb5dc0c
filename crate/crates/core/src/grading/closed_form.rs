//! Closed-form dimensions of |3|-gradings of the classical algebras.
//!
//! Two triples are returned for every grading. `paper_stated` evaluates the
//! published formulas literally; `corrected` replaces the two degree −2 formulas
//! that disagree with root counting:
//!
//! * `B_n`, Σ = {1, i}: `dim n_-2 = (2n + 1 − 2i) + (i − 1)(i − 2)/2`
//!   (published: `(i − 1)(i − 2)/2 + (i − 1)(2n − 2i)`);
//! * `C_n`, Σ = {i, n}: `dim n_-2 = i(n − i)` (published: `(n − i)²`).
//!
//! `corrected` always agrees with [`graded_dimensions`](super::graded_dimensions).

use serde::{Deserialize, Serialize};

use super::Sigma;
use crate::error::{Error, Result};
use crate::rootsys::{Family, SimpleLieType};

/// Shape of a |3|-grading subset for the classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum ClassicalPattern {
    /// `A_n`, Σ = {i, j, k}.
    A { i: usize, j: usize, k: usize },
    /// `B_n`, Σ = {1, i}, 2 ≤ i ≤ n.
    B { i: usize },
    /// `C_n`, Σ = {i, n}, 1 ≤ i ≤ n − 1.
    C { i: usize },
    /// `D_n`, Σ = {1, i}, 2 ≤ i ≤ n − 2.
    DFirst { i: usize },
    /// `D_n`, Σ = {i, n} or {i, n − 1}, 2 ≤ i ≤ n − 2.
    DTail { i: usize, tail: usize },
    /// `D_n`, Σ = {1, n − 1, n}.
    DFork,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormDims {
    pub pattern: ClassicalPattern,
    /// `(dim n_-1, dim n_-2, dim n_-3)` from the published formulas.
    pub paper_stated: [u64; 3],
    /// Same triple with the degree −2 corrections applied.
    pub corrected: [u64; 3],
}

impl ClosedFormDims {
    /// Positions (0-based degree − 1) where the two triples differ.
    pub fn deviations(&self) -> Vec<usize> {
        (0..3)
            .filter(|&d| self.paper_stated[d] != self.corrected[d])
            .collect()
    }
}

/// Identifies which closed-form family Σ belongs to.
pub fn classical_pattern(ty: SimpleLieType, sigma: &Sigma) -> Result<ClassicalPattern> {
    let n = ty.rank();
    let mismatch = || Error::PatternMismatch {
        ty: ty.to_string(),
        sigma: sigma.to_string(),
    };
    if let Some(&bad) = sigma.indices().iter().find(|&&i| i > n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: n,
        });
    }
    let s = sigma.indices();
    let pattern = match (ty.family(), s) {
        (Family::A, &[i, j, k]) => ClassicalPattern::A { i, j, k },
        (Family::B, &[1, i]) => ClassicalPattern::B { i },
        (Family::C, &[i, last]) if last == n => ClassicalPattern::C { i },
        (Family::D, &[1, a, b]) if a == n - 1 && b == n => ClassicalPattern::DFork,
        (Family::D, &[1, i]) if i <= n - 2 => ClassicalPattern::DFirst { i },
        (Family::D, &[i, tail]) if i >= 2 && i <= n - 2 && tail >= n - 1 => {
            ClassicalPattern::DTail { i, tail }
        }
        _ => return Err(mismatch()),
    };
    Ok(pattern)
}

/// Evaluates the closed forms for a classical |3|-grading.
pub fn closed_form_dims(ty: SimpleLieType, sigma: &Sigma) -> Result<ClosedFormDims> {
    let pattern = classical_pattern(ty, sigma)?;
    let n = ty.rank() as i64;
    let (paper, corrected): ([i64; 3], [i64; 3]) = match pattern {
        ClassicalPattern::A { i, j, k } => {
            let (i, j, k) = (i as i64, j as i64, k as i64);
            let d = [
                i * (j - i) + (k - j) * (j - i) + (n + 1 - k) * (k - j),
                i * (k - j) + (n + 1 - k) * (j - i),
                i * (n + 1 - k),
            ];
            (d, d)
        }
        ClassicalPattern::B { i } => {
            let i = i as i64;
            let d1 = (i - 1) * (2 * n + 2 - 2 * i);
            let d3 = i - 1;
            let paper2 = (i - 1) * (i - 2) / 2 + (i - 1) * (2 * n - 2 * i);
            let fixed2 = (2 * n + 1 - 2 * i) + (i - 1) * (i - 2) / 2;
            ([d1, paper2, d3], [d1, fixed2, d3])
        }
        ClassicalPattern::C { i } => {
            let i = i as i64;
            let m = n - i;
            let d1 = i * m + m + m * (m - 1) / 2;
            let d3 = i + i * (i - 1) / 2;
            ([d1, m * m, d3], [d1, i * m, d3])
        }
        ClassicalPattern::DFirst { i } => {
            let i = i as i64;
            let d = [
                (2 * n - 2 * i) * (i - 1) + i - 1,
                (i - 1) * (i - 2) / 2 + (2 * n - 2 * i),
                i - 1,
            ];
            (d, d)
        }
        ClassicalPattern::DTail { i, .. } => {
            let i = i as i64;
            let d = [
                (n - i) * (n - i - 1) / 2 + i * (n - i),
                i * (n - i),
                i * (i - 1) / 2,
            ];
            (d, d)
        }
        ClassicalPattern::DFork => {
            let d = [3 * (n - 2), 2 + (n - 2) * (n - 3) / 2, n - 2];
            (d, d)
        }
    };
    let to_u64 = |d: [i64; 3]| {
        d.map(|x| u64::try_from(x).expect("closed forms are nonnegative on valid patterns"))
    };
    Ok(ClosedFormDims {
        pattern,
        paper_stated: to_u64(paper),
        corrected: to_u64(corrected),
    })
}
