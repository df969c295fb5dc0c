//! Matrix certificate that the negative part of an `A_n` |3|-grading is not free.
//!
//! In `sl(n+1)` with Σ = {i, j, k}, the degree −1 piece consists of the three
//! sub-diagonal blocks (rows i+1..j × cols 1..i, rows j+1..k × cols i+1..j,
//! rows k+1..n+1 × cols j+1..k). Taking `x = E_{i+1,1}` from the first block and
//! `y = E_{k+1,j+1}` from the third gives `[x, y] = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::Root;

/// How the index pattern of `[E_pq, E_rs]` falls into the four cases of the
/// elementary-matrix commutator rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaCase {
    /// `q = r`, `p ≠ s`: the commutator is `E_ps`.
    InnerMatch,
    /// `p = s`, `q ≠ r`: the commutator is `−E_rq`.
    OuterMatch,
    /// `p = s`, `q = r`: the commutator is `E_pp − E_qq`.
    BothMatch,
    /// `p ≠ s`, `q ≠ r`: the commutator is zero.
    Disjoint,
}

pub fn lemma_case(p: usize, q: usize, r: usize, s: usize) -> LemmaCase {
    match (p == s, q == r) {
        (false, true) => LemmaCase::InnerMatch,
        (true, false) => LemmaCase::OuterMatch,
        (true, true) => LemmaCase::BothMatch,
        (false, false) => LemmaCase::Disjoint,
    }
}

/// `[E_pq, E_rs] = δ_qr E_ps − δ_sp E_rq`, as sparse `((row, col), coefficient)` terms
/// with zero terms dropped.
pub fn elementary_commutator(p: usize, q: usize, r: usize, s: usize) -> Vec<((usize, usize), i64)> {
    let mut terms: Vec<((usize, usize), i64)> = Vec::new();
    let mut add = |pos: (usize, usize), c: i64| match terms.iter_mut().find(|(t, _)| *t == pos) {
        Some((_, v)) => *v += c,
        None => terms.push((pos, c)),
    };
    if q == r {
        add((p, s), 1);
    }
    if s == p {
        add((r, q), -1);
    }
    terms.retain(|&(_, c)| c != 0);
    terms.sort();
    terms
}

/// Dense `XY − YX` for elementary matrices of the given size (1-based positions).
pub fn dense_commutator(size: usize, x: (usize, usize), y: (usize, usize)) -> Vec<Vec<i64>> {
    let elementary = |(a, b): (usize, usize)| {
        let mut m = vec![vec![0i64; size]; size];
        m[a - 1][b - 1] = 1;
        m
    };
    let (mx, my) = (elementary(x), elementary(y));
    let product = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| {
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| (0..size).map(|t| a[i][t] * b[t][j]).sum())
                    .collect::<Vec<i64>>()
            })
            .collect::<Vec<_>>()
    };
    let (xy, yx) = (product(&mx, &my), product(&my, &mx));
    xy.iter()
        .zip(&yx)
        .map(|(u, v)| u.iter().zip(v).map(|(a, b)| a - b).collect())
        .collect()
}

/// Largest `n` for which the dense `(n+1) × (n+1)` product is also computed.
pub const DENSE_CHECK_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnCertificate {
    pub n: usize,
    pub sigma: [usize; 3],
    /// Position `(p, q)` of `x = E_pq`.
    pub x: (usize, usize),
    /// Position `(r, s)` of `y = E_rs`.
    pub y: (usize, usize),
    pub case: LemmaCase,
    /// Both matrices lie in the degree −1 blocks.
    pub in_degree_minus_one: bool,
    /// The commutator rule yields zero.
    pub symbolic_zero: bool,
    /// `XY − YX` computed entrywise is zero; only evaluated for `n ≤ DENSE_CHECK_MAX_N`.
    pub dense_zero: Option<bool>,
    /// Negative roots carried by `x` and `y`, as positive coefficient vectors.
    pub roots: (Root, Root),
}

impl AnCertificate {
    pub fn is_valid(&self) -> bool {
        self.case == LemmaCase::Disjoint
            && self.in_degree_minus_one
            && self.symbolic_zero
            && self.dense_zero != Some(false)
    }
}

/// Builds and verifies the commuting pair `x = E_{i+1,1}`, `y = E_{k+1,j+1}`
/// for the |3|-grading Σ = {i, j, k} of `A_n`.
pub fn an_matrix_certificate(n: usize, i: usize, j: usize, k: usize) -> Result<AnCertificate> {
    if !(1 <= i && i < j && j < k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "need 1 ≤ i < j < k ≤ n, got n = {n}, i = {i}, j = {j}, k = {k}"
        )));
    }
    let (p, q, r, s) = (i + 1, 1, k + 1, j + 1);
    let sigma = [i, j, k];
    // block index of row/column t: number of Σ entries strictly below t
    let block = |t: usize| sigma.iter().filter(|&&m| m < t).count();
    let degree_minus_one = |row: usize, col: usize| row > col && block(row) == block(col) + 1;

    // E_ab with a > b sits in the root space of −(α_b + ... + α_{a−1}).
    let root_of = |a: usize, b: usize| {
        let mut v = vec![0; n];
        for c in &mut v[b - 1..a - 1] {
            *c = 1;
        }
        Root::new(v).expect("interval roots are positive")
    };

    let dense_zero = (n <= DENSE_CHECK_MAX_N).then(|| {
        dense_commutator(n + 1, (p, q), (r, s))
            .iter()
            .flatten()
            .all(|&v| v == 0)
    });
    Ok(AnCertificate {
        n,
        sigma,
        x: (p, q),
        y: (r, s),
        case: lemma_case(p, q, r, s),
        in_degree_minus_one: degree_minus_one(p, q) && degree_minus_one(r, s),
        symbolic_zero: elementary_commutator(p, q, r, s).is_empty(),
        dense_zero,
        roots: (root_of(p, q), root_of(r, s)),
    })
}
