//! Root systems of the complex simple Lie algebras, in simple-root coordinates.
//!
//! All indices use **Bourbaki numbering** of the simple roots, 1-based. Other
//! numberings (e.g. for the E series) differ, so every table produced by this
//! crate assumes Bourbaki labels:
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n          (n short)
//! C_n   1 - 2 - ... - (n-1) <= n          (n-1 short)
//! D_n   1 - 2 - ... - (n-2) - (n-1)
//!                        \ - n
//! E_n   1 - 3 - 4 - 5 - ... - n,  2 attached to 4
//! F_4   1 - 2 => 3 - 4                     (3, 4 short)
//! G_2   1 <= 2                             (1 short, triple edge)
//! ```
//!
//! Roots are integer coefficient vectors over the simple roots; no Euclidean
//! realisation is used anywhere.

mod dynkin;
mod index;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use dynkin::{diagram_automorphisms, dynkin_diagram, DynkinDiagram, Edge, NodePermutation};

use crate::error::{Error, Result};
use index::RootIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Ranks admitted for this family, capped at `max_rank`.
    pub fn ranks_up_to(self, max_rank: usize) -> Vec<usize> {
        let candidates: Vec<usize> = match self {
            Family::A => (1..=max_rank).collect(),
            Family::B => (2..=max_rank).collect(),
            Family::C => (3..=max_rank).collect(),
            Family::D => (4..=max_rank).collect(),
            Family::E => vec![6, 7, 8],
            Family::F => vec![4],
            Family::G => vec![2],
        };
        candidates.into_iter().filter(|&r| r <= max_rank).collect()
    }
}

/// A complex simple Lie algebra, identified by its Cartan–Killing type.
///
/// Rank constraints: `A_n` (n ≥ 1), `B_n` (n ≥ 2), `C_n` (n ≥ 3), `D_n` (n ≥ 4),
/// `E_6`, `E_7`, `E_8`, `F_4`, `G_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleLieType {
    family: Family,
    rank: usize,
}

impl SimpleLieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleLieType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the Lie algebra.
    pub fn dimension(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Number of positive roots, by the classical closed forms.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Every type of the given families with rank at most `max_rank`, ordered by family then rank.
    pub fn all_up_to(families: &[Family], max_rank: usize) -> Vec<SimpleLieType> {
        let mut out: Vec<SimpleLieType> = families
            .iter()
            .flat_map(|&f| {
                f.ranks_up_to(max_rank)
                    .into_iter()
                    .map(move |r| SimpleLieType { family: f, rank: r })
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for SimpleLieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleLieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let digits = chars.as_str().trim_start_matches('_');
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseType(s.to_string()));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        SimpleLieType::new(family, rank)
    }
}

impl TryFrom<String> for SimpleLieType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SimpleLieType> for String {
    fn from(t: SimpleLieType) -> String {
        t.to_string()
    }
}

/// A root, stored as its coefficients over the simple roots.
///
/// Ordering is lexicographic on the coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    /// Validates the sign pattern only; membership in a particular root system
    /// is checked by [`RootSystem::is_root`].
    pub fn new(coeffs: Vec<i32>) -> Result<Self> {
        let pos = coeffs.iter().any(|&c| c > 0);
        let neg = coeffs.iter().any(|&c| c < 0);
        if pos == neg {
            return Err(Error::InvalidRoot(coeffs));
        }
        Ok(Root(coeffs))
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Ordinary height: the sum of all coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().map(|&c| i64::from(c)).sum()
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// The simple root with the given 1-based index.
    pub fn simple(rank: usize, index: usize) -> Result<Root> {
        if index == 0 || index > rank {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        let mut v = vec![0; rank];
        v[index - 1] = 1;
        Ok(Root(v))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Height of `root` with respect to a set of simple-root indices (1-based).
///
/// Negative for negative roots; zero for the empty set.
pub fn sigma_height(root: &Root, sigma: &[usize]) -> Result<i64> {
    let rank = root.rank();
    sigma.iter().try_fold(0i64, |acc, &i| {
        if i == 0 || i > rank {
            Err(Error::IndexOutOfRange { index: i, rank })
        } else {
            Ok(acc + i64::from(root.0[i - 1]))
        }
    })
}

/// The root system of a simple Lie algebra: Cartan matrix, positive roots and highest root.
pub struct RootSystem {
    ty: SimpleLieType,
    cartan: Vec<Vec<i32>>,
    positive: Vec<Root>,
    heights: Vec<i64>,
    highest: Root,
    index: RootIndex,
    sums: OnceLock<Vec<Vec<(u32, u32)>>>,
    by_height: Vec<u32>,
    diagram: DynkinDiagram,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("type", &self.ty)
            .field("positive_roots", &self.positive.len())
            .field("highest_root", &self.highest)
            .finish()
    }
}

/// Builds the full root system of `ty`. See [`RootSystem::new`].
pub fn build_root_system(ty: SimpleLieType) -> RootSystem {
    RootSystem::new(ty)
}

impl RootSystem {
    /// Generates the positive roots layer by layer using integer root strings:
    /// for a positive root β and simple root α_i, β + α_i is a root iff
    /// `p - <β, α_i^∨> > 0`, where `p` is how far the α_i-string extends below β.
    pub fn new(ty: SimpleLieType) -> Self {
        let n = ty.rank();
        let diagram = dynkin_diagram(ty);
        let cartan = diagram.cartan_matrix();

        let mut all: Vec<Vec<i32>> = Vec::with_capacity(ty.positive_root_count());
        let mut seen = rustc_hash::FxHashSet::default();
        let mut layer: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        for v in &layer {
            seen.insert(v.clone());
        }
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut down = beta.clone();
                    let mut p = 0;
                    loop {
                        down[i] -= 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i32 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }
        all.sort();
        let positive: Vec<Root> = all.into_iter().map(Root).collect();
        assert_eq!(
            positive.len(),
            ty.positive_root_count(),
            "root generation for {ty} produced the wrong number of roots"
        );

        let highest = positive
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("root system is never empty");
        assert!(
            positive
                .iter()
                .all(|r| r.0.iter().zip(&highest.0).all(|(a, b)| a <= b)),
            "highest root of {ty} does not dominate"
        );

        let index = RootIndex::new(&positive);
        let heights: Vec<i64> = positive.iter().map(Root::height).collect();
        let mut by_height: Vec<u32> = (0..positive.len() as u32).collect();
        by_height.sort_unstable_by_key(|&p| (heights[p as usize], std::cmp::Reverse(p)));
        RootSystem {
            ty,
            cartan,
            positive,
            heights,
            highest,
            index,
            sums: OnceLock::new(),
            by_height,
            diagram,
        }
    }

    pub fn simple_lie_type(&self) -> SimpleLieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Cartan matrix `a_ij = <α_i, α_j^∨>` (row i, column j, 0-based storage).
    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots in lexicographic order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Ordinary heights, aligned with [`positive_roots`](Self::positive_roots).
    pub fn root_heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn dynkin_diagram(&self) -> DynkinDiagram {
        self.diagram.clone()
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    /// Whether `coeffs` or its negation is a positive root.
    pub fn is_root(&self, coeffs: &[i32]) -> Result<bool> {
        if coeffs.len() != self.rank() {
            return Err(Error::WrongLength {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().all(|&c| c <= 0) {
            let neg: Vec<i32> = coeffs.iter().map(|c| -c).collect();
            return Ok(self.index.find(&self.positive, &neg).is_some());
        }
        Ok(self.index.find(&self.positive, coeffs).is_some())
    }

    /// Position of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn position(&self, coeffs: &[i32]) -> Option<usize> {
        if coeffs.len() != self.rank() {
            return None;
        }
        self.index.find(&self.positive, coeffs)
    }

    /// Whether the sum of the positive roots at positions `a` and `b` is a root.
    pub fn sum_is_root(&self, a: usize, b: usize) -> bool {
        self.index.sum_position(&self.positive, a, b).is_some()
    }

    /// Positions ordered by ordinary height, ties by position descending.
    pub fn positions_by_height(&self) -> &[u32] {
        &self.by_height
    }

    /// For every positive root γ, all unordered pairs of positive-root positions
    /// `(a, b)` with `a < b` and `root[a] + root[b] = γ`. Computed once, on first use.
    pub fn sum_decompositions(&self) -> &[Vec<(u32, u32)>] {
        self.sums.get_or_init(|| {
            let m = self.positive.len();
            let mut sums = vec![Vec::new(); m];
            for a in 0..m {
                for b in a + 1..m {
                    if let Some(c) = self.index.sum_position(&self.positive, a, b) {
                        sums[c].push((a as u32, b as u32));
                    }
                }
            }
            sums
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleLieType {
        s.parse().unwrap()
    }

    #[test]
    fn parses_type_strings() {
        assert_eq!(ty("E8").to_string(), "E8");
        assert_eq!(ty("d7"), SimpleLieType::new(Family::D, 7).unwrap());
        assert!("".parse::<SimpleLieType>().is_err());
        assert!("X3".parse::<SimpleLieType>().is_err());
        assert!("A".parse::<SimpleLieType>().is_err());
        assert!("A-1".parse::<SimpleLieType>().is_err());
        assert!("A99999999999999999999999".parse::<SimpleLieType>().is_err());
        assert!(matches!(
            "C2".parse::<SimpleLieType>(),
            Err(Error::InvalidRank {
                family: Family::C,
                rank: 2
            })
        ));
        assert!("E9".parse::<SimpleLieType>().is_err());
        assert!("F5".parse::<SimpleLieType>().is_err());
        assert!("A0".parse::<SimpleLieType>().is_err());
    }

    #[test]
    fn g2_roots() {
        let rs = RootSystem::new(ty("G2"));
        let got: Vec<Vec<i32>> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2]
            ]
        );
        assert_eq!(rs.highest_root().coeffs(), &[3, 2]);
    }

    #[test]
    fn a1_has_one_root() {
        let rs = RootSystem::new(ty("A1"));
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.highest_root().coeffs(), &[1]);
    }

    #[test]
    fn highest_roots_of_representatives() {
        let cases: [(&str, &[i32]); 4] = [
            ("A3", &[1, 1, 1]),
            ("C3", &[2, 2, 1]),
            ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
            ("F4", &[2, 3, 4, 2]),
        ];
        for (t, theta) in cases {
            assert_eq!(RootSystem::new(ty(t)).highest_root().coeffs(), theta, "{t}");
        }
    }

    #[test]
    fn sigma_height_examples() {
        let g2 = RootSystem::new(ty("G2"));
        assert_eq!(sigma_height(g2.highest_root(), &[1]).unwrap(), 3);
        assert_eq!(sigma_height(g2.highest_root(), &[]).unwrap(), 0);
        let a4 = RootSystem::new(ty("A4"));
        assert_eq!(sigma_height(a4.highest_root(), &[1, 2, 4]).unwrap(), 3);
        assert_eq!(
            sigma_height(&a4.highest_root().negated(), &[1, 2]).unwrap(),
            -2
        );
        assert!(matches!(
            sigma_height(a4.highest_root(), &[5]),
            Err(Error::IndexOutOfRange { index: 5, rank: 4 })
        ));
        assert!(sigma_height(a4.highest_root(), &[0]).is_err());
    }

    #[test]
    fn is_root_examples() {
        let g2 = RootSystem::new(ty("G2"));
        assert!(g2.is_root(&[3, 2]).unwrap());
        assert!(g2.is_root(&[-3, -2]).unwrap());
        assert!(!g2.is_root(&[2, 2]).unwrap());
        assert!(!g2.is_root(&[0, 0]).unwrap());
        assert!(!g2.is_root(&[1, -1]).unwrap());
        assert_eq!(
            g2.is_root(&[1, 1, 1]),
            Err(Error::WrongLength {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn root_sign_validation() {
        assert!(Root::new(vec![0, 0]).is_err());
        assert!(Root::new(vec![1, -1]).is_err());
        assert!(Root::new(vec![0, -2]).is_ok());
        assert!(Root::simple(3, 4).is_err());
    }

    #[test]
    fn cartan_matrix_shape() {
        for t in ["B4", "C4", "F4", "G2", "E7", "D5"] {
            let rs = RootSystem::new(ty(t));
            let c = rs.cartan_matrix();
            for (i, row) in c.iter().enumerate() {
                assert_eq!(row[i], 2);
                for (j, &v) in row.iter().enumerate() {
                    if i != j {
                        assert!((-3..=0).contains(&v), "{t} a[{i}][{j}] = {v}");
                        assert_eq!(v == 0, c[j][i] == 0);
                    }
                }
            }
        }
        let b2 = RootSystem::new(ty("B2"));
        assert_eq!(b2.cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn sum_decompositions_g2() {
        let rs = RootSystem::new(ty("G2"));
        let theta = rs.position(&[3, 2]).unwrap();
        let pairs = &rs.sum_decompositions()[theta];
        // (3,2) = (0,1)+(3,1) = (1,1)+(2,1)
        assert_eq!(pairs.len(), 2);
        for &(a, b) in pairs {
            let s: Vec<i32> = rs.positive_roots()[a as usize]
                .coeffs()
                .iter()
                .zip(rs.positive_roots()[b as usize].coeffs())
                .map(|(x, y)| x + y)
                .collect();
            assert_eq!(s, vec![3, 2]);
        }
    }
}
