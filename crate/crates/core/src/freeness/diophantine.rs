//! Diophantine relations for the classical families, re-derived and audited.
//!
//! Assuming the negative part of a classical |3|-grading were free on `r`
//! generators, equating the closed-form dimensions with `(r, (r² − r)/2,
//! (r³ − r)/3)` and eliminating parameters gives one polynomial relation per
//! family. The published relations are compared with relations re-derived from
//! the corrected closed forms, and each is searched for admissible integer
//! solutions. The final verdict always comes from the enumeration oracle.

use serde::{Deserialize, Serialize};

use super::{freeness_check, witt_dimensions, FreenessVerdict, WittDims};
use crate::error::{Error, Result};
use crate::grading::{closed_form_dims, generation_check, graded_dimensions, GradingDims, Sigma};
use crate::rootsys::{Family, RootSystem, SimpleLieType};

/// A relation as `lhs − rhs` in `(r, n, i)`.
pub type RelationFn = fn(i128, i128, i128) -> i128;

/// Largest `r` and `n` tried when searching for admissible solutions.
pub const SEARCH_BOUND: i128 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum DiophantineCase {
    /// `B_n`, Σ = {1, i}.
    B { n: usize, i: usize },
    /// `C_n`, Σ = {i, n}.
    C { n: usize, i: usize },
    /// `D_n`, Σ = {1, i}.
    DFirst { n: usize, i: usize },
    /// `D_n`, Σ = {i, n}.
    DTail { n: usize, i: usize },
    /// `D_n`, Σ = {1, n − 1, n}.
    DFork { n: usize },
}

impl DiophantineCase {
    fn n(&self) -> usize {
        match *self {
            DiophantineCase::B { n, .. }
            | DiophantineCase::C { n, .. }
            | DiophantineCase::DFirst { n, .. }
            | DiophantineCase::DTail { n, .. }
            | DiophantineCase::DFork { n } => n,
        }
    }

    fn i(&self) -> usize {
        match *self {
            DiophantineCase::B { i, .. }
            | DiophantineCase::C { i, .. }
            | DiophantineCase::DFirst { i, .. }
            | DiophantineCase::DTail { i, .. } => i,
            DiophantineCase::DFork { .. } => 0,
        }
    }

    fn with(&self, n: usize, i: usize) -> DiophantineCase {
        match self {
            DiophantineCase::B { .. } => DiophantineCase::B { n, i },
            DiophantineCase::C { .. } => DiophantineCase::C { n, i },
            DiophantineCase::DFirst { .. } => DiophantineCase::DFirst { n, i },
            DiophantineCase::DTail { .. } => DiophantineCase::DTail { n, i },
            DiophantineCase::DFork { .. } => DiophantineCase::DFork { n },
        }
    }

    fn family(&self) -> Family {
        match self {
            DiophantineCase::B { .. } => Family::B,
            DiophantineCase::C { .. } => Family::C,
            _ => Family::D,
        }
    }

    /// Admissible `i` for rank `n` (a single dummy value for the fork case).
    fn i_range(&self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            DiophantineCase::B { .. } => 2..=n,
            DiophantineCase::C { .. } => 1..=n.saturating_sub(1),
            DiophantineCase::DFirst { .. } | DiophantineCase::DTail { .. } => {
                2..=n.saturating_sub(2)
            }
            DiophantineCase::DFork { .. } => 0..=0,
        }
    }

    fn min_rank(&self) -> usize {
        match self.family() {
            Family::B => 2,
            Family::C => 3,
            _ => 4,
        }
    }

    pub fn lie_type(&self) -> Result<SimpleLieType> {
        let n = self.n();
        if n < self.min_rank() || !self.i_range(n).contains(&self.i()) {
            return Err(Error::InvalidParameters(format!(
                "{self:?} is not a valid |3|-grading"
            )));
        }
        SimpleLieType::new(self.family(), n)
    }

    pub fn sigma(&self) -> Result<Sigma> {
        let n = self.lie_type()?.rank();
        let i = self.i();
        match self {
            DiophantineCase::B { .. } | DiophantineCase::DFirst { .. } => Sigma::new([1, i], n),
            DiophantineCase::C { .. } | DiophantineCase::DTail { .. } => Sigma::new([i, n], n),
            DiophantineCase::DFork { .. } => Sigma::new([1, n - 1, n], n),
        }
    }

    /// Published and re-derived relations, in that order.
    pub fn relations(&self) -> [(&'static str, RelationFn); 2] {
        match self {
            DiophantineCase::B { .. } => [
                ("-r^6+2r^4+7r^3+8r^2-16r = 36n-12", |r, n, _| {
                    -r.pow(6) + 2 * r.pow(4) + 7 * r.pow(3) + 8 * r * r - 16 * r - (36 * n - 12)
                }),
                ("-r^6+2r^4+15r^3+8r^2-24r = 36n-18", |r, n, _| {
                    -r.pow(6) + 2 * r.pow(4) + 15 * r.pow(3) + 8 * r * r - 24 * r - (36 * n - 18)
                }),
            ],
            DiophantineCase::C { .. } => [
                ("r^2-5r = -2(n-i)(2i+1)", |r, n, i| {
                    r * r - 5 * r + 2 * (n - i) * (2 * i + 1)
                }),
                ("r^2-5r = -2(n-i)(n+1)", |r, n, i| {
                    r * r - 5 * r + 2 * (n - i) * (n + 1)
                }),
            ],
            DiophantineCase::DFirst { .. } => {
                let f: RelationFn = |r, n, _| {
                    r.pow(6) - 2 * r.pow(4) - 15 * r.pow(3) - 8 * r * r + 24 * r - (36 - 36 * n)
                };
                [
                    ("r^6-2r^4-15r^3-8r^2+24r = 36-36n", f),
                    ("r^6-2r^4-15r^3-8r^2+24r = 36-36n", f),
                ]
            }
            DiophantineCase::DTail { .. } => {
                let f: RelationFn = |r, n, i| r * r - 5 * r + 2 * (n - 1) * (n - i);
                [("r^2-5r = -2(n-1)(n-i)", f), ("r^2-5r = -2(n-1)(n-i)", f)]
            }
            DiophantineCase::DFork { .. } => {
                let f: RelationFn = |r, _, _| r.pow(3) - 2 * r;
                [("r^3-2r = 0", f), ("r^3-2r = 0", f)]
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationStatus {
    /// The published relation coincides with the re-derived one.
    AsPrinted,
    /// The published relation is wrong; the re-derived one still has no admissible solution.
    AfterCorrection,
    /// The published relation is wrong and the re-derived one admits solutions,
    /// so the relation alone cannot rule out freeness.
    Moot,
}

/// One degree of the Witt system `dim n_{-d} = dim f_{-d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittEquation {
    pub degree: usize,
    pub paper_value: u64,
    pub corrected_value: u64,
    pub witt: u128,
    pub holds_as_printed: bool,
    pub holds_corrected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub printed: String,
    pub corrected: String,
    pub status: RelationStatus,
    /// Printed relation evaluated at this grading's `(r, n, i)`.
    pub printed_holds_here: bool,
    pub corrected_holds_here: bool,
    /// `(r, n, i)` within [`SEARCH_BOUND`] satisfying the relation and the degree −3 equation.
    pub printed_solutions: Vec<[u64; 3]>,
    pub corrected_solutions: Vec<[u64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiophantineReport {
    pub case: DiophantineCase,
    pub dims: GradingDims,
    pub witt: WittDims,
    pub equations: Vec<WittEquation>,
    pub relation: RelationCheck,
    pub verdict: FreenessVerdict,
}

fn cube_equation_holds(case: &DiophantineCase, r: i128, n: usize, i: usize) -> bool {
    let Ok(ty) = case.with(n, i).lie_type() else {
        return false;
    };
    let Ok(sigma) = case.with(n, i).sigma() else {
        return false;
    };
    let cf = closed_form_dims(ty, &sigma).expect("diophantine cases are classical patterns");
    (r * r * r - r) / 3 == i128::from(cf.corrected[2])
}

fn admissible_solutions(case: &DiophantineCase, rel: RelationFn) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for r in 1..=SEARCH_BOUND {
        for n in case.min_rank()..=SEARCH_BOUND as usize {
            for i in case.i_range(n) {
                if rel(r, n as i128, i as i128) == 0 && cube_equation_holds(case, r, n, i) {
                    out.push([r as u64, n as u64, i as u64]);
                }
            }
        }
    }
    out
}

/// Audits the family's relation against root enumeration for one grading.
pub fn diophantine_witness(case: DiophantineCase) -> Result<DiophantineReport> {
    let ty = case.lie_type()?;
    let sigma = case.sigma()?;
    let rs = RootSystem::new(ty);
    let dims = graded_dimensions(&rs, &sigma, 3)?;
    let cf = closed_form_dims(ty, &sigma)?;
    if cf.corrected.as_slice() != dims.neg_dims.as_slice() {
        return Err(Error::Inconsistency(format!(
            "corrected closed form {:?} differs from enumeration {:?} for {ty} {sigma}",
            cf.corrected, dims.neg_dims
        )));
    }
    let r = dims.neg_dims[0];
    let witt = witt_dimensions(r, 3)?;
    let equations = (0..3)
        .map(|d| WittEquation {
            degree: d + 1,
            paper_value: cf.paper_stated[d],
            corrected_value: cf.corrected[d],
            witt: witt.dims[d],
            holds_as_printed: u128::from(cf.paper_stated[d]) == witt.dims[d],
            holds_corrected: u128::from(cf.corrected[d]) == witt.dims[d],
        })
        .collect();

    let [(printed_text, printed), (corrected_text, corrected)] = case.relations();
    let same_form =
        (0..8).all(|a| (0..8).all(|b| (0..8).all(|c| printed(a, b, c) == corrected(a, b, c))));
    let printed_solutions = admissible_solutions(&case, printed);
    let corrected_solutions = admissible_solutions(&case, corrected);
    let status = if same_form {
        RelationStatus::AsPrinted
    } else if corrected_solutions.is_empty() {
        RelationStatus::AfterCorrection
    } else {
        RelationStatus::Moot
    };
    let (rr, nn, ii) = (i128::from(r), case.n() as i128, case.i() as i128);
    let relation = RelationCheck {
        printed: printed_text.to_string(),
        corrected: corrected_text.to_string(),
        status,
        printed_holds_here: printed(rr, nn, ii) == 0,
        corrected_holds_here: corrected(rr, nn, ii) == 0,
        printed_solutions,
        corrected_solutions,
    };

    let verdict = freeness_check(&dims, generation_check(&rs, &sigma, 3))?;
    Ok(DiophantineReport {
        case,
        dims,
        witt,
        equations,
        relation,
        verdict,
    })
}
