//! Published reference data and its comparison with computed values.
//!
//! Every block pairs a published cell with the value computed from root
//! enumeration or diagram combinatorics. Disagreements become [`Erratum`]
//! records; they are reported, never corrected silently.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeness::{diophantine_witness, DiophantineCase, RelationStatus};
use crate::grading::{closed_form_dims, dedupe_sigmas, enumerate_sigmas, graded_dimensions, Sigma};
use crate::levi::{levi_structure, ReductiveDescription};
use crate::rootsys::{diagram_automorphisms, dynkin_diagram, Family, RootSystem, SimpleLieType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// No published case covers this input.
    NotListed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub key: String,
    pub paper: String,
    pub computed: String,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableBlock {
    pub name: String,
    pub title: String,
    pub rows: Vec<TableRow>,
    pub notes: Vec<String>,
}

impl TableBlock {
    fn new(name: &str, title: &str) -> Self {
        TableBlock {
            name: name.to_string(),
            title: title.to_string(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(
        &mut self,
        key: impl Into<String>,
        paper: impl Into<String>,
        computed: impl Into<String>,
    ) -> &TableRow {
        let (paper, computed) = (paper.into(), computed.into());
        let status = if paper == computed {
            RowStatus::Match
        } else {
            RowStatus::Mismatch
        };
        self.rows.push(TableRow {
            key: key.into(),
            paper,
            computed,
            status,
        });
        self.rows.last().expect("just pushed")
    }

    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

/// A published value that disagrees with the computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub location: String,
    pub paper_value: String,
    pub computed_value: String,
    pub note: String,
}

impl Erratum {
    fn new(
        location: impl Into<String>,
        paper: impl Into<String>,
        computed: impl Into<String>,
        note: &str,
    ) -> Self {
        Erratum {
            location: location.into(),
            paper_value: paper.into(),
            computed_value: computed.into(),
            note: note.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesReport {
    pub max_rank: usize,
    pub blocks: Vec<TableBlock>,
    pub errata: Vec<Erratum>,
}

fn triple(d: &[u64]) -> String {
    let parts: Vec<String> = d.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn set_label(values: &BTreeSet<u64>) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn ty(family: Family, rank: usize) -> SimpleLieType {
    SimpleLieType::new(family, rank).expect("reference data uses valid ranks")
}

fn sig(indices: &[usize], rank: usize) -> Sigma {
    Sigma::new(indices.iter().copied(), rank).expect("reference data uses valid subsets")
}

/// Highest root as printed, for any valid type.
pub fn paper_highest_root(t: SimpleLieType) -> Vec<i32> {
    let n = t.rank();
    let mut v = match t.family() {
        Family::A => vec![1; n],
        Family::B => vec![2; n],
        Family::C => vec![2; n],
        Family::D => vec![2; n],
        Family::E => match n {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        Family::F => vec![2, 3, 4, 2],
        Family::G => vec![3, 2],
    };
    match t.family() {
        Family::B => v[0] = 1,
        Family::C => v[n - 1] = 1,
        Family::D => {
            v[0] = 1;
            v[n - 2] = 1;
            v[n - 1] = 1;
        }
        _ => {}
    }
    v
}

/// Published `(dim n_-1, dim n_-2, dim n_-3)` for the exceptional |3|-gradings.
pub const PAPER_EXCEPTIONAL_DIMS: &[(&str, &[usize], [u64; 3])] = &[
    ("E6", &[1, 2], [15, 10, 1]),
    ("E6", &[1, 3], [11, 10, 5]),
    ("E6", &[1, 5], [16, 9, 4]),
    ("E6", &[4], [17, 10, 2]),
    ("E7", &[1, 7], [25, 17, 1]),
    ("E7", &[2, 7], [25, 17, 6]),
    ("E7", &[6, 7], [16, 17, 10]),
    ("E7", &[3], [30, 15, 2]),
    ("E7", &[5], [30, 15, 5]),
    ("E8", &[2], [56, 28, 8]),
    ("E8", &[7], [54, 27, 2]),
    ("F4", &[2], [12, 6, 2]),
    ("G2", &[1], [2, 1, 2]),
];

/// Published Levi data for the exceptional |3|-gradings: center and factors.
pub const PAPER_EXCEPTIONAL_LEVI: &[(&str, &[usize], u64, &[&str])] = &[
    ("E6", &[1, 2], 2, &["A4"]),
    ("E6", &[1, 3], 2, &["A4"]),
    ("E6", &[1, 5], 2, &["A3", "A1"]),
    ("E6", &[4], 1, &["A2", "A1", "A2"]),
    ("E7", &[1, 7], 2, &["D5"]),
    ("E7", &[6, 7], 2, &["D5"]),
    ("E7", &[2, 7], 2, &["A5"]),
    ("E7", &[3], 1, &["A1", "A5"]),
    ("E7", &[5], 1, &["A4", "A2"]),
    ("E8", &[2], 1, &["A7"]),
    ("E8", &[7], 1, &["E6", "A1"]),
    ("F4", &[2], 1, &["A1", "A2"]),
    ("G2", &[1], 1, &["A1"]),
];

/// Published constants `3(dim g − dim n_0)` of the cubic count, per exceptional algebra.
pub const PAPER_CUBIC_CONSTANTS: &[(&str, &[u64])] = &[
    ("G2", &[30]),
    ("F4", &[120]),
    ("E6", &[156, 174]),
    ("E7", &[258, 288, 282, 360]),
    ("E8", &[282, 498]),
];

/// Published `dim n_0` values listed alongside the cubic constants.
pub const PAPER_LEVI_DIMS: &[(&str, &[u64])] = &[
    ("G2", &[4]),
    ("F4", &[12]),
    ("E6", &[20, 26]),
    ("E7", &[47, 37, 39, 14]),
    ("E8", &[64, 82]),
];

/// Published algebra dimensions quoted in the exceptional freeness argument.
pub const PAPER_EXCEPTIONAL_ALGEBRA_DIMS: &[(&str, u64)] =
    &[("E6", 78), ("E7", 133), ("E8", 248), ("F4", 54)];

/// A simple factor `X_m` with low-rank coincidences resolved; empty for rank ≤ 0.
fn canonical_factor(family: Family, rank: i64) -> Vec<SimpleLieType> {
    if rank <= 0 {
        return vec![];
    }
    let r = rank as usize;
    match (family, r) {
        (_, 1) => vec![ty(Family::A, 1)],
        (Family::C, 2) => vec![ty(Family::B, 2)],
        (Family::D, 2) => vec![ty(Family::A, 1), ty(Family::A, 1)],
        (Family::D, 3) => vec![ty(Family::A, 3)],
        _ => vec![ty(family, r)],
    }
}

fn described(center: u64, parts: &[(Family, i64)]) -> ReductiveDescription {
    let factors = parts
        .iter()
        .flat_map(|&(f, r)| canonical_factor(f, r))
        .collect();
    ReductiveDescription::new(center, factors)
}

/// Published Levi descriptions whose case conditions Σ satisfies directly
/// (the diagram symmetries are handled by [`paper_levi`]).
fn paper_levi_direct(t: SimpleLieType, sigma: &[usize]) -> Vec<(String, ReductiveDescription)> {
    use Family::{A, B, C, D};
    let n = t.rank() as i64;
    let s: Vec<i64> = sigma.iter().map(|&x| x as i64).collect();
    let mut out = Vec::new();
    let mut add = |case: &str, center: u64, parts: &[(Family, i64)]| {
        out.push((case.to_string(), described(center, parts)))
    };
    match (t.family(), s.as_slice()) {
        (A, &[i, j, k]) => {
            if (i, j, k) == (1, 2, 3) || (i, j, k) == (1, 2, n) {
                add("A case 1", 3, &[(A, n - 3)]);
            }
            if j == i + 1 && k == i + 2 && 2 <= i && i < n - 3 {
                add("A case 2", 3, &[(A, i - 1), (A, n - i - 2)]);
            }
            if j == i + 1 && 2 <= i && i <= n - 3 && k - (i + 1) > 1 && k < n {
                add("A case 3", 3, &[(A, i - 1), (A, k - i - 2), (A, n - k)]);
            }
            if j == i + 1 && k == n && 1 < i && i < n - 1 {
                add("A case 4", 3, &[(A, i - 1), (A, n - i - 2)]);
            }
            if j - i > 1 && k - j > 1 && k < n {
                add(
                    "A case 5",
                    3,
                    &[(A, i - 1), (A, j - i - 1), (A, k - j - 1), (A, n - k)],
                );
            }
            if k == n && 1 < i && i < j && j < n - 1 {
                add("A case 6", 3, &[(A, i - 1), (A, j - i - 1), (A, n - j - 1)]);
            }
        }
        (B, &[1, i]) => {
            if i == 2 {
                add("B {1,2}", 2, &[(B, n - 2)]);
            }
            if 3 <= i && i <= n - 2 {
                add("B {1,i}", 2, &[(A, i - 2), (B, n - i)]);
            }
            if i == n - 1 {
                add("B {1,n-1}", 2, &[(A, n - 3), (A, 1)]);
            }
            if i == n {
                add("B {1,n}", 2, &[(A, n - 2)]);
            }
        }
        (C, &[i, last]) if last == n => {
            if i == 1 || i == n - 1 {
                add("C {1,n} / {n-1,n}", 2, &[(A, n - 2)]);
            }
            if 2 <= i && i <= n - 2 {
                add("C {i,n}", 2, &[(A, i - 1), (A, n - i - 1)]);
            }
        }
        (D, &[1, a, b]) if a == n - 1 && b == n => add("D {1,n-1,n}", 3, &[(A, n - 3)]),
        (D, &[a, b]) => {
            if a == 1 && 2 <= b && b <= n - 3 {
                add("D {1,i}", 2, &[(A, b - 2), (D, n - b)]);
            }
            if a == 1 && b == n - 2 {
                add("D {1,n-2}", 2, &[(A, n - 4), (A, 1), (A, 1)]);
            }
            if b == n - 1 && 2 <= a && a <= n - 3 {
                add("D {i,n-1}", 2, &[(A, a - 1), (A, n - a - 1)]);
            }
            if (a, b) == (n - 2, n - 1) {
                add("D {n-2,n-1}", 2, &[(A, 1), (A, n - 3)]);
            }
        }
        _ => {
            let name = t.to_string();
            for &(tn, s2, center, factors) in PAPER_EXCEPTIONAL_LEVI {
                if tn == name && s2 == sigma {
                    let factors = factors
                        .iter()
                        .map(|f| f.parse().expect("valid factor label"))
                        .collect();
                    out.push((
                        format!("{name} {}", sig(s2, t.rank())),
                        ReductiveDescription::new(center, factors),
                    ));
                }
            }
        }
    }
    out
}

/// Published Levi descriptions covering Σ, tried on Σ and on its images under
/// the diagram automorphisms (the tables list one representative per orbit).
pub fn paper_levi(t: SimpleLieType, sigma: &Sigma) -> Vec<(String, ReductiveDescription)> {
    let mut images: Vec<Sigma> = diagram_automorphisms(&dynkin_diagram(t))
        .iter()
        .map(|p| sigma.mapped(p))
        .collect();
    images.sort();
    images.dedup();
    images
        .iter()
        .flat_map(|s| paper_levi_direct(t, s.indices()))
        .collect()
}

/// Errata touching one grading's degree dimensions: published closed forms
/// for the classical families, published tables for the exceptional ones.
pub fn dims_errata(t: SimpleLieType, sigma: &Sigma, neg_dims: &[u64]) -> Vec<Erratum> {
    let key = format!("{t} {sigma}");
    if t.family().is_classical() {
        let Ok(cf) = closed_form_dims(t, sigma) else {
            return vec![];
        };
        return (0..3)
            .filter(|&d| neg_dims.get(d) != Some(&cf.paper_stated[d]))
            .map(|d| {
                Erratum::new(
                    format!("closed-forms {key} dim n_-{}", d + 1),
                    cf.paper_stated[d].to_string(),
                    neg_dims.get(d).map(u64::to_string).unwrap_or_default(),
                    "published degree -2 formula disagrees with root enumeration",
                )
            })
            .collect();
    }
    let name = t.to_string();
    PAPER_EXCEPTIONAL_DIMS
        .iter()
        .filter(|&&(n, s, paper)| n == name && s == sigma.indices() && paper.as_slice() != neg_dims)
        .map(|&(_, _, paper)| {
            Erratum::new(
                format!("{}-gradings {key}", name.to_lowercase()),
                triple(&paper),
                triple(neg_dims),
                "published degree dimensions disagree with root enumeration; both triples have the same total",
            )
        })
        .collect()
}

fn highest_root_block() -> TableBlock {
    let mut block = TableBlock::new("highest-roots", "Highest roots");
    for name in ["A5", "B5", "C5", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let t: SimpleLieType = name.parse().expect("valid type");
        let rs = RootSystem::new(t);
        let fmt = |v: &[i32]| {
            format!(
                "({})",
                v.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
            )
        };
        block.push(
            name,
            fmt(&paper_highest_root(t)),
            fmt(rs.highest_root().coeffs()),
        );
    }
    block
}

fn exceptional_dims_blocks(errata: &mut Vec<Erratum>) -> Result<Vec<TableBlock>> {
    let mut blocks = vec![
        TableBlock::new("e6-gradings", "|3|-gradings of E6"),
        TableBlock::new("e7-gradings", "|3|-gradings of E7"),
        TableBlock::new("e8-f4-g2-gradings", "|3|-gradings of E8, F4 and G2"),
    ];
    for &(name, s, paper) in PAPER_EXCEPTIONAL_DIMS {
        let t: SimpleLieType = name.parse().expect("valid type");
        let sigma = sig(s, t.rank());
        let dims = graded_dimensions(&RootSystem::new(t), &sigma, 3)?;
        let idx = match name {
            "E6" => 0,
            "E7" => 1,
            _ => 2,
        };
        let key = format!("{name} {sigma}");
        let row = blocks[idx].push(key.clone(), triple(&paper), triple(&dims.neg_dims));
        if row.status == RowStatus::Mismatch {
            errata.push(Erratum::new(
                format!("{}-gradings {key}", name.to_lowercase()),
                triple(&paper),
                triple(&dims.neg_dims),
                "published degree dimensions disagree with root enumeration; both triples have the same total",
            ));
        }
    }
    Ok(blocks)
}

fn classical_types(family: Family, max_rank: usize) -> impl Iterator<Item = SimpleLieType> {
    family
        .ranks_up_to(max_rank)
        .into_iter()
        .map(move |r| ty(family, r))
}

fn closed_form_block(max_rank: usize, errata: &mut Vec<Erratum>) -> Result<TableBlock> {
    let mut block = TableBlock::new(
        "closed-forms",
        "Closed-form dimensions of classical |3|-gradings",
    );
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for t in classical_types(family, max_rank) {
            let rs = RootSystem::new(t);
            for sigma in enumerate_sigmas(&rs, 3) {
                let dims = graded_dimensions(&rs, &sigma, 3)?;
                let cf = closed_form_dims(t, &sigma)?;
                if cf.corrected.as_slice() != dims.neg_dims.as_slice() {
                    return Err(Error::Inconsistency(format!(
                        "{t} {sigma}: corrected closed form {} differs from enumeration {}",
                        triple(&cf.corrected),
                        triple(&dims.neg_dims)
                    )));
                }
                let key = format!("{t} {sigma}");
                let row = block.push(
                    key.clone(),
                    triple(&cf.paper_stated),
                    triple(&dims.neg_dims),
                );
                if row.status == RowStatus::Mismatch {
                    for d in cf.deviations() {
                        errata.push(Erratum::new(
                            format!("closed-forms {key} dim n_-{}", d + 1),
                            cf.paper_stated[d].to_string(),
                            cf.corrected[d].to_string(),
                            "published degree -2 formula disagrees with root enumeration",
                        ));
                    }
                }
            }
        }
    }
    Ok(block)
}

fn levi_blocks(max_rank: usize, errata: &mut Vec<Erratum>) -> Result<Vec<TableBlock>> {
    let groups: [(&str, &str, Vec<SimpleLieType>); 3] = [
        (
            "levi-A",
            "Reductive part for type A",
            classical_types(Family::A, max_rank).collect(),
        ),
        (
            "levi-BCD",
            "Reductive part for types B, C and D",
            [Family::B, Family::C, Family::D]
                .into_iter()
                .flat_map(|f| classical_types(f, max_rank))
                .collect(),
        ),
        (
            "levi-exceptional",
            "Reductive part for the exceptional types",
            ["E6", "E7", "E8", "F4", "G2"]
                .iter()
                .map(|s| s.parse().expect("valid type"))
                .collect(),
        ),
    ];
    let mut blocks = Vec::new();
    for (name, title, types) in groups {
        let mut block = TableBlock::new(name, title);
        for t in types {
            let rs = RootSystem::new(t);
            for sigma in enumerate_sigmas(&rs, 3) {
                let computed = levi_structure(t, &sigma)?;
                let dims = graded_dimensions(&rs, &sigma, 3)?;
                if computed.total_dim != dims.dim_n0 {
                    return Err(Error::Inconsistency(format!(
                        "{t} {sigma}: Levi dimension {} differs from root count {}",
                        computed.total_dim, dims.dim_n0
                    )));
                }
                let key = format!("{t} {sigma}");
                let candidates = paper_levi(t, &sigma);
                match candidates
                    .iter()
                    .find(|(_, d)| *d != computed)
                    .or(candidates.first())
                {
                    None => block.rows.push(TableRow {
                        key,
                        paper: "not listed".into(),
                        computed: computed.label(),
                        status: RowStatus::NotListed,
                    }),
                    Some((case, paper)) => {
                        let row = block.push(key.clone(), paper.label(), computed.label());
                        if row.status == RowStatus::Mismatch {
                            errata.push(Erratum::new(
                                format!("{name} {key} ({case})"),
                                paper.label(),
                                computed.label(),
                                "published reductive part disagrees with node deletion",
                            ));
                        }
                    }
                }
            }
        }
        let unlisted = block.count(RowStatus::NotListed);
        if unlisted > 0 {
            block.notes.push(format!(
                "{unlisted} subsets are covered by no published case, directly or through a diagram symmetry; computed values shown"
            ));
        }
        blocks.push(block);
    }
    Ok(blocks)
}

fn cubic_block(errata: &mut Vec<Erratum>) -> Result<TableBlock> {
    let mut block = TableBlock::new("cubic", "Cubic dimension count for the exceptional types");
    for &(name, paper_constants) in PAPER_CUBIC_CONSTANTS {
        let t: SimpleLieType = name.parse().expect("valid type");
        let rs = RootSystem::new(t);
        let classes = dedupe_sigmas(&rs, &enumerate_sigmas(&rs, 3));
        let mut n0 = BTreeSet::new();
        let mut constants = BTreeSet::new();
        let mut roots = BTreeSet::new();
        for c in &classes {
            let dims = graded_dimensions(&rs, &c.representative, 3)?;
            n0.insert(dims.dim_n0);
            constants.insert(3 * (t.dimension() - dims.dim_n0));
            roots.extend(crate::freeness::cubic_filter(t.dimension(), dims.dim_n0)?);
        }

        let paper_n0: BTreeSet<u64> = PAPER_LEVI_DIMS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v.iter().copied().collect())
            .unwrap_or_default();
        let row = block.push(
            format!("{name} dim n_0"),
            set_label(&paper_n0),
            set_label(&n0),
        );
        if row.status == RowStatus::Mismatch {
            errata.push(Erratum::new(
                format!("cubic {name} dim n_0"),
                set_label(&paper_n0.difference(&n0).copied().collect()),
                set_label(&n0.difference(&paper_n0).copied().collect()),
                "listed reductive dimensions disagree with the reductive parts of the gradings",
            ));
        }

        let paper: BTreeSet<u64> = paper_constants.iter().copied().collect();
        let row = block.push(
            format!("{name} constants"),
            set_label(&paper),
            set_label(&constants),
        );
        if row.status == RowStatus::Mismatch {
            errata.push(Erratum::new(
                format!("cubic {name} constants"),
                set_label(&paper.difference(&constants).copied().collect()),
                set_label(&constants.difference(&paper).copied().collect()),
                "constant 3(dim g - dim n_0) recomputed from the gradings; no integer root either way",
            ));
        }
        let paper_roots: BTreeSet<u64> = if name == "G2" {
            [2].into()
        } else {
            BTreeSet::new()
        };
        block.push(
            format!("{name} integer roots r >= 2"),
            set_label(&paper_roots),
            set_label(&roots),
        );
    }

    for &(name, paper_dim) in PAPER_EXCEPTIONAL_ALGEBRA_DIMS {
        let t: SimpleLieType = name.parse().expect("valid type");
        let row = block.push(
            format!("{name} dim g"),
            paper_dim.to_string(),
            t.dimension().to_string(),
        );
        if row.status == RowStatus::Mismatch {
            errata.push(Erratum::new(
                format!("cubic {name} dim g"),
                paper_dim.to_string(),
                t.dimension().to_string(),
                "quoted algebra dimension; the constant used alongside it matches the true dimension",
            ));
        }
    }
    Ok(block)
}

fn relations_block(errata: &mut Vec<Erratum>) -> Result<TableBlock> {
    let mut block = TableBlock::new(
        "relations",
        "Diophantine relations for the classical families",
    );
    let cases = [
        ("B {1,i}", DiophantineCase::B { n: 5, i: 3 }),
        ("C {i,n}", DiophantineCase::C { n: 4, i: 2 }),
        ("D {1,i}", DiophantineCase::DFirst { n: 6, i: 3 }),
        ("D {i,n}", DiophantineCase::DTail { n: 6, i: 3 }),
        ("D {1,n-1,n}", DiophantineCase::DFork { n: 5 }),
    ];
    for (label, case) in cases {
        let rep = diophantine_witness(case)?;
        if rep.verdict.free {
            return Err(Error::Inconsistency(format!(
                "{label}: relation audit found a free grading"
            )));
        }
        let rel = &rep.relation;
        let row = block.push(label, rel.printed.clone(), rel.corrected.clone());
        if row.status == RowStatus::Mismatch {
            let note = match rel.status {
                RelationStatus::AfterCorrection => {
                    "printed relation does not follow from the dimension system; the re-derived one still has no admissible solution"
                }
                _ => "printed relation does not follow from the dimension system; the re-derived one admits solutions",
            };
            errata.push(Erratum::new(
                format!("relations {label}"),
                rel.printed.clone(),
                rel.corrected.clone(),
                note,
            ));
        }
    }

    // the A_n commutator rule, checked against dense products in the certificate module
    let row = block.push(
        "commutator-rule",
        "E_pq if p!=s,q=r; -E_qr if p=s,q!=r",
        "E_ps if p!=s,q=r; -E_rq if p=s,q!=r",
    );
    if row.status == RowStatus::Mismatch {
        errata.push(Erratum::new(
            "relations commutator-rule",
            "E_pq (q=r), -E_qr (p=s)",
            "E_ps (q=r), -E_rq (p=s)",
            "index typos in the first two cases; the vanishing case used for the A_n obstruction is correct",
        ));
    }
    Ok(block)
}

/// Rebuilds every reference block with classical ranks up to `max_rank`.
pub fn reproduce_tables(max_rank: usize) -> Result<TablesReport> {
    let mut errata = Vec::new();
    let mut blocks = vec![highest_root_block()];
    blocks.extend(exceptional_dims_blocks(&mut errata)?);
    blocks.push(closed_form_block(max_rank, &mut errata)?);
    blocks.extend(levi_blocks(max_rank, &mut errata)?);
    blocks.push(cubic_block(&mut errata)?);
    blocks.push(relations_block(&mut errata)?);
    for b in &blocks {
        for r in &b.rows {
            if r.status == RowStatus::Mismatch
                && !errata.iter().any(|e| e.location.contains(&r.key))
            {
                errata.push(Erratum::new(
                    format!("{} {}", b.name, r.key),
                    r.paper.clone(),
                    r.computed.clone(),
                    "published value disagrees with the computed one",
                ));
            }
        }
    }
    Ok(TablesReport {
        max_rank,
        blocks,
        errata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block<'a>(rep: &'a TablesReport, name: &str) -> &'a TableBlock {
        rep.blocks.iter().find(|b| b.name == name).unwrap()
    }

    #[test]
    fn reference_blocks() {
        let rep = reproduce_tables(8).unwrap();
        let mut bad: Vec<(&str, &str)> = ["e6-gradings", "e7-gradings"]
            .iter()
            .flat_map(|n| block(&rep, n).rows.iter())
            .filter(|r| r.status == RowStatus::Mismatch)
            .map(|r| (r.key.as_str(), r.computed.as_str()))
            .collect();
        bad.sort();
        assert_eq!(
            bad,
            vec![
                ("E6 {4}", "(18,9,2)"),
                ("E7 {1,7}", "(26,16,1)"),
                ("E7 {2,7}", "(26,16,6)"),
                ("E7 {6,7}", "(17,16,10)")
            ]
        );
        for name in [
            "highest-roots",
            "e8-f4-g2-gradings",
            "levi-BCD",
            "levi-exceptional",
        ] {
            let b = block(&rep, name);
            assert_eq!(b.count(RowStatus::Mismatch), 0, "{name}: {:?}", b.rows);
            assert_eq!(b.count(RowStatus::NotListed), 0, "{name}");
        }
        assert_eq!(block(&rep, "highest-roots").rows.len(), 9);
        assert_eq!(block(&rep, "e6-gradings").rows.len(), 4);
        assert_eq!(block(&rep, "levi-A").count(RowStatus::Mismatch), 0);
    }

    #[test]
    fn closed_form_errata_only_in_degree_two() {
        let rep = reproduce_tables(8).unwrap();
        let cf: Vec<_> = rep
            .errata
            .iter()
            .filter(|e| e.location.starts_with("closed-forms"))
            .collect();
        assert!(!cf.is_empty());
        for e in &cf {
            assert!(e.location.ends_with("dim n_-2"), "{e:?}");
            assert!(
                e.location.contains(" B") || e.location.contains(" C"),
                "{e:?}"
            );
        }
        assert!(cf
            .iter()
            .any(|e| e.location == "closed-forms B4 {1,3} dim n_-2"
                && e.paper_value == "5"
                && e.computed_value == "4"));
        assert!(cf
            .iter()
            .any(|e| e.location == "closed-forms C3 {1,3} dim n_-2"
                && e.paper_value == "4"
                && e.computed_value == "2"));
    }

    #[test]
    fn cubic_errata() {
        let rep = reproduce_tables(4).unwrap();
        let find = |loc: &str| rep.errata.iter().find(|e| e.location == loc).unwrap();
        assert_eq!(find("cubic E8 constants").paper_value, "{282}");
        assert_eq!(find("cubic E8 constants").computed_value, "{552}");
        assert_eq!(find("cubic E7 constants").paper_value, "{360}");
        assert_eq!(find("cubic E7 constants").computed_value, "{300}");
        assert_eq!(find("cubic F4 dim g").computed_value, "52");
    }

    #[test]
    fn paper_levi_uses_symmetry() {
        // {2,5,6} of A7 is tabulated only through its reversal {2,3,6}
        let t: SimpleLieType = "A7".parse().unwrap();
        assert!(paper_levi_direct(t, &[2, 5, 6]).is_empty());
        assert!(!paper_levi(t, &Sigma::new([2, 5, 6], 7).unwrap()).is_empty());
        let d: SimpleLieType = "D6".parse().unwrap();
        assert!(!paper_levi(d, &Sigma::new([3, 6], 6).unwrap()).is_empty());
    }

    #[test]
    fn highest_root_patterns() {
        assert_eq!(
            paper_highest_root("D5".parse().unwrap()),
            vec![1, 2, 2, 1, 1]
        );
        assert_eq!(paper_highest_root("C3".parse().unwrap()), vec![2, 2, 1]);
    }
}
