//! Command dispatch: each command yields an [`Output`] that the renderers format.

use std::collections::{BTreeMap, BTreeSet};

use lie_gradings::freeness::Reason;
use lie_gradings::grading::{classical_pattern, closed_form_dims, ClosedFormDims};
use lie_gradings::tables::paper_levi;
use lie_gradings::{
    assess_sigma, dedupe_sigmas, dims_errata, enumerate_sigmas, generation_check,
    graded_dimensions, levi_structure, reproduce_tables, scan, scan_type, Erratum, Family,
    GradingDims, ReductiveDescription, Root, RootSystem, ScanEntry, Sigma, SigmaClass,
    SimpleLieType,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{Cli, Command, Format};

/// Largest rank accepted on the command line.
pub const MAX_RANK: usize = 200;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl From<lie_gradings::Error> for CliError {
    fn from(e: lie_gradings::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Echo of the parsed parameters relevant to a command.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none", default)]
    pub ty: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dedupe: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub families: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_rank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub inputs: Inputs,
    pub results: Value,
    pub errata: Vec<Erratum>,
}

/// A rectangular block for the table and CSV renderers.
#[derive(Debug, Clone, Default)]
pub struct Section {
    pub title: Option<String>,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub footer: Vec<String>,
}

pub struct Output {
    pub envelope: OutputEnvelope,
    pub sections: Vec<Section>,
}

fn parse_type(s: &str) -> CliResult<SimpleLieType> {
    let ty: SimpleLieType = s.parse()?;
    if ty.rank() > MAX_RANK {
        return Err(CliError::Input(format!(
            "rank {} exceeds the supported maximum {MAX_RANK}",
            ty.rank()
        )));
    }
    Ok(ty)
}

fn parse_families(s: &str) -> CliResult<Vec<Family>> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Family::ALL.to_vec());
    }
    let mut out = BTreeSet::new();
    for c in s.chars().filter(|c| !matches!(c, ',' | ' ')) {
        out.insert(
            Family::from_letter(c)
                .ok_or_else(|| CliError::Input(format!("unknown family letter `{c}`")))?,
        );
    }
    if out.is_empty() {
        return Err(CliError::Input("no families given".into()));
    }
    Ok(out.into_iter().collect())
}

fn require_sigma(cli: &Cli, ty: SimpleLieType) -> CliResult<Sigma> {
    let s = cli
        .sigma
        .as_deref()
        .ok_or_else(|| CliError::Input("this command needs --sigma".into()))?;
    Ok(Sigma::parse(s, ty.rank())?)
}

fn check_k(k: u32) -> CliResult<()> {
    if k == 0 {
        return Err(CliError::Input("--k must be at least 1".into()));
    }
    Ok(())
}

fn to_value<T: Serialize>(v: &T) -> CliResult<Value> {
    serde_json::to_value(v).map_err(|e| CliError::Internal(e.to_string()))
}

/// The JSON payload, built only when JSON output was requested.
fn results<T: Serialize>(cli: &Cli, v: &T) -> CliResult<Value> {
    if cli.format == Format::Json {
        to_value(v)
    } else {
        Ok(Value::Null)
    }
}

pub(crate) fn tuple<T: ToString>(v: &[T]) -> String {
    format!(
        "({})",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Roots { r#type } => roots(cli, r#type),
        Command::Gradings { r#type } => gradings(cli, r#type),
        Command::Dims { r#type } => dims(cli, r#type),
        Command::Levi { r#type } => levi(cli, r#type),
        Command::Free { target } if target.eq_ignore_ascii_case("scan") => scan_cmd(cli, "free"),
        Command::Free { target } => free(cli, target),
        Command::Scan => scan_cmd(cli, "scan"),
        Command::Tables => tables(cli),
    }
}

#[derive(Serialize)]
struct RootsResult<'a> {
    #[serde(rename = "type")]
    ty: SimpleLieType,
    count: usize,
    highest_root: &'a Root,
    positive_roots: &'a [Root],
}

fn roots(cli: &Cli, ty: &str) -> CliResult<Output> {
    let ty = parse_type(ty)?;
    let rs = RootSystem::new(ty);
    let results = results(
        cli,
        &RootsResult {
            ty,
            count: rs.positive_roots().len(),
            highest_root: rs.highest_root(),
            positive_roots: rs.positive_roots(),
        },
    )?;
    let section = Section {
        title: Some(format!("positive roots of {ty}")),
        headers: vec!["root", "height"],
        rows: rs
            .positive_roots()
            .iter()
            .map(|r| vec![r.to_string(), r.height().to_string()])
            .collect(),
        footer: vec![
            format!("count: {}", rs.positive_roots().len()),
            format!("highest root: {}", rs.highest_root()),
        ],
    };
    Ok(Output {
        envelope: OutputEnvelope {
            command: "roots".into(),
            inputs: Inputs {
                ty: Some(ty.to_string()),
                ..Inputs::default()
            },
            results,
            errata: vec![],
        },
        sections: vec![section],
    })
}

#[derive(Serialize)]
struct GradingRecord {
    sigma: Sigma,
    /// Orbit of Σ under the diagram automorphisms.
    orbit: Vec<Sigma>,
    neg_dims: Vec<u64>,
    dim_n0: u64,
    levi: ReductiveDescription,
    levi_label: String,
}

fn gradings(cli: &Cli, ty: &str) -> CliResult<Output> {
    let ty = parse_type(ty)?;
    check_k(cli.k)?;
    let rs = RootSystem::new(ty);
    let sigmas = enumerate_sigmas(&rs, cli.k);
    let classes = dedupe_sigmas(&rs, &sigmas);
    let orbit_of: BTreeMap<&Sigma, &SigmaClass> = classes
        .iter()
        .flat_map(|c| c.members.iter().map(move |m| (m, c)))
        .collect();
    let mut records = Vec::new();
    let mut errata = Vec::new();
    for sigma in &sigmas {
        let class = orbit_of[sigma];
        if cli.dedupe && class.representative != *sigma {
            continue;
        }
        let dims = graded_dimensions(&rs, sigma, cli.k)?;
        let levi = levi_structure(ty, sigma)?;
        if cli.k == 3 {
            errata.extend(dims_errata(ty, sigma, &dims.neg_dims));
        }
        records.push(GradingRecord {
            sigma: sigma.clone(),
            orbit: class.members.clone(),
            neg_dims: dims.neg_dims,
            dim_n0: dims.dim_n0,
            levi_label: levi.label(),
            levi,
        });
    }
    let section = Section {
        title: Some(format!("|{}|-gradings of {ty}", cli.k)),
        headers: vec!["sigma", "orbit", "neg_dims", "dim_n0", "n0"],
        rows: records
            .iter()
            .map(|r| {
                vec![
                    r.sigma.to_string(),
                    r.orbit
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                    tuple(&r.neg_dims),
                    r.dim_n0.to_string(),
                    r.levi_label.clone(),
                ]
            })
            .collect(),
        footer: vec![format!("records: {}", records.len())],
    };
    Ok(Output {
        envelope: OutputEnvelope {
            command: "gradings".into(),
            inputs: Inputs {
                ty: Some(ty.to_string()),
                k: Some(cli.k),
                dedupe: Some(cli.dedupe),
                ..Inputs::default()
            },
            results: results(cli, &records)?,
            errata,
        },
        sections: vec![section],
    })
}

#[derive(Serialize)]
struct DimsResult {
    dims: GradingDims,
    generated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<ClosedFormDims>,
}

fn dims(cli: &Cli, ty: &str) -> CliResult<Output> {
    let ty = parse_type(ty)?;
    check_k(cli.k)?;
    let sigma = require_sigma(cli, ty)?;
    let rs = RootSystem::new(ty);
    let dims = graded_dimensions(&rs, &sigma, cli.k)?;
    let generated = generation_check(&rs, &sigma, cli.k);
    let closed_form = if cli.k == 3 && classical_pattern(ty, &sigma).is_ok() {
        let cf = closed_form_dims(ty, &sigma)?;
        if cf.corrected.as_slice() != dims.neg_dims.as_slice() {
            return Err(CliError::Internal(format!(
                "corrected closed form {} differs from enumeration {}",
                tuple(&cf.corrected),
                tuple(&dims.neg_dims)
            )));
        }
        Some(cf)
    } else {
        None
    };
    let errata = if cli.k == 3 {
        dims_errata(ty, &sigma, &dims.neg_dims)
    } else {
        vec![]
    };
    let mut rows: Vec<Vec<String>> = dims
        .neg_dims
        .iter()
        .enumerate()
        .map(|(d, v)| vec![format!("n_-{}", d + 1), v.to_string()])
        .collect();
    rows.push(vec!["n_0".into(), dims.dim_n0.to_string()]);
    let mut footer = vec![format!("generated by degree -1: {generated}")];
    if let Some(cf) = &closed_form {
        footer.push(format!(
            "closed form: published {}, corrected {}",
            tuple(&cf.paper_stated),
            tuple(&cf.corrected)
        ));
    }
    let section = Section {
        title: Some(format!("{ty} {sigma}, k = {}", cli.k)),
        headers: vec!["piece", "dim"],
        rows,
        footer,
    };
    Ok(Output {
        envelope: OutputEnvelope {
            command: "dims".into(),
            inputs: Inputs {
                ty: Some(ty.to_string()),
                sigma: Some(sigma.to_string()),
                k: Some(cli.k),
                ..Inputs::default()
            },
            results: results(
                cli,
                &DimsResult {
                    dims,
                    generated,
                    closed_form,
                },
            )?,
            errata,
        },
        sections: vec![section],
    })
}

#[derive(Serialize)]
struct LeviResult {
    levi: ReductiveDescription,
    label: String,
}

fn levi(cli: &Cli, ty: &str) -> CliResult<Output> {
    let ty = parse_type(ty)?;
    let sigma = require_sigma(cli, ty)?;
    let levi = levi_structure(ty, &sigma)?;
    let errata = paper_levi(ty, &sigma)
        .into_iter()
        .filter(|(_, d)| *d != levi)
        .map(|(case, d)| Erratum {
            location: format!("levi {ty} {sigma} ({case})"),
            paper_value: d.label(),
            computed_value: levi.label(),
            note: "published reductive part disagrees with node deletion".into(),
        })
        .collect();
    let section = Section {
        title: Some(format!("reductive part of {ty} {sigma}")),
        headers: vec!["factor", "dim"],
        rows: std::iter::once(vec!["center".to_string(), levi.center_dim.to_string()])
            .chain(
                levi.factors
                    .iter()
                    .map(|f| vec![f.to_string(), f.dimension().to_string()]),
            )
            .collect(),
        footer: vec![format!("n0 = {} (dim {})", levi.label(), levi.total_dim)],
    };
    Ok(Output {
        envelope: OutputEnvelope {
            command: "levi".into(),
            inputs: Inputs {
                ty: Some(ty.to_string()),
                sigma: Some(sigma.to_string()),
                ..Inputs::default()
            },
            results: results(
                cli,
                &LeviResult {
                    label: levi.label(),
                    levi,
                },
            )?,
            errata,
        },
        sections: vec![section],
    })
}

fn reason_text(e: &ScanEntry) -> String {
    match &e.verdict.reason {
        Reason::DimsMatch => "dims match the free algebra".into(),
        Reason::DepthMismatch { witt } => {
            format!("free algebra dims {} vanish in the top degree", tuple(witt))
        }
        Reason::WittMismatch {
            degree,
            expected,
            actual,
        } => format!("degree -{degree}: free {expected}, grading {actual}"),
        Reason::CommutingPair { first, second } => format!("commuting pair {first} {second}"),
        Reason::NotGenerated => "degree -1 does not generate".into(),
    }
}

fn cubic_text(e: &ScanEntry) -> String {
    match &e.cubic_roots {
        None => "-".into(),
        Some(roots) => {
            let c = 3 * (e.ty.dimension() - e.dims.dim_n0);
            if roots.is_empty() {
                format!("2r^3+3r^2+r={c}: none")
            } else {
                format!("2r^3+3r^2+r={c}: r in {}", tuple(roots))
            }
        }
    }
}

fn entry_row(e: &ScanEntry) -> Vec<String> {
    vec![
        e.ty.to_string(),
        e.class.representative.to_string(),
        tuple(&e.dims.neg_dims),
        e.verdict.r.map(|r| r.to_string()).unwrap_or_default(),
        if e.verdict.free { "free" } else { "not free" }.to_string(),
        reason_text(e),
        e.commuting_pair
            .as_ref()
            .map(|(a, b)| format!("{a} {b}"))
            .unwrap_or_else(|| "-".into()),
        e.certificate
            .as_ref()
            .map(|c| {
                format!(
                    "E{}{} E{}{} {}",
                    c.x.0,
                    c.x.1,
                    c.y.0,
                    c.y.1,
                    if c.is_valid() { "ok" } else { "invalid" }
                )
            })
            .unwrap_or_else(|| "-".into()),
        cubic_text(e),
    ]
}

const ENTRY_HEADERS: [&str; 9] = [
    "type",
    "sigma",
    "neg_dims",
    "r",
    "verdict",
    "reason",
    "commuting_pair",
    "certificate",
    "cubic",
];

#[derive(Serialize)]
struct FreeResult<'a> {
    summary: String,
    entries: &'a [ScanEntry],
}

fn summary_of(entries: &[ScanEntry]) -> String {
    lie_gradings::ScanReport {
        k: 0,
        deduped: false,
        entries: entries.to_vec(),
    }
    .summary_line()
}

fn free(cli: &Cli, target: &str) -> CliResult<Output> {
    let ty = parse_type(target)?;
    check_k(cli.k)?;
    let entries = match &cli.sigma {
        Some(_) => {
            let sigma = require_sigma(cli, ty)?;
            vec![assess_sigma(&RootSystem::new(ty), &sigma, cli.k)?]
        }
        None => scan_type(ty, cli.k, cli.dedupe)?,
    };
    let summary = summary_of(&entries);
    let section = Section {
        title: Some(format!("freeness of |{}|-gradings of {ty}", cli.k)),
        headers: ENTRY_HEADERS.to_vec(),
        rows: entries.iter().map(entry_row).collect(),
        footer: vec![summary.clone()],
    };
    Ok(Output {
        envelope: OutputEnvelope {
            command: "free".into(),
            inputs: Inputs {
                ty: Some(ty.to_string()),
                sigma: cli.sigma.clone(),
                k: Some(cli.k),
                dedupe: Some(cli.dedupe),
                ..Inputs::default()
            },
            results: results(
                cli,
                &FreeResult {
                    summary,
                    entries: &entries,
                },
            )?,
            errata: vec![],
        },
        sections: vec![section],
    })
}

fn scan_cmd(cli: &Cli, command: &str) -> CliResult<Output> {
    check_k(cli.k)?;
    let families = parse_families(&cli.families)?;
    if cli.max_rank > MAX_RANK {
        return Err(CliError::Input(format!(
            "--max-rank must be at most {MAX_RANK}"
        )));
    }
    let types = SimpleLieType::all_up_to(&families, cli.max_rank);
    if types.is_empty() {
        return Err(CliError::Input("no types selected".into()));
    }
    let report = scan(&types, cli.k, true)?;
    let summary = report.summary_line();
    let section = Section {
        title: Some(format!(
            "freeness scan, k = {}, ranks <= {}, {} classes",
            cli.k,
            cli.max_rank,
            report.entries.len()
        )),
        headers: ENTRY_HEADERS.to_vec(),
        rows: report.entries.iter().map(entry_row).collect(),
        footer: vec![summary.clone()],
    };
    let letters: String = families.iter().map(|f| f.letter()).collect();
    Ok(Output {
        envelope: OutputEnvelope {
            command: command.into(),
            inputs: Inputs {
                k: Some(cli.k),
                families: Some(letters),
                max_rank: Some(cli.max_rank),
                ..Inputs::default()
            },
            results: results(
                cli,
                &FreeResult {
                    summary,
                    entries: &report.entries,
                },
            )?,
            errata: vec![],
        },
        sections: vec![section],
    })
}

fn tables(cli: &Cli) -> CliResult<Output> {
    if cli.max_rank > MAX_RANK {
        return Err(CliError::Input(format!(
            "--max-rank must be at most {MAX_RANK}"
        )));
    }
    let report = reproduce_tables(cli.max_rank)?;
    let sections = report
        .blocks
        .iter()
        .map(|b| Section {
            title: Some(format!("{}: {}", b.name, b.title)),
            headers: vec!["block", "key", "paper", "computed", "status"],
            rows: b
                .rows
                .iter()
                .map(|r| {
                    let status = to_value(&r.status)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default();
                    vec![
                        b.name.clone(),
                        r.key.clone(),
                        r.paper.clone(),
                        r.computed.clone(),
                        status,
                    ]
                })
                .collect(),
            footer: b.notes.clone(),
        })
        .collect();
    Ok(Output {
        envelope: OutputEnvelope {
            command: "tables".into(),
            inputs: Inputs {
                max_rank: Some(cli.max_rank),
                ..Inputs::default()
            },
            results: results(cli, &report.blocks)?,
            errata: report.errata,
        },
        sections,
    })
}
