//! Exhaustive freeness scan over types and grading classes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeness::{
    an_matrix_certificate, commuting_pair_with, cubic_filter, freeness_check, AnCertificate,
    FreenessVerdict,
};
use crate::grading::{
    closed_form_dims, dedupe_sigmas, dims_from_heights, enumerate_sigmas, generated_by_degree_one,
    root_heights, singleton_classes, GradingDims, Sigma, SigmaClass,
};
use crate::levi::{levi_in, ReductiveDescription};
use crate::rootsys::{Family, Root, RootSystem, SimpleLieType};

/// Everything computed for one grading class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    #[serde(rename = "type")]
    pub ty: SimpleLieType,
    pub class: SigmaClass,
    pub dims: GradingDims,
    pub levi: ReductiveDescription,
    pub generated: bool,
    pub commuting_pair: Option<(Root, Root)>,
    pub verdict: FreenessVerdict,
    /// Integer roots of the cubic dimension count (step 3 only).
    pub cubic_roots: Option<Vec<u64>>,
    /// Matrix certificate for `A_n` |3|-gradings.
    pub certificate: Option<AnCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub k: u32,
    pub deduped: bool,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn free_entries(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.verdict.free)
    }

    /// E.g. `free: 1 (G2 {1} r=2)`.
    pub fn summary_line(&self) -> String {
        let free: Vec<String> = self
            .free_entries()
            .map(|e| {
                let r = e.verdict.r.map(|r| format!(" r={r}")).unwrap_or_default();
                format!("{} {}{r}", e.ty, e.class.representative)
            })
            .collect();
        if free.is_empty() {
            "free: 0".to_string()
        } else {
            format!("free: {} ({})", free.len(), free.join(", "))
        }
    }
}

/// Analyses one grading class, cross-checking the modules against each other.
pub fn assess(rs: &RootSystem, class: SigmaClass, k: u32) -> Result<ScanEntry> {
    let ty = rs.simple_lie_type();
    let sigma = &class.representative;
    let heights = root_heights(rs, sigma);
    let dims = dims_from_heights(rs, sigma, k, &heights)?;
    let generated = generated_by_degree_one(rs, &heights, k);
    // n_-1 is abelian when k = 1, so commuting vectors are no obstruction there.
    let commuting_pair = if k >= 2 {
        commuting_pair_with(rs, &heights)
    } else {
        None
    };
    let verdict = freeness_check(&dims, generated)?;
    let levi = levi_in(rs.diagram(), sigma)?;

    let inconsistent = |what: &str| Err(Error::Inconsistency(format!("{ty} {sigma}: {what}")));
    if dims.total_dimension() != ty.dimension() {
        return inconsistent("graded pieces do not add up to the algebra");
    }
    if levi.total_dim != dims.dim_n0 {
        return inconsistent("Levi dimension differs from the root count");
    }
    if verdict.free && commuting_pair.is_some() {
        return inconsistent("free verdict despite a commuting pair");
    }
    if k == 3 && ty.family().is_classical() {
        let cf = closed_form_dims(ty, sigma)?;
        if cf.corrected.as_slice() != dims.neg_dims.as_slice() {
            return inconsistent("corrected closed form differs from the root count");
        }
    }

    let cubic_roots = if k == 3 {
        Some(cubic_filter(ty.dimension(), dims.dim_n0)?)
    } else {
        None
    };
    if let (true, Some(roots), Some(r)) = (verdict.free, &cubic_roots, verdict.r) {
        if !roots.contains(&r) {
            return inconsistent("free verdict fails the cubic count");
        }
    }
    let certificate = match (ty.family(), k, sigma.indices()) {
        (Family::A, 3, &[i, j, l]) => Some(an_matrix_certificate(ty.rank(), i, j, l)?),
        _ => None,
    };

    Ok(ScanEntry {
        ty,
        class,
        dims,
        levi,
        generated,
        commuting_pair,
        verdict,
        cubic_roots,
        certificate,
    })
}

/// Assesses a single Σ (no orbit bookkeeping).
pub fn assess_sigma(rs: &RootSystem, sigma: &Sigma, k: u32) -> Result<ScanEntry> {
    let class = singleton_classes(std::slice::from_ref(sigma)).remove(0);
    assess(rs, class, k)
}

/// All grading classes of one type.
pub fn scan_type(ty: SimpleLieType, k: u32, dedupe: bool) -> Result<Vec<ScanEntry>> {
    let rs = RootSystem::new(ty);
    let sigmas = enumerate_sigmas(&rs, k);
    let classes = if dedupe {
        dedupe_sigmas(&rs, &sigmas)
    } else {
        singleton_classes(&sigmas)
    };
    classes.into_par_iter().map(|c| assess(&rs, c, k)).collect()
}

/// Scans every type in `types`, preserving input order.
pub fn scan(types: &[SimpleLieType], k: u32, dedupe: bool) -> Result<ScanReport> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let per_type: Vec<Vec<ScanEntry>> = types
        .par_iter()
        .map(|&ty| scan_type(ty, k, dedupe))
        .collect::<Result<_>>()?;
    Ok(ScanReport {
        k,
        deduped: dedupe,
        entries: per_type.into_iter().flatten().collect(),
    })
}
