//! Exact enumeration of |k|-gradings of complex simple Lie algebras.
//!
//! Simple roots use Bourbaki numbering (1-based) everywhere. A grading is a
//! nonempty subset Σ of simple-root indices; a root's degree is the sum of its
//! coefficients over Σ, and Σ gives a |k|-grading when the highest root has
//! degree `k`.
//!
//! * [`rootsys`]: root systems, Dynkin diagrams, diagram automorphisms.
//! * [`grading`]: subsets Σ, graded dimensions, closed forms, orbit dedupe.
//! * [`levi`]: the reductive degree-zero part.
//! * [`freeness`]: Witt dimensions and the non-freeness obstructions.
//! * [`scan`]: exhaustive per-type analysis.
//! * [`tables`]: published reference data and errata.

pub mod error;
pub mod freeness;
pub mod grading;
pub mod levi;
pub mod rootsys;
pub mod scan;
pub mod tables;

pub use error::{Error, Result};
pub use freeness::{
    an_matrix_certificate, commuting_pair, cubic_filter, diophantine_witness, freeness_check,
    mobius, verdict_from_dims, witt_dimensions, AnCertificate, DiophantineCase, DiophantineReport,
    FreenessVerdict, Reason, WittDims,
};
pub use grading::{
    closed_form_dims, dedupe_sigmas, enumerate_sigmas, generation_check, graded_dimensions,
    ClosedFormDims, GradingDims, Sigma, SigmaClass,
};
pub use levi::{classify_component, levi_structure, reductive_dimension, ReductiveDescription};
pub use rootsys::{
    build_root_system, diagram_automorphisms, dynkin_diagram, sigma_height, DynkinDiagram, Family,
    NodePermutation, Root, RootSystem, SimpleLieType,
};
pub use scan::{assess, assess_sigma, scan, scan_type, ScanEntry, ScanReport};
pub use tables::{
    dims_errata, reproduce_tables, Erratum, RowStatus, TableBlock, TableRow, TablesReport,
};
