//! Shared fixtures for the criterion benchmarks in `benches/`.

use lie_gradings::{Family, SimpleLieType};

/// Every type of rank at most `max_rank`, as scanned by the CLI.
pub fn scan_types(max_rank: usize) -> Vec<SimpleLieType> {
    SimpleLieType::all_up_to(&Family::ALL, max_rank)
}

pub fn ty(s: &str) -> SimpleLieType {
    s.parse().expect("benchmark types are valid")
}
