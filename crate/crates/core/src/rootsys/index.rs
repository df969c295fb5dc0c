//! Membership index for positive roots.
//!
//! Each coefficient vector gets an additive 64-bit fingerprint `Σ w_i c_i`
//! (wrapping), so the fingerprint of a sum or difference of roots is the sum or
//! difference of fingerprints. A fingerprint hit is always confirmed against the
//! stored coefficients, so lookups are exact.

use rustc_hash::FxHashMap;

use super::Root;

pub(crate) struct RootIndex {
    weights: Vec<u64>,
    fingerprints: Vec<u64>,
    by_fingerprint: FxHashMap<u64, u32>,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fingerprint(weights: &[u64], coeffs: &[i32]) -> u64 {
    weights.iter().zip(coeffs).fold(0u64, |acc, (&w, &c)| {
        acc.wrapping_add(w.wrapping_mul(c as i64 as u64))
    })
}

impl RootIndex {
    pub(crate) fn new(roots: &[Root]) -> Self {
        let rank = roots.first().map_or(0, Root::rank);
        let mut seed = 0x5eed_u64;
        loop {
            let weights: Vec<u64> = (0..rank).map(|_| splitmix64(&mut seed)).collect();
            let fingerprints: Vec<u64> = roots
                .iter()
                .map(|r| fingerprint(&weights, r.coeffs()))
                .collect();
            let mut by_fingerprint = FxHashMap::default();
            by_fingerprint.reserve(roots.len());
            let injective = fingerprints
                .iter()
                .enumerate()
                .all(|(i, &fp)| by_fingerprint.insert(fp, i as u32).is_none());
            if injective {
                return RootIndex {
                    weights,
                    fingerprints,
                    by_fingerprint,
                };
            }
        }
    }

    pub(crate) fn find(&self, roots: &[Root], coeffs: &[i32]) -> Option<usize> {
        let fp = fingerprint(&self.weights, coeffs);
        self.by_fingerprint
            .get(&fp)
            .map(|&i| i as usize)
            .filter(|&i| roots[i].coeffs() == coeffs)
    }

    /// Position of `roots[a] + roots[b]`, if that sum is a positive root.
    pub(crate) fn sum_position(&self, roots: &[Root], a: usize, b: usize) -> Option<usize> {
        let fp = self.fingerprints[a].wrapping_add(self.fingerprints[b]);
        let c = *self.by_fingerprint.get(&fp)? as usize;
        let (ra, rb, rc) = (roots[a].coeffs(), roots[b].coeffs(), roots[c].coeffs());
        (0..rc.len()).all(|k| ra[k] + rb[k] == rc[k]).then_some(c)
    }
}
