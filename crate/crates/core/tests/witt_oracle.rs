//! Witt dimensions against a brute-force Lyndon-word count.

use lie_gradings::{mobius, witt_dimensions};

/// Lyndon words of length `n` over `r` letters: strictly smaller than every
/// proper rotation.
fn lyndon_count(r: u64, n: u32) -> u128 {
    let total = r.pow(n);
    let mut count = 0;
    for code in 0..total {
        let mut w = Vec::with_capacity(n as usize);
        let mut c = code;
        for _ in 0..n {
            w.push(c % r);
            c /= r;
        }
        let n = w.len();
        let lyndon = (1..n).all(|s| {
            let rot: Vec<u64> = w[s..].iter().chain(&w[..s]).copied().collect();
            w < rot
        });
        if lyndon {
            count += 1;
        }
    }
    count
}

#[test]
fn matches_lyndon_count() {
    for r in 1..=4u64 {
        let witt = witt_dimensions(r, 5).unwrap();
        for n in 1..=5u32 {
            assert_eq!(witt.dims[n as usize - 1], lyndon_count(r, n), "r={r} n={n}");
        }
    }
}

#[test]
fn cubic_specialization() {
    for r in 1..=100u64 {
        let d = witt_dimensions(r, 3).unwrap().dims;
        let r = r as u128;
        assert_eq!(d, vec![r, (r * r - r) / 2, (r * r * r - r) / 3]);
        assert_eq!((r * r - r) % 2, 0);
        assert_eq!((r * r * r - r) % 3, 0);
    }
}

#[test]
fn mobius_small_values() {
    let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
    for (n, &m) in (1..=12u64).zip(&expected) {
        assert_eq!(mobius(n).unwrap(), m, "mu({n})");
    }
    assert!(mobius(0).is_err());
}

#[test]
fn zero_generators_give_zero() {
    assert!(witt_dimensions(0, 3)
        .map(|w| w.dims.iter().all(|&d| d == 0))
        .unwrap_or(true));
}
