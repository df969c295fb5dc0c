//! Möbius function and graded dimensions of free nilpotent Lie algebras.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `μ(n)`: 0 if a square divides `n`, otherwise `(-1)^(number of prime factors)`.
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "the Möbius function is defined for n ≥ 1".into(),
        ));
    }
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Degree dimensions of the free nilpotent Lie algebra on `r` generators of step `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittDims {
    pub r: u64,
    pub k: u32,
    /// `dim f_{-1}, ..., dim f_{-k}`.
    pub dims: Vec<u128>,
}

/// Witt's formula `dim f_{-n} = (1/n) Σ_{d | n} μ(d) r^{n/d}`, evaluated exactly.
pub fn witt_dimensions(r: u64, k: u32) -> Result<WittDims> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidParameters(format!(
            "Witt dimensions need r ≥ 1 and k ≥ 1 (got r = {r}, k = {k})"
        )));
    }
    let dims = (1..=u64::from(k))
        .map(|n| {
            let mut total: i128 = 0;
            for d in (1..=n).filter(|d| n % d == 0) {
                let mu = i128::from(mobius(d)?);
                if mu == 0 {
                    continue;
                }
                let power = i128::from(r)
                    .checked_pow((n / d) as u32)
                    .ok_or(Error::Overflow("Witt formula"))?;
                total = total
                    .checked_add(mu * power)
                    .ok_or(Error::Overflow("Witt formula"))?;
            }
            let n = i128::from(n);
            debug_assert_eq!(total % n, 0);
            Ok((total / n) as u128)
        })
        .collect::<Result<Vec<u128>>>()?;
    Ok(WittDims { r, k, dims })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (n, &mu) in (1..=12).zip(&expected) {
            assert_eq!(mobius(n).unwrap(), mu, "μ({n})");
        }
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(mobius(49).unwrap(), 0);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_dimensions(2, 3).unwrap().dims, vec![2, 1, 2]);
        assert_eq!(witt_dimensions(1, 3).unwrap().dims, vec![1, 0, 0]);
        assert_eq!(witt_dimensions(3, 3).unwrap().dims, vec![3, 3, 8]);
        assert_eq!(witt_dimensions(2, 6).unwrap().dims, vec![2, 1, 2, 3, 6, 9]);
        assert!(witt_dimensions(0, 3).is_err());
        assert!(witt_dimensions(3, 0).is_err());
    }

    #[test]
    fn witt_overflow_is_reported() {
        assert_eq!(
            witt_dimensions(u64::MAX, 4),
            Err(Error::Overflow("Witt formula"))
        );
    }
}
