//! Euler characteristic of `Hilb^n(P^2)` by counting torus fixed points.
//!
//! Fixed points are triples of monomial ideals, one per affine chart, so
//! their number is the count of ordered partition triples of total size
//! `n`. This module deliberately uses only integer partition counts and
//! never touches [`crate::qseries`] or [`crate::lpoly`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `p(0), ..., p(max_n)` via Euler's pentagonal recurrence.
pub fn partition_counts(max_n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); max_n + 1];
    p[0] = BigInt::one();
    for i in 1..=max_n {
        let mut sum = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[i - g1].clone();
            if g2 <= i {
                term += &p[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        p[i] = sum;
    }
    p
}

/// Number of ordered triples of partitions with total size `n`.
pub fn euler_oracle(n: i64) -> Result<BigInt> {
    let n = usize::try_from(n).map_err(|_| Error::NegativePoints(n))?;
    let p = partition_counts(n);
    let pairs: Vec<BigInt> = (0..=n)
        .map(|m| (0..=m).map(|a| &p[a] * &p[m - a]).sum())
        .collect();
    Ok((0..=n).map(|a| &p[a] * &pairs[n - a]).sum())
}
