//! Motivic classes of the Hilbert schemes of points `Hilb^n(P^2)`.
//!
//! The classes come from the product formula for a surface whose class is
//! `1 + L + L^2`:
//!
//! ```text
//! sum_n [Hilb^n(P^2)] q^n = prod_{k >= 1} 1 / ((1 - L^{k-1} q^k)(1 - L^k q^k)(1 - L^{k+1} q^k))
//! ```
//!
//! This identity is external input (Göttsche's formula, in Kapranov's
//! motivic form); nothing here derives it. [`euler`] provides an independent
//! fixed-point count used to validate the expansion.

mod cache;
pub mod euler;

pub use cache::{HilbCache, HilbStore, CACHE_VERSION};
pub use euler::{euler_oracle, partition_counts};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lpoly::LPoly;
use crate::qseries::QSeries;

/// Factors `(a, k)` of the plane product with `k <= order`.
pub fn plane_factors(order: usize) -> Vec<(i64, i64)> {
    (1..=order as i64)
        .flat_map(|k| [(k - 1, k), (k, k), (k + 1, k)])
        .collect()
}

/// `[Hilb^n(P^2)]` for every `n <= max_n`, from one expansion.
pub fn hilb_classes(max_n: usize) -> Vec<LPoly> {
    QSeries::product(&plane_factors(max_n), max_n)
        .expect("plane factors have positive q-exponents")
        .into_coeffs()
}

pub fn hilb_class(n: i64) -> Result<LPoly> {
    let n = usize::try_from(n).map_err(|_| Error::NegativePoints(n))?;
    Ok(hilb_classes(n).swap_remove(n))
}

/// `b_i(Hilb^n(P^2))` read off a precomputed class. Odd and out-of-range
/// indices give zero.
pub fn betti_from_class(class: &LPoly, i: i64) -> BigInt {
    if i % 2 != 0 {
        return BigInt::zero();
    }
    class.coefficient(i / 2)
}

pub fn betti_hilb(n: i64, i: i64) -> Result<BigInt> {
    Ok(betti_from_class(&hilb_class(n)?, i))
}
