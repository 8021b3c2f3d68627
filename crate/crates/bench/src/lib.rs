//! Shared workloads for the criterion benches.

use hilbtail_core::hilb::plane_factors;
use hilbtail_core::{LPoly, QSeries};

/// Truncation orders the expansion benches sweep over.
pub const ORDERS: [usize; 4] = [10, 25, 50, 100];

/// The plane product folded through full Cauchy products, the slow path the
/// in-place recurrence replaces.
pub fn cauchy_expansion(order: usize) -> Vec<LPoly> {
    plane_factors(order)
        .into_iter()
        .fold(QSeries::one(order), |acc, (a, k)| {
            let g = QSeries::geometric_factor(a, k, order).expect("positive step");
            acc.mul_series(&g).expect("same order")
        })
        .into_coeffs()
}
