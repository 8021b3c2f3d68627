//! Power series in `q` with [`LPoly`] coefficients, truncated at a fixed
//! order.

use crate::error::{Error, Result};
use crate::lpoly::LPoly;

/// Coefficients of `q^0 ..= q^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<LPoly>,
}

impl QSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![LPoly::zero(); order + 1];
        coeffs[0] = LPoly::one();
        QSeries { coeffs }
    }

    /// Pads with zeros or drops terms past `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<LPoly>) -> Self {
        coeffs.resize(order + 1, LPoly::zero());
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`; `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&LPoly> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[LPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LPoly> {
        self.coeffs
    }

    /// Truncated Cauchy product.
    pub fn mul_series(&self, other: &QSeries) -> Result<QSeries> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let order = self.order();
        let mut out = vec![LPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(QSeries { coeffs: out })
    }

    /// Expansion of `1 / (1 - L^a q^k)`.
    pub fn geometric_factor(a: i64, k: i64, order: usize) -> Result<QSeries> {
        if k <= 0 {
            return Err(Error::NonPositiveStep(k));
        }
        let mut coeffs = vec![LPoly::zero(); order + 1];
        for (m, slot) in coeffs.iter_mut().step_by(k as usize).enumerate() {
            *slot = LPoly::monomial(1, a * m as i64);
        }
        Ok(QSeries { coeffs })
    }

    /// Multiplies in place by `1 / (1 - L^a q^k)` using the recurrence
    /// `t[n] = s[n] + L^a t[n-k]`.
    pub fn mul_geometric(&mut self, a: i64, k: i64) -> Result<()> {
        if k <= 0 {
            return Err(Error::NonPositiveStep(k));
        }
        let k = usize::try_from(k).unwrap_or(usize::MAX);
        if k > self.order() {
            return Ok(());
        }
        for n in k..self.coeffs.len() {
            let (done, rest) = self.coeffs.split_at_mut(n);
            rest[0].add_shifted(&done[n - k], a);
        }
        Ok(())
    }

    /// Truncated product of `1 / (1 - L^a q^k)` over `factors`, folded in
    /// ascending `k` then ascending `a`. Factors with `k > order` are skipped.
    pub fn product(factors: &[(i64, i64)], order: usize) -> Result<QSeries> {
        if let Some(&(_, k)) = factors.iter().find(|&&(_, k)| k <= 0) {
            return Err(Error::NonPositiveStep(k));
        }
        let mut sorted = factors.to_vec();
        sorted.sort_by_key(|&(a, k)| (k, a));
        let mut acc = QSeries::one(order);
        for (a, k) in sorted {
            acc.mul_geometric(a, k)?;
        }
        Ok(acc)
    }
}
