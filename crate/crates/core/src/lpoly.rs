//! Laurent polynomials in the Lefschetz class `L` with big-integer
//! coefficients.
//!
//! Values are kept in a canonical dense form: a starting degree plus a
//! coefficient vector whose first and last entries are nonzero. The zero
//! polynomial is the empty vector with starting degree 0. Because every
//! constructor and operation re-normalizes, derived `PartialEq` is equality
//! of polynomials.
//!
//! The dimension filtration `A_m` is modelled as the span of `L^j` for
//! `j <= m`, so "congruent modulo `A_m`" means "equal in every degree above
//! `m`" (see [`LPoly::eq_mod`]).

use std::cmp::{max, min};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The Lefschetz class itself.
    pub fn lefschetz() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, degree: i64) -> Self {
        Self::from_coeffs(degree, vec![c.into()])
    }

    /// Builds `sum_i coeffs[i] L^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LPoly { low, coeffs };
        p.normalize();
        p
    }

    /// Small-integer convenience for tests and literals.
    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sums repeated degrees.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (deg, c) in terms {
            *acc.entry(deg).or_default() += c.into();
        }
        let Some((&low, _)) = acc.iter().next() else {
            return Self::zero();
        };
        let high = *acc.keys().next_back().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (deg, c) in acc {
            coeffs[(deg - low) as usize] = c;
        }
        Self::from_coeffs(low, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `L^j`, zero outside the support.
    pub fn coefficient(&self, j: i64) -> BigInt {
        self.coeff_ref(j).cloned().unwrap_or_default()
    }

    fn coeff_ref(&self, j: i64) -> Option<&BigInt> {
        let idx = j.checked_sub(self.low)?;
        usize::try_from(idx).ok().and_then(|i| self.coeffs.get(i))
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Specialization `L -> 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `L^s`.
    pub fn shift(&self, s: i64) -> LPoly {
        if self.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            low: self.low + s,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `self += L^s * other`, in place.
    pub fn add_shifted(&mut self, other: &LPoly, s: i64) {
        if other.is_zero() {
            return;
        }
        let other_low = other.low + s;
        if self.is_zero() {
            self.low = other_low;
            self.coeffs = other.coeffs.clone();
            return;
        }
        let other_high = other_low + other.coeffs.len() as i64 - 1;
        let new_low = min(self.low, other_low);
        let new_high = max(self.max_degree().unwrap(), other_high);
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_with(BigInt::zero).take(pad));
            self.low = new_low;
        }
        self.coeffs
            .resize((new_high - self.low + 1) as usize, BigInt::zero());
        let offset = (other_low - self.low) as usize;
        for (dst, c) in self.coeffs[offset..].iter_mut().zip(&other.coeffs) {
            *dst += c;
        }
        self.normalize();
    }

    /// True iff `self - other` vanishes in every degree strictly above `m`.
    pub fn eq_mod(&self, other: &LPoly, m: i64) -> bool {
        self.highest_difference(other).is_none_or(|deg| deg <= m)
    }

    /// Largest degree in which the two polynomials differ.
    pub fn highest_difference(&self, other: &LPoly) -> Option<i64> {
        let top = max(self.max_degree(), other.max_degree())?;
        let bottom = min(
            self.min_degree().unwrap_or(i64::MAX),
            other.min_degree().unwrap_or(i64::MAX),
        );
        let zero = BigInt::zero();
        (bottom..=top)
            .rev()
            .find(|&j| self.coeff_ref(j).unwrap_or(&zero) != other.coeff_ref(j).unwrap_or(&zero))
    }

    /// The part of `self` living in degrees strictly above `level`.
    pub fn above(&self, level: i64) -> LPoly {
        match self.max_degree() {
            Some(top) if top > level => {
                let start = max(level + 1, self.low);
                let skip = (start - self.low) as usize;
                LPoly::from_coeffs(start, self.coeffs[skip..].to_vec())
            }
            _ => LPoly::zero(),
        }
    }

    /// Poincaré-duality check: `self` is supported in `[low, high]` and
    /// `coefficient(low + j) == coefficient(high - j)` for all `j`.
    pub fn is_palindromic(&self, low: i64, high: i64) -> bool {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return true;
        };
        if lo < low || hi > high {
            return false;
        }
        (0..=(high - low) / 2).all(|j| self.coefficient(low + j) == self.coefficient(high - j))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &LPoly {
    type Output = LPoly;

    fn add(self, rhs: &LPoly) -> LPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0);
        out
    }
}

impl Add for LPoly {
    type Output = LPoly;

    fn add(mut self, rhs: LPoly) -> LPoly {
        self.add_shifted(&rhs, 0);
        self
    }
}

impl AddAssign<&LPoly> for LPoly {
    fn add_assign(&mut self, rhs: &LPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl Neg for &LPoly {
    type Output = LPoly;

    fn neg(self) -> LPoly {
        LPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LPoly {
    type Output = LPoly;

    fn neg(self) -> LPoly {
        -&self
    }
}

impl Sub for &LPoly {
    type Output = LPoly;

    fn sub(self, rhs: &LPoly) -> LPoly {
        let mut out = self.clone();
        out.add_shifted(&-rhs, 0);
        out
    }
}

impl Sub for LPoly {
    type Output = LPoly;

    fn sub(self, rhs: LPoly) -> LPoly {
        &self - &rhs
    }
}

impl Mul for &LPoly {
    type Output = LPoly;

    fn mul(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Mul for LPoly {
    type Output = LPoly;

    fn mul(self, rhs: LPoly) -> LPoly {
        &self * &rhs
    }
}

impl From<i64> for LPoly {
    fn from(c: i64) -> Self {
        LPoly::monomial(c, 0)
    }
}

/// Low degree first, e.g. `1 + 2L + 3L^2 - L^-1`.
impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (deg, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.is_one();
            match deg {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}")?;
                    }
                    f.write_str("L")?;
                    if deg != 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LPoly({self})")
    }
}

/// JSON form: `{"degree": "coefficient"}`, keys in ascending numeric degree,
/// coefficients as decimal strings.
impl Serialize for LPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms().count()))?;
        for (deg, c) in self.terms() {
            map.serialize_entry(&deg.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LPolyVisitor;

        impl<'de> Visitor<'de> for LPolyVisitor {
            type Value = LPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from decimal degree to decimal coefficient string")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<LPoly, A::Error> {
                let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
                while let Some((key, value)) = access.next_entry::<String, String>()? {
                    let deg: i64 = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad degree {key:?}")))?;
                    let c: BigInt = value
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {value:?}")))?;
                    if terms.insert(deg, c).is_some() {
                        return Err(de::Error::custom(format!("duplicate degree {deg}")));
                    }
                }
                Ok(LPoly::from_terms(terms))
            }
        }

        deserializer.deserialize_map(LPolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(low: i64, c: &[i64]) -> LPoly {
        LPoly::from_i64s(low, c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(0, &[1, 1]) + &p(1, &[1, 1]), p(0, &[1, 2, 1]));
        let q = p(-2, &[3, 0, 5]);
        assert_eq!(&q + &LPoly::zero(), q);
        let cancel = &p(-1, &[1]) + &p(-1, &[-1]);
        assert!(cancel.is_zero());
        assert_eq!(cancel, LPoly::zero());
        assert_eq!(cancel.min_degree(), None);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(0, &[1, 1]) * &p(0, &[1, 1]), p(0, &[1, 2, 1]));
        let q = p(-1, &[2, 0, 7]);
        assert_eq!(&q * &LPoly::one(), q);
        assert_eq!(
            &p(0, &[1, 1, 1]) * &p(1, &[1, 1, 1]),
            p(1, &[1, 2, 3, 2, 1])
        );
    }

    #[test]
    fn mul_matches_naive_convolution() {
        // Independent check: accumulate every pairwise product through a map.
        let a = p(-2, &[4, -1, 0, 3]);
        let b = p(3, &[2, 5, -6]);
        let naive = LPoly::from_terms(
            a.terms()
                .flat_map(|(i, x)| b.terms().map(move |(j, y)| (i + j, x * y))),
        );
        assert_eq!(&a * &b, naive);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(0, &[1, 1]).shift(3), p(3, &[1, 1]));
        let q = p(2, &[1, 4]);
        assert_eq!(q.shift(0), q);
        assert_eq!(p(2, &[1]).shift(-5), p(-3, &[1]));
        assert!(LPoly::zero().shift(9).is_zero());
    }

    #[test]
    fn eq_mod_examples() {
        let a = LPoly::from_terms([(3, 1), (2, 5)]);
        let b = LPoly::from_terms([(3, 1), (1, 7), (0, 1)]);
        assert!(a.eq_mod(&b, 2));
        assert!(!p(3, &[1]).eq_mod(&p(3, &[2]), 2));
        for m in -5..5 {
            assert!(a.eq_mod(&a, m));
        }
        assert_eq!(a.highest_difference(&b), Some(2));
        assert_eq!(a.highest_difference(&a), None);
    }

    #[test]
    fn coefficient_and_evaluation() {
        let q = p(0, &[1, 2]);
        assert_eq!(q.coefficient(1), BigInt::from(2));
        assert_eq!(q.coefficient(5), BigInt::zero());
        assert_eq!(q.coefficient(-5), BigInt::zero());
        assert_eq!(p(0, &[1, 2, 3, 2, 1]).eval_at_one(), BigInt::from(9));
        assert_eq!(LPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(p(0, &[1, 1, 1]).eval_at_one(), BigInt::from(3));
    }

    #[test]
    fn palindromes() {
        assert!(p(0, &[1, 2, 3, 2, 1]).is_palindromic(0, 4));
        assert!(!p(0, &[1, 2]).is_palindromic(0, 1));
        assert!(!p(0, &[1, 2, 1]).is_palindromic(0, 1));
        assert!(p(1, &[1, 1]).is_palindromic(0, 3));
        assert!(!p(1, &[1, 1]).is_palindromic(0, 4));
    }

    #[test]
    fn above_truncates_at_level() {
        let q = p(-1, &[1, 2, 3, 4]);
        assert_eq!(q.above(0), p(1, &[3, 4]));
        assert_eq!(q.above(-10), q);
        assert!(q.above(2).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[1, 1, 1]).to_string(), "1 + L + L^2");
        assert_eq!(p(-1, &[-1, 0, -2, 3]).to_string(), "-L^-1 - 2L + 3L^2");
        assert_eq!(LPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let q = p(-1, &[5, 0, 2]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"-1":"5","1":"2"}"#);
        let big: LPoly =
            serde_json::from_str(r#"{"12":"123456789012345678901234567890"}"#).unwrap();
        assert_eq!(
            big.coefficient(12).to_string(),
            "123456789012345678901234567890"
        );
        assert!(serde_json::from_str::<LPoly>(r#"{"x":"1"}"#).is_err());
        assert!(serde_json::from_str::<LPoly>(r#"{"1":"one"}"#).is_err());
        assert!(serde_json::from_str::<LPoly>(r#"{"1":"1","1":"2"}"#).is_err());
        // Explicit zeros are accepted and dropped.
        let z: LPoly = serde_json::from_str(r#"{"3":"0"}"#).unwrap();
        assert!(z.is_zero());
    }

    fn arb_lpoly() -> impl Strategy<Value = LPoly> {
        (-6i64..6, prop::collection::vec(-20i64..20, 0..8))
            .prop_map(|(low, c)| LPoly::from_i64s(low, &c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_lpoly(), b in arb_lpoly(), c in arb_lpoly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn shift_is_multiplication_by_power(a in arb_lpoly(), s in -10i64..=10) {
            prop_assert_eq!(a.shift(s), &a * &LPoly::monomial(1, s));
        }

        #[test]
        fn eq_mod_is_upward_closed(a in arb_lpoly(), b in arb_lpoly(), m in -8i64..8, extra in 0i64..6) {
            if a.eq_mod(&b, m) {
                prop_assert!(a.eq_mod(&b, m + extra));
            }
            prop_assert_eq!(a.eq_mod(&b, m), b.eq_mod(&a, m));
        }

        #[test]
        fn eq_mod_is_transitive(a in arb_lpoly(), b in arb_lpoly(), c in arb_lpoly(), m in -8i64..8) {
            if a.eq_mod(&b, m) && b.eq_mod(&c, m) {
                prop_assert!(a.eq_mod(&c, m));
            }
        }

        #[test]
        fn coefficient_is_additive_and_eval_is_multiplicative(a in arb_lpoly(), b in arb_lpoly(), j in -8i64..16) {
            prop_assert_eq!((&a + &b).coefficient(j), a.coefficient(j) + b.coefficient(j));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
        }

        #[test]
        fn json_round_trip(a in arb_lpoly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: LPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
            prop_assert_eq!(back, a);
        }
    }
}
