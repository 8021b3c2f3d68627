//! Stable-range invariants of the moduli spaces `M(d, chi)` of
//! one-dimensional semistable sheaves on `P^2`.
//!
//! For `chi0` the representative of `+-chi mod d` in `[-3d/2, -d]` and
//! `dbar = d(d-3)/2 - chi0`, the class of `M(d, chi)` agrees with
//! `L^(3d+1+2 chi0) [Hilb^dbar(P^2)]` in every `L`-degree above
//! `d^2 - rho_d + 1`. Everything here is arithmetic on top of that
//! congruence; the depth `rho_d` is taken as given.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::decimal;
use crate::error::{Error, Result};
use crate::hilb::HilbStore;
use crate::lpoly::LPoly;

/// Trial division; `d` is always tiny here.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

/// Congruence depth: `d - 1` when `d` is a prime or twice a prime, else 7.
pub fn rho(d: i64) -> i64 {
    if is_prime(d) || (d % 2 == 0 && is_prime(d / 2)) {
        d - 1
    } else {
        7
    }
}

/// Range in which `chi0` is searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    /// `[ceil(-3d/2), -d]`, where the representative is unique.
    Strict,
    /// `[-2d-1, -d+1]`, where the congruence still holds.
    Extended,
}

impl Window {
    pub fn bounds(self, d: i64) -> RangeInclusive<i64> {
        match self {
            Window::Strict => -(3 * d).div_euclid(2)..=-d,
            Window::Extended => -2 * d - 1..=-d + 1,
        }
    }
}

fn check_degree(d: i64) -> Result<()> {
    if d < 1 {
        return Err(Error::NonPositiveDegree(d));
    }
    Ok(())
}

/// Values `x` in the window with `x = chi` or `x = -chi` mod `d`, ascending.
pub fn chi0_candidates(d: i64, chi: i64, window: Window) -> Result<Vec<i64>> {
    check_degree(d)?;
    Ok(window
        .bounds(d)
        .filter(|x| (x - chi).rem_euclid(d) == 0 || (x + chi).rem_euclid(d) == 0)
        .collect())
}

/// The unique representative of `+-chi mod d` in `[ceil(-3d/2), -d]`.
pub fn chi0(d: i64, chi: i64) -> Result<i64> {
    let found = chi0_candidates(d, chi, Window::Strict)?;
    match found[..] {
        [x] => Ok(x),
        _ => {
            let bounds = Window::Strict.bounds(d);
            Err(Error::UniquenessViolated {
                d,
                chi,
                low: *bounds.start(),
                high: *bounds.end(),
                count: found.len(),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuliParams {
    pub d: i64,
    pub chi: i64,
    pub chi0: i64,
    pub rho: i64,
    /// Number of points of the matching Hilbert scheme.
    pub dbar: i64,
    /// Exponent of the `L` power multiplying the Hilbert-scheme class.
    pub shift: i64,
    /// `dim M(d, chi) = d^2 + 1`.
    pub dim: i64,
    /// Nothing is asserted in `L`-degrees at or below this.
    pub level_scheme: i64,
    /// Lowest Betti index determined by the congruence.
    pub stable_threshold: i64,
    pub coprime: bool,
}

pub fn params(d: i64, chi: i64) -> Result<ModuliParams> {
    let chi0 = chi0(d, chi)?;
    let rho = rho(d);
    let dim = d * d + 1;
    Ok(ModuliParams {
        d,
        chi,
        chi0,
        rho,
        dbar: d * (d - 3) / 2 - chi0,
        shift: 3 * d + 1 + 2 * chi0,
        dim,
        level_scheme: d * d - rho + 1,
        stable_threshold: 1 + 2 * (dim - rho),
        coprime: d.gcd(&chi) == 1,
    })
}

impl ModuliParams {
    /// True when the congruence determines nothing. This covers
    /// `level_scheme >= dim`, and also `d = 1`, where `rho_1 = 7` exceeds
    /// `d - 1` and the estimates behind the congruence do not apply.
    pub fn is_vacuous(&self) -> bool {
        self.rho > self.d - 1 || self.level_scheme >= self.dim
    }

    /// `L`-degrees in which the class of `M(d, chi)` is determined.
    pub fn determined_degrees(&self) -> Option<RangeInclusive<i64>> {
        (!self.is_vacuous()).then(|| self.level_scheme + 1..=self.dim)
    }

    pub fn gcd(&self) -> i64 {
        self.d.gcd(&self.chi)
    }
}

fn vacuous_warning(p: &ModuliParams) -> String {
    format!(
        "vacuous range: rho_{} = {} leaves no determined degrees for dim {}",
        p.d, p.rho, p.dim
    )
}

fn semistable_warning(p: &ModuliParams) -> String {
    format!(
        "semistable_only: gcd({}, {}) = {}; the tail describes the semistable moduli space, \
         which need not be smooth",
        p.d,
        p.chi,
        p.gcd()
    )
}

/// Determined top part of `[M(d, chi)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MotivicTail {
    pub params: ModuliParams,
    pub level: i64,
    /// Supported strictly above `level`.
    pub tail: LPoly,
    pub semistable_only: bool,
    pub vacuous: bool,
}

impl MotivicTail {
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.vacuous {
            out.push(vacuous_warning(&self.params));
        }
        if self.semistable_only {
            out.push(semistable_warning(&self.params));
        }
        out
    }
}

pub fn motivic_tail(d: i64, chi: i64, store: &HilbStore) -> Result<MotivicTail> {
    let params = params(d, chi)?;
    let vacuous = params.is_vacuous();
    let tail = if vacuous {
        LPoly::zero()
    } else {
        store
            .class(params.dbar as usize)?
            .shift(params.shift)
            .above(params.level_scheme)
    };
    Ok(MotivicTail {
        level: params.level_scheme,
        semistable_only: !params.coprime,
        vacuous,
        tail,
        params,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub index: i64,
    #[serde(with = "decimal")]
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeEntry {
    pub p: i64,
    #[serde(with = "decimal")]
    pub value: BigInt,
}

/// Betti numbers `b_i(M(d, chi))` for `stable_threshold <= i <= 2 dim`, and
/// the diagonal Hodge numbers `h^{p,p}` with `2p` in the same range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTail {
    pub params: ModuliParams,
    pub entries: Vec<BettiEntry>,
    pub hodge_diag: Vec<HodgeEntry>,
    pub vacuous: bool,
}

impl BettiTail {
    pub fn betti(&self, i: i64) -> Option<&BigInt> {
        self.entries.iter().find(|e| e.index == i).map(|e| &e.value)
    }

    pub fn hodge(&self, p: i64) -> Option<&BigInt> {
        self.hodge_diag.iter().find(|e| e.p == p).map(|e| &e.value)
    }
}

pub fn betti_tail(d: i64, chi: i64, store: &HilbStore) -> Result<BettiTail> {
    let params = params(d, chi)?;
    if !params.coprime {
        return Err(Error::NotCoprime {
            d,
            chi,
            gcd: params.gcd(),
        });
    }
    if params.is_vacuous() {
        return Ok(BettiTail {
            params,
            entries: Vec::new(),
            hodge_diag: Vec::new(),
            vacuous: true,
        });
    }
    let class = store.class(params.dbar as usize)?;
    let mut entries = Vec::new();
    let mut hodge_diag = Vec::new();
    for index in params.stable_threshold..=2 * params.dim {
        let value = if index % 2 == 0 {
            let p = index / 2;
            let value = class.coefficient(p - params.shift);
            hodge_diag.push(HodgeEntry {
                p,
                value: value.clone(),
            });
            value
        } else {
            BigInt::zero()
        };
        entries.push(BettiEntry { index, value });
    }
    Ok(BettiTail {
        params,
        entries,
        hodge_diag,
        vacuous: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Agreement {
    Pass,
    /// No degrees to compare.
    Vacuous,
    Fail {
        /// Highest degree in which the two classes differ.
        degree: i64,
        chi0_a: i64,
        chi0_b: i64,
    },
}

impl Agreement {
    pub fn passed(&self) -> bool {
        !matches!(self, Agreement::Fail { .. })
    }
}

/// Checks that all `(chi0, class)` pairs agree in every degree `>= lowest`.
/// Classes are assumed to vanish above `highest`.
pub fn compare_above(classes: &[(i64, LPoly)], lowest: i64, highest: i64) -> Agreement {
    if lowest > highest {
        return Agreement::Vacuous;
    }
    let Some((ref_chi0, reference)) = classes.first() else {
        return Agreement::Vacuous;
    };
    for (chi0, class) in &classes[1..] {
        if !reference.eq_mod(class, lowest - 1) {
            return Agreement::Fail {
                degree: reference.highest_difference(class).expect("classes differ"),
                chi0_a: *ref_chi0,
                chi0_b: *chi0,
            };
        }
    }
    Agreement::Pass
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiIndependenceReport {
    pub d: i64,
    pub rho: i64,
    /// Comparison covers degrees `lowest_degree..=dim`.
    pub lowest_degree: i64,
    pub dim: i64,
    /// Every integer of the extended window, ascending.
    pub chi0_values: Vec<i64>,
    /// The shared top part (empty when vacuous or failing).
    pub common_tail: LPoly,
    pub outcome: Agreement,
}

/// Compares `L^(3d+1+2 chi0) [Hilb^(d(d-3)/2 - chi0)]` for every `chi0` in
/// `[-2d-1, -d+1]` above degree `d^2 - rho_d + 1`.
pub fn verify_chi_independence(d: i64, store: &HilbStore) -> Result<ChiIndependenceReport> {
    if d < 3 {
        return Err(Error::DegreeTooSmall(d));
    }
    let rho = rho(d);
    let dim = d * d + 1;
    let lowest = d * d - rho + 2;
    let chi0_values: Vec<i64> = Window::Extended.bounds(d).collect();
    let max_points = d * (d - 3) / 2 - chi0_values[0];
    store.ensure(max_points as usize)?;
    let classes = chi0_values
        .iter()
        .map(|&c0| {
            let n = d * (d - 3) / 2 - c0;
            Ok((c0, store.class(n as usize)?.shift(3 * d + 1 + 2 * c0)))
        })
        .collect::<Result<Vec<_>>>()?;
    let outcome = compare_above(&classes, lowest, dim);
    let common_tail = match outcome {
        Agreement::Pass => classes[0].1.above(lowest - 1),
        _ => LPoly::zero(),
    };
    Ok(ChiIndependenceReport {
        d,
        rho,
        lowest_degree: lowest,
        dim,
        chi0_values,
        common_tail,
        outcome,
    })
}

/// `chi` and `-chi` give the same parameters (dualizing sheaves).
pub fn duality_symmetry(d: i64, chi: i64) -> Result<bool> {
    let a = params(d, chi)?;
    let b = params(d, -chi)?;
    Ok((a.chi0, a.rho, a.dbar, a.shift) == (b.chi0, b.rho, b.dbar, b.shift))
}
