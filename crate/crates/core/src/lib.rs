//! Motivic classes of Hilbert schemes of points on the projective plane, and
//! the stable-range Betti and Hodge numbers of the moduli spaces `M(d, chi)`
//! of one-dimensional semistable sheaves on the plane that those classes
//! determine.
//!
//! Classes are Laurent polynomials in the Lefschetz class `L`
//! ([`LPoly`]). A congruence "modulo `A_m`" between two classes is modelled
//! as equality of all coefficients in `L`-degrees above `m`: for any motivic
//! measure refining dimension (E-polynomial, virtual Poincaré polynomial),
//! a space of dimension at most `m` contributes only to degrees `<= m`.

pub mod decimal;
pub mod envelope;
pub mod error;
pub mod hilb;
pub mod lpoly;
pub mod moduli;
pub mod qseries;

pub use envelope::{OutputEnvelope, ENVELOPE_SCHEMA};
pub use error::{Error, Result};
pub use hilb::{betti_hilb, euler_oracle, hilb_class, hilb_classes, HilbCache, HilbStore};
pub use lpoly::LPoly;
pub use moduli::{
    betti_tail, chi0, motivic_tail, params, rho, verify_chi_independence, Agreement, BettiTail,
    ChiIndependenceReport, ModuliParams, MotivicTail,
};
pub use num_bigint::BigInt;
pub use qseries::QSeries;
