//! The Grothendieck ring `K_0 (x) F_p = F_p[X_*(T)^+]`, the spherical Hecke algebra `H_G` in
//! the `tau` basis, and the maps
//!
//! ```text
//!   F_p[X_*(T)_-] --alpha--> F_p[X_*(T)^+] --T--> H_G
//! ```
//!
//! whose composite is the inverse Satake transform `S^{-1}(mu) = sum_{lambda >= mu} tau_lambda`.

use core::fmt;

use crate::rootdatum::{Coweight, DatumError};

pub(crate) mod element;
mod maps;
mod monoid;

pub use element::{k0_mul, AntiDomElement, HeckeElement, K0Element, K0Tensor};
pub use maps::{Cone, Satake};
pub use monoid::{comultiplication, monoid_is_group, TruncatedRepresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatakeError {
    NotPrime(u64),
    ModulusMismatch(u64, u64),
    NotAntiDominant(Coweight),
    NotComparable(Coweight, Coweight),
    NotDownwardClosed(Coweight),
    Datum(DatumError),
}

impl From<DatumError> for SatakeError {
    fn from(e: DatumError) -> Self {
        SatakeError::Datum(e)
    }
}

impl fmt::Display for SatakeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SatakeError::NotPrime(p) => write!(f, "modulus {p} is not prime"),
            SatakeError::ModulusMismatch(a, b) => write!(f, "moduli {a} and {b} differ"),
            SatakeError::NotAntiDominant(c) => write!(f, "coweight {c} is not anti-dominant"),
            SatakeError::NotComparable(a, b) => write!(f, "{a} is not below {b}"),
            SatakeError::NotDownwardClosed(c) => {
                write!(f, "set is not downward closed: missing {c}")
            }
            SatakeError::Datum(e) => e.fmt(f),
        }
    }
}
