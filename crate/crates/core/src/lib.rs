//! Combinatorics of the mod p Satake correspondence for split reductive groups.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`rootdatum`]: based root data, Weyl groups and the dominance order on coweights,
//! * [`grcomb`]: dimensions, strata and component bookkeeping for affine Schubert varieties,
//! * [`satake`]: the Grothendieck ring `F_p[X_*(T)^+]`, the spherical Hecke algebra in the
//!   `tau` basis, and the maps between them,
//! * [`oracle`]: an independent lattice-counting computation of Hecke structure constants
//!   for `GL_n` over `F_q[[t]]`.
//!
//! IO, JSON formats and the command line live in the `satk` crate.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod grcomb;
mod linalg;
pub mod oracle;
pub mod rootdatum;
pub mod satake;

pub use grcomb::{Ext1Case, StratumEntry, StratumReport};
pub use rootdatum::{
    build_root_datum, build_root_datum_with_cap, CartanType, Coweight, DatumError, Family,
    RootDatum, WeylElement,
};
pub use satake::{AntiDomElement, Cone, HeckeElement, K0Element, Satake, SatakeError};

/// Returns `true` if `n` is a prime number.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::is_prime;

    #[test]
    fn small_primes() {
        let primes: alloc::vec::Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
