//! Brute-force Hecke structure constants for `GL_n` by counting lattices over `F_q[[t]]`.
//!
//! This path never touches root data or the Satake maps; it exists to check them.

use core::fmt;

use crate::satake::SatakeError;

mod field;
mod lattice;
mod matrix;
mod poly;

pub use field::{FiniteField, MAX_FIELD_SIZE};
pub use lattice::{
    enumerate_lattices, oracle_hecke_mul, structure_constant, structure_constants, Lattice,
    LatticeIter, StructureConstant,
};
pub use matrix::{smith_invariants, LatticeInvariant, PolyMatrix};
pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    NotPrimePower(u32),
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    Singular,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    NotDominant(alloc::vec::Vec<i64>),
    CharacteristicMismatch {
        p: u64,
        q: u32,
    },
    Satake(SatakeError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            OracleError::CapExceeded { what, value, cap } => {
                write!(f, "{what} = {value} exceeds the oracle cap {cap}")
            }
            OracleError::Singular => f.write_str("matrix is singular"),
            OracleError::DimensionMismatch { expected, found } => {
                write!(f, "vector of length {found}, expected {expected}")
            }
            OracleError::NotDominant(v) => write!(f, "{v:?} is not weakly decreasing"),
            OracleError::CharacteristicMismatch { p, q } => {
                write!(f, "Hecke modulus {p} does not divide q = {q}")
            }
            OracleError::Satake(e) => e.fmt(f),
        }
    }
}

/// Limits on the lattice enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_n: usize,
    pub max_depth: u32,
    pub max_q: u32,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_n: 3,
            max_depth: 4,
            max_q: 5,
        }
    }
}

impl OracleCaps {
    pub fn check(&self, n: usize, depth: u32, q: u32) -> Result<(), OracleError> {
        let over = |what, value: u64, cap: u64| {
            if value > cap {
                Err(OracleError::CapExceeded { what, value, cap })
            } else {
                Ok(())
            }
        };
        over("n", n as u64, self.max_n as u64)?;
        over("depth", depth as u64, self.max_depth as u64)?;
        over("q", q as u64, self.max_q as u64)
    }
}
