use alloc::vec::Vec;

use super::field::FiniteField;
use super::poly::{series, Poly};
use super::OracleError;

/// Elementary-divisor valuations of a lattice pair, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeInvariant(pub Vec<i64>);

/// Square matrix with entries in `t^{-denom} F_q[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
    denom: u32,
}

impl PolyMatrix {
    pub fn new(n: usize, entries: Vec<Poly>, denom: u32) -> PolyMatrix {
        assert_eq!(entries.len(), n * n, "expected {n}x{n} entries");
        PolyMatrix { n, entries, denom }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> PolyMatrix {
        let n = rows.len();
        PolyMatrix::new(n, rows.into_iter().flatten().collect(), 0)
    }

    /// `diag(t^{e_1}, ..., t^{e_n})`
    pub fn diagonal(exps: &[u32]) -> PolyMatrix {
        let n = exps.len();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(if i == j {
                    Poly::t_pow(exps[i] as usize)
                } else {
                    Poly::zero()
                });
            }
        }
        PolyMatrix::new(n, entries, 0)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn with_denom(mut self, denom: u32) -> PolyMatrix {
        self.denom = denom;
        self
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &PolyMatrix, f: &FiniteField) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Poly::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j), f), f);
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(n, entries, self.denom + other.denom)
    }
}

/// Smith invariants over `F_q[[t]]`: the valuations `e_1 >= ... >= e_n` with the matrix
/// equivalent to `diag(t^{e_i})`, shifted by the denominator exponent.
///
/// The reduction runs modulo `t^P` where `P - 1` bounds the degree of the determinant, which
/// is enough to see every invariant of a nonsingular matrix.
pub fn smith_invariants(m: &PolyMatrix, f: &FiniteField) -> Result<LatticeInvariant, OracleError> {
    let n = m.n;
    let mut prec = 1;
    for i in 0..n {
        let row_deg = (0..n).filter_map(|j| m.get(i, j).degree()).max();
        match row_deg {
            Some(d) => prec += d,
            None => return Err(OracleError::Singular),
        }
    }
    let mut a: Vec<Vec<Vec<u32>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| series::from_poly(m.get(i, j), prec))
                .collect()
        })
        .collect();
    let mut vals = Vec::with_capacity(n);
    for k in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, entry) in row.iter().enumerate().skip(k) {
                if let Some(v) = series::valuation(entry) {
                    if best.is_none_or(|(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let (pi, pj, v) = best.ok_or(OracleError::Singular)?;
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let unit_inv = series::inverse(&series::shift_down(&a[k][k], v), f);
        for i in k + 1..n {
            if series::valuation(&a[i][k]).is_none() {
                continue;
            }
            // a[i][k] = factor * pivot mod t^P since val(a[i][k]) >= v
            let factor = series::mul(&series::shift_down(&a[i][k], v), &unit_inv, f);
            for j in k..n {
                let delta = series::mul(&factor, &a[k][j], f);
                let entry = &mut a[i][j];
                for (x, d) in entry.iter_mut().zip(&delta) {
                    *x = f.sub(*x, *d);
                }
            }
            debug_assert!(series::valuation(&a[i][k]).is_none());
        }
        // Row k off the pivot is divisible by the pivot, so column operations clear it
        // without touching the remaining block.
        vals.push(v as i64 - m.denom as i64);
    }
    vals.sort_unstable_by(|x, y| y.cmp(x));
    Ok(LatticeInvariant(vals))
}
