//! The monoid `X_*(T)^+` underlying `Spec F_p[X_*(T)^+]`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::element::{K0Element, K0Tensor};
use super::SatakeError;
use crate::rootdatum::{Coweight, RootDatum};

/// `X_*(T)^+` is a group exactly when there are no roots.
pub fn monoid_is_group(d: &RootDatum) -> bool {
    d.is_torus()
}

/// `[IC_mu] -> [IC_mu] (x) [IC_mu]`, extended linearly.
pub fn comultiplication(x: &K0Element) -> K0Tensor {
    let mut out = K0Tensor::new(x.p());
    for (mu, c) in x.terms() {
        out.add_term(mu.clone(), mu.clone(), c);
    }
    out
}

/// Multiplication by an element of `F_p[X_*(T)^+]` compressed to the span of a finite set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedRepresentation {
    /// Basis in decreasing `(2<rho,.>, lexicographic)` order.
    pub basis: Vec<Coweight>,
    pub p: u64,
    /// `matrix[row][col]`: coefficient of `basis[row]` in `x * basis[col]`.
    pub matrix: Vec<Vec<u64>>,
}

impl TruncatedRepresentation {
    /// Matrix of `x * [IC_lambda]` for `lambda` in `set`, keeping only terms inside `set`.
    ///
    /// `set` must be downward closed for the dominance order. The basis order refines dominance
    /// and puts `lambda + mu` before `lambda` whenever `mu` is dominant and not central, so the
    /// matrix is upper triangular as long as `x` has no nonzero central term that is
    /// lexicographically negative; on semisimple data this always holds.
    pub fn new(
        d: &RootDatum,
        set: &[Coweight],
        x: &K0Element,
    ) -> Result<TruncatedRepresentation, SatakeError> {
        let members: BTreeSet<&Coweight> = set.iter().collect();
        for s in set {
            for below in d.strata_below(s)? {
                if !members.contains(&below) {
                    return Err(SatakeError::NotDownwardClosed(below));
                }
            }
        }
        let mut basis: Vec<Coweight> = members.into_iter().cloned().collect();
        basis.sort_by(|a, b| d.two_rho(b).cmp(&d.two_rho(a)).then_with(|| b.cmp(a)));
        let n = basis.len();
        let mut matrix = vec![vec![0u64; n]; n];
        let p = x.p();
        for (col, lambda) in basis.iter().enumerate() {
            for (mu, c) in x.terms() {
                let target = lambda + mu;
                if let Some(row) = basis.iter().position(|b| *b == target) {
                    matrix[row][col] = (matrix[row][col] + c) % p;
                }
            }
        }
        Ok(TruncatedRepresentation { basis, p, matrix })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis order used for rows and columns.
    pub fn basis(&self) -> &[Coweight] {
        &self.basis
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.nonzero_entries().all(|(r, c)| r <= c)
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        self.nonzero_entries().all(|(r, c)| r < c)
    }

    fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.matrix.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(move |(c, _)| (r, c))
        })
    }

    /// Smallest `k <= dim + 1` with `matrix^k = 0`, if any.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.dim();
        if n == 0 {
            return Some(0);
        }
        let mut power = self.matrix.clone();
        for k in 1..=n + 1 {
            if power.iter().flatten().all(|&v| v == 0) {
                return Some(k);
            }
            power = self.mul(&power);
        }
        None
    }

    fn mul(&self, other: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = self.dim();
        let p = self.p as u128;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        ((0..n)
                            .map(|k| self.matrix[i][k] as u128 * other[k][j] as u128)
                            .sum::<u128>()
                            % p) as u64
                    })
                    .collect()
            })
            .collect()
    }
}
