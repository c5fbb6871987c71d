//! Small exact integer and rational linear algebra used by the root datum.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

type Q = Ratio<i128>;

/// Rank over the rationals of the given rows.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(rank, piv);
        for i in 0..m.len() {
            if i != rank && m[i][col] != Q::from_integer(0) {
                let f = m[i][col] / m[rank][col];
                for j in col..ncols {
                    let v = m[rank][j];
                    m[i][j] -= f * v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix (Bareiss elimination).
pub(crate) fn det(mat: &[Vec<i64>]) -> i128 {
    let n = mat.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Left inverse of a full-column-rank integer matrix given by its columns.
///
/// Returns `(numerators, den)` with `numerators` of shape `cols.len() x dim` such that
/// `numerators * A = den * I`.
pub(crate) fn left_inverse(cols: &[Vec<i64>], dim: usize) -> (Vec<Vec<i128>>, i128) {
    let s = cols.len();
    if s == 0 {
        return (Vec::new(), 1);
    }
    // Gram matrix G = A^T A, inverted over Q.
    let mut g: Vec<Vec<Q>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    let dot: i128 = cols[i]
                        .iter()
                        .zip(&cols[j])
                        .map(|(&a, &b)| a as i128 * b as i128)
                        .sum();
                    Q::from_integer(dot)
                })
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<Q>> = (0..s)
        .map(|i| (0..s).map(|j| Q::from_integer((i == j) as i128)).collect())
        .collect();
    for col in 0..s {
        let piv = (col..s)
            .find(|&i| g[i][col] != Q::from_integer(0))
            .expect("columns must be linearly independent");
        g.swap(col, piv);
        inv.swap(col, piv);
        let p = g[col][col];
        for j in 0..s {
            g[col][j] /= p;
            inv[col][j] /= p;
        }
        for i in 0..s {
            if i != col && g[i][col] != Q::from_integer(0) {
                let f = g[i][col];
                for j in 0..s {
                    let (gv, iv) = (g[col][j], inv[col][j]);
                    g[i][j] -= f * gv;
                    inv[i][j] -= f * iv;
                }
            }
        }
    }
    // L = G^{-1} A^T, then clear denominators.
    let l: Vec<Vec<Q>> = (0..s)
        .map(|i| {
            (0..dim)
                .map(|k| {
                    (0..s).fold(Q::from_integer(0), |acc, j| {
                        acc + inv[i][j] * Q::from_integer(cols[j][k] as i128)
                    })
                })
                .collect()
        })
        .collect();
    let den = l
        .iter()
        .flatten()
        .fold(1i128, |acc, q| num_integer::lcm(acc, *q.denom()));
    let nums = l
        .iter()
        .map(|row| row.iter().map(|q| q.numer() * (den / q.denom())).collect())
        .collect();
    (nums, den)
}

/// Diagonalizes the `dim x s` integer matrix whose columns are `cols`.
///
/// Returns a unimodular `U` (`dim x dim`) and the nonzero diagonal entries `d` such that
/// `U * A * V = diag(d) (+ zero rows)` for some unimodular `V`.
pub(crate) fn smith_row_transform(cols: &[Vec<i64>], dim: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let k = cols.len();
    let mut a: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..k).map(|j| cols[j][i]).collect())
        .collect();
    let mut u: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| (i == j) as i64).collect())
        .collect();
    let mut diag = Vec::new();
    for t in 0..dim.min(k) {
        loop {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..dim {
                for j in t..k {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (u, diag);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..dim {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in 0..k {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..dim {
                        u[i][j] -= q * u[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..k {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
        if a[t][t] < 0 {
            a[t].iter_mut().for_each(|x| *x = -*x);
            u[t].iter_mut().for_each(|x| *x = -*x);
        }
        diag.push(a[t][t]);
    }
    (u, diag)
}

pub(crate) fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

pub(crate) fn identity(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}
