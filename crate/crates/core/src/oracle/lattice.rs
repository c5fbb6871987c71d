use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::field::FiniteField;
use super::matrix::{smith_invariants, LatticeInvariant, PolyMatrix};
use super::poly::Poly;
use super::{OracleCaps, OracleError};
use crate::rootdatum::Coweight;
use crate::satake::element::Terms;
use crate::satake::HeckeElement;

/// A full-rank `F_q[t]`-submodule `M` of the standard lattice `Lambda = F_q[t]^n`.
///
/// Stored by its Hermite basis: column `j` is `t^{a_j} e_j + sum_{i<j} x_ij e_i` with
/// `deg x_ij < a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    exps: Vec<u32>,
    basis: PolyMatrix,
}

impl Lattice {
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn basis(&self) -> &PolyMatrix {
        &self.basis
    }

    pub fn index_exponent(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Coordinates of `v` in the Hermite basis, if `v` lies in `M`.
    pub fn solve(&self, v: &[Poly], f: &FiniteField) -> Option<Vec<Poly>> {
        let n = self.exps.len();
        let mut y = vec![Poly::zero(); n];
        for j in (0..n).rev() {
            let mut rhs = v[j].clone();
            for (l, yl) in y.iter().enumerate().skip(j + 1) {
                rhs = rhs.sub(&self.basis.get(j, l).mul(yl, f), f);
            }
            y[j] = rhs.shift_down(self.exps[j] as usize)?;
        }
        Some(y)
    }

    pub fn contains(&self, v: &[Poly], f: &FiniteField) -> bool {
        self.solve(v, f).is_some()
    }

    /// `inv(Lambda, M)`.
    pub fn invariant(&self, f: &FiniteField) -> LatticeInvariant {
        smith_invariants(&self.basis, f).expect("lattice bases are nonsingular")
    }

    /// `inv(M, diag(t^nu) Lambda)` when `diag(t^nu) Lambda` is contained in `M`.
    pub fn relative_invariant(&self, nu: &[u32], f: &FiniteField) -> Option<LatticeInvariant> {
        let n = self.exps.len();
        let mut coords = Vec::with_capacity(n);
        for (k, &e) in nu.iter().enumerate() {
            let mut v = vec![Poly::zero(); n];
            v[k] = Poly::t_pow(e as usize);
            coords.push(self.solve(&v, f)?);
        }
        // columns of the transition matrix are the coordinate vectors
        let entries = (0..n)
            .flat_map(|i| coords.iter().map(move |c| c[i].clone()))
            .collect();
        Some(smith_invariants(&PolyMatrix::new(n, entries, 0), f).expect("nonsingular"))
    }
}

/// Every lattice `t^depth Lambda <= M <= Lambda` in `F_q[t]^n`, each exactly once.
pub fn enumerate_lattices<'f>(
    n: usize,
    depth: u32,
    f: &'f FiniteField,
    caps: &OracleCaps,
) -> Result<LatticeIter<'f>, OracleError> {
    caps.check(n, depth, f.size())?;
    Ok(LatticeIter {
        n,
        depth,
        f,
        exps: vec![0; n],
        digits: Vec::new(),
        done: false,
    })
}

pub struct LatticeIter<'f> {
    n: usize,
    depth: u32,
    f: &'f FiniteField,
    exps: Vec<u32>,
    // coefficients of the off-diagonal entries, row by row
    digits: Vec<u32>,
    done: bool,
}

impl LatticeIter<'_> {
    fn digit_count(&self) -> usize {
        (0..self.n)
            .map(|i| self.exps[i] as usize * (self.n - 1 - i))
            .sum()
    }

    fn current(&self) -> Lattice {
        let n = self.n;
        let mut entries = vec![Poly::zero(); n * n];
        let mut pos = 0;
        for i in 0..n {
            let a = self.exps[i] as usize;
            entries[i * n + i] = Poly::t_pow(a);
            for j in i + 1..n {
                entries[i * n + j] = Poly::from_coeffs(self.digits[pos..pos + a].to_vec());
                pos += a;
            }
        }
        Lattice {
            exps: self.exps.clone(),
            basis: PolyMatrix::new(n, entries, 0),
        }
    }

    fn advance(&mut self) {
        let q = self.f.size();
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < q {
                return;
            }
            *d = 0;
        }
        for e in self.exps.iter_mut() {
            *e += 1;
            if *e <= self.depth {
                self.digits = vec![0; self.digit_count()];
                return;
            }
            *e = 0;
        }
        self.done = true;
    }
}

impl Iterator for LatticeIter<'_> {
    type Item = Lattice;

    fn next(&mut self) -> Option<Lattice> {
        if self.digits.len() != self.digit_count() {
            self.digits = vec![0; self.digit_count()];
        }
        while !self.done {
            let m = self.current();
            self.advance();
            let n = self.n;
            let contains_floor = (0..n).all(|k| {
                let mut v = vec![Poly::zero(); n];
                v[k] = Poly::t_pow(self.depth as usize);
                m.contains(&v, self.f)
            });
            if contains_floor {
                return Some(m);
            }
        }
        None
    }
}

/// A Hecke structure constant as an integer count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureConstant {
    pub count: u64,
    /// `sum(mu) + sum(lambda) != sum(nu)`: the count is zero for that reason alone.
    pub central_mismatch: bool,
}

fn require_gl_dominant(n: usize, v: &[i64]) -> Result<(), OracleError> {
    if v.len() != n {
        return Err(OracleError::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err(OracleError::NotDominant(v.to_vec()));
    }
    Ok(())
}

fn shift(v: &[i64], c: i64) -> Vec<i64> {
    v.iter().map(|x| x - c).collect()
}

/// Coefficient of `tau_nu` in `tau_mu * tau_lambda` for `GL_n` over `F_q((t))`:
/// the number of lattices `M` with `inv(Lambda, M) = mu` and `inv(M, nu(t) Lambda) = lambda`.
pub fn structure_constant(
    n: usize,
    f: &FiniteField,
    mu: &[i64],
    lambda: &[i64],
    nu: &[i64],
    caps: &OracleCaps,
) -> Result<StructureConstant, OracleError> {
    require_gl_dominant(n, nu)?;
    let all = structure_constants(n, f, mu, lambda, caps)?;
    let total = |v: &[i64]| v.iter().sum::<i64>();
    Ok(StructureConstant {
        count: all.get(nu).copied().unwrap_or(0),
        central_mismatch: total(mu) + total(lambda) != total(nu),
    })
}

/// All nonzero coefficients of `tau_mu * tau_lambda` as integer counts.
///
/// Entries are first translated by central elements so that both minima are zero; the counts
/// are invariant under this and the lattice window shrinks to depth `max(mu)`.
pub fn structure_constants(
    n: usize,
    f: &FiniteField,
    mu: &[i64],
    lambda: &[i64],
    caps: &OracleCaps,
) -> Result<BTreeMap<Vec<i64>, u64>, OracleError> {
    require_gl_dominant(n, mu)?;
    require_gl_dominant(n, lambda)?;
    if n == 0 {
        return Ok(BTreeMap::from([(Vec::new(), 1)]));
    }
    let (cm, cl) = (mu[n - 1], lambda[n - 1]);
    let mu0 = shift(mu, cm);
    let la0 = shift(lambda, cl);
    let depth = mu0[0] as u32;
    let sum: i64 = mu0.iter().chain(&la0).sum();
    let top = mu0[0] + la0[0];
    let candidates = decreasing_with_sum(n, top, sum);

    let mu_inv = LatticeInvariant(mu0.clone());
    let la_inv = LatticeInvariant(la0.clone());
    let mut counts: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for m in enumerate_lattices(n, depth, f, caps)? {
        if m.index_exponent() as i64 != mu0.iter().sum::<i64>() || m.invariant(f) != mu_inv {
            continue;
        }
        for nu in &candidates {
            let exps: Vec<u32> = nu.iter().map(|&x| x as u32).collect();
            if m.relative_invariant(&exps, f).as_ref() == Some(&la_inv) {
                *counts.entry(nu.clone()).or_insert(0) += 1;
            }
        }
    }
    let sum_target: Vec<i64> = mu0.iter().zip(&la0).map(|(a, b)| a + b).collect();
    let mut out = BTreeMap::new();
    for (nu, c) in counts {
        assert!(
            gl_dominance_leq(&nu, &sum_target),
            "support {nu:?} not below {sum_target:?}"
        );
        out.insert(shift(&nu, -(cm + cl)), c);
    }
    Ok(out)
}

// partial sums of the sorted vectors; sums are equal by construction
fn gl_dominance_leq(a: &[i64], b: &[i64]) -> bool {
    let mut sa = 0;
    let mut sb = 0;
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// Weakly decreasing vectors of length `n` with entries in `[0, top]` and the given sum.
fn decreasing_with_sum(n: usize, top: i64, sum: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, max: i64, sum: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for x in (0..=max.min(sum)).rev() {
            if x * (n as i64) < sum {
                break;
            }
            prefix.push(x);
            rec(n - 1, x, sum - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, top, sum, &mut Vec::new(), &mut out);
    out
}

/// The product `f * g` in `H_{GL_n}` computed from lattice counts reduced mod `p`.
pub fn oracle_hecke_mul(
    n: usize,
    field: &FiniteField,
    f: &HeckeElement,
    g: &HeckeElement,
    caps: &OracleCaps,
) -> Result<HeckeElement, OracleError> {
    let p = f.p();
    if g.p() != p {
        return Err(OracleError::Satake(crate::SatakeError::ModulusMismatch(
            p,
            g.p(),
        )));
    }
    if field.characteristic() as u64 != p {
        return Err(OracleError::CharacteristicMismatch { p, q: field.size() });
    }
    let mut out = Terms::new(p).map_err(OracleError::Satake)?;
    for (mu, a) in f.terms() {
        for (lambda, b) in g.terms() {
            let ab = out.mul_coeff(a, b);
            for (nu, c) in structure_constants(n, field, mu.coords(), lambda.coords(), caps)? {
                let c = out.mul_coeff(ab, c % p);
                out.add_term(Coweight::new(nu), c);
            }
        }
    }
    Ok(HeckeElement(out))
}
