use alloc::vec;
use alloc::vec::Vec;

use super::field::FiniteField;

/// A polynomial in the uniformizer `t` over `F_q`, coefficients low to high, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<u32>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn constant(c: u32) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: u32, k: usize) -> Poly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::from_coeffs(v)
    }

    pub fn t_pow(k: usize) -> Poly {
        Poly::monomial(1, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `t`-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0)
    }

    pub fn add(&self, other: &Poly, f: &FiniteField) -> Poly {
        let n = self.0.len().max(other.0.len());
        let get = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
        Poly::from_coeffs(
            (0..n)
                .map(|i| f.add(get(&self.0, i), get(&other.0, i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly, f: &FiniteField) -> Poly {
        self.add(&other.neg(f), f)
    }

    pub fn neg(&self, f: &FiniteField) -> Poly {
        Poly(self.0.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &FiniteField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// `t^k * self`
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    /// `self / t^k` if `t^k` divides `self`.
    pub fn shift_down(&self, k: usize) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.0[..k.min(self.0.len())].iter().any(|&c| c != 0) {
            return None;
        }
        Some(Poly(
            self.0.get(k..).map(<[u32]>::to_vec).unwrap_or_default(),
        ))
    }
}

/// Truncated power series modulo `t^prec`, used by the local Smith reduction.
pub(crate) mod series {
    use super::*;

    pub(crate) fn from_poly(p: &Poly, prec: usize) -> Vec<u32> {
        let mut v = vec![0; prec];
        for (i, &c) in p.coeffs().iter().enumerate().take(prec) {
            v[i] = c;
        }
        v
    }

    pub(crate) fn valuation(s: &[u32]) -> Option<usize> {
        s.iter().position(|&c| c != 0)
    }

    pub(crate) fn mul(a: &[u32], b: &[u32], f: &FiniteField) -> Vec<u32> {
        let prec = a.len();
        let mut out = vec![0; prec];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate().take(prec - i) {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        out
    }

    /// Inverse of a unit (nonzero constant term).
    pub(crate) fn inverse(u: &[u32], f: &FiniteField) -> Vec<u32> {
        let prec = u.len();
        let u0 = f.inv(u[0]).expect("series is a unit");
        let mut inv = vec![0; prec];
        inv[0] = u0;
        for k in 1..prec {
            let mut acc = 0;
            for j in 1..=k {
                acc = f.add(acc, f.mul(u[j], inv[k - j]));
            }
            inv[k] = f.neg(f.mul(u0, acc));
        }
        inv
    }

    /// `s / t^k`, padded with zeros to the same precision.
    pub(crate) fn shift_down(s: &[u32], k: usize) -> Vec<u32> {
        let mut v: Vec<u32> = s[k..].to_vec();
        v.resize(s.len(), 0);
        v
    }
}
