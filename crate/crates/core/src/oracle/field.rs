use alloc::vec;
use alloc::vec::Vec;

use super::OracleError;

/// Largest field size for which addition and multiplication tables are built.
pub const MAX_FIELD_SIZE: u32 = 256;

/// The finite field `F_q`, `q = p^e`, with elements encoded as integers `0..q`.
///
/// The integer `sum c_i p^i` stands for `sum c_i x^i` modulo a fixed irreducible polynomial
/// of degree `e` over `F_p`. So `0` and `1` are the field zero and one, and for `e = 1` the
/// encoding is the usual residue.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl FiniteField {
    pub fn new(q: u32) -> Result<FiniteField, OracleError> {
        let (p, e) = prime_power(q).ok_or(OracleError::NotPrimePower(q))?;
        if q > MAX_FIELD_SIZE {
            return Err(OracleError::CapExceeded {
                what: "field size",
                value: q as u64,
                cap: MAX_FIELD_SIZE as u64,
            });
        }
        let modulus = irreducible(p, e);
        let qs = q as usize;
        let digits = |x: u32| -> Vec<u32> {
            let mut v = vec![0; e as usize];
            let mut x = x;
            for d in v.iter_mut() {
                *d = x % p;
                x /= p;
            }
            v
        };
        let encode = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &d| acc * p + d) };
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = encode(&sum);
                mul[a as usize * qs + b as usize] = encode(&mulmod(&da, &db, &modulus, p));
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..qs {
            neg[a] = (0..q).find(|&b| add[a * qs + b as usize] == 0).unwrap();
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * qs + b as usize] == 1)
                    .expect("nonzero element is invertible");
            }
        }
        Ok(FiniteField {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    /// Coefficients (low to high, monic) of the defining polynomial over `F_p`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn elements(&self) -> core::ops::Range<u32> {
        0..self.q
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

// product of two residues (degree < e) reduced by the monic modulus
fn mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * e.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = k - e + i;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
    }
    prod.truncate(e);
    prod
}

/// Lexicographically first monic irreducible polynomial of degree `e` over `F_p`.
fn irreducible(p: u32, e: u32) -> Vec<u32> {
    let e = e as usize;
    if e == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(e as u32);
    'cand: for idx in 0..count {
        let mut f = vec![0u32; e + 1];
        let mut x = idx;
        for c in f.iter_mut().take(e) {
            *c = (x % p as u64) as u32;
            x /= p as u64;
        }
        f[e] = 1;
        for deg in 1..=e / 2 {
            for gidx in 0..(p as u64).pow(deg as u32) {
                let mut g = vec![0u32; deg + 1];
                let mut y = gidx;
                for c in g.iter_mut().take(deg) {
                    *c = (y % p as u64) as u32;
                    y /= p as u64;
                }
                g[deg] = 1;
                if remainder_is_zero(&f, &g, p) {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn remainder_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for k in (dg..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let idx = k - dg + i;
            r[idx] = (r[idx] + (p - c) * gi) % p;
        }
    }
    r[..dg].iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            // no zero divisors
            for a in 1..q {
                for b in 1..q {
                    assert_ne!(f.mul(a, b), 0, "q={q}");
                }
            }
        }
    }

    #[test]
    fn characteristic_and_frobenius() {
        let f = FiniteField::new(8).unwrap();
        assert_eq!(f.characteristic(), 2);
        assert_eq!(f.degree(), 3);
        // x^8 = x for all x
        for a in f.elements() {
            let mut y = a;
            for _ in 0..3 {
                y = f.mul(y, y);
            }
            assert_eq!(y, a);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(FiniteField::new(6), Err(OracleError::NotPrimePower(6)));
        assert_eq!(FiniteField::new(1), Err(OracleError::NotPrimePower(1)));
        assert!(matches!(
            FiniteField::new(512),
            Err(OracleError::CapExceeded { .. })
        ));
    }
}
