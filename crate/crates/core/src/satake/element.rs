use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::SatakeError;
use crate::rootdatum::{Coweight, RootDatum};

/// Finite `F_p`-linear combination of coweights with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Terms {
    p: u64,
    map: BTreeMap<Coweight, u64>,
}

impl Terms {
    pub(crate) fn new(p: u64) -> Result<Terms, SatakeError> {
        if !crate::is_prime(p) {
            return Err(SatakeError::NotPrime(p));
        }
        Ok(Terms {
            p,
            map: BTreeMap::new(),
        })
    }

    pub(crate) fn p(&self) -> u64 {
        self.p
    }

    pub(crate) fn reduce(&self, c: i64) -> u64 {
        c.rem_euclid(self.p as i64) as u64
    }

    pub(crate) fn add_term(&mut self, key: Coweight, coeff: u64) {
        let coeff = coeff % self.p;
        if coeff == 0 {
            return;
        }
        let p = self.p;
        let entry = self.map.entry(key);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (*o.get() + coeff) % p;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn add_signed(&mut self, key: Coweight, coeff: i64) {
        let c = self.reduce(coeff);
        self.add_term(key, c);
    }

    pub(crate) fn mul_coeff(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub(crate) fn check_modulus(&self, other: &Terms) -> Result<(), SatakeError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(SatakeError::ModulusMismatch(self.p, other.p))
        }
    }

    pub(crate) fn add(&self, other: &Terms) -> Result<Terms, SatakeError> {
        self.check_modulus(other)?;
        let mut out = self.clone();
        for (k, &c) in &other.map {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub(crate) fn scale(&self, c: i64) -> Terms {
        let c = self.reduce(c);
        let mut out = Terms {
            p: self.p,
            map: BTreeMap::new(),
        };
        for (k, &v) in &self.map {
            out.add_term(k.clone(), self.mul_coeff(v, c));
        }
        out
    }

    /// Monoid algebra product: basis elements multiply by adding coweights.
    pub(crate) fn monoid_mul(&self, other: &Terms) -> Result<Terms, SatakeError> {
        self.check_modulus(other)?;
        let mut out = Terms {
            p: self.p,
            map: BTreeMap::new(),
        };
        for (a, &ca) in &self.map {
            for (b, &cb) in &other.map {
                out.add_term(a + b, self.mul_coeff(ca, cb));
            }
        }
        Ok(out)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = (&Coweight, u64)> + '_ {
        self.map.iter().map(|(k, &v)| (k, v))
    }

    pub(crate) fn coeff(&self, key: &Coweight) -> u64 {
        self.map.get(key).copied().unwrap_or(0)
    }

    pub(crate) fn len(&self) -> usize {
        self.map.len()
    }
}

macro_rules! element_common {
    ($ty:ident) => {
        impl $ty {
            pub fn zero(p: u64) -> Result<Self, SatakeError> {
                Terms::new(p).map($ty)
            }

            pub fn p(&self) -> u64 {
                self.0.p()
            }

            /// Terms in lexicographic order of the coweights, coefficients in `1..p`.
            pub fn terms(&self) -> impl Iterator<Item = (&Coweight, u64)> + '_ {
                self.0.iter()
            }

            pub fn coeff(&self, key: &Coweight) -> u64 {
                self.0.coeff(key)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.len() == 0
            }

            pub fn add(&self, other: &Self) -> Result<Self, SatakeError> {
                self.0.add(&other.0).map($ty)
            }

            pub fn sub(&self, other: &Self) -> Result<Self, SatakeError> {
                self.0.add(&other.0.scale(-1)).map($ty)
            }

            pub fn scale(&self, c: i64) -> Self {
                $ty(self.0.scale(c))
            }
        }
    };
}

/// A class in `K_0 (x) F_p`, written in the basis `[IC_mu]`, `mu` dominant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K0Element(pub(crate) Terms);

element_common!(K0Element);

impl K0Element {
    /// The class `[IC_mu]`.
    pub fn basis(d: &RootDatum, mu: &Coweight, p: u64) -> Result<Self, SatakeError> {
        Self::from_terms(d, p, [(mu.clone(), 1)])
    }

    pub fn unit(d: &RootDatum, p: u64) -> Result<Self, SatakeError> {
        Self::basis(d, &Coweight::zero(d.rank()), p)
    }

    pub fn from_terms(
        d: &RootDatum,
        p: u64,
        terms: impl IntoIterator<Item = (Coweight, i64)>,
    ) -> Result<Self, SatakeError> {
        let mut t = Terms::new(p)?;
        for (mu, c) in terms {
            d.require_dominant(&mu)?;
            t.add_signed(mu, c);
        }
        Ok(K0Element(t))
    }

    /// Length of the canonical representative: the sum of coefficient lifts to `0..p`.
    pub fn h_dim(&self) -> u64 {
        self.0.iter().map(|(_, c)| c).sum()
    }
}

/// `[IC_mu] * [IC_lambda] = [IC_{mu + lambda}]`, extended bilinearly.
pub fn k0_mul(x: &K0Element, y: &K0Element) -> Result<K0Element, SatakeError> {
    x.0.monoid_mul(&y.0).map(K0Element)
}

/// An element of the spherical Hecke algebra in the basis `tau_mu`, keys dominant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement(pub(crate) Terms);

element_common!(HeckeElement);

impl HeckeElement {
    /// `tau_key`, stored under the dominant representative of `key`.
    ///
    /// Anti-dominant keys are moved by `w_0`; other keys by the dominating Weyl element.
    pub fn tau(d: &RootDatum, key: &Coweight, p: u64) -> Result<Self, SatakeError> {
        Self::from_terms(d, p, [(key.clone(), 1)])
    }

    pub fn unit(d: &RootDatum, p: u64) -> Result<Self, SatakeError> {
        Self::tau(d, &Coweight::zero(d.rank()), p)
    }

    pub fn from_terms(
        d: &RootDatum,
        p: u64,
        terms: impl IntoIterator<Item = (Coweight, i64)>,
    ) -> Result<Self, SatakeError> {
        let mut t = Terms::new(p)?;
        for (key, c) in terms {
            t.add_signed(normalize_tau_key(d, &key)?, c);
        }
        Ok(HeckeElement(t))
    }
}

pub(crate) fn normalize_tau_key(d: &RootDatum, key: &Coweight) -> Result<Coweight, SatakeError> {
    d.check_coweight(key)?;
    Ok(if d.is_dominant(key) {
        key.clone()
    } else if d.is_antidominant(key) {
        d.w0(key)
    } else {
        d.dominate(key).0
    })
}

/// An element of `F_p[X_*(T)_-]`, keys anti-dominant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiDomElement(pub(crate) Terms);

element_common!(AntiDomElement);

impl AntiDomElement {
    pub fn monomial(d: &RootDatum, mu: &Coweight, p: u64) -> Result<Self, SatakeError> {
        Self::from_terms(d, p, [(mu.clone(), 1)])
    }

    pub fn from_terms(
        d: &RootDatum,
        p: u64,
        terms: impl IntoIterator<Item = (Coweight, i64)>,
    ) -> Result<Self, SatakeError> {
        let mut t = Terms::new(p)?;
        for (mu, c) in terms {
            d.check_coweight(&mu)?;
            if !d.is_antidominant(&mu) {
                return Err(SatakeError::NotAntiDominant(mu));
            }
            t.add_signed(mu, c);
        }
        Ok(AntiDomElement(t))
    }

    /// Product in the monoid algebra `F_p[X_*(T)_-]`.
    pub fn mul(&self, other: &Self) -> Result<Self, SatakeError> {
        self.0.monoid_mul(&other.0).map(AntiDomElement)
    }
}

/// A finite sum of pure tensors `[IC_a] (x) [IC_b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K0Tensor {
    p: u64,
    terms: BTreeMap<(Coweight, Coweight), u64>,
}

impl K0Tensor {
    pub(crate) fn new(p: u64) -> Self {
        K0Tensor {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn add_term(&mut self, a: Coweight, b: Coweight, c: u64) {
        let p = self.p;
        let e = self.terms.entry((a, b)).or_insert(0);
        *e = (*e + c) % p;
        self.terms.retain(|_, v| *v != 0);
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &Coweight, u64)> + '_ {
        self.terms.iter().map(|((a, b), &c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub(crate) fn collect_keys(t: &Terms) -> Vec<Coweight> {
    t.iter().map(|(k, _)| k.clone()).collect()
}
