use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use spin::RwLock;

use super::element::{collect_keys, AntiDomElement, HeckeElement, K0Element, Terms};
use super::{k0_mul, SatakeError};
use crate::rootdatum::{Coweight, RootDatum};

/// Which cone a dominance interval lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cone {
    Dominant,
    AntiDominant,
}

/// The maps `T`, `alpha`, `S`, `S^{-1}` and the Hecke product for one root datum.
///
/// Holds a memo of Möbius values of the dominant-cone dominance order, shared by all
/// moduli and safe to use from several threads.
pub struct Satake<'d> {
    datum: &'d RootDatum,
    mobius: RwLock<BTreeMap<(Coweight, Coweight), i64>>,
}

impl<'d> Satake<'d> {
    pub fn new(datum: &'d RootDatum) -> Self {
        Satake {
            datum,
            mobius: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn datum(&self) -> &'d RootDatum {
        self.datum
    }

    /// `T([IC_mu]) = sum_{lambda <= mu} tau_lambda`, extended linearly.
    pub fn t_map(&self, x: &K0Element) -> Result<HeckeElement, SatakeError> {
        let mut out = Terms::new(x.p())?;
        for (mu, c) in x.terms() {
            for lambda in self.datum.strata_below(mu)? {
                out.add_term(lambda, c);
            }
        }
        Ok(HeckeElement(out))
    }

    /// The unique preimage under [`Satake::t_map`], by descending elimination.
    pub fn t_map_inverse(&self, f: &HeckeElement) -> Result<K0Element, SatakeError> {
        let p = f.p();
        let mut rest = f.clone();
        let mut out = K0Element::zero(p)?;
        while let Some(top) = self.maximal_key(&collect_keys(&rest.0)) {
            let c = rest.coeff(&top) as i64;
            let basis = K0Element::basis(self.datum, &top, p)?;
            out = out.add(&basis.scale(c))?;
            rest = rest.sub(&self.t_map(&basis)?.scale(c))?;
            debug_assert_eq!(rest.coeff(&top), 0);
        }
        Ok(out)
    }

    // Largest 2<rho,.>, which is dominance-maximal in the support.
    fn maximal_key(&self, keys: &[Coweight]) -> Option<Coweight> {
        keys.iter()
            .max_by(|a, b| {
                self.datum
                    .two_rho(a)
                    .cmp(&self.datum.two_rho(b))
                    .then_with(|| a.cmp(b))
            })
            .cloned()
    }

    /// `alpha(mu) = [IC_{w_0 mu}]`.
    pub fn alpha_map(&self, m: &AntiDomElement) -> Result<K0Element, SatakeError> {
        let mut out = Terms::new(m.p())?;
        for (mu, c) in m.terms() {
            let image = self.datum.w0(mu);
            assert!(
                self.datum.is_dominant(&image),
                "w_0 of {mu} is not dominant"
            );
            out.add_term(image, c);
        }
        Ok(K0Element(out))
    }

    pub fn alpha_inverse(&self, x: &K0Element) -> Result<AntiDomElement, SatakeError> {
        let mut out = Terms::new(x.p())?;
        for (mu, c) in x.terms() {
            out.add_term(self.datum.w0(mu), c);
        }
        Ok(AntiDomElement(out))
    }

    /// `S^{-1}(mu) = sum over anti-dominant lambda >= mu of tau_lambda`.
    pub fn satake_inverse(&self, m: &AntiDomElement) -> Result<HeckeElement, SatakeError> {
        let d = self.datum;
        let mut out = HeckeElement::zero(m.p())?;
        for (mu, c) in m.terms() {
            let above = self.antidominant_above(mu)?;
            let piece =
                HeckeElement::from_terms(d, m.p(), above.into_iter().map(|l| (l, c as i64)))?;
            out = out.add(&piece)?;
        }
        Ok(out)
    }

    /// Anti-dominant `lambda >= mu`, as `w_0` of the dominant strata below `w_0 mu`.
    fn antidominant_above(&self, mu: &Coweight) -> Result<Vec<Coweight>, SatakeError> {
        let d = self.datum;
        let top = d.w0(mu);
        Ok(d.strata_below(&top)?.iter().map(|k| d.w0(k)).collect())
    }

    /// The Satake transform `S`, inverse to [`Satake::satake_inverse`], by Möbius inversion.
    pub fn satake_transform(&self, f: &HeckeElement) -> Result<AntiDomElement, SatakeError> {
        let d = self.datum;
        let mut out = Terms::new(f.p())?;
        for (key, c) in f.terms() {
            let nu = d.w0(key);
            for lambda in self.antidominant_above(&nu)? {
                let m = self.mobius(&nu, &lambda, Cone::AntiDominant)?;
                let coeff = out.mul_coeff(c, out.reduce(m));
                out.add_term(lambda, coeff);
            }
        }
        Ok(AntiDomElement(out))
    }

    /// Convolution product, transported through `S`.
    pub fn hecke_mul(
        &self,
        f: &HeckeElement,
        g: &HeckeElement,
    ) -> Result<HeckeElement, SatakeError> {
        let sf = self.satake_transform(f)?;
        let sg = self.satake_transform(g)?;
        self.satake_inverse(&sf.mul(&sg)?)
    }

    /// Convolution product, transported through `T` and the Grothendieck ring.
    pub fn hecke_mul_via_k0(
        &self,
        f: &HeckeElement,
        g: &HeckeElement,
    ) -> Result<HeckeElement, SatakeError> {
        let x = self.t_map_inverse(f)?;
        let y = self.t_map_inverse(g)?;
        self.t_map(&k0_mul(&x, &y)?)
    }

    /// Möbius function of the dominance order restricted to the given cone.
    pub fn mobius(&self, nu: &Coweight, lambda: &Coweight, cone: Cone) -> Result<i64, SatakeError> {
        let d = self.datum;
        d.check_coweight(nu)?;
        d.check_coweight(lambda)?;
        match cone {
            Cone::Dominant => {
                d.require_dominant(nu)?;
                d.require_dominant(lambda)?;
                self.mobius_dominant(nu, lambda)
            }
            Cone::AntiDominant => {
                for c in [nu, lambda] {
                    if !d.is_antidominant(c) {
                        return Err(SatakeError::NotAntiDominant(c.clone()));
                    }
                }
                // w_0 reverses the order between the two cones
                self.mobius_dominant(&d.w0(lambda), &d.w0(nu))
            }
        }
    }

    fn mobius_dominant(&self, lo: &Coweight, hi: &Coweight) -> Result<i64, SatakeError> {
        let d = self.datum;
        if !d.dominance_leq(lo, hi) {
            return Err(SatakeError::NotComparable(lo.clone(), hi.clone()));
        }
        let key = (lo.clone(), hi.clone());
        if let Some(&v) = self.mobius.read().get(&key) {
            return Ok(v);
        }
        let mut interval: Vec<Coweight> = d
            .strata_below(hi)?
            .into_iter()
            .filter(|k| d.dominance_leq(lo, k))
            .collect();
        interval.sort_by_key(|k| d.two_rho(k));
        let mut values: Vec<i64> = Vec::with_capacity(interval.len());
        for (i, k) in interval.iter().enumerate() {
            let v = if k == lo {
                1
            } else {
                -(0..i)
                    .filter(|&j| d.dominance_leq(&interval[j], k))
                    .map(|j| values[j])
                    .sum::<i64>()
            };
            values.push(v);
        }
        let result = values[interval
            .iter()
            .position(|k| k == hi)
            .expect("hi in interval")];
        let mut memo = self.mobius.write();
        for (k, v) in interval.into_iter().zip(values) {
            memo.insert((lo.clone(), k), v);
        }
        Ok(result)
    }
}
