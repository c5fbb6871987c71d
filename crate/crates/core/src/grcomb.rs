//! Dimension and stratification bookkeeping for affine Schubert varieties `Gr_{<=mu}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::rootdatum::{Coweight, DatumError, RootDatum};

/// `dim Gr_mu = 2<rho, mu>`.
pub fn dim_orbit(d: &RootDatum, mu: &Coweight) -> Result<i64, DatumError> {
    d.require_dominant(mu)?;
    Ok(d.two_rho(mu))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumEntry {
    pub lambda: Coweight,
    pub dim: i64,
    pub codim: i64,
}

/// The stratification `Gr_{<=mu} = union of Gr_lambda` with dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    pub mu: Coweight,
    pub dim: i64,
    /// Sorted by decreasing dimension, ties by decreasing coweight.
    pub strata: Vec<StratumEntry>,
    pub component: Vec<i64>,
}

pub fn closure_report(d: &RootDatum, mu: &Coweight) -> Result<StratumReport, DatumError> {
    let dim = dim_orbit(d, mu)?;
    let mut strata: Vec<StratumEntry> = d
        .strata_below(mu)?
        .into_iter()
        .map(|lambda| {
            let ldim = d.two_rho(&lambda);
            StratumEntry {
                codim: dim - ldim,
                dim: ldim,
                lambda,
            }
        })
        .collect();
    for s in &strata {
        assert!(s.codim >= 0, "stratum {} above {}", s.lambda, mu);
        assert!(s.lambda == *mu || s.codim > 0);
    }
    strata.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| b.lambda.cmp(&a.lambda)));
    Ok(StratumReport {
        mu: mu.clone(),
        dim,
        strata,
        component: d.component_class(mu),
    })
}

/// Whether every proper stratum of `Gr_{<=mu}` has codimension at least 2.
pub fn codim_at_least_two(d: &RootDatum, mu: &Coweight) -> Result<bool, DatumError> {
    let report = closure_report(d, mu)?;
    Ok(report
        .strata
        .iter()
        .all(|s| s.lambda == *mu || s.codim >= 2))
}

/// Canonical residue of `mu` modulo the coroot lattice; indexes connected components of `Gr`.
pub fn component_class(d: &RootDatum, mu: &Coweight) -> Vec<i64> {
    d.component_class(mu)
}

/// Checks that `dim Gr_mu mod 2` only depends on the component of `mu`, for all dominant `mu`
/// with `dim Gr_mu <= bound`. Groups with a center of positive dimension are scanned over
/// coordinates in `[-bound, bound]`.
pub fn parity_constant_on_component(d: &RootDatum, bound: i64) -> bool {
    let mut parity: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for mu in d.dominant_coweights_up_to(bound, bound) {
        let p = d.two_rho(&mu).rem_euclid(2);
        if *parity.entry(d.component_class(&mu)).or_insert(p) != p {
            return false;
        }
    }
    true
}

/// Why `Ext^1(IC_mu, IC_lambda)` is known to vanish, or that it is not known to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ext1Case {
    /// `mu > lambda`
    Greater,
    /// `mu = lambda`
    Equal,
    /// `mu` and `lambda` are incomparable
    Incomparable,
    /// `mu < lambda`: vanishing is not guaranteed.
    NotGuaranteed,
}

impl Ext1Case {
    pub fn vanishes(self) -> bool {
        self != Ext1Case::NotGuaranteed
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Ext1Case::Greater => "greater",
            Ext1Case::Equal => "equal",
            Ext1Case::Incomparable => "incomparable",
            Ext1Case::NotGuaranteed => "not-guaranteed",
        }
    }
}

pub fn ext1_case(d: &RootDatum, mu: &Coweight, lambda: &Coweight) -> Result<Ext1Case, DatumError> {
    d.require_dominant(mu)?;
    d.require_dominant(lambda)?;
    Ok(if mu == lambda {
        Ext1Case::Equal
    } else if d.dominance_leq(lambda, mu) {
        Ext1Case::Greater
    } else if d.dominance_leq(mu, lambda) {
        Ext1Case::NotGuaranteed
    } else {
        Ext1Case::Incomparable
    })
}

pub fn ext1_vanishing_guaranteed(
    d: &RootDatum,
    mu: &Coweight,
    lambda: &Coweight,
) -> Result<bool, DatumError> {
    ext1_case(d, mu, lambda).map(Ext1Case::vanishes)
}

/// Dimension of the convolution variety `Gr_{<=mu_1} x~ ... x~ Gr_{<=mu_k}` and the
/// dominant coweight `mu_1 + ... + mu_k` indexing the image of the convolution map.
pub fn convolution_dim(d: &RootDatum, mus: &[Coweight]) -> Result<(i64, Coweight), DatumError> {
    let mut total = 0;
    let mut image = Coweight::zero(d.rank());
    for mu in mus {
        total += dim_orbit(d, mu)?;
        image = &image + mu;
    }
    // the convolution map is birational onto Gr_{<=image}
    assert_eq!(dim_orbit(d, &image)?, total);
    Ok((total, image))
}
