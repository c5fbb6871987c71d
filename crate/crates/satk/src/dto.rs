//! JSON shapes for data exchanged on the command line.

use serde::{Deserialize, Serialize};

use satk_core::{Coweight, RootDatum, StratumReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumDto {
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    #[serde(default)]
    pub label: String,
}

impl From<&RootDatum> for DatumDto {
    fn from(d: &RootDatum) -> Self {
        DatumDto {
            rank: d.rank(),
            simple_roots: d.simple_roots().to_vec(),
            simple_coroots: d.simple_coroots().to_vec(),
            label: d.label().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub coweight: Vec<i64>,
    pub coeff: i64,
}

/// `{"p": .., "terms": [{"coweight": [..], "coeff": ..}]}`, terms in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDto {
    pub p: u64,
    pub terms: Vec<TermDto>,
}

impl ElementDto {
    pub fn from_terms<'a>(p: u64, terms: impl Iterator<Item = (&'a Coweight, u64)>) -> Self {
        ElementDto {
            p,
            terms: terms
                .map(|(c, v)| TermDto {
                    coweight: c.coords().to_vec(),
                    coeff: v as i64,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDto {
    pub lambda: Vec<i64>,
    pub dim: i64,
    pub codim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReportDto {
    pub mu: Vec<i64>,
    pub dim: i64,
    pub strata: Vec<StratumDto>,
    pub component: Vec<i64>,
}

impl From<&StratumReport> for StratumReportDto {
    fn from(r: &StratumReport) -> Self {
        StratumReportDto {
            mu: r.mu.coords().to_vec(),
            dim: r.dim,
            strata: r
                .strata
                .iter()
                .map(|s| StratumDto {
                    lambda: s.lambda.coords().to_vec(),
                    dim: s.dim,
                    codim: s.codim,
                })
                .collect(),
            component: r.component.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCaseDto {
    pub mu: Vec<i64>,
    pub lambda: Vec<i64>,
    pub product_oracle: Vec<TermDto>,
    pub product_formula: Vec<TermDto>,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReportDto {
    pub group: String,
    pub n: usize,
    pub q: u32,
    pub p: u64,
    pub cases: Vec<OracleCaseDto>,
}
