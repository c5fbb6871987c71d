//! Parsing of command-line values: groups, coweights, coweight sets and elements.
//!
//! Anything that takes a coweight or an element also accepts inline JSON (starting with `[` or
//! `{`) or `@path` naming a JSON file.

use std::fs;

use serde::Deserialize;
use serde_json::Value;

use satk_core::rootdatum::{build_root_datum_with_cap, DEFAULT_WEYL_CAP};
use satk_core::{Coweight, Family, RootDatum};

use crate::dto::{DatumDto, ElementDto, TermDto};
use crate::error::CliError;

pub const WEYL_CAP_ENV: &str = "SATK_WEYL_CAP";

pub fn weyl_cap() -> Result<usize, CliError> {
    match std::env::var(WEYL_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{WEYL_CAP_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_WEYL_CAP),
    }
}

pub fn load_group(group: Option<&str>, datum: Option<&str>) -> Result<RootDatum, CliError> {
    let cap = weyl_cap()?;
    match (group, datum) {
        (Some(g), None) => {
            let family = Family::parse(g).map_err(|e| CliError::usage(e.to_string()))?;
            Ok(build_root_datum_with_cap(family, cap)?)
        }
        (None, Some(path)) => {
            let text = read_file(path.strip_prefix('@').unwrap_or(path))?;
            let dto: DatumDto =
                serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{path}: {e}")))?;
            let label = if dto.label.is_empty() {
                "custom".to_string()
            } else {
                dto.label
            };
            Ok(RootDatum::new(
                dto.rank,
                dto.simple_roots,
                dto.simple_coroots,
                label,
                cap,
            )?)
        }
        _ => Err(CliError::usage("give exactly one of --group or --datum")),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{path}: {e}")))
}

/// Resolves `@path` and inline JSON to a JSON value; `None` for plain text.
fn as_json(arg: &str) -> Result<Option<Value>, CliError> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        read_file(path)?
    } else if arg.trim_start().starts_with(['[', '{']) {
        arg.to_string()
    } else {
        return Ok(None);
    };
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| CliError::usage(format!("invalid JSON in {arg:?}: {e}")))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::usage(format!("expected {what}: {e}")))
}

fn parse_csv(s: &str) -> Result<Coweight, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Coweight::new(Vec::new()));
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map(Coweight::new)
        .map_err(|_| CliError::usage(format!("cannot parse coweight {s:?}")))
}

/// `1,-1`, `[1,-1]` or `@file.json`.
pub fn coweight(arg: &str) -> Result<Coweight, CliError> {
    match as_json(arg)? {
        Some(v) => from_value::<Vec<i64>>(v, "an integer array").map(Coweight::new),
        None => parse_csv(arg),
    }
}

/// `2,0;1,1`, `[[2,0],[1,1]]` or `@file.json`.
pub fn coweight_set(arg: &str) -> Result<Vec<Coweight>, CliError> {
    match as_json(arg)? {
        Some(v) => Ok(
            from_value::<Vec<Vec<i64>>>(v, "an array of integer arrays")?
                .into_iter()
                .map(Coweight::new)
                .collect(),
        ),
        None => arg
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(parse_csv)
            .collect(),
    }
}

/// An element argument: a single coweight (coefficient 1) or an element object.
#[derive(Debug, Clone)]
pub struct ElementArg {
    pub p: Option<u64>,
    pub terms: Vec<(Coweight, i64)>,
}

pub fn element(arg: &str) -> Result<ElementArg, CliError> {
    let basis = |c: Coweight| ElementArg {
        p: None,
        terms: vec![(c, 1)],
    };
    match as_json(arg)? {
        Some(v @ Value::Object(_)) => {
            let dto: ElementDto = from_value(v, "an element object")?;
            Ok(ElementArg {
                p: Some(dto.p),
                terms: dto
                    .terms
                    .into_iter()
                    .map(|TermDto { coweight, coeff }| (Coweight::new(coweight), coeff))
                    .collect(),
            })
        }
        Some(v) => from_value::<Vec<i64>>(v, "an integer array or element object")
            .map(|c| basis(Coweight::new(c))),
        None => parse_csv(arg).map(basis),
    }
}

/// The modulus from `--p` and the elements, which must all agree.
pub fn modulus(flag: Option<u64>, elems: &[&ElementArg]) -> Result<u64, CliError> {
    let mut p = flag;
    for e in elems {
        match (p, e.p) {
            (Some(a), Some(b)) if a != b => {
                return Err(CliError::usage(format!(
                    "modulus {a} conflicts with element modulus {b}"
                )))
            }
            (None, Some(b)) => p = Some(b),
            _ => {}
        }
    }
    p.ok_or_else(|| CliError::usage("--p is required"))
}
