use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use satk_core::grcomb::{closure_report, dim_orbit, ext1_case};
use satk_core::oracle::{oracle_hecke_mul, FiniteField, OracleCaps};
use satk_core::satake::{k0_mul, monoid_is_group, TruncatedRepresentation};
use satk_core::{AntiDomElement, Cone, Coweight, HeckeElement, K0Element, RootDatum, Satake};

use crate::dto::{DatumDto, ElementDto, OracleCaseDto, OracleReportDto, StratumReportDto};
use crate::error::CliError;
use crate::input::{self, ElementArg};

#[derive(Debug, Parser)]
#[command(name = "satk", version, about = "Mod p Satake transform toolkit")]
struct Cli {
    /// Group family, e.g. GL2, SL3, PGL2, Sp4, SC-G2, AD-B3.
    #[arg(long, global = true)]
    group: Option<String>,
    /// JSON root datum file: {"rank", "simple_roots", "simple_coroots", "label"}.
    #[arg(long, global = true)]
    datum: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct MuArg {
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Debug, Args)]
struct UnaryArgs {
    #[arg(long)]
    p: Option<u64>,
    /// Coweight (coefficient 1) or element JSON.
    #[arg(long, allow_hyphen_values = true)]
    elem: String,
}

#[derive(Debug, Args)]
struct BinaryArgs {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    lhs: String,
    #[arg(long, allow_hyphen_values = true)]
    rhs: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the root datum.
    Group,
    /// Dominant coweights below mu, by decreasing dimension.
    Strata(MuArg),
    /// dim Gr_mu.
    Dim(MuArg),
    /// Stratification of Gr_{<=mu} with dimensions and component.
    Report(MuArg),
    /// Grothendieck ring operations.
    K0 {
        #[command(subcommand)]
        op: K0Op,
    },
    /// Spherical Hecke algebra operations.
    Hecke {
        #[command(subcommand)]
        op: HeckeOp,
    },
    /// Satake transform of a Hecke element.
    Satake(UnaryArgs),
    /// Inverse Satake transform of an anti-dominant element.
    SatakeInv(UnaryArgs),
    /// The map [IC_mu] -> sum of tau_lambda over lambda <= mu, or its inverse.
    Tmap {
        #[command(flatten)]
        args: UnaryArgs,
        #[arg(long)]
        inverse: bool,
    },
    /// Moebius function of the dominance order between nu <= lambda.
    Mobius {
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = ConeArg::Dominant)]
        cone: ConeArg,
    },
    /// Whether Ext^1(IC_mu, IC_lambda) is known to vanish.
    Ext1 {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Monoid of dominant coweights.
    Monoid {
        #[command(subcommand)]
        op: MonoidOp,
    },
    /// Lattice-counting cross-checks for GL_n.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Debug, Subcommand)]
enum K0Op {
    Mul(BinaryArgs),
}

#[derive(Debug, Subcommand)]
enum HeckeOp {
    Mul {
        #[command(flatten)]
        args: BinaryArgs,
        #[arg(long, value_enum, default_value_t = Via::Satake)]
        via: Via,
    },
}

#[derive(Debug, Subcommand)]
enum MonoidOp {
    IsGroup,
    /// Matrix of multiplication by elem on the span of a downward-closed set.
    Repr {
        /// Coweights as `2,0;1,1` or a JSON array of arrays.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[command(flatten)]
        args: UnaryArgs,
        /// Replace the set by its downward closure.
        #[arg(long)]
        close: bool,
    },
}

#[derive(Debug, Subcommand)]
enum OracleOp {
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        max_entry: i64,
        /// Hecke modulus; the characteristic of F_q by default.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = OracleCaps::default().max_depth)]
        max_depth: u32,
        #[arg(long, default_value_t = OracleCaps::default().max_q)]
        max_q: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConeArg {
    Dominant,
    AntiDominant,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Via {
    Satake,
    K0,
}

/// Exit code and standard output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output {
                    code: 0,
                    stdout: e.to_string(),
                };
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                return failure(CliError::usage("a subcommand is required; see --help"));
            }
            let msg = e.to_string();
            let summary: Vec<&str> = msg
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            return failure(CliError::usage(
                summary.join(" ").trim_start_matches("error: "),
            ));
        }
    };
    match execute(&cli) {
        Ok((value, code)) => Output {
            code,
            stdout: format!("{value}\n"),
        },
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> Output {
    Output {
        code: e.exit_code(),
        stdout: format!("{}\n", e.to_json()),
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn element_json<'a>(p: u64, terms: impl Iterator<Item = (&'a Coweight, u64)>) -> Value {
    to_value(ElementDto::from_terms(p, terms))
}

fn coweights_json(cs: &[Coweight]) -> Value {
    Value::from(cs.iter().map(|c| c.coords().to_vec()).collect::<Vec<_>>())
}

fn dominant(d: &RootDatum, arg: &str) -> Result<Coweight, CliError> {
    let c = input::coweight(arg)?;
    d.require_dominant(&c)?;
    Ok(c)
}

fn k0_elem(d: &RootDatum, p: u64, e: ElementArg) -> Result<K0Element, CliError> {
    Ok(K0Element::from_terms(d, p, e.terms)?)
}

fn hecke_elem(d: &RootDatum, p: u64, e: ElementArg) -> Result<HeckeElement, CliError> {
    Ok(HeckeElement::from_terms(d, p, e.terms)?)
}

fn anti_elem(d: &RootDatum, p: u64, e: ElementArg) -> Result<AntiDomElement, CliError> {
    Ok(AntiDomElement::from_terms(d, p, e.terms)?)
}

fn binary(args: &BinaryArgs) -> Result<(u64, ElementArg, ElementArg), CliError> {
    let l = input::element(&args.lhs)?;
    let r = input::element(&args.rhs)?;
    let p = input::modulus(args.p, &[&l, &r])?;
    Ok((p, l, r))
}

fn unary(args: &UnaryArgs) -> Result<(u64, ElementArg), CliError> {
    let e = input::element(&args.elem)?;
    let p = input::modulus(args.p, &[&e])?;
    Ok((p, e))
}

fn execute(cli: &Cli) -> Result<(Value, i32), CliError> {
    if let Command::Oracle {
        op:
            OracleOp::Verify {
                n,
                q,
                max_entry,
                p,
                max_depth,
                max_q,
            },
    } = &cli.command
    {
        let caps = OracleCaps {
            max_n: OracleCaps::default().max_n,
            max_depth: *max_depth,
            max_q: *max_q,
        };
        return oracle_verify(*n, *q, *max_entry, *p, caps);
    }
    let d = input::load_group(cli.group.as_deref(), cli.datum.as_deref())?;
    let s = Satake::new(&d);
    let value = match &cli.command {
        Command::Group => to_value(DatumDto::from(&d)),
        Command::Strata(MuArg { mu }) => {
            let report = closure_report(&d, &dominant(&d, mu)?)?;
            let strata: Vec<Coweight> = report.strata.iter().map(|s| s.lambda.clone()).collect();
            json!({ "mu": report.mu.coords(), "strata": coweights_json(&strata) })
        }
        Command::Dim(MuArg { mu }) => json!(dim_orbit(&d, &input::coweight(mu)?)?),
        Command::Report(MuArg { mu }) => to_value(StratumReportDto::from(&closure_report(
            &d,
            &dominant(&d, mu)?,
        )?)),
        Command::K0 {
            op: K0Op::Mul(args),
        } => {
            let (p, l, r) = binary(args)?;
            let x = k0_mul(&k0_elem(&d, p, l)?, &k0_elem(&d, p, r)?)?;
            element_json(p, x.terms())
        }
        Command::Hecke {
            op: HeckeOp::Mul { args, via },
        } => {
            let (p, l, r) = binary(args)?;
            let (f, g) = (hecke_elem(&d, p, l)?, hecke_elem(&d, p, r)?);
            let fg = match via {
                Via::Satake => s.hecke_mul(&f, &g)?,
                Via::K0 => s.hecke_mul_via_k0(&f, &g)?,
            };
            element_json(p, fg.terms())
        }
        Command::Satake(args) => {
            let (p, e) = unary(args)?;
            let m = s.satake_transform(&hecke_elem(&d, p, e)?)?;
            element_json(p, m.terms())
        }
        Command::SatakeInv(args) => {
            let (p, e) = unary(args)?;
            let f = s.satake_inverse(&anti_elem(&d, p, e)?)?;
            element_json(p, f.terms())
        }
        Command::Tmap { args, inverse } => {
            let (p, e) = unary(args)?;
            if *inverse {
                let x = s.t_map_inverse(&hecke_elem(&d, p, e)?)?;
                element_json(p, x.terms())
            } else {
                let f = s.t_map(&k0_elem(&d, p, e)?)?;
                element_json(p, f.terms())
            }
        }
        Command::Mobius { nu, lambda, cone } => {
            let (nu, lambda) = (input::coweight(nu)?, input::coweight(lambda)?);
            let (cone, name) = match cone {
                ConeArg::Dominant => (Cone::Dominant, "dominant"),
                ConeArg::AntiDominant => (Cone::AntiDominant, "anti-dominant"),
            };
            let value = s.mobius(&nu, &lambda, cone)?;
            json!({ "nu": nu.coords(), "lambda": lambda.coords(), "cone": name, "value": value })
        }
        Command::Ext1 { mu, lambda } => {
            let (mu, lambda) = (input::coweight(mu)?, input::coweight(lambda)?);
            let case = ext1_case(&d, &mu, &lambda)?;
            json!({
                "mu": mu.coords(),
                "lambda": lambda.coords(),
                "case": case.as_str(),
                "vanishing_guaranteed": case.vanishes(),
            })
        }
        Command::Monoid {
            op: MonoidOp::IsGroup,
        } => json!({ "label": d.label(), "is_group": monoid_is_group(&d) }),
        Command::Monoid {
            op: MonoidOp::Repr { set, args, close },
        } => {
            let mut set = input::coweight_set(set)?;
            for c in &set {
                d.require_dominant(c)?;
            }
            if *close {
                let mut closed = std::collections::BTreeSet::new();
                for c in &set {
                    closed.extend(d.strata_below(c)?);
                }
                set = closed.into_iter().collect();
            }
            let (p, e) = unary(args)?;
            let rep = TruncatedRepresentation::new(&d, &set, &k0_elem(&d, p, e)?)?;
            json!({
                "p": p,
                "basis": coweights_json(rep.basis()),
                "matrix": rep.matrix(),
                "upper_triangular": rep.is_upper_triangular(),
                "strictly_upper_triangular": rep.is_strictly_upper_triangular(),
                "nilpotency_index": rep.nilpotency_index(),
            })
        }
        Command::Oracle { .. } => unreachable!("handled above"),
    };
    Ok((value, 0))
}

fn oracle_verify(
    n: usize,
    q: u32,
    max_entry: i64,
    p: Option<u64>,
    caps: OracleCaps,
) -> Result<(Value, i32), CliError> {
    if max_entry < 0 {
        return Err(CliError::usage("--max-entry must be nonnegative"));
    }
    let field = FiniteField::new(q)?;
    let p = p.unwrap_or(field.characteristic() as u64);
    let d = input::load_group(Some(&format!("GL{n}")), None)?;
    let s = Satake::new(&d);
    let keys = gl_dominant_box(n, max_entry);
    // fail early on caps and modulus before fanning out
    let probe = HeckeElement::unit(&d, p)?;
    oracle_hecke_mul(n, &field, &probe, &probe, &caps)?;
    if let Some(top) = keys.last() {
        caps.check(n, top.coords()[0] as u32, q)?;
    }
    let pairs: Vec<(&Coweight, &Coweight)> = keys
        .iter()
        .flat_map(|a| keys.iter().map(move |b| (a, b)))
        .collect();
    let cases: Vec<OracleCaseDto> = pairs
        .par_iter()
        .map(|(mu, lambda)| -> Result<OracleCaseDto, CliError> {
            let x = HeckeElement::tau(&d, mu, p)?;
            let y = HeckeElement::tau(&d, lambda, p)?;
            let oracle = oracle_hecke_mul(n, &field, &x, &y, &caps)?;
            let formula = s.hecke_mul(&x, &y)?;
            Ok(OracleCaseDto {
                mu: mu.coords().to_vec(),
                lambda: lambda.coords().to_vec(),
                product_oracle: ElementDto::from_terms(p, oracle.terms()).terms,
                product_formula: ElementDto::from_terms(p, formula.terms()).terms,
                matches: oracle == formula,
            })
        })
        .collect::<Result<_, _>>()?;
    let ok = cases.iter().all(|c| c.matches);
    let report = OracleReportDto {
        group: "GL".into(),
        n,
        q,
        p,
        cases,
    };
    Ok((to_value(report), if ok { 0 } else { 1 }))
}

/// Weakly decreasing vectors with entries in `[0, max]`, in lexicographic order.
fn gl_dominant_box(n: usize, max: i64) -> Vec<Coweight> {
    fn rec(n: usize, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Coweight>) {
        if prefix.len() == n {
            out.push(Coweight::new(prefix.clone()));
            return;
        }
        let hi = prefix.last().copied().unwrap_or(max);
        for x in 0..=hi {
            prefix.push(x);
            rec(n, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out.sort();
    out
}
