use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ppart_core::algebra::{CPoly, Family};
use ppart_core::combinatorics::{
    interlacing_from_multirect, interlacing_from_partition, multirect_from_interlacing, partition_from_interlacing,
    Composition, InterlacingCoords, MultirectCoords, Partition, SetComposition,
};
use ppart_core::json::luoto_terms;
use ppart_core::posets::{PosetSpec, RankedPoset};
use ppart_core::qsym::{check_sx_membership, f_p, monomial_m, monomial_m_virtual, qsym_expand, VirtualAlphabet};
use ppart_core::report::CheckReport;
use ppart_core::superqsym::{check_spq_membership, n_p, verify_isomorphism_roundtrip};
use ppart_core::verify::{self, RunReport, VerifyAllParams};
use ppart_core::wqsym::{bold_f_p, bold_n_p, luoto_expand, luoto_expand_poset, luoto_product, splitting_expand, wq_expand};
use ppart_core::wqsym::WQElem;
use ppart_core::Error;

#[derive(Parser)]
#[command(name = "ppart", version, about = "Exact P-partition generating series and their identities")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct PosetArg {
    /// Poset JSON: a file path, `-` for stdin, or an inline object.
    #[arg(long)]
    poset: String,
}

#[derive(Subcommand)]
enum Command {
    /// One-alphabet series F_P truncated to x_1..x_N.
    Fp {
        #[command(flatten)]
        poset: PosetArg,
        /// Number of variables (defaults to the poset size).
        #[arg(long)]
        vars: Option<usize>,
        /// Print the monomial-basis expansion instead of the polynomial.
        #[arg(long)]
        qsym: bool,
    },
    /// Two-alphabet series N_P at level m.
    Np {
        #[command(flatten)]
        poset: PosetArg,
        #[arg(long)]
        m: usize,
    },
    /// Noncommutative F_P in letters a_1..a_k.
    Boldfp {
        #[command(flatten)]
        poset: PosetArg,
        /// Number of letters (defaults to the poset size).
        #[arg(long)]
        k: Option<usize>,
        /// Print the packed-word expansion instead of the polynomial.
        #[arg(long)]
        packed: bool,
    },
    /// Noncommutative N_P at level m in letters b_i, d_i.
    Boldnp {
        #[command(flatten)]
        poset: PosetArg,
        #[arg(long)]
        m: usize,
    },
    /// Monomial quasi-symmetric function M_I in x_1..x_N.
    Mi {
        /// Composition, e.g. '[2,1]'.
        #[arg(long)]
        composition: String,
        #[arg(long)]
        vars: usize,
    },
    /// M_I on the virtual alphabet X_m, in x_1..x_{2m+1}.
    MiVirtual {
        #[arg(long)]
        composition: String,
        #[arg(long)]
        m: usize,
    },
    /// Change of variables x -> (p, q) at level m.
    SubstPq {
        /// Polynomial JSON in x_1..x_{2m+1}: a file path, `-`, or inline.
        #[arg(long)]
        poly: String,
        #[arg(long)]
        m: usize,
    },
    /// Interlacing and multirectangular coordinates of a diagram.
    Coords {
        /// Partition, e.g. '[4,4,2]'.
        #[arg(long, group = "diagram")]
        partition: Option<String>,
        /// Interlacing coordinates, e.g. '[4,2,0,-1,-3]'.
        #[arg(long, group = "diagram")]
        interlacing: Option<String>,
        /// Multirectangular coordinates, e.g. '{"p":[2,1,-3],"q":[2,2]}'.
        #[arg(long, group = "diagram")]
        multirect: Option<String>,
    },
    /// Expansion of bold F_P (or of a packed-word element) in the Luoto basis.
    LuotoExpand {
        /// Poset JSON: a file path, `-`, or inline.
        #[arg(long, group = "input")]
        poset: Option<String>,
        /// Packed-word element JSON, e.g. '{"11":1,"12":1}'.
        #[arg(long, group = "input")]
        wq: Option<String>,
        /// Also run the splitting count and fail unless it agrees.
        #[arg(long)]
        oracle: bool,
    },
    /// Product of two Luoto basis elements, expanded in the basis.
    LuotoProduct {
        /// Set composition JSON, e.g. '[[1],[2]]'.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// First functional equation on the family m -> M_I(X_m) or on a given family.
    CheckSx {
        #[arg(long, group = "family_source")]
        composition: Option<String>,
        /// JSON array of polynomials indexed by m = 0, 1, ...
        #[arg(long, group = "family_source")]
        family: Option<String>,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
    },
    /// Second functional equation on m -> N_P, on the image of m -> M_I(X_m),
    /// or on a given family.
    CheckSpq {
        #[arg(long, group = "family_source")]
        poset: Option<String>,
        #[arg(long, group = "family_source")]
        composition: Option<String>,
        #[arg(long, group = "family_source")]
        family: Option<String>,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
    },
    /// Main identity on every ranked poset up to n_max and on random posets.
    VerifyMain {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        m_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random posets with 5 or 6 elements.
        #[arg(long, default_value_t = 200)]
        random: usize,
    },
    /// The full verification battery.
    VerifyAll {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        m_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        random: usize,
    },
}

/// What a command produced: a JSON value with its text rendering, and
/// whether a verification failed.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, failed: false }
    }
}

fn read_source(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn parse<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Error> {
    Ok(serde_json::from_str(&read_source(arg)?)?)
}

fn load_poset(arg: &str) -> Result<RankedPoset, Error> {
    RankedPoset::from_spec(&parse::<PosetSpec>(arg)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<Value, Error> {
    Ok(serde_json::to_value(v)?)
}

fn poly_output(f: &CPoly) -> Result<Output, Error> {
    Ok(Output::ok(to_json(f)?, f.to_string()))
}

fn check_output(report: &CheckReport) -> Result<Output, Error> {
    let pass = report.all_pass();
    let json = json!({"pass": pass, "cells": to_json(&report.cells)?});
    let mut text = format!("{}\n", if pass { "PASS" } else { "FAIL" });
    for c in &report.cells {
        let i = c.i.map_or(String::new(), |i| format!(" i={i}"));
        text += &format!("  m={}{i} {}: {}\n", c.m, c.equation, if c.pass { "pass" } else { "FAIL" });
    }
    Ok(Output { json, text, failed: !pass })
}

fn run_report_output(report: &RunReport) -> Result<Output, Error> {
    eprintln!("{}: finished in {:.2?}", report.command, report.elapsed);
    Ok(Output { json: to_json(report)?, text: report.to_text(), failed: !report.pass })
}

fn expansion_text(terms: &std::collections::BTreeMap<SetComposition, i64>) -> String {
    terms.iter().map(|(k, c)| format!("{c} * F{k}\n")).collect()
}

fn run(cmd: Command) -> Result<Output, Error> {
    match cmd {
        Command::Fp { poset, vars, qsym } => {
            let p = load_poset(&poset.poset)?;
            let nvars = vars.unwrap_or(p.size());
            let f = f_p(&p, nvars);
            if qsym {
                let e = qsym_expand(&f, nvars)?;
                let text = e.terms().map(|(i, c)| format!("{c} * M{i}\n")).collect();
                return Ok(Output::ok(to_json(&e)?, text));
            }
            poly_output(&f)
        }
        Command::Np { poset, m } => poly_output(&n_p(&load_poset(&poset.poset)?, m).value),
        Command::Boldfp { poset, k, packed } => {
            let p = load_poset(&poset.poset)?;
            let k = k.unwrap_or(p.size());
            let f = bold_f_p(&p, k);
            if packed {
                let e = wq_expand(&f, k)?;
                let text = e.terms().map(|(u, c)| format!("{c} * M[{u}]\n")).collect();
                return Ok(Output::ok(to_json(&e)?, text));
            }
            Ok(Output::ok(to_json(&f)?, f.to_string()))
        }
        Command::Boldnp { poset, m } => {
            let f = bold_n_p(&load_poset(&poset.poset)?, m);
            Ok(Output::ok(to_json(&f)?, f.to_string()))
        }
        Command::Mi { composition, vars } => poly_output(&monomial_m(&parse::<Composition>(&composition)?, vars)),
        Command::MiVirtual { composition, m } => {
            poly_output(&monomial_m_virtual(&parse::<Composition>(&composition)?, m).value)
        }
        Command::SubstPq { poly, m } => {
            let f: CPoly = parse(&poly)?;
            if let Some(v) = f.variables().into_iter().find(|v| v.family != Family::X || v.index > 2 * m + 1) {
                return Err(Error::Parse(format!("variable {v} is outside x_1..x_{}", 2 * m + 1)));
            }
            poly_output(&ppart_core::qsym::substitute_x_to_pq(&ppart_core::qsym::VirtualEval { m, value: f }))
        }
        Command::Coords { partition, interlacing, multirect } => coords(partition, interlacing, multirect),
        Command::LuotoExpand { poset, wq, oracle } => {
            let (expansion, split) = match (poset, wq) {
                (Some(poset), None) => {
                    let p = load_poset(&poset)?;
                    let split = if oracle { Some(splitting_expand(&p)?) } else { None };
                    (luoto_expand_poset(&p)?, split)
                }
                (None, Some(wq)) => {
                    if oracle {
                        return Err(Error::Parse("--oracle needs --poset".into()));
                    }
                    let e: WQElem = parse(&wq)?;
                    let n = e.degree().ok_or_else(|| Error::Parse("element must be nonzero and homogeneous".into()))?;
                    (luoto_expand(&e, n)?, None)
                }
                _ => return Err(Error::Parse("exactly one of --poset and --wq is required".into())),
            };
            let mut text = expansion_text(&expansion);
            let mut json = to_json(&luoto_terms(&expansion))?;
            let mut failed = false;
            if let Some(split) = split {
                failed = split != expansion;
                json = json!({"expansion": json, "splitting_agrees": !failed});
                text += &format!("splitting count {}\n", if failed { "DISAGREES" } else { "agrees" });
            }
            Ok(Output { json, text, failed })
        }
        Command::LuotoProduct { left, right } => {
            let (k1, k2): (SetComposition, SetComposition) = (parse(&left)?, parse(&right)?);
            let table = luoto_product(&k1, &k2)?;
            Ok(Output::ok(to_json(&luoto_terms(&table))?, expansion_text(&table)))
        }
        Command::CheckSx { composition, family, m_max } => {
            let family: Vec<CPoly> = match (composition, family) {
                (Some(c), None) => {
                    let i: Composition = parse(&c)?;
                    (0..=m_max).map(|m| VirtualAlphabet::new(m, i.weight()).monomial(&i)).collect()
                }
                (None, Some(f)) => parse(&f)?,
                _ => return Err(Error::Parse("exactly one of --composition and --family is required".into())),
            };
            ensure_family_len(&family, m_max)?;
            check_output(&check_sx_membership(&family, m_max))
        }
        Command::CheckSpq { poset, composition, family, m_max } => {
            let report = match (poset, composition, family) {
                (Some(p), None, None) => {
                    let p = load_poset(&p)?;
                    let family: Vec<CPoly> = (0..=m_max).map(|m| n_p(&p, m).value).collect();
                    check_spq_membership(&family, m_max)
                }
                (None, Some(c), None) => {
                    let i: Composition = parse(&c)?;
                    let family: Vec<CPoly> =
                        (0..=m_max).map(|m| VirtualAlphabet::new(m, i.weight()).monomial(&i)).collect();
                    verify_isomorphism_roundtrip(&family, m_max)
                }
                (None, None, Some(f)) => {
                    let family: Vec<CPoly> = parse(&f)?;
                    ensure_family_len(&family, m_max)?;
                    check_spq_membership(&family, m_max)
                }
                _ => return Err(Error::Parse("exactly one of --poset, --composition, --family is required".into())),
            };
            check_output(&report)
        }
        Command::VerifyMain { n_max, m_max, seed, random } => {
            run_report_output(&verify::verify_main(n_max, m_max, random, seed)?)
        }
        Command::VerifyAll { n_max, m_max, seed, random } => {
            let params = VerifyAllParams { n_max, m_max, seed, random_posets: random };
            run_report_output(&verify::verify_all(params)?)
        }
    }
}

fn ensure_family_len(family: &[CPoly], m_max: usize) -> Result<(), Error> {
    if family.len() <= m_max {
        return Err(Error::Parse(format!(
            "family has {} members, need levels 0..={m_max}",
            family.len()
        )));
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct CoordsOut {
    x: Vec<i64>,
    p: Vec<i64>,
    q: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<i64>,
}

fn coords(partition: Option<String>, interlacing: Option<String>, multirect: Option<String>) -> Result<Output, Error> {
    let (xs, extra) = match (partition, interlacing, multirect) {
        (Some(p), None, None) => (interlacing_from_partition(&parse::<Partition>(&p)?), None),
        (None, Some(x), None) => {
            let xs: InterlacingCoords = parse(&x)?;
            let lambda = partition_from_interlacing(&xs);
            (xs, Some(lambda))
        }
        (None, None, Some(pq)) => {
            let pq: MultirectCoords = parse(&pq)?;
            MultirectCoords::new(pq.p.clone(), pq.q.clone())?;
            if !pq.is_nonnegative() {
                return Err(Error::Parse("p_1..p_m and q_1..q_m must be nonnegative".into()));
            }
            let xs = interlacing_from_multirect(&pq);
            let lambda = partition_from_interlacing(&xs);
            (xs, Some(lambda))
        }
        _ => return Err(Error::Parse("exactly one of --partition, --interlacing, --multirect is required".into())),
    };
    let pq = multirect_from_interlacing(&xs);
    let mut text = format!("x = {:?}\np = {:?}\nq = {:?}\n", xs.values(), pq.p, pq.q);
    if let Some((lambda, c)) = &extra {
        text += &format!("partition = {:?}\ncenter = {c}\n", lambda.rows());
    }
    let out = CoordsOut {
        x: xs.values().to_vec(),
        p: pq.p,
        q: pq.q,
        partition: extra.as_ref().map(|(lambda, _)| lambda.rows().to_vec()),
        center: extra.map(|(_, c)| c),
    };
    Ok(Output::ok(to_json(&out)?, text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&out.json).expect("values serialize")),
                Format::Text => print!("{}", out.text),
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
