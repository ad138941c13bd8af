//! The `selfref` command line.
//!
//! Exit status: 0 success, 1 usage error, 2 domain error (unparsable input,
//! capture, not a code, rejected proof), 3 budget exhausted where a definite
//! answer was asked for.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use crate::coding::{self, godel_decode, godel_encode, GodelCode};
use crate::diagonal::{diagonalize, verify_fixed_point};
use crate::eval::{eval_formula, Assignment, Truth};
use crate::finite_lab::{ModelReport, ParadoxKind};
use crate::gallery::{lnp_instance, Family};
use crate::kernel::{self, check_proof, decode_proof, encode_proof, parse_proof, search_proof};
use crate::registry::{eval_defined, DefinedValue, Registry};
use crate::syntax::{
    classify, classify_delta0, classify_sigma1, parse_expr, parse_formula, parse_term,
};
use crate::syntax::{Expr, Term, Var};

pub const DEFAULT_BUDGET: u64 = 10_000;

#[derive(Parser, Debug)]
#[command(
    name = "selfref",
    version,
    about = "Gödel coding and self-referential sentences"
)]
struct Cli {
    /// Search steps for unbounded quantifiers and proof search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an expression and describe it.
    Parse { expr: String },
    /// Print an expression in canonical form.
    Print { expr: String },
    /// Gödel number of an expression.
    Encode { expr: String },
    /// Expression (or, with --seq, sequence) coded by a number.
    Decode {
        code: String,
        #[arg(long)]
        seq: bool,
        /// First index shown by --seq.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        index_base: u8,
    },
    /// Syntactic Δ0 / Σ1 classification.
    Classify { formula: String },
    /// Substitute a term for a variable.
    Subst {
        formula: String,
        var: String,
        term: String,
    },
    /// Evaluate in the standard model.
    Eval {
        formula: String,
        /// Variable values, e.g. `--assign v0=3`.
        #[arg(long = "assign", value_name = "VAR=N")]
        assign: Vec<String>,
    },
    /// Check a proof given as text (a path, or `-` for stdin) or as a code.
    CheckProof {
        path: Option<String>,
        #[arg(long, conflicts_with = "path")]
        code: Option<String>,
    },
    /// Search for a proof.
    SearchProof { formula: String },
    /// Diagonalize φ(x, y) into ψ(x).
    Diagonalize {
        formula: String,
        #[arg(long, default_value = "v0")]
        x: String,
        #[arg(long, default_value = "v1")]
        y: String,
    },
    /// Self-referential sentence families.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Brute-force models of the finite paradoxes.
    FiniteLab(FiniteLab),
    /// Defined symbols.
    Registry {
        #[command(subcommand)]
        action: Option<RegistryAction>,
    },
}

#[derive(Subcommand, Debug)]
enum GalleryAction {
    /// Build P, Q, R or F.
    Build {
        family: String,
        /// Instances to include (default 0 and 1).
        #[arg(long = "instance", value_name = "K")]
        instances: Vec<u64>,
    },
    /// Least number principle instance for P(x).
    Lnp {
        formula: String,
        #[arg(long, default_value = "v0")]
        x: String,
    },
}

#[derive(Args, Debug)]
struct FiniteLab {
    /// 1 someone is wrong, 2 someone else is wrong, 3 at least k are wrong.
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    /// Print every model.
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand, Debug)]
enum RegistryAction {
    /// Apply a defined symbol to numbers.
    Eval { name: String, args: Vec<String> },
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
    /// Budget exhausted; output so far still goes to stdout.
    Budget {
        stdout: String,
        message: String,
    },
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

/// Runs the command line `argv` (program name first).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(m)) => Outcome {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Domain(m)) => Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Budget { stdout, message }) => Outcome {
            status: 3,
            stdout,
            stderr: format!("{message}\n"),
        },
    }
}

fn parse_var(s: &str) -> Result<Var, Failure> {
    match parse_term(s) {
        Ok(Term::Var(v)) => Ok(v),
        _ => Err(Failure::Usage(format!("{s:?} is not a variable"))),
    }
}

fn parse_code(s: &str) -> Result<GodelCode, Failure> {
    s.trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("{s:?} is not a decimal number")))
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let budget = cli.budget;
    let json = cli.json;
    let mut out = String::new();
    match &cli.command {
        Command::Parse { expr } => {
            let e = parse_expr(expr).map_err(domain)?;
            let (kind, free, symbols) = match &e {
                Expr::Formula(f) => ("formula", f.free_vars(), f.symbol_count()),
                Expr::Term(t) => ("term", t.free_vars(), t.symbol_count()),
            };
            let free: Vec<String> = free.iter().map(Var::to_string).collect();
            if json {
                out = json_line(json!({
                    "kind": kind,
                    "text": e.to_string(),
                    "freeVars": free,
                    "symbols": symbols,
                    "code": godel_encode(&e),
                }));
            } else {
                let _ = writeln!(out, "kind: {kind}");
                let _ = writeln!(out, "text: {e}");
                let _ = writeln!(out, "freeVars: {}", free.join(" "));
                let _ = writeln!(out, "symbols: {symbols}");
            }
        }
        Command::Print { expr } => {
            let e = parse_expr(expr).map_err(domain)?;
            out = format!("{e}\n");
        }
        Command::Encode { expr } => {
            let e = parse_expr(expr).map_err(domain)?;
            let c = godel_encode(&e);
            out = if json {
                json_line(json!({ "text": e.to_string(), "code": c }))
            } else {
                format!("{c}\n")
            };
        }
        Command::Decode {
            code,
            seq,
            index_base,
        } => {
            let c = parse_code(code)?;
            if *seq {
                let elems = coding::seq_decode(&c).map_err(domain)?;
                if json {
                    let v: Vec<String> = elems.iter().map(BigUint::to_string).collect();
                    out = json_line(json!({ "indexBase": index_base, "elements": v }));
                } else {
                    for (i, e) in elems.iter().enumerate() {
                        let _ = writeln!(out, "{}: {e}", i + usize::from(*index_base));
                    }
                }
            } else {
                let e = godel_decode(&c).map_err(domain)?;
                out = format!("{e}\n");
            }
        }
        Command::Classify { formula } => {
            let f = parse_formula(formula).map_err(domain)?;
            out = if json {
                json_line(json!({
                    "classification": classify(&f),
                    "delta0": classify_delta0(&f),
                    "sigma1": classify_sigma1(&f),
                }))
            } else {
                format!("{}\n", classify(&f))
            };
        }
        Command::Subst { formula, var, term } => {
            let f = parse_formula(formula).map_err(domain)?;
            let v = parse_var(var)?;
            let t = parse_term(term).map_err(domain)?;
            out = format!("{}\n", f.substitute(v, &t).map_err(domain)?);
        }
        Command::Eval { formula, assign } => {
            let f = parse_formula(formula).map_err(domain)?;
            let mut a = Assignment::new();
            for pair in assign {
                let (v, n) = pair
                    .split_once('=')
                    .ok_or_else(|| Failure::Usage(format!("expected VAR=N, got {pair:?}")))?;
                let n: BigUint = n
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("{n:?} is not a number")))?;
                a.insert(parse_var(v.trim())?, n);
            }
            let r = eval_formula(&f, &a, budget).map_err(domain)?;
            if json {
                out = json_line(serde_json::to_value(&r).expect("serializable"));
            } else {
                let _ = writeln!(out, "value: {}", r.value);
                if let Some(w) = &r.witness {
                    let _ = writeln!(out, "witness: {w}");
                }
                let _ = writeln!(out, "steps: {}", r.steps);
            }
            if r.value == Truth::Unknown {
                return Err(Failure::Budget {
                    stdout: out,
                    message: format!("undetermined within budget {budget}"),
                });
            }
        }
        Command::CheckProof { path, code } => {
            let proof = match (path, code) {
                (_, Some(c)) => decode_proof(&parse_code(c)?).map_err(domain)?,
                (Some(p), None) => {
                    let text = if p == "-" {
                        std::io::read_to_string(std::io::stdin())
                    } else {
                        std::fs::read_to_string(p)
                    }
                    .map_err(|e| Failure::Usage(format!("{p}: {e}")))?;
                    parse_proof(&text).map_err(domain)?
                }
                (None, None) => {
                    return Err(Failure::Usage("give a proof file or --code".into()));
                }
            };
            check_proof(&proof).map_err(|r| Failure::Domain(format!("rejected: {r}")))?;
            let conclusion = proof.conclusion().expect("checked proofs are nonempty");
            if json {
                out = json_line(json!({
                    "accepted": true,
                    "conclusion": conclusion.to_string(),
                    "lines": proof.lines.len(),
                    "code": encode_proof(&proof),
                }));
            } else {
                let _ = writeln!(out, "accepted");
                let _ = writeln!(out, "conclusion: {conclusion}");
                let _ = writeln!(out, "lines: {}", proof.lines.len());
            }
        }
        Command::SearchProof { formula } => {
            let f = parse_formula(formula).map_err(domain)?;
            match search_proof(&f, budget) {
                Some(p) => {
                    out = if json {
                        json_line(json!({
                            "found": true,
                            "proof": p.to_string(),
                            "code": kernel::encode_proof(&p),
                        }))
                    } else {
                        p.to_string()
                    };
                }
                None => {
                    return Err(Failure::Budget {
                        stdout: if json {
                            json_line(json!({ "found": false }))
                        } else {
                            String::new()
                        },
                        message: format!("no proof found within budget {budget}"),
                    })
                }
            }
        }
        Command::Diagonalize { formula, x, y } => {
            let f = parse_formula(formula).map_err(domain)?;
            let r = diagonalize(&f, parse_var(x)?, parse_var(y)?).map_err(domain)?;
            let ok = verify_fixed_point(&r);
            if json {
                let mut v = serde_json::to_value(&r).expect("serializable");
                v["fixedPointOk"] = json!(ok);
                out = json_line(v);
            } else {
                let _ = writeln!(out, "psi: {}", r.psi);
                let _ = writeln!(out, "theta: {}", r.theta);
                let _ = writeln!(out, "fresh: {}", r.fresh);
                let _ = writeln!(out, "selfCode: {}", r.self_code);
                let _ = writeln!(out, "residual: {}", r.residual);
                let _ = writeln!(out, "fixedPointOk: {ok}");
            }
        }
        Command::Gallery { action } => match action {
            GalleryAction::Build { family, instances } => {
                let fam: Family = family.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
                let mut entry = fam.build().map_err(domain)?;
                if !instances.is_empty() {
                    entry.set_instances(instances).map_err(domain)?;
                }
                let report = entry.report();
                out = if json {
                    json_line(serde_json::to_value(&report).expect("serializable"))
                } else {
                    report.to_string()
                };
            }
            GalleryAction::Lnp { formula, x } => {
                let f = parse_formula(formula).map_err(domain)?;
                out = format!("{}\n", lnp_instance(&f, parse_var(x)?).map_err(domain)?);
            }
        },
        Command::FiniteLab(FiniteLab { kind, n, table }) => {
            let kind: ParadoxKind = kind.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            let r = ModelReport::new(kind, *n).map_err(domain)?;
            out = if json {
                json_line(serde_json::to_value(&r).expect("serializable"))
            } else {
                r.render(*table)
            };
        }
        Command::Registry { action } => match action {
            None => {
                let reg = Registry::standard();
                out = if json {
                    json_line(serde_json::to_value(&reg).expect("serializable"))
                } else {
                    reg.table()
                };
            }
            Some(RegistryAction::Eval { name, args }) => {
                let nums = args
                    .iter()
                    .map(|a| parse_code(a).map(GodelCode::into_inner))
                    .collect::<Result<Vec<_>, _>>()?;
                let text = match eval_defined(name, &nums, budget).map_err(domain)? {
                    DefinedValue::Number(n) => n.to_string(),
                    DefinedValue::Truth(t) => {
                        if t == Truth::Unknown {
                            return Err(Failure::Budget {
                                stdout: "unknown\n".into(),
                                message: format!("undetermined within budget {budget}"),
                            });
                        }
                        t.to_string()
                    }
                };
                out = format!("{text}\n");
            }
        },
    }
    Ok(out)
}
