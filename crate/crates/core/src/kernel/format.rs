//! Text and numeric representations of proofs.
//!
//! Text: one step per line, `⟨n⟩. ⟨formula⟩ ; ⟨justification⟩` with the
//! justification one of `ax ⟨schema⟩ [m:=value]…`, `mp ⟨i⟩ ⟨j⟩` (line `i`
//! is φ, line `j` is φ→ψ) or `gen ⟨i⟩ v⟨k⟩`. Blank lines and lines starting
//! with `#` are ignored.
//!
//! Code: the sequence code of the concatenated line records
//!
//! ```text
//! axiom:  0, ⌜φ⌝, schema index, binding count, (metavariable index, ⌜value⌝)…
//! mp:     1, ⌜φ⌝, i, j
//! gen:    2, ⌜φ⌝, i, k
//! ```
//!
//! with 0-based line indices and `k` the variable index. The empty proof is 0.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::{Binding, Bindings, Justification, Line, MetaKind, Proof, Schema};
use crate::coding::{self, godel_encode, CodingError, GodelCode};
use crate::syntax::{parse_formula, parse_term, SyntaxError, Term, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("proof text line {line}: {message}")]
pub struct ProofFormatError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofCodeError {
    #[error(transparent)]
    Coding(#[from] CodingError),
    #[error("not a proof code: {0}")]
    Malformed(&'static str),
}

pub(super) fn to_text(p: &Proof) -> String {
    let mut out = String::new();
    for (i, line) in p.lines.iter().enumerate() {
        let just = match &line.justification {
            Justification::Axiom { schema, bindings } => {
                let mut s = format!("ax {schema}");
                for (m, v) in bindings {
                    s += &format!(" [{m}:={v}]");
                }
                s
            }
            Justification::ModusPonens { minor, major } => {
                format!("mp {} {}", minor + 1, major + 1)
            }
            Justification::Generalization { premise, var } => format!("gen {} {var}", premise + 1),
        };
        out += &format!("{}. {} ; {}\n", i + 1, line.formula, just);
    }
    out
}

/// Reads the text proof format.
pub fn parse_proof(text: &str) -> Result<Proof, ProofFormatError> {
    let mut lines = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let err = |message: String| ProofFormatError {
            line: no + 1,
            message,
        };
        let (head, just) = raw
            .split_once(';')
            .ok_or_else(|| err("missing ';' before the justification".into()))?;
        let (index, formula) = head
            .split_once('.')
            .ok_or_else(|| err("missing step number".into()))?;
        let index: usize = index
            .trim()
            .parse()
            .map_err(|_| err(format!("bad step number {:?}", index.trim())))?;
        if index != lines.len() + 1 {
            return Err(err(format!(
                "expected step {}, found {index}",
                lines.len() + 1
            )));
        }
        let formula = parse_formula(formula.trim()).map_err(|e| err(e.to_string()))?;
        let justification = parse_justification(just.trim()).map_err(err)?;
        lines.push(Line {
            formula,
            justification,
        });
    }
    Ok(Proof { lines })
}

fn step_ref(s: Option<&str>) -> Result<usize, String> {
    s.and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .map(|n| n - 1)
        .ok_or_else(|| "expected a step number".to_string())
}

fn parse_var(s: &str) -> Result<Var, String> {
    match parse_term(s) {
        Ok(Term::Var(v)) => Ok(v),
        _ => Err(format!("{s:?} is not a variable")),
    }
}

fn parse_justification(s: &str) -> Result<Justification, String> {
    let mut words = s.split_whitespace();
    match words.next() {
        Some("mp") => {
            let minor = step_ref(words.next())?;
            let major = step_ref(words.next())?;
            Ok(Justification::ModusPonens { minor, major })
        }
        Some("gen") => {
            let premise = step_ref(words.next())?;
            let var = parse_var(words.next().unwrap_or(""))?;
            Ok(Justification::Generalization { premise, var })
        }
        Some("ax") => {
            let rest = s[2..].trim_start();
            let (id, mut rest) =
                rest.split_at(rest.find(char::is_whitespace).unwrap_or(rest.len()));
            let schema: Schema = id.parse().map_err(|e: super::SchemaError| e.to_string())?;
            let mut bindings = Bindings::new();
            loop {
                rest = rest.trim_start();
                if rest.is_empty() {
                    break;
                }
                let body = rest
                    .strip_prefix('[')
                    .and_then(|r| r.split_once(']'))
                    .ok_or_else(|| format!("expected [m:=value], found {rest:?}"))?;
                let (inner, after) = body;
                rest = after;
                let (meta, value) = inner
                    .split_once(":=")
                    .ok_or_else(|| format!("expected m:=value in {inner:?}"))?;
                let mut chars = meta.trim().chars();
                let (Some(m), None) = (chars.next(), chars.next()) else {
                    return Err(format!("bad metavariable {meta:?}"));
                };
                let kind = schema
                    .signature()
                    .iter()
                    .find(|(n, _)| *n == m)
                    .map(|(_, k)| *k)
                    .ok_or_else(|| format!("schema {schema} has no metavariable {m}"))?;
                let value = value.trim();
                let se = |e: SyntaxError| e.to_string();
                let b = match kind {
                    MetaKind::Formula => Binding::Formula(parse_formula(value).map_err(se)?),
                    MetaKind::Term => Binding::Term(parse_term(value).map_err(se)?),
                    MetaKind::Var => Binding::Var(parse_var(value)?),
                };
                bindings.insert(m, b);
            }
            Ok(Justification::Axiom { schema, bindings })
        }
        _ => Err(format!("unknown justification {s:?}")),
    }
}

fn binding_code(b: &Binding) -> GodelCode {
    match b {
        Binding::Formula(f) => godel_encode(f),
        Binding::Term(t) => godel_encode(t),
        Binding::Var(v) => godel_encode(v),
    }
}

pub fn encode_proof(p: &Proof) -> GodelCode {
    let mut seq: Vec<BigUint> = Vec::new();
    for line in &p.lines {
        let phi = godel_encode(&line.formula).0;
        match &line.justification {
            Justification::Axiom { schema, bindings } => {
                seq.extend([
                    0u32.into(),
                    phi,
                    schema.index().into(),
                    bindings.len().into(),
                ]);
                for (m, b) in bindings {
                    let idx = schema
                        .signature()
                        .iter()
                        .position(|(n, _)| n == m)
                        // unknown metavariables cannot be checked anyway
                        .unwrap_or(usize::MAX >> 1);
                    seq.push(idx.into());
                    seq.push(binding_code(b).0);
                }
            }
            Justification::ModusPonens { minor, major } => {
                seq.extend([1u32.into(), phi, (*minor).into(), (*major).into()]);
            }
            Justification::Generalization { premise, var } => {
                seq.extend([2u32.into(), phi, (*premise).into(), var.0.into()]);
            }
        }
    }
    coding::seq_encode(seq)
}

pub fn decode_proof(c: &GodelCode) -> Result<Proof, ProofCodeError> {
    let seq = coding::seq_decode(c)?;
    let mut it = seq.into_iter();
    let small = |n: Option<BigUint>| -> Result<usize, ProofCodeError> {
        n.and_then(|n| n.to_usize())
            .ok_or(ProofCodeError::Malformed("truncated or oversized field"))
    };
    let mut lines = Vec::new();
    while let Some(tag) = it.next() {
        let phi = it
            .next()
            .ok_or(ProofCodeError::Malformed("missing formula"))?;
        let formula = coding::decode_formula(&GodelCode(phi))?;
        let justification = match tag.to_u32() {
            Some(0) => {
                let schema = *Schema::ALL
                    .get(small(it.next())?)
                    .ok_or(ProofCodeError::Malformed("unknown schema"))?;
                let count = small(it.next())?;
                let mut bindings = Bindings::new();
                for _ in 0..count {
                    let (m, kind) = *schema
                        .signature()
                        .get(small(it.next())?)
                        .ok_or(ProofCodeError::Malformed("unknown metavariable"))?;
                    let value = GodelCode(
                        it.next()
                            .ok_or(ProofCodeError::Malformed("missing binding"))?,
                    );
                    let b = match kind {
                        MetaKind::Formula => Binding::Formula(coding::decode_formula(&value)?),
                        MetaKind::Term => Binding::Term(coding::decode_term(&value)?),
                        MetaKind::Var => match coding::decode_term(&value)? {
                            Term::Var(v) => Binding::Var(v),
                            _ => {
                                return Err(ProofCodeError::Malformed("binding is not a variable"))
                            }
                        },
                    };
                    bindings.insert(m, b);
                }
                Justification::Axiom { schema, bindings }
            }
            Some(1) => Justification::ModusPonens {
                minor: small(it.next())?,
                major: small(it.next())?,
            },
            Some(2) => {
                let premise = small(it.next())?;
                let k = small(it.next())?;
                let k = u32::try_from(k)
                    .ok()
                    .filter(|&k| k <= Var::MAX_INDEX)
                    .ok_or(ProofCodeError::Malformed("variable index out of range"))?;
                Justification::Generalization {
                    premise,
                    var: Var(k),
                }
            }
            _ => return Err(ProofCodeError::Malformed("unknown line tag")),
        };
        lines.push(Line {
            formula,
            justification,
        });
    }
    Ok(Proof { lines })
}
