//! Hilbert-style proofs for Peano arithmetic.
//!
//! A proof is a flat list of lines. Each line is an axiom instance, a modus
//! ponens step, or a generalization. This is what `Prf` and `Prov` mean.

mod format;
mod schema;
mod search;

use std::fmt;

use thiserror::Error;

pub use format::{decode_proof, encode_proof, parse_proof, ProofCodeError, ProofFormatError};
pub use schema::{Binding, Bindings, MetaKind, Schema, SchemaError};
pub use search::search_proof;

use crate::syntax::{Formula, Var};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Justification {
    Axiom {
        schema: Schema,
        bindings: Bindings,
    },
    /// From line `minor` (φ) and line `major` (φ → ψ), infer ψ.
    ModusPonens {
        minor: usize,
        major: usize,
    },
    /// From line `premise` (φ), infer ∀v φ.
    Generalization {
        premise: usize,
        var: Var,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub formula: Formula,
    pub justification: Justification,
}

/// Line indices in justifications are 0-based; the text format is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Proof {
    pub lines: Vec<Line>,
}

impl Proof {
    pub fn new(lines: Vec<Line>) -> Proof {
        Proof { lines }
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    pub fn axiom(mut self, formula: Formula, schema: Schema, bindings: Bindings) -> Proof {
        self.lines.push(Line {
            formula,
            justification: Justification::Axiom { schema, bindings },
        });
        self
    }

    pub fn mp(mut self, formula: Formula, minor: usize, major: usize) -> Proof {
        self.lines.push(Line {
            formula,
            justification: Justification::ModusPonens { minor, major },
        });
        self
    }

    pub fn gen(mut self, formula: Formula, premise: usize, var: Var) -> Proof {
        self.lines.push(Line {
            formula,
            justification: Justification::Generalization { premise, var },
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RejectReason {
    #[error("empty proof has no conclusion")]
    Empty,
    #[error("cites line {0}, which is not earlier")]
    ForwardReference(usize),
    #[error("bad axiom instance: {0}")]
    Schema(#[from] SchemaError),
    #[error("formula is not the instance {expected}")]
    NotTheInstance { expected: Formula },
    #[error("line {major} is not an implication from line {minor} to this formula")]
    ModusPonens { minor: usize, major: usize },
    #[error("formula is not the generalization of line {premise} over {var}")]
    Generalization { premise: usize, var: Var },
}

/// First failing line (1-based) and why.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct Rejection {
    pub line: usize,
    pub reason: RejectReason,
}

pub fn check_proof(p: &Proof) -> Result<(), Rejection> {
    if p.lines.is_empty() {
        return Err(Rejection {
            line: 0,
            reason: RejectReason::Empty,
        });
    }
    for (i, line) in p.lines.iter().enumerate() {
        check_line(&p.lines, i, line).map_err(|reason| Rejection {
            line: i + 1,
            reason,
        })?;
    }
    Ok(())
}

fn check_line(lines: &[Line], i: usize, line: &Line) -> Result<(), RejectReason> {
    let earlier = |k: usize| {
        if k < i {
            Ok(&lines[k].formula)
        } else {
            Err(RejectReason::ForwardReference(k + 1))
        }
    };
    match &line.justification {
        Justification::Axiom { schema, bindings } => {
            let expected = schema.instantiate(bindings)?;
            if expected != line.formula {
                return Err(RejectReason::NotTheInstance { expected });
            }
        }
        Justification::ModusPonens { minor, major } => {
            let a = earlier(*minor)?;
            let ab = earlier(*major)?;
            match ab {
                Formula::Imp(l, r) if **l == *a && **r == line.formula => {}
                _ => {
                    return Err(RejectReason::ModusPonens {
                        minor: minor + 1,
                        major: major + 1,
                    })
                }
            }
        }
        Justification::Generalization { premise, var } => {
            let a = earlier(*premise)?;
            match &line.formula {
                Formula::Forall(v, body) if v == var && **body == *a => {}
                _ => {
                    return Err(RejectReason::Generalization {
                        premise: premise + 1,
                        var: *var,
                    })
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::to_text(self))
    }
}
