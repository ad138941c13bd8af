//! Syntactic arithmetical-hierarchy classification.
//!
//! These are sufficient conditions only: a formula merely provably
//! equivalent to a bounded one is not recognized.

use serde::Serialize;

use super::{Formula, Term};
use crate::registry::Class;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Delta0,
    Sigma1,
    #[serde(rename = "other")]
    Other,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Delta0 => "Delta0",
            Classification::Sigma1 => "Sigma1",
            Classification::Other => "other",
        })
    }
}

fn term_is_delta0(t: &Term) -> bool {
    t.subterms().into_iter().all(|s| match s {
        Term::DefFun(d, _) => d.class() == Class::Delta0,
        _ => true,
    })
}

/// Every quantifier bounded and every defined symbol registered as Δ0.
pub fn classify_delta0(f: &Formula) -> bool {
    if let Some(b) = f.as_bounded() {
        return term_is_delta0(b.bound) && classify_delta0(b.body);
    }
    match f {
        Formula::Eq(l, r) | Formula::Lt(l, r) => term_is_delta0(l) && term_is_delta0(r),
        Formula::DefPred(d, args) => d.class() == Class::Delta0 && args.iter().all(term_is_delta0),
        Formula::Not(g) => classify_delta0(g),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Iff(l, r) => {
            classify_delta0(l) && classify_delta0(r)
        }
        Formula::Forall(..) | Formula::Exists(..) => false,
    }
}

/// A block of existential quantifiers over a Δ0 matrix, or a Σ1 defined atom.
pub fn classify_sigma1(f: &Formula) -> bool {
    let mut f = f;
    loop {
        match f {
            _ if classify_delta0(f) => return true,
            Formula::Exists(_, g) => f = g,
            Formula::DefPred(d, args) => {
                return d.class() == Class::Sigma1 && args.iter().all(term_is_delta0)
            }
            _ => return false,
        }
    }
}

pub fn classify(f: &Formula) -> Classification {
    if classify_delta0(f) {
        Classification::Delta0
    } else if classify_sigma1(f) {
        Classification::Sigma1
    } else {
        Classification::Other
    }
}
