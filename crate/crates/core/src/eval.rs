//! Three-valued evaluation in the standard model of the naturals.
//!
//! Connectives follow the strong Kleene tables. Bounded quantifiers are
//! decided exhaustively. An unbounded `∃` tries witnesses `0..=budget` and
//! is True with a witness or else Unknown; an unbounded `∀` is False with a
//! counterexample or else Unknown. `Prov` atoms are True or Unknown.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::registry::{self, Defined, DefinedValue, RegistryError};
use crate::syntax::{Formula, Quantifier, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl From<bool> for Truth {
    fn from(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

impl Truth {
    pub fn is_known(self) -> bool {
        self != Truth::Unknown
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    pub fn or(self, other: Truth) -> Truth {
        self.not().and(other.not()).not()
    }

    pub fn implies(self, other: Truth) -> Truth {
        self.not().or(other)
    }

    pub fn iff(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::Unknown, _) | (_, Truth::Unknown) => Truth::Unknown,
            (a, b) => Truth::from(a == b),
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Unknown => "unknown",
        })
    }
}

/// Values for the free variables of the formula being evaluated.
pub type Assignment = BTreeMap<Var, BigUint>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable {0} has no value")]
    Unassigned(Var),
    #[error(transparent)]
    Oracle(#[from] RegistryError),
    #[error("{0} used as a {1}")]
    Kind(Defined, &'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub value: Truth,
    /// Witness for an outermost existential, when one was found.
    #[serde(serialize_with = "witness_text")]
    pub witness: Option<BigUint>,
    /// Quantifier instances tried plus `Prov` searches run.
    pub steps: u64,
}

fn witness_text<S: serde::Serializer>(w: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(n) => s.serialize_some(&n.to_string()),
        None => s.serialize_none(),
    }
}

pub fn eval_term(t: &Term, a: &Assignment) -> Result<BigUint, EvalError> {
    match t {
        Term::Zero => Ok(BigUint::zero()),
        Term::Var(v) => a.get(v).cloned().ok_or(EvalError::Unassigned(*v)),
        Term::Succ(t) => Ok(eval_term(t, a)? + 1u32),
        Term::Add(l, r) => Ok(eval_term(l, a)? + eval_term(r, a)?),
        Term::Mul(l, r) => Ok(eval_term(l, a)? * eval_term(r, a)?),
        Term::DefFun(d, args) => {
            let vals = args
                .iter()
                .map(|x| eval_term(x, a))
                .collect::<Result<Vec<_>, _>>()?;
            match registry::apply(*d, &vals, 0)? {
                DefinedValue::Number(n) => Ok(n),
                DefinedValue::Truth(_) => Err(EvalError::Kind(*d, "function")),
            }
        }
    }
}

pub fn eval_formula(f: &Formula, a: &Assignment, budget: u64) -> Result<Evaluation, EvalError> {
    let mut ev = Evaluator { budget, steps: 0 };
    let mut env = a.clone();
    let (value, witness) = ev.formula_with_witness(f, &mut env)?;
    Ok(Evaluation {
        value,
        witness,
        steps: ev.steps,
    })
}

/// Evaluates a sentence under the empty assignment.
pub fn eval_sentence(f: &Formula, budget: u64) -> Result<Evaluation, EvalError> {
    eval_formula(f, &Assignment::new(), budget)
}

struct Evaluator {
    budget: u64,
    steps: u64,
}

impl Evaluator {
    fn formula_with_witness(
        &mut self,
        f: &Formula,
        env: &mut Assignment,
    ) -> Result<(Truth, Option<BigUint>), EvalError> {
        if let Some(b) = f.as_bounded() {
            let bound = eval_term(b.bound, env)?;
            return self.bounded(b.quantifier, b.var, &bound, b.body, env);
        }
        match f {
            Formula::Exists(v, body) => self.unbounded(Quantifier::Exists, *v, body, env),
            Formula::Forall(v, body) => self.unbounded(Quantifier::Forall, *v, body, env),
            _ => Ok((self.formula(f, env)?, None)),
        }
    }

    fn formula(&mut self, f: &Formula, env: &mut Assignment) -> Result<Truth, EvalError> {
        Ok(match f {
            Formula::Eq(l, r) => Truth::from(eval_term(l, env)? == eval_term(r, env)?),
            Formula::Lt(l, r) => Truth::from(eval_term(l, env)? < eval_term(r, env)?),
            Formula::Not(g) => self.formula(g, env)?.not(),
            Formula::And(l, r) => {
                let a = self.formula(l, env)?;
                if a == Truth::False {
                    return Ok(a);
                }
                a.and(self.formula(r, env)?)
            }
            Formula::Or(l, r) => {
                let a = self.formula(l, env)?;
                if a == Truth::True {
                    return Ok(a);
                }
                a.or(self.formula(r, env)?)
            }
            Formula::Imp(l, r) => {
                let a = self.formula(l, env)?;
                if a == Truth::False {
                    return Ok(Truth::True);
                }
                a.implies(self.formula(r, env)?)
            }
            Formula::Iff(l, r) => self.formula(l, env)?.iff(self.formula(r, env)?),
            Formula::Forall(..) | Formula::Exists(..) => self.formula_with_witness(f, env)?.0,
            Formula::DefPred(d, args) => {
                let vals = args
                    .iter()
                    .map(|x| eval_term(x, env))
                    .collect::<Result<Vec<_>, _>>()?;
                if *d == Defined::Prov {
                    self.steps += 1;
                }
                match registry::apply(*d, &vals, self.budget)? {
                    DefinedValue::Truth(t) => t,
                    DefinedValue::Number(_) => return Err(EvalError::Kind(*d, "predicate")),
                }
            }
        })
    }

    /// Evaluates `body` with `v := n`, restoring any outer value of `v`.
    fn instance(
        &mut self,
        v: Var,
        n: &BigUint,
        body: &Formula,
        env: &mut Assignment,
    ) -> Result<Truth, EvalError> {
        self.steps += 1;
        let saved = env.insert(v, n.clone());
        let r = self.formula(body, env);
        match saved {
            Some(old) => env.insert(v, old),
            None => env.remove(&v),
        };
        r
    }

    fn bounded(
        &mut self,
        q: Quantifier,
        v: Var,
        bound: &BigUint,
        body: &Formula,
        env: &mut Assignment,
    ) -> Result<(Truth, Option<BigUint>), EvalError> {
        let decisive = match q {
            Quantifier::Forall => Truth::False,
            Quantifier::Exists => Truth::True,
        };
        let mut acc = decisive.not();
        let mut i = BigUint::zero();
        while &i < bound {
            let t = self.instance(v, &i, body, env)?;
            if t == decisive {
                return Ok((t, Some(i)));
            }
            if t == Truth::Unknown {
                acc = Truth::Unknown;
            }
            i += BigUint::one();
        }
        Ok((acc, None))
    }

    fn unbounded(
        &mut self,
        q: Quantifier,
        v: Var,
        body: &Formula,
        env: &mut Assignment,
    ) -> Result<(Truth, Option<BigUint>), EvalError> {
        let decisive = match q {
            Quantifier::Forall => Truth::False,
            Quantifier::Exists => Truth::True,
        };
        if !body.free_vars().contains(&v) {
            // vacuous over a nonempty domain, so 0 serves as the witness
            let saved = env.remove(&v);
            let t = self.formula(body, env);
            if let Some(old) = saved {
                env.insert(v, old);
            }
            let t = t?;
            return Ok((t, (t == decisive).then(BigUint::zero)));
        }
        for i in 0..=self.budget {
            let n = BigUint::from(i);
            if self.instance(v, &n, body, env)? == decisive {
                return Ok((decisive, Some(n)));
            }
        }
        Ok((Truth::Unknown, None))
    }
}
