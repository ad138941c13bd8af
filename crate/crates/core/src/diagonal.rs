//! The diagonal construction: from φ(x, y) a formula ψ(x) that contains a
//! term denoting its own Gödel number in the place of y.
//!
//! With `w` a fresh variable,
//!
//! ```text
//! θ(x, w) = φ(x, Subs(w, ⌜w⌝, Num(w)))
//! ψ(x)    = θ(x, ⌜θ⌝)
//! ```
//!
//! so the pseudo-term in ψ is `Subs(⌜θ⌝, ⌜w⌝, Num(⌜θ⌝))`, whose value is
//! the code of θ with the numeral of ⌜θ⌝ put for `w`, which is ⌜ψ⌝.

use serde::Serialize;
use thiserror::Error;

use crate::coding::{godel_encode, GodelCode};
use crate::eval::{eval_term, Assignment, EvalError};
use crate::registry::Defined;
use crate::syntax::{CaptureError, Formula, Term, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagonalError {
    #[error("the parameter and the code variable must differ (both {0})")]
    SameVariable(Var),
    #[error(transparent)]
    Capture(#[from] CaptureError),
    #[error("evaluating the self-reference term: {0}")]
    Eval(#[from] EvalError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalResult {
    #[serde(serialize_with = "display")]
    pub psi: Formula,
    #[serde(serialize_with = "display")]
    pub theta: Formula,
    /// The variable `w` abstracted in θ.
    #[serde(serialize_with = "display")]
    pub fresh: Var,
    /// `⌜ψ⌝`.
    pub self_code: GodelCode,
    /// Value of `Subs(⌜θ⌝, ⌜w⌝, Num(⌜θ⌝))`, computed through the registry.
    pub residual: GodelCode,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// The pseudo-term `Subs(a, ⌜w⌝, Num(a))`.
pub fn self_reference_term(a: Term, w: Var) -> Term {
    Term::app(
        Defined::Subs,
        vec![
            a.clone(),
            Term::numeral(godel_encode(&w).value()),
            Term::app(Defined::Num, vec![a]),
        ],
    )
}

pub fn diagonalize(phi: &Formula, x: Var, y: Var) -> Result<DiagonalResult, DiagonalError> {
    if x == y {
        return Err(DiagonalError::SameVariable(x));
    }
    let w = phi.fresh_var(&[x, y]);
    let theta = phi.substitute(y, &self_reference_term(Term::Var(w), w))?;
    let theta_code = Term::numeral(godel_encode(&theta).value());
    let psi = theta.substitute(w, &theta_code)?;
    let self_code = godel_encode(&psi);
    let residual = GodelCode(eval_term(
        &self_reference_term(theta_code, w),
        &Assignment::new(),
    )?);
    Ok(DiagonalResult {
        psi,
        theta,
        fresh: w,
        self_code,
        residual,
    })
}

impl DiagonalResult {
    /// ψ with its self-reference term put back to `y`, which recovers φ.
    pub fn strip(&self, y: Var) -> Formula {
        let theta_code = Term::numeral(godel_encode(&self.theta).value());
        let target = self_reference_term(theta_code, self.fresh);
        replace_in_formula(&self.psi, &target, &Term::Var(y))
    }
}

fn replace_in_term(t: &Term, target: &Term, by: &Term) -> Term {
    if t == target {
        return by.clone();
    }
    let r = |s: &Term| replace_in_term(s, target, by);
    match t {
        Term::Zero | Term::Var(_) => t.clone(),
        Term::Succ(s) => Term::succ(r(s)),
        Term::Add(a, b) => Term::add(r(a), r(b)),
        Term::Mul(a, b) => Term::mul(r(a), r(b)),
        Term::DefFun(d, args) => Term::app(*d, args.iter().map(r).collect()),
    }
}

fn replace_in_formula(f: &Formula, target: &Term, by: &Term) -> Formula {
    let t = |s: &Term| replace_in_term(s, target, by);
    let r = |g: &Formula| replace_in_formula(g, target, by);
    match f {
        Formula::Eq(a, b) => Formula::eq(t(a), t(b)),
        Formula::Lt(a, b) => Formula::lt(t(a), t(b)),
        Formula::Not(g) => Formula::not(r(g)),
        Formula::And(a, b) => Formula::and(r(a), r(b)),
        Formula::Or(a, b) => Formula::or(r(a), r(b)),
        Formula::Imp(a, b) => Formula::imp(r(a), r(b)),
        Formula::Iff(a, b) => Formula::iff(r(a), r(b)),
        Formula::Forall(v, g) => Formula::forall(*v, r(g)),
        Formula::Exists(v, g) => Formula::exists(*v, r(g)),
        Formula::DefPred(d, args) => Formula::pred(*d, args.iter().map(t).collect()),
    }
}

/// True iff ψ re-encodes to the stored code and the self-reference term
/// evaluated to that same number.
pub fn verify_fixed_point(r: &DiagonalResult) -> bool {
    godel_encode(&r.psi) == r.self_code && r.residual == r.self_code
}
