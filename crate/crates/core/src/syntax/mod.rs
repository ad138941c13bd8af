//! Terms and formulas of first-order arithmetic over `0, S, +, ×, =, <`,
//! extended with the defined pseudo-symbols of [`crate::registry`].

mod classify;
mod parse;
mod print;
mod subst;
mod token;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero as _};
use serde::{Deserialize, Serialize};

pub use classify::{classify, classify_delta0, classify_sigma1, Classification};
pub use parse::{parse_expr, parse_formula, parse_term, tokens_to_expr, SyntaxError};
pub use subst::CaptureError;
pub use token::{lex, Token};

use crate::registry::Defined;

/// Numerals at or above this value are written in base-8 Horner form.
pub const NUMERAL_BASE: u32 = 8;

/// An object-language variable `vᵢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var(pub u32);

impl Var {
    /// Variables above this index would collide with the defined-symbol code band.
    pub const MAX_INDEX: u32 = 983;

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Var(Var),
    Succ(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    /// Application of a registered defined function symbol.
    DefFun(Defined, Vec<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Lt(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
    /// Application of a registered defined predicate symbol.
    DefPred(Defined, Vec<Term>),
}

/// Either kind of expression; what a Gödel number decodes to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Term(Term),
    Formula(Formula),
}

impl From<Term> for Expr {
    fn from(t: Term) -> Self {
        Expr::Term(t)
    }
}

impl From<Formula> for Expr {
    fn from(f: Formula) -> Self {
        Expr::Formula(f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Term(t) => t.fmt(f),
            Expr::Formula(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifier {
    Forall,
    Exists,
}

/// A quantifier in bounded form `(∀v<t)φ` or `(∃v<t)φ`.
#[derive(Clone, Copy, Debug)]
pub struct Bounded<'a> {
    pub quantifier: Quantifier,
    pub var: Var,
    pub bound: &'a Term,
    pub body: &'a Formula,
}

impl Term {
    pub fn var(i: u32) -> Term {
        Term::Var(Var(i))
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(l: Term, r: Term) -> Term {
        Term::Add(Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    pub fn app(sym: Defined, args: Vec<Term>) -> Term {
        Term::DefFun(sym, args)
    }

    /// `Sⁿ0`.
    pub fn unary(n: u32) -> Term {
        (0..n).fold(Term::Zero, |t, _| Term::succ(t))
    }

    /// The canonical closed term denoting `n`.
    ///
    /// Below [`NUMERAL_BASE`] this is the unary numeral `S…S0`. Larger values
    /// are written `((SSSSSSSS0×m)+d)` with `m = n/8`, `d = n%8` (the `+d`
    /// is dropped when `d = 0`), so the term grows with the number of octal
    /// digits rather than with `n`.
    pub fn numeral(n: &BigUint) -> Term {
        let base = BigUint::from(NUMERAL_BASE);
        let mut digits = Vec::new();
        let mut rest = n.clone();
        while rest >= base {
            let d = (&rest % &base).to_u32().unwrap_or_default();
            digits.push(d);
            rest /= &base;
        }
        let mut t = Term::unary(rest.to_u32().unwrap_or_default());
        for d in digits.into_iter().rev() {
            t = Term::mul(Term::unary(NUMERAL_BASE), t);
            if d != 0 {
                t = Term::add(t, Term::unary(d));
            }
        }
        t
    }

    pub fn num(n: u64) -> Term {
        Term::numeral(&BigUint::from(n))
    }

    /// Inverse of [`Term::numeral`]: `Some(n)` when `self` is exactly the
    /// canonical numeral of `n`.
    pub fn as_numeral(&self) -> Option<BigUint> {
        fn unary(t: &Term) -> Option<u32> {
            let mut n = 0;
            let mut t = t;
            while let Term::Succ(inner) = t {
                n += 1;
                t = inner;
            }
            matches!(t, Term::Zero).then_some(n)
        }
        let (head, digit) = match self {
            Term::Add(l, r) => match unary(r)? {
                d @ 1..=7 => (&**l, d),
                _ => return None,
            },
            Term::Mul(..) => (self, 0),
            _ => {
                let n = unary(self)?;
                return (n < NUMERAL_BASE).then(|| BigUint::from(n));
            }
        };
        let Term::Mul(b, m) = head else { return None };
        if unary(b)? != NUMERAL_BASE {
            return None;
        }
        let high = m.as_numeral()?;
        if high.is_zero() {
            return None;
        }
        Some(high * NUMERAL_BASE + digit)
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Zero => {}
            Term::Var(v) => {
                out.insert(*v);
            }
            Term::Succ(t) => t.collect_vars(out),
            Term::Add(l, r) | Term::Mul(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Term::DefFun(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        match self {
            Term::Zero => false,
            Term::Var(w) => *w == v,
            Term::Succ(t) => t.contains_var(v),
            Term::Add(l, r) | Term::Mul(l, r) => l.contains_var(v) || r.contains_var(v),
            Term::DefFun(_, args) => args.iter().any(|a| a.contains_var(v)),
        }
    }

    /// Number of object-language symbols in the canonical printing.
    pub fn symbol_count(&self) -> usize {
        let mut toks = Vec::new();
        self.push_tokens(&mut toks);
        toks.len()
    }

    pub fn subterms(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            match t {
                Term::Zero | Term::Var(_) => {}
                Term::Succ(a) => stack.push(a),
                Term::Add(l, r) | Term::Mul(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
                Term::DefFun(_, args) => stack.extend(args.iter().rev()),
            }
        }
        out
    }
}

impl Formula {
    pub fn eq(l: Term, r: Term) -> Formula {
        Formula::Eq(l, r)
    }

    pub fn lt(l: Term, r: Term) -> Formula {
        Formula::Lt(l, r)
    }

    /// `s ≤ t`, written as `s < St`.
    pub fn le(l: Term, r: Term) -> Formula {
        Formula::Lt(l, Term::succ(r))
    }

    pub fn neq(l: Term, r: Term) -> Formula {
        Formula::not(Formula::Eq(l, r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    pub fn forall(v: Var, f: Formula) -> Formula {
        Formula::Forall(v, Box::new(f))
    }

    pub fn exists(v: Var, f: Formula) -> Formula {
        Formula::Exists(v, Box::new(f))
    }

    /// `(∀v<t)φ`, i.e. `∀v ((v<t)→φ)`.
    pub fn forall_lt(v: Var, bound: Term, f: Formula) -> Formula {
        Formula::forall(v, Formula::imp(Formula::Lt(Term::Var(v), bound), f))
    }

    /// `(∃v<t)φ`, i.e. `∃v ((v<t)∧φ)`.
    pub fn exists_lt(v: Var, bound: Term, f: Formula) -> Formula {
        Formula::exists(v, Formula::and(Formula::Lt(Term::Var(v), bound), f))
    }

    /// `(∀v≤t)φ`.
    pub fn forall_le(v: Var, bound: Term, f: Formula) -> Formula {
        Formula::forall_lt(v, Term::succ(bound), f)
    }

    /// `(∃v≤t)φ`.
    pub fn exists_le(v: Var, bound: Term, f: Formula) -> Formula {
        Formula::exists_lt(v, Term::succ(bound), f)
    }

    pub fn pred(sym: Defined, args: Vec<Term>) -> Formula {
        Formula::DefPred(sym, args)
    }

    /// Recognizes `∀v((v<t)→φ)` and `∃v((v<t)∧φ)` with `v` not free in `t`.
    pub fn as_bounded(&self) -> Option<Bounded<'_>> {
        let (quantifier, var, inner) = match self {
            Formula::Forall(v, f) => (Quantifier::Forall, *v, &**f),
            Formula::Exists(v, f) => (Quantifier::Exists, *v, &**f),
            _ => return None,
        };
        let (guard, body) = match (quantifier, inner) {
            (Quantifier::Forall, Formula::Imp(g, b)) => (&**g, &**b),
            (Quantifier::Exists, Formula::And(g, b)) => (&**g, &**b),
            _ => return None,
        };
        match guard {
            Formula::Lt(Term::Var(w), bound) if *w == var && !bound.contains_var(var) => {
                Some(Bounded {
                    quantifier,
                    var,
                    bound,
                    body,
                })
            }
            _ => None,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        let mut push_term = |t: &Term, bound: &Vec<Var>| {
            let mut vs = BTreeSet::new();
            t.collect_vars(&mut vs);
            out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
        };
        match self {
            Formula::Eq(l, r) | Formula::Lt(l, r) => {
                push_term(l, bound);
                push_term(r, bound);
            }
            Formula::DefPred(_, args) => args.iter().for_each(|a| push_term(a, bound)),
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Iff(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(*v);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable occurring anywhere, free or bound.
    pub fn all_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Eq(l, r) | Formula::Lt(l, r) => {
                l.collect_vars(&mut out);
                r.collect_vars(&mut out);
            }
            Formula::DefPred(_, args) => args.iter().for_each(|a| a.collect_vars(&mut out)),
            Formula::Forall(v, _) | Formula::Exists(v, _) => {
                out.insert(*v);
            }
            _ => {}
        });
        out
    }

    /// Smallest variable index not occurring in `self` and not in `avoid`.
    pub fn fresh_var(&self, avoid: &[Var]) -> Var {
        let used = self.all_vars();
        (0..)
            .map(Var)
            .find(|v| !used.contains(v) && !avoid.contains(v))
            .expect("variable indices are unbounded")
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Pre-order traversal of all subformulas, `self` first.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => g.visit(f),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Iff(l, r) => {
                l.visit(f);
                r.visit(f);
            }
            _ => {}
        }
    }

    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.visit(&mut |g| out.push(g));
        out
    }

    /// Terms appearing as arguments of atoms, with all their subterms.
    pub fn subterms(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        self.visit(&mut |g| match g {
            Formula::Eq(l, r) | Formula::Lt(l, r) => {
                out.extend(l.subterms());
                out.extend(r.subterms());
            }
            Formula::DefPred(_, args) => args.iter().for_each(|a| out.extend(a.subterms())),
            _ => {}
        });
        out
    }

    pub fn symbol_count(&self) -> usize {
        let mut toks = Vec::new();
        self.push_tokens(&mut toks);
        toks.len()
    }

    /// Defined symbols used anywhere in the formula.
    pub fn defined_symbols(&self) -> BTreeSet<Defined> {
        fn in_term(t: &Term, out: &mut BTreeSet<Defined>) {
            for s in t.subterms() {
                if let Term::DefFun(d, _) = s {
                    out.insert(*d);
                }
            }
        }
        let mut out = BTreeSet::new();
        self.visit(&mut |g| match g {
            Formula::Eq(l, r) | Formula::Lt(l, r) => {
                in_term(l, &mut out);
                in_term(r, &mut out);
            }
            Formula::DefPred(d, args) => {
                out.insert(*d);
                args.iter().for_each(|a| in_term(a, &mut out));
            }
            _ => {}
        });
        out
    }
}
