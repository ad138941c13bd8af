use std::fmt::{self, Display, Formatter, Write};

use super::{Formula, Quantifier, Term};

impl Display for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => f.write_char('0'),
            Term::Var(v) => write!(f, "{v}"),
            Term::Succ(t) => write!(f, "S{t}"),
            Term::Add(l, r) => write!(f, "({l}+{r})"),
            Term::Mul(l, r) => write!(f, "({l}×{r})"),
            Term::DefFun(d, args) => write_app(f, d.name(), args),
        }
    }
}

fn write_app(f: &mut Formatter<'_>, name: &str, args: &[Term]) -> fmt::Result {
    write!(f, "{name}(")?;
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{a}")?;
    }
    f.write_char(')')
}

impl Display for Formula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if let Some(b) = self.as_bounded() {
            let q = match b.quantifier {
                Quantifier::Forall => '∀',
                Quantifier::Exists => '∃',
            };
            return write!(f, "({q}{}<{}){}", b.var, b.bound, b.body);
        }
        match self {
            Formula::Eq(l, r) => write!(f, "({l}={r})"),
            Formula::Lt(l, r) => write!(f, "({l}<{r})"),
            Formula::Not(g) => write!(f, "¬{g}"),
            Formula::And(l, r) => write!(f, "({l}∧{r})"),
            Formula::Or(l, r) => write!(f, "({l}∨{r})"),
            Formula::Imp(l, r) => write!(f, "({l}→{r})"),
            Formula::Iff(l, r) => write!(f, "({l}↔{r})"),
            Formula::Forall(v, g) => write!(f, "∀{v} {g}"),
            Formula::Exists(v, g) => write!(f, "∃{v} {g}"),
            Formula::DefPred(d, args) => write_app(f, d.name(), args),
        }
    }
}
