//! Axiom schemas of the Hilbert system.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::{CaptureError, Formula, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetaKind {
    Formula,
    Term,
    Var,
}

/// A value for a schema metavariable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Binding {
    Formula(Formula),
    Term(Term),
    Var(Var),
}

impl Binding {
    pub fn kind(&self) -> MetaKind {
        match self {
            Binding::Formula(_) => MetaKind::Formula,
            Binding::Term(_) => MetaKind::Term,
            Binding::Var(_) => MetaKind::Var,
        }
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Formula(p) => p.fmt(f),
            Binding::Term(t) => t.fmt(f),
            Binding::Var(v) => v.fmt(f),
        }
    }
}

pub type Bindings = BTreeMap<char, Binding>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("unknown axiom schema {0:?}")]
    Unknown(String),
    #[error("schema {schema} needs a {kind:?} binding for {meta}")]
    Missing {
        schema: Schema,
        meta: char,
        kind: MetaKind,
    },
    #[error("schema {schema} has no metavariable {meta}")]
    Extra { schema: Schema, meta: char },
    #[error("binding for {meta} in {schema} has the wrong kind")]
    WrongKind { schema: Schema, meta: char },
    #[error("side condition of {0} violated")]
    SideCondition(Schema),
    #[error(transparent)]
    Capture(#[from] CaptureError),
}

macro_rules! schemas {
    ($($name:ident => $id:literal: [$($meta:literal: $kind:ident),*]),* $(,)?) => {
        /// The fixed axiom list. Metavariables `A B C` range over formulas,
        /// `s t u r` over terms and `x` over variables.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Schema { $($name),* }

        impl Schema {
            pub const ALL: &'static [Schema] = &[$(Schema::$name),*];

            pub fn id(self) -> &'static str {
                match self { $(Schema::$name => $id),* }
            }

            /// Metavariables in a fixed order.
            pub fn signature(self) -> &'static [(char, MetaKind)] {
                match self { $(Schema::$name => &[$(($meta, MetaKind::$kind)),*]),* }
            }
        }
    };
}

schemas! {
    Refl => "Refl": ['t': Term],
    EqSucc => "EqS": ['s': Term, 't': Term],
    EqAdd => "EqAdd": ['s': Term, 't': Term, 'u': Term, 'r': Term],
    EqMul => "EqMul": ['s': Term, 't': Term, 'u': Term, 'r': Term],
    EqEq => "EqEq": ['s': Term, 't': Term, 'u': Term, 'r': Term],
    EqLt => "EqLt": ['s': Term, 't': Term, 'u': Term, 'r': Term],
    SuccNotZero => "PA1": ['s': Term],
    SuccInj => "PA2": ['s': Term, 't': Term],
    AddZero => "PA3": ['s': Term],
    AddSucc => "PA4": ['s': Term, 't': Term],
    MulZero => "PA5": ['s': Term],
    MulSucc => "PA6": ['s': Term, 't': Term],
    Order => "Ord": ['s': Term, 't': Term, 'x': Var],
    K => "K": ['A': Formula, 'B': Formula],
    S => "S": ['A': Formula, 'B': Formula, 'C': Formula],
    Contra => "N": ['A': Formula, 'B': Formula],
    AndLeft => "AndL": ['A': Formula, 'B': Formula],
    AndRight => "AndR": ['A': Formula, 'B': Formula],
    AndIntro => "AndI": ['A': Formula, 'B': Formula],
    OrLeft => "OrL": ['A': Formula, 'B': Formula],
    OrRight => "OrR": ['A': Formula, 'B': Formula],
    OrElim => "OrE": ['A': Formula, 'B': Formula, 'C': Formula],
    IffLeft => "IffL": ['A': Formula, 'B': Formula],
    IffRight => "IffR": ['A': Formula, 'B': Formula],
    IffIntro => "IffI": ['A': Formula, 'B': Formula],
    Inst => "Inst": ['x': Var, 'A': Formula, 't': Term],
    Dist => "Dist": ['x': Var, 'A': Formula, 'B': Formula],
    ExIntro => "ExI": ['x': Var, 'A': Formula, 't': Term],
    ExElim => "ExE": ['x': Var, 'A': Formula, 'B': Formula],
    Induction => "Ind": ['x': Var, 'A': Formula],
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Schema {
    type Err = SchemaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Schema::ALL
            .iter()
            .copied()
            .find(|sc| sc.id() == s)
            .ok_or_else(|| SchemaError::Unknown(s.to_string()))
    }
}

impl Schema {
    pub fn index(self) -> usize {
        Schema::ALL.iter().position(|s| *s == self).expect("listed")
    }

    /// The axiom this schema yields under `b`.
    pub fn instantiate(self, b: &Bindings) -> Result<Formula, SchemaError> {
        for (meta, kind) in self.signature() {
            match b.get(meta) {
                None => {
                    return Err(SchemaError::Missing {
                        schema: self,
                        meta: *meta,
                        kind: *kind,
                    })
                }
                Some(v) if v.kind() != *kind => {
                    return Err(SchemaError::WrongKind {
                        schema: self,
                        meta: *meta,
                    })
                }
                Some(_) => {}
            }
        }
        if let Some(extra) = b
            .keys()
            .find(|m| !self.signature().iter().any(|(s, _)| s == *m))
        {
            return Err(SchemaError::Extra {
                schema: self,
                meta: *extra,
            });
        }
        let f = |m: char| match &b[&m] {
            Binding::Formula(p) => p.clone(),
            _ => unreachable!("kinds checked"),
        };
        let t = |m: char| match &b[&m] {
            Binding::Term(t) => t.clone(),
            _ => unreachable!("kinds checked"),
        };
        let x = || match &b[&'x'] {
            Binding::Var(v) => *v,
            _ => unreachable!("kinds checked"),
        };
        use Formula as F;
        let eq = F::eq;
        let imp = F::imp;
        let four = |rel: fn(Term, Term) -> Formula, inner: Option<fn(Term, Term) -> Term>| {
            let (s, tt, u, r) = (t('s'), t('t'), t('u'), t('r'));
            let conclusion = match inner {
                Some(op) => eq(op(s.clone(), u.clone()), op(tt.clone(), r.clone())),
                None => imp(rel(s.clone(), u.clone()), rel(tt.clone(), r.clone())),
            };
            imp(eq(s, tt), imp(eq(u, r), conclusion))
        };
        Ok(match self {
            Schema::Refl => eq(t('t'), t('t')),
            Schema::EqSucc => imp(
                eq(t('s'), t('t')),
                eq(Term::succ(t('s')), Term::succ(t('t'))),
            ),
            Schema::EqAdd => four(F::eq, Some(Term::add)),
            Schema::EqMul => four(F::eq, Some(Term::mul)),
            Schema::EqEq => four(F::eq, None),
            Schema::EqLt => four(F::lt, None),
            Schema::SuccNotZero => F::not(eq(Term::succ(t('s')), Term::Zero)),
            Schema::SuccInj => imp(
                eq(Term::succ(t('s')), Term::succ(t('t'))),
                eq(t('s'), t('t')),
            ),
            Schema::AddZero => eq(Term::add(t('s'), Term::Zero), t('s')),
            Schema::AddSucc => eq(
                Term::add(t('s'), Term::succ(t('t'))),
                Term::succ(Term::add(t('s'), t('t'))),
            ),
            Schema::MulZero => eq(Term::mul(t('s'), Term::Zero), Term::Zero),
            Schema::MulSucc => eq(
                Term::mul(t('s'), Term::succ(t('t'))),
                Term::add(Term::mul(t('s'), t('t')), t('s')),
            ),
            Schema::Order => {
                let v = x();
                if t('s').contains_var(v) || t('t').contains_var(v) {
                    return Err(SchemaError::SideCondition(self));
                }
                F::iff(
                    F::lt(t('s'), t('t')),
                    F::exists(v, eq(Term::add(t('s'), Term::succ(Term::Var(v))), t('t'))),
                )
            }
            Schema::K => imp(f('A'), imp(f('B'), f('A'))),
            Schema::S => imp(
                imp(f('A'), imp(f('B'), f('C'))),
                imp(imp(f('A'), f('B')), imp(f('A'), f('C'))),
            ),
            Schema::Contra => imp(imp(F::not(f('A')), F::not(f('B'))), imp(f('B'), f('A'))),
            Schema::AndLeft => imp(F::and(f('A'), f('B')), f('A')),
            Schema::AndRight => imp(F::and(f('A'), f('B')), f('B')),
            Schema::AndIntro => imp(f('A'), imp(f('B'), F::and(f('A'), f('B')))),
            Schema::OrLeft => imp(f('A'), F::or(f('A'), f('B'))),
            Schema::OrRight => imp(f('B'), F::or(f('A'), f('B'))),
            Schema::OrElim => imp(
                imp(f('A'), f('C')),
                imp(imp(f('B'), f('C')), imp(F::or(f('A'), f('B')), f('C'))),
            ),
            Schema::IffLeft => imp(F::iff(f('A'), f('B')), imp(f('A'), f('B'))),
            Schema::IffRight => imp(F::iff(f('A'), f('B')), imp(f('B'), f('A'))),
            Schema::IffIntro => imp(
                imp(f('A'), f('B')),
                imp(imp(f('B'), f('A')), F::iff(f('A'), f('B'))),
            ),
            Schema::Inst => {
                let a = f('A');
                let inst = a.substitute(x(), &t('t'))?;
                imp(F::forall(x(), a), inst)
            }
            Schema::ExIntro => {
                let a = f('A');
                let inst = a.substitute(x(), &t('t'))?;
                imp(inst, F::exists(x(), a))
            }
            Schema::Dist => {
                if f('A').free_vars().contains(&x()) {
                    return Err(SchemaError::SideCondition(self));
                }
                imp(
                    F::forall(x(), imp(f('A'), f('B'))),
                    imp(f('A'), F::forall(x(), f('B'))),
                )
            }
            Schema::ExElim => {
                if f('B').free_vars().contains(&x()) {
                    return Err(SchemaError::SideCondition(self));
                }
                imp(
                    F::forall(x(), imp(f('A'), f('B'))),
                    imp(F::exists(x(), f('A')), f('B')),
                )
            }
            Schema::Induction => {
                let v = x();
                let a = f('A');
                let base = a.substitute(v, &Term::Zero)?;
                let step = a.substitute(v, &Term::succ(Term::Var(v)))?;
                imp(
                    base,
                    imp(F::forall(v, imp(a.clone(), step)), F::forall(v, a)),
                )
            }
        })
    }
}
