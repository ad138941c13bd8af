//! Self-referential sentence families built with the diagonal construction,
//! and the least number principle.
//!
//! Each family starts from a template φ(x, y) in which `y` stands for the
//! code of the sentence being defined and `x` for its index:
//!
//! ```text
//! P  (∃z Prov(Neg(Subs(y,⌜x⌝,Num(z))))∧(0≤x))
//! Q  ∃z (¬(z=x)∧Prov(Neg(Subs(y,⌜x⌝,Num(z)))))
//! R  ∃z ((HetSeq(z)∧(l(z)=Sx))∧(∀t≤z)(Ele(t,z)→Prov(Neg(Subs(y,⌜x⌝,Num(t))))))
//! F  ((∀z<x)Prov(Neg(Subs(y,⌜x⌝,Num(z))))→Prov(Neg(y)))
//! ```
//!
//! with `x, y, z, t` the variables `v0, v1, v2, v3`. `0≤x` is `0<Sx`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::coding::{godel_encode, GodelCode};
use crate::diagonal::{diagonalize, verify_fixed_point, DiagonalError, DiagonalResult};
use crate::registry::Defined;
use crate::syntax::{classify, Classification, Formula, Term, Var};

pub const X: Var = Var(0);
pub const Y: Var = Var(1);
pub const Z: Var = Var(2);
pub const T: Var = Var(3);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    P,
    Q,
    R,
    F,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::P, Family::Q, Family::R, Family::F];

    pub fn template(self) -> Formula {
        match self {
            Family::P => p_template(),
            Family::Q => q_template(),
            Family::R => r_template(),
            Family::F => f_template(),
        }
    }

    pub fn build(self) -> Result<GalleryEntry, DiagonalError> {
        GalleryEntry::new(self, &self.template(), DEFAULT_INSTANCES)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown family {0:?} (expected P, Q, R or F)")]
pub struct UnknownFamily(String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(Family::P),
            "Q" | "q" => Ok(Family::Q),
            "R" | "r" => Ok(Family::R),
            "F" | "f" => Ok(Family::F),
            _ => Err(UnknownFamily(s.to_string())),
        }
    }
}

/// `Prov(Neg(Subs(y, ⌜x⌝, Num(i))))`: "the sentence with index `i` is refutable".
pub fn refutable_at(i: Var) -> Formula {
    let quoted_x = Term::numeral(godel_encode(&X).value());
    let subs = Term::app(
        Defined::Subs,
        vec![
            Term::Var(Y),
            quoted_x,
            Term::app(Defined::Num, vec![Term::Var(i)]),
        ],
    );
    Formula::pred(Defined::Prov, vec![Term::app(Defined::Neg, vec![subs])])
}

fn p_template() -> Formula {
    Formula::and(
        Formula::exists(Z, refutable_at(Z)),
        Formula::le(Term::Zero, Term::Var(X)),
    )
}

fn q_template() -> Formula {
    Formula::exists(
        Z,
        Formula::and(Formula::neq(Term::Var(Z), Term::Var(X)), refutable_at(Z)),
    )
}

fn r_template() -> Formula {
    let z = Term::Var(Z);
    let het = Formula::pred(Defined::HetSeq, vec![z.clone()]);
    let len = Formula::eq(
        Term::app(Defined::Len, vec![z.clone()]),
        Term::succ(Term::Var(X)),
    );
    let each = Formula::forall_le(
        T,
        z.clone(),
        Formula::imp(
            Formula::pred(Defined::Ele, vec![Term::Var(T), z]),
            refutable_at(T),
        ),
    );
    Formula::exists(Z, Formula::and(Formula::and(het, len), each))
}

fn f_template() -> Formula {
    Formula::imp(
        Formula::forall_lt(Z, Term::Var(X), refutable_at(Z)),
        Formula::pred(
            Defined::Prov,
            vec![Term::app(Defined::Neg, vec![Term::Var(Y)])],
        ),
    )
}

pub fn build_p() -> Result<GalleryEntry, DiagonalError> {
    Family::P.build()
}

pub fn build_q() -> Result<GalleryEntry, DiagonalError> {
    Family::Q.build()
}

pub fn build_r() -> Result<GalleryEntry, DiagonalError> {
    Family::R.build()
}

pub fn build_f() -> Result<GalleryEntry, DiagonalError> {
    Family::F.build()
}

const DEFAULT_INSTANCES: &[u64] = &[0, 1];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryEntry {
    pub family: Family,
    pub diagonal: DiagonalResult,
    pub psi: Formula,
    pub self_code: GodelCode,
    pub fixed_point_ok: bool,
    pub classification: Classification,
    /// ψ with the numeral of `k` put for `x`.
    pub instances: Vec<(u64, Formula)>,
}

impl GalleryEntry {
    pub fn new(family: Family, template: &Formula, ks: &[u64]) -> Result<Self, DiagonalError> {
        let diagonal = diagonalize(template, X, Y)?;
        let psi = diagonal.psi.clone();
        let mut entry = GalleryEntry {
            family,
            fixed_point_ok: verify_fixed_point(&diagonal),
            self_code: diagonal.self_code.clone(),
            classification: classify(&psi),
            psi,
            diagonal,
            instances: Vec::new(),
        };
        entry.set_instances(ks)?;
        Ok(entry)
    }

    pub fn set_instances(&mut self, ks: &[u64]) -> Result<(), DiagonalError> {
        self.instances = ks
            .iter()
            .map(|&k| Ok((k, self.psi.substitute(X, &Term::num(k))?)))
            .collect::<Result<_, DiagonalError>>()?;
        Ok(())
    }

    pub fn instance(&self, k: u64) -> Result<Formula, DiagonalError> {
        Ok(self.psi.substitute(X, &Term::num(k))?)
    }

    /// Re-runs the fixed-point check against the current fields, so a
    /// tampered entry reports false.
    pub fn recheck(&mut self) {
        let mut d = self.diagonal.clone();
        d.psi = self.psi.clone();
        d.self_code = self.self_code.clone();
        self.fixed_point_ok = verify_fixed_point(&d);
    }

    pub fn report(&self) -> Report {
        Report {
            family: self.family,
            psi: self.psi.to_string(),
            self_code: self.self_code.clone(),
            self_code_digits: self.self_code.digits(),
            symbol_count: self.psi.symbol_count(),
            fixed_point_ok: self.fixed_point_ok,
            classification: self.classification,
            instances: self
                .instances
                .iter()
                .map(|(k, f)| Instance {
                    k: *k,
                    sentence: f.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub family: Family,
    pub psi: String,
    pub self_code: GodelCode,
    pub self_code_digits: usize,
    pub symbol_count: usize,
    pub fixed_point_ok: bool,
    pub classification: Classification,
    pub instances: Vec<Instance>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub k: u64,
    pub sentence: String,
}

/// One `key: value` pair per line; instances as `instance k: sentence`.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "psi: {}", self.psi)?;
        writeln!(f, "selfCode: {}", self.self_code)?;
        writeln!(f, "selfCodeDigits: {}", self.self_code_digits)?;
        writeln!(f, "symbolCount: {}", self.symbol_count)?;
        writeln!(f, "fixedPointOk: {}", self.fixed_point_ok)?;
        writeln!(f, "classification: {}", self.classification)?;
        for i in &self.instances {
            writeln!(f, "instance {}: {}", i.k, i.sentence)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LnpError {
    #[error("{0} is not free in the formula")]
    NotFree(Var),
    #[error(transparent)]
    Capture(#[from] crate::syntax::CaptureError),
}

/// `∃x P(x) → ∃x (P(x) ∧ (∀y<x)¬P(y))` with `y` fresh.
pub fn lnp_instance(p: &Formula, x: Var) -> Result<Formula, LnpError> {
    if !p.free_vars().contains(&x) {
        return Err(LnpError::NotFree(x));
    }
    let y = p.fresh_var(&[x]);
    let p_y = p.substitute(x, &Term::Var(y))?;
    Ok(Formula::imp(
        Formula::exists(x, p.clone()),
        Formula::exists(
            x,
            Formula::and(
                p.clone(),
                Formula::forall_lt(y, Term::Var(x), Formula::not(p_y)),
            ),
        ),
    ))
}
