use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::{Formula, Term, Var};

/// Substituting `replaced` would bring a free variable of the replacement
/// under the binder of `quantifier`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("substituting for {replaced} would be captured by the quantifier on {quantifier}")]
pub struct CaptureError {
    pub quantifier: Var,
    pub replaced: Var,
}

impl Term {
    /// Replaces every occurrence of the mapped variables, simultaneously.
    pub fn substitute_all(&self, map: &BTreeMap<Var, Term>) -> Term {
        match self {
            Term::Zero => Term::Zero,
            Term::Var(v) => map.get(v).cloned().unwrap_or(Term::Var(*v)),
            Term::Succ(t) => Term::succ(t.substitute_all(map)),
            Term::Add(l, r) => Term::add(l.substitute_all(map), r.substitute_all(map)),
            Term::Mul(l, r) => Term::mul(l.substitute_all(map), r.substitute_all(map)),
            Term::DefFun(d, args) => {
                Term::DefFun(*d, args.iter().map(|a| a.substitute_all(map)).collect())
            }
        }
    }

    pub fn substitute(&self, v: Var, t: &Term) -> Term {
        self.substitute_all(&BTreeMap::from([(v, t.clone())]))
    }
}

impl Formula {
    /// `self[t/v]`: replaces the free occurrences of `v` by `t`.
    ///
    /// Bound occurrences are untouched. Capture is rejected, never repaired
    /// by renaming, so codes of substitution results stay predictable.
    pub fn substitute(&self, v: Var, t: &Term) -> Result<Formula, CaptureError> {
        self.substitute_all(&BTreeMap::from([(v, t.clone())]))
    }

    /// Simultaneous capture-checked substitution for free variables.
    pub fn substitute_all(&self, map: &BTreeMap<Var, Term>) -> Result<Formula, CaptureError> {
        if map.is_empty() {
            return Ok(self.clone());
        }
        Ok(match self {
            Formula::Eq(l, r) => Formula::Eq(l.substitute_all(map), r.substitute_all(map)),
            Formula::Lt(l, r) => Formula::Lt(l.substitute_all(map), r.substitute_all(map)),
            Formula::DefPred(d, args) => {
                Formula::DefPred(*d, args.iter().map(|a| a.substitute_all(map)).collect())
            }
            Formula::Not(f) => Formula::not(f.substitute_all(map)?),
            Formula::And(l, r) => Formula::and(l.substitute_all(map)?, r.substitute_all(map)?),
            Formula::Or(l, r) => Formula::or(l.substitute_all(map)?, r.substitute_all(map)?),
            Formula::Imp(l, r) => Formula::imp(l.substitute_all(map)?, r.substitute_all(map)?),
            Formula::Iff(l, r) => Formula::iff(l.substitute_all(map)?, r.substitute_all(map)?),
            Formula::Forall(w, f) | Formula::Exists(w, f) => {
                let free = f.free_vars();
                let inner: BTreeMap<Var, Term> = map
                    .iter()
                    .filter(|(v, _)| *v != w && free.contains(v))
                    .map(|(v, t)| (*v, t.clone()))
                    .collect();
                if let Some((v, _)) = inner.iter().find(|(_, t)| t.contains_var(*w)) {
                    return Err(CaptureError {
                        quantifier: *w,
                        replaced: *v,
                    });
                }
                let body = f.substitute_all(&inner)?;
                if matches!(self, Formula::Forall(..)) {
                    Formula::forall(*w, body)
                } else {
                    Formula::exists(*w, body)
                }
            }
        })
    }

    /// Renames every quantifier on a variable in `avoid` to a variable
    /// unused in `self` and outside `avoid`, so that substituting terms over
    /// `avoid` afterwards cannot be captured.
    pub fn rename_bound(&self, avoid: &BTreeSet<Var>) -> Formula {
        let mut used: BTreeSet<Var> = self.all_vars();
        used.extend(avoid);
        self.rename_bound_with(avoid, &mut used)
    }

    fn rename_bound_with(&self, avoid: &BTreeSet<Var>, used: &mut BTreeSet<Var>) -> Formula {
        let mut r = |f: &Formula| f.rename_bound_with(avoid, used);
        match self {
            Formula::Eq(..) | Formula::Lt(..) | Formula::DefPred(..) => self.clone(),
            Formula::Not(f) => Formula::not(r(f)),
            Formula::And(a, b) => {
                let a = r(a);
                Formula::and(a, r(b))
            }
            Formula::Or(a, b) => {
                let a = r(a);
                Formula::or(a, r(b))
            }
            Formula::Imp(a, b) => {
                let a = r(a);
                Formula::imp(a, r(b))
            }
            Formula::Iff(a, b) => {
                let a = r(a);
                Formula::iff(a, r(b))
            }
            Formula::Forall(w, f) | Formula::Exists(w, f) => {
                let mut w = *w;
                let mut body = r(f);
                if avoid.contains(&w) {
                    let fresh = (0..)
                        .map(Var)
                        .find(|v| !used.contains(v))
                        .expect("variable indices are unbounded");
                    used.insert(fresh);
                    body = body
                        .substitute(w, &Term::Var(fresh))
                        .expect("fresh variable is never bound");
                    w = fresh;
                }
                if matches!(self, Formula::Forall(..)) {
                    Formula::forall(w, body)
                } else {
                    Formula::exists(w, body)
                }
            }
        }
    }
}
