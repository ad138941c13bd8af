//! Defined pseudo-symbols ("pterms") with executable meta-level meaning.
//!
//! The object language only has `0, S, +, ×, =, <`. The coding apparatus
//! (`Code`, `l`, `Dec`, `Neg`, `Subs`, `Num`), the sequence predicates
//! `HetSeq` and `Ele`, and provability (`Prf`, `Prov`) enter formulas as
//! atoms whose meaning is given by an oracle over the naturals.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::coding::{self, CodingError, GodelCode};
use crate::eval::Truth;
use crate::kernel;
use crate::syntax::{CaptureError, Formula, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Defined {
    Code,
    Len,
    Dec,
    Neg,
    Subs,
    Num,
    HetSeq,
    Ele,
    Prf,
    Prov,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SymbolKind {
    Function,
    Predicate,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolKind::Function => "function",
            SymbolKind::Predicate => "predicate",
        })
    }
}

/// Registered place in the arithmetical hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Class {
    Delta0,
    Sigma1,
    Opaque,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// First symbol code of the defined-symbol band.
pub const DEFINED_CODE_BASE: u32 = 1000;

impl Defined {
    /// Registration order; fixes the symbol codes.
    pub const ALL: [Defined; 10] = [
        Defined::Code,
        Defined::Len,
        Defined::Dec,
        Defined::Neg,
        Defined::Subs,
        Defined::Num,
        Defined::HetSeq,
        Defined::Ele,
        Defined::Prf,
        Defined::Prov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Defined::Code => "Code",
            Defined::Len => "l",
            Defined::Dec => "Dec",
            Defined::Neg => "Neg",
            Defined::Subs => "Subs",
            Defined::Num => "Num",
            Defined::HetSeq => "HetSeq",
            Defined::Ele => "Ele",
            Defined::Prf => "Prf",
            Defined::Prov => "Prov",
        }
    }

    pub fn from_name(name: &str) -> Option<Defined> {
        Defined::ALL.into_iter().find(|d| d.name() == name)
    }

    pub fn kind(self) -> SymbolKind {
        match self {
            Defined::Len | Defined::Dec | Defined::Neg | Defined::Subs | Defined::Num => {
                SymbolKind::Function
            }
            _ => SymbolKind::Predicate,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Defined::Code | Defined::Len | Defined::Neg | Defined::Num | Defined::HetSeq => 1,
            Defined::Prov => 1,
            Defined::Dec | Defined::Ele | Defined::Prf => 2,
            Defined::Subs => 3,
        }
    }

    pub fn class(self) -> Class {
        match self {
            Defined::Prov => Class::Sigma1,
            _ => Class::Delta0,
        }
    }

    pub fn symbol_code(self) -> u32 {
        DEFINED_CODE_BASE + self as u32
    }

    pub fn from_symbol_code(code: u32) -> Option<Defined> {
        let i = code.checked_sub(DEFINED_CODE_BASE)?;
        Defined::ALL.get(i as usize).copied()
    }

    /// Definition in terms of other registered symbols, with parameters
    /// `v0, v1, …` in argument order.
    pub fn expansion(self) -> Option<Formula> {
        let (x, y, z) = (Var(0), Var(1), Var(2));
        let v = Term::Var;
        let len = |t: Term| Term::app(Defined::Len, vec![t]);
        let dec = |c: Term, i: Term| Term::app(Defined::Dec, vec![c, i]);
        match self {
            // Code(x) ∧ (∀y<l(x))(∀z<l(x))(y≠z → Dec(x,y)≠Dec(x,z))
            Defined::HetSeq => Some(Formula::and(
                Formula::pred(Defined::Code, vec![v(x)]),
                Formula::forall_lt(
                    y,
                    len(v(x)),
                    Formula::forall_lt(
                        z,
                        len(v(x)),
                        Formula::imp(
                            Formula::neq(v(y), v(z)),
                            Formula::neq(dec(v(x), v(y)), dec(v(x), v(z))),
                        ),
                    ),
                ),
            )),
            // Code(y) ∧ (∃u<l(y))(Dec(y,u)=x)
            Defined::Ele => Some(Formula::and(
                Formula::pred(Defined::Code, vec![v(y)]),
                Formula::exists_lt(z, len(v(y)), Formula::eq(dec(v(y), v(z)), v(x))),
            )),
            // ∃p Prf(p,x)
            Defined::Prov => Some(Formula::exists(
                y,
                Formula::pred(Defined::Prf, vec![v(y), v(x)]),
            )),
            _ => None,
        }
    }
}

impl fmt::Display for Defined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One registry entry, as reported by [`Registry::standard`].
#[derive(Clone, Debug, Serialize)]
pub struct DefinedSymbol {
    pub name: &'static str,
    pub kind: SymbolKind,
    pub arity: usize,
    pub class: Class,
    pub code: u32,
    #[serde(serialize_with = "expansion_text")]
    pub expansion: Option<Formula>,
}

fn expansion_text<S: serde::Serializer>(f: &Option<Formula>, s: S) -> Result<S::Ok, S::Error> {
    match f {
        Some(f) => s.serialize_some(&f.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Registry {
    pub symbols: Vec<DefinedSymbol>,
}

impl Registry {
    pub fn standard() -> Registry {
        let symbols = Defined::ALL
            .into_iter()
            .map(|d| DefinedSymbol {
                name: d.name(),
                kind: d.kind(),
                arity: d.arity(),
                class: d.class(),
                code: d.symbol_code(),
                expansion: d.expansion(),
            })
            .collect();
        Registry { symbols }
    }

    pub fn get(&self, name: &str) -> Option<&DefinedSymbol> {
        self.symbols.iter().find(|s| s.name == name)
    }

    /// Tab-separated table, one symbol per line.
    pub fn table(&self) -> String {
        let mut out = String::from("name\tkind\tarity\tclass\tcode\texpansion\n");
        for s in &self.symbols {
            let exp = s
                .expansion
                .as_ref()
                .map_or("-".to_string(), |f| f.to_string());
            out += &format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                s.name, s.kind, s.arity, s.class, s.code, exp
            );
        }
        out
    }
}

/// Result of applying a defined symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefinedValue {
    Number(BigUint),
    Truth(Truth),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown defined symbol {0:?}")]
    Unknown(String),
    #[error("{name} takes {expected} argument(s), got {found}")]
    Arity {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{name} is undefined here: {source}")]
    Domain {
        name: &'static str,
        source: CodingError,
    },
}

/// Applies a defined symbol to natural arguments.
///
/// `l` and `Dec` are total: a non-code has length 0 and an out-of-range or
/// non-code lookup yields 0. `Neg` and `Subs` fail outside formulas.
/// `Prov` is True only for a proof found within `budget` search steps and
/// otherwise Unknown, never False.
pub fn apply(sym: Defined, args: &[BigUint], budget: u64) -> Result<DefinedValue, RegistryError> {
    if args.len() != sym.arity() {
        return Err(RegistryError::Arity {
            name: sym.name(),
            expected: sym.arity(),
            found: args.len(),
        });
    }
    let code = |i: usize| GodelCode(args[i].clone());
    let domain = |source| RegistryError::Domain {
        name: sym.name(),
        source,
    };
    let truth = |b: bool| DefinedValue::Truth(Truth::from(b));
    Ok(match sym {
        Defined::Code => truth(decoded(&args[0]).is_some()),
        Defined::Len => DefinedValue::Number(decoded(&args[0]).map_or(0, |e| e.len()).into()),
        Defined::Dec => DefinedValue::Number(
            decoded(&args[0])
                .zip(args[1].to_usize())
                .and_then(|(e, i)| e.get(i).cloned())
                .unwrap_or_else(BigUint::zero),
        ),
        Defined::Neg => DefinedValue::Number(coding::meta_neg(&code(0)).map_err(domain)?.0),
        Defined::Subs => DefinedValue::Number(
            coding::meta_subs(&code(0), &code(1), &code(2))
                .map_err(domain)?
                .0,
        ),
        Defined::Num => DefinedValue::Number(coding::num_code(&args[0]).0),
        Defined::HetSeq => truth(decoded(&args[0]).is_some_and(|elems| {
            let mut seen = std::collections::BTreeSet::new();
            elems.iter().all(|e| seen.insert(e))
        })),
        Defined::Ele => truth(decoded(&args[1]).is_some_and(|elems| elems.contains(&args[0]))),
        Defined::Prf => truth(prf(&code(0), &code(1))),
        Defined::Prov => match coding::decode_formula(&code(0)) {
            Ok(goal) => match kernel::search_proof(&goal, budget) {
                Some(_) => DefinedValue::Truth(Truth::True),
                None => DefinedValue::Truth(Truth::Unknown),
            },
            Err(_) => DefinedValue::Truth(Truth::Unknown),
        },
    })
}

type Decoded = Option<Rc<Vec<BigUint>>>;

thread_local! {
    // Bounded quantifiers over a sequence look up the same code many times.
    static LAST_DECODED: RefCell<Option<(BigUint, Decoded)>> =
        const { RefCell::new(None) };
}

fn decoded(n: &BigUint) -> Decoded {
    LAST_DECODED.with(|cell| {
        let mut cell = cell.borrow_mut();
        if let Some((key, value)) = cell.as_ref() {
            if key == n {
                return value.clone();
            }
        }
        let value = coding::seq_decode(&GodelCode(n.clone())).ok().map(Rc::new);
        *cell = Some((n.clone(), value.clone()));
        value
    })
}

fn prf(proof: &GodelCode, goal: &GodelCode) -> bool {
    kernel::decode_proof(proof)
        .ok()
        .filter(|p| kernel::check_proof(p).is_ok())
        .and_then(|p| p.conclusion().map(coding::godel_encode))
        .is_some_and(|c| &c == goal)
}

/// [`apply`] by symbol name.
pub fn eval_defined(
    name: &str,
    args: &[BigUint],
    budget: u64,
) -> Result<DefinedValue, RegistryError> {
    let sym = Defined::from_name(name).ok_or_else(|| RegistryError::Unknown(name.to_string()))?;
    apply(sym, args, budget)
}

/// Replaces each `HetSeq`, `Ele` and `Prov` atom by its registered
/// definition, one level deep. Bound variables of a definition that clash
/// with its arguments are renamed apart.
pub fn expand_definition(f: &Formula) -> Result<Formula, CaptureError> {
    Ok(match f {
        Formula::DefPred(d, args) => match d.expansion() {
            Some(body) => {
                let map: BTreeMap<Var, Term> = args
                    .iter()
                    .enumerate()
                    .map(|(i, a)| (Var(i as u32), a.clone()))
                    .collect();
                let mut arg_vars = std::collections::BTreeSet::new();
                args.iter().for_each(|a| a.collect_vars(&mut arg_vars));
                body.rename_bound(&arg_vars).substitute_all(&map)?
            }
            None => f.clone(),
        },
        Formula::Eq(..) | Formula::Lt(..) => f.clone(),
        Formula::Not(g) => Formula::not(expand_definition(g)?),
        Formula::And(l, r) => Formula::and(expand_definition(l)?, expand_definition(r)?),
        Formula::Or(l, r) => Formula::or(expand_definition(l)?, expand_definition(r)?),
        Formula::Imp(l, r) => Formula::imp(expand_definition(l)?, expand_definition(r)?),
        Formula::Iff(l, r) => Formula::iff(expand_definition(l)?, expand_definition(r)?),
        Formula::Forall(v, g) => Formula::forall(*v, expand_definition(g)?),
        Formula::Exists(v, g) => Formula::exists(*v, expand_definition(g)?),
    })
}

/// Convenience for small numeric arguments.
pub fn number(v: &DefinedValue) -> Option<u64> {
    match v {
        DefinedValue::Number(n) => n.to_u64(),
        DefinedValue::Truth(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{godel_encode, seq_encode};
    use crate::syntax::{classify_delta0, classify_sigma1, parse_formula};

    fn nums(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn codes_follow_registration_order() {
        assert_eq!(Defined::Code.symbol_code(), 1000);
        assert_eq!(Defined::Prov.symbol_code(), 1009);
        for d in Defined::ALL {
            assert_eq!(Defined::from_symbol_code(d.symbol_code()), Some(d));
            assert_eq!(Defined::from_name(d.name()), Some(d));
        }
        assert_eq!(Defined::from_symbol_code(1010), None);
    }

    #[test]
    fn expansions_agree_with_registered_class() {
        for d in Defined::ALL {
            if let Some(body) = d.expansion() {
                match d.class() {
                    Class::Delta0 => assert!(classify_delta0(&body), "{d}"),
                    Class::Sigma1 => {
                        assert!(classify_sigma1(&body), "{d}");
                        assert!(!classify_delta0(&body), "{d}");
                    }
                    Class::Opaque => {}
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let c = seq_encode([3u32, 5]);
        assert_eq!(c, GodelCode::from(4969));
        assert_eq!(
            eval_defined("Ele", &nums(&[3, 4969]), 0).unwrap(),
            DefinedValue::Truth(Truth::True)
        );
        assert_eq!(
            eval_defined("Ele", &nums(&[4, 4969]), 0).unwrap(),
            DefinedValue::Truth(Truth::False)
        );
        assert_eq!(
            number(&eval_defined("l", &nums(&[4969]), 0).unwrap()),
            Some(2)
        );
        assert_eq!(
            eval_defined("HetSeq", &[seq_encode([3u32, 5]).0], 0).unwrap(),
            DefinedValue::Truth(Truth::True)
        );
        assert_eq!(
            eval_defined("HetSeq", &[seq_encode([3u32, 3]).0], 0).unwrap(),
            DefinedValue::Truth(Truth::False)
        );
    }

    #[test]
    fn subs_oracle() {
        let enc = |s: &str| godel_encode(&parse_formula(s).unwrap()).0;
        let args = vec![
            enc("(v0=0)"),
            godel_encode(&Term::var(0)).0,
            godel_encode(&Term::unary(1)).0,
        ];
        assert_eq!(
            eval_defined("Subs", &args, 0).unwrap(),
            DefinedValue::Number(enc("(S0=0)"))
        );
    }

    #[test]
    fn partial_oracles_report_domain_errors() {
        assert!(matches!(
            eval_defined("Neg", &nums(&[29]), 0),
            Err(RegistryError::Domain { name: "Neg", .. })
        ));
        assert!(matches!(
            eval_defined("Dec", &nums(&[4969]), 0),
            Err(RegistryError::Arity {
                expected: 2,
                found: 1,
                ..
            })
        ));
        assert!(matches!(
            eval_defined("Foo", &nums(&[1]), 0),
            Err(RegistryError::Unknown(_))
        ));
        // total coding functions
        assert_eq!(
            number(&eval_defined("l", &nums(&[10]), 0).unwrap()),
            Some(0)
        );
        assert_eq!(
            number(&eval_defined("Dec", &nums(&[4969, 7]), 0).unwrap()),
            Some(0)
        );
    }

    #[test]
    fn prov_finds_reflexivity() {
        let c = godel_encode(&parse_formula("(0=0)").unwrap()).0;
        assert_eq!(
            eval_defined("Prov", &[c], 50).unwrap(),
            DefinedValue::Truth(Truth::True)
        );
        let bad = godel_encode(&parse_formula("¬(0=0)").unwrap()).0;
        assert_eq!(
            eval_defined("Prov", &[bad], 200).unwrap(),
            DefinedValue::Truth(Truth::Unknown)
        );
    }

    #[test]
    fn expand_examples() {
        let het = expand_definition(&parse_formula("HetSeq(v0)").unwrap()).unwrap();
        assert_eq!(het, Defined::HetSeq.expansion().unwrap());
        assert_eq!(
            het.to_string(),
            "(Code(v0)∧(∀v1<l(v0))(∀v2<l(v0))(¬(v1=v2)→¬(Dec(v0,v1)=Dec(v0,v2))))"
        );
        let prov = expand_definition(&parse_formula("Prov(v0)").unwrap()).unwrap();
        assert_eq!(prov, parse_formula("∃v1 Prf(v1,v0)").unwrap());
        let plain = parse_formula("(0=0)").unwrap();
        assert_eq!(expand_definition(&plain).unwrap(), plain);
        let ele = expand_definition(&parse_formula("Ele(SSS0,v5)").unwrap()).unwrap();
        assert_eq!(
            ele,
            parse_formula("(Code(v5)∧(∃v2<l(v5))(Dec(v5,v2)=SSS0))").unwrap()
        );
        let clash = expand_definition(&parse_formula("HetSeq(v2)").unwrap()).unwrap();
        assert_eq!(
            clash,
            parse_formula("(Code(v2)∧(∀v1<l(v2))(∀v3<l(v2))(¬(v1=v3)→¬(Dec(v2,v1)=Dec(v2,v3))))")
                .unwrap()
        );
    }

    #[test]
    fn table_lists_every_symbol() {
        let t = Registry::standard().table();
        assert_eq!(t.lines().count(), 11);
        assert!(t.contains("Prov\tpredicate\t1\tSigma1\t1009\t∃v1 Prf(v1,v0)"));
        assert_eq!(Registry::standard().get("l").unwrap().arity, 1);
    }
}
