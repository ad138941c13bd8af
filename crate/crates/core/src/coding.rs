//! Sequence coding and Gödel numbering.
//!
//! A finite sequence of naturals is coded as a decimal digit string: each
//! element is written in base 8 with every octal digit `d` emitted as the
//! decimal digit `d + 1`, and each element is terminated by a `9`. The empty
//! sequence is coded by `0`. So `[3, 5]` is `4969` and `[9]` is `229`.
//!
//! An expression is coded as the sequence of its symbol codes:
//!
//! | symbol | code | symbol | code |
//! |--------|------|--------|------|
//! | `0`    | 1    | `∨`    | 8    |
//! | `S`    | 2    | `→`    | 9    |
//! | `+`    | 3    | `↔`    | 10   |
//! | `×`    | 4    | `∀`    | 11   |
//! | `=`    | 5    | `∃`    | 12   |
//! | `¬`    | 6    | `(`    | 13   |
//! | `∧`    | 7    | `)`    | 14   |
//! | `<`    | 15   | `vᵢ`   | 16+i |
//!
//! Defined symbols take `1000 + j` in registration order. Argument commas and
//! the space after an unbounded quantifier are layout and are not coded.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::syntax::{tokens_to_expr, CaptureError, Expr, Formula, SyntaxError, Term, Token, Var};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GodelCode(pub BigUint);

impl GodelCode {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    /// Number of decimal digits.
    pub fn digits(&self) -> usize {
        if self.0.is_zero() {
            1
        } else {
            self.0.to_str_radix(10).len()
        }
    }
}

impl From<BigUint> for GodelCode {
    fn from(n: BigUint) -> Self {
        GodelCode(n)
    }
}

impl From<u64> for GodelCode {
    fn from(n: u64) -> Self {
        GodelCode(BigUint::from(n))
    }
}

impl fmt::Display for GodelCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for GodelCode {
    type Err = CodingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CodingError::Malformed(s.to_string()));
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(GodelCode)
            .ok_or_else(|| CodingError::Malformed(s.to_string()))
    }
}

impl Serialize for GodelCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodingError {
    #[error("{0} is not a sequence code")]
    NotACode(GodelCode),
    #[error("{0:?} is not a decimal natural number")]
    Malformed(String),
    #[error("index {index} out of range for a sequence of length {len}")]
    IndexOutOfRange { index: BigUint, len: usize },
    #[error("{0} is not a symbol code")]
    UnknownSymbol(BigUint),
    #[error("decoded symbols do not parse: {0}")]
    Syntax(#[from] SyntaxError),
    #[error("code does not denote a formula")]
    NotAFormula,
    #[error("code does not denote a term")]
    NotATerm,
    #[error("code does not denote a variable")]
    NotAVariable,
    #[error(transparent)]
    Capture(#[from] CaptureError),
}

fn push_element(n: &BigUint, out: &mut Vec<u8>) {
    out.extend(n.to_radix_be(8).into_iter().map(|d| b'1' + d));
    out.push(b'9');
}

fn from_digits(digits: &[u8]) -> GodelCode {
    if digits.is_empty() {
        return GodelCode::default();
    }
    GodelCode(BigUint::parse_bytes(digits, 10).expect("digits are decimal"))
}

/// Codes a finite sequence of naturals.
pub fn seq_encode<I>(seq: I) -> GodelCode
where
    I: IntoIterator,
    I::Item: Into<BigUint>,
{
    let mut digits = Vec::new();
    for n in seq {
        push_element(&n.into(), &mut digits);
    }
    from_digits(&digits)
}

/// Splits a code into its element digit runs, or `None` if it is not a code.
fn element_runs(c: &GodelCode) -> Option<Vec<Vec<u8>>> {
    if c.0.is_zero() {
        return Some(Vec::new());
    }
    let s = c.0.to_str_radix(10).into_bytes();
    if s.last() != Some(&b'9') {
        return None;
    }
    let mut runs = Vec::new();
    for run in s[..s.len() - 1].split(|&b| b == b'9') {
        // a leading octal zero would make the code non-canonical
        if run.is_empty() || run.contains(&b'0') || (run.len() > 1 && run[0] == b'1') {
            return None;
        }
        runs.push(run.to_vec());
    }
    Some(runs)
}

fn run_value(run: &[u8]) -> BigUint {
    let octal: Vec<u8> = run.iter().map(|b| b - b'1').collect();
    BigUint::from_radix_be(&octal, 8).expect("octal digits")
}

pub fn seq_decode(c: &GodelCode) -> Result<Vec<BigUint>, CodingError> {
    element_runs(c)
        .map(|runs| runs.iter().map(|r| run_value(r)).collect())
        .ok_or_else(|| CodingError::NotACode(c.clone()))
}

pub fn is_code(n: &BigUint) -> bool {
    element_runs(&GodelCode(n.clone())).is_some()
}

pub fn seq_len(c: &GodelCode) -> Result<usize, CodingError> {
    element_runs(c)
        .map(|r| r.len())
        .ok_or_else(|| CodingError::NotACode(c.clone()))
}

/// The `k`-th element, counting from 0.
pub fn seq_at(c: &GodelCode, k: &BigUint) -> Result<BigUint, CodingError> {
    let runs = element_runs(c).ok_or_else(|| CodingError::NotACode(c.clone()))?;
    k.to_usize()
        .and_then(|i| runs.get(i))
        .map(|r| run_value(r))
        .ok_or_else(|| CodingError::IndexOutOfRange {
            index: k.clone(),
            len: runs.len(),
        })
}

/// Anything with a symbol sequence.
pub trait Coded {
    fn symbols(&self) -> Vec<Token>;
}

impl Coded for Term {
    fn symbols(&self) -> Vec<Token> {
        self.tokens()
    }
}

impl Coded for Formula {
    fn symbols(&self) -> Vec<Token> {
        self.tokens()
    }
}

impl Coded for Expr {
    fn symbols(&self) -> Vec<Token> {
        match self {
            Expr::Term(t) => t.tokens(),
            Expr::Formula(f) => f.tokens(),
        }
    }
}

impl Coded for Var {
    fn symbols(&self) -> Vec<Token> {
        vec![Token::Var(*self)]
    }
}

/// The Gödel number `⌜e⌝`.
pub fn godel_encode<E: Coded + ?Sized>(e: &E) -> GodelCode {
    let mut digits = Vec::new();
    for tok in e.symbols() {
        let code = tok
            .code()
            .expect("coded expressions contain no sugar tokens");
        push_element(&BigUint::from(code), &mut digits);
    }
    from_digits(&digits)
}

/// The symbol sequence a code stands for.
pub fn decode_symbols(c: &GodelCode) -> Result<Vec<Token>, CodingError> {
    seq_decode(c)?
        .into_iter()
        .map(|n| {
            n.to_u32()
                .and_then(Token::from_code)
                .ok_or(CodingError::UnknownSymbol(n))
        })
        .collect()
}

pub fn godel_decode(c: &GodelCode) -> Result<Expr, CodingError> {
    Ok(tokens_to_expr(&decode_symbols(c)?)?)
}

pub fn decode_formula(c: &GodelCode) -> Result<Formula, CodingError> {
    match godel_decode(c)? {
        Expr::Formula(f) => Ok(f),
        Expr::Term(_) => Err(CodingError::NotAFormula),
    }
}

pub fn decode_term(c: &GodelCode) -> Result<Term, CodingError> {
    match godel_decode(c) {
        Ok(Expr::Term(t)) => Ok(t),
        Ok(Expr::Formula(_)) => Err(CodingError::NotATerm),
        Err(e) => Err(e),
    }
}

/// `Neg(⌜φ⌝) = ⌜¬φ⌝`.
pub fn meta_neg(c: &GodelCode) -> Result<GodelCode, CodingError> {
    let f = decode_formula(c)?;
    Ok(godel_encode(&Formula::not(f)))
}

/// `Subs(⌜φ⌝, ⌜vᵢ⌝, ⌜t⌝) = ⌜φ(t/vᵢ)⌝`.
pub fn meta_subs(c: &GodelCode, v: &GodelCode, t: &GodelCode) -> Result<GodelCode, CodingError> {
    let f = decode_formula(c)?;
    let var = match decode_term(v) {
        Ok(Term::Var(var)) => var,
        _ => return Err(CodingError::NotAVariable),
    };
    let t = decode_term(t)?;
    Ok(godel_encode(&f.substitute(var, &t)?))
}

/// `Num(n)`: the code of the canonical numeral for `n`.
pub fn num_code(n: &BigUint) -> GodelCode {
    godel_encode(&Term::numeral(n))
}
