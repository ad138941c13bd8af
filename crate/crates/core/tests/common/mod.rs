//! Seeded generators and independent oracles shared by the integration tests.
//!
//! The oracles here do not call into the library: sequence codes are built
//! and split as decimal digit strings, and formulas are interpreted by a
//! small evaluator over `u64`.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selfref::registry::Defined;
use selfref::syntax::{Formula, Term, Var};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- digit oracle

/// Octal digits of `n` written with digits `1..=8`, then `9`.
pub fn oracle_element_digits(mut n: u64) -> String {
    let mut octal = Vec::new();
    loop {
        octal.push(n % 8);
        n /= 8;
        if n == 0 {
            break;
        }
    }
    let mut s: String = octal
        .iter()
        .rev()
        .map(|d| char::from(b'1' + *d as u8))
        .collect();
    s.push('9');
    s
}

/// Decimal digit string of the code of `seq`; `"0"` for the empty sequence.
pub fn oracle_seq_digits(seq: &[u64]) -> String {
    if seq.is_empty() {
        return "0".to_string();
    }
    seq.iter().map(|&n| oracle_element_digits(n)).collect()
}

/// Splits a decimal digit string into elements, or `None` if it is not a code.
pub fn oracle_seq_split(digits: &str) -> Option<Vec<u64>> {
    if digits == "0" {
        return Some(Vec::new());
    }
    let body = digits.strip_suffix('9')?;
    body.split('9')
        .map(|run| {
            if run.is_empty() || (run.len() > 1 && run.starts_with('1')) {
                return None;
            }
            run.bytes().try_fold(0u64, |acc, b| match b {
                b'1'..=b'8' => Some(acc * 8 + u64::from(b - b'1')),
                _ => None,
            })
        })
        .collect()
}

pub fn oracle_decode(n: u64) -> Option<Vec<u64>> {
    oracle_seq_split(&n.to_string())
}

/// Code of the negation: the symbol `¬` (6) comes first, so its digits
/// `79` are prefixed.
pub fn oracle_neg_digits(code_digits: &str) -> String {
    format!("79{code_digits}")
}

// ----------------------------------------------------------- naive evaluator

/// Reference semantics for Δ0 formulas over `u64`, with `Code`, `l` and
/// `Dec` read off the digit oracle. Arithmetic overflow panics; generators
/// keep values small.
pub struct Naive {
    env: Vec<Option<u64>>,
    last: Option<(u64, Option<Vec<u64>>)>,
}

impl Default for Naive {
    fn default() -> Self {
        Naive {
            env: vec![None; 64],
            last: None,
        }
    }
}

impl Naive {
    pub fn set(&mut self, v: Var, n: u64) {
        self.env[v.0 as usize] = Some(n);
    }

    fn decoded(&mut self, n: u64) -> Option<&Vec<u64>> {
        if self.last.as_ref().map(|(k, _)| *k) != Some(n) {
            self.last = Some((n, oracle_decode(n)));
        }
        self.last.as_ref().and_then(|(_, d)| d.as_ref())
    }

    pub fn term(&mut self, t: &Term) -> u64 {
        match t {
            Term::Zero => 0,
            Term::Var(v) => self.env[v.0 as usize].unwrap_or_else(|| panic!("{v} unassigned")),
            Term::Succ(s) => self.term(s).checked_add(1).expect("overflow"),
            Term::Add(a, b) => {
                let (a, b) = (self.term(a), self.term(b));
                a.checked_add(b).expect("overflow")
            }
            Term::Mul(a, b) => {
                let (a, b) = (self.term(a), self.term(b));
                a.checked_mul(b).expect("overflow")
            }
            Term::DefFun(Defined::Len, args) => {
                let c = self.term(&args[0]);
                self.decoded(c).map_or(0, |e| e.len() as u64)
            }
            Term::DefFun(Defined::Dec, args) => {
                let (c, i) = (self.term(&args[0]), self.term(&args[1]));
                self.decoded(c)
                    .and_then(|e| e.get(i as usize).copied())
                    .unwrap_or(0)
            }
            Term::DefFun(d, _) => panic!("{d} is not interpreted by the naive evaluator"),
        }
    }

    /// Truth of `f`; every quantifier must have the guarded form `v<t`.
    pub fn holds(&mut self, f: &Formula) -> bool {
        match f {
            Formula::Eq(a, b) => self.term(a) == self.term(b),
            Formula::Lt(a, b) => self.term(a) < self.term(b),
            Formula::Not(g) => !self.holds(g),
            Formula::And(a, b) => self.holds(a) && self.holds(b),
            Formula::Or(a, b) => self.holds(a) || self.holds(b),
            Formula::Imp(a, b) => !self.holds(a) || self.holds(b),
            Formula::Iff(a, b) => self.holds(a) == self.holds(b),
            Formula::Forall(v, g) => match &**g {
                Formula::Imp(guard, body) => {
                    let bound = self.guard_bound(*v, guard);
                    self.over(*v, bound, |s| s.holds(body), false)
                }
                _ => panic!("unbounded ∀"),
            },
            Formula::Exists(v, g) => match &**g {
                Formula::And(guard, body) => {
                    let bound = self.guard_bound(*v, guard);
                    self.over(*v, bound, |s| s.holds(body), true)
                }
                _ => panic!("unbounded ∃"),
            },
            Formula::DefPred(Defined::Code, args) => {
                let c = self.term(&args[0]);
                self.decoded(c).is_some()
            }
            Formula::DefPred(d, _) => panic!("{d} is not interpreted by the naive evaluator"),
        }
    }

    fn guard_bound(&mut self, v: Var, guard: &Formula) -> u64 {
        match guard {
            Formula::Lt(Term::Var(w), t) if *w == v && !t.contains_var(v) => self.term(t),
            _ => panic!("quantifier on {v} is not bounded"),
        }
    }

    /// Whether `body` holds for some (`exists`) or every instance below `bound`.
    fn over(
        &mut self,
        v: Var,
        bound: u64,
        mut body: impl FnMut(&mut Self) -> bool,
        exists: bool,
    ) -> bool {
        let saved = self.env[v.0 as usize];
        let mut result = !exists;
        for i in 0..bound {
            self.env[v.0 as usize] = Some(i);
            if body(self) == exists {
                result = exists;
                break;
            }
        }
        self.env[v.0 as usize] = saved;
        result
    }
}

// ------------------------------------------------------------------ generators

pub fn gen_seq(r: &mut impl Rng, max_len: usize, bound: u64) -> Vec<u64> {
    let len = r.gen_range(0..=max_len);
    (0..len).map(|_| r.gen_range(0..bound)).collect()
}

pub fn gen_var(r: &mut impl Rng) -> Var {
    if r.gen_bool(0.8) {
        Var(r.gen_range(0..6))
    } else {
        Var(r.gen_range(0..=983))
    }
}

/// Any term, including defined function symbols, of depth at most `depth`.
pub fn gen_term(r: &mut impl Rng, depth: u32) -> Term {
    if depth <= 1 {
        return match r.gen_range(0..3) {
            0 => Term::Zero,
            1 => Term::Var(gen_var(r)),
            _ => Term::num(r.gen_range(0..100)),
        };
    }
    let d = depth - 1;
    match r.gen_range(0..8) {
        0 => Term::Zero,
        1 => Term::Var(gen_var(r)),
        2 => Term::succ(gen_term(r, d)),
        3 => Term::add(gen_term(r, d), gen_term(r, d)),
        4 => Term::mul(gen_term(r, d), gen_term(r, d)),
        _ => {
            let f = *[
                Defined::Len,
                Defined::Dec,
                Defined::Neg,
                Defined::Subs,
                Defined::Num,
            ]
            .choose(r)
            .unwrap();
            Term::app(f, (0..f.arity()).map(|_| gen_term(r, d)).collect())
        }
    }
}

fn gen_atom(r: &mut impl Rng, depth: u32) -> Formula {
    let d = depth.clamp(1, 3);
    match r.gen_range(0..3) {
        0 => Formula::eq(gen_term(r, d), gen_term(r, d)),
        1 => Formula::lt(gen_term(r, d), gen_term(r, d)),
        _ => {
            let p = *[
                Defined::Code,
                Defined::HetSeq,
                Defined::Ele,
                Defined::Prf,
                Defined::Prov,
            ]
            .choose(r)
            .unwrap();
            Formula::pred(p, (0..p.arity()).map(|_| gen_term(r, d.min(2))).collect())
        }
    }
}

/// Any formula, including defined predicates and unbounded quantifiers.
pub fn gen_formula(r: &mut impl Rng, depth: u32) -> Formula {
    let d = depth.saturating_sub(1);
    if depth <= 1 {
        return gen_atom(r, 1);
    }
    match r.gen_range(0..9) {
        0 | 1 => gen_atom(r, d),
        2 => Formula::not(gen_formula(r, d)),
        3 => Formula::and(gen_formula(r, d), gen_formula(r, d)),
        4 => Formula::or(gen_formula(r, d), gen_formula(r, d)),
        5 => Formula::imp(gen_formula(r, d), gen_formula(r, d)),
        6 => Formula::iff(gen_formula(r, d), gen_formula(r, d)),
        7 => Formula::forall(gen_var(r), gen_formula(r, d)),
        _ => Formula::exists(gen_var(r), gen_formula(r, d)),
    }
}

/// Arithmetic term over `scope` with small constants.
pub fn gen_small_term(r: &mut impl Rng, depth: u32, scope: &[Var]) -> Term {
    fn leaf(r: &mut impl Rng, scope: &[Var]) -> Term {
        if !scope.is_empty() && r.gen_bool(0.6) {
            Term::Var(scope[r.gen_range(0..scope.len())])
        } else {
            Term::num(r.gen_range(0..=20))
        }
    }
    if depth <= 1 {
        return leaf(r, scope);
    }
    let d = depth - 1;
    match r.gen_range(0..5) {
        0 => leaf(r, scope),
        1 => Term::succ(gen_small_term(r, d, scope)),
        2 => Term::add(gen_small_term(r, d, scope), gen_small_term(r, d, scope)),
        3 => Term::mul(gen_small_term(r, d, scope), gen_small_term(r, d, scope)),
        _ => leaf(r, scope),
    }
}

const QUANTIFIED: [Var; 3] = [Var(1), Var(2), Var(3)];

/// Δ0 formula over the variables in `scope`; bounds are numerals up to 20
/// or variables already in scope.
pub fn gen_delta0(r: &mut impl Rng, depth: u32, scope: &mut Vec<Var>) -> Formula {
    fn atom(r: &mut impl Rng, scope: &[Var]) -> Formula {
        let (a, b) = (gen_small_term(r, 2, scope), gen_small_term(r, 2, scope));
        if r.gen_bool(0.5) {
            Formula::eq(a, b)
        } else {
            Formula::lt(a, b)
        }
    }
    if depth <= 1 {
        return atom(r, scope);
    }
    let d = depth - 1;
    match r.gen_range(0..8) {
        0 => atom(r, scope),
        1 => Formula::not(gen_delta0(r, d, scope)),
        2 => Formula::and(gen_delta0(r, d, scope), gen_delta0(r, d, scope)),
        3 => Formula::or(gen_delta0(r, d, scope), gen_delta0(r, d, scope)),
        4 => Formula::imp(gen_delta0(r, d, scope), gen_delta0(r, d, scope)),
        5 => Formula::iff(gen_delta0(r, d, scope), gen_delta0(r, d, scope)),
        _ => {
            let Some(&v) = QUANTIFIED.iter().find(|v| !scope.contains(v)) else {
                return atom(r, scope);
            };
            let bound = if !scope.is_empty() && r.gen_bool(0.3) {
                Term::Var(scope[r.gen_range(0..scope.len())])
            } else {
                Term::num(r.gen_range(0..=20))
            };
            scope.push(v);
            let body = gen_delta0(r, d, scope);
            scope.pop();
            if r.gen_bool(0.5) {
                Formula::forall_lt(v, bound, body)
            } else {
                Formula::exists_lt(v, bound, body)
            }
        }
    }
}

pub fn gen_delta0_sentence(r: &mut impl Rng) -> Formula {
    let depth = r.gen_range(1..=5);
    gen_delta0(r, depth, &mut Vec::new())
}

/// Δ0 formula with defined Δ0 symbols mixed in, free variables among v0..v4.
pub fn gen_delta0_open(r: &mut impl Rng) -> Formula {
    let mut scope = vec![Var(0), Var(4)];
    let depth = r.gen_range(1..=4);
    let f = gen_delta0(r, depth, &mut scope);
    match r.gen_range(0..4) {
        0 => Formula::and(f, Formula::pred(Defined::HetSeq, vec![Term::var(0)])),
        1 => Formula::or(
            Formula::pred(Defined::Ele, vec![Term::var(4), Term::var(0)]),
            f,
        ),
        2 => Formula::imp(
            Formula::eq(Term::app(Defined::Len, vec![Term::var(0)]), Term::num(2)),
            f,
        ),
        _ => f,
    }
}

/// An existential block over a Δ0 matrix, or a `Prov` atom under one.
pub fn gen_sigma1(r: &mut impl Rng) -> Formula {
    let mut f = if r.gen_bool(0.15) {
        Formula::pred(Defined::Prov, vec![Term::var(0)])
    } else {
        gen_delta0_open(r)
    };
    for _ in 0..r.gen_range(0..3) {
        f = Formula::exists(Var(r.gen_range(0..6)), f);
    }
    f
}

/// A formula φ(v0, v1) in which v1 occurs free.
pub fn gen_phi_xy(r: &mut impl Rng) -> Formula {
    let (x, y) = (Term::var(0), Term::var(1));
    let base = match r.gen_range(0..5) {
        0 => Formula::eq(y.clone(), x.clone()),
        1 => Formula::lt(x.clone(), y.clone()),
        2 => Formula::pred(Defined::Prov, vec![y.clone()]),
        3 => Formula::pred(Defined::Ele, vec![x.clone(), y.clone()]),
        _ => Formula::eq(
            Term::app(Defined::Neg, vec![y.clone()]),
            Term::succ(x.clone()),
        ),
    };
    let extra = {
        let depth = r.gen_range(1..=3);
        gen_delta0(r, depth, &mut vec![Var(0), Var(1)])
    };
    match r.gen_range(0..4) {
        0 => base,
        1 => Formula::and(base, extra),
        2 => Formula::not(Formula::imp(extra, base)),
        _ => Formula::exists(Var(2), Formula::and(Formula::lt(Term::var(2), x), base)),
    }
}
