use thiserror::Error;

use super::token::{lex, Token};
use super::{Expr, Formula, Term, Var};
use crate::registry::{Defined, SymbolKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("unexpected character {found:?} at offset {offset}")]
    Lex { offset: usize, found: char },
    #[error("unknown symbol {name:?} at offset {offset}")]
    UnknownSymbol { offset: usize, name: String },
    #[error("variable {text} at offset {offset} exceeds the codable range v0..v983")]
    VarIndex { offset: usize, text: String },
    #[error("expected {expected} at offset {offset}, found {found}")]
    Unexpected {
        offset: usize,
        expected: &'static str,
        found: String,
    },
    #[error("{name} takes {expected} argument(s), got {found}")]
    Arity {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{name} is a {kind}, not allowed at offset {offset}")]
    Kind {
        name: &'static str,
        kind: SymbolKind,
        offset: usize,
    },
    #[error("trailing input at offset {offset}")]
    Trailing { offset: usize },
}

impl SyntaxError {
    fn offset(&self) -> usize {
        match self {
            SyntaxError::Lex { offset, .. }
            | SyntaxError::UnknownSymbol { offset, .. }
            | SyntaxError::VarIndex { offset, .. }
            | SyntaxError::Unexpected { offset, .. }
            | SyntaxError::Kind { offset, .. }
            | SyntaxError::Trailing { offset } => *offset,
            SyntaxError::Arity { .. } => 0,
        }
    }
}

type PResult<T> = Result<T, SyntaxError>;

/// Recursive-descent parser over a token stream. Offsets are byte offsets
/// for text input and symbol positions for decoded codes.
struct Parser<'a> {
    toks: &'a [(usize, Token)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Token> {
        self.toks.get(self.pos).map(|(_, t)| *t)
    }

    fn peek_at(&self, k: usize) -> Option<Token> {
        self.toks.get(self.pos + k).map(|(_, t)| *t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn found(&self) -> String {
        self.peek().map_or_else(
            || "end of input".to_string(),
            |t| format!("{:?}", t.describe()),
        )
    }

    fn unexpected<T>(&self, expected: &'static str) -> PResult<T> {
        Err(SyntaxError::Unexpected {
            offset: self.offset(),
            expected,
            found: self.found(),
        })
    }

    fn expect(&mut self, tok: Token, expected: &'static str) -> PResult<()> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(expected)
        }
    }

    fn var(&mut self) -> PResult<Var> {
        match self.peek() {
            Some(Token::Var(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => self.unexpected("a variable"),
        }
    }

    fn args(&mut self, d: Defined) -> PResult<Vec<Term>> {
        self.expect(Token::LParen, "'('")?;
        let mut args = Vec::new();
        while self.peek() != Some(Token::RParen) {
            if !args.is_empty() && self.peek() == Some(Token::Comma) {
                self.pos += 1;
            }
            args.push(self.term()?);
        }
        self.pos += 1;
        if args.len() != d.arity() {
            return Err(SyntaxError::Arity {
                name: d.name(),
                expected: d.arity(),
                found: args.len(),
            });
        }
        Ok(args)
    }

    fn term(&mut self) -> PResult<Term> {
        match self.peek() {
            Some(Token::Zero) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Token::Var(v)) => {
                self.pos += 1;
                Ok(Term::Var(v))
            }
            Some(Token::Succ) => {
                self.pos += 1;
                Ok(Term::succ(self.term()?))
            }
            Some(Token::Sym(d)) => {
                if d.kind() != SymbolKind::Function {
                    return Err(SyntaxError::Kind {
                        name: d.name(),
                        kind: d.kind(),
                        offset: self.offset(),
                    });
                }
                self.pos += 1;
                Ok(Term::DefFun(d, self.args(d)?))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let l = self.term()?;
                let op = self.peek();
                if !matches!(op, Some(Token::Plus | Token::Times)) {
                    return self.unexpected("'+' or '×'");
                }
                self.pos += 1;
                let r = self.term()?;
                self.expect(Token::RParen, "')'")?;
                Ok(if op == Some(Token::Plus) {
                    Term::add(l, r)
                } else {
                    Term::mul(l, r)
                })
            }
            _ => self.unexpected("a term"),
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        match self.peek() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.formula()?))
            }
            Some(q @ (Token::Forall | Token::Exists)) => {
                self.pos += 1;
                let v = self.var()?;
                let body = self.formula()?;
                Ok(if q == Token::Forall {
                    Formula::forall(v, body)
                } else {
                    Formula::exists(v, body)
                })
            }
            Some(Token::Sym(d)) => {
                if d.kind() != SymbolKind::Predicate {
                    return Err(SyntaxError::Kind {
                        name: d.name(),
                        kind: d.kind(),
                        offset: self.offset(),
                    });
                }
                self.pos += 1;
                Ok(Formula::DefPred(d, self.args(d)?))
            }
            Some(Token::LParen) => {
                if matches!(self.peek_at(1), Some(Token::Forall | Token::Exists))
                    && matches!(self.peek_at(2), Some(Token::Var(_)))
                    && matches!(self.peek_at(3), Some(Token::Lt | Token::Le))
                {
                    return self.bounded();
                }
                let start = self.pos;
                match self.atom() {
                    Ok(f) => Ok(f),
                    Err(atom_err) => {
                        let atom_pos = self.pos;
                        self.pos = start;
                        self.compound().map_err(|e| {
                            // report whichever reading got further
                            if atom_err.offset() > e.offset() && atom_pos > start + 1 {
                                atom_err
                            } else {
                                e
                            }
                        })
                    }
                }
            }
            _ => self.unexpected("a formula"),
        }
    }

    fn bounded(&mut self) -> PResult<Formula> {
        self.pos += 1;
        let q = self.peek();
        self.pos += 1;
        let v = self.var()?;
        let strict = self.peek() == Some(Token::Lt);
        self.pos += 1;
        let t = self.term()?;
        let bound = if strict { t } else { Term::succ(t) };
        self.expect(Token::RParen, "')'")?;
        let body = self.formula()?;
        Ok(if q == Some(Token::Forall) {
            Formula::forall_lt(v, bound, body)
        } else {
            Formula::exists_lt(v, bound, body)
        })
    }

    fn atom(&mut self) -> PResult<Formula> {
        self.expect(Token::LParen, "'('")?;
        let l = self.term()?;
        let rel = self.peek();
        if !matches!(rel, Some(Token::Eq | Token::Lt | Token::Le | Token::Neq)) {
            return self.unexpected("a relation symbol");
        }
        self.pos += 1;
        let r = self.term()?;
        self.expect(Token::RParen, "')'")?;
        Ok(match rel {
            Some(Token::Eq) => Formula::Eq(l, r),
            Some(Token::Lt) => Formula::Lt(l, r),
            Some(Token::Le) => Formula::le(l, r),
            _ => Formula::neq(l, r),
        })
    }

    fn compound(&mut self) -> PResult<Formula> {
        self.expect(Token::LParen, "'('")?;
        let l = self.formula()?;
        let op = self.peek();
        let build: fn(Formula, Formula) -> Formula = match op {
            Some(Token::And) => Formula::and,
            Some(Token::Or) => Formula::or,
            Some(Token::Imp) => Formula::imp,
            Some(Token::Iff) => Formula::iff,
            _ => return self.unexpected("a connective"),
        };
        self.pos += 1;
        let r = self.formula()?;
        self.expect(Token::RParen, "')'")?;
        Ok(build(l, r))
    }

    fn finish(&self) -> PResult<()> {
        if self.pos < self.toks.len() {
            Err(SyntaxError::Trailing {
                offset: self.offset(),
            })
        } else {
            Ok(())
        }
    }
}

fn run<'t, T>(
    toks: &'t [(usize, Token)],
    end: usize,
    f: impl FnOnce(&mut Parser<'t>) -> PResult<T>,
) -> PResult<T> {
    let mut p = Parser { toks, pos: 0, end };
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let toks = lex(text)?;
    run(&toks, text.len(), Parser::formula)
}

pub fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let toks = lex(text)?;
    run(&toks, text.len(), Parser::term)
}

/// Parses a formula, or failing that a term.
pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    let toks = lex(text)?;
    parse_tokens(&toks, text.len())
}

/// Parses a bare symbol sequence, as recovered from a Gödel number.
/// Offsets in errors are symbol positions.
pub fn tokens_to_expr(tokens: &[Token]) -> Result<Expr, SyntaxError> {
    let toks: Vec<(usize, Token)> = tokens.iter().copied().enumerate().collect();
    parse_tokens(&toks, toks.len())
}

fn parse_tokens(toks: &[(usize, Token)], end: usize) -> Result<Expr, SyntaxError> {
    match run(toks, end, Parser::formula) {
        Ok(f) => Ok(Expr::Formula(f)),
        Err(formula_err) => run(toks, end, Parser::term)
            .map(Expr::Term)
            .map_err(|term_err| {
                if term_err.offset() > formula_err.offset() {
                    term_err
                } else {
                    formula_err
                }
            }),
    }
}
