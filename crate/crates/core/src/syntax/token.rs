use super::parse::SyntaxError;
use super::{Formula, Term, Var};
use crate::registry::Defined;

/// One object-language symbol, plus the input-only sugar tokens the text
/// lexer recognizes (`,`, `≤`, `≠`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Zero,
    Succ,
    Plus,
    Times,
    Eq,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Forall,
    Exists,
    LParen,
    RParen,
    Lt,
    Var(Var),
    Sym(Defined),
    Comma,
    Le,
    Neq,
}

impl Token {
    /// Symbol code in the fixed symbol table; `None` for layout and sugar.
    pub fn code(self) -> Option<u32> {
        Some(match self {
            Token::Zero => 1,
            Token::Succ => 2,
            Token::Plus => 3,
            Token::Times => 4,
            Token::Eq => 5,
            Token::Not => 6,
            Token::And => 7,
            Token::Or => 8,
            Token::Imp => 9,
            Token::Iff => 10,
            Token::Forall => 11,
            Token::Exists => 12,
            Token::LParen => 13,
            Token::RParen => 14,
            Token::Lt => 15,
            Token::Var(v) => {
                assert!(v.0 <= Var::MAX_INDEX, "variable {v} has no symbol code");
                16 + v.0
            }
            Token::Sym(d) => d.symbol_code(),
            Token::Comma | Token::Le | Token::Neq => return None,
        })
    }

    pub fn from_code(code: u32) -> Option<Token> {
        Some(match code {
            1 => Token::Zero,
            2 => Token::Succ,
            3 => Token::Plus,
            4 => Token::Times,
            5 => Token::Eq,
            6 => Token::Not,
            7 => Token::And,
            8 => Token::Or,
            9 => Token::Imp,
            10 => Token::Iff,
            11 => Token::Forall,
            12 => Token::Exists,
            13 => Token::LParen,
            14 => Token::RParen,
            15 => Token::Lt,
            c if (16..=16 + Var::MAX_INDEX).contains(&c) => Token::Var(Var(c - 16)),
            c => Token::Sym(Defined::from_symbol_code(c)?),
        })
    }

    pub(crate) fn describe(self) -> String {
        match self {
            Token::Zero => "0".into(),
            Token::Succ => "S".into(),
            Token::Plus => "+".into(),
            Token::Times => "×".into(),
            Token::Eq => "=".into(),
            Token::Not => "¬".into(),
            Token::And => "∧".into(),
            Token::Or => "∨".into(),
            Token::Imp => "→".into(),
            Token::Iff => "↔".into(),
            Token::Forall => "∀".into(),
            Token::Exists => "∃".into(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
            Token::Lt => "<".into(),
            Token::Var(v) => v.to_string(),
            Token::Sym(d) => d.name().into(),
            Token::Comma => ",".into(),
            Token::Le => "≤".into(),
            Token::Neq => "≠".into(),
        }
    }
}

impl Term {
    pub(crate) fn push_tokens(&self, out: &mut Vec<Token>) {
        match self {
            Term::Zero => out.push(Token::Zero),
            Term::Var(v) => out.push(Token::Var(*v)),
            Term::Succ(t) => {
                out.push(Token::Succ);
                t.push_tokens(out);
            }
            Term::Add(l, r) | Term::Mul(l, r) => {
                out.push(Token::LParen);
                l.push_tokens(out);
                out.push(if matches!(self, Term::Add(..)) {
                    Token::Plus
                } else {
                    Token::Times
                });
                r.push_tokens(out);
                out.push(Token::RParen);
            }
            Term::DefFun(d, args) => push_app(*d, args, out),
        }
    }

    /// The symbol sequence this term is coded as.
    pub fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::new();
        self.push_tokens(&mut out);
        out
    }
}

fn push_app(d: Defined, args: &[Term], out: &mut Vec<Token>) {
    out.push(Token::Sym(d));
    out.push(Token::LParen);
    for a in args {
        a.push_tokens(out);
    }
    out.push(Token::RParen);
}

impl Formula {
    pub(crate) fn push_tokens(&self, out: &mut Vec<Token>) {
        if let Some(b) = self.as_bounded() {
            out.push(Token::LParen);
            out.push(match b.quantifier {
                super::Quantifier::Forall => Token::Forall,
                super::Quantifier::Exists => Token::Exists,
            });
            out.push(Token::Var(b.var));
            out.push(Token::Lt);
            b.bound.push_tokens(out);
            out.push(Token::RParen);
            b.body.push_tokens(out);
            return;
        }
        match self {
            Formula::Eq(l, r) | Formula::Lt(l, r) => {
                out.push(Token::LParen);
                l.push_tokens(out);
                out.push(if matches!(self, Formula::Eq(..)) {
                    Token::Eq
                } else {
                    Token::Lt
                });
                r.push_tokens(out);
                out.push(Token::RParen);
            }
            Formula::Not(f) => {
                out.push(Token::Not);
                f.push_tokens(out);
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Iff(l, r) => {
                out.push(Token::LParen);
                l.push_tokens(out);
                out.push(match self {
                    Formula::And(..) => Token::And,
                    Formula::Or(..) => Token::Or,
                    Formula::Imp(..) => Token::Imp,
                    _ => Token::Iff,
                });
                r.push_tokens(out);
                out.push(Token::RParen);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                out.push(if matches!(self, Formula::Forall(..)) {
                    Token::Forall
                } else {
                    Token::Exists
                });
                out.push(Token::Var(*v));
                f.push_tokens(out);
            }
            Formula::DefPred(d, args) => push_app(*d, args, out),
        }
    }

    /// The symbol sequence this formula is coded as.
    pub fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::new();
        self.push_tokens(&mut out);
        out
    }
}

const ALIASES: &[(&str, Token)] = &[
    ("not", Token::Not),
    ("and", Token::And),
    ("or", Token::Or),
    ("forall", Token::Forall),
    ("exists", Token::Exists),
];

/// Splits input text into tokens, returning each token's byte offset.
pub fn lex(text: &str) -> Result<Vec<(usize, Token)>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        let single = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            ',' => Some(Token::Comma),
            '=' => Some(Token::Eq),
            '+' => Some(Token::Plus),
            '*' | '×' => Some(Token::Times),
            '¬' => Some(Token::Not),
            '∧' => Some(Token::And),
            '∨' => Some(Token::Or),
            '→' => Some(Token::Imp),
            '↔' => Some(Token::Iff),
            '∀' => Some(Token::Forall),
            '∃' => Some(Token::Exists),
            '≤' => Some(Token::Le),
            '≠' => Some(Token::Neq),
            '0' => Some(Token::Zero),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            out.push((at, tok));
            continue;
        }
        let rest = &text[at..];
        let ascii = [
            ("<->", Token::Iff),
            ("<=", Token::Le),
            ("<", Token::Lt),
            ("->", Token::Imp),
            ("!=", Token::Neq),
        ];
        if let Some((s, tok)) = ascii.iter().find(|(s, _)| rest.starts_with(s)) {
            out.push((at, *tok));
            for _ in 0..s.chars().count() {
                chars.next();
            }
            continue;
        }
        if c.is_ascii_alphabetic() {
            let len = rest
                .find(|ch: char| !ch.is_ascii_alphanumeric())
                .unwrap_or(rest.len());
            let word = &rest[..len];
            lex_word(word, at, &mut out)?;
            for _ in 0..len {
                chars.next();
            }
            continue;
        }
        return Err(SyntaxError::Lex {
            offset: at,
            found: c,
        });
    }
    Ok(out)
}

/// Words may glue several symbols together, e.g. `SSv0` or `SSubs`.
fn lex_word(word: &str, at: usize, out: &mut Vec<(usize, Token)>) -> Result<(), SyntaxError> {
    if let Some((_, tok)) = ALIASES.iter().find(|(w, _)| *w == word) {
        out.push((at, *tok));
        return Ok(());
    }
    let bytes = word.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let rest = &word[i..];
        if let Some(d) = Defined::from_name(rest) {
            out.push((at + i, Token::Sym(d)));
            return Ok(());
        }
        match bytes[i] {
            b'v' if bytes.get(i + 1).is_some_and(u8::is_ascii_digit) => {
                let digits = rest[1..]
                    .find(|ch: char| !ch.is_ascii_digit())
                    .map_or(rest.len() - 1, |n| n);
                let index: u32 = rest[1..=digits]
                    .parse()
                    .ok()
                    .filter(|&n| n <= Var::MAX_INDEX)
                    .ok_or_else(|| SyntaxError::VarIndex {
                        offset: at + i,
                        text: rest[..=digits].to_string(),
                    })?;
                out.push((at + i, Token::Var(Var(index))));
                i += 1 + digits;
            }
            b'0' => {
                out.push((at + i, Token::Zero));
                i += 1;
            }
            b'S' => {
                out.push((at + i, Token::Succ));
                i += 1;
            }
            _ => {
                return Err(SyntaxError::UnknownSymbol {
                    offset: at + i,
                    name: rest.to_string(),
                })
            }
        }
    }
    Ok(())
}
