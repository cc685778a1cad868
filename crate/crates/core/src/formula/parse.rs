//! ASCII concrete syntax.
//!
//! ```text
//! impl  := or ( "->" impl )?          right associative
//! or    := and ( "|" and )*           left associative
//! and   := unary ( "&" unary )*       left associative
//! unary := "~" unary | atom
//! atom  := name | "false" | "(" impl ")"
//! ```
//!
//! Printing emits no spaces and the fewest parentheses that keep the
//! structure, except that an implication nested directly inside another
//! implication is always parenthesized.

use std::fmt;

use thiserror::Error;

use super::{Formula, Name};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    TrailingInput(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub position: usize,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownChar(c) => write!(f, "unknown character {c:?}"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected token {t:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::TrailingInput(t) => write!(f, "trailing input starting with {t:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(Name),
    False,
    Arrow,
    Or,
    And,
    Not,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Name(n) => f.write_str(n),
            Token::False => f.write_str("false"),
            Token::Arrow => f.write_str("->"),
            Token::Or => f.write_str("|"),
            Token::And => f.write_str("&"),
            Token::Not => f.write_str("~"),
            Token::LParen => f.write_str("("),
            Token::RParen => f.write_str(")"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'|' => Token::Or,
            b'&' => Token::And,
            b'~' => Token::Not,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Arrow
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                let word = &text[start..=i];
                if word == "false" {
                    Token::False
                } else {
                    Token::Name(Name::from(word))
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError { kind: ParseErrorKind::UnknownChar(ch), position: start });
            }
        };
        i += 1;
        out.push((tok, start));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn unexpected(&self) -> ParseError {
        match self.tokens.get(self.pos) {
            Some((t, p)) => ParseError { kind: ParseErrorKind::UnexpectedToken(t.to_string()), position: *p },
            None => ParseError { kind: ParseErrorKind::UnexpectedEnd, position: self.end },
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Token::Arrow) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Token::Name(n)) => {
                let f = Formula::Var(n.clone());
                self.pos += 1;
                Ok(f)
            }
            Some(Token::False) => {
                self.pos += 1;
                Ok(Formula::Bottom)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.implication()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses the ASCII formula syntax.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, end: text.len() };
    let f = p.implication()?;
    if let Some(t) = p.peek() {
        return Err(ParseError { kind: ParseErrorKind::TrailingInput(t.to_string()), position: p.offset() });
    }
    Ok(f)
}

// Binding strength used by the printer.
const PREC_IMPL: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_ATOM: u8 = 4;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Var(_) | Formula::Bottom => PREC_ATOM,
        Formula::Impl(_, r) if r.is_bottom() => PREC_ATOM,
        Formula::And(..) => PREC_AND,
        Formula::Or(..) => PREC_OR,
        Formula::Impl(..) => PREC_IMPL,
    }
}

fn write_at(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if precedence(f) < min {
        out.write_str("(")?;
        write_formula(f, out)?;
        out.write_str(")")
    } else {
        write_formula(f, out)
    }
}

fn write_formula(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Var(n) => out.write_str(n),
        Formula::Bottom => out.write_str("false"),
        Formula::Impl(a, b) if b.is_bottom() => {
            out.write_str("~")?;
            write_at(a, PREC_ATOM, out)
        }
        Formula::And(l, r) => {
            write_at(l, PREC_AND, out)?;
            out.write_str("&")?;
            write_at(r, PREC_ATOM, out)
        }
        Formula::Or(l, r) => {
            write_at(l, PREC_OR, out)?;
            out.write_str("|")?;
            write_at(r, PREC_AND, out)
        }
        Formula::Impl(l, r) => {
            write_at(l, PREC_OR, out)?;
            out.write_str("->")?;
            write_at(r, PREC_OR, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::arb_formula;
    use proptest::prelude::*;

    fn v(n: &str) -> Formula {
        Formula::var(n)
    }

    #[test]
    fn parses_mints_premise() {
        let f = parse_formula("(p -> q) -> (p | r)").unwrap();
        assert_eq!(f, Formula::imp(Formula::imp(v("p"), v("q")), Formula::or(v("p"), v("r"))));
        assert_eq!(f.to_string(), "(p->q)->p|r");
    }

    #[test]
    fn false_and_negation() {
        assert_eq!(parse_formula("false").unwrap(), Formula::Bottom);
        assert_eq!(parse_formula("~p").unwrap(), Formula::imp(v("p"), Formula::Bottom));
        assert_eq!(parse_formula("p -> false").unwrap().to_string(), "~p");
        assert_eq!(parse_formula("~~p").unwrap().to_string(), "~~p");
        assert_eq!(parse_formula("~(p->q)").unwrap().to_string(), "~(p->q)");
        assert_eq!(parse_formula("false -> p").unwrap().to_string(), "false->p");
    }

    #[test]
    fn associativity_and_precedence() {
        let f = parse_formula("a -> b -> c").unwrap();
        assert_eq!(f, Formula::imp(v("a"), Formula::imp(v("b"), v("c"))));
        assert_eq!(f.to_string(), "a->(b->c)");
        let g = parse_formula("p & q & r").unwrap();
        assert_eq!(g, Formula::and(Formula::and(v("p"), v("q")), v("r")));
        assert_eq!(g.to_string(), "p&q&r");
        assert_eq!(parse_formula("p & (q & r)").unwrap().to_string(), "p&(q&r)");
        assert_eq!(parse_formula("p | q & r").unwrap().to_string(), "p|q&r");
        assert_eq!(parse_formula("(p | q) & r").unwrap().to_string(), "(p|q)&r");
        assert_eq!(parse_formula("~p & q").unwrap(), Formula::and(Formula::not(v("p")), v("q")));
        assert_eq!(parse_formula("(q->p&q)->(q->p)").unwrap().to_string(), "(q->p&q)->(q->p)");
    }

    #[test]
    fn error_positions() {
        let e = parse_formula("p & ").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(e.position, 4);
        let e = parse_formula("p # q").unwrap_err();
        assert_eq!(e, ParseError { kind: ParseErrorKind::UnknownChar('#'), position: 2 });
        let e = parse_formula("(p -> q").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        let e = parse_formula("p q").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::TrailingInput("q".into()));
        assert_eq!(e.position, 2);
        let e = parse_formula("P").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownChar('P'));
        assert!(parse_formula("p - q").is_err());
        assert!(parse_formula("").is_err());
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_formula()) {
            let printed = f.to_string();
            prop_assert_eq!(parse_formula(&printed).unwrap(), f);
        }

        #[test]
        fn printing_is_canonical(f in arb_formula()) {
            let once = f.to_string();
            let twice = parse_formula(&once).unwrap().to_string();
            prop_assert_eq!(once, twice);
        }
    }
}
