//! Concrete syntax.
//!
//! ```text
//! expr    ::= binder | app
//! binder  ::= ("\" | "λ") IDENT "." expr        abstraction
//!           | "[" IDENT ":=" expr "]" expr      explicit substitution
//!           | "{" IDENT ":=" expr "}" expr      metasubstitution (top level only)
//! app     ::= primary+ binder?                  left-associative
//! primary ::= IDENT | "(" expr ")"
//! ```
//!
//! Identifiers are `[a-zA-Z][a-zA-Z0-9]*`; a trailing run of digits is the
//! atom's index, so `y0` reads back as the atom produced by fresh-name
//! generation. Binder bodies extend as far right as possible.
//!
//! `{x := u} t` denotes a metasubstitution to be carried out by
//! [`eval_meta`]. It may wrap a whole input or appear inside another
//! metasubstitution, but not inside a term constructor.

use std::fmt;

use thiserror::Error;

use crate::atoms::Atom;
use crate::msubst::msubst;
use crate::term::Term;

/// A term with pending metasubstitutions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MetaExpr {
    Lit(Term),
    /// `{x := u} target`
    Meta {
        target: Box<MetaExpr>,
        x: Atom,
        u: Box<MetaExpr>,
    },
}

/// Evaluates metasubstitutions innermost first.
pub fn eval_meta(e: &MetaExpr) -> Term {
    match e {
        MetaExpr::Lit(t) => t.clone(),
        MetaExpr::Meta { target, x, u } => msubst(&eval_meta(target), &eval_meta(u), x),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
    /// Token kinds that would have been accepted here; empty when the error
    /// is not about an unexpected token.
    pub expected: Vec<String>,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(Atom),
    Lambda,
    Dot,
    Assign,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(a) => write!(f, "identifier `{a}`"),
            Tok::Lambda => f.write_str("`\\`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Assign => f.write_str("`:=`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn error_at(pos: Pos, message: String) -> ParseError {
    ParseError {
        line: pos.line,
        column: pos.column,
        expected: Vec::new(),
        message,
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = input.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut pos);
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                name.push(d);
                chars.next();
                advance(d, &mut pos);
            }
            let a = name
                .parse::<Atom>()
                .map_err(|e| error_at(start, format!("invalid identifier: {e}")))?;
            toks.push((Tok::Ident(a), start));
            continue;
        }
        chars.next();
        advance(c, &mut pos);
        let tok = match c {
            '\\' | 'λ' => Tok::Lambda,
            '.' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ':' if chars.peek() == Some(&'=') => {
                chars.next();
                advance('=', &mut pos);
                Tok::Assign
            }
            other => return Err(error_at(start, format!("unexpected character `{other}`"))),
        };
        toks.push((tok, start));
    }
    toks.push((Tok::Eof, pos));
    Ok(toks)
}

// Parse tree before metasubstitutions are separated from terms.
enum Surface {
    Var(Atom),
    Abs(Atom, Box<Surface>),
    App(Box<Surface>, Box<Surface>),
    ESub(Box<Surface>, Atom, Box<Surface>),
    Meta(Pos, Box<Surface>, Atom, Box<Surface>),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    next: usize,
}

const PRIMARY_START: &[&str] = &["identifier", "`(`"];
const EXPR_START: &[&str] = &["identifier", "`(`", "`\\`", "`[`", "`{`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.next].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.next].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.next].0.clone();
        if t != Tok::Eof {
            self.next += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        let pos = self.pos();
        let found = self.peek();
        let list = expected.join(", ");
        let message = if expected.len() == 1 {
            format!("expected {list}, found {found}")
        } else {
            format!("expected one of {list}, found {found}")
        };
        ParseError {
            line: pos.line,
            column: pos.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message,
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn ident(&mut self) -> Result<Atom, ParseError> {
        match self.peek() {
            Tok::Ident(a) => {
                let a = a.clone();
                self.bump();
                Ok(a)
            }
            _ => Err(self.unexpected(&["identifier"])),
        }
    }

    fn starts_binder(&self) -> bool {
        matches!(self.peek(), Tok::Lambda | Tok::LBracket | Tok::LBrace)
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::LParen)
    }

    fn expr(&mut self) -> Result<Surface, ParseError> {
        if self.starts_binder() {
            self.binder()
        } else if self.starts_primary() {
            self.app()
        } else {
            Err(self.unexpected(EXPR_START))
        }
    }

    fn binder(&mut self) -> Result<Surface, ParseError> {
        let start = self.pos();
        match self.bump() {
            Tok::Lambda => {
                let x = self.ident()?;
                self.expect(Tok::Dot, "`.`")?;
                let body = self.expr()?;
                Ok(Surface::Abs(x, Box::new(body)))
            }
            Tok::LBracket => {
                let x = self.ident()?;
                self.expect(Tok::Assign, "`:=`")?;
                let arg = self.expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                let body = self.expr()?;
                Ok(Surface::ESub(Box::new(body), x, Box::new(arg)))
            }
            Tok::LBrace => {
                let x = self.ident()?;
                self.expect(Tok::Assign, "`:=`")?;
                let arg = self.expr()?;
                self.expect(Tok::RBrace, "`}`")?;
                let target = self.expr()?;
                Ok(Surface::Meta(start, Box::new(target), x, Box::new(arg)))
            }
            _ => unreachable!("binder() called without a binder token"),
        }
    }

    fn app(&mut self) -> Result<Surface, ParseError> {
        let mut acc = self.primary()?;
        loop {
            if self.starts_primary() {
                let arg = self.primary()?;
                acc = Surface::App(Box::new(acc), Box::new(arg));
            } else if self.starts_binder() {
                let arg = self.binder()?;
                return Ok(Surface::App(Box::new(acc), Box::new(arg)));
            } else {
                return Ok(acc);
            }
        }
    }

    fn primary(&mut self) -> Result<Surface, ParseError> {
        match self.peek() {
            Tok::Ident(_) => Ok(Surface::Var(self.ident()?)),
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(self.unexpected(PRIMARY_START)),
        }
    }
}

fn to_meta(s: Surface) -> Result<MetaExpr, ParseError> {
    match s {
        Surface::Meta(_, target, x, u) => Ok(MetaExpr::Meta {
            target: Box::new(to_meta(*target)?),
            x,
            u: Box::new(to_meta(*u)?),
        }),
        other => Ok(MetaExpr::Lit(to_term(other)?)),
    }
}

fn to_term(s: Surface) -> Result<Term, ParseError> {
    Ok(match s {
        Surface::Var(x) => Term::Var(x),
        Surface::Abs(x, b) => Term::abs(x, to_term(*b)?),
        Surface::App(f, a) => Term::app(to_term(*f)?, to_term(*a)?),
        Surface::ESub(b, x, a) => Term::esub(to_term(*b)?, x, to_term(*a)?),
        Surface::Meta(pos, ..) => {
            return Err(error_at(
                pos,
                "metasubstitution `{x := u} t` may not appear inside a term".to_owned(),
            ))
        }
    })
}

/// Parses an expression, possibly with metasubstitutions at the top.
pub fn parse(input: &str) -> Result<MetaExpr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        next: 0,
    };
    let surface = p.expr()?;
    if *p.peek() != Tok::Eof {
        // any term could have been extended by one more argument
        let mut expected: Vec<&str> = vec!["end of input"];
        expected.extend(EXPR_START);
        return Err(p.unexpected(&expected));
    }
    to_meta(surface)
}

/// Parses a plain term; metasubstitutions are evaluated.
pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    parse(input).map(|e| eval_meta(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::aeq;
    use crate::atoms::atom;

    fn v(n: &str) -> Term {
        Term::var(atom(n))
    }

    fn lit(s: &str) -> Term {
        match parse(s).unwrap() {
            MetaExpr::Lit(t) => t,
            other => panic!("expected a literal term, got {other:?}"),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(lit("\\x. x"), Term::abs(atom("x"), v("x")));
        assert_eq!(
            lit("(\\x. \\y. x y) y"),
            Term::app(
                Term::abs(atom("x"), Term::abs(atom("y"), Term::app(v("x"), v("y")))),
                v("y")
            )
        );
        assert_eq!(
            parse("{x := y} (\\y. x y)").unwrap(),
            MetaExpr::Meta {
                target: Box::new(MetaExpr::Lit(Term::abs(
                    atom("y"),
                    Term::app(v("x"), v("y"))
                ))),
                x: atom("x"),
                u: Box::new(MetaExpr::Lit(v("y"))),
            }
        );
        let err = parse("[x := y x").unwrap_err();
        assert_eq!((err.line, err.column), (1, 10));
        assert!(err.expected.contains(&"`]`".to_string()), "{err:?}");
    }

    #[test]
    fn lambda_symbol_and_whitespace() {
        assert_eq!(lit("λx.x"), lit("\\x. x"));
        assert_eq!(lit("  ( x\n  y )\t"), Term::app(v("x"), v("y")));
        assert_eq!(lit("[x:=y]x"), Term::esub(v("x"), atom("x"), v("y")));
    }

    #[test]
    fn identifiers_carry_indices() {
        assert_eq!(lit("y0"), v("y0"));
        assert_eq!(lit("foo12"), Term::var(Atom::new("foo", Some(12)).unwrap()));
        let err = parse("x01").unwrap_err();
        assert_eq!(err.column, 1);
    }

    #[test]
    fn errors() {
        let e = parse("").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(e.message.contains("end of input"));
        let e = parse("(x y").unwrap_err();
        assert_eq!(e.expected, vec!["`)`".to_string()]);
        let e = parse("x y)").unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert!(e.expected.contains(&"end of input".to_string()));
        let e = parse("\\x x").unwrap_err();
        assert_eq!(e.expected, vec!["`.`".to_string()]);
        let e = parse("x\n  ?").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse("x : y").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse("x ]").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse("\\x. {x := y} x").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
    }

    #[test]
    fn eval_meta_examples() {
        let t = Term::abs(atom("x"), v("x"));
        assert_eq!(eval_meta(&MetaExpr::Lit(t.clone())), t);
        let e = MetaExpr::Meta {
            target: Box::new(MetaExpr::Lit(v("x"))),
            x: atom("x"),
            u: Box::new(MetaExpr::Lit(v("y"))),
        };
        assert_eq!(eval_meta(&e), v("y"));
        let r = eval_meta(&parse("{x := y} (\\y. x y)").unwrap());
        assert!(aeq(&r, &Term::abs(atom("z"), Term::app(v("y"), v("z")))));
    }

    #[test]
    fn nested_meta_is_innermost_first() {
        // {y := z} ({x := y} x) = z
        assert_eq!(parse_term("{y := z} {x := y} x").unwrap(), v("z"));
        // a metasubstitution in the argument position is evaluated too
        assert_eq!(
            parse_term("{x := {y := w} y} x x").unwrap(),
            Term::app(v("w"), v("w"))
        );
        assert_eq!(parse_term("({x := y} x)").unwrap(), v("y"));
    }
}
