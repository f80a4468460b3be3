//! Expression parsing and canonical printing, plus the `.psn` structure file
//! reader.
//!
//! Expression grammar: integers, fractions `a/b`, declared identifiers,
//! `+ - * ^` and parentheses. `*` is mandatory (no juxtaposition), `^` binds
//! tighter than `*`, and a single unary minus may open an expression or a
//! parenthesized subexpression. Every rejection carries a line and column.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::bracket::PoissonStructure;
use crate::error::Error;
use crate::poly::{Coeff, Poly};
use crate::Result;

/// Polynomial text plus the ambient variable names it may reference.
#[derive(Clone, Debug)]
pub struct ExprSource<'a> {
    pub text: &'a str,
    pub var_names: &'a [String],
}

pub fn parse_expr(src: ExprSource<'_>) -> Result<Poly> {
    parse_expr_at(src.text, src.var_names, 1, 1)
}

/// Parse with an explicit starting position, so errors inside structure files
/// report file coordinates.
fn parse_expr_at(text: &str, vars: &[String], line: usize, col: usize) -> Result<Poly> {
    let tokens = lex(text, line, col)?;
    let mut p = Parser { tokens, pos: 0, vars, nvars: vars.len(), end: (line, col + text.chars().count()) };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        let (l, c, t) = p.peek_desc();
        return Err(Error::Parse { line: l, col: c, msg: format!("unexpected {t}") });
    }
    Ok(poly)
}

/// Canonical text form of a polynomial: terms in descending canonical order,
/// deterministic across runs. Re-parsing the output yields the same value.
pub fn print_canonical(p: &Poly, var_names: &[String]) -> String {
    crate::poly::fmt_poly(p, var_names)
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("integer {n}"),
        Tok::Ident(s) => format!("identifier '{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Slash => "'/'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
    }
}

fn lex(text: &str, start_line: usize, start_col: usize) -> Result<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    let mut line = start_line;
    let mut col = start_col;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, col);
        match ch {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                col += 1;
            }
            '+' | '-' | '*' | '^' | '/' | '(' | ')' => {
                chars.next();
                col += 1;
                out.push((
                    match ch {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '/' => Tok::Slash,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                    l,
                    c,
                ));
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Int(digits.parse().expect("digits")), l, c));
            }
            _ if ch.is_ascii_alphabetic() || ch == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(name), l, c));
            }
            _ => {
                return Err(Error::Parse { line: l, col: c, msg: format!("unexpected character '{ch}'") });
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: Vec<(Tok, usize, usize)>,
    pos: usize,
    vars: &'a [String],
    nvars: usize,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn peek_desc(&self) -> (usize, usize, String) {
        match self.tokens.get(self.pos) {
            Some((t, l, c)) => (*l, *c, describe(t)),
            None => (self.end.0, self.end.1, "end of input".into()),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            let (l, c, found) = self.peek_desc();
            Err(Error::Parse { line: l, col: c, msg: format!("expected {}, found {}", describe(&t), found) })
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let (l, c, _) = self.peek_desc();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = n
                        .to_u32()
                        .ok_or(Error::Parse { line: l, col: c, msg: format!("exponent {n} out of range") })?;
                    return Ok(base.pow(e));
                }
                found => {
                    let what = found.map(|t| describe(&t)).unwrap_or_else(|| "end of input".into());
                    return Err(Error::Parse { line: l, col: c, msg: format!("malformed exponent: found {what}") });
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly> {
        let (l, c, _) = self.peek_desc();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // optional fraction literal a/b
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let (dl, dc, _) = self.peek_desc();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(Error::Parse { line: dl, col: dc, msg: "zero denominator".into() });
                            }
                            Ok(Poly::constant(self.nvars, Coeff::new(n, d)))
                        }
                        found => {
                            let what = found.map(|t| describe(&t)).unwrap_or_else(|| "end of input".into());
                            Err(Error::Parse {
                                line: dl,
                                col: dc,
                                msg: format!("division is only allowed between integer literals, found {what}"),
                            })
                        }
                    }
                } else {
                    Ok(Poly::constant(self.nvars, Coeff::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => {
                    if self.peek() == Some(&Tok::Slash) {
                        let (sl, sc, _) = self.peek_desc();
                        return Err(Error::Parse {
                            line: sl,
                            col: sc,
                            msg: "division is not allowed in polynomial position".into(),
                        });
                    }
                    Ok(Poly::var(self.nvars, i))
                }
                None => Err(Error::Parse { line: l, col: c, msg: format!("unknown identifier '{name}'") }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                if self.peek() == Some(&Tok::Slash) {
                    let (sl, sc, _) = self.peek_desc();
                    return Err(Error::Parse {
                        line: sl,
                        col: sc,
                        msg: "division is not allowed in polynomial position".into(),
                    });
                }
                Ok(inner)
            }
            found => {
                let what = found.map(|t| describe(&t)).unwrap_or_else(|| "end of input".into());
                Err(Error::Parse { line: l, col: c, msg: format!("expected a term, found {what}") })
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Structure files (.psn)
// ---------------------------------------------------------------------------

/// Load a `.psn` structure file:
///
/// ```text
/// vars: x1 x2 x3 x4
/// pair: s = x1*x4 - x2*x3 ; t = 1
/// pair: s = x2 ; t = x3
/// ```
///
/// Blank lines and `#` comments are ignored; CRLF is accepted. Exactly n-2
/// pairs are required for n declared variables. Validation of the pairs
/// (nonzero t, coprimality) happens in [`PoissonStructure::build_named`].
pub fn load_structure_file(path: impl AsRef<Path>) -> Result<PoissonStructure> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse_structure_text(&text)
}

pub fn parse_structure_text(text: &str) -> Result<PoissonStructure> {
    let mut var_names: Option<Vec<String>> = None;
    let mut pairs: Vec<(Poly, Poly)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end_matches('\r');
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("vars:") {
            if var_names.is_some() {
                return Err(Error::Structure { line: lineno, msg: "duplicate vars line".into() });
            }
            let names: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
            for name in &names {
                if !name.chars().next().map(|c| c.is_ascii_alphabetic() || c == '_').unwrap_or(false)
                    || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(Error::Structure { line: lineno, msg: format!("bad variable name '{name}'") });
                }
            }
            for (i, name) in names.iter().enumerate() {
                if names[..i].contains(name) {
                    return Err(Error::Structure { line: lineno, msg: format!("duplicate variable name '{name}'") });
                }
            }
            if names.len() < 3 {
                return Err(Error::TooFewVariables(names.len()));
            }
            var_names = Some(names);
        } else if let Some(rest) = trimmed.strip_prefix("pair:") {
            let names = var_names
                .as_ref()
                .ok_or(Error::Structure { line: lineno, msg: "pair line before vars line".into() })?;
            let (s_part, t_part) = rest
                .split_once(';')
                .ok_or(Error::Structure { line: lineno, msg: "expected 'pair: s = <expr> ; t = <expr>'".into() })?;
            let s_expr = strip_binding(s_part, "s", lineno)?;
            let t_expr = strip_binding(t_part, "t", lineno)?;
            let col = line.find(s_expr).map(|i| i + 1).unwrap_or(1);
            let s = parse_expr_at(s_expr, names, lineno, col)?;
            let col = line.rfind(t_expr).map(|i| i + 1).unwrap_or(1);
            let t = parse_expr_at(t_expr, names, lineno, col)?;
            pairs.push((s, t));
        } else {
            return Err(Error::Structure { line: lineno, msg: format!("unrecognized line '{trimmed}'") });
        }
    }
    let names = var_names.ok_or(Error::Structure { line: 0, msg: "missing vars line".into() })?;
    PoissonStructure::build_named(names, pairs)
}

fn strip_binding<'t>(part: &'t str, key: &str, lineno: usize) -> Result<&'t str> {
    let trimmed = part.trim();
    let rest = trimmed
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix('='))
        .ok_or_else(|| Error::Structure { line: lineno, msg: format!("expected '{key} = <expr>'") })?;
    Ok(rest.trim())
}
