//! The ideal file format:
//!
//! ```text
//! field 32003        # or: field rational
//! ring x0 x1 x2
//! gens
//! x0*x1
//! x0*x2
//! x1*x2
//! ```
//!
//! One generator per line after `gens`. Expressions follow
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' natural)?
//! atom   := integer | variable | '(' expr ')' | '-' atom
//! ```
//!
//! where `/` only divides by a nonzero constant.

use std::sync::Arc;

use hbfiber_core::{Field, FieldKind, Ideal, MonomialOrder, Polynomial, PrimeField, RationalField, Ring, RingHandle};
use num_bigint::BigInt;
use thiserror::Error;

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: unknown variable `{name}`")]
    UnknownVariable { line: usize, column: usize, name: String },
    #[error("{line}:{column}: invalid variable name `{name}`: {reason}")]
    InvalidName { line: usize, column: usize, name: String, reason: String },
    #[error("line {line}: generator is not homogeneous")]
    NotHomogeneous { line: usize },
    #[error("line {line}: generator is zero")]
    ZeroGenerator { line: usize },
    #[error("generators are not of one degree: {degrees:?}")]
    NotEquigenerated { degrees: Vec<u32> },
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SyntaxError",
            ParseError::UnknownVariable { .. } => "UnknownVariable",
            ParseError::InvalidName { .. } => "InvalidName",
            ParseError::NotHomogeneous { .. } => "NotHomogeneous",
            ParseError::ZeroGenerator { .. } => "ZeroGenerator",
            ParseError::NotEquigenerated { .. } => "NotEquigenerated",
        }
    }
}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    fn syntax<T>(self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError::Syntax { line: self.line, column: self.column, message: message.into() })
    }
}

/// Field-independent expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub pos: Pos,
    pub text: String,
    pub expr: Expr,
}

/// A parsed file, before coefficients are interpreted in a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub field: FieldKind,
    pub names: Vec<String>,
    pub generators: Vec<Generator>,
}

/// The ideal over whichever field the file asked for.
#[derive(Clone, Debug)]
pub enum AnyIdeal {
    Prime(Ideal<PrimeField>),
    Rational(Ideal<RationalField>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexed<'a> {
    kind: Tok,
    text: &'a str,
    pos: Pos,
}

fn lex(src: &str, line: usize, col0: usize) -> PResult<Vec<Lexed<'_>>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = Pos { line, column: col0 + src[..i].chars().count() };
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                Tok::Ident
            }
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return pos.syntax(format!("unexpected character `{ch}`"));
            }
        };
        i += 1;
        out.push(Lexed { kind, text: &src[start..i], pos });
    }
    Ok(out)
}

struct Parser<'a, 'n> {
    toks: Vec<Lexed<'a>>,
    at: usize,
    names: &'n [String],
    end: Pos,
}

impl<'a> Parser<'a, '_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|t| t.kind)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> &Lexed<'a> {
        self.at += 1;
        &self.toks[self.at - 1]
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = if self.peek() == Some(Tok::Minus) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            lhs = if op == Tok::Plus {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        while let Some(op @ (Tok::Star | Tok::Slash)) = self.peek() {
            let pos = self.pos();
            self.bump();
            let rhs = self.factor()?;
            lhs = if op == Tok::Star {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs), pos)
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Int) => {
                let text = self.bump().text;
                match text.parse::<u32>() {
                    Ok(e) if e <= MAX_EXPONENT => Ok(Expr::Pow(Box::new(base), e)),
                    _ => pos.syntax(format!("exponent must be at most {MAX_EXPONENT}")),
                }
            }
            _ => pos.syntax("expected a natural number after `^`"),
        }
    }

    fn atom(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Int) => {
                let text = self.bump().text;
                Ok(Expr::Int(text.parse().expect("digits")))
            }
            Some(Tok::Ident) => {
                let name = self.bump().text;
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Expr::Var(i)),
                    None => Err(ParseError::UnknownVariable {
                        line: pos.line,
                        column: pos.column,
                        name: name.to_string(),
                    }),
                }
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return self.pos().syntax("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Some(_) => pos.syntax(format!("unexpected `{}`", self.toks[self.at].text)),
            None => pos.syntax("unexpected end of expression"),
        }
    }
}

/// Parses one expression over the given variable names.
pub fn parse_expr(src: &str, names: &[String], line: usize, col0: usize) -> PResult<Expr> {
    let toks = lex(src, line, col0)?;
    let end = Pos { line, column: col0 + src.trim_end().chars().count() };
    let mut p = Parser { toks, at: 0, names, end };
    if p.peek().is_none() {
        return end.syntax("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.pos().syntax(format!("unexpected `{}`", p.toks[p.at].text));
    }
    Ok(e)
}

fn check_name(name: &str, pos: Pos, seen: &[String]) -> PResult<()> {
    let invalid = |reason: &str| {
        Err(ParseError::InvalidName {
            line: pos.line,
            column: pos.column,
            name: name.to_string(),
            reason: reason.to_string(),
        })
    };
    let mut chars = name.chars();
    let first = chars.next().unwrap();
    if !first.is_ascii_alphabetic() || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return invalid("names start with a letter and contain letters, digits or `_`");
    }
    if name.len() > 1 && name.starts_with('y') && name[1..].bytes().all(|b| b.is_ascii_digit()) {
        return invalid("y0, y1, ... are reserved for the image coordinates");
    }
    if seen.iter().any(|s| s == name) {
        return invalid("declared twice");
    }
    Ok(())
}

/// Words of a header line with their 1-based columns.
fn words(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((s[..b].chars().count() + 1, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((s[..b].chars().count() + 1, &s[b..]));
    }
    out
}

/// Parses the header and every generator expression.
pub fn parse_ideal_file(text: &str) -> PResult<IdealFile> {
    let mut field = None;
    let mut names: Option<Vec<String>> = None;
    let mut in_gens = false;
    let mut generators = Vec::new();
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap();
        if body.trim().is_empty() {
            continue;
        }
        let ws = words(body);
        let at = |column| Pos { line, column };
        if in_gens {
            let col0 = body.chars().take_while(|c| c.is_whitespace()).count() + 1;
            let src = body.trim_start();
            let expr = parse_expr(src, names.as_ref().unwrap(), line, col0)?;
            generators.push(Generator { pos: at(col0), text: src.trim_end().to_string(), expr });
            continue;
        }
        let (col, keyword) = ws[0];
        match keyword {
            "field" => {
                if field.is_some() {
                    return at(col).syntax("`field` given twice");
                }
                let kind = match ws.get(1..) {
                    Some([(_, "rational")]) => FieldKind::Rational,
                    Some([(c, p)]) => match p.parse::<u32>().ok().and_then(|p| PrimeField::new(p).ok()) {
                        Some(f) => f.kind(),
                        None => return at(*c).syntax(format!("`{p}` is not a prime below 2^31")),
                    },
                    _ => return at(col).syntax("expected `field <prime>` or `field rational`"),
                };
                field = Some(kind);
            }
            "ring" => {
                if names.is_some() {
                    return at(col).syntax("`ring` given twice");
                }
                if ws.len() < 2 {
                    return at(col).syntax("`ring` needs at least one variable");
                }
                let mut declared: Vec<String> = Vec::new();
                for &(c, name) in &ws[1..] {
                    check_name(name, at(c), &declared)?;
                    declared.push(name.to_string());
                }
                names = Some(declared);
            }
            "gens" => {
                if ws.len() > 1 {
                    return at(ws[1].0).syntax("generators start on the line after `gens`");
                }
                if field.is_none() {
                    return at(col).syntax("`field` must come before `gens`");
                }
                if names.is_none() {
                    return at(col).syntax("`ring` must come before `gens`");
                }
                in_gens = true;
            }
            other => return at(col).syntax(format!("unknown keyword `{other}`")),
        }
    }
    if !in_gens {
        return Pos { line: last_line, column: 1 }.syntax("missing `gens` section");
    }
    if generators.is_empty() {
        return Pos { line: last_line, column: 1 }.syntax("no generators");
    }
    Ok(IdealFile { field: field.unwrap(), names: names.unwrap(), generators })
}

fn eval<F: Field>(e: &Expr, ring: &Arc<Ring<F>>) -> PResult<Polynomial<F>> {
    Ok(match e {
        Expr::Int(n) => ring.constant(ring.field().from_bigint(n)),
        Expr::Var(i) => ring.var(*i),
        Expr::Neg(a) => -&eval(a, ring)?,
        Expr::Add(a, b) => &eval(a, ring)? + &eval(b, ring)?,
        Expr::Sub(a, b) => &eval(a, ring)? - &eval(b, ring)?,
        Expr::Mul(a, b) => &eval(a, ring)? * &eval(b, ring)?,
        Expr::Pow(a, k) => eval(a, ring)?.pow(*k),
        Expr::Div(a, b, pos) => {
            let d = eval(b, ring)?;
            if !d.is_constant() || d.is_zero() {
                return pos.syntax("can only divide by a nonzero constant");
            }
            let c = d.leading_coeff().unwrap();
            eval(a, ring)?.scale(&ring.field().inv(c).unwrap())
        }
    })
}

impl IdealFile {
    /// Interprets the generators over `field`, checking that they are forms
    /// of one common degree.
    pub fn ideal_over<F: Field>(&self, field: F) -> PResult<Ideal<F>> {
        let ring = Ring::new(field, self.names.iter().cloned(), MonomialOrder::Grevlex);
        let mut polys = Vec::with_capacity(self.generators.len());
        let mut degrees = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let p = eval(&g.expr, &ring)?;
            if p.is_zero() {
                return Err(ParseError::ZeroGenerator { line: g.pos.line });
            }
            let d = p.homogeneous_degree().map_err(|_| ParseError::NotHomogeneous { line: g.pos.line })?;
            degrees.push(d);
            polys.push(p);
        }
        if degrees.iter().any(|&d| d != degrees[0]) {
            return Err(ParseError::NotEquigenerated { degrees });
        }
        Ok(Ideal::new(ring, polys))
    }

    pub fn ideal(&self) -> PResult<AnyIdeal> {
        Ok(match self.field {
            FieldKind::Prime(p) => AnyIdeal::Prime(self.ideal_over(PrimeField::new(p).expect("checked prime"))?),
            FieldKind::Rational => AnyIdeal::Rational(self.ideal_over(RationalField)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn poly(src: &str) -> Polynomial<PrimeField> {
        let ns = names(&["x0", "x1", "x2"]);
        let ring = Ring::new(PrimeField::default(), ns.clone(), MonomialOrder::Grevlex);
        eval(&parse_expr(src, &ns, 1, 1).unwrap(), &ring).unwrap()
    }

    #[test]
    fn expressions() {
        assert_eq!(poly("x0*x1").to_string(), "x0*x1");
        assert_eq!(poly("x0^2 - x1*x2").to_string(), "x0^2 - x1*x2");
        assert_eq!(poly("-(x0 + x1)^2 + 2*x0*x1").to_string(), "-x0^2 - x1^2");
        assert_eq!(poly("--x0").to_string(), "x0");
        assert_eq!(poly("x0*-x1").to_string(), "-x0*x1");
        assert_eq!(poly("x0/2 + x0/2").to_string(), "x0");
    }

    #[test]
    fn located_errors() {
        let ns = names(&["x0", "x1"]);
        assert_eq!(
            parse_expr("x0 + x3", &ns, 4, 1),
            Err(ParseError::UnknownVariable { line: 4, column: 6, name: "x3".into() })
        );
        let e = parse_expr("x0 + * x1", &ns, 2, 3).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 2, column: 8, .. }), "{e:?}");
        let e = parse_expr("(x0 + x1", &ns, 1, 1).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 1, column: 9, .. }), "{e:?}");
        let e = parse_expr("x0^x1", &ns, 1, 1).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { column: 4, .. }), "{e:?}");
        let e = parse_expr("x0 $ x1", &ns, 1, 1).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { column: 4, .. }), "{e:?}");
    }

    #[test]
    fn file_round_trip() {
        let text = "# Cremona\nfield 32003\nring x0 x1 x2  # three\ngens\n  x0*x1\nx0*x2\n\nx1*x2\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.field, FieldKind::Prime(32003));
        assert_eq!(f.generators.len(), 3);
        assert_eq!(f.generators[0].pos, Pos { line: 5, column: 3 });
        let AnyIdeal::Prime(i) = f.ideal().unwrap() else { panic!() };
        assert_eq!(i.gens()[2].to_string(), "x1*x2");
    }

    #[test]
    fn header_errors() {
        let bad = [
            "ring x0\ngens\nx0\n",
            "field 32004\nring x0\ngens\nx0\n",
            "field 7\nring x0 x0\ngens\nx0\n",
            "field 7\nring x0 y1\ngens\nx0\n",
            "field 7\nring x0\ngens\n",
            "field 7\nring x0\nx0\n",
            "field 7\nring x0\ngens x0\n",
        ];
        for text in bad {
            assert!(parse_ideal_file(text).is_err(), "{text:?} should fail");
        }
        assert!(matches!(
            parse_ideal_file("field 7\nring x0 y1\ngens\nx0\n"),
            Err(ParseError::InvalidName { line: 2, column: 9, .. })
        ));
    }

    #[test]
    fn degree_checks() {
        let f = parse_ideal_file("field 7\nring x0 x1\ngens\nx0\nx1^2\n").unwrap();
        assert_eq!(f.ideal().unwrap_err(), ParseError::NotEquigenerated { degrees: vec![1, 2] });
        let f = parse_ideal_file("field 7\nring x0 x1\ngens\nx0 + x1^2\n").unwrap();
        assert_eq!(f.ideal().unwrap_err(), ParseError::NotHomogeneous { line: 4 });
        let f = parse_ideal_file("field 7\nring x0 x1\ngens\nx0 - x0\n").unwrap();
        assert_eq!(f.ideal().unwrap_err(), ParseError::ZeroGenerator { line: 4 });
    }

    #[test]
    fn rational_coefficients() {
        let f = parse_ideal_file("field rational\nring a b\ngens\na^2/3 - 5*b^2/2\n").unwrap();
        let AnyIdeal::Rational(i) = f.ideal().unwrap() else { panic!() };
        let shown = i.gens()[0].to_string();
        let again = parse_ideal_file(&format!("field rational\nring a b\ngens\n{shown}\n")).unwrap();
        let AnyIdeal::Rational(j) = again.ideal().unwrap() else { panic!() };
        assert_eq!(i.gens(), j.gens());
    }
}
