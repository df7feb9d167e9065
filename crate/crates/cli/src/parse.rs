//! Text syntax for scalars, polynomials in `h`, algebra elements and
//! algebra specs.
//!
//! Expressions use `y x h hinv`, integers, `zeta(n)`, `+ - * / ^` and
//! parentheses. Precedence, tightest first: power, unary minus, product
//! (and division by scalars), sum. Products keep their left-to-right order.
//!
//! A spec reads `field=Q(zeta(4)) algebra d=poly q=zeta(4) a=h^2-1`; the
//! `field=` clause may be omitted, in which case a caller-supplied default
//! or the smallest cyclotomic field containing every `zeta(n)` is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use qgwa::algebra::{Algebra, AlgebraElement, AlgebraSpec};
use qgwa::field::{FieldElement, FieldSpec};
use qgwa::poly::{BaseRing, LaurentPoly};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("invalid value at line {line}, column {col}: {msg}")]
    Invalid {
        line: usize,
        col: usize,
        msg: String,
    },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, col, .. } | ParseError::Invalid { line, col, .. } => {
                (*line, *col)
            }
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn syntax(text: &str, offset: usize, msg: impl Into<String>) -> ParseError {
    let (line, col) = line_col(text, offset);
    ParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn invalid(text: &str, offset: usize, msg: impl Into<String>) -> ParseError {
    let (line, col) = line_col(text, offset);
    ParseError::Invalid {
        line,
        col,
        msg: msg.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str, start: usize, end: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let src = &text[start..end];
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let pos = start + i;
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut j = i;
            while let Some(&(k, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                j = k + d.len_utf8();
                chars.next();
            }
            out.push((Tok::Int(src[i..j].parse().expect("digits")), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut j = i;
            while let Some(&(k, d)) = chars.peek() {
                if !d.is_ascii_alphanumeric() && d != '_' {
                    break;
                }
                j = k + d.len_utf8();
                chars.next();
            }
            out.push((Tok::Ident(src[i..j].to_string()), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(syntax(text, pos, format!("unexpected character `{c}`"))),
        };
        out.push((tok, pos));
        chars.next();
    }
    out.push((Tok::End, end));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Gen {
    Y,
    X,
    H,
    HInv,
}

#[derive(Debug, Clone)]
enum Node {
    Int(BigInt),
    Zeta(u32),
    Gen(Gen),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Parsed expression tree with source offsets.
#[derive(Debug, Clone)]
pub struct Expr {
    node: Node,
    pos: usize,
}

impl Expr {
    fn zetas(&self, out: &mut Vec<u32>) {
        match &self.node {
            Node::Zeta(n) => out.push(*n),
            Node::Neg(e) | Node::Pow(e, _) => e.zetas(out),
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                a.zetas(out);
                b.zetas(out);
            }
            Node::Int(_) | Node::Gen(_) => {}
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.text,
                self.pos(),
                format!(
                    "expected {}, found {}",
                    want.describe(),
                    self.peek().describe()
                ),
            ))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let pos = self.pos();
            let node = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    Node::Add(Box::new(lhs), Box::new(self.product()?))
                }
                Tok::Minus => {
                    self.bump();
                    Node::Sub(Box::new(lhs), Box::new(self.product()?))
                }
                _ => return Ok(lhs),
            };
            lhs = Expr { node, pos };
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let node = match self.peek() {
                Tok::Star => {
                    self.bump();
                    Node::Mul(Box::new(lhs), Box::new(self.unary()?))
                }
                Tok::Slash => {
                    self.bump();
                    Node::Div(Box::new(lhs), Box::new(self.unary()?))
                }
                _ => return Ok(lhs),
            };
            lhs = Expr { node, pos };
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let pos = self.bump().1;
            let inner = self.unary()?;
            return Ok(Expr {
                node: Node::Neg(Box::new(inner)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.bump().1;
        let paren = *self.peek() == Tok::LParen;
        if paren {
            self.bump();
        }
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        let (tok, at) = self.bump();
        let Tok::Int(n) = tok else {
            return Err(syntax(
                self.text,
                at,
                format!("expected an integer exponent, found {}", tok.describe()),
            ));
        };
        let n: i64 = n
            .try_into()
            .map_err(|_| invalid(self.text, at, "exponent out of range"))?;
        if paren {
            self.expect(Tok::RParen)?;
        }
        let e = if neg { -n } else { n };
        Ok(Expr {
            node: Node::Pow(Box::new(base), e),
            pos,
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        let node = match tok {
            Tok::Int(n) => Node::Int(n),
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            Tok::Ident(name) => match name.as_str() {
                "y" => Node::Gen(Gen::Y),
                "x" => Node::Gen(Gen::X),
                "h" => Node::Gen(Gen::H),
                "hinv" => Node::Gen(Gen::HInv),
                "zeta" => {
                    self.expect(Tok::LParen)?;
                    let (t, at) = self.bump();
                    let n = match t {
                        Tok::Int(n) => u32::try_from(n).ok().filter(|&n| n > 0),
                        _ => None,
                    }
                    .ok_or_else(|| syntax(self.text, at, "zeta expects a positive integer"))?;
                    self.expect(Tok::RParen)?;
                    Node::Zeta(n)
                }
                _ => return Err(syntax(self.text, pos, format!("unknown symbol `{name}`"))),
            },
            other => {
                return Err(syntax(
                    self.text,
                    pos,
                    format!("unexpected {}", other.describe()),
                ))
            }
        };
        Ok(Expr { node, pos })
    }
}

/// Parses `text[start..end]`; offsets stay relative to `text`.
fn parse_range(text: &str, start: usize, end: usize) -> Result<Expr, ParseError> {
    let toks = lex(text, start, end)?;
    let mut p = Parser { text, toks, at: 0 };
    if *p.peek() == Tok::End {
        return Err(syntax(text, start, "empty expression"));
    }
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(syntax(
            text,
            p.pos(),
            format!("unexpected {}", p.peek().describe()),
        ));
    }
    Ok(e)
}

enum Value {
    Scalar(FieldElement),
    Poly(LaurentPoly),
    Elem(AlgebraElement),
}

struct Eval<'a> {
    text: &'a str,
    field: FieldSpec,
    ring: Option<BaseRing>,
    alg: Option<&'a Algebra>,
}

impl Eval<'_> {
    fn err(&self, pos: usize, msg: impl std::fmt::Display) -> ParseError {
        invalid(self.text, pos, msg.to_string())
    }

    fn lift(&self, v: Value, level: u8, pos: usize) -> Result<Value, ParseError> {
        Ok(match (v, level) {
            (Value::Scalar(c), 1) => {
                Value::Poly(LaurentPoly::constant(self.ring.expect("poly context"), c))
            }
            (Value::Scalar(c), 2) => Value::Elem(AlgebraElement::scalar(
                self.alg.expect("algebra context"),
                c,
            )),
            (Value::Poly(p), 2) => {
                let alg = self.alg.expect("algebra context");
                Value::Elem(AlgebraElement::from_poly(alg, &p).map_err(|e| self.err(pos, e))?)
            }
            (v, _) => v,
        })
    }

    fn level(v: &Value) -> u8 {
        match v {
            Value::Scalar(_) => 0,
            Value::Poly(_) => 1,
            Value::Elem(_) => 2,
        }
    }

    fn binary(&self, a: &Expr, b: &Expr, pos: usize, op: char) -> Result<Value, ParseError> {
        let (u, v) = (self.eval(a)?, self.eval(b)?);
        let level = Self::level(&u).max(Self::level(&v));
        let (u, v) = (self.lift(u, level, pos)?, self.lift(v, level, pos)?);
        Ok(match (u, v) {
            (Value::Scalar(u), Value::Scalar(v)) => Value::Scalar(match op {
                '+' => &u + &v,
                '-' => &u - &v,
                _ => &u * &v,
            }),
            (Value::Poly(u), Value::Poly(v)) => Value::Poly(match op {
                '+' => &u + &v,
                '-' => &u - &v,
                _ => &u * &v,
            }),
            (Value::Elem(u), Value::Elem(v)) => Value::Elem(match op {
                '+' => &u + &v,
                '-' => &u - &v,
                _ => &u * &v,
            }),
            _ => unreachable!("operands lifted to a common level"),
        })
    }

    fn eval(&self, e: &Expr) -> Result<Value, ParseError> {
        let pos = e.pos;
        match &e.node {
            Node::Int(n) => Ok(Value::Scalar(
                self.field
                    .from_rational(BigRational::from_integer(n.clone())),
            )),
            Node::Zeta(n) => self
                .field
                .root_of_unity(*n)
                .map(Value::Scalar)
                .map_err(|err| self.err(pos, err)),
            Node::Gen(g) => self.generator(*g, pos),
            Node::Neg(a) => Ok(match self.eval(a)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Poly(p) => Value::Poly(-&p),
                Value::Elem(u) => Value::Elem(-&u),
            }),
            Node::Add(a, b) => self.binary(a, b, pos, '+'),
            Node::Sub(a, b) => self.binary(a, b, pos, '-'),
            Node::Mul(a, b) => self.binary(a, b, pos, '*'),
            Node::Div(a, b) => {
                let Value::Scalar(d) = self.eval(b)? else {
                    return Err(self.err(pos, "division is only by scalars"));
                };
                let inv = d.inv().map_err(|err| self.err(pos, err))?;
                Ok(match self.eval(a)? {
                    Value::Scalar(c) => Value::Scalar(&c * &inv),
                    Value::Poly(p) => Value::Poly(p.scale(&inv)),
                    Value::Elem(u) => Value::Elem(u.scale(&inv)),
                })
            }
            Node::Pow(a, n) => match self.eval(a)? {
                Value::Scalar(c) => c
                    .pow(*n)
                    .map(Value::Scalar)
                    .map_err(|err| self.err(pos, err)),
                Value::Poly(p) => {
                    let base = if *n < 0 {
                        p.inverse()
                            .ok_or_else(|| self.err(pos, format!("{p} is not invertible")))?
                    } else {
                        p
                    };
                    let k = u32::try_from(n.unsigned_abs())
                        .map_err(|_| self.err(pos, "exponent out of range"))?;
                    Ok(Value::Poly(base.pow(k)))
                }
                Value::Elem(u) => u
                    .pow_i(*n)
                    .map(Value::Elem)
                    .map_err(|err| self.err(pos, err)),
            },
        }
    }

    fn generator(&self, g: Gen, pos: usize) -> Result<Value, ParseError> {
        let Some(ring) = self.ring else {
            return Err(self.err(pos, "generators are not allowed in a scalar"));
        };
        if g == Gen::HInv && ring == BaseRing::Poly {
            return Err(self.err(pos, "hinv requires d=laurent"));
        }
        match (g, self.alg) {
            (Gen::Y | Gen::X, None) => {
                Err(self.err(pos, "only h and hinv may appear in a polynomial"))
            }
            (Gen::Y, Some(alg)) => Ok(Value::Elem(AlgebraElement::y(alg))),
            (Gen::X, Some(alg)) => Ok(Value::Elem(AlgebraElement::x(alg))),
            (Gen::H, Some(alg)) => Ok(Value::Elem(AlgebraElement::h(alg))),
            (Gen::HInv, Some(alg)) => AlgebraElement::h_inv(alg)
                .map(Value::Elem)
                .map_err(|e| self.err(pos, e)),
            (Gen::H, None) => Ok(Value::Poly(LaurentPoly::h(self.field, ring))),
            (Gen::HInv, None) => LaurentPoly::monomial(ring, self.field.one(), -1)
                .map(Value::Poly)
                .map_err(|e| self.err(pos, e)),
        }
    }
}

pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<FieldElement, ParseError> {
    let e = parse_range(text, 0, text.len())?;
    let ev = Eval {
        text,
        field,
        ring: None,
        alg: None,
    };
    match ev.eval(&e)? {
        Value::Scalar(c) => Ok(c),
        _ => unreachable!("scalar context"),
    }
}

pub fn parse_poly(text: &str, field: FieldSpec, ring: BaseRing) -> Result<LaurentPoly, ParseError> {
    poly_in_range(text, 0, text.len(), field, ring)
}

fn poly_in_range(
    text: &str,
    start: usize,
    end: usize,
    field: FieldSpec,
    ring: BaseRing,
) -> Result<LaurentPoly, ParseError> {
    let e = parse_range(text, start, end)?;
    let ev = Eval {
        text,
        field,
        ring: Some(ring),
        alg: None,
    };
    match ev.lift(ev.eval(&e)?, 1, e.pos)? {
        Value::Poly(p) => Ok(p),
        _ => unreachable!("polynomial context"),
    }
}

pub fn parse_element(text: &str, alg: &Algebra) -> Result<AlgebraElement, ParseError> {
    let e = parse_range(text, 0, text.len())?;
    let ev = Eval {
        text,
        field: alg.field(),
        ring: Some(alg.ring()),
        alg: Some(alg),
    };
    match ev.lift(ev.eval(&e)?, 2, e.pos)? {
        Value::Elem(u) => Ok(u),
        _ => unreachable!("element context"),
    }
}

/// Accepts `Q`, `Q(zeta(n))` or a bare conductor `n`.
pub fn parse_field(text: &str) -> Result<FieldSpec, ParseError> {
    field_at(text, 0, text.len())
}

fn field_at(text: &str, start: usize, end: usize) -> Result<FieldSpec, ParseError> {
    let compact: String = text[start..end]
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let n = if compact == "Q" {
        Some(1)
    } else if let Some(inner) = compact
        .strip_prefix("Q(zeta(")
        .and_then(|s| s.strip_suffix("))"))
    {
        inner.parse::<u32>().ok()
    } else {
        compact.parse::<u32>().ok()
    };
    let n = n.ok_or_else(|| syntax(text, start, "expected a field `Q` or `Q(zeta(n))`"))?;
    FieldSpec::cyclotomic(n).map_err(|e| invalid(text, start, e.to_string()))
}

const KEYS: [&str; 4] = ["field", "d", "q", "a"];

/// Parses a spec. `default_field` applies only when the text has no
/// `field=` clause.
pub fn parse_spec(text: &str, default_field: Option<FieldSpec>) -> Result<Algebra, ParseError> {
    // (key, key start, value start)
    let mut clauses: Vec<(&str, usize, usize)> = Vec::new();
    for (i, _) in text.match_indices('=') {
        let key_start = text[..i]
            .char_indices()
            .rev()
            .take_while(|(_, c)| c.is_ascii_alphanumeric())
            .last()
            .map_or(i, |(k, _)| k);
        let key = &text[key_start..i];
        if !KEYS.contains(&key) {
            return Err(syntax(text, key_start, format!("unknown key `{key}`")));
        }
        if clauses.iter().any(|c| c.0 == key) {
            return Err(syntax(text, key_start, format!("duplicate key `{key}`")));
        }
        clauses.push((key, key_start, i + 1));
    }
    let mut spans = Vec::new();
    let mut prev_end = 0;
    for (n, &(key, key_start, value_start)) in clauses.iter().enumerate() {
        check_filler(text, prev_end, key_start)?;
        let value_end = clauses.get(n + 1).map_or(text.len(), |c| c.1);
        let value_end = trim_algebra_keyword(text, value_start, value_end);
        spans.push((key, value_start, value_end));
        prev_end = value_end;
    }
    check_filler(text, prev_end, text.len())?;
    let span = |key: &str| spans.iter().find(|s| s.0 == key).map(|s| (s.1, s.2));
    let need =
        |key: &str| span(key).ok_or_else(|| syntax(text, text.len(), format!("missing `{key}=`")));

    let (ds, de) = need("d")?;
    let ring = match text[ds..de].trim() {
        "poly" => BaseRing::Poly,
        "laurent" => BaseRing::Laurent,
        other => {
            return Err(syntax(
                text,
                ds,
                format!("expected `poly` or `laurent`, found `{other}`"),
            ))
        }
    };
    let (qs, qe) = need("q")?;
    let (as_, ae) = need("a")?;
    let field = match span("field") {
        Some((s, e)) => field_at(text, s, e)?,
        None => match default_field {
            Some(f) => f,
            None => {
                let mut zetas = Vec::new();
                parse_range(text, qs, qe)?.zetas(&mut zetas);
                parse_range(text, as_, ae)?.zetas(&mut zetas);
                let n = zetas.into_iter().fold(1u32, |acc, n| acc.lcm(&n));
                FieldSpec::cyclotomic(n).map_err(|e| invalid(text, qs, e.to_string()))?
            }
        },
    };
    let q_expr = parse_range(text, qs, qe)?;
    let ev = Eval {
        text,
        field,
        ring: None,
        alg: None,
    };
    let Value::Scalar(q) = ev.eval(&q_expr)? else {
        unreachable!("scalar context")
    };
    let a = poly_in_range(text, as_, ae, field, ring)?;
    AlgebraSpec::new(ring, q, a).map_err(|e| {
        let at = match e {
            qgwa::algebra::AlgebraError::InvalidQ => qs,
            _ => as_,
        };
        invalid(text, at, e.to_string())
    })
}

/// Drops a trailing standalone `algebra` word from a value span.
fn trim_algebra_keyword(text: &str, start: usize, end: usize) -> usize {
    let v = text[start..end].trim_end();
    match v.strip_suffix("algebra") {
        Some(rest) if rest.ends_with(char::is_whitespace) || rest.is_empty() => {
            start + rest.trim_end().len()
        }
        _ => start + v.len(),
    }
}

fn check_filler(text: &str, start: usize, end: usize) -> Result<(), ParseError> {
    let filler = &text[start..end];
    let word = filler.trim();
    if word.is_empty() || word == "algebra" {
        Ok(())
    } else {
        let at = start + filler.find(word).unwrap_or(0);
        Err(syntax(text, at, format!("unexpected text `{word}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_with_and_without_field() {
        let a = parse_spec("field=Q(zeta(4)) algebra d=poly q=zeta(4) a=h^2-1", None).unwrap();
        assert_eq!(a.field(), FieldSpec::Cyclotomic(4));
        let b = parse_spec("algebra d=poly q=zeta(4) a=h^2 - 1", None).unwrap();
        assert_eq!(a, b);
        let c = parse_spec(&a.to_string(), None).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            parse_spec("field=Q algebra d=poly q=1 a=h", None),
            Err(ParseError::Invalid { col: 26, .. })
        ));
        assert!(matches!(
            parse_spec("field=Q algebra d=poly q=-1 a=h^-1", None),
            Err(ParseError::Invalid { .. })
        ));
        assert!(matches!(
            parse_spec("field=Q algebra d=poly q=-1 a=h-h", None),
            Err(ParseError::Invalid { .. })
        ));
    }

    #[test]
    fn syntax_errors_report_position() {
        let e = parse_spec("d=poly q=-1\na=h^2 +* 1", None).unwrap_err();
        assert_eq!(e.position(), (2, 8));
        assert!(matches!(
            parse_spec("d=poly q=-1", None),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_spec("d=ring q=-1 a=h", None),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn precedence() {
        let f = FieldSpec::Rationals;
        assert_eq!(parse_scalar("-2^2", f).unwrap(), f.from_int(-4));
        assert_eq!(parse_scalar("1/2*3 - 1", f).unwrap(), f.from_ratio(1, 2));
        assert_eq!(parse_scalar("2^-1", f).unwrap(), f.from_ratio(1, 2));
        let g = FieldSpec::Cyclotomic(8);
        let z = parse_scalar("1/2*zeta(8)^3 - 1", g).unwrap();
        assert_eq!(z, &(&g.zeta_power(3) * &g.from_ratio(1, 2)) - &g.one());
    }

    #[test]
    fn elements_multiply_in_order() {
        let alg = parse_spec("field=Q(zeta(4)) algebra d=poly q=zeta(4) a=h^2-1", None).unwrap();
        let u = parse_element("x*y", &alg).unwrap();
        assert_eq!(u.to_string(), "-h^2 - 1");
        let v = parse_element("y*x", &alg).unwrap();
        assert_eq!(v.to_string(), "h^2 - 1");
        assert!(parse_element("hinv", &alg).is_err());
    }
}
