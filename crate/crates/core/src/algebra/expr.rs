//! A small arithmetic expression language shared by the commutative and the
//! noncommutative polynomial types.
//!
//! Grammar: sums and differences of products; `*` multiplies, `/` divides by
//! a nonzero constant, `^` raises to a nonnegative integer power, unary minus
//! and parentheses as usual. Identifiers are `[A-Za-z_][A-Za-z0-9_']*`.

use num::{One, Zero};

use super::generator::VarContext;
use super::poly::Polynomial;
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var { name: String, column: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Expression {
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s
                .parse::<u64>()
                .map_err(|_| err(col, "integer literal too large"))?;
            out.push((Tok::Num(n), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let col = self.column();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), col);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let col = self.column();
            match self.toks.get(self.pos) {
                Some((Tok::Num(n), _)) => {
                    let e = u32::try_from(*n).map_err(|_| err(col, "exponent too large"))?;
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(err(col, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.column();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num(n), _)) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_integer(n.into())))
            }
            Some((Tok::Ident(name), column)) => {
                self.pos += 1;
                Ok(Expr::Var { name, column })
            }
            Some((Tok::Sym('('), _)) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(err(self.column(), "expected `)`"));
                }
                Ok(e)
            }
            Some((t, _)) => Err(err(col, format!("unexpected token {t:?}"))),
            None => Err(err(col, "unexpected end of expression")),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    let end = src.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(err(p.column(), "trailing input"));
    }
    Ok(e)
}

/// Ring operations needed to evaluate an [`Expr`].
pub trait ExprRing: Sized {
    fn constant(&self, c: Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn as_constant(&self) -> Option<Rational>;
}

impl ExprRing for Polynomial {
    fn constant(&self, c: Rational) -> Self {
        Polynomial::constant(self.vars(), c)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }
    fn as_constant(&self) -> Option<Rational> {
        Polynomial::as_constant(self)
    }
}

impl Expr {
    /// Evaluates in a ring; `zero` supplies the ring context and `var`
    /// resolves identifiers.
    pub fn eval<R: ExprRing>(&self, zero: &R, var: &dyn Fn(&str, usize) -> Result<R>) -> Result<R> {
        Ok(match self {
            Expr::Num(c) => zero.constant(c.clone()),
            Expr::Var { name, column } => var(name, *column)?,
            Expr::Neg(e) => e.eval(zero, var)?.scale(&-Rational::one()),
            Expr::Add(a, b) => a.eval(zero, var)?.add(&b.eval(zero, var)?),
            Expr::Sub(a, b) => a.eval(zero, var)?.sub(&b.eval(zero, var)?),
            Expr::Mul(a, b) => a.eval(zero, var)?.mul(&b.eval(zero, var)?),
            Expr::Div(a, b, col) => {
                let d = b
                    .eval(zero, var)?
                    .as_constant()
                    .ok_or_else(|| err(*col, "can only divide by a constant"))?;
                if d.is_zero() {
                    return Err(err(*col, "division by zero"));
                }
                a.eval(zero, var)?.scale(&d.recip())
            }
            Expr::Pow(b, e) => {
                let base = b.eval(zero, var)?;
                let mut acc = zero.constant(Rational::one());
                for _ in 0..*e {
                    acc = acc.mul(&base);
                }
                acc
            }
        })
    }
}

pub fn parse_polynomial(src: &str, vars: &VarContext) -> Result<Polynomial> {
    let e = parse_expr(src)?;
    let zero = Polynomial::zero(vars);
    e.eval(&zero, &|name, column| {
        Polynomial::var(vars, name).map_err(|_| err(column, format!("unknown generator `{name}`")))
    })
}
