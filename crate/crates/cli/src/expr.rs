//! Expression grammar shared by every subcommand.
//!
//! ```text
//! sum     := [+|-] tensor ((+|-) tensor)*
//! tensor  := product ("(x)" product)*
//! product := power ("*" power)*
//! power   := atom ["^" [-] INT]
//! atom    := INT ["/" INT] | IDENT | "(" sum ")"
//! ```
//!
//! One token of lookahead decides every branch. `(x)` is always the tensor
//! separator, so a parenthesized lone `x` has to be written without parens.

use std::fmt;
use std::iter::Peekable;
use std::str::Chars;

use num_bigint::BigInt;
use num_traits::Zero;
use poisson_bialg::dual::DualFunctional;
use poisson_bialg::lincomb::{tensor2, LinComb, Tensor2};
use poisson_bialg::monomial::Monomial;
use poisson_bialg::poly::Polynomial;
use poisson_bialg::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Phi,
    Eps,
}

impl Var {
    fn from_name(s: &str) -> Option<Var> {
        match s {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "phi" => Some(Var::Phi),
            "eps" => Some(Var::Eps),
            _ => None,
        }
    }

    fn is_dual(self) -> bool {
        matches!(self, Var::Phi | Var::Eps)
    }

    fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Phi => "phi",
            Var::Eps => "eps",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Var(Var, Pos),
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64, Pos),
    Tensor(Box<Expr>, Box<Expr>, Pos),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub pos: Pos,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at {0}")]
    Parse(#[from] ParseError),
    #[error("{pos}: negative exponent outside Laurent mode")]
    NegativeExponent { pos: Pos },
    #[error("{pos}: negative power of a non-monomial")]
    NonMonomialInverse { pos: Pos },
    #[error("{pos}: variable `{name}` not allowed here (expected {allowed})")]
    WrongVariable {
        name: &'static str,
        pos: Pos,
        allowed: &'static str,
    },
    #[error("{pos}: tensor product may only appear at top level or directly under a sum")]
    MisplacedTensor { pos: Pos },
    #[error("cannot add a tensor and a scalar expression")]
    MixedSum,
    #[error("expected a tensor expression")]
    NotATensor,
    #[error("expected a scalar expression, found a tensor")]
    UnexpectedTensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
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
    Otimes,
    Unknown(char),
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
            Tok::Otimes => "`(x)`".into(),
            Tok::Unknown(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Vec<(Tok, Pos)> {
    let mut out = Vec::new();
    let mut it: Peekable<Chars<'_>> = src.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let advance = |it: &mut Peekable<Chars<'_>>, pos: &mut Pos| {
        let c = it.next();
        if c == Some('\n') {
            pos.line += 1;
            pos.column = 1;
        } else if c.is_some() {
            pos.column += 1;
        }
        c
    };
    while let Some(&c) = it.peek() {
        let start = pos;
        if c.is_whitespace() {
            advance(&mut it, &mut pos);
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = it.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                advance(&mut it, &mut pos);
            }
            out.push((Tok::Int(s.parse().expect("digits")), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = it
                .peek()
                .filter(|d| d.is_ascii_alphanumeric() || **d == '_')
            {
                s.push(d);
                advance(&mut it, &mut pos);
            }
            out.push((Tok::Ident(s), start));
            continue;
        }
        if c == '(' {
            // `(x)` with optional inner whitespace is the tensor separator
            let mut probe = it.clone();
            probe.next();
            let rest: String = probe.take(64).collect();
            let trimmed = rest.trim_start();
            if let Some(after_x) = trimmed.strip_prefix('x') {
                let after_x_trim = after_x.trim_start();
                let ends_ident = after_x
                    .chars()
                    .next()
                    .is_some_and(|d| d.is_ascii_alphanumeric() || d == '_');
                if !ends_ident && after_x_trim.starts_with(')') {
                    let consumed = 1 + (rest.chars().count() - after_x_trim.chars().count()) + 1;
                    for _ in 0..consumed {
                        advance(&mut it, &mut pos);
                    }
                    out.push((Tok::Otimes, start));
                    continue;
                }
            }
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => Tok::Unknown(other),
        };
        advance(&mut it, &mut pos);
        out.push((tok, start));
    }
    out.push((Tok::End, pos));
    out
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

const ATOM_START: &[&str] = &["number", "variable", "`(`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        })
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let lead = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.tensor()?;
        terms.push(if lead {
            Expr::Neg(Box::new(first))
        } else {
            first
        });
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.tensor()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.tensor()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        while *self.peek() == Tok::Otimes {
            let (_, pos) = self.bump();
            let rhs = self.product()?;
            lhs = Expr::Tensor(Box::new(lhs), Box::new(rhs), pos);
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.power()?;
            lhs = Expr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, pos) = self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(n) = self.peek().clone() else {
            return self.fail(if neg {
                &["integer"]
            } else {
                &["integer", "`-`"]
            });
        };
        let Ok(mut e) = i64::try_from(&n) else {
            return self.fail(&["exponent fitting in 64 bits"]);
        };
        self.bump();
        if neg {
            e = -e;
        }
        Ok(Expr::Power(Box::new(base), e, pos))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Num(Rational::from_integer(n)));
                }
                self.bump();
                match self.peek().clone() {
                    Tok::Int(d) if !d.is_zero() => {
                        self.bump();
                        Ok(Expr::Num(Rational::new(n, d)))
                    }
                    _ => self.fail(&["nonzero integer"]),
                }
            }
            Tok::Ident(s) => match Var::from_name(&s) {
                Some(v) => {
                    let (_, pos) = self.bump();
                    Ok(Expr::Var(v, pos))
                }
                None => self.fail(&["x", "y", "phi", "eps"]),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return self.fail(&["`)`", "`+`", "`-`", "`*`", "`(x)`"]);
                }
                self.bump();
                Ok(inner)
            }
            _ => self.fail(ATOM_START),
        }
    }
}

/// Parses `src` into an AST without interpreting variables.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src),
        at: 0,
    };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return p.fail(&["`+`", "`-`", "`*`", "`^`", "`(x)`", "end of input"]);
    }
    Ok(e)
}

#[derive(Clone, Copy)]
struct Mode {
    dual: bool,
    laurent: bool,
}

enum Value {
    Scalar(Polynomial),
    Tensor(Tensor2),
}

fn scalar(v: Value) -> Result<Polynomial, ExprError> {
    match v {
        Value::Scalar(p) => Ok(p),
        Value::Tensor(_) => Err(ExprError::UnexpectedTensor),
    }
}

fn lower(e: &Expr, mode: Mode, top: bool) -> Result<Value, ExprError> {
    Ok(match e {
        Expr::Num(c) => Value::Scalar(Polynomial::constant(c.clone()).into_laurent()),
        Expr::Var(v, pos) => {
            if v.is_dual() != mode.dual {
                let allowed = if mode.dual { "phi or eps" } else { "x or y" };
                return Err(ExprError::WrongVariable {
                    name: v.name(),
                    pos: *pos,
                    allowed,
                });
            }
            let m = match v {
                Var::X | Var::Phi => Polynomial::x(),
                Var::Y | Var::Eps => Polynomial::y(),
            };
            Value::Scalar(m.into_laurent())
        }
        Expr::Neg(inner) => match lower(inner, mode, top)? {
            Value::Scalar(p) => Value::Scalar(-p),
            Value::Tensor(t) => Value::Tensor(-t),
        },
        Expr::Sum(terms) => {
            let vals = terms
                .iter()
                .map(|t| lower(t, mode, top))
                .collect::<Result<Vec<_>, _>>()?;
            if vals.iter().all(|v| matches!(v, Value::Scalar(_))) {
                let mut acc = Polynomial::zero().into_laurent();
                for v in vals {
                    acc = acc + scalar(v)?;
                }
                Value::Scalar(acc)
            } else if vals.iter().all(|v| matches!(v, Value::Tensor(_))) {
                let mut acc = Tensor2::zero();
                for v in vals {
                    if let Value::Tensor(t) = v {
                        acc += &t;
                    }
                }
                Value::Tensor(acc)
            } else {
                return Err(ExprError::MixedSum);
            }
        }
        Expr::Product(a, b) => {
            let a = scalar(lower(a, mode, false)?)?;
            let b = scalar(lower(b, mode, false)?)?;
            Value::Scalar(&a * &b)
        }
        Expr::Power(base, k, pos) => {
            let b = scalar(lower(base, mode, false)?)?;
            Value::Scalar(power(&b, *k, *pos, mode)?)
        }
        Expr::Tensor(a, b, pos) => {
            if !top {
                return Err(ExprError::MisplacedTensor { pos: *pos });
            }
            let (Value::Scalar(a), Value::Scalar(b)) =
                (lower(a, mode, false)?, lower(b, mode, false)?)
            else {
                return Err(ExprError::MisplacedTensor { pos: *pos });
            };
            Value::Tensor(tensor2(a.terms(), b.terms()))
        }
    })
}

fn power(b: &Polynomial, k: i64, pos: Pos, mode: Mode) -> Result<Polynomial, ExprError> {
    if k >= 0 {
        let mut acc = Polynomial::one().into_laurent();
        for _ in 0..k {
            acc = &acc * b;
        }
        return Ok(acc);
    }
    if !mode.laurent {
        return Err(ExprError::NegativeExponent { pos });
    }
    let mut it = b.iter();
    let (Some((m, c)), None) = (it.next(), it.next()) else {
        return Err(ExprError::NonMonomialInverse { pos });
    };
    let c = c.recip().pow(-k as i32);
    let lc = LinComb::term(Monomial::new(m.i * k, m.j * k), c);
    Ok(Polynomial::from_lincomb(lc, true).expect("laurent mode"))
}

fn finish_poly(p: Polynomial, laurent: bool, src_pos: Pos) -> Result<Polynomial, ExprError> {
    if laurent {
        return Ok(p);
    }
    Polynomial::from_lincomb(p.terms().clone(), false)
        .map_err(|_| ExprError::NegativeExponent { pos: src_pos })
}

const START: Pos = Pos { line: 1, column: 1 };

/// A polynomial in `x, y`. Negative exponents are rejected.
pub fn parse_poly(src: &str) -> Result<Polynomial, ExprError> {
    let e = parse_expr(src)?;
    let p = scalar(lower(
        &e,
        Mode {
            dual: false,
            laurent: false,
        },
        true,
    )?)?;
    finish_poly(p, false, START)
}

/// A Laurent polynomial in `x, y`; negative powers of monomials allowed.
pub fn parse_laurent(src: &str) -> Result<Polynomial, ExprError> {
    let e = parse_expr(src)?;
    scalar(lower(
        &e,
        Mode {
            dual: false,
            laurent: true,
        },
        true,
    )?)
}

/// A finitely supported functional in `phi, eps`.
pub fn parse_functional(src: &str) -> Result<DualFunctional, ExprError> {
    let e = parse_expr(src)?;
    let p = scalar(lower(
        &e,
        Mode {
            dual: true,
            laurent: false,
        },
        true,
    )?)?;
    Ok(DualFunctional::from_lincomb(
        finish_poly(p, false, START)?.terms(),
    ))
}

fn parse_tensor_mode(src: &str, dual: bool) -> Result<Tensor2, ExprError> {
    let e = parse_expr(src)?;
    match lower(
        &e,
        Mode {
            dual,
            laurent: false,
        },
        true,
    )? {
        Value::Tensor(t) => Ok(t),
        Value::Scalar(p) if p.is_zero() => Ok(Tensor2::zero()),
        Value::Scalar(_) => Err(ExprError::NotATensor),
    }
}

/// An element of `F[x,y] ⊗ F[x,y]`, factors separated by `(x)`.
pub fn parse_tensor(src: &str) -> Result<Tensor2, ExprError> {
    parse_tensor_mode(src, false)
}

/// A two-fold tensor of functionals in `phi, eps`.
pub fn parse_dual_tensor(src: &str) -> Result<Tensor2, ExprError> {
    parse_tensor_mode(src, true)
}

/// `p/q` or an integer, with optional sign.
pub fn parse_rational_literal(src: &str) -> Option<Rational> {
    let e = parse_expr(src).ok()?;
    let p = scalar(
        lower(
            &e,
            Mode {
                dual: false,
                laurent: false,
            },
            true,
        )
        .ok()?,
    )
    .ok()?;
    p.as_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use poisson_bialg::rational::{int, ratio};

    #[test]
    fn poly_example() {
        let p = parse_poly("3*x^2*y - 1/2*y^3").unwrap();
        assert_eq!(p.coeff(2, 1), int(3));
        assert_eq!(p.coeff(0, 3), ratio(-1, 2));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn expansion() {
        let p = parse_poly("x*(1+y)*(2+y)").unwrap();
        assert_eq!(
            p,
            Polynomial::from_int_terms(&[(1, 0, 2), (1, 1, 3), (1, 2, 1)])
        );
    }

    #[test]
    fn negative_exponent_needs_laurent() {
        assert!(matches!(
            parse_poly("x^-1*y"),
            Err(ExprError::NegativeExponent { .. })
        ));
        let p = parse_laurent("x^-1*y").unwrap();
        assert_eq!(p.coeff(-1, 1), int(1));
        assert_eq!(parse_laurent("(2*x)^-2").unwrap().coeff(-2, 0), ratio(1, 4));
    }

    #[test]
    fn syntax_error_reports_position_and_expected() {
        let err = parse_expr("x +\n  * y").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, column: 3 });
        assert_eq!(err.expected, ATOM_START.to_vec());
        assert_eq!(err.found, "`*`");
        let err = parse_expr("2 x").unwrap_err();
        assert_eq!(err.pos.column, 3);
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(parse_poly("2x").is_err());
        assert!(parse_poly("x y").is_err());
    }

    #[test]
    fn tensor_separator() {
        let t = parse_tensor("x*y (x) x^2 - x^2 ( x ) x*y").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.to_string_vars(), "x*y (x) x^2 - x^2 (x) x*y");
        assert!(matches!(
            parse_poly("x*(y (x) y)"),
            Err(ExprError::MisplacedTensor { .. })
        ));
        assert!(matches!(
            parse_tensor("x (x) y + x"),
            Err(ExprError::MixedSum)
        ));
    }

    #[test]
    fn functional_variables() {
        let u = parse_functional("phi*eps + 2*phi^3").unwrap();
        assert_eq!(u.coeff(3, 0), int(2));
        assert!(matches!(
            parse_functional("x"),
            Err(ExprError::WrongVariable { .. })
        ));
        assert!(matches!(
            parse_poly("phi"),
            Err(ExprError::WrongVariable { .. })
        ));
    }

    #[test]
    fn rational_literal() {
        assert_eq!(parse_rational_literal("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational_literal("0"), Some(int(0)));
        assert_eq!(parse_rational_literal("x"), None);
        assert!(parse_expr("1/0").is_err());
    }

    trait VarsDisplay {
        fn to_string_vars(&self) -> String;
    }

    impl VarsDisplay for Tensor2 {
        fn to_string_vars(&self) -> String {
            self.display_with(poisson_bialg::lincomb::PRIMAL_VARS)
                .to_string()
        }
    }
}
