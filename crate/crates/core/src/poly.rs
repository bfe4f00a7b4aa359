//! Sparse bivariate polynomials and Laurent polynomials over `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::lincomb::{LinComb, PRIMAL_VARS};
use crate::monomial::Monomial;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("negative exponent in x^{}*y^{} outside Laurent mode", .0.i, .0.j)]
    NegativeExponent(Monomial),
}

/// Element of `Q[x,y]` or, with `laurent` set, of `Q[x^±1, y^±1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: LinComb<Monomial>,
    laurent: bool,
}

/// Total degree; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial {
            terms: LinComb::term(Monomial::ONE, c),
            laurent: false,
        }
    }

    /// `x^i y^j`.
    pub fn monomial(i: u32, j: u32) -> Self {
        Self::term(i, j, Rational::one())
    }

    /// `c x^i y^j`.
    pub fn term(i: u32, j: u32, c: Rational) -> Self {
        Polynomial {
            terms: LinComb::term(Monomial::new(i as i64, j as i64), c),
            laurent: false,
        }
    }

    /// `x^i y^j` with arbitrary integer exponents.
    pub fn laurent_monomial(i: i64, j: i64) -> Self {
        Polynomial {
            terms: LinComb::basis(Monomial::new(i, j)),
            laurent: true,
        }
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    /// Builds a polynomial, rejecting negative exponents unless `laurent`.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
        laurent: bool,
    ) -> Result<Self, PolyError> {
        let terms: LinComb<Monomial> = terms.into_iter().collect();
        Self::from_lincomb(terms, laurent)
    }

    pub fn from_lincomb(terms: LinComb<Monomial>, laurent: bool) -> Result<Self, PolyError> {
        if !laurent {
            if let Some(m) = terms.keys().find(|m| !m.is_nonnegative()) {
                return Err(PolyError::NegativeExponent(*m));
            }
        }
        Ok(Polynomial { terms, laurent })
    }

    /// Integer-coefficient shorthand: `[(i, j, c), ...]`.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        Polynomial {
            terms: terms
                .iter()
                .map(|&(i, j, c)| (Monomial::new(i as i64, j as i64), int(c)))
                .collect(),
            laurent: false,
        }
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Same terms, Laurent flag set.
    pub fn into_laurent(mut self) -> Self {
        self.laurent = true;
        self
    }

    pub fn terms(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> Rational {
        self.terms.coeff(&Monomial::new(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// `Some(c)` iff the polynomial is the constant `c` (including `0`).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (*m == Monomial::ONE).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial {
            terms: self.terms.scale(c),
            laurent: self.laurent,
        }
    }

    fn with_terms(terms: LinComb<Monomial>, laurent: bool) -> Self {
        Polynomial { terms, laurent }
    }
}

/// Exact product. The result is Laurent if either factor is.
pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let mut out = LinComb::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            out.add_term(a.mul(b), ca * cb);
        }
    }
    Polynomial::with_terms(out, f.laurent || g.laurent)
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        poly_mul(self, rhs)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        Polynomial::with_terms(&self.terms + &rhs.terms, self.laurent || rhs.laurent)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        Polynomial::with_terms(&self.terms - &rhs.terms, self.laurent || rhs.laurent)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::with_terms(-&self.terms, self.laurent)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Self) -> Polynomial {
                $tr::$f(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.display_with(PRIMAL_VARS).fmt(f)
    }
}

/// The four derivations used by the brackets: `∂/∂x`, `∂/∂y`, `x ∂/∂x`,
/// `y ∂/∂y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivationSpec {
    Dx,
    Dy,
    XDx,
    YDy,
}

impl DerivationSpec {
    pub const ALL: [DerivationSpec; 4] = [Self::Dx, Self::Dy, Self::XDx, Self::YDy];

    /// Image of a single monomial as `(coefficient, monomial)`.
    pub fn on_monomial(&self, m: &Monomial) -> (i64, Monomial) {
        match self {
            Self::Dx => (m.i, m.shift(-1, 0)),
            Self::Dy => (m.j, m.shift(0, -1)),
            Self::XDx => (m.i, *m),
            Self::YDy => (m.j, *m),
        }
    }

    fn variable(&self) -> u8 {
        match self {
            Self::Dx | Self::XDx => 0,
            Self::Dy | Self::YDy => 1,
        }
    }

    /// Whether the two operators commute on polynomials. Only mixing a plain
    /// partial with the Euler operator of the same variable fails.
    pub fn commutes_with(&self, other: &DerivationSpec) -> bool {
        self == other || self.variable() != other.variable()
    }
}

/// Applies a derivation. A term whose exponent would drop below zero in a
/// non-Laurent polynomial has coefficient zero and disappears.
pub fn partial(f: &Polynomial, d: DerivationSpec) -> Polynomial {
    let mut out = LinComb::zero();
    for (m, c) in f.iter() {
        let (k, m2) = d.on_monomial(m);
        if k != 0 {
            out.add_term(m2, c * int(k));
        }
    }
    Polynomial::with_terms(out, f.laurent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(t: &[(u32, u32, i64)]) -> Polynomial {
        Polynomial::from_int_terms(t)
    }

    #[test]
    fn mul_examples() {
        let x = Polynomial::x();
        let y = Polynomial::y();
        assert_eq!(&(&x + &y) * &(&x - &y), p(&[(2, 0, 1), (0, 2, -1)]));
        assert_eq!(
            &Polynomial::monomial(2, 1) * &Polynomial::monomial(1, 3),
            Polynomial::monomial(3, 4)
        );
        let one = Polynomial::one();
        let two = Polynomial::constant(int(2));
        let a = &(&x * &(&one + &y)) * &(&two + &y);
        assert_eq!(a, p(&[(1, 0, 2), (1, 1, 3), (1, 2, 1)]));
    }

    #[test]
    fn partial_examples() {
        assert_eq!(
            partial(&Polynomial::monomial(2, 1), DerivationSpec::Dx),
            p(&[(1, 1, 2)])
        );
        let m = Polynomial::monomial(3, 5);
        assert_eq!(partial(&m, DerivationSpec::XDx), m.scale(&int(3)));
        let a = p(&[(1, 0, 2), (1, 1, 3), (1, 2, 1)]);
        assert_eq!(partial(&a, DerivationSpec::Dy), p(&[(1, 0, 3), (1, 1, 2)]));
        assert!(partial(&Polynomial::y(), DerivationSpec::Dx).is_zero());
    }

    #[test]
    fn laurent_flag_is_enforced() {
        let bad = Polynomial::from_terms([(Monomial::new(-1, 1), int(1))], false);
        assert_eq!(bad, Err(PolyError::NegativeExponent(Monomial::new(-1, 1))));
        let ok = Polynomial::from_terms([(Monomial::new(-1, 1), int(1))], true).unwrap();
        assert!(ok.is_laurent());
        assert_eq!(
            partial(&ok, DerivationSpec::Dx),
            Polynomial::from_terms([(Monomial::new(-2, 1), int(-1))], true).unwrap()
        );
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        assert_eq!(Polynomial::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(-5));
        assert_eq!(p(&[(2, 3, 1), (0, 1, 4)]).degree(), Degree::Finite(5));
    }

    #[test]
    fn display() {
        let f = Polynomial::from_terms(
            [
                (Monomial::new(2, 1), int(3)),
                (Monomial::new(0, 3), ratio(-1, 2)),
            ],
            false,
        )
        .unwrap();
        assert_eq!(f.to_string(), "-1/2*y^3 + 3*x^2*y");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn commuting_derivations() {
        use DerivationSpec::*;
        assert!(Dx.commutes_with(&Dy));
        assert!(XDx.commutes_with(&YDy));
        assert!(Dx.commutes_with(&YDy));
        assert!(!Dx.commutes_with(&XDx));
        // check the rule against the operators themselves
        let f = p(&[(3, 2, 1), (1, 4, -2), (0, 0, 5)]);
        for a in DerivationSpec::ALL {
            for b in DerivationSpec::ALL {
                let ab = partial(&partial(&f, b), a);
                let ba = partial(&partial(&f, a), b);
                assert_eq!(ab == ba, a.commutes_with(&b), "{a:?} {b:?}");
            }
        }
    }
}
