//! Finitely supported linear combinations over exact rationals.
//!
//! One sparse container backs polynomials, functionals and their tensor
//! powers. Zero coefficients are never stored, and iteration follows the
//! key order (graded-lex on monomials, lexicographic product on tuples).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

/// Two-fold tensor of basis monomials.
pub type Tensor2 = LinComb<(Monomial, Monomial)>;
/// Three-fold tensor of basis monomials.
pub type Tensor3 = LinComb<(Monomial, Monomial, Monomial)>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabels basis elements; `None` drops the term.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Option<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            if let Some(k2) = f(k) {
                out.add_term(k2, c.clone());
            }
        }
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, Rational)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), -v);
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: Self) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: Self) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -&self
    }
}

/// Swaps the two tensor slots.
pub fn swap2(t: &Tensor2) -> Tensor2 {
    t.map_keys(|(a, b)| Some((*b, *a)))
}

/// Cyclic slot permutation `a ⊗ b ⊗ c ↦ c ⊗ a ⊗ b`.
pub fn cycle3(t: &Tensor3) -> Tensor3 {
    t.map_keys(|(a, b, c)| Some((*c, *a, *b)))
}

/// `f ⊗ g` for single-slot combinations.
pub fn tensor2(f: &LinComb<Monomial>, g: &LinComb<Monomial>) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            out.add_term((*a, *b), ca * cb);
        }
    }
    out
}

/// Basis elements that know how to print themselves.
pub trait BasisDisplay {
    /// Writes `coeff * self` where `coeff > 0`.
    fn write_term(
        &self,
        f: &mut fmt::Formatter<'_>,
        coeff: &Rational,
        vars: (&str, &str),
    ) -> fmt::Result;
}

impl BasisDisplay for Monomial {
    fn write_term(
        &self,
        f: &mut fmt::Formatter<'_>,
        coeff: &Rational,
        vars: (&str, &str),
    ) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "{coeff}");
        }
        if !coeff.is_one() {
            write!(f, "{coeff}*")?;
        }
        self.write_with(f, vars)
    }
}

impl BasisDisplay for (Monomial, Monomial) {
    fn write_term(
        &self,
        f: &mut fmt::Formatter<'_>,
        coeff: &Rational,
        vars: (&str, &str),
    ) -> fmt::Result {
        self.0.write_term(f, coeff, vars)?;
        f.write_str(" (x) ")?;
        self.1.write_with(f, vars)
    }
}

impl BasisDisplay for (Monomial, Monomial, Monomial) {
    fn write_term(
        &self,
        f: &mut fmt::Formatter<'_>,
        coeff: &Rational,
        vars: (&str, &str),
    ) -> fmt::Result {
        self.0.write_term(f, coeff, vars)?;
        f.write_str(" (x) ")?;
        self.1.write_with(f, vars)?;
        f.write_str(" (x) ")?;
        self.2.write_with(f, vars)
    }
}

/// Display adapter binding variable names to a combination.
pub struct Named<'a, K: Ord> {
    lc: &'a LinComb<K>,
    vars: (&'static str, &'static str),
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn display_with(&self, vars: (&'static str, &'static str)) -> Named<'_, K> {
        Named { lc: self, vars }
    }
}

pub const PRIMAL_VARS: (&str, &str) = ("x", "y");
pub const DUAL_VARS: (&str, &str) = ("phi", "eps");

impl<K: Ord + BasisDisplay> fmt::Display for Named<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lc.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.lc.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            k.write_term(f, &c.abs(), self.vars)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut a = LinComb::term(Monomial::new(1, 0), int(2));
        a.add_term(Monomial::new(1, 0), int(-2));
        assert!(a.is_zero());
        a.add_term(Monomial::new(0, 1), int(0));
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn display_orders_graded_lex() {
        let p: LinComb<Monomial> = [
            (Monomial::new(0, 3), ratio(-1, 2)),
            (Monomial::new(2, 1), int(3)),
            (Monomial::ONE, int(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(
            p.display_with(PRIMAL_VARS).to_string(),
            "-1 - 1/2*y^3 + 3*x^2*y"
        );
    }

    #[test]
    fn tensor_display() {
        let t: Tensor2 = [
            ((Monomial::new(1, 0), Monomial::new(1, 1)), int(1)),
            ((Monomial::new(1, 1), Monomial::new(1, 0)), int(-1)),
            ((Monomial::ONE, Monomial::new(0, 1)), int(3)),
        ]
        .into_iter()
        .collect();
        assert_eq!(
            t.display_with(DUAL_VARS).to_string(),
            "3 (x) eps + phi (x) phi*eps - phi*eps (x) phi"
        );
        assert_eq!(swap2(&swap2(&t)), t);
    }
}
