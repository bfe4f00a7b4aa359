use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::lincomb::{LinComb, Tensor2, DUAL_VARS};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::{int, Rational};

/// Two-fold tensor on the dual side. Only nonnegative exponents are ever
/// inserted by the constructors in this module.
pub type DualTensor2 = Tensor2;

/// A finitely supported functional. Terms with a negative exponent are
/// discarded on construction (an undefined `φ^i ε^j` is zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DualFunctional {
    terms: LinComb<Monomial>,
}

impl DualFunctional {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `φ^i ε^j`, or zero if either exponent is negative.
    pub fn basis(i: i64, j: i64) -> Self {
        Self::term(i, j, int(1))
    }

    pub fn term(i: i64, j: i64, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(Monomial::new(i, j), c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn from_lincomb(lc: &LinComb<Monomial>) -> Self {
        Self::from_terms(lc.iter().map(|(m, c)| (*m, c.clone())))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if m.is_nonnegative() {
            self.terms.add_term(m, c);
        }
    }

    pub fn add_scaled(&mut self, other: &DualFunctional, c: &Rational) {
        self.terms.add_scaled(&other.terms, c);
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

    pub fn scale(&self, c: &Rational) -> Self {
        DualFunctional {
            terms: self.terms.scale(c),
        }
    }

    /// Componentwise maximum exponents, `(-1, -1)` for zero.
    pub fn support_bound(&self) -> (i64, i64) {
        self.terms
            .keys()
            .fold((-1, -1), |(a, b), m| (a.max(m.i), b.max(m.j)))
    }
}

impl Add for &DualFunctional {
    type Output = DualFunctional;
    fn add(self, rhs: Self) -> DualFunctional {
        DualFunctional {
            terms: &self.terms + &rhs.terms,
        }
    }
}

impl Sub for &DualFunctional {
    type Output = DualFunctional;
    fn sub(self, rhs: Self) -> DualFunctional {
        DualFunctional {
            terms: &self.terms - &rhs.terms,
        }
    }
}

impl Neg for &DualFunctional {
    type Output = DualFunctional;
    fn neg(self) -> DualFunctional {
        DualFunctional {
            terms: -&self.terms,
        }
    }
}

impl Add for DualFunctional {
    type Output = DualFunctional;
    fn add(self, rhs: Self) -> DualFunctional {
        &self + &rhs
    }
}

impl Sub for DualFunctional {
    type Output = DualFunctional;
    fn sub(self, rhs: Self) -> DualFunctional {
        &self - &rhs
    }
}

impl Neg for DualFunctional {
    type Output = DualFunctional;
    fn neg(self) -> DualFunctional {
        -&self
    }
}

impl fmt::Display for DualFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.display_with(DUAL_VARS).fmt(f)
    }
}

/// `⟨u, g⟩` with `⟨φ^i ε^j, x^k y^l⟩ = δ_ik δ_jl`.
pub fn pairing(u: &DualFunctional, g: &Polynomial) -> Rational {
    let mut acc = int(0);
    for (m, c) in u.iter() {
        let gc = g.terms().coeff(m);
        acc += c * gc;
    }
    acc
}

/// `⟨u ⊗ v, a ⊗ b⟩ = ⟨u, a⟩⟨v, b⟩`, extended bilinearly.
pub fn pairing2(t: &DualTensor2, s: &Tensor2) -> Rational {
    let (small, large) = if t.len() <= s.len() { (t, s) } else { (s, t) };
    let mut acc = int(0);
    for (k, c) in small.iter() {
        acc += c * large.coeff(k);
    }
    acc
}

/// Dual of multiplication: `μ°(φ^m ε^n) = Σ_{k+s=m, l+t=n} φ^k ε^l ⊗ φ^s ε^t`.
pub fn mu_circ(u: &DualFunctional) -> DualTensor2 {
    let mut out = DualTensor2::zero();
    for (m, c) in u.iter() {
        for k in 0..=m.i {
            for l in 0..=m.j {
                out.add_term(
                    (Monomial::new(k, l), Monomial::new(m.i - k, m.j - l)),
                    c.clone(),
                );
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Dual of `∂/∂x` (resp. `∂/∂y`): `φ^i ε^j ↦ (i+1) φ^{i+1} ε^j`.
pub fn partial_circ(axis: Axis, u: &DualFunctional) -> DualFunctional {
    let mut out = DualFunctional::zero();
    for (m, c) in u.iter() {
        let (k, m2) = match axis {
            Axis::X => (m.i + 1, m.shift(1, 0)),
            Axis::Y => (m.j + 1, m.shift(0, 1)),
        };
        out.add_term(m2, c * int(k));
    }
    out
}

fn partial_circ_basis(axis: Axis, m: &Monomial) -> LinComb<Monomial> {
    partial_circ(axis, &DualFunctional::basis(m.i, m.j)).terms
}

/// `Δ = (∂₁° ⊗ ∂₂° − ∂₂° ⊗ ∂₁°) ∘ μ°`.
pub fn delta_mu(u: &DualFunctional) -> DualTensor2 {
    let mu = mu_circ(u);
    let mut out = DualTensor2::zero();
    for ((a, b), c) in mu.iter() {
        let xa = partial_circ_basis(Axis::X, a);
        let ya = partial_circ_basis(Axis::Y, a);
        let xb = partial_circ_basis(Axis::X, b);
        let yb = partial_circ_basis(Axis::Y, b);
        for (ma, ca) in xa.iter() {
            for (mb, cb) in yb.iter() {
                out.add_term((*ma, *mb), c * ca * cb);
            }
        }
        for (ma, ca) in ya.iter() {
            for (mb, cb) in xb.iter() {
                out.add_term((*ma, *mb), -(c * ca * cb));
            }
        }
    }
    out
}

/// `Δ(φ^m ε^n) = Σ_{k+s=m+1, l+t=n+1} (kt − ls) φ^k ε^l ⊗ φ^s ε^t`.
pub fn delta_closed_form(u: &DualFunctional) -> DualTensor2 {
    let mut out = DualTensor2::zero();
    for (m, c) in u.iter() {
        for k in 0..=m.i + 1 {
            let s = m.i + 1 - k;
            for l in 0..=m.j + 1 {
                let t = m.j + 1 - l;
                let w = k * t - l * s;
                if w != 0 {
                    out.add_term((Monomial::new(k, l), Monomial::new(s, t)), c * int(w));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::swap2;

    fn phi_eps(i: i64, j: i64) -> DualFunctional {
        DualFunctional::basis(i, j)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&phi_eps(2, 1), &Polynomial::monomial(2, 1)), int(1));
        assert_eq!(pairing(&phi_eps(2, 1), &Polynomial::monomial(2, 2)), int(0));
        let u = DualFunctional::from_terms([
            (Monomial::new(1, 0), int(2)),
            (Monomial::new(0, 1), int(3)),
        ]);
        let g = Polynomial::from_int_terms(&[(1, 0, 5), (0, 1, 7)]);
        assert_eq!(pairing(&u, &g), int(31));
    }

    #[test]
    fn pairing2_examples() {
        let t = DualTensor2::basis((Monomial::new(1, 0), Monomial::new(0, 1)));
        let s = DualTensor2::basis((Monomial::new(1, 0), Monomial::new(0, 1)));
        assert_eq!(pairing2(&t, &s), int(1));
        assert_eq!(pairing2(&t, &swap2(&s)), int(0));
    }

    #[test]
    fn negative_exponents_vanish() {
        assert!(DualFunctional::basis(-1, 3).is_zero());
        assert!(DualFunctional::term(2, -1, int(5)).is_zero());
    }

    #[test]
    fn mu_circ_examples() {
        let one = mu_circ(&phi_eps(0, 0));
        assert_eq!(one, DualTensor2::basis((Monomial::ONE, Monomial::ONE)));
        let phi = mu_circ(&phi_eps(1, 0));
        assert_eq!(phi.len(), 2);
        assert_eq!(phi.coeff(&(Monomial::new(1, 0), Monomial::ONE)), int(1));
        assert_eq!(phi.coeff(&(Monomial::ONE, Monomial::new(1, 0))), int(1));
        for (m, n) in [(3, 2), (0, 4), (5, 5)] {
            assert_eq!(mu_circ(&phi_eps(m, n)).len() as i64, (m + 1) * (n + 1));
        }
    }

    #[test]
    fn partial_circ_examples() {
        assert_eq!(partial_circ(Axis::X, &phi_eps(0, 0)), phi_eps(1, 0));
        assert_eq!(
            partial_circ(Axis::Y, &phi_eps(1, 1)),
            DualFunctional::term(1, 2, int(2))
        );
    }

    #[test]
    fn delta_examples() {
        let d1 = delta_mu(&phi_eps(0, 0));
        let want = &DualTensor2::basis((Monomial::new(1, 0), Monomial::new(0, 1)))
            - &DualTensor2::basis((Monomial::new(0, 1), Monomial::new(1, 0)));
        assert_eq!(d1, want);
        let d = delta_mu(&phi_eps(1, 1));
        assert_eq!(d.len(), 6);
        for ((a, _), c) in d.iter() {
            assert_eq!(*c, int(2 * (a.i - a.j)));
        }
        assert_eq!(d, delta_closed_form(&phi_eps(1, 1)));
        assert_eq!(swap2(&d), -&d);
    }
}
