//! Lie brackets on the primal algebra and their axiom checkers.

use crate::lincomb::LinComb;
use crate::monomial::Monomial;
use crate::poly::{partial, poly_mul, DerivationSpec, Polynomial};
use crate::rational::{int, Rational};

/// A bilinear bracket on polynomials.
pub trait LieBracket {
    fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial;
}

impl<F> LieBracket for F
where
    F: Fn(&Polynomial, &Polynomial) -> Polynomial,
{
    fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self(f, g)
    }
}

/// The classical Poisson bracket: the Jacobian determinant `J(f, g)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PoissonBracket;

impl LieBracket for PoissonBracket {
    fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        poisson_bracket(f, g)
    }
}

/// `∂₁(a)∂₂(b) − ∂₂(a)∂₁(b)` for a fixed pair of derivations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivationBracket {
    pub d1: DerivationSpec,
    pub d2: DerivationSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("derivations {0:?} and {1:?} do not commute")]
pub struct NonCommutingDerivations(pub DerivationSpec, pub DerivationSpec);

impl DerivationBracket {
    pub fn new(d1: DerivationSpec, d2: DerivationSpec) -> Result<Self, NonCommutingDerivations> {
        if d1.commutes_with(&d2) {
            Ok(DerivationBracket { d1, d2 })
        } else {
            Err(NonCommutingDerivations(d1, d2))
        }
    }

    /// `(x ∂/∂x, y ∂/∂y)`: the Virasoro-like bracket on Laurent polynomials.
    pub fn euler() -> Self {
        DerivationBracket {
            d1: DerivationSpec::XDx,
            d2: DerivationSpec::YDy,
        }
    }

    /// `(∂/∂x, ∂/∂y)`: the Jacobian bracket.
    pub fn jacobian() -> Self {
        DerivationBracket {
            d1: DerivationSpec::Dx,
            d2: DerivationSpec::Dy,
        }
    }
}

impl LieBracket for DerivationBracket {
    fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        derivation_bracket(f, g, self.d1, self.d2)
    }
}

pub fn derivation_bracket(
    f: &Polynomial,
    g: &Polynomial,
    d1: DerivationSpec,
    d2: DerivationSpec,
) -> Polynomial {
    let lhs = poly_mul(&partial(f, d1), &partial(g, d2));
    let rhs = poly_mul(&partial(f, d2), &partial(g, d1));
    &lhs - &rhs
}

/// `J(f, g) = f_x g_y − f_y g_x`, expanded termwise:
/// `[x^a y^b, x^k y^l] = (a l − b k) x^{a+k−1} y^{b+l−1}`.
pub fn poisson_bracket(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let mut out = LinComb::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            let (k, m) = poisson_monomials(a, b);
            if k != 0 {
                out.add_term(m, ca * cb * int(k));
            }
        }
    }
    Polynomial::from_lincomb(out, f.is_laurent() || g.is_laurent())
        .expect("Jacobian of polynomials has nonnegative exponents")
}

/// Jacobian bracket of two basis monomials as `(coefficient, monomial)`.
pub fn poisson_monomials(a: &Monomial, b: &Monomial) -> (i64, Monomial) {
    (
        a.i * b.j - a.j * b.i,
        Monomial::new(a.i + b.i - 1, a.j + b.j - 1),
    )
}

/// Bracket on the lattice basis `L_α`: `[L_α, L_β] = (α₁β₂ − β₁α₂) L_{α+β}`.
pub fn virasoro_like_bracket(alpha: (i64, i64), beta: (i64, i64)) -> (Rational, (i64, i64)) {
    (
        int(alpha.0 * beta.1 - beta.0 * alpha.1),
        (alpha.0 + beta.0, alpha.1 + beta.1),
    )
}

/// `[a, bc] − [a, b]c − b[a, c]`.
pub fn leibniz_defect(
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
    bracket: &impl LieBracket,
) -> Polynomial {
    let lhs = bracket.bracket(a, &poly_mul(b, c));
    let t1 = poly_mul(&bracket.bracket(a, b), c);
    let t2 = poly_mul(b, &bracket.bracket(a, c));
    &(&lhs - &t1) - &t2
}

/// `[a, [b, c]] + [b, [c, a]] + [c, [a, b]]`.
pub fn jacobi_defect(
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
    bracket: &impl LieBracket,
) -> Polynomial {
    let t1 = bracket.bracket(a, &bracket.bracket(b, c));
    let t2 = bracket.bracket(b, &bracket.bracket(c, a));
    let t3 = bracket.bracket(c, &bracket.bracket(a, b));
    &(&t1 + &t2) + &t3
}
