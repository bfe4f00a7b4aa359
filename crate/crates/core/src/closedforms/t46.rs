//! `A = x(1+y)(2+y) = Σ c_j x y^j`, `B = x²(1+y)³(2+y) = Σ k_t x² y^t`.

use num_traits::Zero;

use super::{mono, skew_dispatch};
use crate::coboundary::RElement;
use crate::dual::DualFunctional;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::{int, Rational};

/// Coefficients of `A` and `B`. The defaults are the expanded products;
/// other values exist only to build mutation controls, and for those the
/// closed form describes a different `r` than the one it was derived for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct T46Params {
    c: [i64; 3],
    k: [i64; 5],
}

impl Default for T46Params {
    fn default() -> Self {
        T46Params {
            c: [2, 3, 1],
            k: [2, 7, 9, 5, 1],
        }
    }
}

impl T46Params {
    pub fn with_constants(c: [i64; 3], k: [i64; 5]) -> Self {
        T46Params { c, k }
    }

    pub fn c(&self) -> [i64; 3] {
        self.c
    }

    pub fn k(&self) -> [i64; 5] {
        self.k
    }

    fn cj(&self, j: i64) -> Rational {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.c.get(j))
            .map_or_else(Rational::zero, |c| int(*c))
    }

    fn kt(&self, t: i64) -> Rational {
        usize::try_from(t)
            .ok()
            .and_then(|t| self.k.get(t))
            .map_or_else(Rational::zero, |c| int(*c))
    }

    pub fn r_element(&self) -> RElement {
        let a =
            Polynomial::from_int_terms(&[(1, 0, self.c[0]), (1, 1, self.c[1]), (1, 2, self.c[2])]);
        let b = Polynomial::from_int_terms(&[
            (2, 0, self.k[0]),
            (2, 1, self.k[1]),
            (2, 2, self.k[2]),
            (2, 3, self.k[3]),
            (2, 4, self.k[4]),
        ]);
        RElement::new(a, b)
    }
}

/// Five-term block at `φ^{s−1}` produced by pairing against `B`. The top
/// term is `−4(t+1) φ^{s−1} ε^{t+1}`; a `+` there fails against the oracle.
pub fn d_block(s: i64, t: i64) -> DualFunctional {
    let mut out = mono(4 * s - 2 * t + 2, s - 1, t - 3);
    out = out + mono(15 * s - 10 * t + 5, s - 1, t - 2);
    out = out + mono(18 * (s - t), s - 1, t - 1);
    out = out + mono(7 * s - 14 * t - 7, s - 1, t);
    out + mono(-4 * (t + 1), s - 1, t + 1)
}

/// Three-term block carried by `A` at `φ^i`.
pub fn c_block(i: i64, j: i64) -> DualFunctional {
    mono(2 * i - j + 1, i, j - 1) + mono(3 * (i - j), i, j) + mono(-2 * (j + 1), i, j + 1)
}

/// With `u = φ^i ε^j`, `v = φ^s ε^t`, `D` = [`d_block`], `C` = [`c_block`]:
/// ```text
/// i = 1, s ∉ {1,2}:  c_j D(s,t)
/// i = 1, s = 1:      c_j D(1,t) − c_t D(1,j)
/// i = 1, s = 2:      k_t C(1,j) + c_j D(2,t)
/// i = 2, s ∉ {1,2}:  −k_j C(s,t)
/// i = 2, s = 2:      k_t C(2,j) − k_j C(2,t)
/// i, s ∉ {1,2}:      0
/// ```
pub fn thm46_bracket(p: &T46Params, u: Monomial, v: Monomial) -> DualFunctional {
    skew_dispatch(u, v, |u, v| {
        let (i, j, s, t) = (u.i, u.j, v.i, v.j);
        match (i, s) {
            (1, 1) => Some(d_block(1, t).scale(&p.cj(j)) - d_block(1, j).scale(&p.cj(t))),
            (1, 2) => Some(c_block(1, j).scale(&p.kt(t)) + d_block(2, t).scale(&p.cj(j))),
            (1, _) => Some(d_block(s, t).scale(&p.cj(j))),
            (2, 2) => Some(c_block(2, j).scale(&p.kt(t)) - c_block(2, t).scale(&p.kt(j))),
            (2, 1) => None,
            (2, _) => Some(c_block(s, t).scale(&-p.kt(j))),
            _ => None,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(i: i64, j: i64) -> Monomial {
        Monomial::new(i, j)
    }

    #[test]
    fn examples() {
        let p = T46Params::default();
        assert_eq!(
            thm46_bracket(&p, b(2, 0), b(3, 0)),
            DualFunctional::term(3, 0, int(-18)) + DualFunctional::term(3, 1, int(4))
        );
        assert!(thm46_bracket(&p, b(1, 5), b(4, 0)).is_zero());
        assert!(thm46_bracket(&p, b(3, 1), b(4, 2)).is_zero());
    }

    #[test]
    fn default_constants_expand_the_products() {
        let one_y = Polynomial::from_int_terms(&[(0, 0, 1), (0, 1, 1)]);
        let two_y = Polynomial::from_int_terms(&[(0, 0, 2), (0, 1, 1)]);
        let a = &(&Polynomial::x() * &one_y) * &two_y;
        let b = &(&(&(&Polynomial::monomial(2, 0) * &one_y) * &one_y) * &one_y) * &two_y;
        assert_eq!(T46Params::default().r_element(), RElement::new(a, b));
    }
}
