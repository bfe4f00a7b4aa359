//! `A = x^m y^n`, `B = xy`.

use super::{mono, skew_dispatch, ParamError};
use crate::coboundary::RElement;
use crate::dual::DualFunctional;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct T42Params {
    m: u32,
    n: u32,
}

impl T42Params {
    pub fn new(m: u32, n: u32) -> Result<Self, ParamError> {
        if (m, n) == (1, 1) {
            return Err(ParamError::T42Excluded);
        }
        Ok(T42Params { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r_element(&self) -> RElement {
        RElement::new(
            Polynomial::monomial(self.m, self.n),
            Polynomial::monomial(1, 1),
        )
    }
}

/// ```text
/// [φε, φ^s ε^t]        = (m(t+1) − n(s+1)) φ^{s+1−m} ε^{t+1−n}   (s,t) ≠ (1,1)
/// [φ^m ε^n, φ^s ε^t]   = (s − t) φ^s ε^t                        (m,n) ≠ (s,t) ≠ (1,1)
/// otherwise 0
/// ```
pub fn thm42_bracket(p: &T42Params, u: Monomial, v: Monomial) -> DualFunctional {
    let (m, n) = (p.m as i64, p.n as i64);
    let one = Monomial::new(1, 1);
    let a = Monomial::new(m, n);
    skew_dispatch(u, v, |u, v| {
        let (s, t) = (v.i, v.j);
        if u == one && v != one {
            Some(mono(m * (t + 1) - n * (s + 1), s + 1 - m, t + 1 - n))
        } else if u == a && v != a && v != one {
            Some(mono(s - t, s, t))
        } else {
            None
        }
    })
}
