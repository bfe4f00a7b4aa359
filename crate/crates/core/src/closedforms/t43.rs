//! `A = xy`, `B = Σ_{i=0}^{n} a_i x^i y^{i+m}`.

use num_traits::Zero;

use super::{mono, skew_dispatch, ParamError};
use crate::coboundary::RElement;
use crate::dual::DualFunctional;
use crate::monomial::Monomial;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T43Params {
    m: u32,
    coeffs: Vec<Rational>,
}

impl T43Params {
    /// `coeffs = [a_0, …, a_n]` with `a_n ≠ 0`.
    pub fn new(m: u32, coeffs: Vec<Rational>) -> Result<Self, ParamError> {
        match coeffs.last() {
            None => Err(ParamError::EmptyCoefficients),
            Some(c) if c.is_zero() => Err(ParamError::LeadingZero),
            Some(_) => Ok(T43Params { m, coeffs }),
        }
    }

    pub fn from_ints(m: u32, coeffs: &[i64]) -> Result<Self, ParamError> {
        Self::new(m, coeffs.iter().map(|c| int(*c)).collect())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `a_i`, zero past the end.
    fn a(&self, i: i64) -> Rational {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Index `i` with `(s, t) = (i, i + m)`, if that point carries a coefficient slot.
    fn on_support(&self, s: i64, t: i64) -> Option<i64> {
        (t - s == self.m as i64 && s >= 0 && (s as usize) < self.coeffs.len()).then_some(s)
    }

    pub fn r_element(&self) -> RElement {
        super::xy_shift_r_family(self.m, &self.coeffs)
    }
}

/// For `m ≠ 0`, with `(s,t) ≠ (1,1)`:
/// ```text
/// [φ^p ε^p, φ^s ε^t] = δ_{p,1} Σ a_i (si + sm + m − ti) φ^{s−i+1} ε^{t−i−m+1}
/// [φ^p ε^q, φ^s ε^t] = (p−q) Σ a_i δ_{s,i} δ_{t,i+m} φ^p ε^q
///                      − (s−t) Σ a_i δ_{p,i} δ_{q,i+m} φ^s ε^t      p ≠ q, s ≠ t
/// ```
/// For `m = 0`, with `(s,t) ≠ (1,1)`:
/// ```text
/// [φε, φ^s ε^t]      = Σ_{i=2}^{n} a_i (s−t) i φ^{s−i+1} ε^{t−i+1}
/// [φ^p ε^p, φ^s ε^t] = (t−s) a_p φ^s ε^t                              p ≠ 1
/// [φ^p ε^q, φ^s ε^t] = 0                                              p ≠ q, s ≠ t
/// ```
pub fn thm43_bracket(p: &T43Params, u: Monomial, v: Monomial) -> DualFunctional {
    let m = p.m as i64;
    let n = p.coeffs.len() as i64 - 1;
    let one = Monomial::new(1, 1);
    skew_dispatch(u, v, |u, v| {
        let (pp, q, s, t) = (u.i, u.j, v.i, v.j);
        if v == one {
            return None;
        }
        if m != 0 {
            if pp == q {
                let mut out = DualFunctional::zero();
                if pp == 1 {
                    for i in 0..=n {
                        out.add_scaled(
                            &mono(s * i + s * m + m - t * i, s - i + 1, t - i - m + 1),
                            &p.a(i),
                        );
                    }
                }
                return Some(out);
            }
            if s != t {
                let mut out = DualFunctional::zero();
                if let Some(i) = p.on_support(s, t) {
                    out.add_scaled(&mono(pp - q, pp, q), &p.a(i));
                }
                if let Some(i) = p.on_support(pp, q) {
                    out.add_scaled(&mono(-(s - t), s, t), &p.a(i));
                }
                return Some(out);
            }
            None
        } else if u == one {
            let mut out = DualFunctional::zero();
            for i in 2..=n {
                out.add_scaled(&mono((s - t) * i, s - i + 1, t - i + 1), &p.a(i));
            }
            Some(out)
        } else if pp == q {
            Some(DualFunctional::term(s, t, int(t - s) * p.a(pp)))
        } else if s != t {
            Some(DualFunctional::zero())
        } else {
            None
        }
    })
}
