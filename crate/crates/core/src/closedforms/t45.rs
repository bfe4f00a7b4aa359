//! `A = x^k y^l`, `B = Σ_{(i,j)∈S} a_ij x^i y^j` with `kj − li = 0` on `S`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{line_support, mono, skew_dispatch, ParamError};
use crate::coboundary::RElement;
use crate::dual::DualFunctional;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T45Params {
    k: u32,
    l: u32,
    support: BTreeMap<Monomial, Rational>,
}

impl T45Params {
    /// Rejects off-line support points, zero coefficients and `(k, l) = (0, 0)`.
    pub fn new(k: u32, l: u32, support: &[(Monomial, Rational)]) -> Result<Self, ParamError> {
        if (k, l) == (0, 0) {
            return Err(ParamError::DegenerateLine);
        }
        let b = line_support(k, l, support)?;
        let support: BTreeMap<Monomial, Rational> =
            b.iter().map(|(m, c)| (*m, c.clone())).collect();
        if support.is_empty() {
            return Err(ParamError::EmptyCoefficients);
        }
        Ok(T45Params { k, l, support })
    }

    pub fn from_ints(k: u32, l: u32, support: &[(i64, i64, i64)]) -> Result<Self, ParamError> {
        let s: Vec<(Monomial, Rational)> = support
            .iter()
            .map(|&(i, j, c)| (Monomial::new(i, j), int(c)))
            .collect();
        Self::new(k, l, &s)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn support(&self) -> &BTreeMap<Monomial, Rational> {
        &self.support
    }

    fn a(&self, s: i64, t: i64) -> Rational {
        self.support
            .get(&Monomial::new(s, t))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn r_element(&self) -> RElement {
        let b = Polynomial::from_terms(self.support.clone(), false).expect("nonnegative support");
        RElement::new(Polynomial::monomial(self.k, self.l), b)
    }
}

/// With `u = φ^p ε^q`, `v = φ^s ε^t`, `κ = (k, l)`:
/// ```text
/// u = κ ≠ v, by membership of v and κ in S:
///   v∈S, κ∈S:  (l−k) a_st φε + Σ_S a_ij (j−i) φ^{s−i+1} ε^{t−j+1} − (l−k) a_kl φ^{s−k+1} ε^{t−l+1}
///   v∉S, κ∈S:  Σ_S a_ij (j(s+1) − i(t+1)) φ^{s−i+1} ε^{t−j+1} − (l(s+1) − k(t+1)) a_kl φ^{s−k+1} ε^{t−l+1}
///   v∈S, κ∉S:  (l−k) a_st φε + Σ_S a_ij (j−i) φ^{s−i+1} ε^{t−j+1}
///   v∉S, κ∉S:  Σ_S a_ij (j(s+1) − i(t+1)) φ^{s−i+1} ε^{t−j+1}
/// u, v ≠ κ:
///   u∈S, v∈S:  (l−k) a_st φ^{p−k+1} ε^{q−l+1} − (l−k) a_pq φ^{s−k+1} ε^{t−l+1}
///   u∉S, v∈S:  (l(p+1) − k(q+1)) a_st φ^{p−k+1} ε^{q−l+1}
///   u∉S, v∉S:  0
/// ```
pub fn thm45_bracket(p: &T45Params, u: Monomial, v: Monomial) -> DualFunctional {
    let (k, l) = (p.k as i64, p.l as i64);
    let kappa = Monomial::new(k, l);
    skew_dispatch(u, v, |u, v| {
        let (pp, q, s, t) = (u.i, u.j, v.i, v.j);
        let in_s = |m: Monomial| p.support.contains_key(&m);
        if u == kappa && v != kappa {
            let mut out = DualFunctional::zero();
            if in_s(v) {
                out.add_scaled(&mono(l - k, 1, 1), &p.a(s, t));
                for (ij, c) in &p.support {
                    out.add_scaled(&mono(ij.j - ij.i, s - ij.i + 1, t - ij.j + 1), c);
                }
            } else {
                for (ij, c) in &p.support {
                    out.add_scaled(
                        &mono(ij.j * (s + 1) - ij.i * (t + 1), s - ij.i + 1, t - ij.j + 1),
                        c,
                    );
                }
            }
            if in_s(kappa) {
                let w = if in_s(v) {
                    l - k
                } else {
                    l * (s + 1) - k * (t + 1)
                };
                out.add_scaled(&mono(-w, s - k + 1, t - l + 1), &p.a(k, l));
            }
            return Some(out);
        }
        if u != kappa && v != kappa {
            return match (in_s(u), in_s(v)) {
                (true, true) => {
                    let mut out = DualFunctional::zero();
                    out.add_scaled(&mono(l - k, pp - k + 1, q - l + 1), &p.a(s, t));
                    out.add_scaled(&mono(-(l - k), s - k + 1, t - l + 1), &p.a(pp, q));
                    Some(out)
                }
                (false, true) => {
                    Some(mono(l * (pp + 1) - k * (q + 1), pp - k + 1, q - l + 1).scale(&p.a(s, t)))
                }
                (false, false) => Some(DualFunctional::zero()),
                (true, false) => None,
            };
        }
        None
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
        let p = T45Params::from_ints(2, 1, &[(2, 1, 1)]).unwrap();
        assert!(thm45_bracket(&p, b(3, 3), b(2, 1)).is_zero());
        let p = T45Params::from_ints(2, 1, &[(2, 1, 1), (4, 2, 1)]).unwrap();
        assert_eq!(
            thm45_bracket(&p, b(3, 3), b(4, 2)),
            DualFunctional::term(2, 3, int(-4))
        );
    }

    #[test]
    fn validation() {
        assert_eq!(
            T45Params::from_ints(1, 1, &[(1, 2, 1)]),
            Err(ParamError::OffLine {
                i: 1,
                j: 2,
                value: 1
            })
        );
        assert_eq!(
            T45Params::from_ints(0, 0, &[(0, 0, 1)]),
            Err(ParamError::DegenerateLine)
        );
        assert_eq!(
            T45Params::from_ints(1, 1, &[(2, 2, 0)]),
            Err(ParamError::ZeroCoefficient { i: 2, j: 2 })
        );
    }
}
