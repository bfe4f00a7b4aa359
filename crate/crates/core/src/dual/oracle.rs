//! Brute-force dual bracket.
//!
//! The bracket on the dual is defined by `⟨[u, v], g⟩ = ⟨u ⊗ v, Δ_r(g)⟩`.
//! The oracle evaluates `Δ_r(x^k y^l)` for every `(k, l)` in a scan window
//! plus a guard ring of width one, and reads `[u, v]` off the pairings. A
//! nonzero pairing on the ring means the window missed part of the support
//! and is reported as an error rather than truncated.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::PoissonBracket;
use crate::coboundary::{cobracket_r, RElement};
use crate::dual::functional::DualFunctional;
use crate::lincomb::Tensor2;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// The exponent box `[0, max_i] × [0, max_j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentBox {
    pub max_i: i64,
    pub max_j: i64,
}

impl ExponentBox {
    pub fn new(max_i: i64, max_j: i64) -> Self {
        ExponentBox { max_i, max_j }
    }

    pub fn square(n: i64) -> Self {
        ExponentBox::new(n, n)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        (0..=self.max_i).contains(&m.i) && (0..=self.max_j).contains(&m.j)
    }

    pub fn grow(&self, by: i64) -> Self {
        ExponentBox::new(self.max_i + by, self.max_j + by)
    }

    /// Number of basis monomials in the box.
    pub fn size(&self) -> usize {
        ((self.max_i + 1).max(0) * (self.max_j + 1).max(0)) as usize
    }

    /// Basis monomials, row-major in `(i, j)`.
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..=self.max_i {
            for j in 0..=self.max_j {
                out.push(Monomial::new(i, j));
            }
        }
        out
    }

    /// Support margin for brackets built from `r`: total degree of the
    /// first legs plus total degree of the second legs plus two.
    pub fn margin(r: &RElement) -> i64 {
        let (da, db) = r.tensor().keys().fold((0, 0), |(x, y), (a, b)| {
            (x.max(a.degree()), y.max(b.degree()))
        });
        da + db + 2
    }

    /// Bounding box of `supp u ∪ supp v` grown by [`ExponentBox::margin`].
    pub fn for_bracket(u: &DualFunctional, v: &DualFunctional, r: &RElement) -> Self {
        let (ui, uj) = u.support_bound();
        let (vi, vj) = v.support_bound();
        let m = Self::margin(r);
        ExponentBox::new(ui.max(vi).max(0) + m, uj.max(vj).max(0) + m)
    }
}

impl std::fmt::Display for ExponentBox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[0,{}]x[0,{}]", self.max_i, self.max_j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("guard ring violated for [{u}, {v}]: ring pairs to {ring}; window {window} too small")]
pub struct GuardRingViolation {
    pub u: String,
    pub v: String,
    pub ring: String,
    pub window: ExponentBox,
}

/// Precomputed pairing table for one `r` and one scan window.
pub struct BruteForceOracle {
    window: ExponentBox,
    /// `(a, b) ↦ [(k, c)]`: `Δ_r(x^k y^l)` contains `c · a ⊗ b`.
    index: HashMap<(Monomial, Monomial), Vec<(Monomial, Rational)>>,
}

impl BruteForceOracle {
    pub fn new(r: &RElement, window: ExponentBox) -> Self {
        let scan = window.grow(1).monomials();
        let deltas: Vec<(Monomial, Tensor2)> = scan
            .par_iter()
            .map(|k| {
                let g = Polynomial::monomial(k.i as u32, k.j as u32);
                (*k, cobracket_r(&g, r, &PoissonBracket))
            })
            .collect();
        let mut index: HashMap<(Monomial, Monomial), Vec<(Monomial, Rational)>> = HashMap::new();
        for (k, t) in deltas {
            for (ab, c) in t.iter() {
                index.entry(*ab).or_default().push((k, c.clone()));
            }
        }
        BruteForceOracle { window, index }
    }

    pub fn window(&self) -> ExponentBox {
        self.window
    }

    /// `[u, v]` restricted to the window, after checking the guard ring.
    pub fn bracket(
        &self,
        u: &DualFunctional,
        v: &DualFunctional,
    ) -> Result<DualFunctional, GuardRingViolation> {
        let mut inside = DualFunctional::zero();
        let mut ring = DualFunctional::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                let Some(entries) = self.index.get(&(*a, *b)) else {
                    continue;
                };
                let cab = ca * cb;
                for (k, c) in entries {
                    let target = if self.window.contains(k) {
                        &mut inside
                    } else {
                        &mut ring
                    };
                    target.add_term(*k, &cab * c);
                }
            }
        }
        if ring.is_zero() {
            Ok(inside)
        } else {
            Err(GuardRingViolation {
                u: u.to_string(),
                v: v.to_string(),
                ring: ring.to_string(),
                window: self.window,
            })
        }
    }

    pub fn bracket_basis(
        &self,
        a: Monomial,
        b: Monomial,
    ) -> Result<DualFunctional, GuardRingViolation> {
        self.bracket(
            &DualFunctional::basis(a.i, a.j),
            &DualFunctional::basis(b.i, b.j),
        )
    }
}

/// `Σ_{(k,l) ∈ window} ⟨u ⊗ v, Δ_r(x^k y^l)⟩ φ^k ε^l`, with the guard ring
/// checked.
pub fn dual_bracket_bruteforce(
    u: &DualFunctional,
    v: &DualFunctional,
    r: &RElement,
    window: ExponentBox,
) -> Result<DualFunctional, GuardRingViolation> {
    BruteForceOracle::new(r, window).bracket(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn t42_r(m: u32, n: u32) -> RElement {
        RElement::new(Polynomial::monomial(m, n), Polynomial::monomial(1, 1))
    }

    #[test]
    fn t42_example() {
        let r = t42_r(2, 0);
        let u = DualFunctional::basis(1, 1);
        let v = DualFunctional::basis(3, 0);
        let w = ExponentBox::for_bracket(&u, &v, &r);
        assert_eq!(w, ExponentBox::new(3 + 6, 1 + 6));
        let got = dual_bracket_bruteforce(&u, &v, &r, w).unwrap();
        assert_eq!(got, DualFunctional::term(2, 1, int(2)));
    }

    #[test]
    fn bracket_with_itself_vanishes() {
        let r = t42_r(3, 1);
        let u = &DualFunctional::basis(1, 1) + &DualFunctional::term(2, 3, int(-4));
        let w = ExponentBox::for_bracket(&u, &u, &r);
        assert!(dual_bracket_bruteforce(&u, &u, &r, w).unwrap().is_zero());
    }

    #[test]
    fn guard_ring_catches_small_window() {
        // [φε, φ³] = 2φ²ε lies in [0,2]×[0,1]; a window [0,1]×[0,1] puts it on the ring
        let r = t42_r(2, 0);
        let err = dual_bracket_bruteforce(
            &DualFunctional::basis(1, 1),
            &DualFunctional::basis(3, 0),
            &r,
            ExponentBox::new(1, 1),
        )
        .unwrap_err();
        assert_eq!(err.ring, "2*phi^2*eps");
    }

    #[test]
    fn t46_vanishing_pair() {
        let a = Polynomial::from_int_terms(&[(1, 0, 2), (1, 1, 3), (1, 2, 1)]);
        let b =
            Polynomial::from_int_terms(&[(2, 0, 2), (2, 1, 7), (2, 2, 9), (2, 3, 5), (2, 4, 1)]);
        let r = RElement::new(a, b);
        let u = DualFunctional::basis(3, 1);
        let v = DualFunctional::basis(4, 2);
        let w = ExponentBox::for_bracket(&u, &v, &r);
        assert!(dual_bracket_bruteforce(&u, &v, &r, w).unwrap().is_zero());
    }
}
