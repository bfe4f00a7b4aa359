//! Coboundary Lie bialgebra structure on `F[x,y]`: the adjoint action on
//! tensors, the cobracket `δ(g) = g · r`, the classical Yang–Baxter defect
//! and the cocycle / co-Jacobi checks.
//!
//! `C(r)` is computed directly in `A ⊗ A ⊗ A`, with the standard leg
//! placements `r₁₂ = Σ a ⊗ b ⊗ 1`, `r₁₃ = Σ a ⊗ 1 ⊗ b`, `r₂₃ = Σ 1 ⊗ a ⊗ b`.

use crate::bracket::{poisson_bracket, LieBracket};
use crate::lincomb::{cycle3, swap2, tensor2, LinComb, Tensor2, Tensor3};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// `r = A ⊗ B − B ⊗ A`, kept together with its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RElement {
    a: Polynomial,
    b: Polynomial,
    tensor: Tensor2,
}

impl RElement {
    pub fn new(a: Polynomial, b: Polynomial) -> Self {
        let tensor = &poly_tensor(&a, &b) - &poly_tensor(&b, &a);
        RElement { a, b, tensor }
    }

    /// An element built from an arbitrary tensor, with no generators.
    /// Used for negative controls; `a()` and `b()` are zero.
    pub fn from_tensor(tensor: Tensor2) -> Self {
        RElement {
            a: Polynomial::zero(),
            b: Polynomial::zero(),
            tensor,
        }
    }

    pub fn a(&self) -> &Polynomial {
        &self.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.b
    }

    pub fn tensor(&self) -> &Tensor2 {
        &self.tensor
    }

    pub fn is_antisymmetric(&self) -> bool {
        swap2(&self.tensor) == -&self.tensor
    }
}

pub fn poly_tensor(f: &Polynomial, g: &Polynomial) -> Tensor2 {
    tensor2(f.terms(), g.terms())
}

fn mono_poly(m: &Monomial) -> Polynomial {
    Polynomial::from_lincomb(LinComb::basis(*m), !m.is_nonnegative())
        .expect("laurent flag set for negative exponents")
}

fn mono_bracket(bracket: &impl LieBracket, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
    bracket
        .bracket(&mono_poly(a), &mono_poly(b))
        .terms()
        .clone()
}

/// `x · (y ⊗ z) = [x, y] ⊗ z + y ⊗ [x, z]`, extended linearly over `t`.
pub fn adjoint_action2(x: &Polynomial, t: &Tensor2, bracket: &impl LieBracket) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((a, b), c) in t.iter() {
        let pa = mono_poly(a);
        let pb = mono_poly(b);
        let xa = bracket.bracket(x, &pa);
        let xb = bracket.bracket(x, &pb);
        out.add_scaled(&poly_tensor(&xa, &pb), c);
        out.add_scaled(&poly_tensor(&pa, &xb), c);
    }
    out
}

/// `Δ_r(g) = [g,A] ⊗ B + A ⊗ [g,B] − [g,B] ⊗ A − B ⊗ [g,A]`.
pub fn cobracket_r(g: &Polynomial, r: &RElement, bracket: &impl LieBracket) -> Tensor2 {
    if r.a.is_zero() && r.b.is_zero() {
        return adjoint_action2(g, &r.tensor, bracket);
    }
    let ga = bracket.bracket(g, &r.a);
    let gb = bracket.bracket(g, &r.b);
    let mut out = poly_tensor(&ga, &r.b);
    out += &poly_tensor(&r.a, &gb);
    out -= &poly_tensor(&gb, &r.a);
    out -= &poly_tensor(&r.b, &ga);
    out
}

/// `C(r) = [r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.
pub fn cybe_defect(r: &RElement, bracket: &impl LieBracket) -> Tensor3 {
    let mut out = Tensor3::zero();
    let terms: Vec<_> = r.tensor.iter().collect();
    for ((a, b), c) in &terms {
        for ((a2, b2), c2) in &terms {
            let cc = *c * *c2;
            // [r12, r13] = Σ [a, a'] ⊗ b ⊗ b'
            for (m, k) in mono_bracket(bracket, a, a2).iter() {
                out.add_term((*m, *b, *b2), &cc * k);
            }
            // [r12, r23] = Σ a ⊗ [b, a'] ⊗ b'
            for (m, k) in mono_bracket(bracket, b, a2).iter() {
                out.add_term((*a, *m, *b2), &cc * k);
            }
            // [r13, r23] = Σ a ⊗ a' ⊗ [b, b']
            for (m, k) in mono_bracket(bracket, b, b2).iter() {
                out.add_term((*a, *a2, *m), &cc * k);
            }
        }
    }
    out
}

/// `δ([x, y]) − x · δ(y) + y · δ(x)`.
pub fn cocycle_defect(
    x: &Polynomial,
    y: &Polynomial,
    bracket: &impl LieBracket,
    cobracket: impl Fn(&Polynomial) -> Tensor2,
) -> Tensor2 {
    let mut out = cobracket(&bracket.bracket(x, y));
    out -= &adjoint_action2(x, &cobracket(y), bracket);
    out += &adjoint_action2(y, &cobracket(x), bracket);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cobracket is not antisymmetric on {}", .0.display_with(crate::lincomb::PRIMAL_VARS))]
pub struct NotAntisymmetric(pub LinComb<Monomial>);

/// `(id + ξ + ξ²)((δ ⊗ id) ∘ δ)(f)` with `ξ` the cyclic slot permutation.
pub fn co_jacobi_defect3(
    delta: impl Fn(&Polynomial) -> Tensor2,
    f: &Polynomial,
) -> Result<Tensor3, NotAntisymmetric> {
    co_jacobi_on_basis(|m| delta(&mono_poly(m)), f.terms())
}

/// Co-Jacobi defect for a cobracket given on basis monomials. Checks
/// `swap ∘ δ = −δ` on `f` and on every basis element it is applied to.
pub fn co_jacobi_on_basis(
    delta: impl Fn(&Monomial) -> Tensor2,
    f: &LinComb<Monomial>,
) -> Result<Tensor3, NotAntisymmetric> {
    let check = |t: &Tensor2, at: &LinComb<Monomial>| {
        if swap2(t) == -t {
            Ok(())
        } else {
            Err(NotAntisymmetric(at.clone()))
        }
    };
    let df = f.map_linear(|m| delta(m));
    check(&df, f)?;
    let mut first = Tensor3::zero();
    for ((a, b), c) in df.iter() {
        let da = delta(a);
        check(&da, &LinComb::basis(*a))?;
        for ((p, q), k) in da.iter() {
            first.add_term((*p, *q, *b), c * k);
        }
    }
    let once = cycle3(&first);
    let twice = cycle3(&once);
    Ok(&(&first + &once) + &twice)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JacobiPairError {
    #[error("J(f, g) = {0} is not constant")]
    NotConstant(Polynomial),
    #[error("J(f, g) = 0")]
    Zero,
}

/// A pair with constant nonzero Jacobian gives `r = f ⊗ fg − fg ⊗ f`.
pub fn jacobi_pair_r(f: &Polynomial, g: &Polynomial) -> Result<RElement, JacobiPairError> {
    let j = poisson_bracket(f, g);
    match j.as_constant() {
        None => Err(JacobiPairError::NotConstant(j)),
        Some(c) if num_traits::Zero::is_zero(&c) => Err(JacobiPairError::Zero),
        Some(_) => Ok(RElement::new(f.clone(), f * g)),
    }
}
