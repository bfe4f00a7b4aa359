//! Exact-arithmetic toolkit for the Poisson algebra `F[x,y]` with the
//! Jacobian bracket, its coboundary Lie bialgebra structures, and the dual
//! Lie algebras they induce on finitely supported functionals.

pub mod bracket;
pub mod closedforms;
pub mod coboundary;
pub mod dual;
pub mod lincomb;
pub mod monomial;
pub mod poly;
pub mod rational;

pub use bracket::{poisson_bracket, DerivationBracket, LieBracket, PoissonBracket};
pub use closedforms::{verify_theorem, TheoremId, TheoremParams, VerificationReport};
pub use coboundary::{cobracket_r, cybe_defect, RElement};
pub use dual::{dual_bracket_bruteforce, DualFunctional, ExponentBox};
pub use lincomb::{LinComb, Tensor2, Tensor3};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use rational::Rational;
