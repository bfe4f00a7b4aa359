//! Closed-form dual brackets for the four coboundary families on `F[x,y]`
//! and the harness that checks them against the brute-force oracle.
//!
//! Each family fixes `r = A ⊗ B − B ⊗ A`:
//!
//! | id  | A                  | B                                  |
//! |-----|--------------------|------------------------------------|
//! | T42 | `x^m y^n`          | `xy`                               |
//! | T43 | `xy`               | `Σ a_i x^i y^{i+m}`                |
//! | T45 | `x^k y^l`          | `Σ_{(i,j)∈S} a_ij x^i y^j`, `kj = li` |
//! | T46 | `x(1+y)(2+y)`      | `x²(1+y)³(2+y)`                    |
//!
//! The formulas give `[φ^i ε^j, φ^s ε^t]` for one argument pattern; every
//! other order is resolved by skew-symmetry, and exponents that go negative
//! drop the term.

mod t42;
mod t43;
mod t45;
mod t46;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::json;

use crate::coboundary::RElement;
use crate::dual::DualFunctional;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::Rational;

pub use t42::{thm42_bracket, T42Params};
pub use t43::{thm43_bracket, T43Params};
pub use t45::{thm45_bracket, T45Params};
pub use t46::{thm46_bracket, T46Params};
pub use verify::{
    verify_against, verify_lie_axioms, verify_theorem, verify_theorem_with, CheckKind,
    Counterexample, Status, VerificationReport, VerifyOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T42,
    T43,
    T45,
    T46,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] = [
        TheoremId::T42,
        TheoremId::T43,
        TheoremId::T45,
        TheoremId::T46,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::T42 => "t42",
            TheoremId::T43 => "t43",
            TheoremId::T45 => "t45",
            TheoremId::T46 => "t46",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem `{s}` (expected t42, t43, t45 or t46)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("(m, n) = (1, 1) is excluded: r would vanish")]
    T42Excluded,
    #[error("coefficient list is empty")]
    EmptyCoefficients,
    #[error("leading coefficient a_n must be nonzero")]
    LeadingZero,
    #[error("support point ({i}, {j}) violates kj - li = 0 (value {value})")]
    OffLine { i: i64, j: i64, value: i64 },
    #[error("(k, l) = (0, 0) makes A constant; the support condition no longer pins S to a line")]
    DegenerateLine,
    #[error("support point ({i}, {j}) has zero coefficient")]
    ZeroCoefficient { i: i64, j: i64 },
    #[error("support point ({i}, {j}) has a negative exponent")]
    NegativeSupport { i: i64, j: i64 },
}

/// Validated parameters of one theorem instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremParams {
    T42(T42Params),
    T43(T43Params),
    T45(T45Params),
    T46(T46Params),
}

impl TheoremParams {
    pub fn id(&self) -> TheoremId {
        match self {
            TheoremParams::T42(_) => TheoremId::T42,
            TheoremParams::T43(_) => TheoremId::T43,
            TheoremParams::T45(_) => TheoremId::T45,
            TheoremParams::T46(_) => TheoremId::T46,
        }
    }

    /// The `r` whose dual bracket the closed form describes.
    pub fn r_element(&self) -> RElement {
        match self {
            TheoremParams::T42(p) => p.r_element(),
            TheoremParams::T43(p) => p.r_element(),
            TheoremParams::T45(p) => p.r_element(),
            TheoremParams::T46(p) => p.r_element(),
        }
    }

    /// Closed-form bracket of two basis functionals.
    pub fn bracket(&self, u: Monomial, v: Monomial) -> DualFunctional {
        match self {
            TheoremParams::T42(p) => thm42_bracket(p, u, v),
            TheoremParams::T43(p) => thm43_bracket(p, u, v),
            TheoremParams::T45(p) => thm45_bracket(p, u, v),
            TheoremParams::T46(p) => thm46_bracket(p, u, v),
        }
    }

    /// Closed-form bracket extended bilinearly.
    pub fn bracket_lin(&self, u: &DualFunctional, v: &DualFunctional) -> DualFunctional {
        let mut out = DualFunctional::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.bracket(*a, *b), &(ca * cb));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            TheoremParams::T42(p) => json!({ "m": p.m(), "n": p.n() }),
            TheoremParams::T43(p) => json!({
                "m": p.m(),
                "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }),
            TheoremParams::T45(p) => json!({
                "k": p.k(),
                "l": p.l(),
                "support": p
                    .support()
                    .iter()
                    .map(|(m, c)| json!({ "i": m.i, "j": m.j, "a": c.to_string() }))
                    .collect::<Vec<_>>(),
            }),
            TheoremParams::T46(p) => json!({ "c": p.c(), "k": p.k() }),
        }
    }
}

impl fmt::Display for TheoremParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremParams::T42(p) => write!(f, "m={} n={}", p.m(), p.n()),
            TheoremParams::T43(p) => {
                let cs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                write!(f, "m={} coeffs={}", p.m(), cs.join(","))
            }
            TheoremParams::T45(p) => {
                let s: Vec<String> = p
                    .support()
                    .iter()
                    .map(|(m, c)| format!("({},{}):{}", m.i, m.j, c))
                    .collect();
                write!(f, "k={} l={} support={}", p.k(), p.l(), s.join(","))
            }
            TheoremParams::T46(p) => write!(f, "c={:?} k={:?}", p.c(), p.k()),
        }
    }
}

/// Resolves argument order by skew-symmetry: tries `rows(u, v)`, then
/// `−rows(v, u)`, else zero. `[u, u] = 0` always.
pub(crate) fn skew_dispatch(
    u: Monomial,
    v: Monomial,
    rows: impl Fn(Monomial, Monomial) -> Option<DualFunctional>,
) -> DualFunctional {
    if u == v {
        return DualFunctional::zero();
    }
    if let Some(x) = rows(u, v) {
        return x;
    }
    if let Some(x) = rows(v, u) {
        return -x;
    }
    DualFunctional::zero()
}

/// Shorthand for `c φ^i ε^j` with integer `c`.
pub(crate) fn mono(c: i64, i: i64, j: i64) -> DualFunctional {
    DualFunctional::term(i, j, crate::rational::int(c))
}

/// `r` for `A = x^k y^l`, `B = Σ a_ij x^i y^j` with `kj − li = 0` on the
/// support; such an `r` solves the classical Yang–Baxter equation.
pub fn prop44_r_family(
    k: u32,
    l: u32,
    support: &[(Monomial, Rational)],
) -> Result<RElement, ParamError> {
    let b = line_support(k, l, support)?;
    Ok(RElement::new(Polynomial::monomial(k, l), b))
}

/// `r` for `A = xy`, `B = Σ a_i x^i y^{c+i}`.
pub fn xy_shift_r_family(shift: u32, coeffs: &[Rational]) -> RElement {
    let b = Polynomial::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| (Monomial::new(i as i64, i as i64 + shift as i64), a.clone())),
        false,
    )
    .expect("nonnegative exponents");
    RElement::new(Polynomial::monomial(1, 1), b)
}

fn line_support(
    k: u32,
    l: u32,
    support: &[(Monomial, Rational)],
) -> Result<Polynomial, ParamError> {
    let (k, l) = (k as i64, l as i64);
    let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for (m, c) in support {
        if !m.is_nonnegative() {
            return Err(ParamError::NegativeSupport { i: m.i, j: m.j });
        }
        if c.is_zero() {
            return Err(ParamError::ZeroCoefficient { i: m.i, j: m.j });
        }
        let value = k * m.j - l * m.i;
        if value != 0 {
            return Err(ParamError::OffLine {
                i: m.i,
                j: m.j,
                value,
            });
        }
        *map.entry(*m).or_insert_with(Rational::zero) += c;
    }
    Ok(Polynomial::from_terms(map, false).expect("checked nonnegative"))
}
