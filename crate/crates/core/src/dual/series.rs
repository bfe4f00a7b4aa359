//! One-variable coefficient sequences: truncated power series of rational
//! functions and linear recurrences.

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("{0} is not a polynomial in one variable")]
    NotUnivariate(Polynomial),
}

/// Truncated coefficient sequence `f_0, …, f_N` (never empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSequence(Vec<Rational>);

impl CoeffSequence {
    pub fn new(values: Vec<Rational>) -> Option<Self> {
        (!values.is_empty()).then_some(CoeffSequence(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Coefficients `c_0..=c_d` of a polynomial in `x` alone.
fn univariate(p: &Polynomial) -> Result<Vec<Rational>, SeriesError> {
    if p.iter().any(|(m, _)| m.j != 0 || m.i < 0) {
        return Err(SeriesError::NotUnivariate(p.clone()));
    }
    let deg = p.iter().map(|(m, _)| m.i).max().unwrap_or(0);
    Ok((0..=deg).map(|i| p.coeff(i, 0)).collect())
}

/// First `n + 1` coefficients of `g / h` by exact long division.
pub fn rational_series_coeffs(
    g: &Polynomial,
    h: &Polynomial,
    n: usize,
) -> Result<CoeffSequence, SeriesError> {
    let g = univariate(g)?;
    let h = univariate(h)?;
    if h[0].is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let h0_inv = h[0].recip();
    let mut f: Vec<Rational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = g.get(k).cloned().unwrap_or_else(Rational::zero);
        for i in 1..h.len().min(k + 1) {
            acc -= &h[i] * &f[k - i];
        }
        f.push(acc * &h0_inv);
    }
    Ok(CoeffSequence(f))
}

/// Whether `f_n = h_1 f_{n−1} + … + h_r f_{n−r}` for every `r < n ≤ N`.
/// Vacuously true when the sequence is too short.
pub fn satisfies_recurrence(seq: &CoeffSequence, h: &[Rational]) -> bool {
    let f = &seq.0;
    let r = h.len();
    (r + 1..f.len()).all(|n| {
        let rhs = h
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, hi)| acc + hi * &f[n - 1 - i]);
        f[n] == rhs
    })
}

/// Recurrence `(h_1, …, h_r)` satisfied by the expansion of `g / h`, with
/// `r = max(deg g, deg h)` so that it holds for all `n > r`.
pub fn recurrence_from_rational(
    g: &Polynomial,
    h: &Polynomial,
) -> Result<Vec<Rational>, SeriesError> {
    let gc = univariate(g)?;
    let hc = univariate(h)?;
    if hc[0].is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let r = (gc.len() - 1).max(hc.len() - 1);
    let h0 = hc[0].clone();
    Ok((1..=r)
        .map(|i| hc.get(i).map_or_else(Rational::zero, |c| -(c / &h0)))
        .collect())
}

/// Sequence of length `len` from initial values and a recurrence.
pub fn generate_recurrence(initial: &[Rational], h: &[Rational], len: usize) -> CoeffSequence {
    let mut f: Vec<Rational> = initial.iter().take(len).cloned().collect();
    while f.len() < len {
        let n = f.len();
        let next = h
            .iter()
            .enumerate()
            .filter(|(i, _)| *i < n)
            .fold(Rational::zero(), |acc, (i, hi)| acc + hi * &f[n - 1 - i]);
        f.push(next);
    }
    CoeffSequence::new(f).expect("len > 0")
}

/// `(g, h)` with `g / h` expanding to the sequence generated by `initial`
/// and the recurrence: `h = 1 − Σ h_i φ^i` and `g = h · f mod φ^{len(initial)}`.
pub fn rational_from_recurrence(initial: &[Rational], h: &[Rational]) -> (Polynomial, Polynomial) {
    let denom: Vec<Rational> = std::iter::once(Rational::one())
        .chain(h.iter().map(|c| -c))
        .collect();
    let k = initial.len().max(h.len());
    let f = generate_recurrence(initial, h, k.max(1));
    let mut num = Vec::with_capacity(k);
    for n in 0..initial.len() {
        let mut acc = Rational::zero();
        for (i, d) in denom.iter().enumerate().take(n + 1) {
            acc += d * &f.0[n - i];
        }
        num.push(acc);
    }
    let to_poly = |cs: &[Rational]| {
        Polynomial::from_terms(
            cs.iter()
                .enumerate()
                .map(|(i, c)| (crate::monomial::Monomial::new(i as i64, 0), c.clone())),
            false,
        )
        .expect("nonnegative exponents")
    };
    (to_poly(&num), to_poly(&denom))
}
