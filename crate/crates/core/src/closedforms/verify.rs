//! Cross-checks a closed-form bracket against the brute-force oracle, and
//! checks skew-symmetry and the Jacobi identity of the closed form itself.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::TheoremParams;
use crate::coboundary::RElement;
use crate::dual::{BruteForceOracle, DualFunctional, ExponentBox, GuardRingViolation};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Basis pairs are drawn from `[0, window]²`.
    pub window: i64,
    /// Jacobi triples are drawn from `[0, jacobi_window]²`.
    pub jacobi_window: i64,
    /// Zero out `elapsed_ms` so repeated runs serialize identically.
    pub no_timing: bool,
}

impl VerifyOptions {
    pub fn new(window: i64) -> Self {
        VerifyOptions {
            window,
            jacobi_window: window,
            no_timing: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Closed form disagrees with the oracle on `[u, v]`.
    Oracle,
    /// `[u, v] ≠ −[v, u]`; `oracle` holds `−[v, u]`.
    Skew,
    /// Jacobiator of `(u, v, w)` is nonzero; `oracle` holds `0`.
    Jacobi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub kind: CheckKind,
    pub u: [i64; 2],
    pub v: [i64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<[i64; 2]>,
    pub closed: String,
    pub oracle: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: serde_json::Value,
    pub window: [i64; 2],
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// Lists at most this many counterexamples in the text rendering.
const TEXT_LIMIT: usize = 20;

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        let rows = [
            ("theorem", self.theorem.clone()),
            ("params", self.params.to_string()),
            ("window", format!("{}x{}", self.window[0], self.window[1])),
            ("status", status.to_string()),
            ("pairs", self.pairs_checked.to_string()),
            ("triples", self.triples_checked.to_string()),
            ("counterexamples", self.counterexamples.len().to_string()),
            ("elapsed_ms", self.elapsed_ms.to_string()),
        ];
        for (k, v) in rows {
            writeln!(f, "{k:<16} {v}")?;
        }
        for c in self.counterexamples.iter().take(TEXT_LIMIT) {
            let kind = match c.kind {
                CheckKind::Oracle => "oracle",
                CheckKind::Skew => "skew",
                CheckKind::Jacobi => "jacobi",
            };
            let w =
                c.w.map_or(String::new(), |w| format!(" w=({},{})", w[0], w[1]));
            writeln!(
                f,
                "  {kind:<7} u=({},{}) v=({},{}){w}  closed: {}  expected: {}",
                c.u[0], c.u[1], c.v[0], c.v[1], c.closed, c.oracle
            )?;
        }
        if self.counterexamples.len() > TEXT_LIMIT {
            writeln!(f, "  ... {} more", self.counterexamples.len() - TEXT_LIMIT)?;
        }
        Ok(())
    }
}

/// Full check of `p` on a square window of side `window`.
pub fn verify_theorem(
    p: &TheoremParams,
    window: i64,
) -> Result<VerificationReport, GuardRingViolation> {
    verify_theorem_with(p, &VerifyOptions::new(window))
}

pub fn verify_theorem_with(
    p: &TheoremParams,
    opts: &VerifyOptions,
) -> Result<VerificationReport, GuardRingViolation> {
    verify_against(p, &p.r_element(), opts)
}

/// Checks the closed form of `closed` against the oracle built from `r`.
/// With `r = closed.r_element()` this is [`verify_theorem_with`]; a
/// different `r` gives a mutation control.
pub fn verify_against(
    closed: &TheoremParams,
    r: &RElement,
    opts: &VerifyOptions,
) -> Result<VerificationReport, GuardRingViolation> {
    let start = Instant::now();
    let window = ExponentBox::square(opts.window);
    let basis = window.monomials();
    let oracle = BruteForceOracle::new(r, window.grow(ExponentBox::margin(r)));

    let per_u: Vec<Result<Vec<Counterexample>, GuardRingViolation>> = basis
        .par_iter()
        .map(|&u| {
            let mut bad = Vec::new();
            for &v in &basis {
                let c = closed.bracket(u, v);
                let o = oracle.bracket_basis(u, v)?;
                if c != o {
                    bad.push(counterexample(CheckKind::Oracle, u, v, None, &c, &o));
                }
            }
            Ok(bad)
        })
        .collect();
    let mut counterexamples = Vec::new();
    for r in per_u {
        counterexamples.extend(r?);
    }
    counterexamples.extend(skew_sweep(closed, &basis));
    let (jacobi_bad, triples_checked) = jacobi_sweep(closed, opts.jacobi_window);
    counterexamples.extend(jacobi_bad);

    let elapsed_ms = if opts.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    Ok(VerificationReport {
        theorem: closed.id().name().to_string(),
        params: closed.to_json(),
        window: [opts.window, opts.window],
        status: if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        counterexamples,
        pairs_checked: basis.len() * basis.len(),
        triples_checked,
        elapsed_ms,
    })
}

/// Skew-symmetry and the Jacobi identity of the closed form alone, on a
/// square window of side `side`; no oracle is consulted.
pub fn verify_lie_axioms(p: &TheoremParams, side: i64, no_timing: bool) -> VerificationReport {
    let start = Instant::now();
    let basis = ExponentBox::square(side).monomials();
    let mut counterexamples = skew_sweep(p, &basis);
    let (jacobi_bad, triples_checked) = jacobi_sweep(p, side);
    counterexamples.extend(jacobi_bad);
    VerificationReport {
        theorem: p.id().name().to_string(),
        params: p.to_json(),
        window: [side, side],
        status: if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        counterexamples,
        pairs_checked: basis.len() * basis.len(),
        triples_checked,
        elapsed_ms: if no_timing {
            0
        } else {
            start.elapsed().as_millis() as u64
        },
    }
}

/// `[u, v] = −[v, u]` on every ordered pair of `basis`.
fn skew_sweep(p: &TheoremParams, basis: &[Monomial]) -> Vec<Counterexample> {
    basis
        .par_iter()
        .flat_map_iter(|&u| {
            basis.iter().filter_map(move |&v| {
                let c = p.bracket(u, v);
                let back = -p.bracket(v, u);
                (c != back).then(|| counterexample(CheckKind::Skew, u, v, None, &c, &back))
            })
        })
        .collect()
}

fn counterexample(
    kind: CheckKind,
    u: Monomial,
    v: Monomial,
    w: Option<Monomial>,
    closed: &DualFunctional,
    expected: &DualFunctional,
) -> Counterexample {
    Counterexample {
        kind,
        u: [u.i, u.j],
        v: [v.i, v.j],
        w: w.map(|w| [w.i, w.j]),
        closed: closed.to_string(),
        oracle: expected.to_string(),
    }
}

/// Jacobi identity on strictly increasing triples `u < v < w` of the
/// window. Skew-symmetry (checked pairwise) makes the Jacobiator
/// alternating, so this covers every triple; a triple with a repeated
/// entry has zero Jacobiator once skew-symmetry holds.
fn jacobi_sweep(p: &TheoremParams, side: i64) -> (Vec<Counterexample>, usize) {
    let basis = ExponentBox::square(side).monomials();
    // inner brackets land at most one step outside the window
    let targets = ExponentBox::square(side + 2).monomials();
    let table: HashMap<(Monomial, Monomial), DualFunctional> = basis
        .par_iter()
        .flat_map_iter(|&a| targets.iter().map(move |&b| ((a, b), p.bracket(a, b))))
        .collect();
    let act = |a: Monomial, x: &DualFunctional| {
        let mut out = DualFunctional::zero();
        for (b, c) in x.iter() {
            match table.get(&(a, *b)) {
                Some(y) => out.add_scaled(y, c),
                None => out.add_scaled(&p.bracket(a, *b), c),
            }
        }
        out
    };
    let bracket = |a: Monomial, b: Monomial| {
        table
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| p.bracket(a, b))
    };

    let n = basis.len();
    let per_u: Vec<(Vec<Counterexample>, usize)> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut bad = Vec::new();
            let mut count = 0;
            let u = basis[x];
            for y in x + 1..n {
                let v = basis[y];
                let uv = bracket(u, v);
                for &w in &basis[y + 1..] {
                    count += 1;
                    let j = act(u, &bracket(v, w)) + act(v, &bracket(w, u)) + act(w, &uv);
                    if !j.is_zero() {
                        bad.push(counterexample(
                            CheckKind::Jacobi,
                            u,
                            v,
                            Some(w),
                            &j,
                            &DualFunctional::zero(),
                        ));
                    }
                }
            }
            (bad, count)
        })
        .collect();
    let mut all = Vec::new();
    let mut total = 0;
    for (b, c) in per_u {
        all.extend(b);
        total += c;
    }
    (all, total)
}
