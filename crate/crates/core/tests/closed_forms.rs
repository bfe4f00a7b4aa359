use poisson_bialg::closedforms::{
    thm42_bracket, thm43_bracket, thm45_bracket, thm46_bracket, verify_theorem, ParamError,
    T42Params, T43Params, T45Params, T46Params, TheoremParams,
};
use poisson_bialg::dual::{BruteForceOracle, DualFunctional, ExponentBox};
use poisson_bialg::monomial::Monomial;
use poisson_bialg::rational::int;

fn b(i: i64, j: i64) -> Monomial {
    Monomial::new(i, j)
}

fn term(c: i64, i: i64, j: i64) -> DualFunctional {
    DualFunctional::term(i, j, int(c))
}

/// Oracle value of `[u, v]` for the `r` of `p`.
fn oracle(p: &TheoremParams, u: Monomial, v: Monomial) -> DualFunctional {
    let r = p.r_element();
    let (du, dv) = (
        DualFunctional::basis(u.i, u.j),
        DualFunctional::basis(v.i, v.j),
    );
    BruteForceOracle::new(&r, ExponentBox::for_bracket(&du, &dv, &r))
        .bracket(&du, &dv)
        .unwrap()
}

#[test]
fn t42_values_match_oracle() {
    let p = T42Params::new(2, 0).unwrap();
    let tp = TheoremParams::T42(p);
    for (u, v, want) in [
        (b(1, 1), b(3, 0), term(2, 2, 1)),
        (b(2, 0), b(3, 1), term(2, 3, 1)),
        (b(3, 2), b(4, 5), DualFunctional::zero()),
    ] {
        assert_eq!(thm42_bracket(&p, u, v), want);
        assert_eq!(oracle(&tp, u, v), want);
    }
}

#[test]
fn t43_values_match_oracle() {
    let p = T43Params::from_ints(1, &[0, 1]).unwrap();
    assert_eq!(thm43_bracket(&p, b(1, 1), b(3, 1)), term(6, 3, 0));
    assert_eq!(
        oracle(&TheoremParams::T43(p), b(1, 1), b(3, 1)),
        term(6, 3, 0)
    );
    let p = T43Params::from_ints(0, &[0, 0, 1]).unwrap();
    assert_eq!(thm43_bracket(&p, b(1, 1), b(4, 1)), term(6, 3, 0));
    assert_eq!(
        oracle(&TheoremParams::T43(p), b(1, 1), b(4, 1)),
        term(6, 3, 0)
    );
}

#[test]
fn t43_two_diagonal_functionals() {
    // [φ^p ε^p, φ^s ε^s] is reachable from two rows when m = 0; both give 0
    for coeffs in [[1, 2, 3], [2, -1, 1]] {
        let p = T43Params::from_ints(0, &coeffs).unwrap();
        let tp = TheoremParams::T43(p.clone());
        for (x, y) in [(0, 2), (2, 3), (0, 3), (4, 2)] {
            let closed = thm43_bracket(&p, b(x, x), b(y, y));
            assert!(closed.is_zero());
            assert_eq!(oracle(&tp, b(x, x), b(y, y)), closed);
        }
    }
}

#[test]
fn t45_off_support_pair() {
    // with S = {(2,1)} the point (3,3) is off the line and (2,1) is κ itself
    let p = T45Params::from_ints(2, 1, &[(2, 1, 1)]).unwrap();
    assert!(thm45_bracket(&p, b(3, 3), b(2, 1)).is_zero());
    assert!(oracle(&TheoremParams::T45(p), b(3, 3), b(2, 1)).is_zero());
    // adding (4,2) to S exercises the (p,q) ∉ S, (s,t) ∈ S row
    let p = T45Params::from_ints(2, 1, &[(2, 1, 1), (4, 2, 1)]).unwrap();
    assert_eq!(thm45_bracket(&p, b(3, 3), b(4, 2)), term(-4, 2, 3));
    assert_eq!(
        oracle(&TheoremParams::T45(p), b(3, 3), b(4, 2)),
        term(-4, 2, 3)
    );
}

#[test]
fn t45_rejects_degenerate_line() {
    assert_eq!(
        T45Params::from_ints(0, 0, &[(1, 1, 1)]),
        Err(ParamError::DegenerateLine)
    );
}

#[test]
fn t46_values_match_oracle() {
    let p = T46Params::default();
    let tp = TheoremParams::T46(p);
    for (u, v, want) in [
        (b(2, 0), b(3, 0), &term(-18, 3, 0) + &term(4, 3, 1)),
        (b(1, 5), b(4, 0), DualFunctional::zero()),
        (b(3, 1), b(4, 2), DualFunctional::zero()),
    ] {
        assert_eq!(thm46_bracket(&p, u, v), want);
        assert_eq!(oracle(&tp, u, v), want);
    }
}

/// Dispatch of the six rows with the top term of the five-term block
/// carrying `sign · 4(t+1)`.
fn t46_with_top_sign(sign: i64, u: Monomial, v: Monomial) -> DualFunctional {
    let c = |j: i64| {
        if (0..3).contains(&j) {
            [2, 3, 1][j as usize]
        } else {
            0
        }
    };
    let k = |t: i64| {
        if (0..5).contains(&t) {
            [2, 7, 9, 5, 1][t as usize]
        } else {
            0
        }
    };
    let d = |s: i64, t: i64| {
        term(4 * s - 2 * t + 2, s - 1, t - 3)
            + term(15 * s - 10 * t + 5, s - 1, t - 2)
            + term(18 * (s - t), s - 1, t - 1)
            + term(7 * s - 14 * t - 7, s - 1, t)
            + term(sign * 4 * (t + 1), s - 1, t + 1)
    };
    let cb = |i: i64, j: i64| {
        term(2 * i - j + 1, i, j - 1) + term(3 * (i - j), i, j) + term(-2 * (j + 1), i, j + 1)
    };
    let sc = |x: i64, f: DualFunctional| f.scale(&int(x));
    let rows = |u: Monomial, v: Monomial| {
        let (i, j, s, t) = (u.i, u.j, v.i, v.j);
        match (i, s) {
            (1, 1) => Some(sc(c(j), d(1, t)) - sc(c(t), d(1, j))),
            (1, 2) => Some(sc(k(t), cb(1, j)) + sc(c(j), d(2, t))),
            (1, _) => Some(sc(c(j), d(s, t))),
            (2, 2) => Some(sc(k(t), cb(2, j)) - sc(k(j), cb(2, t))),
            (2, 1) => None,
            (2, _) => Some(sc(-k(j), cb(s, t))),
            _ => None,
        }
    };
    if u == v {
        return DualFunctional::zero();
    }
    rows(u, v)
        .or_else(|| rows(v, u).map(|x| -x))
        .unwrap_or_default()
}

#[test]
fn t46_top_term_sign_is_negative() {
    let p = T46Params::default();
    let tp = TheoremParams::T46(p);
    let r = tp.r_element();
    let window = ExponentBox::square(8);
    let oracle = BruteForceOracle::new(&r, window.grow(ExponentBox::margin(&r)));
    let mut plus_bad = 0;
    for u in window.monomials() {
        for v in window.monomials() {
            let truth = oracle.bracket_basis(u, v).unwrap();
            assert_eq!(t46_with_top_sign(-1, u, v), truth);
            assert_eq!(thm46_bracket(&p, u, v), truth);
            if t46_with_top_sign(1, u, v) != truth {
                plus_bad += 1;
            }
        }
    }
    assert_eq!(plus_bad, 420);
}

#[test]
fn default_window_reports_pass() {
    let rep = verify_theorem(&TheoremParams::T42(T42Params::new(2, 3).unwrap()), 8).unwrap();
    assert!(rep.passed());
    assert!(rep.counterexamples.is_empty());
    assert_eq!(rep.window, [8, 8]);
}
