use proptest::prelude::*;

use poisson_bialg::bracket::{
    derivation_bracket, jacobi_defect, leibniz_defect, poisson_bracket, virasoro_like_bracket,
    PoissonBracket,
};
use poisson_bialg::closedforms::{T42Params, T43Params, T45Params, T46Params, TheoremParams};
use poisson_bialg::dual::{mu_circ, pairing, pairing2, partial_circ, Axis, DualFunctional};
use poisson_bialg::lincomb::{LinComb, Tensor2};
use poisson_bialg::monomial::Monomial;
use poisson_bialg::poly::{partial, DerivationSpec, Polynomial};
use poisson_bialg::rational::{int, Rational};

fn small_poly(max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, -4i64..=4), 0..5)
        .prop_map(|ts| Polynomial::from_int_terms(&ts))
}

fn small_functional(max_exp: i64) -> impl Strategy<Value = DualFunctional> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, -4i64..=4), 0..4).prop_map(|ts| {
        DualFunctional::from_terms(
            ts.into_iter()
                .map(|(i, j, c)| (Monomial::new(i, j), int(c))),
        )
    })
}

fn scalar() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn theorem() -> impl Strategy<Value = TheoremParams> {
    prop_oneof![
        (0u32..=4, 0u32..=4)
            .prop_filter("excluded", |mn| *mn != (1, 1))
            .prop_map(|(m, n)| TheoremParams::T42(T42Params::new(m, n).unwrap())),
        (
            0u32..=3,
            prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 2, 3]), 1..=4)
        )
            .prop_map(|(m, a)| TheoremParams::T43(T43Params::from_ints(m, &a).unwrap())),
        Just(TheoremParams::T45(
            T45Params::from_ints(2, 1, &[(2, 1, 1), (4, 2, -3)]).unwrap()
        )),
        Just(TheoremParams::T46(T46Params::default())),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poisson_bracket_is_bilinear(f in small_poly(4), g in small_poly(4), h in small_poly(4), c in scalar()) {
        let lhs = poisson_bracket(&(&f.scale(&c) + &g), &h);
        let rhs = &poisson_bracket(&f, &h).scale(&c) + &poisson_bracket(&g, &h);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poisson_bracket_is_skew(f in small_poly(5), g in small_poly(5)) {
        prop_assert_eq!(poisson_bracket(&f, &g), -poisson_bracket(&g, &f));
    }

    #[test]
    fn poisson_jacobi_and_leibniz(f in small_poly(3), g in small_poly(3), h in small_poly(3)) {
        prop_assert!(jacobi_defect(&f, &g, &h, &PoissonBracket).is_zero());
        prop_assert!(leibniz_defect(&f, &g, &h, &PoissonBracket).is_zero());
    }

    #[test]
    fn mu_circ_is_adjoint_to_product(u in small_functional(6), f in small_poly(3), g in small_poly(3)) {
        let fg = Tensor2::from_iter(
            f.iter().flat_map(|(a, ca)| g.iter().map(move |(b, cb)| ((*a, *b), ca * cb))),
        );
        prop_assert_eq!(pairing2(&mu_circ(&u), &fg), pairing(&u, &(&f * &g)));
    }

    #[test]
    fn partial_circ_is_adjoint_to_partial(u in small_functional(6), f in small_poly(6)) {
        prop_assert_eq!(pairing(&partial_circ(Axis::X, &u), &f), pairing(&u, &partial(&f, DerivationSpec::Dx)));
        prop_assert_eq!(pairing(&partial_circ(Axis::Y, &u), &f), pairing(&u, &partial(&f, DerivationSpec::Dy)));
    }

    #[test]
    fn mu_circ_is_coassociative(u in small_functional(5)) {
        let mu = mu_circ(&u);
        let mut left: LinComb<(Monomial, Monomial, Monomial)> = LinComb::zero();
        let mut right: LinComb<(Monomial, Monomial, Monomial)> = LinComb::zero();
        for ((a, b), c) in mu.iter() {
            for ((p, q), k) in mu_circ(&DualFunctional::basis(a.i, a.j)).iter() {
                left.add_term((*p, *q, *b), c * k);
            }
            for ((p, q), k) in mu_circ(&DualFunctional::basis(b.i, b.j)).iter() {
                right.add_term((*a, *p, *q), c * k);
            }
        }
        prop_assert_eq!(left, right);
    }

    #[test]
    fn closed_brackets_are_bilinear_and_skew(p in theorem(), u in small_functional(5), v in small_functional(5), w in small_functional(5), c in scalar()) {
        let lhs = p.bracket_lin(&(&u.scale(&c) + &v), &w);
        let rhs = &p.bracket_lin(&u, &w).scale(&c) + &p.bracket_lin(&v, &w);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(p.bracket_lin(&u, &v), -p.bracket_lin(&v, &u));
    }

    #[test]
    fn closed_brackets_satisfy_jacobi(p in theorem(), u in small_functional(4), v in small_functional(4), w in small_functional(4)) {
        let j = &(&p.bracket_lin(&u, &p.bracket_lin(&v, &w)) + &p.bracket_lin(&v, &p.bracket_lin(&w, &u)))
            + &p.bracket_lin(&w, &p.bracket_lin(&u, &v));
        prop_assert!(j.is_zero());
    }
}

#[test]
fn jacobi_and_leibniz_sweep_low_degree() {
    let monos: Vec<Polynomial> = (0..=3u32)
        .flat_map(|i| (0..=3u32).map(move |j| Polynomial::monomial(i, j)))
        .collect();
    for f in &monos {
        for g in &monos {
            for h in &monos {
                assert!(jacobi_defect(f, g, h, &PoissonBracket).is_zero());
                assert!(leibniz_defect(f, g, h, &PoissonBracket).is_zero());
            }
        }
    }
}

#[test]
fn virasoro_like_agrees_with_euler_derivation_pair() {
    for a1 in -5..=5 {
        for a2 in -5..=5 {
            for b1 in -5..=5 {
                for b2 in -5..=5 {
                    let f = Polynomial::laurent_monomial(a1, a2);
                    let g = Polynomial::laurent_monomial(b1, b2);
                    let got = derivation_bracket(&f, &g, DerivationSpec::XDx, DerivationSpec::YDy);
                    let (c, (i, j)) = virasoro_like_bracket((a1, a2), (b1, b2));
                    assert_eq!(got.coeff(i, j), c);
                    assert!(got.len() <= 1);
                }
            }
        }
    }
}
