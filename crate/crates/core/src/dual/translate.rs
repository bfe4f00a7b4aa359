//! Translate spaces of functionals and exact rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bracket::poisson_bracket;
use crate::dual::functional::{pairing, DualFunctional};
use crate::dual::oracle::ExponentBox;
use crate::poly::{poly_mul, Polynomial};
use crate::rational::Rational;

/// How the algebra acts on functionals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslateAction {
    /// `(f · a)(b) = f(ab)`
    Product,
    /// `(f ⋆ a)(b) = f([a, b])`
    Poisson,
}

/// Dimension of `span { f · x^i y^j : (i, j) ∈ window }`.
pub fn translate_space_dim(
    u: &DualFunctional,
    action: TranslateAction,
    window: ExponentBox,
) -> usize {
    let (pi, pj) = u.support_bound();
    if pi < 0 {
        return 0;
    }
    // every translate is supported in this box
    let columns = ExponentBox::new(pi + 1, pj + 1).monomials();
    let rows: Vec<Vec<Rational>> = window
        .monomials()
        .iter()
        .map(|a| {
            let a = Polynomial::monomial(a.i as u32, a.j as u32);
            columns
                .iter()
                .map(|b| {
                    let b = Polynomial::monomial(b.i as u32, b.j as u32);
                    let ab = match action {
                        TranslateAction::Product => poly_mul(&a, &b),
                        TranslateAction::Poisson => poisson_bracket(&a, &b),
                    };
                    pairing(u, &ab)
                })
                .collect()
        })
        .collect();
    exact_rank(&rows)
}

/// Rank over `Q` by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators.
pub fn exact_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn rank_basics() {
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), ratio(1, 2), int(1)],
        ];
        assert_eq!(exact_rank(&rows), 2);
        assert_eq!(exact_rank(&[vec![int(0), int(0)]]), 0);
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(exact_rank(&id), 4);
    }

    #[test]
    fn product_translates() {
        for (m, n) in [(0, 0), (2, 1), (3, 3)] {
            let u = DualFunctional::basis(m, n);
            let w = ExponentBox::square(5);
            assert_eq!(
                translate_space_dim(&u, TranslateAction::Product, w),
                ((m + 1) * (n + 1)) as usize
            );
        }
    }

    #[test]
    fn counit_has_one_dimensional_translates() {
        let u = DualFunctional::basis(0, 0);
        assert_eq!(
            translate_space_dim(&u, TranslateAction::Product, ExponentBox::square(4)),
            1
        );
    }

    #[test]
    fn poisson_translates_stabilize() {
        let u = DualFunctional::basis(2, 3);
        let a = translate_space_dim(&u, TranslateAction::Poisson, ExponentBox::square(4));
        let b = translate_space_dim(&u, TranslateAction::Poisson, ExponentBox::square(7));
        assert_eq!(a, b);
        assert!(a > 0);
    }
}
