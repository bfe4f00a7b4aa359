//! Random admissible parameter sets for `verify --random`.

use rand::seq::SliceRandom;
use rand::Rng;

use poisson_bialg::closedforms::{
    T42Params, T43Params, T45Params, T46Params, TheoremId, TheoremParams,
};
use poisson_bialg::monomial::Monomial;
use poisson_bialg::rational::{int, Rational};

const COEFFS: [i64; 5] = [-2, -1, 1, 2, 3];

pub fn random_params(id: TheoremId, rng: &mut impl Rng) -> TheoremParams {
    match id {
        TheoremId::T42 => loop {
            if let Ok(p) = T42Params::new(rng.gen_range(0..=4), rng.gen_range(0..=4)) {
                break TheoremParams::T42(p);
            }
        },
        TheoremId::T43 => {
            let len = rng.gen_range(1..=4);
            let coeffs: Vec<Rational> = (0..len)
                .map(|_| int(*COEFFS.choose(rng).expect("nonempty")))
                .collect();
            TheoremParams::T43(
                T43Params::new(rng.gen_range(0..=3), coeffs).expect("nonzero entries"),
            )
        }
        TheoremId::T45 => {
            let (k, l) = loop {
                let kl = (rng.gen_range(0..=3u32), rng.gen_range(0..=3u32));
                if kl != (0, 0) {
                    break kl;
                }
            };
            // primitive step along the line kj = li
            let g = gcd(k, l) as i64;
            let (di, dj) = (k as i64 / g, l as i64 / g);
            let mut steps: Vec<i64> = (0..=4).collect();
            steps.shuffle(rng);
            let take = rng.gen_range(1..=3);
            let support: Vec<(Monomial, Rational)> = steps[..take]
                .iter()
                .map(|t| {
                    (
                        Monomial::new(di * t, dj * t),
                        int(*COEFFS.choose(rng).expect("nonempty")),
                    )
                })
                .collect();
            TheoremParams::T45(T45Params::new(k, l, &support).expect("points lie on the line"))
        }
        TheoremId::T46 => TheoremParams::T46(T46Params::default()),
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
