//! Dual side: finitely supported functionals `Σ c_ij φ^i ε^j` on `F[x,y]`.

mod functional;
mod oracle;
mod series;
mod translate;

pub use functional::{
    delta_closed_form, delta_mu, mu_circ, pairing, pairing2, partial_circ, Axis, DualFunctional,
    DualTensor2,
};
pub use oracle::{dual_bracket_bruteforce, BruteForceOracle, ExponentBox, GuardRingViolation};
pub use series::{
    generate_recurrence, rational_from_recurrence, rational_series_coeffs,
    recurrence_from_rational, satisfies_recurrence, CoeffSequence, SeriesError,
};
pub use translate::{exact_rank, translate_space_dim, TranslateAction};
