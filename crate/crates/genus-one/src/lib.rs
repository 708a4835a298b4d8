//! Numerical toolkit for subharmonic canonical integrals of genus one.
//!
//! The crate computes canonical integrals and logarithmic determinants,
//! principal-value generalizations, Hilbert pairs `f = g + ih`, Jensen
//! measures and their potentials, and the radial characteristics
//! (maximum modulus, Nevanlinna `T`, Tsuji `𝔗`/`𝔪`, `δ`, `δ*`) that
//! drive a family of distribution estimates for counting functions.
//! The `verify` module packages the exact identities (Carleman, Levin,
//! the Tsuji first fundamental theorem, the semi-disk kernel averages)
//! and the inequality harnesses with fitted constants into named,
//! machine-readable suites; `cli` orchestrates batch runs.
//!
//! Start from the `examples/` directory: each example is a runnable
//! walkthrough of one capability.

pub mod canonical;
pub mod characteristics;
pub mod cli;
pub mod curves;
pub mod error;
pub mod fixtures;
pub mod jensen;
pub mod kernels;
pub mod measures;
pub mod quad;
pub mod transforms;
pub mod verify;

pub use canonical::{
    eval_canonical, fixture_up, logdet_complex, logdet_vector, pushforward_measure,
    surrogate_complexify, CanonicalField, Field, LogDetField, PvCanonicalField, UpField,
};
pub use characteristics::{
    delta_curve, delta_star, delta_star_curve, max_modulus, nevanlinna_t, rhs_borel,
    rhs_corollary5, rhs_marcinkiewicz, rhs_real_line, rhs_theorem1, rhs_theorem2, tsuji_m,
    tsuji_t,
};
pub use curves::{LogGrid, RadialCurve};
pub use error::{Error, Result};
pub use jensen::{moment_check, potential_v, pushforward, sigma_distributions, JensenMeasure};
pub use kernels::{
    closed_form_k1_integral, closed_form_k2_integral, closed_form_k3_integral, kernel_h,
    kernel_k1, kernel_k2, kernel_k3,
};
pub use measures::{
    counting_levin_tsuji, counting_mu, distribution, genus_one_norm, reflect_to_lower, Complex,
    MeasuredFunction, PlanarMeasure, Projector, VectorMeasuredFunction,
};
pub use transforms::{hilbert_pv, make_hilbert_pair, HilbertPair, RealFunction};
pub use verify::{check_identity, fit_constant, run_suite, VerificationReport};
