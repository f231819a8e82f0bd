//! Cylindrical Bessel functions J_n, their one-parameter isospectral partner
//! family Jt_{n+1}(r; gamma), and the standing waves of the damped polar wave
//! equation those partners solve. The crate evaluates the functions from
//! scratch in double precision, turns every identity they satisfy into a
//! grid-evaluated residual report, and verifies the wave solutions both by
//! finite-difference residuals and by explicit time evolution. Supported
//! domain: integer orders n <= 20, radii 0 <= r <= 50.

pub mod bessel;
pub mod error;
pub mod isospectral;
pub mod verify;
pub mod wavefield;

pub use bessel::{
    bessel_j, bessel_j_derivative, ladder_lower, ladder_raise, Order, RadialGrid,
    ResidualReport, MAX_ORDER, MAX_RADIUS,
};
pub use error::{Error, Result};
pub use isospectral::{
    damping_g, find_zeros, partner_j, partner_j_derivative, partner_j_ladder_form,
    partner_j_second_derivative, GammaParam, PartnerSpec,
};
pub use verify::{
    run_default_suite, CaseOutcome, IdentityCase, IdentityId, Perturbation, SuiteReport,
};
pub use wavefield::{
    angular_h, min_steps_per_period, pde_residual, stationary_field, time_evolve, DriftReport,
    PolarField, PolarGrid, WaveParams,
};
