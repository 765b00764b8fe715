//! Translating and conformal solitons among translation surfaces of the
//! hyperbolic 3-space, in the upper half-space model.
//!
//! * [`lie_halfspace`]: the Lie group structure of the half-space.
//! * [`surface_jets`]: 2-jets of parametrized surfaces and their curvature.
//! * [`soliton_residuals`]: the minimal, translator and conformal conditions.
//! * [`profile_odes`]: the profile equations and their trajectories.
//! * [`surface_factory`]: samplers for the classified families.

// Negated comparisons are used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
pub mod error;
pub mod lie_halfspace;
pub mod profile_odes;
pub mod soliton_residuals;
pub mod surface_factory;
pub mod surface_jets;

pub type Vec3 = nalgebra::Vector3<f64>;

pub use error::{Error, Result};
pub use lie_halfspace::{HalfSpacePoint, SemidirectPoint};
pub use soliton_residuals::{residual_report, ResidualReport, SolitonMode};
pub use surface_factory::{sample_grid, GridSpec, SurfaceFamily};
pub use surface_jets::{ScalarJet2, SurfaceJet2};
