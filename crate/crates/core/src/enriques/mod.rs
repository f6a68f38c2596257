//! Closed-form answers for real Enriques surfaces from the topological type
//! of the real part and its split into halves.
//!
//! Types are taken as structurally valid inputs; whether a given type is
//! realized by an actual surface is not checked.

mod classify;
mod types;

pub use classify::{
    brauer_group, classify, enumerate_types, gm_status, h1_dims, ClassifierOutput, Rules, MAX_ENUMERATED_COMPONENTS,
};
pub use types::{EnriquesType, SurfaceComponent, TypeError, MAX_NONORIENTABLE_GENUS};

/// Check the per-component constraints, naming the first offender.
pub fn validate_type(t: &EnriquesType) -> Result<(), TypeError> {
    t.validate()
}
