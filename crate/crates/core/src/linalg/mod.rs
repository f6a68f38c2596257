//! Exact linear algebra over `ℤ` and `ℤ/2`.

mod group;
mod homology;
mod lattice;
mod matrix;
mod ring;
mod snf;

pub use group::{FGAbelianGroup, GroupHom, Subgroup};
pub use homology::{homology_at, induced_hom, Homology};
pub use lattice::{kernel_basis, lattice_basis, span_contains, Solver};
pub use matrix::{IntMatrix, Matrix};
pub use ring::{Gf2, Ring, Scalar};
pub use snf::{smith_normal_form, Snf};
