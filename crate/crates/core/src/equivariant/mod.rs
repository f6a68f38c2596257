//! Equivariant homology and cohomology through the double complex, and the
//! maps between them.

mod fundamental;
mod group_cohomology;
mod les;
mod localization;
mod maps;
mod total;

pub use fundamental::{fundamental_class, represented_class, FundamentalClass};
pub use group_cohomology::{group_cohomology, invariants, norms};
pub use les::{bockstein_from, hom_from_images, les_coeff, les_edge, ExactSequence, NodeCheck};
pub use localization::{beta, beta_of_cocycle, beta_on, rho, BetaMap, FixedSet, GradedClassVector, Localizer, RhoMap};
pub use maps::{
    degree_on_generators, edge_chain_map, edge_connecting, edge_from, edge_morphism, edge_morphism_cohomology,
    eq_cohomology, eq_homology, equivariant_degree, eta_chain_map, is_zero_class, ordinary, ordinary_degree,
    pushforward, pushforward_chain_map, pushforward_class, s_from, s_map, sigma_action, EdgeMorphism,
};
pub use total::{Block, TotalComplex, Variance};
