//! Finite simplicial complexes with an involution, their twisted chain
//! complexes, equivariant maps and the builtin catalogue.

mod builtin;
mod chain;
mod complex;
mod io;
mod map;

pub use builtin::{builtin, BUILTIN_NAMES, MANIFOLD_BUILTINS};
pub use chain::{CoeffSystem, GChainComplex};
pub use complex::{ComplexError, GComplex, Simplex, Violation};
pub use io::{complex_to_json, load_complex, parse_complex_json, regularize, LoadedComplex};
pub use map::{equator_inclusion, gmap_catalog, GMap};
