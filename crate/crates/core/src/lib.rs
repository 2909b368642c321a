//! Shedding decompositions of monomial ideals and simplicial complexes.
//!
//! The crate decides k-decomposability, emits checkable certificates, and
//! computes graded Betti numbers, regularity and projective dimension both
//! from certificates (recursively) and from an independent homology-based
//! oracle. It also decides chordality of clutters and checks the regularity
//! bounds that hold for chordal clutters.

pub mod cli;
pub mod clutters;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod model;
pub mod oracle;
pub mod resolution;
pub mod verify;

pub use error::{Error, Result};
pub use model::{Clutter, Ctx, Monomial, MonomialIdeal, SimplicialComplex, VariableContext, VertexSet};
