//! Homological invariants of independence and noncover complexes of finite
//! hypergraphs over Z₂, and exact hypergraph domination parameters.
//!
//! Vertices are dense indices `0..n` (at most 64) so that vertex subsets fit in
//! a [`VertexSet`] bitmask. Exhaustive routines refuse inputs above the caps in
//! [`homology::Limits`].

pub mod complex;
pub mod corpus;
pub mod domination;
pub mod error;
pub mod ext;
pub mod gf2;
pub mod homology;
pub mod hypergraph;
pub mod io;
pub mod oracles;
pub mod rainbow;
pub mod verify;
pub mod vertex_set;

pub use complex::{independence_complex, noncover_complex, ComplexKind, SimplicialComplex};
pub use error::{Error, Result};
pub use ext::{EtaValue, ExtNat};
pub use homology::{betti_vector, eta, leray_number, BettiVector, Limits};
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;
