//! Hypergraph coloring: exact chromatic numbers, local edge connectivity,
//! critical hypergraphs, Hajós joins and splittings, and certificates for
//! hypergraphs whose chromatic number reaches `λ + 1`.

pub mod classifier;
pub mod coloring;
pub mod connectivity;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod hgr;
pub mod hypergraph;
pub mod shapes;

pub use coloring::Coloring;
pub use connectivity::{EdgeCut, Hyperpath};
pub use error::{Error, Result};
pub use hypergraph::{EdgeRef, Hypergraph, Relabeled, VertexSet};
