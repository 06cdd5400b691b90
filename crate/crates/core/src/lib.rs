//! Crossing-critical graph families.
//!
//! Multigraph core with planarity, flows and canonical forms; the tile
//! algebra; an exact crossing-number oracle; lower-bound certificates
//! (twisted families, staircase strips); zip products; concrete families
//! (staircase graphs, H graphs, R chains); and the Γ(a,b,k) parameter solver.

pub mod certificates;
pub mod constructions;
pub mod error;
pub mod gamma;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod tile;
pub mod zip;

pub use error::{BuildError, CrossingError, GammaError, GraphError, TileError, ZipError};
pub use graph::planarity::{is_planar, planarity, Embedding, Kuratowski, Planarity};
pub use graph::{Edge, MultiGraph, VertexId};
pub use oracle::{CrResult, CrossingSet, LowerCertificate};
pub use tile::{Tile, TileSequence};

/// Exact rational with a reduced, positive denominator.
pub type Rational = num_rational::BigRational;
