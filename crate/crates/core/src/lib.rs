//! Exact Gromov hyperbolicity of unweighted graphs.

mod error;
pub mod graph;
pub mod hyperbolicity;
pub mod ilp;
pub mod path_engine;
pub mod reductions;
pub mod vertex_cover;
pub mod cograph;
pub mod generators;
pub mod harness;

pub use error::{Error, Result};
pub use graph::{Graph, Subgraph};
pub use hyperbolicity::{brute_force_delta, HyperbolicityResult, Witness};

/// Scalar of the default, exact ILP relaxation.
pub type ExactScalar = ilp::Exact;
/// Floating-point relaxation scalar, for cross-checks.
pub type FloatScalar = f64;
