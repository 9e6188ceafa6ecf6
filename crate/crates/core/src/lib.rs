//! Distance-based closeness of undirected graphs and the "nature deletes a
//! link, we build a link" decision problem.
//!
//! - [`graph`]: graphs, parsing, family generators, BFS distances.
//! - [`metrics`]: closeness, residual and additional closeness.
//! - [`decision`]: payoff tables, decision criteria, saddle points.
//! - [`closed_form`]: analytic formulas for path, cycle, linked-clique,
//!   lollipop and cycle-with-tails graphs.
//! - [`verify`]: sweeps comparing the formulas with brute force.

pub mod closed_form;
pub mod decision;
mod dyadic;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod number;
pub mod verify;

pub use dyadic::pow2;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};

/// Absolute tolerance for comparing closeness values.
pub const TOLERANCE: f64 = 1e-9;
