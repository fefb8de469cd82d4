//! Graph multiplihedra: marked tubings of a graph, their exact integer
//! realization as a polytope, and exact checks that the two agree.

pub mod cli;
pub mod construct;
pub mod error;
pub mod graph;
pub mod hull;
pub mod io;
pub mod multiplihedron;
pub mod poset;
pub mod realize;
pub mod tubing;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, NodeSet};
pub use realize::{Hyperplane, HyperplaneKind, LatticePoint, WeightVector};
pub use tubing::{MarkedTube, MarkedTubing, Marking, Tubing};
