//! Edge-Wiener index of cacti.
//!
//! Exact distance invariants, the extremal cactus families, the rewrites
//! that move the index, exhaustive enumeration of small cacti and a harness
//! that checks the closed-form bounds against it. The guide in `book/`
//! covers each layer.
//!
//! ```
//! use cactus_wiener::constructors::{bundle, saw, CactusClassParams};
//! use cactus_wiener::invariants::edge_wiener;
//!
//! let class = CactusClassParams::new(7, 2).unwrap();
//! assert_eq!(edge_wiener(&bundle(class).unwrap()).unwrap(), 38);
//! assert_eq!(edge_wiener(&saw(1, 1, 7).unwrap()).unwrap(), 62);
//! ```

pub mod constructors;
pub mod enumeration;
pub mod graph;
pub mod invariants;
pub mod transforms;
pub mod verify;

pub use graph::{Graph, GraphError, VertexId};
