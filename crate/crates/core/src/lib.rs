//! Exact and fixed-parameter solvers for coloured clustering.
//!
//! Given an edge-coloured graph, a vertex colouring makes an edge *stable*
//! when the edge colour matches the colours of both of its ends. Maximising
//! stable edges is the same as deleting the fewest edges so that no two
//! adjacent edges differ in colour (no *conflict pair* survives).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and timing live in the `colclust` companion crate.
//!
//! Engines:
//! - [`mincut`]: exact, polynomial, for graphs using at most two colours.
//! - [`complete`]: exact, `O(n^2)`, for bicoloured complete graphs.
//! - [`fpt_stable`]: randomized random-partition search parameterized by
//!   the number of stable edges.
//! - [`fpt_unstable`]: condensation kernel plus weighted vertex cover,
//!   parameterized by the number of deleted edges.
//! - [`oracle`]: brute force, guarded by search-space bounds.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod complete;
pub mod conflict;
pub mod error;
pub mod fpt_stable;
pub mod fpt_unstable;
pub mod graph;
pub mod instance_gen;
pub mod mincut;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Colour, Edge, EdgeColouredGraph, StabilityReport, VertexColouring};
