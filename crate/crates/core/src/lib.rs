//! Vertex-disjoint cycle packing under degree conditions.
//!
//! The crate provides:
//!
//! - [`graph`]: a bitset-backed simple graph with the surgeries used
//!   throughout (contraction, deletion, 2-core, join), each returning an
//!   explicit renumbering map so certificates can be lifted back;
//! - [`classify`]: high/low degree classification and the closed set of
//!   degree hypotheses that imply k disjoint cycles;
//! - [`packing`]: exact branch-and-bound oracles for c(G), t(G), and
//!   certified searches for k disjoint cycles;
//! - [`augment`]: the auxiliary digraph over a triangle packing and the
//!   rotation that grows good-triangle packings;
//! - [`reduce`]: instance-shrinking rewrite rules with certificate lifting
//!   and a reduce-then-solve pipeline;
//! - [`extremal`]: generators for the sharpness constructions, each with a
//!   machine-checkable expected profile;
//! - [`harness`]: exhaustive and seeded-random theorem verification plus a
//!   counterexample hunter for the open n-range.
//!
//! Graphs are immutable values and all searches are deterministic, so every
//! entry point is safe to call from parallel workers.

pub mod augment;
pub mod classify;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod harness;
pub mod packing;
pub mod reduce;

pub use error::{Error, ParseError, Result};
pub use graph::{Graph, VertexMap, VertexSet};
pub use packing::{CyclePacking, SearchLimits, SearchOutcome, TrianglePacking};
