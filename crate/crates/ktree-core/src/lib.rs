//! Algorithms for k-trees and k-paths: directed reachability, shortest and
//! longest paths in weighted DAGs, undirected distance, and perfect matchings.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the CLI
//! live in the companion `ktree-cli` crate.
//!
//! Organization:
//! - [`graph`]: vertex/edge storage, k-tree and k-path generators with
//!   recorded construction, the clique-tree representation, validation.
//! - [`preprocess`]: disjoint relabeling of k-path cliques, copy edges,
//!   spike elimination, endpoint lifting.
//! - [`reach`]: divide-and-conquer reachability in k-paths and k-trees.
//! - [`separators`]: recursive 3/4-leaf separators of rooted trees via
//!   balanced-parentheses strings.
//! - [`paths`]: the call-formula pipeline for maximum/minimum weight paths,
//!   layer decomposition, and greedy undirected distance.
//! - [`matching`]: perfect-matching decision and search via matching vectors
//!   over the clique tree.
//! - [`oracle`]: independent brute-force references used by the test suites.
//!   They work on the raw graph only and never consult a decomposition.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod graph;
pub mod matching;
pub mod oracle;
pub mod paths;
pub mod preprocess;
pub mod reach;
pub mod separators;

pub use graph::{CliqueTree, ConstructionSequence, Graph, KPathDecomposition, Vertex, Weight};
