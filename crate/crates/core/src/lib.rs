//! Exact algorithms and instance generators for cluster vertex deletion.
//!
//! A graph is a cluster graph when every connected component is a clique,
//! equivalently when it has no induced 3-vertex path. This crate bundles:
//!
//! - [`graph`]: a simple undirected graph type with complement, union, join,
//!   components, girth, bipartition and certified induced-pattern search;
//! - [`cotree`]: recognition of P4-free graphs (cographs) with cotree
//!   construction, binarization, expansion and a textual format;
//! - [`dp`]: linear-time dynamic programs over binary cotrees computing the
//!   cluster vertex deletion number, the clique deletion number (vertex cover
//!   of the complement), their connected variants, weighted versions of the
//!   first two, and optimal deletion sets;
//! - [`oracle`]: brute-force and P3-branching exact solvers for arbitrary
//!   graphs plus solution verification, the ground truth everything else is
//!   tested against;
//! - [`reduction`]: verified instance generators (dense vertex-cover
//!   reduction, 3-subdivision, girth amplification, connected-deletion
//!   gadget) with bidirectional solution maps, and the H-free complexity
//!   classifier;
//! - [`gen`]: seeded random instance generators.

pub mod cotree;
pub mod dp;
pub mod extint;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod patterns;
pub mod reduction;

#[cfg(test)]
pub(crate) mod testutil;

pub use extint::ExtInt;
pub use graph::{Graph, Part};
pub use patterns::{PatternKind, PatternWitness};
