//! Random chordal graph generation through the subtree intersection model.
//!
//! A random host tree on `n` nodes is built by recursive attachment, `n`
//! subtrees of it are drawn by one of three methods ([`subtree_methods`]),
//! and the intersection graph of those subtrees is emitted together with a
//! clique tree ([`intersection_builder`]). Every intersection graph of
//! subtrees of a tree is chordal, so the output needs no repair step.
//!
//! [`graph_analysis`] provides the verification side (maximum cardinality
//! search, chordality test, maximal cliques, run statistics), [`oracle`]
//! holds deliberately naive reference implementations, and
//! [`baseline_alg1`] is the incremental elimination-order generator used as
//! a point of comparison.

pub mod baseline_alg1;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod graph_analysis;
pub mod host_tree;
pub mod intersection_builder;
pub mod io;
pub mod oracle;
pub mod rng;
pub mod subtree_methods;
pub mod work;

pub use error::{Error, Result};
pub use graph::Graph;
pub use host_tree::{HostTree, RootedTree};
pub use intersection_builder::{chordal_gen, CliqueTree, Generated, Method};
pub use rng::GenRng;
pub use subtree_methods::{Subtree, SubtreeSet};
