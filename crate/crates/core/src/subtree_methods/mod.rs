//! Generators for the `n` subtrees of the host tree.
//!
//! Three methods are provided, each steering the edge density of the final
//! intersection graph through its parameters:
//!
//! * [`growing_subtree`]: grow from a random node by `k_i - 1` boundary steps,
//!   `k_i` uniform in `1..=k`.
//! * [`connecting_nodes`]: minimal subtree spanning `k_i ~ Poisson(lambda)`
//!   random nodes.
//! * [`pruned_tree`]: one component of the host tree after deleting a fraction
//!   `f` of its edges, biased toward large components by the barrier `s`.
//!
//! [`ensure_connected`] optionally rewrites the last subtree so that the
//! intersection graph becomes connected.

mod connecting;
mod growing;
mod poisson;
mod pruned;

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph_analysis;
use crate::host_tree::{self, HostTree, RootedTree};
use crate::rng;
use crate::work::WorkCounter;

pub use connecting::{connecting_nodes, connecting_nodes_counted};
pub use growing::{growing_subtree, growing_subtree_counted};
pub use poisson::sample_poisson;
pub use pruned::{pruned_tree, pruned_tree_counted};

/// Largest supported Poisson mean; the product-of-uniforms method underflows
/// near `exp(-745)`.
pub const MAX_LAMBDA: f64 = 500.0;

/// Node set of one connected subtree of the host tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subtree {
    pub nodes: Vec<usize>,
}

impl Subtree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Non-empty, distinct in-range nodes, and connected in `host`.
    pub fn is_valid_in(&self, host: &HostTree) -> bool {
        let n = host.n();
        if self.nodes.is_empty() {
            return false;
        }
        let mut member = vec![false; n];
        for &x in &self.nodes {
            if x >= n || member[x] {
                return false;
            }
            member[x] = true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.nodes[0]]);
        seen[self.nodes[0]] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in host.neighbors(x) {
                if member[y] && !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.nodes.len()
    }
}

/// The `n` subtrees whose intersection graph is the generated graph; subtree
/// `i` represents vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeSet {
    pub host_n: usize,
    pub subtrees: Vec<Subtree>,
    pub total_size: usize,
}

impl SubtreeSet {
    pub fn new(host_n: usize, subtrees: Vec<Subtree>) -> Self {
        let total_size = subtrees.iter().map(Subtree::len).sum();
        SubtreeSet {
            host_n,
            subtrees,
            total_size,
        }
    }

    pub fn len(&self) -> usize {
        self.subtrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subtrees.is_empty()
    }

    pub fn validate(&self, host: &HostTree) -> Result<()> {
        if self.host_n != host.n() {
            return Err(Error::invalid("subtree set belongs to a different host"));
        }
        if let Some(i) = self.subtrees.iter().position(|t| !t.is_valid_in(host)) {
            return Err(Error::invalid(format!("subtree {i} is empty or disconnected")));
        }
        let total: usize = self.subtrees.iter().map(Subtree::len).sum();
        if total != self.total_size {
            return Err(Error::invalid("total_size does not match subtree sizes"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowingParams {
    /// Maximum subtree size.
    pub k: usize,
}

impl GrowingParams {
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.k < 1 || self.k > n {
            return Err(Error::invalid(format!("k must lie in 1..={n}, got {}", self.k)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConnectingParams {
    /// Poisson mean for the number of selected nodes.
    pub lambda: f64,
}

impl ConnectingParams {
    pub fn validate(&self) -> Result<()> {
        check_lambda(self.lambda)
    }
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda <= MAX_LAMBDA) {
        return Err(Error::invalid(format!(
            "lambda must lie in (0, {MAX_LAMBDA}], got {lambda}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrunedParams {
    /// Edge deletion fraction in `[0, 1)`.
    pub f: f64,
    /// Selection barrier in `[0, 1]`.
    pub s: f64,
}

impl PrunedParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..1.0).contains(&self.f) {
            return Err(Error::invalid(format!("f must lie in [0, 1), got {}", self.f)));
        }
        if !(0.0..=1.0).contains(&self.s) {
            return Err(Error::invalid(format!("s must lie in [0, 1], got {}", self.s)));
        }
        Ok(())
    }
}

/// Scratch space for the level-wise joining loop, sized once per host tree
/// and left clean after every call.
pub(crate) struct JoinScratch {
    by_level: Vec<Vec<usize>>,
    in_frontier: Vec<bool>,
}

impl JoinScratch {
    pub(crate) fn new(rooted: &RootedTree<'_>) -> Self {
        JoinScratch {
            by_level: vec![Vec::new(); rooted.max_level + 1],
            in_frontier: vec![false; rooted.base.n()],
        }
    }
}

/// Minimal subtree containing all of `selected`.
///
/// Frontier nodes are bucketed by BFS level. Starting from the deepest level,
/// every frontier node is replaced by its parent (added to the subtree unless
/// already on the frontier), until a single frontier node remains. Every
/// visited node ends up in the output, so the cost is O(output size).
pub(crate) fn join_minimal(
    rooted: &RootedTree<'_>,
    selected: &[usize],
    scratch: &mut JoinScratch,
    work: &mut WorkCounter,
) -> Vec<usize> {
    debug_assert!(!selected.is_empty());
    let mut nodes = Vec::with_capacity(selected.len());
    let mut frontier = 0usize;
    let mut depth = 0usize;
    for &x in selected {
        if !scratch.in_frontier[x] {
            scratch.in_frontier[x] = true;
            scratch.by_level[rooted.level[x]].push(x);
            nodes.push(x);
            frontier += 1;
            depth = depth.max(rooted.level[x]);
        }
    }
    work.add(selected.len());
    while frontier > 1 {
        let mut bucket = std::mem::take(&mut scratch.by_level[depth]);
        for &x in &bucket {
            let p = rooted.parent[x];
            scratch.in_frontier[x] = false;
            frontier -= 1;
            if !scratch.in_frontier[p] {
                scratch.in_frontier[p] = true;
                scratch.by_level[depth - 1].push(p);
                nodes.push(p);
                frontier += 1;
            }
        }
        work.add(bucket.len() + 1);
        bucket.clear();
        scratch.by_level[depth] = bucket;
        depth -= 1;
    }
    let last = scratch.by_level[depth]
        .pop()
        .expect("one frontier node remains");
    debug_assert!(scratch.by_level[depth].is_empty());
    scratch.in_frontier[last] = false;
    nodes
}

/// Minimal subtree of `rooted.base` containing every node of `selected`.
pub fn minimal_subtree(rooted: &RootedTree<'_>, selected: &[usize]) -> Result<Subtree> {
    let n = rooted.base.n();
    if selected.is_empty() {
        return Err(Error::invalid("selection must not be empty"));
    }
    if let Some(&x) = selected.iter().find(|&&x| x >= n) {
        return Err(Error::invalid(format!("node {x} is not in a host of {n} nodes")));
    }
    let mut scratch = JoinScratch::new(rooted);
    let nodes = join_minimal(rooted, selected, &mut scratch, &mut WorkCounter::default());
    Ok(Subtree { nodes })
}

/// Makes the intersection graph connected by rewriting the last subtree.
///
/// If `graph` is disconnected, one random vertex is drawn from every
/// component of `graph - v` (with `v` the last vertex), one random host node
/// is drawn from each of their subtrees, and `T_v` becomes the minimal
/// subtree joining those nodes. `v` then meets every component of `G - v`.
pub fn ensure_connected<R: Rng + ?Sized>(
    host: &HostTree,
    subtrees: &SubtreeSet,
    graph: &Graph,
    rng: &mut R,
) -> Result<SubtreeSet> {
    ensure_connected_counted(host, subtrees, graph, rng, &mut WorkCounter::default())
}

pub fn ensure_connected_counted<R: Rng + ?Sized>(
    host: &HostTree,
    subtrees: &SubtreeSet,
    graph: &Graph,
    rng: &mut R,
    work: &mut WorkCounter,
) -> Result<SubtreeSet> {
    let n = graph.n();
    if n != subtrees.len() {
        return Err(Error::invalid("graph and subtree set disagree on n"));
    }
    if n <= 1 || graph_analysis::connected_components(graph).0 == 1 {
        return Ok(subtrees.clone());
    }
    let last = n - 1;
    let (count, labels) = graph_analysis::components_without(graph, last);
    work.add(n + 2 * graph.m());

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in 0..last {
        members[labels[v]].push(v);
    }
    let anchors: Vec<usize> = members
        .iter()
        .map(|comp| {
            let v = comp[rng::below(rng, comp.len())];
            let nodes = &subtrees.subtrees[v].nodes;
            nodes[rng::below(rng, nodes.len())]
        })
        .collect();

    let rooted = host_tree::root_and_level(host, 0)?;
    let mut scratch = JoinScratch::new(&rooted);
    let joined = join_minimal(&rooted, &anchors, &mut scratch, work);

    let mut patched = subtrees.subtrees.clone();
    patched[last] = Subtree { nodes: joined };
    Ok(SubtreeSet::new(subtrees.host_n, patched))
}
