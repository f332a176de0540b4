//! The random host tree and its rooted BFS view.

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng;

/// A tree on nodes `0..n` with symmetric adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostTree {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl HostTree {
    /// Validates that `edges` form a spanning tree on `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a host tree needs at least one node"));
        }
        if edges.len() != n - 1 {
            return Err(Error::invalid(format!(
                "a tree on {n} nodes has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::invalid(format!("bad tree edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let tree = HostTree {
            adjacency,
            edges: edges.to_vec(),
        };
        if !tree.is_connected() {
            return Err(Error::invalid("tree edges do not connect all nodes"));
        }
        Ok(tree)
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        HostTree::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// BFS from node 0 reaches every node. With `n - 1` edges this also
    /// rules out cycles.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == n
    }
}

/// Random tree by recursive attachment: the `i`-th inserted node attaches to a
/// uniformly chosen earlier node. Insertion positions are mapped to labels
/// through a uniform random permutation so that every labeled tree has
/// positive probability. O(n).
pub fn generate_random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<HostTree> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut label: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng::below(rng, i + 1);
        label.swap(i, j);
    }
    let mut adjacency = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..n {
        let parent = label[rng::below(rng, i)];
        let child = label[i];
        adjacency[parent].push(child);
        adjacency[child].push(parent);
        edges.push((parent, child));
    }
    Ok(HostTree { adjacency, edges })
}

/// A host tree rooted at `root`, with BFS parents and levels.
#[derive(Clone, Debug)]
pub struct RootedTree<'a> {
    pub base: &'a HostTree,
    pub root: usize,
    /// `parent[root] == NO_PARENT`.
    pub parent: Vec<usize>,
    pub level: Vec<usize>,
    /// Nodes in BFS order; parents precede children.
    pub order: Vec<usize>,
    pub max_level: usize,
}

pub const NO_PARENT: usize = usize::MAX;

pub fn root_and_level(tree: &HostTree, root: usize) -> Result<RootedTree<'_>> {
    let n = tree.n();
    if root >= n {
        return Err(Error::invalid(format!("root {root} out of range for n = {n}")));
    }
    let mut parent = vec![NO_PARENT; n];
    let mut level = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[root] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in tree.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                level[y] = level[x] + 1;
                order.push(y);
            }
        }
    }
    let max_level = level.iter().copied().max().unwrap_or(0);
    Ok(RootedTree {
        base: tree,
        root,
        parent,
        level,
        order,
        max_level,
    })
}
