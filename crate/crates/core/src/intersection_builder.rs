//! From a subtree set to the intersection graph and its clique tree.
//!
//! Node `x` of the host tree is blown up to the clique `C_x` of vertices
//! whose subtrees contain `x`. The host tree labeled this way satisfies the
//! clique-tree occurrence property but may carry non-maximal (or empty)
//! labels. A label that is not maximal is contained in a tree-neighbor's
//! label, so contracting every tree edge with nested endpoint labels leaves
//! exactly the maximal cliques. Nesting is decided in O(1) per edge from the
//! edge's intersection size `|C_x ∩ C_parent(x)|`, computed for all edges in
//! one sweep.

use rand::Rng;

use crate::error::Result;
use crate::graph::{Csr, Graph};
use crate::host_tree::{self, HostTree, NO_PARENT};
use crate::subtree_methods::{
    self, ConnectingParams, GrowingParams, PrunedParams, SubtreeSet,
};
use crate::work::WorkCounter;

/// `C_x` for every host node `x`, each list sorted by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeCliqueLists {
    offsets: Vec<usize>,
    members: Vec<u32>,
}

impl NodeCliqueLists {
    pub fn host_n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn at(&self, x: usize) -> &[u32] {
        &self.members[self.offsets[x]..self.offsets[x + 1]]
    }

    pub fn len_at(&self, x: usize) -> usize {
        self.offsets[x + 1] - self.offsets[x]
    }

    pub fn total(&self) -> usize {
        self.members.len()
    }
}

pub fn node_clique_lists(subtrees: &SubtreeSet) -> NodeCliqueLists {
    node_clique_lists_counted(subtrees, &mut WorkCounter::default())
}

pub fn node_clique_lists_counted(subtrees: &SubtreeSet, work: &mut WorkCounter) -> NodeCliqueLists {
    let n = subtrees.host_n;
    let mut count = vec![0usize; n];
    for t in &subtrees.subtrees {
        for &x in &t.nodes {
            count[x] += 1;
        }
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    let mut acc = 0;
    for &c in &count {
        acc += c;
        offsets.push(acc);
    }
    let mut cursor = offsets[..n].to_vec();
    let mut members = vec![0u32; acc];
    for (v, t) in subtrees.subtrees.iter().enumerate() {
        for &x in &t.nodes {
            members[cursor[x]] = v as u32;
            cursor[x] += 1;
        }
    }
    work.add(2 * n + 2 * acc);
    NodeCliqueLists { offsets, members }
}

/// The maximal cliques of the intersection graph arranged as a clique tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    /// Sorted vertex lists, pairwise non-nested.
    pub cliques: Vec<Vec<usize>>,
    /// Edges between indices into `cliques`; a spanning tree.
    pub tree_edges: Vec<(usize, usize)>,
    /// Host node whose label became each clique.
    pub host_node: Vec<usize>,
}

impl CliqueTree {
    pub fn clique_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.cliques.iter().map(Vec::len)
    }

    pub fn total_size(&self) -> usize {
        self.clique_sizes().sum()
    }
}

pub fn build_clique_tree(lists: &NodeCliqueLists, host: &HostTree) -> CliqueTree {
    build_clique_tree_counted(lists, host, &mut WorkCounter::default())
}

pub fn build_clique_tree_counted(
    lists: &NodeCliqueLists,
    host: &HostTree,
    work: &mut WorkCounter,
) -> CliqueTree {
    let n = host.n();
    assert_eq!(lists.host_n(), n, "clique lists belong to a different host");
    let rooted = host_tree::root_and_level(host, 0).expect("node 0 exists");

    // shared[x] = |C_x ∩ C_parent(x)|. Each node stamps its own list once and
    // each child scans its list once.
    let mut stamp = vec![NO_PARENT; subtree_vertex_bound(lists)];
    let mut shared = vec![0usize; n];
    for &p in &rooted.order {
        for &v in lists.at(p) {
            stamp[v as usize] = p;
        }
        for &c in host.neighbors(p) {
            if rooted.parent[c] == p {
                shared[c] = lists.at(c).iter().filter(|&&v| stamp[v as usize] == p).count();
                work.add(lists.len_at(c));
            }
        }
        work.add(lists.len_at(p) + host.degree(p));
    }

    // Contract nested edges. A class is represented by its node with the
    // largest label, which contains the labels of all its members; for an
    // edge (c, p) between classes a and b this gives C_a ∩ C_b = C_c ∩ C_p.
    let mut class: Vec<usize> = (0..n).collect();
    let mut kept = Vec::new();
    for &c in &rooted.order[1..] {
        let p = rooted.parent[c];
        let a = find(&mut class, c);
        let b = find(&mut class, p);
        let (la, lb, s) = (lists.len_at(a), lists.len_at(b), shared[c]);
        let a_in_b = s == la;
        let b_in_a = s == lb;
        match (a_in_b, b_in_a) {
            (true, true) => {
                // Equal labels: keep the smaller node.
                let (winner, loser) = if a < b { (a, b) } else { (b, a) };
                class[loser] = winner;
            }
            (true, false) => class[a] = b,
            (false, true) => class[b] = a,
            (false, false) => kept.push((c, p)),
        }
        work.add(4);
    }

    let mut index = vec![usize::MAX; n];
    let mut cliques = Vec::new();
    let mut host_node = Vec::new();
    for x in 0..n {
        if find(&mut class, x) == x {
            index[x] = cliques.len();
            cliques.push(lists.at(x).iter().map(|&v| v as usize).collect::<Vec<_>>());
            host_node.push(x);
        }
    }
    let tree_edges = kept
        .into_iter()
        .map(|(c, p)| (index[find(&mut class, c)], index[find(&mut class, p)]))
        .collect();
    work.add(2 * n + cliques.iter().map(Vec::len).sum::<usize>());
    CliqueTree {
        cliques,
        tree_edges,
        host_node,
    }
}

fn subtree_vertex_bound(lists: &NodeCliqueLists) -> usize {
    lists.members.iter().map(|&v| v as usize + 1).max().unwrap_or(0)
}

fn find(class: &mut [usize], mut x: usize) -> usize {
    while class[x] != x {
        class[x] = class[class[x]];
        x = class[x];
    }
    x
}

/// Calls `emit(u, v)` once per edge of the graph represented by `tree`.
///
/// Cliques are visited in BFS order over the clique tree. At clique `C` with
/// parent `P`, the vertices of `C \ P` are new: an edge lies in the topmost
/// clique containing both endpoints, and there at least one endpoint is new.
/// Emitting `new x old` plus pairs within `new` yields every edge once.
fn for_each_edge(tree: &CliqueTree, vertex_count: usize, work: &mut WorkCounter, mut emit: impl FnMut(usize, usize)) {
    let k = tree.cliques.len();
    if k == 0 {
        return;
    }
    let mut adjacency = vec![Vec::new(); k];
    for &(a, b) in &tree.tree_edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut in_parent = vec![usize::MAX; vertex_count];
    let mut visited = vec![false; k];
    let mut queue = vec![0usize];
    visited[0] = true;
    let mut fresh = Vec::new();
    let mut old = Vec::new();

    emit_within(&tree.cliques[0], &mut emit);
    work.add(tree.cliques[0].len());
    let mut head = 0;
    while head < queue.len() {
        let p = queue[head];
        head += 1;
        for &v in &tree.cliques[p] {
            in_parent[v] = p;
        }
        work.add(tree.cliques[p].len());
        for &c in &adjacency[p] {
            if visited[c] {
                continue;
            }
            visited[c] = true;
            queue.push(c);
            fresh.clear();
            old.clear();
            for &v in &tree.cliques[c] {
                if in_parent[v] == p {
                    old.push(v);
                } else {
                    fresh.push(v);
                }
            }
            emit_within(&fresh, &mut emit);
            for &u in &fresh {
                for &w in &old {
                    emit(u, w);
                }
            }
            work.add(tree.cliques[c].len());
        }
    }
}

fn emit_within(vertices: &[usize], emit: &mut impl FnMut(usize, usize)) {
    for (i, &u) in vertices.iter().enumerate() {
        for &w in &vertices[i + 1..] {
            emit(u, w);
        }
    }
}

/// Adjacency lists of the graph represented by a clique tree, in O(n + m)
/// plus the total clique size.
pub fn build_graph(tree: &CliqueTree, n: usize) -> Graph {
    build_graph_counted(tree, n, &mut WorkCounter::default())
}

pub fn build_graph_counted(tree: &CliqueTree, n: usize, work: &mut WorkCounter) -> Graph {
    let mut degree = vec![0usize; n];
    for_each_edge(tree, n, work, |u, v| {
        degree[u] += 1;
        degree[v] += 1;
    });
    let mut csr = Csr::with_degrees(&degree);
    for_each_edge(tree, n, work, |u, v| {
        csr.push(u, v as u32);
        csr.push(v, u as u32);
    });
    let graph = csr.into_sorted();
    work.add(n + 4 * graph.m());
    graph
}

/// Intersection graph of `subtrees`, via the clique tree.
pub fn intersection_graph(host: &HostTree, subtrees: &SubtreeSet) -> Graph {
    let lists = node_clique_lists(subtrees);
    let tree = build_clique_tree(&lists, host);
    build_graph(&tree, subtrees.len())
}

/// Subtree generation method and its parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Method {
    Growing(GrowingParams),
    Connecting(ConnectingParams),
    Pruned(PrunedParams),
}

impl Method {
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            Method::Growing(p) => p.validate(n),
            Method::Connecting(p) => p.validate(),
            Method::Pruned(p) => p.validate(),
        }
    }

    pub fn generate<R: Rng + ?Sized>(
        &self,
        host: &HostTree,
        rng: &mut R,
        work: &mut WorkCounter,
    ) -> Result<SubtreeSet> {
        match *self {
            Method::Growing(p) => subtree_methods::growing_subtree_counted(host, p, rng, work),
            Method::Connecting(p) => {
                let rooted = host_tree::root_and_level(host, 0)?;
                work.add(host.n());
                subtree_methods::connecting_nodes_counted(&rooted, p, rng, work)
            }
            Method::Pruned(p) => subtree_methods::pruned_tree_counted(host, p, rng, work),
        }
    }
}

/// Step counts for subtree generation and for graph construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PipelineWork {
    pub subtrees: WorkCounter,
    pub build: WorkCounter,
}

impl PipelineWork {
    pub fn total(&self) -> u64 {
        self.subtrees.steps + self.build.steps
    }
}

/// Everything produced by one generator run.
#[derive(Clone, Debug)]
pub struct Generated {
    pub host: HostTree,
    pub subtrees: SubtreeSet,
    pub clique_tree: CliqueTree,
    pub graph: Graph,
    pub work: PipelineWork,
}

/// Random host tree, subtrees by `method`, intersection graph and clique
/// tree; with `connect`, the last subtree is rewritten so the graph is
/// connected and the graph rebuilt once.
pub fn chordal_gen<R: Rng + ?Sized>(
    n: usize,
    method: Method,
    rng: &mut R,
    connect: bool,
) -> Result<Generated> {
    let host = host_tree::generate_random_tree(n, rng)?;
    method.validate(n)?;
    let mut work = PipelineWork::default();
    let mut subtrees = method.generate(&host, rng, &mut work.subtrees)?;
    let (mut clique_tree, mut graph) = build(&host, &subtrees, &mut work.build);
    if connect {
        let patched = subtree_methods::ensure_connected_counted(&host, &subtrees, &graph, rng, &mut work.subtrees)?;
        if patched != subtrees {
            subtrees = patched;
            (clique_tree, graph) = build(&host, &subtrees, &mut work.build);
        }
    }
    Ok(Generated {
        host,
        subtrees,
        clique_tree,
        graph,
        work,
    })
}

fn build(host: &HostTree, subtrees: &SubtreeSet, work: &mut WorkCounter) -> (CliqueTree, Graph) {
    let lists = node_clique_lists_counted(subtrees, work);
    let tree = build_clique_tree_counted(&lists, host, work);
    let graph = build_graph_counted(&tree, subtrees.len(), work);
    (tree, graph)
}
