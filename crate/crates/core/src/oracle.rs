//! Naive reference implementations and the lower-bound construction.
//!
//! Nothing here shares code with the fast paths it is used to check.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::host_tree::HostTree;
use crate::subtree_methods::{Subtree, SubtreeSet};

pub const CHORDAL_ORACLE_LIMIT: usize = 12;
pub const CLIQUE_ORACLE_LIMIT: usize = 16;

fn bitsets(graph: &Graph) -> Vec<u32> {
    (0..graph.n())
        .map(|v| graph.neighbors(v).iter().fold(0u32, |acc, &u| acc | (1 << u)))
        .collect()
}

/// Searches every vertex subset of size at least 4 for one that induces a
/// cycle: connected and 2-regular in the induced subgraph.
pub fn brute_force_chordal(graph: &Graph) -> Result<bool> {
    let n = graph.n();
    if n > CHORDAL_ORACLE_LIMIT {
        return Err(Error::SizeLimit { n, limit: CHORDAL_ORACLE_LIMIT });
    }
    let adj = bitsets(graph);
    'subsets: for mask in 0u32..(1u32 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & mask).count_ones() != 2 {
                continue 'subsets;
            }
        }
        // 2-regular; an induced cycle iff connected.
        let start = mask.trailing_zeros();
        let mut reached = 1u32 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & mask & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        if reached == mask {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every maximal clique by subset enumeration, each sorted, in increasing
/// bitmask order.
pub fn brute_force_cliques(graph: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = graph.n();
    if n > CLIQUE_ORACLE_LIMIT {
        return Err(Error::SizeLimit { n, limit: CLIQUE_ORACLE_LIMIT });
    }
    let adj = bitsets(graph);
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut cliques = Vec::new();
    for mask in 1u32..=all {
        let mut common = all;
        let mut rest = mask;
        let mut clique = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] | (1 << v)) & mask != mask {
                clique = false;
                break;
            }
            common &= adj[v];
        }
        if clique && common & !mask == 0 {
            cliques.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    Ok(cliques)
}

/// Intersection graph by testing every pair of subtrees.
pub fn brute_force_intersection(subtrees: &SubtreeSet) -> Graph {
    let n = subtrees.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = &subtrees.subtrees[i].nodes;
            let b = &subtrees.subtrees[j].nodes;
            if a.iter().any(|x| b.contains(x)) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are distinct")
}

/// Minimal subtree containing `selected`: the union of the tree paths
/// between every pair of selected nodes.
pub fn brute_force_steiner(host: &HostTree, selected: &[usize]) -> Vec<usize> {
    let n = host.n();
    let mut keep = vec![false; n];
    for &x in selected {
        keep[x] = true;
    }
    for &a in selected {
        // Parents of a BFS from a give every path a -> b.
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([a]);
        parent[a] = a;
        while let Some(x) = queue.pop_front() {
            for &y in host.neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        for &b in selected {
            let mut x = b;
            while x != a {
                keep[x] = true;
                x = parent[x];
            }
        }
    }
    (0..n).filter(|&x| keep[x]).collect()
}

/// A path host with subtrees whose total size is `Ω(m n^{1/4})`.
#[derive(Clone, Debug)]
pub struct LowerBoundInstance {
    pub p: usize,
    pub host: HostTree,
    pub subtrees: SubtreeSet,
    pub expected_m: usize,
    pub expected_total_size: usize,
}

/// `n = p^4` path nodes `x_1..x_n`, `s = p^2 - p` copies of each singleton
/// `{x_i}` for `i < n' = p^2 + 1`, and `p^3` copies of the subpath
/// `x_{n'}..x_n`. The graph is `K_{p^3}` plus `p^2` disjoint copies of `K_s`,
/// with `m = p^6 - p^5` edges and total subtree size `p^7 - p^5 + p^4 - p^3`.
pub fn lower_bound_instance(p: usize) -> Result<LowerBoundInstance> {
    if p < 2 {
        return Err(Error::invalid(format!("p must be at least 2, got {p}")));
    }
    if p > 8 {
        return Err(Error::invalid(format!("p = {p} gives an instance too large to build")));
    }
    let n = p.pow(4);
    let n_prime = p * p + 1;
    let s = p * p - p;
    let s_last = p.pow(3);
    let host = HostTree::path(n)?;

    let mut subtrees = Vec::with_capacity(n);
    for x in 0..n_prime - 1 {
        for _ in 0..s {
            subtrees.push(Subtree { nodes: vec![x] });
        }
    }
    let tail: Vec<usize> = (n_prime - 1..n).collect();
    for _ in 0..s_last {
        subtrees.push(Subtree { nodes: tail.clone() });
    }
    let subtrees = SubtreeSet::new(n, subtrees);

    let expected_m = p.pow(6) - p.pow(5);
    let expected_total_size = p.pow(7) - p.pow(5) + p.pow(4) - p.pow(3);
    assert_eq!(subtrees.len(), n);
    assert_eq!(s * (n_prime - 1) + s_last, n);
    assert_eq!(subtrees.total_size, expected_total_size);
    assert_eq!(
        (n_prime - 1) * s * (s - 1) / 2 + s_last * (s_last - 1) / 2,
        expected_m
    );
    Ok(LowerBoundInstance {
        p,
        host,
        subtrees,
        expected_m,
        expected_total_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordal_oracle_basics() {
        assert!(!brute_force_chordal(&Graph::cycle(4)).unwrap());
        assert!(!brute_force_chordal(&Graph::cycle(7)).unwrap());
        let chorded = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        assert!(brute_force_chordal(&chorded).unwrap());
        assert!(brute_force_chordal(&Graph::complete(8)).unwrap());
        assert!(matches!(
            brute_force_chordal(&Graph::empty(13)),
            Err(Error::SizeLimit { n: 13, limit: 12 })
        ));
    }

    #[test]
    fn clique_oracle_basics() {
        assert_eq!(brute_force_cliques(&Graph::complete(3)).unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(brute_force_cliques(&Graph::empty(3)).unwrap().len(), 3);
        let p4 = brute_force_cliques(&Graph::path(4)).unwrap();
        assert_eq!(p4.len(), 3);
        assert!(p4.iter().all(|c| c.len() == 2));
        assert!(brute_force_cliques(&Graph::empty(17)).is_err());
        assert!(brute_force_cliques(&Graph::empty(0)).unwrap().is_empty());
    }

    #[test]
    fn steiner_on_a_path() {
        let host = HostTree::path(6).unwrap();
        assert_eq!(brute_force_steiner(&host, &[1, 4]), vec![1, 2, 3, 4]);
        assert_eq!(brute_force_steiner(&host, &[3]), vec![3]);
    }

    #[test]
    fn lower_bound_formulas() {
        let two = lower_bound_instance(2).unwrap();
        assert_eq!((two.host.n(), two.expected_m, two.expected_total_size), (16, 32, 104));
        let three = lower_bound_instance(3).unwrap();
        assert_eq!((three.host.n(), three.expected_m, three.expected_total_size), (81, 486, 1998));
        assert!(lower_bound_instance(1).is_err());
    }
}
