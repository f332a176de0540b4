use rand::Rng;

use super::{PrunedParams, Subtree, SubtreeSet};
use crate::error::Result;
use crate::host_tree::{self, HostTree};
use crate::rng;
use crate::work::WorkCounter;

/// Number of edges deleted from a copy of an `n`-node tree: `floor((n-1) f)`.
pub fn deleted_edge_count(n: usize, f: f64) -> usize {
    (((n - 1) as f64) * f + 1e-9).floor() as usize
}

/// How many of `distinct` component sizes (largest first) are eligible under
/// barrier `s`: `ceil(distinct (1 - s))`, never less than one.
pub fn eligible_size_count(distinct: usize, s: f64) -> usize {
    (((distinct as f64) * (1.0 - s) - 1e-9).ceil() as usize).clamp(1, distinct)
}

/// Each subtree is one component of the host tree after deleting
/// `floor((n-1) f)` random edges. A size is drawn uniformly from the largest
/// `ceil(q (1 - s))` of the `q` distinct component sizes, then a component of
/// that size is drawn uniformly. O(n) per subtree.
pub fn pruned_tree<R: Rng + ?Sized>(
    host: &HostTree,
    params: PrunedParams,
    rng: &mut R,
) -> Result<SubtreeSet> {
    pruned_tree_counted(host, params, rng, &mut WorkCounter::default())
}

pub fn pruned_tree_counted<R: Rng + ?Sized>(
    host: &HostTree,
    params: PrunedParams,
    rng: &mut R,
    work: &mut WorkCounter,
) -> Result<SubtreeSet> {
    params.validate()?;
    let n = host.n();
    // Tree edges are named by their lower endpoint under a fixed rooting, and
    // BFS order lets components be labeled in one sweep.
    let rooted = host_tree::root_and_level(host, 0)?;
    let mut edge_pool: Vec<usize> = rooted.order[1..].to_vec();
    let deletions = deleted_edge_count(n, params.f);

    let mut cut = vec![0usize; n];
    let mut component = vec![0usize; n];
    let mut comp_size: Vec<usize> = Vec::with_capacity(deletions + 1);
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut sizes: Vec<usize> = Vec::new();

    let mut subtrees = Vec::with_capacity(n);
    for i in 0..n {
        let tag = i + 1;
        for j in 0..deletions {
            let r = rng::between(rng, j, edge_pool.len());
            edge_pool.swap(j, r);
            cut[edge_pool[j]] = tag;
        }

        comp_size.clear();
        for &x in &rooted.order {
            let c = if x == rooted.root || cut[x] == tag {
                comp_size.push(0);
                comp_size.len() - 1
            } else {
                component[rooted.parent[x]]
            };
            component[x] = c;
            comp_size[c] += 1;
        }
        debug_assert_eq!(comp_size.len(), deletions + 1);

        for (c, &size) in comp_size.iter().enumerate() {
            by_size[size].push(c);
        }
        sizes.clear();
        sizes.extend((1..=n).filter(|&t| !by_size[t].is_empty()));
        let eligible = eligible_size_count(sizes.len(), params.s);
        let size = sizes[sizes.len() - eligible + rng::below(rng, eligible)];
        let bucket = &by_size[size];
        let chosen = bucket[rng::below(rng, bucket.len())];

        let nodes: Vec<usize> = (0..n).filter(|&x| component[x] == chosen).collect();
        for &size in &sizes {
            by_size[size].clear();
        }
        work.add(deletions + 4 * n);
        subtrees.push(Subtree { nodes });
    }
    Ok(SubtreeSet::new(n, subtrees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host_tree::generate_random_tree;

    #[test]
    fn no_deletions_gives_the_whole_tree() {
        let host = generate_random_tree(25, &mut rng::from_seed(3)).unwrap();
        let set = pruned_tree(&host, PrunedParams { f: 0.0, s: 0.3 }, &mut rng::from_seed(4)).unwrap();
        assert!(set.subtrees.iter().all(|t| t.len() == 25));
    }

    #[test]
    fn counts_for_five_nodes() {
        assert_eq!(deleted_edge_count(5, 0.8), 3);
        assert_eq!(deleted_edge_count(1000, 0.7), 699);
        assert_eq!(deleted_edge_count(11, 0.1), 1);
        let host = generate_random_tree(5, &mut rng::from_seed(5)).unwrap();
        let set = pruned_tree(&host, PrunedParams { f: 0.8, s: 0.0 }, &mut rng::from_seed(6)).unwrap();
        set.validate(&host).unwrap();
        // 4 components of 5 nodes: sizes are {1,1,1,2}.
        assert!(set.subtrees.iter().all(|t| (1..=2).contains(&t.len())));
    }

    #[test]
    fn eligible_band() {
        assert_eq!(eligible_size_count(10, 0.7), 3);
        assert_eq!(eligible_size_count(10, 1.0), 1);
        assert_eq!(eligible_size_count(10, 0.0), 10);
        assert_eq!(eligible_size_count(1, 0.99), 1);
        assert_eq!(eligible_size_count(7, 0.5), 4);
    }

    #[test]
    fn barrier_one_picks_only_largest_components() {
        let host = HostTree::path(9).unwrap();
        for seed in 0..20 {
            let set = pruned_tree(&host, PrunedParams { f: 0.5, s: 1.0 }, &mut rng::from_seed(seed))
                .unwrap();
            set.validate(&host).unwrap();
            // Every subtree has at least the mean component size.
            assert!(set.subtrees.iter().all(|t| t.len() * 5 >= 9));
        }
    }

    #[test]
    fn rejects_bad_fractions() {
        let host = HostTree::path(3).unwrap();
        let mut r = rng::from_seed(0);
        assert!(pruned_tree(&host, PrunedParams { f: 1.0, s: 0.5 }, &mut r).is_err());
        assert!(pruned_tree(&host, PrunedParams { f: -0.1, s: 0.5 }, &mut r).is_err());
        assert!(pruned_tree(&host, PrunedParams { f: 0.5, s: 1.1 }, &mut r).is_err());
    }
}
