use rand::Rng;

use super::{GrowingParams, Subtree, SubtreeSet};
use crate::error::Result;
use crate::host_tree::HostTree;
use crate::rng;
use crate::work::WorkCounter;

/// Subtrees grown from a uniform start node by `k_i - 1` boundary steps,
/// `k_i` uniform in `1..=k`. Mean size is `(k + 1) / 2`.
pub fn growing_subtree<R: Rng + ?Sized>(
    host: &HostTree,
    params: GrowingParams,
    rng: &mut R,
) -> Result<SubtreeSet> {
    growing_subtree_counted(host, params, rng, &mut WorkCounter::default())
}

pub fn growing_subtree_counted<R: Rng + ?Sized>(
    host: &HostTree,
    params: GrowingParams,
    rng: &mut R,
    work: &mut WorkCounter,
) -> Result<SubtreeSet> {
    let n = host.n();
    params.validate(n)?;

    // Per-node neighbor arrays; `used[x]` splits the neighbors already taken
    // from x (prefix) from the ones still available (suffix).
    let mut adjacency: Vec<Vec<usize>> = (0..n).map(|x| host.neighbors(x).to_vec()).collect();
    let mut used = vec![0usize; n];
    // `owner[x] == i + 1` while x belongs to subtree i.
    let mut owner = vec![0usize; n];
    work.add(2 * n);

    let mut subtrees = Vec::with_capacity(n);
    for i in 0..n {
        let tag = i + 1;
        let start = rng::below(rng, n);
        let target = rng::between(rng, 1, params.k + 1);

        // nodes[..exhausted] have no neighbor outside the subtree.
        let mut nodes = Vec::with_capacity(target);
        let mut exhausted = 0;
        nodes.push(start);
        owner[start] = tag;

        while nodes.len() < target {
            debug_assert!(exhausted < nodes.len());
            let j = rng::between(rng, exhausted, nodes.len());
            let y = nodes[j];
            let degree = adjacency[y].len();
            work.tick();
            if used[y] == degree {
                nodes.swap(exhausted, j);
                exhausted += 1;
                continue;
            }
            let pick = rng::between(rng, used[y], degree);
            adjacency[y].swap(used[y], pick);
            let z = adjacency[y][used[y]];
            used[y] += 1;
            if used[y] == degree {
                nodes.swap(exhausted, j);
                exhausted += 1;
            }
            // The only neighbor of y that can already be inside is the node y
            // was grown from; it is now parked in y's used prefix.
            if owner[z] == tag {
                continue;
            }
            owner[z] = tag;
            nodes.push(z);
            // A leaf's single neighbor is y, so it can never grow the subtree.
            if adjacency[z].len() == 1 {
                let last = nodes.len() - 1;
                nodes.swap(exhausted, last);
                exhausted += 1;
            }
        }
        for &x in &nodes {
            used[x] = 0;
        }
        work.add(2 * nodes.len());
        subtrees.push(Subtree { nodes });
    }
    Ok(SubtreeSet::new(n, subtrees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host_tree::generate_random_tree;

    #[test]
    fn k_one_gives_singletons() {
        let host = generate_random_tree(50, &mut rng::from_seed(1)).unwrap();
        let set = growing_subtree(&host, GrowingParams { k: 1 }, &mut rng::from_seed(2)).unwrap();
        assert_eq!(set.len(), 50);
        assert!(set.subtrees.iter().all(|t| t.len() == 1));
        assert_eq!(set.total_size, 50);
    }

    #[test]
    fn full_k_on_a_path_gives_subpaths() {
        let host = HostTree::path(30).unwrap();
        let set = growing_subtree(&host, GrowingParams { k: 30 }, &mut rng::from_seed(9)).unwrap();
        for t in &set.subtrees {
            let mut nodes = t.nodes.clone();
            nodes.sort_unstable();
            assert!(nodes.windows(2).all(|w| w[1] == w[0] + 1), "{nodes:?}");
        }
        set.validate(&host).unwrap();
    }

    #[test]
    fn whole_tree_is_reachable() {
        let mut full = 0;
        for seed in 0..20 {
            let host = generate_random_tree(6, &mut rng::from_seed(seed)).unwrap();
            let set = growing_subtree(&host, GrowingParams { k: 6 }, &mut rng::from_seed(seed + 50))
                .unwrap();
            set.validate(&host).unwrap();
            full += set.subtrees.iter().filter(|t| t.len() == 6).count();
        }
        assert!(full > 0);
    }

    #[test]
    fn rejects_out_of_range_k() {
        let host = HostTree::path(4).unwrap();
        let mut r = rng::from_seed(0);
        assert!(growing_subtree(&host, GrowingParams { k: 0 }, &mut r).is_err());
        assert!(growing_subtree(&host, GrowingParams { k: 5 }, &mut r).is_err());
    }

    #[test]
    fn mean_size_tracks_half_of_k_plus_one() {
        let mut sizes = 0usize;
        let mut count = 0usize;
        for seed in 0..10 {
            let host = generate_random_tree(1000, &mut rng::from_seed(seed)).unwrap();
            let set =
                growing_subtree(&host, GrowingParams { k: 33 }, &mut rng::from_seed(seed + 100))
                    .unwrap();
            sizes += set.total_size;
            count += set.len();
        }
        let mean = sizes as f64 / count as f64;
        assert!((mean - 17.0).abs() <= 1.7, "mean subtree size {mean}");
    }
}
