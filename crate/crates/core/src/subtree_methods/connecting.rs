use rand::Rng;

use super::{join_minimal, sample_poisson, ConnectingParams, JoinScratch, Subtree, SubtreeSet};
use crate::error::Result;
use crate::host_tree::RootedTree;
use crate::rng;
use crate::work::WorkCounter;

/// Each subtree is the minimal subtree spanning `k_i` distinct random nodes,
/// with `k_i ~ Poisson(lambda)` clamped to `[1, n]`.
pub fn connecting_nodes<R: Rng + ?Sized>(
    rooted: &RootedTree<'_>,
    params: ConnectingParams,
    rng: &mut R,
) -> Result<SubtreeSet> {
    connecting_nodes_counted(rooted, params, rng, &mut WorkCounter::default())
}

pub fn connecting_nodes_counted<R: Rng + ?Sized>(
    rooted: &RootedTree<'_>,
    params: ConnectingParams,
    rng: &mut R,
    work: &mut WorkCounter,
) -> Result<SubtreeSet> {
    params.validate()?;
    let n = rooted.base.n();
    let mut pool: Vec<usize> = (0..n).collect();
    let mut scratch = JoinScratch::new(rooted);
    work.add(2 * n);

    let mut subtrees = Vec::with_capacity(n);
    for _ in 0..n {
        let k = sample_poisson(params.lambda, n, rng)?;
        // Partial Fisher-Yates: pool[..k] becomes a uniform k-subset.
        for j in 0..k {
            let r = rng::between(rng, j, n);
            pool.swap(j, r);
        }
        work.add(2 * k);
        let nodes = join_minimal(rooted, &pool[..k], &mut scratch, work);
        subtrees.push(Subtree { nodes });
    }
    Ok(SubtreeSet::new(n, subtrees))
}
