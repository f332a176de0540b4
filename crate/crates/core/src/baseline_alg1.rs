//! Incremental generator driven by a perfect elimination order.
//!
//! Vertices arrive one at a time. Each new vertex draws a seed count
//! uniformly from `1..=ceil(ubc * t)`, `t` the number of existing vertices,
//! and picks that many distinct random existing vertices as its
//! neighborhood. Fill edges then make that neighborhood a clique. Fill is propagated so that the reverse arrival
//! order stays a perfect elimination order: every vertex's earlier
//! neighbors must form a clique, so when vertex `u` receives new earlier
//! neighbors, its whole earlier neighborhood has to become a clique, which
//! pushes the requirement to the latest vertex of that neighborhood, and so
//! on down the arrival order. The walk stops as soon as a vertex gains no
//! new edge.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Alg1Params {
    pub n: usize,
    /// Upper bound coefficient in `[0, 1]`.
    pub ubc: f64,
}

impl Alg1Params {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.ubc) {
            return Err(Error::invalid(format!("ubc must lie in [0, 1], got {}", self.ubc)));
        }
        Ok(())
    }

    /// Largest seed count for a vertex arriving after `existing` others:
    /// `ceil(ubc * existing)`, clamped to `[1, existing]`.
    pub fn seed_bound(&self, existing: usize) -> usize {
        seed_bound(self.ubc, existing)
    }
}

pub(crate) fn seed_bound(ubc: f64, existing: usize) -> usize {
    ((ubc * existing as f64 - 1e-9).ceil().max(0.0) as usize).clamp(1, existing.max(1))
}

pub fn generate_alg1<R: Rng + ?Sized>(params: Alg1Params, rng: &mut R) -> Result<Graph> {
    params.validate()?;
    let n = params.n;
    // earlier[u]: neighbors of u that arrived before u; always a clique.
    let mut earlier: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut pool: Vec<usize> = Vec::with_capacity(n);
    let mut mark = vec![usize::MAX; n];
    let mut stamp = 0usize;
    let mut pending: Vec<u32> = Vec::new();

    for t in 0..n {
        if t > 0 {
            let c = rng::between(rng, 1, params.seed_bound(t) + 1);
            for j in 0..c {
                let r = rng::between(rng, j, t);
                pool.swap(j, r);
            }
            earlier[t] = pool[..c].iter().map(|&v| v as u32).collect();

            // Make `pending` a clique, latest vertex first.
            pending.clear();
            pending.extend_from_slice(&earlier[t]);
            while pending.len() > 1 {
                let (top_idx, &top) = pending
                    .iter()
                    .enumerate()
                    .max_by_key(|&(_, &v)| v)
                    .expect("non-empty");
                pending.swap_remove(top_idx);
                let u = top as usize;
                stamp += 1;
                for &w in &earlier[u] {
                    mark[w as usize] = stamp;
                }
                let before = earlier[u].len();
                for &w in &pending {
                    if mark[w as usize] != stamp {
                        earlier[u].push(w);
                    }
                }
                if earlier[u].len() == before {
                    break;
                }
                pending.clear();
                pending.extend_from_slice(&earlier[u]);
            }
        }
        pool.push(t);
    }

    let edges: Vec<(usize, usize)> = earlier
        .iter()
        .enumerate()
        .flat_map(|(u, e)| e.iter().map(move |&w| (w as usize, u)))
        .collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_analysis::{connected_components, is_chordal, run_report};

    #[test]
    fn zero_coefficient_gives_a_tree() {
        let g = generate_alg1(Alg1Params { n: 200, ubc: 0.0 }, &mut rng::from_seed(1)).unwrap();
        assert_eq!(g.m(), 199);
        assert!(is_chordal(&g));
        assert_eq!(connected_components(&g).0, 1);
    }

    #[test]
    fn unit_coefficient_is_dense() {
        let g = generate_alg1(Alg1Params { n: 40, ubc: 1.0 }, &mut rng::from_seed(2)).unwrap();
        assert!(is_chordal(&g));
        assert!(g.density() > 0.5, "{}", g.density());
    }

    #[test]
    fn outputs_are_chordal_and_connected() {
        for (seed, ubc) in [(3, 0.01), (4, 0.05), (5, 0.2), (6, 0.5)] {
            let g = generate_alg1(Alg1Params { n: 300, ubc }, &mut rng::from_seed(seed)).unwrap();
            assert!(is_chordal(&g), "ubc {ubc}");
            let report = run_report(&g).unwrap();
            assert_eq!(report.component_count, 1.0);
            assert!(report.clique_min >= 2.0);
        }
    }

    #[test]
    fn seed_bounds() {
        assert_eq!(seed_bound(0.0, 10), 1);
        assert_eq!(seed_bound(0.5, 0), 1);
        assert_eq!(seed_bound(0.3, 10), 3);
        assert_eq!(seed_bound(0.31, 10), 4);
        assert_eq!(seed_bound(0.0013, 769), 1);
        assert_eq!(seed_bound(0.0013, 770), 2);
        assert_eq!(seed_bound(1.0, 7), 7);
    }

    #[test]
    fn rejects_bad_parameters() {
        let mut r = rng::from_seed(0);
        assert!(generate_alg1(Alg1Params { n: 0, ubc: 0.5 }, &mut r).is_err());
        assert!(generate_alg1(Alg1Params { n: 5, ubc: 1.5 }, &mut r).is_err());
        assert_eq!(generate_alg1(Alg1Params { n: 1, ubc: 0.5 }, &mut r).unwrap().m(), 0);
    }
}
