//! Verification and statistics for generated graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Width of the clique-size histogram bins.
pub const BIN_WIDTH: usize = 5;

/// A vertex ordering together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectEliminationOrder {
    pub order: Vec<usize>,
    pub position: Vec<usize>,
}

impl PerfectEliminationOrder {
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        PerfectEliminationOrder { order, position }
    }
}

const NIL: usize = usize::MAX;

/// Maximum cardinality search, reversed into an elimination ordering.
///
/// Unvisited vertices sit in doubly linked buckets keyed by their number of
/// visited neighbors; the next vertex is taken from the fullest bucket.
/// O(n + m). The result is a perfect elimination order iff the graph is
/// chordal.
pub fn mcs_order(graph: &Graph) -> PerfectEliminationOrder {
    let n = graph.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut head = vec![NIL; n + 1];
    let mut next = vec![NIL; n];
    let mut prev = vec![NIL; n];

    let insert = |v: usize, w: usize, head: &mut [usize], next: &mut [usize], prev: &mut [usize]| {
        next[v] = head[w];
        prev[v] = NIL;
        if head[w] != NIL {
            prev[head[w]] = v;
        }
        head[w] = v;
    };
    let remove = |v: usize, w: usize, head: &mut [usize], next: &mut [usize], prev: &mut [usize]| {
        if prev[v] != NIL {
            next[prev[v]] = next[v];
        } else {
            head[w] = next[v];
        }
        if next[v] != NIL {
            prev[next[v]] = prev[v];
        }
    };

    for v in (0..n).rev() {
        insert(v, 0, &mut head, &mut next, &mut prev);
    }
    let mut visit = Vec::with_capacity(n);
    let mut top = 0usize;
    for _ in 0..n {
        while head[top] == NIL {
            top -= 1;
        }
        let v = head[top];
        remove(v, top, &mut head, &mut next, &mut prev);
        done[v] = true;
        visit.push(v);
        for &u in graph.neighbors(v) {
            let u = u as usize;
            if done[u] {
                continue;
            }
            remove(u, weight[u], &mut head, &mut next, &mut prev);
            weight[u] += 1;
            insert(u, weight[u], &mut head, &mut next, &mut prev);
            top = top.max(weight[u]);
        }
    }
    visit.reverse();
    PerfectEliminationOrder::from_order(visit)
}

/// Checks that every vertex's later neighbors form a clique.
///
/// Only the earliest later neighbor `f(v)` is tested directly: the remaining
/// later neighbors of `v` must all be adjacent to `f(v)`. Those requirements
/// are grouped by `f(v)` and checked with one stamping pass, O(n + m).
pub fn is_perfect_elimination_order(graph: &Graph, peo: &PerfectEliminationOrder) -> bool {
    let n = graph.n();
    let pos = &peo.position;
    let mut follower = vec![NIL; n];
    let mut required: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let f = graph
            .neighbors(v)
            .iter()
            .map(|&u| u as usize)
            .filter(|&u| pos[u] > pos[v])
            .min_by_key(|&u| pos[u]);
        if let Some(f) = f {
            follower[v] = f;
            for &u in graph.neighbors(v) {
                let u = u as usize;
                if pos[u] > pos[v] && u != f {
                    required[f].push(u);
                }
            }
        }
    }
    let mut mark = vec![NIL; n];
    for f in 0..n {
        if required[f].is_empty() {
            continue;
        }
        for &u in graph.neighbors(f) {
            mark[u as usize] = f;
        }
        if required[f].iter().any(|&u| mark[u] != f) {
            return false;
        }
    }
    true
}

pub fn is_chordal(graph: &Graph) -> bool {
    is_perfect_elimination_order(graph, &mcs_order(graph))
}

/// All maximal cliques of a chordal graph, each sorted ascending.
///
/// With a perfect elimination order, every maximal clique is `{v} ∪ L(v)` for
/// some `v`, where `L(v)` is the set of later neighbors. A candidate is
/// non-maximal exactly when some `u` with follower `v` has
/// `|L(u)| = |L(v)| + 1`.
pub fn maximal_cliques(graph: &Graph) -> Result<Vec<Vec<usize>>> {
    let peo = mcs_order(graph);
    if !is_perfect_elimination_order(graph, &peo) {
        return Err(Error::UnsupportedInput("maximal_cliques needs a chordal graph".into()));
    }
    let n = graph.n();
    let pos = &peo.position;
    let mut later = vec![0usize; n];
    let mut follower = vec![NIL; n];
    for v in 0..n {
        let mut best = NIL;
        for &u in graph.neighbors(v) {
            let u = u as usize;
            if pos[u] > pos[v] {
                later[v] += 1;
                if best == NIL || pos[u] < pos[best] {
                    best = u;
                }
            }
        }
        follower[v] = best;
    }
    let mut maximal = vec![true; n];
    for u in 0..n {
        let v = follower[u];
        if v != NIL && later[u] == later[v] + 1 {
            maximal[v] = false;
        }
    }
    let mut cliques = Vec::new();
    for &v in &peo.order {
        if !maximal[v] {
            continue;
        }
        let mut clique: Vec<usize> = graph
            .neighbors(v)
            .iter()
            .map(|&u| u as usize)
            .filter(|&u| pos[u] > pos[v])
            .collect();
        clique.push(v);
        clique.sort_unstable();
        cliques.push(clique);
    }
    Ok(cliques)
}

/// Component count and per-vertex component labels (BFS).
pub fn connected_components(graph: &Graph) -> (usize, Vec<usize>) {
    components_without(graph, NIL)
}

/// Components of `graph - skip`; `skip` itself is labeled `usize::MAX`.
pub fn components_without(graph: &Graph, skip: usize) -> (usize, Vec<usize>) {
    let n = graph.n();
    let mut label = vec![NIL; n];
    let mut count = 0;
    let mut queue = Vec::new();
    for s in 0..n {
        if s == skip || label[s] != NIL {
            continue;
        }
        label[s] = count;
        queue.clear();
        queue.push(s);
        while let Some(v) = queue.pop() {
            for &u in graph.neighbors(v) {
                let u = u as usize;
                if u != skip && label[u] == NIL {
                    label[u] = count;
                    queue.push(u);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

/// One row of experiment statistics. Counts are stored as `f64` so that an
/// aggregate of several runs has the same shape.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub n: usize,
    pub m: f64,
    pub density: f64,
    pub component_count: f64,
    pub clique_count: f64,
    pub clique_min: f64,
    pub clique_max: f64,
    pub clique_mean: f64,
    /// Population standard deviation of maximal-clique sizes.
    pub clique_sd: f64,
    /// `histogram[j]` counts cliques with size in `5j+1 ..= 5j+5`.
    pub histogram: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub bin_start: usize,
    pub bin_end: usize,
    pub count: f64,
}

impl RunReport {
    pub fn histogram_bins(&self) -> Vec<HistogramBin> {
        self.histogram
            .iter()
            .enumerate()
            .map(|(j, &count)| HistogramBin {
                bin_start: BIN_WIDTH * j + 1,
                bin_end: BIN_WIDTH * (j + 1),
                count,
            })
            .collect()
    }
}

pub fn run_report(graph: &Graph) -> Result<RunReport> {
    let cliques = maximal_cliques(graph)?;
    let sizes: Vec<usize> = cliques.iter().map(Vec::len).collect();
    Ok(report_from_clique_sizes(graph, &sizes))
}

/// Report for `graph` given the sizes of its maximal cliques.
pub fn report_from_clique_sizes(graph: &Graph, sizes: &[usize]) -> RunReport {
    let count = sizes.len();
    let (mut min, mut max, mut sum) = (usize::MAX, 0usize, 0usize);
    let mut histogram = Vec::new();
    for &s in sizes {
        min = min.min(s);
        max = max.max(s);
        sum += s;
        let bin = (s.max(1) - 1) / BIN_WIDTH;
        if histogram.len() <= bin {
            histogram.resize(bin + 1, 0.0);
        }
        histogram[bin] += 1.0;
    }
    let (mean, sd) = if count == 0 {
        (0.0, 0.0)
    } else {
        let mean = sum as f64 / count as f64;
        let var = sizes.iter().map(|&s| (s as f64 - mean).powi(2)).sum::<f64>() / count as f64;
        (mean, var.sqrt())
    };
    RunReport {
        n: graph.n(),
        m: graph.m() as f64,
        density: graph.density(),
        component_count: connected_components(graph).0 as f64,
        clique_count: count as f64,
        clique_min: if count == 0 { 0.0 } else { min as f64 },
        clique_max: max as f64,
        clique_mean: mean,
        clique_sd: sd,
        histogram,
    }
}

/// Field-wise means; histograms are padded with zeros to a common length.
pub fn aggregate_reports(reports: &[RunReport]) -> Result<RunReport> {
    let first = reports
        .first()
        .ok_or_else(|| Error::invalid("cannot aggregate an empty list of reports"))?;
    if reports.iter().any(|r| r.n != first.n) {
        return Err(Error::invalid("reports disagree on n"));
    }
    let k = reports.len() as f64;
    let mean = |field: fn(&RunReport) -> f64| reports.iter().map(field).sum::<f64>() / k;
    let bins = reports.iter().map(|r| r.histogram.len()).max().unwrap_or(0);
    let mut histogram = vec![0.0; bins];
    for r in reports {
        for (acc, &c) in histogram.iter_mut().zip(&r.histogram) {
            *acc += c;
        }
    }
    for acc in &mut histogram {
        *acc /= k;
    }
    Ok(RunReport {
        n: first.n,
        m: mean(|r| r.m),
        density: mean(|r| r.density),
        component_count: mean(|r| r.component_count),
        clique_count: mean(|r| r.clique_count),
        clique_min: mean(|r| r.clique_min),
        clique_max: mean(|r| r.clique_max),
        clique_mean: mean(|r| r.clique_mean),
        clique_sd: mean(|r| r.clique_sd),
        histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host_tree::generate_random_tree;
    use crate::oracle;
    use crate::rng;

    #[test]
    fn complete_graph_orders_are_peos() {
        let g = Graph::complete(6);
        assert!(is_perfect_elimination_order(&g, &mcs_order(&g)));
        let reversed = PerfectEliminationOrder::from_order((0..6).rev().collect());
        assert!(is_perfect_elimination_order(&g, &reversed));
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        let g = Graph::cycle(4);
        assert!(!is_perfect_elimination_order(&g, &mcs_order(&g)));
        assert!(!is_chordal(&g));
        assert!(matches!(maximal_cliques(&g), Err(Error::UnsupportedInput(_))));
        let chorded = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&chorded));
    }

    #[test]
    fn random_trees_are_chordal() {
        for seed in 0..50 {
            let t = generate_random_tree(60, &mut rng::from_seed(seed)).unwrap();
            let g = Graph::from_edges(60, t.edges()).unwrap();
            assert!(is_chordal(&g));
            assert_eq!(maximal_cliques(&g).unwrap().len(), 59);
        }
    }

    #[test]
    fn cliques_of_path_and_complete() {
        assert_eq!(maximal_cliques(&Graph::path(3)).unwrap().len(), 2);
        let mut cl = maximal_cliques(&Graph::path(3)).unwrap();
        cl.sort();
        assert_eq!(cl, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(maximal_cliques(&Graph::complete(7)).unwrap(), vec![(0..7).collect::<Vec<_>>()]);
        assert_eq!(maximal_cliques(&Graph::empty(3)).unwrap().len(), 3);
    }

    #[test]
    fn component_counts() {
        assert_eq!(connected_components(&Graph::complete(5)).0, 1);
        assert_eq!(connected_components(&Graph::empty(7)).0, 7);
        let inst = oracle::lower_bound_instance(2).unwrap();
        let g = crate::intersection_builder::intersection_graph(&inst.host, &inst.subtrees);
        assert_eq!(connected_components(&g).0, 5);
        let (count, labels) = components_without(&Graph::path(3), 1);
        assert_eq!(count, 2);
        assert_eq!(labels[1], usize::MAX);
    }

    #[test]
    fn report_of_k5() {
        let r = run_report(&Graph::complete(5)).unwrap();
        assert_eq!(r.density, 1.0);
        assert_eq!(r.clique_count, 1.0);
        assert_eq!((r.clique_min, r.clique_max, r.clique_mean, r.clique_sd), (5.0, 5.0, 5.0, 0.0));
        assert_eq!(r.histogram, vec![1.0]);
        assert_eq!(r.component_count, 1.0);
    }

    #[test]
    fn report_of_lower_bound_instance() {
        let inst = oracle::lower_bound_instance(2).unwrap();
        let g = crate::intersection_builder::intersection_graph(&inst.host, &inst.subtrees);
        let r = run_report(&g).unwrap();
        assert_eq!(r.clique_count, 5.0);
        assert!((r.clique_mean - 3.2).abs() < 1e-12);
        assert_eq!((r.clique_min, r.clique_max), (2.0, 8.0));
        // sizes {2,2,2,2,8}: variance = (4 * 1.44 + 23.04) / 5 = 5.76
        assert!((r.clique_sd - 2.4).abs() < 1e-12);
        assert_eq!(r.histogram, vec![4.0, 1.0]);
        let bins = r.histogram_bins();
        assert_eq!((bins[1].bin_start, bins[1].bin_end), (6, 10));
    }

    #[test]
    fn aggregation() {
        let a = run_report(&Graph::complete(5)).unwrap();
        assert_eq!(aggregate_reports(std::slice::from_ref(&a)).unwrap(), a);
        let mut b = a.clone();
        let mut a2 = a.clone();
        a2.m = 10.0;
        b.m = 20.0;
        b.histogram = vec![1.0, 4.0];
        let agg = aggregate_reports(&[a2, b]).unwrap();
        assert_eq!(agg.m, 15.0);
        assert_eq!(agg.histogram, vec![1.0, 2.0]);
        assert!(aggregate_reports(&[]).is_err());
    }
}
