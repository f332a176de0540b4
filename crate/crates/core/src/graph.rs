//! Simple undirected graphs in compressed adjacency form.

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored as one flat neighbor array with per-vertex offsets.
/// Every neighbor list is sorted ascending, free of duplicates and
/// self-loops, and the relation is symmetric, so two graphs are equal
/// exactly when their edge sets are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// Builds a graph from an undirected edge list, rejecting self-loops,
    /// repeated edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > u32::MAX as usize {
            return Err(Error::invalid(format!("vertex count {n} exceeds u32 range")));
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut raw = Csr::with_degrees(&degree);
        for &(u, v) in edges {
            raw.push(u, v as u32);
            raw.push(v, u as u32);
        }
        let graph = raw.into_sorted();
        for v in 0..n {
            if graph.neighbors(v).windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("repeated edge at vertex {v}")));
            }
        }
        Ok(graph)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Edge density `m / (n (n - 1) / 2)`; zero when `n < 2`.
    pub fn density(&self) -> f64 {
        let n = self.n() as f64;
        if self.n() < 2 {
            0.0
        } else {
            self.m() as f64 / (n * (n - 1.0) / 2.0)
        }
    }
}

/// Adjacency under construction: rows are filled in arbitrary order and
/// sorted at the end by a transposition pass.
pub(crate) struct Csr {
    offsets: Vec<usize>,
    cursor: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Csr {
    pub(crate) fn with_degrees(degree: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(degree.len() + 1);
        let mut total = 0;
        offsets.push(0);
        for &d in degree {
            total += d;
            offsets.push(total);
        }
        let cursor = offsets[..degree.len()].to_vec();
        Csr {
            offsets,
            cursor,
            neighbors: vec![0; total],
        }
    }

    #[inline]
    pub(crate) fn push(&mut self, u: usize, v: u32) {
        let slot = self.cursor[u];
        debug_assert!(slot < self.offsets[u + 1]);
        self.neighbors[slot] = v;
        self.cursor[u] += 1;
    }

    /// Transposes the (symmetric) adjacency. Scanning rows in increasing
    /// order writes every target row in increasing order, so the result is
    /// sorted without a comparison sort.
    pub(crate) fn into_sorted(self) -> Graph {
        let n = self.offsets.len() - 1;
        debug_assert!((0..n).all(|u| self.cursor[u] == self.offsets[u + 1]));
        let mut cursor = self.offsets[..n].to_vec();
        let mut sorted = vec![0u32; self.neighbors.len()];
        for u in 0..n {
            for &v in &self.neighbors[self.offsets[u]..self.offsets[u + 1]] {
                let v = v as usize;
                sorted[cursor[v]] = u as u32;
                cursor[v] += 1;
            }
        }
        Graph {
            offsets: self.offsets,
            neighbors: sorted,
        }
    }
}
