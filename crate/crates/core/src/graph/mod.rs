//! Directed graph representation, edge-list ingestion and preprocessing.
//!
//! Nodes are dense indices `0..n`; every node also carries a string label so
//! that reports can refer to the identifiers used in the input file.

mod components;
mod edgelist;
mod ordering;
mod symmetric;

pub use components::{
    largest_scc, largest_wcc, strongly_connected_components, weak_components, Component,
};
pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list, ParsedEdgeList, WeightMode};
pub use ordering::{apply_ordering, permutation_csv, reordered_triples_csv};
pub use symmetric::{symmetrize, SymmetrizedView};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// One directed edge. Unweighted graphs store `weight == 1.0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: f64,
}

/// A simple directed graph: no self-loops, at most one edge per ordered pair,
/// and weights (when present) strictly inside `(0, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectedGraph {
    labels: Vec<String>,
    // sorted by (src, dst)
    edges: Vec<Edge>,
    weighted: bool,
}

impl DirectedGraph {
    /// Unweighted graph with labels `"0"`, `"1"`, ... Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels(default_labels(n), edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut list = Vec::with_capacity(edges.len());
        for &(src, dst) in edges {
            check_edge(src, dst, n)?;
            list.push(Edge {
                src,
                dst,
                weight: 1.0,
            });
        }
        list.sort_by_key(|e| (e.src, e.dst));
        list.dedup_by_key(|e| (e.src, e.dst));
        Ok(Self {
            labels,
            edges: list,
            weighted: false,
        })
    }

    /// Weighted graph; duplicates and weights outside `(0, 1)` are rejected.
    pub fn weighted(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        Self::weighted_with_labels(default_labels(n), edges)
    }

    pub fn weighted_with_labels(
        labels: Vec<String>,
        edges: &[(usize, usize, f64)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut list = Vec::with_capacity(edges.len());
        for &(src, dst, weight) in edges {
            check_edge(src, dst, n)?;
            if !(weight > 0.0 && weight < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "weight {weight} on edge {src} -> {dst} outside (0, 1)"
                )));
            }
            list.push(Edge { src, dst, weight });
        }
        list.sort_by_key(|e| (e.src, e.dst));
        if let Some(w) = list
            .windows(2)
            .find(|w| (w[0].src, w[0].dst) == (w[1].src, w[1].dst))
        {
            return Err(Error::InvalidParameter(format!(
                "duplicate weighted edge {} -> {}",
                w[0].src, w[0].dst
            )));
        }
        Ok(Self {
            labels,
            edges: list,
            weighted: true,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    fn find(&self, src: usize, dst: usize) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&(src, dst), |e| (e.src, e.dst))
            .ok()
            .map(|k| &self.edges[k])
    }

    pub fn has_edge(&self, src: usize, dst: usize) -> bool {
        self.find(src, dst).is_some()
    }

    pub fn weight(&self, src: usize, dst: usize) -> Option<f64> {
        self.find(src, dst).map(|e| e.weight)
    }

    /// Row-major `n * n` presence mask, `mask[i * n + j] == A_ij != 0`.
    pub fn edge_mask(&self) -> Vec<bool> {
        let n = self.n();
        let mut mask = vec![false; n * n];
        for e in &self.edges {
            mask[e.src * n + e.dst] = true;
        }
        mask
    }

    /// Dense adjacency matrix with `A_ij = w_ij` (1 for unweighted edges).
    pub fn adjacency(&self) -> DMatrix<f64> {
        let n = self.n();
        let mut a = DMatrix::zeros(n, n);
        for e in &self.edges {
            a[(e.src, e.dst)] = e.weight;
        }
        a
    }

    /// Induced subgraph on `nodes` (kept in the given order).
    pub fn induced_subgraph(&self, nodes: &[usize]) -> DirectedGraph {
        let mut position = vec![usize::MAX; self.n()];
        for (new, &old) in nodes.iter().enumerate() {
            position[old] = new;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| position[e.src] != usize::MAX && position[e.dst] != usize::MAX)
            .map(|e| Edge {
                src: position[e.src],
                dst: position[e.dst],
                weight: e.weight,
            })
            .collect();
        edges.sort_by_key(|e| (e.src, e.dst));
        DirectedGraph {
            labels: nodes.iter().map(|&i| self.labels[i].clone()).collect(),
            edges,
            weighted: self.weighted,
        }
    }

    /// Same edge set with every weight dropped.
    pub fn unweighted(&self) -> DirectedGraph {
        DirectedGraph {
            labels: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge { weight: 1.0, ..*e })
                .collect(),
            weighted: false,
        }
    }

    pub(crate) fn require_unweighted(&self, what: &'static str) -> Result<()> {
        if self.weighted {
            Err(Error::WeightedUnsupported(what))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n() {
            Err(Error::DimensionMismatch {
                expected: self.n(),
                got: len,
            })
        } else {
            Ok(())
        }
    }
}

fn check_edge(src: usize, dst: usize, n: usize) -> Result<()> {
    if src >= n || dst >= n || src == dst {
        return Err(Error::InvalidEdge { src, dst, n });
    }
    Ok(())
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}
