use std::fmt::Write as _;

use super::DirectedGraph;
use crate::error::{Error, Result};

/// Node indices sorted by ascending score, ties kept in index order.
///
/// Angles are sorted as plain reals; no circular canonicalization is applied.
pub fn apply_ordering(g: &DirectedGraph, score: &[f64]) -> Result<Vec<usize>> {
    g.check_len(score.len())?;
    let mut order: Vec<usize> = (0..score.len()).collect();
    order.sort_by(|&a, &b| score[a].total_cmp(&score[b]));
    Ok(order)
}

/// CSV `original_label,rank` in node-index order.
pub fn permutation_csv(g: &DirectedGraph, order: &[usize]) -> Result<String> {
    g.check_len(order.len())?;
    let mut rank = vec![usize::MAX; order.len()];
    for (r, &v) in order.iter().enumerate() {
        if v >= rank.len() || rank[v] != usize::MAX {
            return Err(Error::InvalidParameter("order is not a permutation".into()));
        }
        rank[v] = r;
    }
    let mut out = String::from("original_label,rank\n");
    for (v, r) in rank.iter().enumerate() {
        let _ = writeln!(out, "{},{}", g.label(v), r);
    }
    Ok(out)
}

/// Reordered adjacency as sparse `row,col,value` triples, where row and col
/// are ranks under `order`.
pub fn reordered_triples_csv(g: &DirectedGraph, order: &[usize]) -> Result<String> {
    g.check_len(order.len())?;
    let mut rank = vec![0; order.len()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut triples: Vec<(usize, usize, f64)> = g
        .edges()
        .iter()
        .map(|e| (rank[e.src], rank[e.dst], e.weight))
        .collect();
    triples.sort_by_key(|t| (t.0, t.1));
    let mut out = String::from("row,col,value\n");
    for (r, c, w) in triples {
        let _ = writeln!(out, "{r},{c},{w}");
    }
    Ok(out)
}
