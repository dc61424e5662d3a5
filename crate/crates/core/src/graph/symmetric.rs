use nalgebra::DMatrix;

use super::DirectedGraph;
use crate::error::Result;

/// Symmetric quantities shared by the magnetic construction.
///
/// `wsym = (A + A^T) / 2`, `degrees[i] = sum_j wsym[i, j]`, and `alpha[i, j]`
/// is `+1` for an unreciprocated edge `i -> j`, `-1` for an unreciprocated
/// edge `j -> i`, and `0` when the pair is reciprocated or unconnected.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetrizedView {
    pub wsym: DMatrix<f64>,
    pub degrees: Vec<f64>,
    pub alpha: DMatrix<i8>,
}

impl SymmetrizedView {
    pub fn n(&self) -> usize {
        self.degrees.len()
    }
}

pub fn symmetrize(g: &DirectedGraph) -> Result<SymmetrizedView> {
    g.require_unweighted("symmetrization")?;
    let n = g.n();
    let mut wsym = DMatrix::zeros(n, n);
    let mut alpha = DMatrix::<i8>::zeros(n, n);
    for e in g.edges() {
        let (i, j) = (e.src, e.dst);
        wsym[(i, j)] += 0.5;
        wsym[(j, i)] += 0.5;
        if !g.has_edge(j, i) {
            alpha[(i, j)] = 1;
            alpha[(j, i)] = -1;
        }
    }
    let degrees = (0..n).map(|i| wsym.row(i).sum()).collect();
    Ok(SymmetrizedView {
        wsym,
        degrees,
        alpha,
    })
}
