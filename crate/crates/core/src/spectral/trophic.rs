use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::{weak_components, DirectedGraph};

/// `Λ = diag(ω) - A - Aᵀ` together with node weights `ω` and imbalances `χ`.
#[derive(Clone, Debug)]
pub struct TrophicSystem {
    pub laplacian: DMatrix<f64>,
    /// `χ_i = Σ_j (A_ji - A_ij)`, in-weight minus out-weight.
    pub imbalance: DVector<f64>,
    /// `ω_i = Σ_j (A_ji + A_ij)`.
    pub total_weight: DVector<f64>,
}

#[derive(Clone, Debug)]
pub struct TrophicAssignment {
    /// Trophic levels shifted so that the minimum is zero.
    pub h: Vec<f64>,
    pub incoherence: f64,
}

pub fn build_trophic_system(graph: &DirectedGraph) -> TrophicSystem {
    let n = graph.n();
    let mut laplacian = DMatrix::zeros(n, n);
    let mut imbalance = DVector::zeros(n);
    let mut total_weight = DVector::zeros(n);
    for e in graph.edges() {
        let (i, j, w) = (e.src, e.dst, e.weight);
        total_weight[i] += w;
        total_weight[j] += w;
        imbalance[i] -= w;
        imbalance[j] += w;
        laplacian[(i, j)] -= w;
        laplacian[(j, i)] -= w;
    }
    for i in 0..n {
        laplacian[(i, i)] += total_weight[i];
    }
    TrophicSystem {
        laplacian,
        imbalance,
        total_weight,
    }
}

/// `Σ A_ij (h_j - h_i - 1)² / Σ A_ij`.
pub fn trophic_incoherence(graph: &DirectedGraph, h: &[f64]) -> Result<f64> {
    graph.check_len(h.len())?;
    if graph.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let (mut num, mut den) = (0.0, 0.0);
    for e in graph.edges() {
        let d = h[e.dst] - h[e.src] - 1.0;
        num += e.weight * d * d;
        den += e.weight;
    }
    Ok(num / den)
}

/// Residual tolerance for the level solve, relative to `1 + ‖χ‖`.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Trophic levels minimizing the incoherence.
///
/// `Λ` is singular with the constant vector as its kernel on a weakly
/// connected graph, so the solve is done on the bordered system
/// `[Λ 1; 1ᵀ 0] [h; μ] = [χ; 0]`, after which `h` is shifted to `min h = 0`.
pub fn trophic_algorithm(graph: &DirectedGraph) -> Result<TrophicAssignment> {
    let n = graph.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if graph.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let components = weak_components(graph).len();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }

    let system = build_trophic_system(graph);
    let mut bordered = DMatrix::zeros(n + 1, n + 1);
    bordered
        .view_mut((0, 0), (n, n))
        .copy_from(&system.laplacian);
    for i in 0..n {
        bordered[(i, n)] = 1.0;
        bordered[(n, i)] = 1.0;
    }
    let mut rhs = DVector::zeros(n + 1);
    rhs.rows_mut(0, n).copy_from(&system.imbalance);

    let solution = bordered
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Singular("bordered trophic system".into()))?;
    let mut h: Vec<f64> = solution.rows(0, n).iter().copied().collect();
    let min = h.iter().copied().fold(f64::INFINITY, f64::min);
    h.iter_mut().for_each(|x| *x -= min);

    let residual = (&system.laplacian * DVector::from_column_slice(&h) - &system.imbalance).norm();
    if residual.is_nan() || residual > RESIDUAL_TOL * (1.0 + system.imbalance.norm()) {
        return Err(Error::Singular(format!(
            "trophic residual {residual:.3e} too large"
        )));
    }

    let incoherence = trophic_incoherence(graph, &h)?;
    Ok(TrophicAssignment { h, incoherence })
}
