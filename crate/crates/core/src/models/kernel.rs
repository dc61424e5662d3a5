//! Generic kernel random graphs.
//!
//! Given node attributes `x_i ∈ R^d` and a nonnegative kernel `I`, the
//! unweighted model has independent edges with `P(i -> j) = 1 / (1 + e^{γ I})`,
//! and the weighted model gives each realized weight on `(0, 1)` the density
//! `e^{-γ x I} / Z` with `Z = (1 - e^{-γI}) / (γI)`.

use super::numeric::{ln_truncated_exp_normalizer, softplus};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

pub trait Kernel {
    fn eval(&self, x: &[f64], y: &[f64]) -> f64;
}

impl<F> Kernel for F
where
    F: Fn(&[f64], &[f64]) -> f64,
{
    fn eval(&self, x: &[f64], y: &[f64]) -> f64 {
        self(x, y)
    }
}

/// `(y - x - 1)²` on the first coordinate.
#[derive(Clone, Copy, Debug, Default)]
pub struct TrophicKernel;

impl Kernel for TrophicKernel {
    fn eval(&self, x: &[f64], y: &[f64]) -> f64 {
        let d = y[0] - x[0] - 1.0;
        d * d
    }
}

/// `‖x - y‖²`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SquaredEuclidean;

impl Kernel for SquaredEuclidean {
    fn eval(&self, x: &[f64], y: &[f64]) -> f64 {
        x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum()
    }
}

#[derive(Clone, Debug)]
pub struct KernelModel<K> {
    pub attributes: Vec<Vec<f64>>,
    pub kernel: K,
    pub gamma: f64,
}

impl<K: Kernel> KernelModel<K> {
    pub fn new(attributes: Vec<Vec<f64>>, kernel: K, gamma: f64) -> Result<Self> {
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "gamma = {gamma} must be finite and >= 0"
            )));
        }
        if let Some(d) = attributes.first().map(Vec::len) {
            if let Some(bad) = attributes.iter().find(|a| a.len() != d) {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: bad.len(),
                });
            }
        }
        Ok(Self {
            attributes,
            kernel,
            gamma,
        })
    }

    /// One-dimensional attributes from a slice of scalars.
    pub fn scalar(values: &[f64], kernel: K, gamma: f64) -> Result<Self> {
        Self::new(values.iter().map(|&v| vec![v]).collect(), kernel, gamma)
    }

    fn kernel_value(&self, i: usize, j: usize) -> Result<f64> {
        let v = self.kernel.eval(&self.attributes[i], &self.attributes[j]);
        if !(v >= 0.0 && v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "kernel value {v} for pair ({i}, {j}) must be finite and nonnegative"
            )));
        }
        Ok(v)
    }

    pub fn edge_prob(&self, i: usize, j: usize) -> Result<f64> {
        Ok(kernel_edge_prob(self.kernel_value(i, j)?, self.gamma))
    }
}

/// `1 / (1 + e^{γ I})`.
pub fn kernel_edge_prob(kernel_value: f64, gamma: f64) -> f64 {
    1.0 / (1.0 + (gamma * kernel_value).exp())
}

/// Bernoulli log-likelihood over all ordered pairs `i != j`.
pub fn kernel_loglik<K: Kernel>(graph: &DirectedGraph, model: &KernelModel<K>) -> Result<f64> {
    graph.require_unweighted("the kernel RDRG likelihood")?;
    graph.check_len(model.attributes.len())?;
    let n = graph.n();
    let mask = graph.edge_mask();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let x = model.gamma * model.kernel_value(i, j)?;
            total -= if mask[i * n + j] {
                softplus(x)
            } else {
                softplus(-x)
            };
        }
    }
    Ok(total)
}

/// Log-density of realized edge weights, `Σ_edges [-γ w I - ln Z]`.
pub fn kernel_weighted_logdensity<K: Kernel>(
    graph: &DirectedGraph,
    model: &KernelModel<K>,
) -> Result<f64> {
    if !graph.is_weighted() {
        return Err(Error::UnweightedUnsupported("the weighted kernel density"));
    }
    graph.check_len(model.attributes.len())?;
    let mut total = 0.0;
    for e in graph.edges() {
        if !(e.weight > 0.0 && e.weight < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "weight {} outside (0, 1)",
                e.weight
            )));
        }
        let x = model.gamma * model.kernel_value(e.src, e.dst)?;
        total += -x * e.weight - ln_truncated_exp_normalizer(x);
    }
    Ok(total)
}
