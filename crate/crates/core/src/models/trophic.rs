//! Trophic range-dependent random graph: independent edges with
//! `P(i -> j) = 1 / (1 + exp(γ (h_j - h_i - 1)²))`.

use rand::Rng;

use super::kernel::{kernel_weighted_logdensity, KernelModel, TrophicKernel};
use super::numeric::softplus;
use super::sampling::pair_rng;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

#[derive(Clone, Debug, PartialEq)]
pub struct TrophicParams {
    pub h: Vec<f64>,
    pub gamma: f64,
}

impl TrophicParams {
    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.gamma >= 0.0 && self.gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "gamma = {} must be finite and >= 0",
                self.gamma
            )));
        }
        Ok(())
    }
}

fn trophic_distance(h_i: f64, h_j: f64) -> f64 {
    let d = h_j - h_i - 1.0;
    d * d
}

pub fn trophic_edge_prob(h_i: f64, h_j: f64, gamma: f64) -> f64 {
    1.0 / (1.0 + (gamma * trophic_distance(h_i, h_j)).exp())
}

/// Per-ordered-pair distances and observed edges for evaluation at many γ.
#[derive(Clone, Debug)]
pub struct TrophicProfile {
    // (h_j - h_i - 1)^2 over ordered pairs i != j
    distance: Vec<f64>,
    present: Vec<bool>,
}

impl TrophicProfile {
    pub fn new(graph: &DirectedGraph, h: &[f64]) -> Result<Self> {
        graph.require_unweighted("the trophic RDRG likelihood")?;
        graph.check_len(h.len())?;
        let n = graph.n();
        let mask = graph.edge_mask();
        let mut distance = Vec::with_capacity(n * n.saturating_sub(1));
        let mut present = Vec::with_capacity(distance.capacity());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    distance.push(trophic_distance(h[i], h[j]));
                    present.push(mask[i * n + j]);
                }
            }
        }
        Ok(Self { distance, present })
    }

    /// Bernoulli log-likelihood over all ordered pairs.
    pub fn loglik(&self, gamma: f64) -> f64 {
        self.distance
            .iter()
            .zip(&self.present)
            .map(|(&d, &a)| {
                let x = gamma * d;
                if a {
                    -softplus(x)
                } else {
                    -softplus(-x)
                }
            })
            .sum()
    }

    pub fn expected_edges(&self, gamma: f64) -> f64 {
        self.distance
            .iter()
            .map(|&d| 1.0 / (1.0 + (gamma * d).exp()))
            .sum()
    }

    pub fn observed_edges(&self) -> usize {
        self.present.iter().filter(|&&a| a).count()
    }
}

pub fn trophic_loglik(graph: &DirectedGraph, params: &TrophicParams) -> Result<f64> {
    params.validate()?;
    Ok(TrophicProfile::new(graph, &params.h)?.loglik(params.gamma))
}

pub fn trophic_expected_edges(params: &TrophicParams) -> Result<f64> {
    params.validate()?;
    let n = params.h.len();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                total += trophic_edge_prob(params.h[i], params.h[j], params.gamma);
            }
        }
    }
    Ok(total)
}

/// Independent Bernoulli draw per ordered pair. The unordered pair `k`
/// (row-major over `i < j`) owns one random stream and draws `i -> j` first.
pub fn trophic_sample(params: &TrophicParams, seed: u64) -> Result<DirectedGraph> {
    params.validate()?;
    let h = &params.h;
    let n = h.len();
    let mut edges = Vec::new();
    let mut k = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut rng = pair_rng(seed, k);
            if rng.random::<f64>() < trophic_edge_prob(h[i], h[j], params.gamma) {
                edges.push((i, j));
            }
            if rng.random::<f64>() < trophic_edge_prob(h[j], h[i], params.gamma) {
                edges.push((j, i));
            }
            k += 1;
        }
    }
    DirectedGraph::new(n, &edges)
}

/// Log-density of the realized weights under the weighted trophic model,
/// `Σ_edges [-γ w_ij I_ij - ln Z_ij]` with `I_ij = (h_j - h_i - 1)²`.
///
/// Only realized edges contribute; the model places no mass on absent pairs.
pub fn weighted_trophic_logdensity(graph: &DirectedGraph, params: &TrophicParams) -> Result<f64> {
    params.validate()?;
    let model = KernelModel::scalar(&params.h, TrophicKernel, params.gamma)?;
    kernel_weighted_logdensity(graph, &model)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_values() {
        for gamma in [0.0, 1.0, 7.0] {
            assert_eq!(trophic_edge_prob(0.3, 1.3, gamma), 0.5);
            assert_eq!(trophic_edge_prob(-2.0, 5.0, 0.0), 0.5);
        }
        let e = std::f64::consts::E;
        assert!((trophic_edge_prob(2.0, 2.0, 1.0) - 1.0 / (1.0 + e)).abs() < 1e-15);
    }

    #[test]
    fn loglik_small_cases() {
        let empty = DirectedGraph::new(2, &[]).unwrap();
        let ll = trophic_loglik(
            &empty,
            &TrophicParams {
                h: vec![0.0, 0.4],
                gamma: 0.0,
            },
        )
        .unwrap();
        assert!((ll - 2.0 * 0.5f64.ln()).abs() < 1e-15);

        let one = DirectedGraph::new(2, &[(0, 1)]).unwrap();
        let gamma = 3.0;
        let ll = trophic_loglik(
            &one,
            &TrophicParams {
                h: vec![0.0, 1.0],
                gamma,
            },
        )
        .unwrap();
        let expect = 0.5f64.ln() + (1.0 - trophic_edge_prob(1.0, 0.0, gamma)).ln();
        assert!((ll - expect).abs() < 1e-14);
    }

    #[test]
    fn asymmetry_follows_distances() {
        let gamma = 2.0;
        for (a, b) in [(0.0, 1.0), (0.0, 0.4), (1.0, 0.0), (0.3, 2.5), (2.0, 2.0)] {
            let fwd = trophic_edge_prob(a, b, gamma);
            let bwd = trophic_edge_prob(b, a, gamma);
            let closer = trophic_distance(a, b) < trophic_distance(b, a);
            assert_eq!(fwd > bwd, closer, "({a}, {b})");
            assert_eq!(fwd == bwd, a == b);
        }
    }

    #[test]
    fn large_gamma_kills_off_level_edges() {
        assert!(trophic_edge_prob(0.0, 1.5, 500.0) < 1e-50);
        assert_eq!(trophic_edge_prob(0.0, 1.0, 500.0), 0.5);
    }

    #[test]
    fn sampler_is_deterministic() {
        let params = TrophicParams {
            h: (0..40).map(|i| (i / 8) as f64).collect(),
            gamma: 4.0,
        };
        assert_eq!(
            trophic_sample(&params, 3).unwrap(),
            trophic_sample(&params, 3).unwrap()
        );
    }

    #[test]
    fn weighted_density_flat_at_unit_gap() {
        let g = DirectedGraph::weighted(2, &[(0, 1, 0.37)]).unwrap();
        let v = weighted_trophic_logdensity(
            &g,
            &TrophicParams {
                h: vec![0.0, 1.0],
                gamma: 5.0,
            },
        )
        .unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn weighted_density_requires_weights() {
        let g = DirectedGraph::new(2, &[(0, 1)]).unwrap();
        assert!(weighted_trophic_logdensity(
            &g,
            &TrophicParams {
                h: vec![0.0, 1.0],
                gamma: 5.0
            }
        )
        .is_err());
    }

    #[test]
    fn expected_edges_decrease_with_gamma() {
        let h = vec![0.0, 0.2, 1.1, 1.9, 3.4, 0.7];
        let mut last = f64::INFINITY;
        for k in 0..60 {
            let gamma = k as f64 * 0.5;
            let e = trophic_expected_edges(&TrophicParams {
                h: h.clone(),
                gamma,
            })
            .unwrap();
            assert!(e <= last + 1e-12);
            last = e;
        }
    }
}
