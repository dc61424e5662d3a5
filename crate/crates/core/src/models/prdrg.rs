//! Directed periodic range-dependent random graph.
//!
//! Each unordered pair `{i, j}` independently takes one of four outcomes:
//! reciprocated, `i -> j` only, `j -> i` only, or unconnected. With
//! `β = θ_i - θ_j` the unnormalized log-weights are
//!
//! ```text
//! both      0
//! forward   γ (1 - 2 cos β + cos(β + 2πg))
//! backward  γ (1 - 2 cos β + cos(β - 2πg))
//! none      γ (2 - 2 cos β)
//! ```
//!
//! Everything is evaluated in the log domain; `e^{4γ}` overflows long before
//! the γ range used in fitting ends.

use std::f64::consts::TAU;

use rand::Rng;

use super::numeric::log_sum_exp;
use super::sampling::pair_rng;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

#[derive(Clone, Debug, PartialEq)]
pub struct PrdrgParams {
    pub theta: Vec<f64>,
    pub gamma: f64,
    pub g: f64,
}

impl PrdrgParams {
    fn validate(&self) -> Result<()> {
        if !(self.gamma >= 0.0 && self.gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "gamma = {} must be finite and >= 0",
                self.gamma
            )));
        }
        if !(0.0..=0.5).contains(&self.g) {
            return Err(Error::InvalidParameter(format!(
                "g = {} outside [0, 1/2]",
                self.g
            )));
        }
        Ok(())
    }
}

/// Probabilities of the four outcomes for one unordered pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OutcomeProbs {
    /// `A_ij = A_ji = 1`
    pub both: f64,
    /// `A_ij = 1, A_ji = 0`
    pub forward: f64,
    /// `A_ij = 0, A_ji = 1`
    pub backward: f64,
    pub none: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairOutcome {
    Both = 0,
    Forward = 1,
    Backward = 2,
    None = 3,
}

impl PairOutcome {
    pub fn of(graph: &DirectedGraph, i: usize, j: usize) -> Self {
        match (graph.has_edge(i, j), graph.has_edge(j, i)) {
            (true, true) => PairOutcome::Both,
            (true, false) => PairOutcome::Forward,
            (false, true) => PairOutcome::Backward,
            (false, false) => PairOutcome::None,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            PairOutcome::Both => 2,
            PairOutcome::Forward | PairOutcome::Backward => 1,
            PairOutcome::None => 0,
        }
    }
}

/// Log-weights divided by γ, in [`PairOutcome`] order.
pub(crate) fn pair_scores(theta_i: f64, theta_j: f64, g: f64) -> [f64; 4] {
    let beta = theta_i - theta_j;
    let c = beta.cos();
    [
        0.0,
        1.0 - 2.0 * c + (beta + TAU * g).cos(),
        1.0 - 2.0 * c + (beta - TAU * g).cos(),
        2.0 - 2.0 * c,
    ]
}

fn log_probs(scores: &[f64; 4], gamma: f64) -> [f64; 4] {
    let e = scores.map(|s| gamma * s);
    let z = log_sum_exp(&e);
    e.map(|x| x - z)
}

pub fn prdrg_pair_log_probs(theta_i: f64, theta_j: f64, gamma: f64, g: f64) -> [f64; 4] {
    log_probs(&pair_scores(theta_i, theta_j, g), gamma)
}

pub fn prdrg_pair_probs(theta_i: f64, theta_j: f64, gamma: f64, g: f64) -> OutcomeProbs {
    let [both, forward, backward, none] =
        prdrg_pair_log_probs(theta_i, theta_j, gamma, g).map(f64::exp);
    OutcomeProbs {
        both,
        forward,
        backward,
        none,
    }
}

/// Per-pair scores and observed outcomes for repeated evaluation at many γ.
#[derive(Clone, Debug)]
pub struct PrdrgProfile {
    scores: Vec<[f64; 4]>,
    observed: Vec<PairOutcome>,
}

impl PrdrgProfile {
    pub fn new(graph: &DirectedGraph, theta: &[f64], g: f64) -> Result<Self> {
        graph.require_unweighted("the directed pRDRG likelihood")?;
        graph.check_len(theta.len())?;
        PrdrgParams {
            theta: vec![],
            gamma: 0.0,
            g,
        }
        .validate()?;
        let n = graph.n();
        let mask = graph.edge_mask();
        let pairs = n * n.saturating_sub(1) / 2;
        let mut scores = Vec::with_capacity(pairs);
        let mut observed = Vec::with_capacity(pairs);
        for i in 0..n {
            for j in (i + 1)..n {
                scores.push(pair_scores(theta[i], theta[j], g));
                observed.push(match (mask[i * n + j], mask[j * n + i]) {
                    (true, true) => PairOutcome::Both,
                    (true, false) => PairOutcome::Forward,
                    (false, true) => PairOutcome::Backward,
                    (false, false) => PairOutcome::None,
                });
            }
        }
        Ok(Self { scores, observed })
    }

    /// Log-likelihood at `gamma` (natural log, summed over pairs `i < j`).
    pub fn loglik(&self, gamma: f64) -> f64 {
        self.scores
            .iter()
            .zip(&self.observed)
            .map(|(s, &o)| log_probs(s, gamma)[o as usize])
            .sum()
    }

    /// Expected number of directed edges, `Σ_{i<j} (2f + q + l)`.
    pub fn expected_edges(&self, gamma: f64) -> f64 {
        self.scores
            .iter()
            .map(|s| {
                let p = log_probs(s, gamma).map(f64::exp);
                2.0 * p[0] + p[1] + p[2]
            })
            .sum()
    }

    pub fn observed_edges(&self) -> usize {
        self.observed.iter().map(|o| o.edge_count()).sum()
    }
}

pub fn prdrg_loglik(graph: &DirectedGraph, params: &PrdrgParams) -> Result<f64> {
    params.validate()?;
    Ok(PrdrgProfile::new(graph, &params.theta, params.g)?.loglik(params.gamma))
}

pub fn prdrg_expected_edges(params: &PrdrgParams) -> Result<f64> {
    params.validate()?;
    let n = params.theta.len();
    let mut total = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let p = prdrg_pair_probs(params.theta[i], params.theta[j], params.gamma, params.g);
            total += 2.0 * p.both + p.forward + p.backward;
        }
    }
    Ok(total)
}

/// Draw one of the four outcomes from a uniform variate.
pub fn draw_outcome(p: &OutcomeProbs, u: f64) -> PairOutcome {
    if u < p.both {
        PairOutcome::Both
    } else if u < p.both + p.forward {
        PairOutcome::Forward
    } else if u < p.both + p.forward + p.backward {
        PairOutcome::Backward
    } else {
        PairOutcome::None
    }
}

/// Sample a graph. Pair `k` (row-major over `i < j`) uses its own random
/// stream, so the output depends only on `(params, seed)`.
pub fn prdrg_sample(params: &PrdrgParams, seed: u64) -> Result<DirectedGraph> {
    params.validate()?;
    let n = params.theta.len();
    let mut edges = Vec::new();
    let mut k = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let p = prdrg_pair_probs(params.theta[i], params.theta[j], params.gamma, params.g);
            let u: f64 = pair_rng(seed, k).random();
            match draw_outcome(&p, u) {
                PairOutcome::Both => edges.extend([(i, j), (j, i)]),
                PairOutcome::Forward => edges.push((i, j)),
                PairOutcome::Backward => edges.push((j, i)),
                PairOutcome::None => {}
            }
            k += 1;
        }
    }
    DirectedGraph::new(n, &edges)
}
