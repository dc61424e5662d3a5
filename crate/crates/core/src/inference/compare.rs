use log::info;
use rayon::prelude::*;

use super::gamma::{
    fit_gamma_density, fit_gamma_mle_with_grid, Boundary, GammaBounds, MLE_GRID_POINTS,
};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::models::{PrdrgProfile, TrophicProfile};
use crate::spectral::{magnetic_algorithm, trophic_algorithm, PhaseAssignment, TrophicAssignment};

/// Candidate rotation parameters: 1/2, 1/3, 1/4, 1/5, 1/6.
pub const DEFAULT_G_CANDIDATES: [f64; 5] = [1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0, 1.0 / 5.0, 1.0 / 6.0];

/// Log-likelihoods within this relative distance are treated as tied.
const TIE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitOptions {
    pub mle_bounds: GammaBounds,
    pub density_bounds: GammaBounds,
    pub grid_points: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            mle_bounds: GammaBounds::MLE,
            density_bounds: GammaBounds::DENSITY,
            grid_points: MLE_GRID_POINTS,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    DirectedPrdrg,
    TrophicRdrg,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::DirectedPrdrg => "prdrg",
            ModelKind::TrophicRdrg => "trophic",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelFit {
    pub model: ModelKind,
    pub gamma_mle: f64,
    pub loglik_at_mle: f64,
    /// γ matching the observed edge count, when one exists in range.
    pub gamma_density: Option<f64>,
    pub g: Option<f64>,
    pub boundary: Option<Boundary>,
    /// `(γ, loglik)` on the coarse MLE grid.
    pub probes: Vec<(f64, f64)>,
}

#[derive(Clone, Debug)]
pub struct CandidateFit {
    pub phases: PhaseAssignment,
    pub fit: ModelFit,
}

#[derive(Clone, Debug)]
pub struct GSelection {
    /// One entry per candidate, in the order given.
    pub candidates: Vec<CandidateFit>,
    pub best: usize,
}

impl GSelection {
    pub fn best(&self) -> &CandidateFit {
        &self.candidates[self.best]
    }

    pub fn best_g(&self) -> f64 {
        self.best().phases.g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Periodic,
    Linear,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Periodic => "periodic",
            Verdict::Linear => "linear",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    /// `(g, γ_mle, max loglik)` per candidate.
    pub per_g: Vec<(f64, f64, f64)>,
    pub best_g: f64,
    pub prdrg_fit: ModelFit,
    pub trophic_fit: ModelFit,
    /// `prdrg_fit.loglik_at_mle - trophic_fit.loglik_at_mle`.
    pub log_ratio: f64,
    pub verdict: Verdict,
    pub phases: PhaseAssignment,
    pub levels: TrophicAssignment,
}

fn density_estimate(
    expected: impl Fn(f64) -> f64,
    observed: usize,
    bounds: GammaBounds,
    what: &str,
) -> Option<f64> {
    match fit_gamma_density(expected, observed as f64, bounds) {
        Ok(gamma) => Some(gamma),
        Err(e) => {
            info!("no density-matching gamma for {what}: {e}");
            None
        }
    }
}

/// Fit γ for the directed pRDRG with fixed phases.
pub fn fit_prdrg(
    graph: &DirectedGraph,
    theta: &[f64],
    g: f64,
    opts: &FitOptions,
) -> Result<ModelFit> {
    let profile = PrdrgProfile::new(graph, theta, g)?;
    let fit = fit_gamma_mle_with_grid(|x| profile.loglik(x), opts.mle_bounds, opts.grid_points)?;
    let gamma_density = density_estimate(
        |x| profile.expected_edges(x),
        profile.observed_edges(),
        opts.density_bounds,
        &format!("the directed pRDRG at g = {g}"),
    );
    Ok(ModelFit {
        model: ModelKind::DirectedPrdrg,
        gamma_mle: fit.gamma,
        loglik_at_mle: fit.loglik,
        gamma_density,
        g: Some(g),
        boundary: fit.boundary,
        probes: fit.probes,
    })
}

/// Fit γ for the trophic RDRG with fixed levels.
pub fn fit_trophic(graph: &DirectedGraph, h: &[f64], opts: &FitOptions) -> Result<ModelFit> {
    let profile = TrophicProfile::new(graph, h)?;
    let fit = fit_gamma_mle_with_grid(|x| profile.loglik(x), opts.mle_bounds, opts.grid_points)?;
    let gamma_density = density_estimate(
        |x| profile.expected_edges(x),
        profile.observed_edges(),
        opts.density_bounds,
        "the trophic RDRG",
    );
    Ok(ModelFit {
        model: ModelKind::TrophicRdrg,
        gamma_mle: fit.gamma,
        loglik_at_mle: fit.loglik,
        gamma_density,
        g: None,
        boundary: fit.boundary,
        probes: fit.probes,
    })
}

pub fn validate_candidates(candidates: &[f64]) -> Result<()> {
    if candidates.is_empty() {
        return Err(Error::InvalidParameter("no g candidates".into()));
    }
    if let Some(g) = candidates.iter().find(|&&g| !(g > 0.0 && g <= 0.5)) {
        return Err(Error::InvalidParameter(format!(
            "g candidate {g} outside (0, 1/2]"
        )));
    }
    Ok(())
}

/// Run the magnetic estimator and the γ fit for every candidate `g` and pick
/// the one with the largest maximized log-likelihood. Ties go to the larger g.
pub fn select_g(
    graph: &DirectedGraph,
    candidates: &[f64],
    opts: &FitOptions,
) -> Result<GSelection> {
    validate_candidates(candidates)?;
    let fits: Vec<CandidateFit> = candidates
        .par_iter()
        .map(|&g| {
            let phases = magnetic_algorithm(graph, g)?;
            let fit = fit_prdrg(graph, &phases.theta, g, opts)?;
            Ok(CandidateFit { phases, fit })
        })
        .collect::<Result<_>>()?;

    let mut best = 0;
    for k in 1..fits.len() {
        let (a, b) = (fits[k].fit.loglik_at_mle, fits[best].fit.loglik_at_mle);
        let tied = (a - b).abs() <= TIE_TOL * (1.0 + b.abs());
        if (!tied && a > b) || (tied && candidates[k] > candidates[best]) {
            best = k;
        }
    }
    Ok(GSelection {
        candidates: fits,
        best,
    })
}

/// Fit both models and compare their maximized log-likelihoods.
pub fn compare_models(
    graph: &DirectedGraph,
    candidates: &[f64],
    opts: &FitOptions,
) -> Result<ComparisonReport> {
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if graph.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    graph.require_unweighted("model comparison")?;

    let (selection, trophic) = rayon::join(
        || select_g(graph, candidates, opts),
        || -> Result<_> {
            let levels = trophic_algorithm(graph)?;
            let fit = fit_trophic(graph, &levels.h, opts)?;
            Ok((levels, fit))
        },
    );
    let selection = selection?;
    let (levels, trophic_fit) = trophic?;

    let per_g = selection
        .candidates
        .iter()
        .map(|c| (c.phases.g, c.fit.gamma_mle, c.fit.loglik_at_mle))
        .collect();
    let best = selection.best().clone();
    let log_ratio = best.fit.loglik_at_mle - trophic_fit.loglik_at_mle;
    let verdict = if log_ratio > 0.0 {
        Verdict::Periodic
    } else {
        Verdict::Linear
    };
    info!(
        "best g = {:.4}, ln ratio = {:.4e}, verdict {}",
        best.phases.g,
        log_ratio,
        verdict.name()
    );

    Ok(ComparisonReport {
        per_g,
        best_g: best.phases.g,
        prdrg_fit: best.fit,
        trophic_fit,
        log_ratio,
        verdict,
        phases: best.phases,
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> DirectedGraph {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        DirectedGraph::new(k, &edges).unwrap()
    }

    #[test]
    fn singleton_candidate_is_best() {
        let g = cycle(5);
        let sel = select_g(&g, &[0.25], &FitOptions::default()).unwrap();
        assert_eq!(sel.best, 0);
        assert_eq!(sel.best_g(), 0.25);
    }

    #[test]
    fn singleton_matches_direct_composition() {
        let g = cycle(6);
        let opts = FitOptions::default();
        let sel = select_g(&g, &[1.0 / 3.0], &opts).unwrap();
        let phases = magnetic_algorithm(&g, 1.0 / 3.0).unwrap();
        let direct = fit_prdrg(&g, &phases.theta, 1.0 / 3.0, &opts).unwrap();
        assert_eq!(sel.best().fit, direct);
    }

    #[test]
    fn cycle_prefers_matching_g() {
        let sel = select_g(&cycle(4), &DEFAULT_G_CANDIDATES, &FitOptions::default()).unwrap();
        assert_eq!(sel.best_g(), 0.25);
    }

    #[test]
    fn ties_go_to_larger_g() {
        // An empty pair of reciprocal edges: every g gives identical phases
        // and likelihoods.
        let g = DirectedGraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        let sel = select_g(&g, &[0.2, 0.5, 0.25], &FitOptions::default()).unwrap();
        assert_eq!(sel.best_g(), 0.5);
    }

    #[test]
    fn rejects_bad_candidates() {
        let g = cycle(3);
        assert!(select_g(&g, &[], &FitOptions::default()).is_err());
        assert!(select_g(&g, &[0.0], &FitOptions::default()).is_err());
        assert!(select_g(&g, &[0.6], &FitOptions::default()).is_err());
    }

    #[test]
    fn report_is_consistent() {
        let g = DirectedGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let r = compare_models(&g, &DEFAULT_G_CANDIDATES, &FitOptions::default()).unwrap();
        assert_eq!(
            r.log_ratio,
            r.prdrg_fit.loglik_at_mle - r.trophic_fit.loglik_at_mle
        );
        assert_eq!(r.verdict == Verdict::Periodic, r.log_ratio > 0.0);
        let max = r
            .per_g
            .iter()
            .map(|p| p.2)
            .fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(r.prdrg_fit.loglik_at_mle, max);
        assert_eq!(r.per_g.len(), 5);
    }

    #[test]
    fn compare_rejects_degenerate_graphs() {
        assert!(matches!(
            compare_models(
                &DirectedGraph::new(3, &[]).unwrap(),
                &DEFAULT_G_CANDIDATES,
                &FitOptions::default()
            ),
            Err(Error::NoEdges)
        ));
        assert!(matches!(
            compare_models(
                &DirectedGraph::new(0, &[]).unwrap(),
                &DEFAULT_G_CANDIDATES,
                &FitOptions::default()
            ),
            Err(Error::EmptyGraph)
        ));
    }
}
