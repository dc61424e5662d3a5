//! Fitting γ, choosing the rotation parameter and comparing the two models.

mod compare;
mod gamma;
mod report;

pub use compare::{
    compare_models, fit_prdrg, fit_trophic, select_g, validate_candidates, CandidateFit,
    ComparisonReport, FitOptions, GSelection, ModelFit, ModelKind, Verdict, DEFAULT_G_CANDIDATES,
};
pub use gamma::{
    fit_gamma_density, fit_gamma_mle, fit_gamma_mle_with_grid, golden_section_max, log_grid,
    Boundary, GammaBounds, GammaFit, DENSITY_REL_TOL, MLE_GRID_POINTS, MLE_TOL,
};
pub use report::{curve_csv, format_g, report_text, sci, summary_csv, values_csv};
