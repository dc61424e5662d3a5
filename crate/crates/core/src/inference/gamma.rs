//! One-dimensional fits for the decay rate γ.

use crate::error::{Error, Result};

/// Closed search interval for γ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaBounds {
    pub min: f64,
    pub max: f64,
}

impl GammaBounds {
    pub const MLE: GammaBounds = GammaBounds {
        min: 1e-3,
        max: 50.0,
    };
    pub const DENSITY: GammaBounds = GammaBounds {
        min: 1e-6,
        max: 50.0,
    };

    pub fn new(min: f64, max: f64) -> Result<Self> {
        if !(min > 0.0 && min < max && max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "gamma bounds [{min}, {max}] must satisfy 0 < min < max < inf"
            )));
        }
        Ok(Self { min, max })
    }
}

impl Default for GammaBounds {
    fn default() -> Self {
        Self::MLE
    }
}

pub const MLE_GRID_POINTS: usize = 32;
pub const MLE_TOL: f64 = 1e-6;
pub const DENSITY_REL_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GammaFit {
    pub gamma: f64,
    pub loglik: f64,
    /// Set when the maximum sits on an end of the search interval, e.g. a
    /// log-likelihood that keeps increasing in γ.
    pub boundary: Option<Boundary>,
    /// `(γ, loglik)` on the coarse grid.
    pub probes: Vec<(f64, f64)>,
}

/// `points` values spaced evenly in `ln γ` from `min` to `max` inclusive.
pub fn log_grid(bounds: GammaBounds, points: usize) -> Vec<f64> {
    match points {
        0 => vec![],
        1 => vec![bounds.min],
        _ => {
            let (a, b) = (bounds.min.ln(), bounds.max.ln());
            (0..points)
                .map(|k| {
                    if k == 0 {
                        bounds.min
                    } else if k + 1 == points {
                        bounds.max
                    } else {
                        (a + (b - a) * k as f64 / (points - 1) as f64).exp()
                    }
                })
                .collect()
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// stopping when the bracket is narrower than `tol`.
pub fn golden_section_max(
    mut f: impl FnMut(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

fn probe(loglik: &impl Fn(f64) -> f64, gamma: f64) -> Result<f64> {
    let value = loglik(gamma);
    if !value.is_finite() {
        return Err(Error::NonFinite { gamma, value });
    }
    Ok(value)
}

/// Maximum-likelihood γ with the default 32-point grid.
pub fn fit_gamma_mle(loglik: impl Fn(f64) -> f64, bounds: GammaBounds) -> Result<GammaFit> {
    fit_gamma_mle_with_grid(loglik, bounds, MLE_GRID_POINTS)
}

/// Coarse logarithmic grid, then golden-section refinement inside the
/// bracket around the best grid point. A maximum at the upper end is
/// returned as-is with [`Boundary::Upper`].
pub fn fit_gamma_mle_with_grid(
    loglik: impl Fn(f64) -> f64,
    bounds: GammaBounds,
    points: usize,
) -> Result<GammaFit> {
    if points < 2 {
        return Err(Error::InvalidParameter(
            "MLE grid needs at least two points".into(),
        ));
    }
    let grid = log_grid(bounds, points);
    let mut probes = Vec::with_capacity(points);
    for &gamma in &grid {
        probes.push((gamma, probe(&loglik, gamma)?));
    }
    let best = (0..points).fold(0, |b, k| if probes[k].1 > probes[b].1 { k } else { b });

    if best == points - 1 {
        let (gamma, loglik) = probes[best];
        return Ok(GammaFit {
            gamma,
            loglik,
            boundary: Some(Boundary::Upper),
            probes,
        });
    }

    let lo = grid[best.saturating_sub(1)];
    let hi = grid[best + 1];
    let mut failure = None;
    let (mut gamma, mut value) = golden_section_max(
        |x| match probe(&loglik, x) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NEG_INFINITY
            }
        },
        lo,
        hi,
        MLE_TOL,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    if value < probes[best].1 {
        (gamma, value) = probes[best];
    }
    let boundary = (best == 0 && gamma - bounds.min <= MLE_TOL).then_some(Boundary::Lower);
    Ok(GammaFit {
        gamma,
        loglik: value,
        boundary,
        probes,
    })
}

/// γ at which the expected edge count equals `observed`, by bisection on a
/// nonincreasing `expected_edges`.
pub fn fit_gamma_density(
    expected_edges: impl Fn(f64) -> f64,
    observed: f64,
    bounds: GammaBounds,
) -> Result<f64> {
    let (mut lo, mut hi) = (bounds.min, bounds.max);
    let (e_lo, e_hi) = (expected_edges(lo), expected_edges(hi));
    let (low, high) = (e_lo.min(e_hi), e_lo.max(e_hi));
    if !(observed >= low && observed <= high) {
        return Err(Error::DensityOutOfRange {
            observed,
            low,
            high,
        });
    }
    if e_lo == e_hi {
        return Ok(lo);
    }
    let decreasing = e_lo > e_hi;
    while hi - lo > DENSITY_REL_TOL * 0.5 * (lo + hi) {
        let mid = 0.5 * (lo + hi);
        let above = expected_edges(mid) > observed;
        if above == decreasing {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
