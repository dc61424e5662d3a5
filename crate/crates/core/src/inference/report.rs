//! Text and CSV renderings of comparison results.

use std::fmt::Write;

use super::compare::{ComparisonReport, ModelFit};
use super::gamma::Boundary;

/// Scientific notation with six significant digits and a signed two-digit
/// exponent, e.g. `6.84000e+00`.
pub fn sci(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{x:.5e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// `1/k` when `g` is the reciprocal of an integer, otherwise a decimal.
pub fn format_g(g: f64) -> String {
    let k = (1.0 / g).round();
    if k >= 1.0 && (g * k - 1.0).abs() < 1e-9 {
        format!("1/{k}")
    } else {
        format!("{g}")
    }
}

fn boundary_name(b: Option<Boundary>) -> &'static str {
    match b {
        None => "none",
        Some(Boundary::Lower) => "lower",
        Some(Boundary::Upper) => "upper",
    }
}

fn write_fit(out: &mut String, fit: &ModelFit) {
    let _ = writeln!(out, "[{}]", fit.model.name());
    if let Some(g) = fit.g {
        let _ = writeln!(out, "g = {}", format_g(g));
    }
    let _ = writeln!(out, "gamma_mle = {}", sci(fit.gamma_mle));
    let _ = writeln!(out, "loglik_at_mle = {}", sci(fit.loglik_at_mle));
    let _ = writeln!(out, "gamma_boundary = {}", boundary_name(fit.boundary));
    match fit.gamma_density {
        Some(d) => {
            let _ = writeln!(out, "gamma_density = {}", sci(d));
        }
        None => {
            let _ = writeln!(out, "gamma_density = none");
        }
    }
    out.push('\n');
}

/// `key = value` sections describing a comparison.
pub fn report_text(dataset: &str, nodes: usize, edges: usize, report: &ComparisonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[graph]");
    let _ = writeln!(out, "dataset = {dataset}");
    let _ = writeln!(out, "nodes = {nodes}");
    let _ = writeln!(out, "edges = {edges}");
    out.push('\n');

    let _ = writeln!(out, "[g_selection]");
    for &(g, gamma, ll) in &report.per_g {
        let _ = writeln!(
            out,
            "g_{} = gamma {} loglik {}",
            format_g(g),
            sci(gamma),
            sci(ll)
        );
    }
    let _ = writeln!(out, "best_g = {}", format_g(report.best_g));
    out.push('\n');

    write_fit(&mut out, &report.prdrg_fit);
    write_fit(&mut out, &report.trophic_fit);

    let _ = writeln!(out, "[magnetic]");
    let _ = writeln!(
        out,
        "smallest_eigenvalue = {}",
        sci(report.phases.smallest_eigenvalue)
    );
    let _ = writeln!(out, "warnings = {}", report.phases.warnings.len());
    out.push('\n');

    let _ = writeln!(out, "[trophic_levels]");
    let _ = writeln!(out, "incoherence = {}", sci(report.levels.incoherence));
    out.push('\n');

    let _ = writeln!(out, "[comparison]");
    let _ = writeln!(out, "ln_ratio = {}", sci(report.log_ratio));
    let _ = writeln!(out, "verdict = {}", report.verdict.name());
    out
}

/// Header plus one row: `dataset,nodes,edges,g,ln_ratio`.
pub fn summary_csv(dataset: &str, nodes: usize, edges: usize, report: &ComparisonReport) -> String {
    format!(
        "dataset,nodes,edges,g,ln_ratio\n{dataset},{nodes},{edges},{},{}\n",
        format_g(report.best_g),
        sci(report.log_ratio)
    )
}

/// `label,value` rows. Values are written at full precision so they can be
/// read back as attributes.
pub fn values_csv<S: AsRef<str>>(labels: &[S], values: &[f64]) -> String {
    let mut out = String::from("label,value\n");
    for (label, v) in labels.iter().zip(values) {
        let _ = writeln!(out, "{},{v}", label.as_ref());
    }
    out
}

/// `gamma,loglik,is_mle,is_density`. Grid rows come first with both flags 0,
/// then one row for the MLE and one for the density match when present.
pub fn curve_csv(
    grid: &[(f64, f64)],
    mle: Option<(f64, f64)>,
    density: Option<(f64, f64)>,
) -> String {
    let mut out = String::from("gamma,loglik,is_mle,is_density\n");
    for &(gamma, ll) in grid {
        let _ = writeln!(out, "{},{},0,0", sci(gamma), sci(ll));
    }
    if let Some((gamma, ll)) = mle {
        let _ = writeln!(out, "{},{},1,0", sci(gamma), sci(ll));
    }
    if let Some((gamma, ll)) = density {
        let _ = writeln!(out, "{},{},0,1", sci(gamma), sci(ll));
    }
    out
}
