//! Command implementations behind the `dihier` binary.
//!
//! Each command reads an edge list, extracts a component, runs an analysis
//! and writes plain-text outputs into a directory. Failures carry the stage
//! they happened in and map onto process exit codes.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use log::{info, warn};

use crate::error::Error;
use crate::graph::{
    apply_ordering, largest_scc, largest_wcc, permutation_csv, read_edge_list,
    reordered_triples_csv, write_edge_list, DirectedGraph, WeightMode,
};
use crate::inference::{
    compare_models, curve_csv, fit_gamma_density, fit_gamma_mle, log_grid, report_text, sci,
    select_g, summary_csv, validate_candidates, values_csv, FitOptions, GammaBounds,
    DEFAULT_G_CANDIDATES, MLE_GRID_POINTS,
};
use crate::models::{
    gen_clustered_angles, gen_trophic_levels, prdrg_sample, trophic_sample, PrdrgParams,
    PrdrgProfile, TrophicParams, TrophicProfile,
};
use crate::spectral::{magnetic_algorithm, trophic_algorithm};

/// Smallest strongly connected component accepted by [`ComponentPolicy::Auto`].
pub const AUTO_MIN_SCC: usize = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ComponentPolicy {
    Scc,
    Wcc,
    /// Largest SCC unless it has fewer than [`AUTO_MIN_SCC`] nodes, then the
    /// largest WCC.
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Magnetic,
    Trophic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Prdrg,
    Trophic,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Prdrg => "prdrg",
            Model::Trophic => "trophic",
        }
    }
}

fn parse_choice<T: Copy>(s: &str, what: &str, choices: &[(&str, T)]) -> Result<T, String> {
    choices
        .iter()
        .find(|(name, _)| name.eq_ignore_ascii_case(s))
        .map(|&(_, v)| v)
        .ok_or_else(|| {
            let names: Vec<_> = choices.iter().map(|(n, _)| *n).collect();
            format!("unknown {what} '{s}', expected one of {}", names.join(", "))
        })
}

impl FromStr for ComponentPolicy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        use ComponentPolicy::*;
        parse_choice(
            s,
            "component policy",
            &[("scc", Scc), ("wcc", Wcc), ("auto", Auto)],
        )
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        parse_choice(
            s,
            "method",
            &[("magnetic", Method::Magnetic), ("trophic", Method::Trophic)],
        )
    }
}

impl FromStr for Model {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        parse_choice(
            s,
            "model",
            &[("prdrg", Model::Prdrg), ("trophic", Model::Trophic)],
        )
    }
}

/// Parse `1/3`, `0.25` and similar.
pub fn parse_g(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| format!("bad g value '{s}'"))?;
            let b: f64 = b.trim().parse().map_err(|_| format!("bad g value '{s}'"))?;
            a / b
        }
        None => s.parse().map_err(|_| format!("bad g value '{s}'"))?,
    };
    Ok(value)
}

/// Comma-separated list of g values.
pub fn parse_g_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_g)
        .collect()
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input: PathBuf,
    pub component: ComponentPolicy,
    pub g_candidates: Vec<f64>,
    pub gamma_min: f64,
    pub gamma_max: f64,
    pub seed: u64,
    pub out_dir: PathBuf,
    pub weighted: bool,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        Self {
            input: input.into(),
            component: ComponentPolicy::Auto,
            g_candidates: DEFAULT_G_CANDIDATES.to_vec(),
            gamma_min: GammaBounds::MLE.min,
            gamma_max: GammaBounds::MLE.max,
            seed: 0,
            out_dir: out_dir.into(),
            weighted: false,
        }
    }

    pub fn fit_options(&self) -> Result<FitOptions, CliError> {
        let stage = "configuration";
        let mle_bounds =
            GammaBounds::new(self.gamma_min, self.gamma_max).map_err(CliError::at(stage))?;
        validate_candidates(&self.g_candidates).map_err(CliError::at(stage))?;
        let density_bounds =
            GammaBounds::new(GammaBounds::DENSITY.min.min(self.gamma_min), self.gamma_max)
                .map_err(CliError::at(stage))?;
        Ok(FitOptions {
            mle_bounds,
            density_bounds,
            grid_points: MLE_GRID_POINTS,
        })
    }
}

#[derive(Debug)]
pub struct CliError {
    pub stage: &'static str,
    pub error: Error,
}

impl CliError {
    pub fn new(stage: &'static str, error: Error) -> Self {
        Self { stage, error }
    }

    fn at(stage: &'static str) -> impl Fn(Error) -> CliError {
        move |error| CliError { stage, error }
    }

    /// 1 for input errors, 2 for degenerate graphs, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self.error {
            Error::Disconnected { .. } | Error::NoEdges | Error::EmptyGraph => 2,
            Error::NonFinite { .. } | Error::DensityOutOfRange { .. } | Error::Singular(_) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error [{}]: {}", self.stage, self.error)
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.error)
    }
}

/// An input graph after preprocessing.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub dataset: String,
    /// Graph as read, self-loops removed.
    pub full: DirectedGraph,
    /// Selected component.
    pub graph: DirectedGraph,
    pub self_loops_dropped: usize,
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".into())
}

/// Pick a component of `graph` according to `policy`.
pub fn select_component(
    graph: &DirectedGraph,
    policy: ComponentPolicy,
) -> crate::Result<DirectedGraph> {
    let comp = match policy {
        ComponentPolicy::Scc => largest_scc(graph)?,
        ComponentPolicy::Wcc => largest_wcc(graph)?,
        ComponentPolicy::Auto => {
            let scc = largest_scc(graph)?;
            if scc.graph.n() >= AUTO_MIN_SCC {
                scc
            } else {
                warn!(
                    "largest strongly connected component has {} node(s); using the largest weakly connected component",
                    scc.graph.n()
                );
                largest_wcc(graph)?
            }
        }
    };
    Ok(comp.graph)
}

/// Read the input file and extract the configured component.
pub fn prepare(config: &RunConfig) -> Result<Prepared, CliError> {
    let mode = if config.weighted {
        WeightMode::Weighted
    } else {
        WeightMode::Unweighted
    };
    let parsed = read_edge_list(&config.input, mode).map_err(CliError::at("input"))?;
    if parsed.graph.n() == 0 {
        return Err(CliError::new(
            "input",
            Error::Parse {
                line: 0,
                reason: format!("{} contains no nodes", config.input.display()),
            },
        ));
    }
    if parsed.self_loops_dropped > 0 {
        info!("dropped {} self-loop(s)", parsed.self_loops_dropped);
    }
    let graph =
        select_component(&parsed.graph, config.component).map_err(CliError::at("component"))?;
    info!(
        "component: {} of {} nodes, {} of {} edges",
        graph.n(),
        parsed.graph.n(),
        graph.edge_count(),
        parsed.graph.edge_count()
    );
    Ok(Prepared {
        dataset: dataset_name(&config.input),
        full: parsed.graph,
        graph,
        self_loops_dropped: parsed.self_loops_dropped,
    })
}

fn write_outputs(dir: &Path, files: &[(&str, String)]) -> Result<(), CliError> {
    let io = CliError::at("output");
    fs::create_dir_all(dir).map_err(|e| io(e.into()))?;
    for (name, contents) in files {
        fs::write(dir.join(name), contents).map_err(|e| io(e.into()))?;
    }
    Ok(())
}

/// Fit both models, compare them and write `report.txt`, `summary.csv`,
/// `phases.csv`, `levels.csv` and `likelihood_curve_{prdrg,trophic}.csv`.
pub fn cmd_compare(config: &RunConfig) -> Result<crate::inference::ComparisonReport, CliError> {
    let opts = config.fit_options()?;
    if config.weighted {
        return Err(CliError::new(
            "input",
            Error::WeightedUnsupported("model comparison"),
        ));
    }
    let prep = prepare(config)?;
    let g = &prep.graph;
    let report =
        compare_models(g, &config.g_candidates, &opts).map_err(CliError::at("analysis"))?;

    let prdrg = PrdrgProfile::new(g, &report.phases.theta, report.best_g)
        .map_err(CliError::at("analysis"))?;
    let trophic = TrophicProfile::new(g, &report.levels.h).map_err(CliError::at("analysis"))?;
    let prdrg_curve = curve_csv(
        &report.prdrg_fit.probes,
        Some((report.prdrg_fit.gamma_mle, report.prdrg_fit.loglik_at_mle)),
        report.prdrg_fit.gamma_density.map(|x| (x, prdrg.loglik(x))),
    );
    let trophic_curve = curve_csv(
        &report.trophic_fit.probes,
        Some((
            report.trophic_fit.gamma_mle,
            report.trophic_fit.loglik_at_mle,
        )),
        report
            .trophic_fit
            .gamma_density
            .map(|x| (x, trophic.loglik(x))),
    );

    let (n, m) = (g.n(), g.edge_count());
    write_outputs(
        &config.out_dir,
        &[
            ("report.txt", report_text(&prep.dataset, n, m, &report)),
            ("summary.csv", summary_csv(&prep.dataset, n, m, &report)),
            ("phases.csv", values_csv(g.labels(), &report.phases.theta)),
            ("levels.csv", values_csv(g.labels(), &report.levels.h)),
            ("likelihood_curve_prdrg.csv", prdrg_curve),
            ("likelihood_curve_trophic.csv", trophic_curve),
        ],
    )?;
    Ok(report)
}

/// Order nodes by phase or level and write `permutation.csv`,
/// `reordered_adjacency.csv` and the matching `phases.csv` or `levels.csv`.
/// Returns node indices of the selected component in ascending score order.
pub fn cmd_reorder(
    config: &RunConfig,
    method: Method,
) -> Result<(DirectedGraph, Vec<usize>), CliError> {
    let opts = config.fit_options()?;
    let prep = prepare(config)?;
    let g = prep.graph;
    let (name, score) = match method {
        Method::Magnetic => {
            if g.is_weighted() {
                return Err(CliError::new(
                    "input",
                    Error::WeightedUnsupported("magnetic reordering"),
                ));
            }
            let phases = if let [single] = config.g_candidates[..] {
                magnetic_algorithm(&g, single)
            } else {
                select_g(&g, &config.g_candidates, &opts).map(|s| s.best().phases.clone())
            }
            .map_err(CliError::at("magnetic"))?;
            info!("magnetic ordering with g = {}", phases.g);
            ("phases.csv", phases.theta)
        }
        Method::Trophic => {
            let levels = trophic_algorithm(&g).map_err(CliError::at("trophic"))?;
            info!("trophic incoherence {}", sci(levels.incoherence));
            ("levels.csv", levels.h)
        }
    };
    let order = apply_ordering(&g, &score).map_err(CliError::at("ordering"))?;
    let out = CliError::at("output");
    write_outputs(
        &config.out_dir,
        &[
            (
                "permutation.csv",
                permutation_csv(&g, &order).map_err(&out)?,
            ),
            (
                "reordered_adjacency.csv",
                reordered_triples_csv(&g, &order).map_err(&out)?,
            ),
            (name, values_csv(g.labels(), &score)),
        ],
    )?;
    Ok((g, order))
}

#[derive(Clone, Debug)]
pub struct GenerateConfig {
    pub model: Model,
    pub clusters: usize,
    pub size: usize,
    pub noise: f64,
    pub gamma: f64,
    /// Defaults to `min(1/clusters, 1/2)` for the pRDRG.
    pub g: Option<f64>,
    pub seed: u64,
    pub out: PathBuf,
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Path of the `key = value` metadata file written next to a generated graph.
pub fn meta_path(out: &Path) -> PathBuf {
    sidecar(out, ".meta")
}

/// Path of the `label,value` ground-truth attributes of a generated graph.
pub fn truth_path(out: &Path) -> PathBuf {
    sidecar(out, ".truth.csv")
}

/// Sample a synthetic graph and write it with its metadata and true
/// attributes.
pub fn cmd_generate(config: &GenerateConfig) -> Result<DirectedGraph, CliError> {
    let stage = CliError::at("generate");
    let (k, m, a) = (config.clusters, config.size, config.noise);
    let (graph, attributes, g) = match config.model {
        Model::Prdrg => {
            let g = config.g.unwrap_or_else(|| (1.0 / k.max(1) as f64).min(0.5));
            let theta = gen_clustered_angles(k, m, a, config.seed).map_err(&stage)?;
            let params = PrdrgParams {
                theta,
                gamma: config.gamma,
                g,
            };
            let graph = prdrg_sample(&params, config.seed).map_err(&stage)?;
            (graph, params.theta, Some(g))
        }
        Model::Trophic => {
            let h = gen_trophic_levels(k, m, a, config.seed).map_err(&stage)?;
            let params = TrophicParams {
                h,
                gamma: config.gamma,
            };
            let graph = trophic_sample(&params, config.seed).map_err(&stage)?;
            (graph, params.h, None)
        }
    };

    let mut meta = format!(
        "model = {}\nclusters = {k}\nsize = {m}\nnoise = {a}\ngamma = {}\n",
        config.model.name(),
        config.gamma
    );
    if let Some(g) = g {
        meta.push_str(&format!("g = {g}\n"));
    }
    meta.push_str(&format!(
        "seed = {}\nnodes = {}\nedges = {}\n",
        config.seed,
        graph.n(),
        graph.edge_count()
    ));

    let io = CliError::at("output");
    if let Some(dir) = config.out.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| io(e.into()))?;
    }
    fs::write(&config.out, write_edge_list(&graph)).map_err(|e| io(e.into()))?;
    fs::write(meta_path(&config.out), meta).map_err(|e| io(e.into()))?;
    fs::write(
        truth_path(&config.out),
        values_csv(graph.labels(), &attributes),
    )
    .map_err(|e| io(e.into()))?;
    Ok(graph)
}

#[derive(Clone, Debug)]
pub struct CurveConfig {
    pub run: RunConfig,
    pub model: Model,
    pub attributes: PathBuf,
    /// Required for the pRDRG.
    pub g: Option<f64>,
    pub points: usize,
}

pub const DEFAULT_CURVE_POINTS: usize = 64;

/// Read a `label,value` file. A first line whose value column is not a number
/// is treated as a header.
pub fn parse_attributes(text: &str) -> crate::Result<Vec<(String, f64)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: String| Error::Parse {
            line: idx + 1,
            reason,
        };
        let (label, value) = line
            .split_once(',')
            .ok_or_else(|| bad("expected label,value".into()))?;
        match value.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => out.push((label.trim().to_string(), v)),
            Ok(v) => return Err(bad(format!("non-finite value {v}"))),
            Err(_) if idx == 0 => {}
            Err(_) => return Err(bad(format!("bad value '{}'", value.trim()))),
        }
    }
    Ok(out)
}

/// Attribute values for the nodes of `component`. The file must list every
/// node of `full` exactly once.
pub fn match_attributes(
    full: &DirectedGraph,
    component: &DirectedGraph,
    rows: &[(String, f64)],
) -> crate::Result<Vec<f64>> {
    if rows.len() != full.n() {
        return Err(Error::DimensionMismatch {
            expected: full.n(),
            got: rows.len(),
        });
    }
    let mut by_label = std::collections::HashMap::with_capacity(rows.len());
    for (label, v) in rows {
        if by_label.insert(label.as_str(), *v).is_some() {
            return Err(Error::InvalidParameter(format!(
                "attribute for '{label}' given twice"
            )));
        }
    }
    if let Some(missing) = full
        .labels()
        .iter()
        .find(|l| !by_label.contains_key(l.as_str()))
    {
        return Err(Error::InvalidParameter(format!(
            "no attribute for node '{missing}'"
        )));
    }
    Ok(component
        .labels()
        .iter()
        .map(|l| by_label[l.as_str()])
        .collect())
}

/// Log-likelihood of the graph on a logarithmic γ grid for fixed attributes,
/// written to `likelihood_curve_<model>.csv`. Returns the CSV text.
pub fn cmd_curve(config: &CurveConfig) -> Result<String, CliError> {
    let run = &config.run;
    let bounds =
        GammaBounds::new(run.gamma_min, run.gamma_max).map_err(CliError::at("configuration"))?;
    if config.points == 0 {
        return Err(CliError::new(
            "configuration",
            Error::InvalidParameter("curve needs at least one point".into()),
        ));
    }
    if run.weighted {
        return Err(CliError::new(
            "input",
            Error::WeightedUnsupported("likelihood curves"),
        ));
    }
    let prep = prepare(run)?;
    let text = fs::read_to_string(&config.attributes)
        .map_err(|e| CliError::new("attributes", e.into()))?;
    let rows = parse_attributes(&text).map_err(CliError::at("attributes"))?;
    let values =
        match_attributes(&prep.full, &prep.graph, &rows).map_err(CliError::at("attributes"))?;

    let density_bounds = GammaBounds::new(GammaBounds::DENSITY.min.min(bounds.min), bounds.max)
        .map_err(CliError::at("configuration"))?;
    let stage = CliError::at("curve");
    let csv = match config.model {
        Model::Prdrg => {
            let g = config.g.ok_or_else(|| {
                CliError::new(
                    "configuration",
                    Error::InvalidParameter("the pRDRG curve needs --g".into()),
                )
            })?;
            let profile = PrdrgProfile::new(&prep.graph, &values, g).map_err(&stage)?;
            curve_for(
                |x| profile.loglik(x),
                |x| profile.expected_edges(x),
                profile.observed_edges(),
                bounds,
                density_bounds,
                config.points,
            )
            .map_err(&stage)?
        }
        Model::Trophic => {
            let profile = TrophicProfile::new(&prep.graph, &values).map_err(&stage)?;
            curve_for(
                |x| profile.loglik(x),
                |x| profile.expected_edges(x),
                profile.observed_edges(),
                bounds,
                density_bounds,
                config.points,
            )
            .map_err(&stage)?
        }
    };
    let name = format!("likelihood_curve_{}.csv", config.model.name());
    write_outputs(&run.out_dir, &[(name.as_str(), csv.clone())])?;
    Ok(csv)
}

fn curve_for(
    loglik: impl Fn(f64) -> f64,
    expected: impl Fn(f64) -> f64,
    observed: usize,
    bounds: GammaBounds,
    density_bounds: GammaBounds,
    points: usize,
) -> crate::Result<String> {
    let grid: Vec<(f64, f64)> = log_grid(bounds, points)
        .into_iter()
        .map(|x| (x, loglik(x)))
        .collect();
    let mle = fit_gamma_mle(&loglik, bounds)?;
    let density = match fit_gamma_density(&expected, observed as f64, density_bounds) {
        Ok(x) => Some((x, loglik(x))),
        Err(e) => {
            warn!("no density-matching gamma: {e}");
            None
        }
    };
    Ok(curve_csv(&grid, Some((mle.gamma, mle.loglik)), density))
}
