use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use directed_hierarchy::cli::{
    cmd_compare, cmd_curve, cmd_generate, cmd_reorder, parse_g, ComponentPolicy, CurveConfig,
    GenerateConfig, Method, Model, RunConfig, DEFAULT_CURVE_POINTS,
};
use directed_hierarchy::inference::DEFAULT_G_CANDIDATES;

/// Periodic versus linear hierarchy in directed networks.
#[derive(Parser)]
#[command(name = "dihier", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit both models and report which structure fits better.
    Compare(Common),
    /// Order nodes by magnetic phase or trophic level.
    Reorder {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "magnetic")]
        method: Method,
    },
    /// Sample a synthetic clustered graph.
    Generate {
        #[arg(long)]
        model: Model,
        /// Number of clusters.
        #[arg(short = 'k', long = "clusters", default_value_t = 5)]
        clusters: usize,
        /// Nodes per cluster.
        #[arg(short = 'm', long = "size", default_value_t = 100)]
        size: usize,
        /// Half-width of the uniform attribute noise.
        #[arg(short = 'a', long = "noise", default_value_t = 0.2)]
        noise: f64,
        #[arg(long, default_value_t = 5.0)]
        gamma: f64,
        /// Defaults to min(1/K, 1/2).
        #[arg(long, value_parser = parse_g)]
        g: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge-list path; `.meta` and `.truth.csv` files are written beside it.
        #[arg(long)]
        out: PathBuf,
    },
    /// Log-likelihood over a γ grid for given attributes.
    Curve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        model: Model,
        /// `label,value` file with one row per node.
        #[arg(long)]
        attributes: PathBuf,
        #[arg(long, value_parser = parse_g)]
        g: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_CURVE_POINTS)]
        points: usize,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "auto")]
    component: ComponentPolicy,
    /// Comma-separated g candidates, e.g. `1/2,1/3,1/4`.
    #[arg(long = "g-list", value_delimiter = ',', value_parser = parse_g)]
    g_list: Option<Vec<f64>>,
    #[arg(long = "gamma-min", default_value_t = 1e-3)]
    gamma_min: f64,
    #[arg(long = "gamma-max", default_value_t = 50.0)]
    gamma_max: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "out-dir", default_value = ".")]
    out_dir: PathBuf,
    #[arg(long)]
    weighted: bool,
}

impl Common {
    fn into_config(self) -> RunConfig {
        RunConfig {
            input: self.input,
            component: self.component,
            g_candidates: self.g_list.unwrap_or_else(|| DEFAULT_G_CANDIDATES.to_vec()),
            gamma_min: self.gamma_min,
            gamma_max: self.gamma_max,
            seed: self.seed,
            out_dir: self.out_dir,
            weighted: self.weighted,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Compare(common) => cmd_compare(&common.into_config()).map(|r| {
            println!("verdict = {}", r.verdict.name());
        }),
        Command::Reorder { common, method } => cmd_reorder(&common.into_config(), method).map(drop),
        Command::Generate {
            model,
            clusters,
            size,
            noise,
            gamma,
            g,
            seed,
            out,
        } => cmd_generate(&GenerateConfig {
            model,
            clusters,
            size,
            noise,
            gamma,
            g,
            seed,
            out,
        })
        .map(drop),
        Command::Curve {
            common,
            model,
            attributes,
            g,
            points,
        } => cmd_curve(&CurveConfig {
            run: common.into_config(),
            model,
            attributes,
            g,
            points,
        })
        .map(drop),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
