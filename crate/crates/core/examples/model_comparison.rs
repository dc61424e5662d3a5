//! Decide between periodic and linear hierarchy on two synthetic graphs.

use directed_hierarchy::graph::{largest_wcc, DirectedGraph};
use directed_hierarchy::inference::{compare_models, sci, FitOptions, DEFAULT_G_CANDIDATES};
use directed_hierarchy::models::{
    gen_clustered_angles, gen_trophic_levels, prdrg_sample, trophic_sample, PrdrgParams,
    TrophicParams,
};

fn show(name: &str, graph: &DirectedGraph) -> directed_hierarchy::Result<()> {
    let graph = largest_wcc(graph)?.graph;
    let r = compare_models(&graph, &DEFAULT_G_CANDIDATES, &FitOptions::default())?;
    println!(
        "{name:>8}: g = {:.3}, pRDRG gamma {:.3}, trophic gamma {:.3}, ln ratio {}, {}",
        r.best_g,
        r.prdrg_fit.gamma_mle,
        r.trophic_fit.gamma_mle,
        sci(r.log_ratio),
        r.verdict.name()
    );
    Ok(())
}

fn main() -> directed_hierarchy::Result<()> {
    let (k, m, a, gamma, seed) = (5, 50, 0.2, 5.0, 1);
    let theta = gen_clustered_angles(k, m, a, seed)?;
    let periodic = prdrg_sample(
        &PrdrgParams {
            theta,
            gamma,
            g: 0.2,
        },
        seed,
    )?;
    let h = gen_trophic_levels(k, m, a, seed)?;
    let linear = trophic_sample(&TrophicParams { h, gamma }, seed)?;
    show("periodic", &periodic)?;
    show("linear", &linear)
}
