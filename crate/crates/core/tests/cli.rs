use std::fs;
use std::path::Path;
use std::process::Command;

use directed_hierarchy::cli::{
    cmd_curve, cmd_generate, cmd_reorder, meta_path, truth_path, CurveConfig, GenerateConfig,
    Method, Model, RunConfig,
};
use directed_hierarchy::graph::{read_edge_list, WeightMode};
use directed_hierarchy::inference::{fit_gamma_density, fit_gamma_mle, sci, GammaBounds};
use directed_hierarchy::models::{cluster_labels, TrophicProfile};

fn dihier(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_dihier"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn generate(
    dir: &Path,
    model: Model,
    k: usize,
    m: usize,
    gamma: f64,
    seed: u64,
) -> std::path::PathBuf {
    let out = dir.join(format!("{}_{k}_{m}_{seed}.tsv", model.name()));
    cmd_generate(&GenerateConfig {
        model,
        clusters: k,
        size: m,
        noise: 0.2,
        gamma,
        g: None,
        seed,
        out: out.clone(),
    })
    .unwrap();
    out
}

#[test]
fn empty_file_exits_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.tsv");
    fs::write(&input, "").unwrap();
    let out = dihier(&[
        "compare",
        "--input",
        p(&input),
        "--out-dir",
        p(&dir.path().join("o")),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error [input]"));
}

#[test]
fn malformed_weight_exits_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("w.tsv");
    fs::write(&input, "a b 0.5\nb c 2\n").unwrap();
    let out = dihier(&[
        "reorder",
        "--input",
        p(&input),
        "--weighted",
        "--method",
        "trophic",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn edgeless_graph_exits_with_degenerate_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("nodes.tsv");
    fs::write(&input, "a\nb\nc\n").unwrap();
    let out = dihier(&[
        "compare",
        "--input",
        p(&input),
        "--out-dir",
        p(&dir.path().join("o")),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flags_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.tsv");
    fs::write(&input, "a b\nb c\nc a\n").unwrap();
    let out = dihier(&["compare", "--input", p(&input), "--g-list", "0.7"]);
    assert_eq!(out.status.code(), Some(1));
    let out = dihier(&[
        "compare",
        "--input",
        p(&input),
        "--gamma-min",
        "5",
        "--gamma-max",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn single_node_generation_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("one.tsv");
    let status = dihier(&[
        "generate",
        "--model",
        "prdrg",
        "-k",
        "1",
        "-m",
        "1",
        "--out",
        p(&out),
    ]);
    assert!(status.status.success());
    let g = read_edge_list(&out, WeightMode::Unweighted).unwrap().graph;
    assert_eq!((g.n(), g.edge_count()), (1, 0));
    let meta = fs::read_to_string(meta_path(&out)).unwrap();
    assert!(meta.contains("g = 0.5"), "{meta}");
    assert!(truth_path(&out).exists());
}

#[test]
fn generated_graph_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), Model::Trophic, 3, 10, 3.0, 4);
    let g = read_edge_list(&path, WeightMode::Unweighted).unwrap().graph;
    let meta = fs::read_to_string(meta_path(&path)).unwrap();
    assert!(meta.contains(&format!("edges = {}", g.edge_count())));
    assert_eq!(g.n(), 30);
}

#[test]
fn compare_writes_all_outputs_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = generate(dir.path(), Model::Prdrg, 4, 20, 5.0, 1);
    let mut runs = Vec::new();
    for name in ["a", "b"] {
        let out_dir = dir.path().join(name);
        let out = dihier(&[
            "compare",
            "--input",
            p(&input),
            "--seed",
            "3",
            "--out-dir",
            p(&out_dir),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let files = [
            "report.txt",
            "summary.csv",
            "phases.csv",
            "levels.csv",
            "likelihood_curve_prdrg.csv",
            "likelihood_curve_trophic.csv",
        ];
        runs.push(files.map(|f| fs::read(out_dir.join(f)).unwrap()));
    }
    assert_eq!(runs[0], runs[1]);
    let summary = String::from_utf8(runs[0][1].clone()).unwrap();
    let mut lines = summary.lines();
    assert_eq!(lines.next(), Some("dataset,nodes,edges,g,ln_ratio"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[3], "1/4");
    assert!(row[4].contains("e+"));
}

#[test]
fn magnetic_reorder_groups_clusters() {
    let dir = tempfile::tempdir().unwrap();
    let (k, m) = (5, 40);
    let input = generate(dir.path(), Model::Prdrg, k, m, 5.0, 2);
    let mut config = RunConfig::new(&input, dir.path().join("r"));
    config.g_candidates = vec![0.2];
    let (graph, order) = cmd_reorder(&config, Method::Magnetic).unwrap();
    assert_eq!(graph.n(), k * m);

    // intra-cluster pairs whose circular rank distance is within m
    let truth = cluster_labels(k, m);
    let n = order.len();
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[graph.label(v).parse::<usize>().unwrap()] = r;
    }
    let (mut close, mut total) = (0, 0);
    for i in 0..n {
        for j in (i + 1)..n {
            if truth[i] == truth[j] {
                let d = rank[i].abs_diff(rank[j]);
                total += 1;
                close += usize::from(d.min(n - d) <= m);
            }
        }
    }
    let frac = close as f64 / total as f64;
    assert!(frac >= 0.9, "{frac}");

    let perm = fs::read_to_string(dir.path().join("r/permutation.csv")).unwrap();
    assert_eq!(perm.lines().next(), Some("original_label,rank"));
    assert_eq!(perm.lines().count(), n + 1);
    let triples = fs::read_to_string(dir.path().join("r/reordered_adjacency.csv")).unwrap();
    assert_eq!(triples.lines().count(), graph.edge_count() + 1);
}

#[test]
fn trophic_reorder_small_cases() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("edge.tsv");
    fs::write(&input, "x y\n").unwrap();
    let (_, order) = cmd_reorder(
        &RunConfig::new(&input, dir.path().join("o")),
        Method::Trophic,
    )
    .unwrap();
    assert_eq!(order, vec![0, 1]);

    fs::write(&input, "a b\nb c\nc d\nd e\n").unwrap();
    let (_, order) = cmd_reorder(
        &RunConfig::new(&input, dir.path().join("o")),
        Method::Trophic,
    )
    .unwrap();
    assert_eq!(order, vec![0, 1, 2, 3, 4]);
    let levels = fs::read_to_string(dir.path().join("o/levels.csv")).unwrap();
    assert!(levels.starts_with("label,value\na,0\n"), "{levels}");
}

#[test]
fn weighted_trophic_reorder() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("w.tsv");
    fs::write(&input, "a b 0.5\nb c 0.25\n").unwrap();
    let mut config = RunConfig::new(&input, dir.path().join("o"));
    config.weighted = true;
    let (_, order) = cmd_reorder(&config, Method::Trophic).unwrap();
    assert_eq!(order, vec![0, 1, 2]);
    assert_eq!(
        cmd_reorder(&config, Method::Magnetic)
            .unwrap_err()
            .exit_code(),
        1
    );
}

fn curve_rows(csv: &str) -> Vec<(f64, f64, u8, u8)> {
    csv.lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[2].parse().unwrap(),
                f[3].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn curve_markers_match_fits() {
    let dir = tempfile::tempdir().unwrap();
    let input = generate(dir.path(), Model::Trophic, 4, 25, 4.0, 6);
    let mut run = RunConfig::new(&input, dir.path().join("c"));
    run.component = directed_hierarchy::cli::ComponentPolicy::Wcc;
    let config = CurveConfig {
        run,
        model: Model::Trophic,
        attributes: truth_path(&input),
        g: None,
        points: 64,
    };
    let rows = curve_rows(&cmd_curve(&config).unwrap());
    let grid: Vec<_> = rows.iter().filter(|r| r.2 == 0 && r.3 == 0).collect();
    assert_eq!(grid.len(), 64);
    let mle = rows.iter().find(|r| r.2 == 1).unwrap();
    let density = rows.iter().find(|r| r.3 == 1).unwrap();

    let graph = read_edge_list(&input, WeightMode::Unweighted)
        .unwrap()
        .graph;
    let truth = fs::read_to_string(truth_path(&input)).unwrap();
    let h: Vec<f64> = truth
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let graph = directed_hierarchy::graph::largest_wcc(&graph).unwrap();
    let h: Vec<f64> = graph.original_index.iter().map(|&i| h[i]).collect();
    let profile = TrophicProfile::new(&graph.graph, &h).unwrap();

    let fit = fit_gamma_mle(|x| profile.loglik(x), GammaBounds::MLE).unwrap();
    assert_eq!(
        sci(mle.0).parse::<f64>().unwrap(),
        sci(fit.gamma).parse::<f64>().unwrap()
    );
    let best_grid = grid.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    assert!(fit.loglik >= best_grid - 1e-6 * best_grid.abs());

    let d = fit_gamma_density(
        |x| profile.expected_edges(x),
        profile.observed_edges() as f64,
        GammaBounds::DENSITY,
    )
    .unwrap();
    assert_eq!(sci(density.0), sci(d));
}

#[test]
fn curve_with_one_point() {
    let dir = tempfile::tempdir().unwrap();
    let input = generate(dir.path(), Model::Prdrg, 3, 8, 4.0, 8);
    let config = CurveConfig {
        run: RunConfig::new(&input, dir.path().join("c")),
        model: Model::Prdrg,
        attributes: truth_path(&input),
        g: Some(1.0 / 3.0),
        points: 1,
    };
    let rows = curve_rows(&cmd_curve(&config).unwrap());
    assert_eq!(rows.iter().filter(|r| r.2 == 0 && r.3 == 0).count(), 1);
    assert!(dir.path().join("c/likelihood_curve_prdrg.csv").exists());
}

#[test]
fn curve_rejects_mismatched_attributes() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.tsv");
    fs::write(&input, "a b\nb c\nc a\n").unwrap();
    let attrs = dir.path().join("h.csv");
    fs::write(&attrs, "label,value\na,0\nb,1\n").unwrap();
    let config = CurveConfig {
        run: RunConfig::new(&input, dir.path().join("c")),
        model: Model::Trophic,
        attributes: attrs.clone(),
        g: None,
        points: 8,
    };
    assert_eq!(cmd_curve(&config).unwrap_err().exit_code(), 1);
    fs::write(&attrs, "label,value\na,0\nb,1\nz,2\n").unwrap();
    assert!(cmd_curve(&config).is_err());
}
