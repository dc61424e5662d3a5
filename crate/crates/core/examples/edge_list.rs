//! Parse an edge list, drop self-loops, keep a component and write it back.

use directed_hierarchy::graph::{
    largest_scc, largest_wcc, parse_edge_list, write_edge_list, WeightMode,
};

const TEXT: &str = "\
# predator prey toy network
% both comment styles are accepted
kelp urchin
urchin otter
otter kelp
otter otter
urchin crab extra columns are ignored
crab gull
lonely
";

fn main() -> directed_hierarchy::Result<()> {
    let parsed = parse_edge_list(TEXT, WeightMode::Unweighted)?;
    let g = &parsed.graph;
    println!(
        "{} nodes, {} edges, {} self-loop(s) dropped",
        g.n(),
        g.edge_count(),
        parsed.self_loops_dropped
    );

    let scc = largest_scc(g)?;
    let wcc = largest_wcc(g)?;
    println!("largest SCC: {:?}", scc.graph.labels());
    println!("largest WCC: {:?}", wcc.graph.labels());
    print!("{}", write_edge_list(&wcc.graph));

    let weighted = parse_edge_list("a b 0.5\nb c 0.25\n", WeightMode::Weighted)?;
    print!("{}", write_edge_list(&weighted.graph));

    match parse_edge_list("a b 1.5\n", WeightMode::Weighted) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
