use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use super::DirectedGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Unweighted,
    Weighted,
}

#[derive(Clone, Debug)]
pub struct ParsedEdgeList {
    pub graph: DirectedGraph,
    pub self_loops_dropped: usize,
}

/// Parse a whitespace-separated edge list.
///
/// Each non-comment line is `src dst` (`src dst weight` in weighted mode). A
/// line holding a single label declares a node without edges. Lines starting
/// with `#` or `%` and blank lines are ignored. Labels are mapped to indices
/// in order of first appearance. In unweighted mode any columns after the
/// second are ignored and repeated edges collapse; in weighted mode a repeated
/// edge is an error. Self-loops are dropped and counted.
pub fn parse_edge_list(text: &str, mode: WeightMode) -> Result<ParsedEdgeList> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut intern = |label: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&i) = index.get(label) {
            return i;
        }
        labels.push(label.to_string());
        index.insert(label.to_string(), labels.len() - 1);
        labels.len() - 1
    };

    let mut plain: Vec<(usize, usize)> = Vec::new();
    let mut weighted: Vec<(usize, usize, f64)> = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut self_loops = 0;

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.len() {
            1 => {
                intern(tokens[0], &mut labels);
                continue;
            }
            2 if mode == WeightMode::Weighted => {
                return Err(Error::Parse {
                    line: line_no,
                    reason: "missing edge weight".into(),
                });
            }
            _ => {}
        }
        let src = intern(tokens[0], &mut labels);
        let dst = intern(tokens[1], &mut labels);
        if src == dst {
            self_loops += 1;
            continue;
        }
        match mode {
            WeightMode::Unweighted => plain.push((src, dst)),
            WeightMode::Weighted => {
                let weight: f64 = tokens[2].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    reason: format!("cannot parse weight {:?}", tokens[2]),
                })?;
                if !(weight > 0.0 && weight < 1.0) {
                    return Err(Error::WeightOutOfRange {
                        line: line_no,
                        weight,
                    });
                }
                if seen.insert((src, dst), line_no).is_some() {
                    return Err(Error::DuplicateWeightedEdge {
                        line: line_no,
                        src: tokens[0].to_string(),
                        dst: tokens[1].to_string(),
                    });
                }
                weighted.push((src, dst, weight));
            }
        }
    }

    let graph = match mode {
        WeightMode::Unweighted => DirectedGraph::with_labels(labels, &plain)?,
        WeightMode::Weighted => DirectedGraph::weighted_with_labels(labels, &weighted)?,
    };
    Ok(ParsedEdgeList {
        graph,
        self_loops_dropped: self_loops,
    })
}

pub fn read_edge_list(path: impl AsRef<Path>, mode: WeightMode) -> Result<ParsedEdgeList> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text, mode)
}

/// Serialize in the format accepted by [`parse_edge_list`]. Every node is
/// declared first so that indices survive a round trip, isolated nodes
/// included.
pub fn write_edge_list(graph: &DirectedGraph) -> String {
    let mut out = String::new();
    for label in graph.labels() {
        let _ = writeln!(out, "{label}");
    }
    for e in graph.edges() {
        if graph.is_weighted() {
            let _ = writeln!(
                out,
                "{}\t{}\t{}",
                graph.label(e.src),
                graph.label(e.dst),
                e.weight
            );
        } else {
            let _ = writeln!(out, "{}\t{}", graph.label(e.src), graph.label(e.dst));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(g: &DirectedGraph) -> Vec<(usize, usize)> {
        g.edges().iter().map(|e| (e.src, e.dst)).collect()
    }

    #[test]
    fn reciprocal_pair() {
        let p = parse_edge_list("a b\nb a\n", WeightMode::Unweighted).unwrap();
        assert_eq!(p.graph.n(), 2);
        assert_eq!(pairs(&p.graph), vec![(0, 1), (1, 0)]);
        assert_eq!(p.self_loops_dropped, 0);
    }

    #[test]
    fn self_loop_dropped_and_counted() {
        let p = parse_edge_list("a a\na b\n", WeightMode::Unweighted).unwrap();
        assert_eq!(p.graph.n(), 2);
        assert_eq!(pairs(&p.graph), vec![(0, 1)]);
        assert_eq!(p.self_loops_dropped, 1);
    }

    #[test]
    fn weight_out_of_range() {
        let err = parse_edge_list("a b 1.5\n", WeightMode::Weighted).unwrap_err();
        assert!(
            matches!(err, Error::WeightOutOfRange { line: 1, .. }),
            "{err}"
        );
    }

    #[test]
    fn comments_blanks_tabs_and_labels() {
        let text = "# header\n% other\n\nx\ty\n  y z extra\n";
        let p = parse_edge_list(text, WeightMode::Unweighted).unwrap();
        assert_eq!(p.graph.labels(), &["x", "y", "z"]);
        assert_eq!(pairs(&p.graph), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn duplicate_edges() {
        let p = parse_edge_list("a b\na b\n", WeightMode::Unweighted).unwrap();
        assert_eq!(p.graph.edge_count(), 1);
        let err = parse_edge_list("a b 0.5\na b 0.5\n", WeightMode::Weighted).unwrap_err();
        assert!(matches!(err, Error::DuplicateWeightedEdge { line: 2, .. }));
    }

    #[test]
    fn malformed_weight_reports_line() {
        let err = parse_edge_list("a b 0.5\nc d x\n", WeightMode::Weighted).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("a b\n", WeightMode::Weighted).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn isolated_nodes_survive_round_trip() {
        let g = DirectedGraph::new(3, &[(2, 1)]).unwrap();
        let back = parse_edge_list(&write_edge_list(&g), WeightMode::Unweighted)
            .unwrap()
            .graph;
        assert_eq!(back, g);
    }
}
