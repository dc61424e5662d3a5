use super::DirectedGraph;
use crate::error::{Error, Result};

/// A component extracted from a larger graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: DirectedGraph,
    /// `original_index[k]` is the index in the source graph of node `k`.
    pub original_index: Vec<usize>,
}

/// Strongly connected components via iterative Tarjan. Each component is
/// returned with its nodes in ascending index order.
pub fn strongly_connected_components(g: &DirectedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        succ[e.src].push(e.dst);
    }

    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        // (node, position in its successor list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < succ[v].len() {
                let w = succ[v][*pos];
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components
}

/// Connected components of the underlying undirected graph, nodes ascending.
pub fn weak_components(g: &DirectedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in g.edges() {
        let (a, b) = (find(&mut parent, e.src), find(&mut parent, e.dst));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = find(&mut parent, v);
        groups[r].push(v);
    }
    groups.into_iter().filter(|c| !c.is_empty()).collect()
}

fn pick_largest(g: &DirectedGraph, comps: Vec<Vec<usize>>) -> Result<Component> {
    // largest size first, then smallest minimum index
    let best = comps
        .into_iter()
        .min_by_key(|c| (std::cmp::Reverse(c.len()), c[0]))
        .ok_or(Error::EmptyGraph)?;
    Ok(Component {
        graph: g.induced_subgraph(&best),
        original_index: best,
    })
}

/// Induced subgraph on the largest strongly connected component. Ties go to
/// the component containing the smallest node index.
pub fn largest_scc(g: &DirectedGraph) -> Result<Component> {
    pick_largest(g, strongly_connected_components(g))
}

/// Induced subgraph on the largest weakly connected component, same tie rule.
pub fn largest_wcc(g: &DirectedGraph) -> Result<Component> {
    pick_largest(g, weak_components(g))
}
