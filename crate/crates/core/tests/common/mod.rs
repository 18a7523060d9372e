#![allow(dead_code)]

use epgdom::graph::Graph;
use epgdom::group::FiniteGroup;

/// Enhanced power graph from the definition: scan every `w` for each pair.
pub fn brute_force_epg(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let cyclic: Vec<Vec<bool>> = (0..n)
        .map(|w| {
            let mut member = vec![false; n];
            for x in g.powers(w) {
                member[x] = true;
            }
            member
        })
        .collect();
    let mut graph = Graph::with_labels((0..n).collect());
    for u in 0..n {
        for v in u + 1..n {
            if cyclic.iter().any(|c| c[u] && c[v]) {
                graph.add_edge(u, v);
            }
        }
    }
    graph
}

/// Power graph from the definition: one of `u`, `v` is a power of the other.
pub fn brute_force_power_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let mut graph = Graph::with_labels((0..n).collect());
    for u in 0..n {
        let pu = g.powers(u);
        for v in u + 1..n {
            if pu.contains(&v) || g.powers(v).contains(&u) {
                graph.add_edge(u, v);
            }
        }
    }
    graph
}
