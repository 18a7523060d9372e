use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::EpGraph;

/// Deterministic DOT text. Nodes are element indices, listed ascending,
/// followed by the edges in lexicographic order.
pub fn export_dot(epg: &EpGraph) -> String {
    let mut out = String::from("graph epg {\n");
    let removed: Vec<String> = epg.removed().iter().map(|x| x.to_string()).collect();
    writeln!(
        out,
        "  // mode={} source={} order={} removed=[{}]",
        epg.mode().as_str(),
        epg.source(),
        epg.group_order(),
        removed.join(",")
    )
    .unwrap();
    for &label in epg.labels() {
        writeln!(out, "  {label};").unwrap();
    }
    for (u, v) in epg.edges() {
        writeln!(out, "  {} -- {};", epg.label(u), epg.label(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Adjacency as `{order, mode, labels, edges}`; edges are label pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    pub mode: String,
    pub labels: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

pub fn export_json(epg: &EpGraph) -> GraphJson {
    GraphJson {
        order: epg.group_order(),
        mode: epg.mode().as_str().to_string(),
        labels: epg.labels().to_vec(),
        edges: epg
            .edges()
            .into_iter()
            .map(|(u, v)| [epg.label(u), epg.label(v)])
            .collect(),
    }
}
