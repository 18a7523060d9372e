//! Exact minimum dominating and total dominating sets.
//!
//! [`solve_minimum`] splits the graph into connected components (both
//! problems are additive over components) and runs a branch-and-bound on
//! each. [`brute_force_minimum`] enumerates subsets by size and serves as the
//! reference oracle on small graphs.

mod bnb;
mod brute;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::graph::Graph;

pub use bnb::solve_component;
pub use brute::{brute_force_minimum, DEFAULT_BRUTE_FORCE_MAX};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const BUDGET_ENV: &str = "EPGDOM_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationKind {
    /// Every vertex is in the set or adjacent to it.
    Dominating,
    /// Every vertex, members included, has a neighbour in the set.
    TotalDominating,
}

impl DominationKind {
    /// Vertices that a chosen vertex `v` takes care of; by symmetry these
    /// are also the vertices able to take care of `v`.
    pub(crate) fn cover(self, graph: &Graph, v: usize) -> VertexSet {
        let mut s = graph.neighbors(v).clone();
        if self == DominationKind::Dominating {
            s.insert(v);
        }
        s
    }
}

impl std::str::FromStr for DominationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dom" | "dominating" => Ok(DominationKind::Dominating),
            "total" | "total_dominating" => Ok(DominationKind::TotalDominating),
            other => Err(format!("unknown domination kind {other:?} (dom|total)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BranchAndBound,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    /// `vertices` are vertex indices, ascending.
    Optimal { vertices: Vec<usize>, labels: Vec<usize> },
    /// Only for total domination on graphs with an isolated vertex.
    NoneExists,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCertificate {
    pub kind: DominationKind,
    pub status: Status,
    pub nodes_explored: u64,
    pub method: Method,
}

impl DominationCertificate {
    pub(crate) fn optimal(
        graph: &Graph,
        kind: DominationKind,
        mut vertices: Vec<usize>,
        nodes_explored: u64,
        method: Method,
    ) -> Self {
        vertices.sort_unstable();
        let labels = vertices.iter().map(|&v| graph.label(v)).collect();
        DominationCertificate {
            kind,
            status: Status::Optimal { vertices, labels },
            nodes_explored,
            method,
        }
    }

    /// Optimum size, or `None` when no set exists.
    pub fn size(&self) -> Option<usize> {
        match &self.status {
            Status::Optimal { vertices, .. } => Some(vertices.len()),
            Status::NoneExists => None,
        }
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match &self.status {
            Status::Optimal { vertices, .. } => Some(vertices),
            Status::NoneExists => None,
        }
    }

    pub fn witness_set(&self, graph: &Graph) -> Option<VertexSet> {
        self.witness()
            .map(|w| VertexSet::from_indices(graph.len(), w.iter().copied()))
    }

    /// The witness passes [`check_domination`]; `NoneExists` is checked
    /// against the presence of an isolated vertex.
    pub fn revalidate(&self, graph: &Graph) -> bool {
        match self.witness_set(graph) {
            Some(set) => check_domination(graph, &set, self.kind),
            None => {
                self.kind == DominationKind::TotalDominating && !graph.isolated_vertices().is_empty()
            }
        }
    }
}

impl Serialize for DominationCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            kind: DominationKind,
            status: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            size: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<&'a [usize]>,
            nodes_explored: u64,
            method: Method,
        }
        let (status, witness) = match &self.status {
            Status::Optimal { labels, .. } => ("optimal", Some(labels.as_slice())),
            Status::NoneExists => ("none_exists", None),
        };
        Json {
            kind: self.kind,
            status,
            size: self.size(),
            witness,
            nodes_explored: self.nodes_explored,
            method: self.method,
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// Search nodes allowed over the whole graph before giving up.
    pub node_budget: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl SolverOptions {
    /// Default options, with the budget taken from `EPGDOM_BUDGET` when set.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|node_budget| SolverOptions { node_budget })
                .map_err(|_| format!("{BUDGET_ENV}={v:?} is not a node count")),
            Err(_) => Ok(SolverOptions::default()),
        }
    }
}

pub fn check_domination(graph: &Graph, set: &VertexSet, kind: DominationKind) -> bool {
    (0..graph.len()).all(|v| {
        (kind == DominationKind::Dominating && set.contains(v))
            || graph.neighbors(v).intersection_count(set) > 0
    })
}

pub fn solve_minimum(graph: &Graph, kind: DominationKind) -> crate::Result<DominationCertificate> {
    solve_minimum_with(graph, kind, &SolverOptions::default())
}

pub fn solve_minimum_with(
    graph: &Graph,
    kind: DominationKind,
    opts: &SolverOptions,
) -> crate::Result<DominationCertificate> {
    if kind == DominationKind::TotalDominating && !graph.isolated_vertices().is_empty() {
        return Ok(DominationCertificate {
            kind,
            status: Status::NoneExists,
            nodes_explored: 0,
            method: Method::BranchAndBound,
        });
    }
    let mut witness = Vec::new();
    let mut nodes = 0u64;
    for comp in graph.connected_components() {
        let verts = comp.to_vec();
        let remaining = opts.node_budget.saturating_sub(nodes);
        let (local, used) = solve_component(graph, &verts, kind, remaining)
            .map_err(|_| crate::Error::ResourceLimit {
                budget: opts.node_budget,
            })?;
        nodes += used;
        witness.extend(local.into_iter().map(|i| verts[i]));
    }
    Ok(DominationCertificate::optimal(
        graph,
        kind,
        witness,
        nodes,
        Method::BranchAndBound,
    ))
}
