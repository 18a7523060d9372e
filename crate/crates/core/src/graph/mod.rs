//! Simple undirected graphs over labelled vertices, and the enhanced power
//! graph of a finite group with its star and proper variants.

mod dom;
mod export;
pub mod props;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::prime_power;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

pub use dom::{corollary_dom_prediction, costanzo_dominating_vertices, CorollaryCase};
pub use export::{export_dot, export_json, GraphJson};

/// Undirected simple graph with bit-row adjacency. Vertex `i` carries
/// `labels[i]`; labels are strictly increasing.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<usize>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn with_labels(labels: Vec<usize>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let n = labels.len();
        Graph {
            labels,
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Graph on vertices `0..n` labelled by their index.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::with_labels((0..n).collect());
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Vertex index carrying `label`.
    pub fn vertex_of(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// The subgraph induced on `keep`, relabelled with the kept labels.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph::with_labels(old.iter().map(|&v| self.labels[v]).collect());
        let mut new_index = vec![usize::MAX; self.len()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = new_index[w];
                if j != usize::MAX {
                    g.adj[i].insert(j);
                }
            }
        }
        g
    }

    /// Connected components ordered by their least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.len();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            comp.insert(start);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("labels", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

pub fn connected_components(graph: &Graph) -> Vec<VertexSet> {
    graph.connected_components()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphMode {
    /// All of G.
    Full,
    /// G without the identity.
    Star,
    /// G without the dominating vertices of the full graph.
    Proper,
}

impl GraphMode {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphMode::Full => "full",
            GraphMode::Star => "star",
            GraphMode::Proper => "proper",
        }
    }
}

impl std::str::FromStr for GraphMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(GraphMode::Full),
            "star" => Ok(GraphMode::Star),
            "proper" => Ok(GraphMode::Proper),
            other => Err(format!("unknown graph mode {other:?} (full|star|proper)")),
        }
    }
}

/// Enhanced power graph of a group: vertex labels are element indices.
#[derive(Debug, Clone)]
pub struct EpGraph {
    mode: GraphMode,
    graph: Graph,
    group_order: usize,
    source: String,
    /// Elements of G that are not vertices (empty in full mode).
    removed: Vec<Elem>,
}

impl EpGraph {
    pub fn mode(&self) -> GraphMode {
        self.mode
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn removed(&self) -> &[Elem] {
        &self.removed
    }
}

impl std::ops::Deref for EpGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Enhanced power graph on all of G: `u ~ v` iff `u != v` and both lie in one
/// cyclic subgroup. Built as the union of cliques on the maximal cyclic
/// subgroups.
fn full_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let mut graph = Graph::with_labels((0..n).collect());
    for c in g.maximal_cyclic_subgroups() {
        let clique = VertexSet::from_indices(n, c.elements.iter().copied());
        for &u in &c.elements {
            graph.adj[u].union_with(&clique);
        }
    }
    for v in 0..n {
        graph.adj[v].remove(v);
    }
    graph
}

pub fn build_epg(g: &FiniteGroup, mode: GraphMode) -> EpGraph {
    let full = full_graph(g);
    let n = g.order();
    let removed: Vec<Elem> = match mode {
        GraphMode::Full => Vec::new(),
        GraphMode::Star => vec![g.identity()],
        GraphMode::Proper => dominating_vertices_of(&full).iter().collect(),
    };
    let graph = if removed.is_empty() {
        full
    } else {
        let mut keep = VertexSet::full(n);
        for &x in &removed {
            keep.remove(x);
        }
        full.induced(&keep)
    };
    EpGraph {
        mode,
        graph,
        group_order: n,
        source: g.provenance().to_string(),
        removed,
    }
}

fn dominating_vertices_of(graph: &Graph) -> VertexSet {
    let n = graph.len();
    VertexSet::from_indices(n, (0..n).filter(|&v| graph.degree(v) + 1 == n))
}

/// Vertices adjacent to every other vertex of a full-mode graph.
pub fn graph_dominating_vertices(epg: &EpGraph) -> Result<VertexSet> {
    if epg.mode != GraphMode::Full {
        return Err(Error::Mode {
            expected: "full",
            actual: epg.mode.as_str(),
        });
    }
    Ok(dominating_vertices_of(&epg.graph))
}

/// Power graph: `u ~ v` iff one is a power of the other. Always a spanning
/// subgraph of the full enhanced power graph.
pub fn power_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let mut graph = Graph::with_labels((0..n).collect());
    for u in g.elements() {
        for v in g.powers(u) {
            graph.add_edge(u, v);
        }
    }
    graph
}

/// One root class: the vertices whose cyclic subgroup contains the order-p
/// subgroup generated by `representative`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootClass {
    /// Least element of order p in the class's order-p subgroup.
    pub representative: Elem,
    pub members: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootClassPartition {
    pub prime: u64,
    /// Ordered by representative.
    pub classes: Vec<RootClass>,
}

/// Partitions the vertices of a star or proper graph of a p-group by the
/// unique order-p subgroup of each vertex's cyclic subgroup.
pub fn root_classes(g: &FiniteGroup, epg: &EpGraph) -> Result<RootClassPartition> {
    let Some((p, _)) = prime_power(g.order() as u64) else {
        return Err(Error::NotAPGroup { order: g.order() });
    };
    if epg.mode == GraphMode::Full {
        return Err(Error::Mode {
            expected: "star or proper",
            actual: "full",
        });
    }
    let mut classes: BTreeMap<Elem, VertexSet> = BTreeMap::new();
    for v in 0..epg.len() {
        let x = epg.label(v);
        let a = g.pow(x, g.elem_order(x) / p);
        let rep = g.powers(a).into_iter().filter(|&y| y != 0).min().expect("x is not the identity");
        classes
            .entry(rep)
            .or_insert_with(|| VertexSet::new(epg.len()))
            .insert(v);
    }
    Ok(RootClassPartition {
        prime: p,
        classes: classes
            .into_iter()
            .map(|(representative, members)| RootClass {
                representative,
                members,
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct_group, parse_group_spec};

    fn group(s: &str) -> FiniteGroup {
        construct_group(&parse_group_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_full_graph_is_complete() {
        let epg = build_epg(&group("Z6"), GraphMode::Full);
        assert_eq!(epg.edge_count(), 15);
        assert_eq!(graph_dominating_vertices(&epg).unwrap().len(), 6);
        let proper = build_epg(&group("Z6"), GraphMode::Proper);
        assert!(proper.is_empty());
    }

    #[test]
    fn klein_group_is_a_star() {
        let epg = build_epg(&group("Z2xZ2"), GraphMode::Full);
        assert_eq!(epg.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        let star = build_epg(&group("Z2xZ2"), GraphMode::Star);
        assert_eq!(star.len(), 3);
        assert_eq!(star.edge_count(), 0);
    }

    #[test]
    fn q8_proper_is_three_edges() {
        let g = group("Q8");
        let epg = build_epg(&g, GraphMode::Proper);
        assert_eq!(epg.len(), 6);
        assert_eq!(epg.edge_count(), 3);
        for (u, v) in epg.edges() {
            let (a, b) = (epg.label(u), epg.label(v));
            assert_eq!(g.mul(a, b), g.identity(), "edges join x and x^-1");
        }
        assert_eq!(epg.connected_components().len(), 3);
    }

    #[test]
    fn dominating_vertex_examples() {
        let q = group("Q8");
        let d = graph_dominating_vertices(&build_epg(&q, GraphMode::Full)).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|x| q.elem_order(x) <= 2));
        let e = build_epg(&group("E3^2"), GraphMode::Full);
        assert_eq!(graph_dominating_vertices(&e).unwrap().to_vec(), vec![0]);
        let star = build_epg(&q, GraphMode::Star);
        assert!(matches!(graph_dominating_vertices(&star), Err(Error::Mode { .. })));
    }

    #[test]
    fn component_counts() {
        assert_eq!(build_epg(&group("Q16"), GraphMode::Proper).connected_components().len(), 5);
        assert_eq!(build_epg(&group("E3^2"), GraphMode::Proper).connected_components().len(), 4);
        assert_eq!(build_epg(&group("D8"), GraphMode::Full).connected_components().len(), 1);
    }

    #[test]
    fn root_class_examples() {
        let g = group("E3^2");
        let rc = root_classes(&g, &build_epg(&g, GraphMode::Proper)).unwrap();
        assert_eq!(rc.classes.len(), 4);
        assert!(rc.classes.iter().all(|c| c.members.len() == 2));

        let g = group("Z4xZ2");
        let epg = build_epg(&g, GraphMode::Proper);
        let rc = root_classes(&g, &epg).unwrap();
        let mut sizes: Vec<usize> = rc.classes.iter().map(|c| c.members.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 5]);

        let g = group("Z8");
        assert!(root_classes(&g, &build_epg(&g, GraphMode::Proper)).unwrap().classes.is_empty());

        let g = group("Z6");
        assert!(matches!(
            root_classes(&g, &build_epg(&g, GraphMode::Proper)),
            Err(Error::NotAPGroup { order: 6 })
        ));
        let g = group("Z9");
        assert!(matches!(root_classes(&g, &build_epg(&g, GraphMode::Full)), Err(Error::Mode { .. })));
    }

    #[test]
    fn root_classes_match_components_for_p_groups() {
        for s in ["E3^2", "H3", "D8", "Z4xZ2", "E2^3", "Z9xZ3"] {
            let g = group(s);
            let epg = build_epg(&g, GraphMode::Proper);
            let classes: Vec<VertexSet> =
                root_classes(&g, &epg).unwrap().classes.into_iter().map(|c| c.members).collect();
            let mut comps = epg.connected_components();
            let mut classes_sorted = classes.clone();
            comps.sort_by_key(|c| c.first());
            classes_sorted.sort_by_key(|c| c.first());
            assert_eq!(comps, classes_sorted, "{s}");
        }
    }

    #[test]
    fn power_graph_is_spanning_subgraph() {
        for s in ["Q8", "D8", "Z12", "E3^2xZ2"] {
            let g = group(s);
            let pg = power_graph(&g);
            let epg = build_epg(&g, GraphMode::Full);
            for (u, v) in pg.edges() {
                assert!(epg.adjacent(u, v), "{s}: {u}-{v}");
            }
        }
        // In Z6 the elements of order 2 and 3 are not powers of each other.
        let g = group("Z6");
        assert!(!power_graph(&g).adjacent(2, 3));
        assert!(build_epg(&g, GraphMode::Full).adjacent(2, 3));
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let h = g.induced(&VertexSet::from_indices(4, [1, 2, 3]));
        assert_eq!(h.labels(), &[1, 2, 3]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(h.vertex_of(3), Some(2));
    }
}
