//! Structural facts about enhanced power graphs, checked exhaustively.
//! Each function returns the violating pairs (empty when the fact holds).

use num_integer::Integer;

use super::{EpGraph, GraphMode};
use crate::arith::prime_power;
use crate::group::{Elem, FiniteGroup};

/// Adjacent elements commute (they share a cyclic, hence abelian, subgroup).
pub fn noncommuting_edges(g: &FiniteGroup, epg: &EpGraph) -> Vec<(Elem, Elem)> {
    epg.edges()
        .into_iter()
        .map(|(u, v)| (epg.label(u), epg.label(v)))
        .filter(|&(a, b)| !g.commute(a, b))
        .collect()
}

/// Non-identity commuting elements of coprime orders are adjacent in the
/// star graph.
pub fn coprime_adjacency_violations(g: &FiniteGroup, star: &EpGraph) -> Vec<(Elem, Elem)> {
    assert_eq!(star.mode(), GraphMode::Star);
    let mut out = Vec::new();
    for u in 0..star.len() {
        for v in u + 1..star.len() {
            let (x, y) = (star.label(u), star.label(v));
            if g.elem_order(x).gcd(&g.elem_order(y)) == 1 && g.commute(x, y) && !star.adjacent(u, v) {
                out.push((x, y));
            }
        }
    }
    out
}

/// In the star graph of a p-group, an element `a` of order `p` connected to
/// `b` satisfies `⟨a⟩ ⊆ ⟨b⟩`. Returns no violations for non-p-groups.
pub fn path_lemma_violations(g: &FiniteGroup, star: &EpGraph) -> Vec<(Elem, Elem)> {
    assert_eq!(star.mode(), GraphMode::Star);
    let Some((p, _)) = prime_power(g.order() as u64) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for comp in star.connected_components() {
        let members: Vec<Elem> = comp.iter().map(|v| star.label(v)).collect();
        for &a in members.iter().filter(|&&a| g.elem_order(a) == p) {
            for &b in &members {
                if !g.powers(b).contains(&a) {
                    out.push((a, b));
                }
            }
        }
    }
    out
}
