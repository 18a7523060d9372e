//! Branch-and-bound for set-cover style domination on one component.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::DominationKind;

/// Budget exhausted.
#[derive(Debug)]
pub struct OutOfBudget;

struct Search {
    /// `cover[c]`: local vertices handled by choosing `c`. Symmetric, so it is
    /// also the candidate set of `c`.
    cover: Vec<VertexSet>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

/// Minimum solution on the subgraph induced by `verts` (assumed connected and,
/// for total domination, free of isolated vertices). Returns local indices
/// into `verts` and the number of search nodes used.
pub fn solve_component(
    graph: &Graph,
    verts: &[usize],
    kind: DominationKind,
    budget: u64,
) -> Result<(Vec<usize>, u64), OutOfBudget> {
    let n = verts.len();
    let keep = VertexSet::from_indices(graph.len(), verts.iter().copied());
    let local = graph.induced(&keep);
    let cover: Vec<VertexSet> = (0..n).map(|v| kind.cover(&local, v)).collect();

    let mut search = Search {
        best: greedy(&cover, n),
        cover,
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    search.branch(&VertexSet::full(n), &VertexSet::full(n))?;
    Ok((search.best, search.nodes))
}

/// Repeatedly take the candidate covering the most uncovered vertices.
fn greedy(cover: &[VertexSet], n: usize) -> Vec<usize> {
    let mut uncovered = VertexSet::full(n);
    let mut picked = Vec::new();
    while !uncovered.is_empty() {
        let (best, gain) = (0..n)
            .map(|c| (c, cover[c].intersection_count(&uncovered)))
            .max_by_key(|&(c, gain)| (gain, std::cmp::Reverse(c)))
            .expect("nonempty component");
        assert!(gain > 0, "uncoverable vertex in component");
        picked.push(best);
        uncovered.difference_with(&cover[best]);
    }
    picked
}

impl Search {
    fn branch(&mut self, uncovered: &VertexSet, allowed: &VertexSet) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        let Some((pivot, lower)) = self.bound(uncovered, allowed) else {
            return Ok(());
        };
        if self.chosen.len() + lower >= self.best.len() {
            return Ok(());
        }

        let mut options = self.cover[pivot].clone();
        options.intersect_with(allowed);
        let mut options: Vec<(usize, usize)> = options
            .iter()
            .map(|c| (c, self.cover[c].intersection_count(uncovered)))
            .collect();
        options.sort_by_key(|&(c, gain)| (std::cmp::Reverse(gain), c));

        // Sibling i excludes candidates tried by siblings 0..i.
        let mut allowed = allowed.clone();
        for (c, _) in options {
            allowed.remove(c);
            let mut rest = uncovered.clone();
            rest.difference_with(&self.cover[c]);
            self.chosen.push(c);
            let r = self.branch(&rest, &allowed);
            self.chosen.pop();
            r?;
        }
        Ok(())
    }

    /// The uncovered vertex with the fewest remaining candidates, and a lower
    /// bound on the candidates still needed. `None` if some vertex can no
    /// longer be covered.
    fn bound(&self, uncovered: &VertexSet, allowed: &VertexSet) -> Option<(usize, usize)> {
        let mut by_options: Vec<(usize, usize)> = Vec::with_capacity(uncovered.len());
        for u in uncovered.iter() {
            let k = self.cover[u].intersection_count(allowed);
            if k == 0 {
                return None;
            }
            by_options.push((k, u));
        }
        by_options.sort_unstable();
        let pivot = by_options[0].1;

        // Vertices with pairwise disjoint candidate sets each need their own pick.
        let mut used = VertexSet::new(allowed.universe());
        let mut packing = 0;
        for &(_, u) in &by_options {
            let mut opts = self.cover[u].clone();
            opts.intersect_with(allowed);
            if opts.is_disjoint(&used) {
                used.union_with(&opts);
                packing += 1;
            }
        }

        let widest = allowed
            .iter()
            .map(|c| self.cover[c].intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        let by_width = uncovered.len().div_ceil(widest.max(1));
        Some((pivot, packing.max(by_width)))
    }
}
