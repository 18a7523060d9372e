//! Cross-checks the branch-and-bound solver against subset enumeration on
//! seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::Graph;
use crate::solver::{brute_force_minimum, solve_minimum, DominationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    ErdosRenyi { per_mille: u32 },
    CliqueUnion,
}

const FAMILIES: [Family; 4] = [
    Family::ErdosRenyi { per_mille: 100 },
    Family::ErdosRenyi { per_mille: 300 },
    Family::ErdosRenyi { per_mille: 600 },
    Family::CliqueUnion,
];

#[derive(Debug, Clone, Serialize)]
pub struct Disagreement {
    pub trial: usize,
    pub family: Family,
    pub kind: DominationKind,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub branch_and_bound: Option<usize>,
    pub brute_force: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub trials: usize,
    pub comparisons: usize,
    pub first_failure: Option<Disagreement>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, family: Family) -> Graph {
    let mut g = Graph::with_labels((0..n).collect());
    match family {
        Family::ErdosRenyi { per_mille } => {
            let p = f64::from(per_mille) / 1000.0;
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        Family::CliqueUnion => {
            let mut start = 0;
            while start < n {
                let size = rng.gen_range(1..=(n - start).min(6));
                for u in start..start + size {
                    for v in u + 1..start + size {
                        g.add_edge(u, v);
                    }
                }
                start += size;
            }
        }
    }
    g
}

/// Runs `trials` graphs with 1..=`max_n` vertices; families rotate per trial.
/// Stops at the first disagreement.
pub fn solver_selftest(seed: u64, trials: usize, max_n: usize) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_n = max_n.max(1);
    let mut comparisons = 0;
    for trial in 0..trials {
        let family = FAMILIES[trial % FAMILIES.len()];
        let n = rng.gen_range(1..=max_n);
        let g = random_graph(&mut rng, n, family);
        for kind in [DominationKind::Dominating, DominationKind::TotalDominating] {
            let fast = solve_minimum(&g, kind).ok().and_then(|c| c.size());
            let slow = brute_force_minimum(&g, kind, max_n)
                .expect("selftest graphs fit the enumeration limit")
                .size();
            comparisons += 1;
            if fast != slow {
                return SelftestReport {
                    seed,
                    trials: trial + 1,
                    comparisons,
                    first_failure: Some(Disagreement {
                        trial,
                        family,
                        kind,
                        vertices: n,
                        edges: g.edges(),
                        branch_and_bound: fast,
                        brute_force: slow,
                    }),
                };
            }
        }
    }
    SelftestReport {
        seed,
        trials,
        comparisons,
        first_failure: None,
    }
}
