//! Subset enumeration in increasing size, the reference oracle.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{DominationCertificate, DominationKind, Method, Status};

pub const DEFAULT_BRUTE_FORCE_MAX: usize = 20;

pub fn brute_force_minimum(
    graph: &Graph,
    kind: DominationKind,
    max_vertices: usize,
) -> Result<DominationCertificate> {
    let n = graph.len();
    if n > max_vertices || n > 63 {
        return Err(Error::TooLarge {
            vertices: n,
            max: max_vertices.min(63),
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
        .collect();
    let ok = |set: u64| {
        (0..n).all(|v| {
            (kind == DominationKind::Dominating && set >> v & 1 == 1) || adj[v] & set != 0
        })
    };
    let mut tested = 0u64;
    for size in 0..=n {
        // Gosper's hack: all n-bit masks with `size` bits, ascending.
        let mut set: u64 = (1u64 << size) - 1;
        let limit = 1u64 << n;
        while set < limit {
            tested += 1;
            if ok(set) {
                let vertices = (0..n).filter(|&v| set >> v & 1 == 1).collect();
                return Ok(DominationCertificate::optimal(
                    graph,
                    kind,
                    vertices,
                    tested,
                    Method::BruteForce,
                ));
            }
            if set == 0 {
                break;
            }
            let c = set & set.wrapping_neg();
            let r = set + c;
            set = (((r ^ set) >> 2) / c) | r;
        }
    }
    Ok(DominationCertificate {
        kind,
        status: Status::NoneExists,
        nodes_explored: tested,
        method: Method::BruteForce,
    })
}
