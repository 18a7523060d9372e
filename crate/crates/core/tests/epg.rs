mod common;

use epgdom::graph::{build_epg, graph_dominating_vertices, power_graph, root_classes, GraphMode};
use epgdom::group::{construct_group, parse_group_spec, FiniteGroup};

const SMALL: &[&str] = &[
    "Z1", "Z2", "Z6", "Z12", "E2^2", "Z4xZ2", "D6", "D8", "D10", "E3^2", "Z8", "H3", "Q8", "Q16",
    "Q32", "E2^3", "Z2xQ8", "Z3xQ8", "Z5xQ8", "E3^2xZ2", "E2^2xE3^2", "D12",
];

fn group(spec: &str) -> FiniteGroup {
    construct_group(&parse_group_spec(spec).unwrap()).unwrap()
}

#[test]
fn clique_union_matches_definition() {
    for spec in SMALL {
        let g = group(spec);
        let fast = build_epg(&g, GraphMode::Full);
        let slow = common::brute_force_epg(&g);
        assert_eq!(fast.edges(), slow.edges(), "{spec}");
    }
}

#[test]
fn power_graph_matches_definition_and_is_spanning_subgraph() {
    for spec in SMALL {
        let g = group(spec);
        let pg = power_graph(&g);
        assert_eq!(pg.edges(), common::brute_force_power_graph(&g).edges(), "{spec}");
        let epg = build_epg(&g, GraphMode::Full);
        assert!(pg.edges().iter().all(|&(u, v)| epg.adjacent(u, v)), "{spec}");
    }
}

#[test]
fn complete_iff_cyclic() {
    for spec in SMALL {
        let g = group(spec);
        let n = g.order();
        let cyclic = g.elem_orders().iter().any(|&o| o as usize == n);
        let epg = build_epg(&g, GraphMode::Full);
        assert_eq!(epg.edge_count() == n * (n - 1) / 2, cyclic, "{spec}");
    }
}

#[test]
fn star_and_proper_are_induced() {
    for spec in SMALL {
        let g = group(spec);
        let full = build_epg(&g, GraphMode::Full);
        let dom = graph_dominating_vertices(&full).unwrap();
        for mode in [GraphMode::Star, GraphMode::Proper] {
            let h = build_epg(&g, mode);
            for &x in h.removed() {
                assert!(h.vertex_of(x).is_none());
            }
            assert_eq!(h.len() + h.removed().len(), g.order());
            for (u, v) in h.edges() {
                assert!(full.adjacent(h.label(u), h.label(v)));
            }
            assert_eq!(h.edge_count(), {
                let keep: Vec<_> = h.labels().to_vec();
                full.edges().iter().filter(|(a, b)| keep.contains(a) && keep.contains(b)).count()
            });
        }
        assert_eq!(build_epg(&g, GraphMode::Proper).removed(), dom.to_vec().as_slice());
    }
}

#[test]
fn quaternion_dominators_are_identity_and_involution() {
    for k in 3..=6 {
        let g = group(&format!("Q{}", 1u32 << k));
        let dom = graph_dominating_vertices(&build_epg(&g, GraphMode::Full)).unwrap().to_vec();
        let involutions: Vec<_> = g.elements().filter(|&x| g.elem_order(x) == 2).collect();
        assert_eq!(involutions.len(), 1);
        assert_eq!(dom, vec![0, involutions[0]]);
    }
}

#[test]
fn root_classes_are_proper_components() {
    // Generalized quaternion groups have a single order-2 subgroup, so the
    // partition only matches components for the other non-cyclic p-groups.
    for spec in ["E2^2", "Z4xZ2", "D8", "E3^2", "H3", "E2^3", "Z2xQ8"] {
        let g = group(spec);
        let proper = build_epg(&g, GraphMode::Proper);
        let mut comps = proper.connected_components();
        let mut classes: Vec<_> = root_classes(&g, &proper).unwrap().classes.into_iter().map(|c| c.members).collect();
        comps.sort_by_key(|c| c.to_vec());
        classes.sort_by_key(|c| c.to_vec());
        assert_eq!(comps, classes, "{spec}");
    }
}

#[test]
fn quaternion_has_one_root_class() {
    for spec in ["Q8", "Q16"] {
        let g = group(spec);
        let classes = root_classes(&g, &build_epg(&g, GraphMode::Proper)).unwrap().classes;
        assert_eq!(classes.len(), 1, "{spec}");
    }
}

#[test]
fn root_classes_reject_non_p_groups_and_full_mode() {
    let g = group("Z6");
    assert!(root_classes(&g, &build_epg(&g, GraphMode::Star)).is_err());
    let g = group("Q8");
    assert!(root_classes(&g, &build_epg(&g, GraphMode::Full)).is_err());
}
