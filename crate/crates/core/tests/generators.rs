mod common;

use common::static_domination_number;
use proptest::prelude::*;
use timeline_core::dp_vimw::solve_pvc_dp;
use timeline_core::generators::*;
use timeline_core::oracle::oracle_solve;
use timeline_core::params::imw;
use timeline_core::{verify, StaticGraph, Vertex};

fn triangle() -> StaticGraph {
    StaticGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
}

fn k4() -> StaticGraph {
    StaticGraph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
}

fn proper_colorings(g: &StaticGraph) -> Vec<Vec<u8>> {
    let n = g.n as usize;
    (0..3u32.pow(n as u32))
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let c = (x % 3) as u8;
                    x /= 3;
                    c
                })
                .collect::<Vec<u8>>()
        })
        .filter(|c| g.edges.iter().all(|e| c[(e.u - 1) as usize] != c[(e.v - 1) as usize]))
        .collect()
}

/// Connected-ish small sources with maximum degree at most 4.
fn sources() -> Vec<StaticGraph> {
    vec![
        StaticGraph::new(1, &[]).unwrap(),
        StaticGraph::new(2, &[(1, 2)]).unwrap(),
        triangle(),
        StaticGraph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap(),
        StaticGraph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)]).unwrap(),
        StaticGraph::new(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (3, 6)]).unwrap(),
    ]
}

fn two_two_formula() -> CnfFormula {
    parse_dimacs("p cnf 3 4\n1 2 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n").unwrap()
}

#[test]
fn random_generator_extremes_and_determinism() {
    let empty = gen_random(5, 4, 0.0, 1);
    assert_eq!(empty.temporal_edge_count(), 0);
    let full = gen_random(5, 4, 1.0, 1);
    assert!(full.snapshots().all(|(_, s)| s.edges().len() == 10));
    assert_eq!(gen_random(6, 7, 0.4, 99), gen_random(6, 7, 0.4, 99));
    assert_ne!(gen_random(6, 7, 0.4, 99), gen_random(6, 7, 0.4, 100));
}

#[test]
fn vizing_small_cases() {
    assert_eq!(vizing_edge_coloring(&StaticGraph::new(2, &[(1, 2)]).unwrap()).len(), 1);
    assert_eq!(vizing_edge_coloring(&triangle()).len(), 3);
}

fn bounded_degree_graph() -> impl Strategy<Value = StaticGraph> {
    (2u32..=10, proptest::collection::vec((1u32..=10, 1u32..=10), 0..40)).prop_map(|(n, pairs)| {
        let mut degree = vec![0; n as usize + 1];
        let mut kept: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in pairs {
            let (a, b) = ((a - 1) % n + 1, (b - 1) % n + 1);
            if a == b || kept.contains(&(a.min(b), a.max(b))) || degree[a as usize] == 4 || degree[b as usize] == 4 {
                continue;
            }
            degree[a as usize] += 1;
            degree[b as usize] += 1;
            kept.push((a.min(b), a.max(b)));
        }
        StaticGraph::new(n, &kept).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn vizing_classes_are_matchings(g in bounded_degree_graph()) {
        let classes = vizing_edge_coloring(&g);
        prop_assert!(classes.len() <= g.max_degree() + 1);
        let mut all: Vec<_> = classes.iter().flatten().copied().collect();
        all.sort();
        prop_assert_eq!(&all, &g.edges);
        for class in &classes {
            let mut seen = vec![false; g.n as usize + 1];
            for e in class {
                prop_assert!(!seen[e.u as usize] && !seen[e.v as usize]);
                seen[e.u as usize] = true;
                seen[e.v as usize] = true;
            }
        }
    }
}

#[test]
fn tvc_structure_and_forward_witnesses() {
    for g in sources() {
        let inst = reduce_3col_to_tvc(&g).unwrap();
        assert_eq!(inst.graph.lifetime(), 23);
        assert_eq!(inst.graph.n(), g.n);
        assert!(inst.graph.max_snapshot_degree() <= 1);
        assert_eq!((inst.k, inst.ell), (2, 4));
        for coloring in proper_colorings(&g).into_iter().take(6) {
            let tl = tvc_witness(&g, &coloring).unwrap();
            assert!(verify(&inst, &tl).satisfies_instance, "{g:?} {coloring:?}");
        }
    }
}

#[test]
fn tds_structure_and_forward_witnesses() {
    for g in sources() {
        let inst = reduce_3col_to_tds(&g).unwrap();
        assert_eq!(inst.graph.lifetime(), 35);
        assert_eq!(inst.graph.n(), 5 * g.n);
        assert!(inst.graph.max_snapshot_degree() <= 1);
        assert_eq!((inst.k, inst.ell), (3, 6));
        for coloring in proper_colorings(&g).into_iter().take(6) {
            let tl = tds_witness(&g, &coloring).unwrap();
            let report = verify(&inst, &tl);
            assert!(report.satisfies_instance, "{g:?} {coloring:?}");
            assert_eq!(report.dominated, 35 * 5 * g.n as u64);
        }
    }
}

#[test]
fn imw4_structure_and_forward_witnesses() {
    for g in sources().into_iter().filter(|g| !g.edges.is_empty()) {
        let inst = reduce_3col_to_tvc_imw4(&g).unwrap();
        assert_eq!(imw(&inst.graph), 4, "{g:?}");
        assert_eq!((inst.k, inst.ell), (2, 0));
        for e in inst.graph.underlying_graph().edges {
            let appearances = inst.graph.snapshots().filter(|(_, s)| s.has_edge(e.u, e.v)).count();
            assert_eq!(appearances, 1);
        }
        for coloring in proper_colorings(&g).into_iter().take(6) {
            let tl = tvc_imw4_witness(&g, &coloring).unwrap();
            assert!(verify(&inst, &tl).satisfies_instance, "{g:?} {coloring:?}");
        }
    }
}

#[test]
fn witnesses_reject_bad_colorings() {
    let g = triangle();
    assert_eq!(tvc_witness(&g, &[0, 0, 1]), Err(ReductionError::Monochromatic { u: 1, v: 2 }));
    assert!(matches!(tds_witness(&g, &[0, 1]), Err(ReductionError::ColoringLength { .. })));
    assert!(matches!(tvc_imw4_witness(&g, &[0, 1, 3]), Err(ReductionError::ColorOutOfRange { .. })));
}

#[test]
fn degree_above_four_is_rejected() {
    let star = StaticGraph::new(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
    assert_eq!(reduce_3col_to_tvc(&star).unwrap_err(), ReductionError::DegreeTooLarge(5));
}

#[test]
fn k4_cover_instance_is_no() {
    let inst = reduce_3col_to_tvc(&k4()).unwrap();
    let sol = solve_pvc_dp(&inst.graph, inst.k, inst.ell).unwrap();
    assert!(sol.optimum < inst.graph.temporal_edge_count());
    // the triangle reaches every edge with the same solver
    let yes = reduce_3col_to_tvc(&triangle()).unwrap();
    let sol = solve_pvc_dp(&yes.graph, yes.k, yes.ell).unwrap();
    assert_eq!(sol.optimum, yes.graph.temporal_edge_count());
}

#[test]
#[ignore = "long-running: 20 vertices over 35 snapshots"]
fn k4_domination_instance_is_no() {
    let inst = reduce_3col_to_tds(&k4()).unwrap();
    let out = timeline_core::branching::solve_ds_branching(&inst.graph, inst.k, inst.ell).unwrap();
    assert!(!out.decision);
}

#[test]
fn sat_structure_and_forward_witness() {
    let f = two_two_formula();
    f.check_two_two().unwrap();
    let inst = reduce_3sat22_to_tpds(&f).unwrap();
    let (n, m) = (3u64, 4u64);
    assert_eq!(inst.graph.lifetime() as u64, 6 * n + 7 * m);
    assert_eq!(inst.target(), 76 * n + 21 * m);
    assert_eq!(inst.graph.n() as u64, 14 * n + 6 * m);
    assert_eq!((inst.k, inst.ell), (1, 0));
    let all_true = vec![true; 3];
    assert!(f.is_satisfied_by(&all_true));
    let tl = tpds_sat_witness(&f, &all_true).unwrap();
    let report = verify(&inst, &tl);
    assert!(report.satisfies_instance, "{report:?}");
    assert_eq!(tpds_sat_witness(&f, &[false, false, false]), Err(ReductionError::Unsatisfied));
}

#[test]
fn ds_to_tpds_structure() {
    for g in sources() {
        for budget in 1..=g.n {
            let inst = reduce_ds_to_tpds(&g, budget).unwrap();
            assert_eq!(inst.graph.lifetime(), 2);
            assert!(inst.graph.snapshot(2).edges().is_empty());
            assert_eq!(inst.target(), 2 * g.n as u64 - budget as u64);
        }
    }
}

#[test]
fn ds_to_tpds_universal_vertex() {
    let star = StaticGraph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
    let inst = reduce_ds_to_tpds(&star, 1).unwrap();
    assert!(oracle_solve(&inst).unwrap().decision);
    assert!(verify(&inst, &tpds_witness(&star, 1, &[1]).unwrap()).satisfies_instance);
    assert!(tpds_witness(&star, 1, &[2]).is_err());
}

/// Every graph on up to six vertices: the reduced instance is a yes exactly
/// when a dominating set of the budget exists.
#[test]
fn ds_to_tpds_equivalence_on_all_small_graphs() {
    let mut graphs = 0;
    for n in 1..=6u32 {
        let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let chosen: Vec<_> = (0..pairs.len()).filter(|&j| mask >> j & 1 == 1).map(|j| pairs[j]).collect();
            let g = StaticGraph::new(n, &chosen).unwrap();
            let gamma = static_domination_number(&g);
            let best = oracle_solve(&reduce_ds_to_tpds(&g, 1).unwrap()).unwrap().optimum;
            for budget in 1..=n {
                let reduced_yes = best >= 2 * n as u64 - budget as u64;
                assert_eq!(reduced_yes, gamma <= budget, "{g:?} budget {budget}");
            }
            graphs += 1;
        }
    }
    assert_eq!(graphs, 1 + 2 + 8 + 64 + 1024 + 32768);
}

#[test]
fn source_formats_round_trip() {
    for g in sources() {
        assert_eq!(parse_static_graph(&emit_static_graph(&g)).unwrap(), g);
    }
    let f = two_two_formula();
    assert_eq!(parse_dimacs(&emit_dimacs(&f)).unwrap(), f);
    let bad = parse_dimacs("p cnf 1 1\n1 1 1 0\n").unwrap();
    assert!(bad.check_two_two().is_err());
}

