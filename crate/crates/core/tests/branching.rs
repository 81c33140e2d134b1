mod common;

use common::small_grid;
use timeline_core::branching::{solve_branching_with, solve_ds_branching, solve_vc_branching, BranchLimits};
use timeline_core::dp_vimw::solve_pds_dp;
use timeline_core::oracle::oracle_solve;
use timeline_core::{verify, ProblemInstance, ProblemKind, SolveError, TemporalGraph};

#[test]
fn decisions_match_oracle() {
    for case in small_grid(600, 51_000) {
        let (g, k, ell) = (&case.graph, case.k, case.ell);
        for kind in [ProblemKind::VertexCover, ProblemKind::DominatingSet] {
            let inst = ProblemInstance::full(g.clone(), kind, k, ell).unwrap();
            let truth = oracle_solve(&inst).unwrap();
            let out = if kind.is_cover() { solve_vc_branching(g, k, ell) } else { solve_ds_branching(g, k, ell) }.unwrap();
            assert_eq!(out.decision, truth.decision, "{case:?} {kind:?}");
            assert!(out.depth <= g.n() * k, "{case:?}");
            if !kind.is_cover() {
                let table = solve_pds_dp(g, k, ell).unwrap();
                assert_eq!(out.decision, table.optimum == g.temporal_vertex_count());
            }
            match out.witness {
                Some(w) => {
                    assert!(out.decision);
                    assert!(verify(&inst, &w).satisfies_instance, "{case:?} {w:?}");
                    // every interval runs the full length or is clipped at T
                    for iv in w.iter() {
                        assert_eq!(iv.b, (iv.a + ell).min(g.lifetime()));
                    }
                }
                None => assert!(!out.decision),
            }
        }
    }
}

#[test]
fn edgeless_short_lifetime_is_yes() {
    let g = TemporalGraph::edgeless(3, 4).unwrap();
    let out = solve_ds_branching(&g, 2, 1).unwrap();
    assert!(out.decision);
    assert_eq!(out.witness.unwrap().len(), 6);
}

#[test]
fn pigeonhole_no() {
    for (k, ell) in [(1, 0), (2, 0), (3, 0)] {
        let g = TemporalGraph::edgeless(1, k * (ell + 1) + 1).unwrap();
        assert!(!solve_ds_branching(&g, k, ell).unwrap().decision);
    }
}

#[test]
fn vertex_cover_base_cases() {
    let g = TemporalGraph::edgeless(3, 3).unwrap();
    let out = solve_vc_branching(&g, 1, 0).unwrap();
    assert!(out.decision);
    assert!(out.witness.unwrap().is_empty());

    let g = TemporalGraph::new(2, vec![vec![(1, 2)]]).unwrap();
    let out = solve_vc_branching(&g, 1, 0).unwrap();
    assert!(out.decision);
    assert_eq!(out.witness.unwrap().len(), 1);
}

#[test]
fn node_limit_is_reported() {
    let g = timeline_core::generators::gen_random(8, 12, 0.4, 5);
    let limits = BranchLimits { max_nodes: Some(3) };
    let err = solve_branching_with(&g, 3, 1, false, limits).unwrap_err();
    assert!(matches!(err, SolveError::BudgetExceeded { .. }));
}
