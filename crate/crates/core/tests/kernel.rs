mod common;

use common::small_grid;
use timeline_core::generators::gen_random;
use timeline_core::kernel::{kernelize_ds, KernelCase, KernelOutcome};
use timeline_core::oracle::{oracle_solve, search_space, DEFAULT_ORACLE_BUDGET};
use timeline_core::params::max_snapshot_edges;
use timeline_core::{ProblemInstance, ProblemKind, TemporalGraph};

/// Small grid plus sparse, wider instances where the isolated-vertex case fires.
fn corpus() -> Vec<(TemporalGraph, u32, u32)> {
    let mut out: Vec<_> = small_grid(600, 41_000).into_iter().map(|c| (c.graph, c.k, c.ell)).collect();
    for seed in 0..400u64 {
        let n = 3 + (seed % 6) as u32;
        let lifetime = 1 + (seed / 6 % 6) as u32;
        let p = [0.0, 0.05, 0.15, 0.3][(seed % 4) as usize];
        out.push((gen_random(n, lifetime, p, 43_000 + seed), 1 + (seed / 36 % 2) as u32, (seed / 72 % 2) as u32));
    }
    out
}

#[test]
fn answers_agree_with_oracle_and_reduced_outcomes_are_small() {
    let (mut answered, mut reduced, mut checked) = (0, 0, 0);
    for (g, k, ell) in corpus() {
        let reach = k as u64 * (ell as u64 + 1);
        let q = max_snapshot_edges(&g) as u64;
        match kernelize_ds(&g, k, ell) {
            KernelOutcome::Answer { decision, case } => {
                answered += 1;
                if search_space(&g, k) <= DEFAULT_ORACLE_BUDGET {
                    let inst = ProblemInstance::full(g.clone(), ProblemKind::DominatingSet, k, ell).unwrap();
                    assert_eq!(decision, oracle_solve(&inst).unwrap().decision, "{case:?} k={k} ell={ell} {g:?}");
                    checked += 1;
                }
            }
            KernelOutcome::Reduced => {
                reduced += 1;
                assert!(g.lifetime() as u64 <= 2 * q * reach, "{g:?}");
                assert!(g.n() as u64 <= 4 * q * reach, "{g:?}");
                assert_eq!(kernelize_ds(&g, k, ell), KernelOutcome::Reduced);
            }
        }
    }
    assert_eq!(answered + reduced, 1000);
    assert!(checked > 100 && reduced > 100, "{checked} {reduced}");
}

#[test]
fn edgeless_instances() {
    let short = TemporalGraph::edgeless(3, 4).unwrap();
    assert!(matches!(kernelize_ds(&short, 2, 1), KernelOutcome::Answer { decision: true, .. }));
    let long = TemporalGraph::edgeless(3, 5).unwrap();
    assert!(matches!(kernelize_ds(&long, 2, 1), KernelOutcome::Answer { decision: false, .. }));
}

#[test]
fn one_edge_long_lifetime_is_no() {
    // q = 1, n = 2 >= 2q, T = 2qk(ell+1) + 1
    let g = TemporalGraph::new(2, vec![vec![(1, 2)]; 5]).unwrap();
    assert_eq!(
        kernelize_ds(&g, 2, 0),
        KernelOutcome::Answer {
            decision: false,
            case: KernelCase::DenseTooLong
        }
    );
}
