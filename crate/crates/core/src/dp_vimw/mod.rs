//! Dynamic programs over the vertex-interval-membership sequence.
//!
//! [`solve_pvc_dp`] maximizes covered temporal edges and [`solve_pds_dp`]
//! maximizes dominated temporal vertices; both run in time exponential only in
//! the largest bag. [`reduce_large_bags_pvc`] and [`solve_ds_vimw_x`] strip the
//! few largest bags first so that the table only sees the smaller ones.

mod engine;
mod large_bags;

use serde::Serialize;

use crate::error::SolveError;
use crate::graph::{TemporalGraph, Vertex};
use crate::params::vertex_lifetimes;
use crate::timeline::{all_active_timeline, tile, Timeline};

pub use engine::{profile_bound, DpStats, DEFAULT_DP_BUDGET};
pub use large_bags::{reduce_large_bags_pvc, solve_ds_vimw_x, solve_ds_vimw_x_with, DsOutcome, DsReason};

use engine::{FixedActivity, Objective};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RemovalReason {
    /// No incident edge in any snapshot.
    Isolated,
    /// Non-isolated in too few bags; greedy intervals cover all its edges.
    FewBags,
    /// Lives entirely inside a run of large bags.
    LargeRun,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionLedger {
    pub removed: Vec<(Vertex, RemovalReason)>,
    /// Temporal edges (or vertices) guaranteed by `forced`.
    pub credit: u64,
    pub forced: Timeline,
}

impl ReductionLedger {
    pub fn removed_mask(&self, n: u32) -> Vec<bool> {
        let mut mask = vec![false; n as usize + 1];
        for &(v, _) in &self.removed {
            mask[v as usize] = true;
        }
        mask
    }

    fn absorb(&mut self, other: ReductionLedger) {
        self.removed.extend(other.removed);
        self.credit += other.credit;
        self.forced.extend(&other.forced);
    }
}

/// A reduced graph together with its adjusted target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Same vertex ids; removed vertices lose all their edges.
    pub graph: TemporalGraph,
    /// `t` minus the credit, floored at 0.
    pub target: u64,
    pub ledger: ReductionLedger,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpSolution {
    /// Best achievable count on the original graph, credits included.
    pub optimum: u64,
    pub witness: Timeline,
    pub ledger: ReductionLedger,
    pub stats: DpStats,
}

/// Counts temporal edges touching `v` and drops them from `g`.
fn strip_vertex(g: &TemporalGraph, v: Vertex) -> (TemporalGraph, u64) {
    let credit = g
        .snapshots()
        .map(|(_, s)| s.degree(v) as u64)
        .sum();
    let mut mask = vec![false; g.n() as usize + 1];
    mask[v as usize] = true;
    (g.without_vertices(&mask), credit)
}

/// Removes underlying-isolated vertices and, repeatedly, every vertex that is
/// non-isolated in fewer than `k(ell+1)+1` bags. Such a vertex gets `k`
/// consecutive intervals from its first non-isolated step, which cover all of
/// its edges.
pub fn preprocess_pvc(g: &TemporalGraph, k: u32, ell: u32, t: u64) -> Reduction {
    let threshold = k as u64 * (ell as u64 + 1) + 1;
    let mut graph = g.clone();
    let mut ledger = ReductionLedger::default();
    let mut gone = vec![false; g.n() as usize + 1];
    loop {
        let spans = vertex_lifetimes(&graph);
        let mut changed = false;
        for v in graph.vertices() {
            if gone[v as usize] {
                continue;
            }
            match spans[v as usize] {
                None => {
                    gone[v as usize] = true;
                    ledger.removed.push((v, RemovalReason::Isolated));
                }
                Some((first, last)) if ((last - first + 1) as u64) < threshold => {
                    // spans may be stale after an earlier removal this round
                    if changed {
                        continue;
                    }
                    tile(&mut ledger.forced, v, first, last, k, ell);
                    let (next, credit) = strip_vertex(&graph, v);
                    graph = next;
                    ledger.credit += credit;
                    gone[v as usize] = true;
                    ledger.removed.push((v, RemovalReason::FewBags));
                    changed = true;
                }
                Some(_) => {}
            }
        }
        if !changed {
            break;
        }
    }
    Reduction {
        graph,
        target: t.saturating_sub(ledger.credit),
        ledger,
    }
}

/// Maximum number of coverable temporal edges.
pub fn solve_pvc_dp(g: &TemporalGraph, k: u32, ell: u32) -> Result<DpSolution, SolveError> {
    solve_pvc_dp_with(g, k, ell, DEFAULT_DP_BUDGET)
}

pub fn solve_pvc_dp_with(g: &TemporalGraph, k: u32, ell: u32, budget: u128) -> Result<DpSolution, SolveError> {
    let reduction = preprocess_pvc(g, k, ell, 0);
    finish_pvc(reduction, k, ell, budget)
}

/// Large-bag reduction, then the usual preprocessing, then the table.
pub fn solve_pvc_vimw_x(g: &TemporalGraph, k: u32, ell: u32, budget: u128) -> Result<DpSolution, SolveError> {
    let first = reduce_large_bags_pvc(g, k, ell, 0);
    let mut second = preprocess_pvc(&first.graph, k, ell, 0);
    let mut ledger = first.ledger;
    ledger.absorb(std::mem::take(&mut second.ledger));
    second.ledger = ledger;
    finish_pvc(second, k, ell, budget)
}

fn finish_pvc(reduction: Reduction, k: u32, ell: u32, budget: u128) -> Result<DpSolution, SolveError> {
    let run = engine::run(&reduction.graph, k, ell, Objective::Cover, FixedActivity::default(), budget)?;
    let mut witness = reduction.ledger.forced.clone();
    witness.extend(&run.timeline);
    Ok(DpSolution {
        optimum: reduction.ledger.credit + run.optimum.unwrap_or(0),
        witness,
        ledger: reduction.ledger,
        stats: run.stats,
    })
}

/// Maximum number of dominated temporal vertices.
pub fn solve_pds_dp(g: &TemporalGraph, k: u32, ell: u32) -> Result<DpSolution, SolveError> {
    solve_pds_dp_with(g, k, ell, DEFAULT_DP_BUDGET)
}

pub fn solve_pds_dp_with(g: &TemporalGraph, k: u32, ell: u32, budget: u128) -> Result<DpSolution, SolveError> {
    let lifetime = g.lifetime();
    let reach = k as u64 * (ell as u64 + 1);
    if lifetime as u64 <= reach {
        return Ok(DpSolution {
            optimum: g.temporal_vertex_count(),
            witness: all_active_timeline(g, k, ell),
            ledger: ReductionLedger::default(),
            stats: DpStats::default(),
        });
    }
    let mut ledger = ReductionLedger::default();
    for (v, span) in vertex_lifetimes(g).into_iter().enumerate().skip(1) {
        if span.is_none() {
            let v = v as Vertex;
            ledger.removed.push((v, RemovalReason::Isolated));
            ledger.credit += reach.min(lifetime as u64);
            tile(&mut ledger.forced, v, 1, lifetime, k, ell);
        }
    }
    let run = engine::run(g, k, ell, Objective::Dominate, FixedActivity::default(), budget)?;
    let mut witness = ledger.forced.clone();
    witness.extend(&run.timeline);
    Ok(DpSolution {
        optimum: ledger.credit + run.optimum.unwrap_or(0),
        witness,
        ledger,
        stats: run.stats,
    })
}
