//! Reductions keyed on the largest bags.

use serde::Serialize;

use super::engine::{self, FixedActivity, Objective};
use super::{strip_vertex, Reduction, ReductionLedger, RemovalReason, DEFAULT_DP_BUDGET};
use crate::error::{binomial, SolveError};
use crate::graph::{Step, TemporalGraph, Vertex};
use crate::params::{large_bag_mask, vertex_lifetimes, vertex_membership_sequence};
use crate::timeline::{all_active_timeline, tile, Timeline};

/// Maximal runs `[i, j]` of consecutive large bags.
fn large_runs(g: &TemporalGraph, count: usize) -> Vec<(Step, Step)> {
    let sizes = vertex_membership_sequence(g).sizes();
    let mask = large_bag_mask(&sizes, count);
    let mut runs = Vec::new();
    let mut start: Option<Step> = None;
    for (idx, &large) in mask.iter().enumerate() {
        let i = idx as Step + 1;
        match (large, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                runs.push((s, i - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        runs.push((s, mask.len() as Step));
    }
    runs
}

/// Vertices whose whole lifetime lies inside one run of large bags.
fn run_residents(g: &TemporalGraph, count: usize) -> Vec<Vertex> {
    let spans = vertex_lifetimes(g);
    let runs = large_runs(g, count);
    let mut out = Vec::new();
    for v in g.vertices() {
        if let Some((first, last)) = spans[v as usize] {
            if runs.iter().any(|&(i, j)| i <= first && last <= j) {
                out.push(v);
            }
        }
    }
    out
}

/// Marks the `k(ell+1)` largest bags as large and removes every vertex living
/// only inside a run of them. Each such vertex lives for at most `k(ell+1)`
/// steps, so `k` consecutive intervals cover all its edges.
pub fn reduce_large_bags_pvc(g: &TemporalGraph, k: u32, ell: u32, t: u64) -> Reduction {
    let count = (k as usize).saturating_mul(ell as usize + 1);
    let spans = vertex_lifetimes(g);
    let mut graph = g.clone();
    let mut ledger = ReductionLedger::default();
    for v in run_residents(g, count) {
        let (first, last) = spans[v as usize].expect("residents are non-isolated");
        tile(&mut ledger.forced, v, first, last, k, ell);
        let (next, credit) = strip_vertex(&graph, v);
        graph = next;
        ledger.credit += credit;
        ledger.removed.push((v, RemovalReason::LargeRun));
    }
    Reduction {
        graph,
        target: t.saturating_sub(ledger.credit),
        ledger,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DsReason {
    /// `T <= k(ell+1)`: every vertex can be active throughout.
    ShortLifetime,
    /// A vertex without edges cannot dominate itself at every step.
    IsolatedVertex,
    /// A large-run resident is isolated for more than `k(ell+1)` steps.
    ForcedNo,
    /// A large-run resident cannot self-dominate all its isolated steps.
    Untileable,
    /// Decided by the bag table.
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsOutcome {
    pub decision: bool,
    /// Present exactly when `decision` holds.
    pub witness: Option<Timeline>,
    pub reason: DsReason,
}

impl DsOutcome {
    fn no(reason: DsReason) -> Self {
        DsOutcome {
            decision: false,
            witness: None,
            reason,
        }
    }
}

/// Limits for the per-resident placement search and for the number of
/// placement combinations handed to the table.
const PLACEMENT_BUDGET: u128 = 1_000_000;
const COMBINATION_BUDGET: usize = 4096;

pub fn solve_ds_vimw_x(g: &TemporalGraph, k: u32, ell: u32) -> Result<DsOutcome, SolveError> {
    solve_ds_vimw_x_with(g, k, ell, DEFAULT_DP_BUDGET)
}

/// Full domination using the `ell+1` largest bags as the large ones.
///
/// Residents of large runs are isolated outside their run, so their `k`
/// intervals are almost pinned down. For every resident all placements that
/// self-dominate its isolated steps are enumerated and only the inclusion-wise
/// maximal activity patterns are kept; the table then runs on the remaining
/// vertices with the residents' activity fixed.
pub fn solve_ds_vimw_x_with(g: &TemporalGraph, k: u32, ell: u32, budget: u128) -> Result<DsOutcome, SolveError> {
    let lifetime = g.lifetime();
    let reach = k as u64 * (ell as u64 + 1);
    if lifetime as u64 <= reach {
        return Ok(DsOutcome {
            decision: true,
            witness: Some(all_active_timeline(g, k, ell)),
            reason: DsReason::ShortLifetime,
        });
    }
    let spans = vertex_lifetimes(g);
    if spans.iter().skip(1).any(Option::is_none) {
        return Ok(DsOutcome::no(DsReason::IsolatedVertex));
    }
    let residents = run_residents(g, ell as usize + 1);
    if !residents.is_empty() && lifetime as u64 > reach + ell as u64 + 1 {
        return Ok(DsOutcome::no(DsReason::ForcedNo));
    }

    let mut choices: Vec<Vec<Vec<Step>>> = Vec::with_capacity(residents.len());
    for &v in &residents {
        let isolated: Vec<bool> = (1..=lifetime).map(|i| g.snapshot(i).is_isolated(v)).collect();
        let found = maximal_placements(&isolated, k, ell)?;
        if found.is_empty() {
            return Ok(DsOutcome::no(DsReason::Untileable));
        }
        choices.push(found);
    }
    let combos = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    match combos {
        Some(c) if c <= COMBINATION_BUDGET => {}
        _ => {
            return Err(SolveError::BudgetExceeded {
                required: combos.map_or(u128::MAX, |c| c as u128),
                budget: COMBINATION_BUDGET as u128,
            })
        }
    }

    let mut excluded = vec![false; g.n() as usize + 1];
    for &v in &residents {
        excluded[v as usize] = true;
    }
    let target = (g.n() as u64 - residents.len() as u64) * lifetime as u64;
    let mut pick = vec![0usize; residents.len()];
    loop {
        let mut fixed = FixedActivity {
            excluded: excluded.clone(),
            active: vec![Vec::new(); lifetime as usize],
            needs_domination: vec![Vec::new(); lifetime as usize],
        };
        let mut forced = Timeline::new();
        for (r, &v) in residents.iter().enumerate() {
            let starts = &choices[r][pick[r]];
            let mut on = vec![false; lifetime as usize];
            for &a in starts {
                let b = a.saturating_add(ell).min(lifetime);
                forced.push(v, a, b);
                on[(a - 1) as usize..b as usize].iter_mut().for_each(|x| *x = true);
            }
            for (idx, &active) in on.iter().enumerate() {
                if active {
                    fixed.active[idx].push(v);
                } else {
                    fixed.needs_domination[idx].push(v);
                }
            }
        }
        let run = engine::run(g, k, ell, Objective::Dominate, fixed, budget)?;
        if run.optimum == Some(target) {
            let mut witness = forced;
            witness.extend(&run.timeline);
            return Ok(DsOutcome {
                decision: true,
                witness: Some(witness),
                reason: DsReason::Table,
            });
        }
        // next combination
        let mut r = 0;
        loop {
            if r == pick.len() {
                return Ok(DsOutcome::no(DsReason::Table));
            }
            pick[r] += 1;
            if pick[r] < choices[r].len() {
                break;
            }
            pick[r] = 0;
            r += 1;
        }
    }
}

/// Start sets of `min(k, T)` full-length intervals that activate every
/// required step, reduced to those whose activity is inclusion-maximal.
fn maximal_placements(required: &[bool], k: u32, ell: u32) -> Result<Vec<Vec<Step>>, SolveError> {
    let lifetime = required.len() as Step;
    let count = k.min(lifetime);
    let space = binomial(lifetime as u64, count as u64);
    if space > PLACEMENT_BUDGET {
        return Err(SolveError::BudgetExceeded {
            required: space,
            budget: PLACEMENT_BUDGET,
        });
    }
    let mut found: Vec<(Vec<Step>, Vec<bool>)> = Vec::new();
    let mut starts = Vec::with_capacity(count as usize);
    enumerate_starts(required, count, ell, 1, &mut starts, &mut found);
    let mut keep: Vec<(Vec<Step>, Vec<bool>)> = Vec::new();
    for (idx, (starts, on)) in found.iter().enumerate() {
        let dominated = found.iter().enumerate().any(|(other, (_, cover))| {
            other != idx
                && on.iter().zip(cover).all(|(&x, &y)| !x || y)
                && (on != cover || other < idx)
        });
        if !dominated {
            keep.push((starts.clone(), on.clone()));
        }
    }
    Ok(keep.into_iter().map(|(s, _)| s).collect())
}

fn enumerate_starts(
    required: &[bool],
    count: u32,
    ell: u32,
    from: Step,
    starts: &mut Vec<Step>,
    found: &mut Vec<(Vec<Step>, Vec<bool>)>,
) {
    let lifetime = required.len() as Step;
    let covered_until = starts.last().map_or(0, |&a| a.saturating_add(ell).min(lifetime));
    // first required step not yet activated
    let gap = (covered_until + 1..=lifetime).find(|&i| required[(i - 1) as usize]);
    if starts.len() as u32 == count {
        if gap.is_none() {
            let mut on = vec![false; lifetime as usize];
            for &a in starts.iter() {
                let b = a.saturating_add(ell).min(lifetime);
                on[(a - 1) as usize..b as usize].iter_mut().for_each(|x| *x = true);
            }
            found.push((starts.clone(), on));
        }
        return;
    }
    let remaining = count - starts.len() as u32;
    for a in from..=lifetime - remaining + 1 {
        if let Some(x) = gap {
            if a > x {
                break;
            }
        }
        starts.push(a);
        enumerate_starts(required, count, ell, a + 1, starts, found);
        starts.pop();
    }
}
