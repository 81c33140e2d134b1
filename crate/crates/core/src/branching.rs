//! Bounded search trees for the full problems.
//!
//! Both searches look at the earliest unsatisfied temporal element and branch
//! over the vertices that can handle it, opening an interval right there.

use crate::error::SolveError;
use crate::graph::{Step, TemporalGraph, Vertex};
use crate::timeline::Timeline;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchOutcome {
    pub decision: bool,
    pub witness: Option<Timeline>,
    /// Search tree nodes visited.
    pub nodes: u64,
    /// Deepest recursion level reached.
    pub depth: u32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BranchLimits {
    pub max_nodes: Option<u64>,
}

pub fn solve_ds_branching(g: &TemporalGraph, k: u32, ell: u32) -> Result<BranchOutcome, SolveError> {
    Search::new(g, k, ell, false, BranchLimits::default()).run()
}

pub fn solve_vc_branching(g: &TemporalGraph, k: u32, ell: u32) -> Result<BranchOutcome, SolveError> {
    Search::new(g, k, ell, true, BranchLimits::default()).run()
}

pub fn solve_branching_with(
    g: &TemporalGraph,
    k: u32,
    ell: u32,
    cover: bool,
    limits: BranchLimits,
) -> Result<BranchOutcome, SolveError> {
    Search::new(g, k, ell, cover, limits).run()
}

struct Search<'g> {
    g: &'g TemporalGraph,
    k: u32,
    ell: u32,
    cover: bool,
    limits: BranchLimits,
    used: Vec<u32>,
    /// Nesting count of open intervals per (step, vertex).
    active: Vec<Vec<u32>>,
    chosen: Vec<(Vertex, Step, Step)>,
    nodes: u64,
    depth: u32,
}

impl<'g> Search<'g> {
    fn new(g: &'g TemporalGraph, k: u32, ell: u32, cover: bool, limits: BranchLimits) -> Self {
        Search {
            g,
            k,
            ell,
            cover,
            limits,
            used: vec![0; g.n() as usize + 1],
            active: vec![vec![0; g.n() as usize + 1]; g.lifetime() as usize + 1],
            chosen: Vec::new(),
            nodes: 0,
            depth: 0,
        }
    }

    fn run(mut self) -> Result<BranchOutcome, SolveError> {
        let found = self.descend(1, 0)?;
        Ok(BranchOutcome {
            decision: found,
            witness: found.then(|| Timeline::from_intervals(
                self.chosen.iter().map(|&(v, a, b)| crate::ActivityInterval::new(v, a, b)),
            )),
            nodes: self.nodes,
            depth: self.depth,
        })
    }

    fn is_active(&self, v: Vertex, i: Step) -> bool {
        self.active[i as usize][v as usize] > 0
    }

    /// Earliest failing element at or after step `from`: its step and the
    /// candidate vertices in branching order.
    fn first_failure(&self, from: Step) -> Option<(Step, Vec<Vertex>)> {
        for i in from..=self.g.lifetime() {
            let snap = self.g.snapshot(i);
            if self.cover {
                let mut open: Vec<_> = snap
                    .edges()
                    .iter()
                    .filter(|e| !self.is_active(e.u, i) && !self.is_active(e.v, i))
                    .collect();
                open.sort();
                if let Some(e) = open.first() {
                    return Some((i, vec![e.u, e.v]));
                }
            } else {
                for v in 1..=self.g.n() {
                    if self.is_active(v, i) || snap.neighbors(v).iter().any(|&u| self.is_active(u, i)) {
                        continue;
                    }
                    let mut cands = vec![v];
                    cands.extend_from_slice(snap.neighbors(v));
                    return Some((i, cands));
                }
            }
        }
        None
    }

    fn descend(&mut self, from: Step, level: u32) -> Result<bool, SolveError> {
        self.nodes += 1;
        self.depth = self.depth.max(level);
        if let Some(limit) = self.limits.max_nodes {
            if self.nodes > limit {
                return Err(SolveError::BudgetExceeded {
                    required: self.nodes as u128,
                    budget: limit as u128,
                });
            }
        }
        let Some((i, cands)) = self.first_failure(from) else {
            return Ok(true);
        };
        let b = i.saturating_add(self.ell).min(self.g.lifetime());
        for u in cands {
            if self.used[u as usize] >= self.k {
                continue;
            }
            self.toggle(u, i, b, true);
            if self.descend(i, level + 1)? {
                return Ok(true);
            }
            self.toggle(u, i, b, false);
        }
        Ok(false)
    }

    fn toggle(&mut self, u: Vertex, a: Step, b: Step, on: bool) {
        for step in a..=b {
            let slot = &mut self.active[step as usize][u as usize];
            if on {
                *slot += 1;
            } else {
                *slot -= 1;
            }
        }
        if on {
            self.used[u as usize] += 1;
            self.chosen.push((u, a, b));
        } else {
            self.used[u as usize] -= 1;
            self.chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_short_is_yes() {
        let g = TemporalGraph::edgeless(2, 4).unwrap();
        let out = solve_ds_branching(&g, 2, 1).unwrap();
        assert!(out.decision);
        assert_eq!(out.witness.unwrap().len(), 4);
    }

    #[test]
    fn pigeonhole_no() {
        let g = TemporalGraph::edgeless(1, 3).unwrap();
        assert!(!solve_ds_branching(&g, 2, 0).unwrap().decision);
    }

    #[test]
    fn vc_trivial_cases() {
        let g = TemporalGraph::edgeless(3, 2).unwrap();
        let out = solve_vc_branching(&g, 1, 0).unwrap();
        assert!(out.decision);
        assert!(out.witness.unwrap().is_empty());
        let g = TemporalGraph::new(2, vec![vec![(1, 2)]]).unwrap();
        let out = solve_vc_branching(&g, 1, 0).unwrap();
        assert_eq!(out.witness.unwrap().len(), 1);
    }

    #[test]
    fn node_limit() {
        let g = TemporalGraph::edgeless(4, 6).unwrap();
        let r = solve_branching_with(&g, 1, 0, false, BranchLimits { max_nodes: Some(3) });
        assert!(matches!(r, Err(SolveError::BudgetExceeded { .. })));
    }
}
