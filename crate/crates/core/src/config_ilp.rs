//! Configuration integer program for single-step intervals (`ell = 0`).
//!
//! Snapshots with identical edge sets form a class `E` of multiplicity
//! `alpha(E)`. Variable `X[E][S]` counts the snapshots of class `E` in which
//! exactly the vertex set `S` is active; each such snapshot yields `t[E][S]`
//! dominated vertices (or covered edges) and costs one interval per vertex
//! of `S`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::SolveError;
use crate::graph::{Edge, Step, TemporalGraph, Vertex};
use crate::timeline::{ProblemKind, Timeline};

pub const DEFAULT_VERTEX_GUARD: u32 = 12;
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeClass {
    /// Sorted edge set shared by all snapshots of the class.
    pub edges: Vec<Edge>,
    /// The snapshots of the class, ascending.
    pub steps: Vec<Step>,
}

impl EdgeClass {
    pub fn multiplicity(&self) -> u32 {
        self.steps.len() as u32
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigProgram {
    pub n: u32,
    pub classes: Vec<EdgeClass>,
    /// `values[c][mask]`, bit `v - 1` of `mask` standing for vertex `v`.
    pub values: Vec<Vec<u64>>,
    pub budget: u32,
    pub target: u64,
    pub cover: bool,
}

impl ConfigProgram {
    pub fn subset_count(&self) -> usize {
        1usize << self.n
    }

    pub fn variable_name(class: usize, mask: usize) -> String {
        format!("X_{class}_{mask}")
    }
}

/// Deduplicates the snapshots into classes and tabulates every subset value.
pub fn build_config_program(
    g: &TemporalGraph,
    k: u32,
    t: u64,
    kind: ProblemKind,
) -> Result<ConfigProgram, SolveError> {
    build_config_program_guarded(g, k, t, kind, DEFAULT_VERTEX_GUARD)
}

pub fn build_config_program_guarded(
    g: &TemporalGraph,
    k: u32,
    t: u64,
    kind: ProblemKind,
    max_vertices: u32,
) -> Result<ConfigProgram, SolveError> {
    if g.n() > max_vertices {
        return Err(SolveError::GuardExceeded {
            what: "vertex count",
            value: g.n() as u64,
            limit: max_vertices as u64,
        });
    }
    let mut index: HashMap<Vec<Edge>, usize> = HashMap::new();
    let mut classes: Vec<EdgeClass> = Vec::new();
    for (i, snap) in g.snapshots() {
        let mut key = snap.edges().to_vec();
        key.sort_unstable();
        let slot = *index.entry(key.clone()).or_insert_with(|| {
            classes.push(EdgeClass {
                edges: key,
                steps: Vec::new(),
            });
            classes.len() - 1
        });
        classes[slot].steps.push(i);
    }
    let n = g.n();
    let cover = kind.is_cover();
    let values = classes
        .iter()
        .map(|class| (0..1usize << n).map(|mask| subset_value(n, &class.edges, mask, cover)).collect())
        .collect();
    Ok(ConfigProgram {
        n,
        classes,
        values,
        budget: k,
        target: t,
        cover,
    })
}

fn subset_value(n: u32, edges: &[Edge], mask: usize, cover: bool) -> u64 {
    let inside = |v: Vertex| mask >> (v - 1) & 1 == 1;
    if cover {
        return edges.iter().filter(|e| inside(e.u) || inside(e.v)).count() as u64;
    }
    let mut dominated = mask;
    for e in edges {
        if inside(e.u) {
            dominated |= 1 << (e.v - 1);
        }
        if inside(e.v) {
            dominated |= 1 << (e.u - 1);
        }
    }
    (dominated & ((1usize << n) - 1)).count_ones() as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigSolution {
    pub feasible: bool,
    /// Value of the returned assignment.
    pub value: u64,
    /// `assignment[c][mask]` = chosen `X` value.
    pub assignment: Vec<Vec<u32>>,
    pub witness: Timeline,
    pub nodes: u64,
}

/// Stops at the first assignment reaching the target.
pub fn solve_config_exact(prog: &ConfigProgram) -> Result<ConfigSolution, SolveError> {
    Composer::new(prog, Some(prog.target), DEFAULT_NODE_BUDGET).run()
}

/// Searches the whole space for the best value.
pub fn maximize_config(prog: &ConfigProgram) -> Result<ConfigSolution, SolveError> {
    Composer::new(prog, None, DEFAULT_NODE_BUDGET).run()
}

pub fn solve_config_with(prog: &ConfigProgram, goal: Option<u64>, node_budget: u64) -> Result<ConfigSolution, SolveError> {
    Composer::new(prog, goal, node_budget).run()
}

/// Depth-first enumeration of multisets of subsets, class by class.
struct Composer<'p> {
    prog: &'p ConfigProgram,
    goal: Option<u64>,
    node_budget: u64,
    /// One entry per snapshot: its class.
    slots: Vec<usize>,
    used: Vec<u32>,
    picks: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
    ceiling: u64,
    nodes: u64,
}

impl<'p> Composer<'p> {
    fn new(prog: &'p ConfigProgram, goal: Option<u64>, node_budget: u64) -> Self {
        let slots: Vec<usize> = prog
            .classes
            .iter()
            .enumerate()
            .flat_map(|(c, class)| std::iter::repeat_n(c, class.steps.len()))
            .collect();
        let full = prog.subset_count().saturating_sub(1);
        let ceiling = slots.iter().map(|&c| prog.values[c][full]).sum();
        Composer {
            prog,
            goal,
            node_budget,
            slots,
            used: vec![0; prog.n as usize + 1],
            picks: Vec::new(),
            best: None,
            ceiling,
            nodes: 0,
        }
    }

    fn available(&self) -> usize {
        (1..=self.prog.n)
            .filter(|&v| self.used[v as usize] < self.prog.budget)
            .fold(0usize, |m, v| m | 1 << (v - 1))
    }

    fn finished(&self) -> bool {
        match (&self.best, self.goal) {
            (Some((value, _)), Some(goal)) => *value >= goal,
            (Some((value, _)), None) => *value == self.ceiling,
            _ => false,
        }
    }

    fn run(mut self) -> Result<ConfigSolution, SolveError> {
        if self.prog.classes.is_empty() {
            self.best = Some((0, Vec::new()));
        } else {
            self.descend(0, 0)?;
        }
        let found = self.best.is_some();
        let (value, picks) = self.best.clone().unwrap_or((0, Vec::new()));
        let mut assignment: Vec<Vec<u32>> = vec![vec![0; self.prog.subset_count()]; self.prog.classes.len()];
        for (slot, &mask) in picks.iter().enumerate() {
            assignment[self.slots[slot]][mask] += 1;
        }
        let feasible = found && value >= self.prog.target;
        let witness = extract_timeline(self.prog, &assignment);
        Ok(ConfigSolution {
            feasible,
            value,
            assignment,
            witness,
            nodes: self.nodes,
        })
    }

    fn descend(&mut self, slot: usize, value: u64) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(SolveError::BudgetExceeded {
                required: self.nodes as u128,
                budget: self.node_budget as u128,
            });
        }
        if slot == self.slots.len() {
            if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                self.best = Some((value, self.picks.clone()));
            }
            return Ok(());
        }
        let avail = self.available();
        let optimistic = value
            + self.slots[slot..]
                .iter()
                .map(|&c| self.prog.values[c][avail])
                .sum::<u64>();
        let bar = match (self.goal, &self.best) {
            (Some(goal), _) => optimistic < goal,
            (None, Some((best, _))) => optimistic <= *best,
            (None, None) => false,
        };
        if bar {
            return Ok(());
        }
        let class = self.slots[slot];
        // masks within a class are non-decreasing, so each multiset shows up once
        let floor = if slot > 0 && self.slots[slot - 1] == class {
            self.picks[slot - 1]
        } else {
            0
        };
        for mask in floor..self.prog.subset_count() {
            if mask & !avail != 0 {
                continue;
            }
            self.charge(mask, true);
            self.picks.push(mask);
            self.descend(slot + 1, value + self.prog.values[class][mask])?;
            self.picks.pop();
            self.charge(mask, false);
            if self.finished() {
                break;
            }
        }
        Ok(())
    }

    fn charge(&mut self, mask: usize, on: bool) {
        for v in 1..=self.prog.n {
            if mask >> (v - 1) & 1 == 1 {
                if on {
                    self.used[v as usize] += 1;
                } else {
                    self.used[v as usize] -= 1;
                }
            }
        }
    }
}

/// Gives the snapshots of each class to the subsets in ascending mask order,
/// `X[c][mask]` consecutive snapshots per subset.
pub fn extract_timeline(prog: &ConfigProgram, assignment: &[Vec<u32>]) -> Timeline {
    let mut tl = Timeline::new();
    for (c, class) in prog.classes.iter().enumerate() {
        let mut steps = class.steps.iter();
        for (mask, &count) in assignment[c].iter().enumerate() {
            for _ in 0..count {
                let Some(&i) = steps.next() else { break };
                for v in 1..=prog.n {
                    if mask >> (v - 1) & 1 == 1 {
                        tl.push(v, i, i);
                    }
                }
            }
        }
    }
    tl
}

/// The program in LP text format.
pub fn export_lp(prog: &ConfigProgram) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\ configuration program: {} vertices, {} classes, budget {}, target {}",
        prog.n,
        prog.classes.len(),
        prog.budget,
        prog.target
    );
    let subsets = if prog.classes.is_empty() { 0 } else { prog.subset_count() };
    let weighted = |out: &mut String| {
        let mut first = true;
        for (c, row) in prog.values.iter().enumerate() {
            for (mask, &value) in row.iter().enumerate() {
                if value == 0 {
                    continue;
                }
                let sign = if first { "" } else { "+ " };
                let _ = write!(out, " {sign}{value} {}", ConfigProgram::variable_name(c, mask));
                first = false;
            }
        }
        if first {
            out.push_str(" 0");
        }
    };
    out.push_str("Maximize\n");
    if !prog.classes.is_empty() {
        out.push_str(" value:");
        weighted(&mut out);
        out.push('\n');
    }
    out.push_str("Subject To\n");
    if !prog.classes.is_empty() {
        out.push_str(" target:");
        weighted(&mut out);
        let _ = writeln!(out, " >= {}", prog.target);
        for (c, class) in prog.classes.iter().enumerate() {
            let _ = write!(out, " class_{c}:");
            for mask in 0..subsets {
                let sign = if mask == 0 { "" } else { "+ " };
                let _ = write!(out, " {sign}{}", ConfigProgram::variable_name(c, mask));
            }
            let _ = writeln!(out, " = {}", class.multiplicity());
        }
        for v in 1..=prog.n {
            let _ = write!(out, " budget_{v}:");
            let mut first = true;
            for c in 0..prog.classes.len() {
                for mask in 0..subsets {
                    if mask >> (v - 1) & 1 == 1 {
                        let sign = if first { "" } else { "+ " };
                        let _ = write!(out, " {sign}{}", ConfigProgram::variable_name(c, mask));
                        first = false;
                    }
                }
            }
            let _ = writeln!(out, " <= {}", prog.budget);
        }
    }
    out.push_str("Bounds\n");
    for c in 0..prog.classes.len() {
        for mask in 0..subsets {
            let _ = writeln!(out, " {} >= 0", ConfigProgram::variable_name(c, mask));
        }
    }
    out.push_str("General\n");
    for c in 0..prog.classes.len() {
        for mask in 0..subsets {
            let _ = writeln!(out, " {}", ConfigProgram::variable_name(c, mask));
        }
    }
    out.push_str("End\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_snapshots_share_a_class() {
        let g = TemporalGraph::new(3, vec![vec![(1, 2)]; 4]).unwrap();
        let prog = build_config_program(&g, 1, 0, ProblemKind::DominatingSet).unwrap();
        assert_eq!(prog.classes.len(), 1);
        assert_eq!(prog.classes[0].multiplicity(), 4);
    }

    #[test]
    fn closed_neighborhood_values() {
        let g = TemporalGraph::new(2, vec![vec![], vec![(1, 2)]]).unwrap();
        let prog = build_config_program(&g, 1, 0, ProblemKind::DominatingSet).unwrap();
        assert_eq!(prog.values[1][0b01], 2);
        assert_eq!(prog.values[0][0b01], 1);
        let prog = build_config_program(&g, 1, 0, ProblemKind::VertexCover).unwrap();
        assert_eq!(prog.values[1][0b10], 1);
    }

    #[test]
    fn zero_target_uses_empty_subsets() {
        let g = TemporalGraph::new(3, vec![vec![(1, 2)], vec![(2, 3)], vec![(1, 2)]]).unwrap();
        let prog = build_config_program(&g, 1, 0, ProblemKind::PartialDominatingSet).unwrap();
        let sol = solve_config_exact(&prog).unwrap();
        assert!(sol.feasible);
        for (c, class) in prog.classes.iter().enumerate() {
            assert_eq!(sol.assignment[c][0], class.multiplicity());
        }
        assert!(sol.witness.is_empty());
    }

    #[test]
    fn single_class_full_budget() {
        // a star: vertex 1 alone dominates everything in each step
        let g = TemporalGraph::new(3, vec![vec![(1, 2), (1, 3)]; 3]).unwrap();
        let prog = build_config_program(&g, 3, 9, ProblemKind::DominatingSet).unwrap();
        let sol = solve_config_exact(&prog).unwrap();
        assert!(sol.feasible);
        assert_eq!(sol.value, 9);
    }

    #[test]
    fn guard() {
        let g = TemporalGraph::edgeless(13, 1).unwrap();
        assert!(matches!(
            build_config_program(&g, 1, 0, ProblemKind::DominatingSet),
            Err(SolveError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn empty_program_exports_headers_only() {
        let text = export_lp(&ConfigProgram::default());
        assert!(text.contains("Maximize\nSubject To\nBounds\nGeneral\nEnd\n"));
    }
}
