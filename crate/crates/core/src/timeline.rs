//! Timelines, problem instances and the certificate verifier.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Step, TemporalGraph, Vertex};

/// Vertex `v` is active at steps `a..=b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ActivityInterval {
    pub v: Vertex,
    pub a: Step,
    pub b: Step,
}

impl ActivityInterval {
    pub fn new(v: Vertex, a: Step, b: Step) -> Self {
        ActivityInterval { v, a, b }
    }

    /// `b - a`; a single-step interval has length 0.
    pub fn length(&self) -> u32 {
        self.b.saturating_sub(self.a)
    }

    pub fn contains(&self, i: Step) -> bool {
        self.a <= i && i <= self.b
    }

    pub fn is_well_formed(&self, g: &TemporalGraph) -> bool {
        self.v >= 1 && self.v <= g.n() && self.a >= 1 && self.a <= self.b && self.b <= g.lifetime()
    }
}

/// A multiset of activity intervals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timeline {
    pub intervals: Vec<ActivityInterval>,
}

impl Timeline {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_intervals(intervals: impl IntoIterator<Item = ActivityInterval>) -> Self {
        Timeline {
            intervals: intervals.into_iter().collect(),
        }
    }

    pub fn push(&mut self, v: Vertex, a: Step, b: Step) {
        self.intervals.push(ActivityInterval::new(v, a, b));
    }

    pub fn extend(&mut self, other: &Timeline) {
        self.intervals.extend_from_slice(&other.intervals);
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ActivityInterval> {
        self.intervals.iter()
    }

    /// Sorted by (v, a, b) with exact duplicates removed.
    pub fn normalized(&self) -> Timeline {
        let mut intervals = self.intervals.clone();
        intervals.sort_unstable();
        intervals.dedup();
        Timeline { intervals }
    }

    /// Number of intervals owned by each vertex (index 0 unused).
    pub fn per_vertex_counts(&self, n: u32) -> Vec<u32> {
        let mut counts = vec![0u32; n as usize + 1];
        for iv in &self.intervals {
            if let Some(c) = counts.get_mut(iv.v as usize) {
                *c += 1;
            }
        }
        counts
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProblemKind {
    /// Cover every temporal edge.
    VertexCover,
    /// Cover at least `t` temporal edges.
    PartialVertexCover,
    /// Dominate every temporal vertex.
    DominatingSet,
    /// Dominate at least `t` temporal vertices.
    PartialDominatingSet,
}

impl ProblemKind {
    pub fn is_partial(self) -> bool {
        matches!(
            self,
            ProblemKind::PartialVertexCover | ProblemKind::PartialDominatingSet
        )
    }

    pub fn is_cover(self) -> bool {
        matches!(
            self,
            ProblemKind::VertexCover | ProblemKind::PartialVertexCover
        )
    }

    pub fn short_name(self) -> &'static str {
        match self {
            ProblemKind::VertexCover => "vc",
            ProblemKind::PartialVertexCover => "pvc",
            ProblemKind::DominatingSet => "ds",
            ProblemKind::PartialDominatingSet => "pds",
        }
    }

    /// The partial counterpart of a kind (identity on partial kinds).
    pub fn partial(self) -> ProblemKind {
        if self.is_cover() {
            ProblemKind::PartialVertexCover
        } else {
            ProblemKind::PartialDominatingSet
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("k must be at least 1")]
    ZeroBudget,
    #[error("partial problems need a target t")]
    MissingTarget,
    #[error("full problems take no explicit target")]
    UnexpectedTarget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub graph: TemporalGraph,
    pub kind: ProblemKind,
    /// Maximum number of intervals per vertex.
    pub k: u32,
    /// Maximum interval length.
    pub ell: u32,
    t: Option<u64>,
}

impl ProblemInstance {
    pub fn new(
        graph: TemporalGraph,
        kind: ProblemKind,
        k: u32,
        ell: u32,
        t: Option<u64>,
    ) -> Result<Self, InstanceError> {
        if k == 0 {
            return Err(InstanceError::ZeroBudget);
        }
        match (kind.is_partial(), t) {
            (true, None) => return Err(InstanceError::MissingTarget),
            (false, Some(_)) => return Err(InstanceError::UnexpectedTarget),
            _ => {}
        }
        Ok(ProblemInstance {
            graph,
            kind,
            k,
            ell,
            t,
        })
    }

    pub fn full(graph: TemporalGraph, kind: ProblemKind, k: u32, ell: u32) -> Result<Self, InstanceError> {
        Self::new(graph, kind, k, ell, None)
    }

    pub fn partial(
        graph: TemporalGraph,
        kind: ProblemKind,
        k: u32,
        ell: u32,
        t: u64,
    ) -> Result<Self, InstanceError> {
        Self::new(graph, kind.partial(), k, ell, Some(t))
    }

    /// The number of covered edges or dominated vertices required.
    pub fn target(&self) -> u64 {
        match self.kind {
            ProblemKind::VertexCover => self.graph.temporal_edge_count(),
            ProblemKind::DominatingSet => self.graph.temporal_vertex_count(),
            _ => self.t.unwrap_or(0),
        }
    }

    pub fn explicit_target(&self) -> Option<u64> {
        self.t
    }

    /// Same graph and budgets, kind turned partial with the current target.
    pub fn as_partial(&self) -> ProblemInstance {
        ProblemInstance {
            graph: self.graph.clone(),
            kind: self.kind.partial(),
            k: self.k,
            ell: self.ell,
            t: Some(self.target()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub well_formed: bool,
    pub k_respected: bool,
    pub ell_respected: bool,
    pub covered: u64,
    pub dominated: u64,
    pub satisfies_instance: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("time step {step} outside 1..={lifetime}")]
pub struct StepOutOfRange {
    pub step: Step,
    pub lifetime: u32,
}

/// Vertices active at step `i`, ascending.
pub fn active_set(g: &TemporalGraph, tl: &Timeline, i: Step) -> Result<Vec<Vertex>, StepOutOfRange> {
    if i == 0 || i > g.lifetime() {
        return Err(StepOutOfRange {
            step: i,
            lifetime: g.lifetime(),
        });
    }
    let mut active: Vec<Vertex> = tl
        .iter()
        .filter(|iv| iv.contains(i) && iv.v >= 1 && iv.v <= g.n())
        .map(|iv| iv.v)
        .collect();
    active.sort_unstable();
    active.dedup();
    Ok(active)
}

/// Sweeps the time steps, handing the callback the activity flags of every
/// vertex at that step. Out-of-range parts of intervals are ignored.
fn sweep<F: FnMut(Step, &[bool])>(g: &TemporalGraph, tl: &Timeline, mut visit: F) {
    let lifetime = g.lifetime();
    let mut starts: Vec<Vec<Vertex>> = vec![Vec::new(); lifetime as usize + 2];
    let mut ends: Vec<Vec<Vertex>> = vec![Vec::new(); lifetime as usize + 2];
    for iv in tl.iter() {
        if iv.v == 0 || iv.v > g.n() || iv.a > iv.b || iv.b == 0 || iv.a > lifetime {
            continue;
        }
        let a = iv.a.max(1);
        let b = iv.b.min(lifetime);
        starts[a as usize].push(iv.v);
        ends[b as usize + 1].push(iv.v);
    }
    let mut depth = vec![0u32; g.n() as usize + 1];
    let mut active = vec![false; g.n() as usize + 1];
    for i in 1..=lifetime {
        for &v in &ends[i as usize] {
            depth[v as usize] -= 1;
            if depth[v as usize] == 0 {
                active[v as usize] = false;
            }
        }
        for &v in &starts[i as usize] {
            depth[v as usize] += 1;
            active[v as usize] = true;
        }
        visit(i, &active);
    }
}

pub fn covered_count(g: &TemporalGraph, tl: &Timeline) -> u64 {
    let mut count = 0u64;
    sweep(g, tl, |i, active| {
        count += g
            .snapshot(i)
            .edges()
            .iter()
            .filter(|e| active[e.u as usize] || active[e.v as usize])
            .count() as u64;
    });
    count
}

pub fn dominated_count(g: &TemporalGraph, tl: &Timeline) -> u64 {
    let mut count = 0u64;
    let mut stamp = vec![0 as Step; g.n() as usize + 1];
    sweep(g, tl, |i, active| {
        count += active.iter().filter(|&&x| x).count() as u64;
        for e in g.snapshot(i).edges() {
            for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                if active[x as usize] && !active[y as usize] && stamp[y as usize] != i {
                    stamp[y as usize] = i;
                    count += 1;
                }
            }
        }
    });
    count
}

/// Temporal edges with at least one active endpoint.
pub fn covered_temporal_edges(g: &TemporalGraph, tl: &Timeline) -> (u64, Vec<(Edge, Step)>) {
    let mut set = Vec::new();
    sweep(g, tl, |i, active| {
        for e in g.snapshot(i).edges() {
            if active[e.u as usize] || active[e.v as usize] {
                set.push((*e, i));
            }
        }
    });
    (set.len() as u64, set)
}

/// Temporal vertices in the closed neighborhood of the active set.
pub fn dominated_temporal_vertices(g: &TemporalGraph, tl: &Timeline) -> (u64, Vec<(Vertex, Step)>) {
    let mut set = Vec::new();
    sweep(g, tl, |i, active| {
        let snap = g.snapshot(i);
        for v in 1..=g.n() {
            if active[v as usize] || snap.neighbors(v).iter().any(|&u| active[u as usize]) {
                set.push((v, i));
            }
        }
    });
    (set.len() as u64, set)
}

pub fn verify(inst: &ProblemInstance, tl: &Timeline) -> VerificationReport {
    let g = &inst.graph;
    let well_formed = tl.iter().all(|iv| iv.is_well_formed(g));
    let k_respected = tl
        .per_vertex_counts(g.n())
        .iter()
        .all(|&c| c <= inst.k);
    let ell_respected = tl.iter().all(|iv| iv.length() <= inst.ell);
    let covered = covered_count(g, tl);
    let dominated = dominated_count(g, tl);
    let achieved = if inst.kind.is_cover() { covered } else { dominated };
    VerificationReport {
        well_formed,
        k_respected,
        ell_respected,
        covered,
        dominated,
        satisfies_instance: well_formed && k_respected && ell_respected && achieved >= inst.target(),
    }
}

/// Tiles `[from, to]` with up to `count` consecutive intervals of `ell + 1`
/// steps, each clipped at `to`.
pub(crate) fn tile(tl: &mut Timeline, v: Vertex, from: Step, to: Step, count: u32, ell: u32) {
    let mut a = from;
    for _ in 0..count {
        if a > to || a == 0 {
            break;
        }
        let b = a.saturating_add(ell).min(to);
        tl.push(v, a, b);
        a = b + 1;
    }
}

/// Every vertex tiles the whole lifetime; only meaningful when
/// `T <= k(ell + 1)`, where it activates everything.
pub fn all_active_timeline(g: &TemporalGraph, k: u32, ell: u32) -> Timeline {
    let mut tl = Timeline::new();
    for v in g.vertices() {
        tile(&mut tl, v, 1, g.lifetime(), k, ell);
    }
    tl
}
