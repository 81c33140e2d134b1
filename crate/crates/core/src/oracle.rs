//! Exhaustive search over canonical timelines.
//!
//! Every vertex picks a set of at most `k` start times; an interval started at
//! `a` runs to `min(a + ell, T)`. Stretching an interval never loses a covered
//! edge or a dominated vertex, so this family contains an optimum.

use crate::error::{binomial, SolveError};
use crate::graph::{Step, TemporalGraph, Vertex};
use crate::timeline::{ProblemInstance, Timeline};

pub const DEFAULT_ORACLE_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Upper limit on the number of canonical timelines.
    pub budget: u128,
    /// Cut subtrees whose optimistic completion cannot beat the incumbent.
    pub prune: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_ORACLE_BUDGET,
            prune: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Best number of covered edges (cover kinds) or dominated vertices.
    pub optimum: u64,
    pub witness: Timeline,
    pub decision: bool,
}

/// Number of canonical timelines: `(sum_{j<=k} C(T, j))^n`, saturating.
pub fn search_space(g: &TemporalGraph, k: u32) -> u128 {
    let per_vertex = (0..=k as u64)
        .map(|j| binomial(g.lifetime() as u64, j))
        .fold(0u128, |a, b| a.saturating_add(b));
    crate::error::saturating_pow(per_vertex, g.n() as usize)
}

pub fn oracle_solve(inst: &ProblemInstance) -> Result<OracleResult, SolveError> {
    oracle_solve_with(inst, &OracleConfig::default())
}

pub fn oracle_solve_with(inst: &ProblemInstance, config: &OracleConfig) -> Result<OracleResult, SolveError> {
    let g = &inst.graph;
    let required = search_space(g, inst.k);
    if required > config.budget {
        return Err(SolveError::BudgetExceeded {
            required,
            budget: config.budget,
        });
    }
    let mut search = Search::new(g, inst.k, inst.ell, inst.kind.is_cover(), config.prune);
    search.descend_vertex(1);
    let witness = search.best_witness();
    let optimum = search.best.unwrap_or(0);
    Ok(OracleResult {
        optimum,
        witness,
        decision: optimum >= inst.target(),
    })
}

type Mask = Vec<u64>;

fn full_mask(words: usize, lifetime: u32) -> Mask {
    let mut m = vec![u64::MAX; words];
    let spare = words as u32 * 64 - lifetime;
    if spare > 0 {
        m[words - 1] >>= spare;
    }
    m
}

fn set_range(m: &mut Mask, a: Step, b: Step) {
    for i in a..=b {
        let bit = (i - 1) as usize;
        m[bit / 64] |= 1u64 << (bit % 64);
    }
}

struct Search<'g> {
    g: &'g TemporalGraph,
    k: u32,
    ell: u32,
    cover: bool,
    prune: bool,
    words: usize,
    full: Mask,
    /// Underlying edges with the steps at which they are present.
    edges: Vec<(Vertex, Vertex, Mask)>,
    /// Per vertex: indices into `edges`.
    incident: Vec<Vec<usize>>,
    masks: Vec<Mask>,
    starts: Vec<Vec<Step>>,
    best: Option<u64>,
    best_starts: Vec<Vec<Step>>,
    ceiling: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g TemporalGraph, k: u32, ell: u32, cover: bool, prune: bool) -> Self {
        let lifetime = g.lifetime();
        let words = (lifetime as usize).div_ceil(64);
        let full = full_mask(words, lifetime);
        let mut index = std::collections::BTreeMap::new();
        let mut edges: Vec<(Vertex, Vertex, Mask)> = Vec::new();
        for (i, snap) in g.snapshots() {
            for e in snap.edges() {
                let slot = *index.entry(*e).or_insert_with(|| {
                    edges.push((e.u, e.v, vec![0; words]));
                    edges.len() - 1
                });
                set_range(&mut edges[slot].2, i, i);
            }
        }
        let mut incident = vec![Vec::new(); g.n() as usize + 1];
        for (idx, (u, v, _)) in edges.iter().enumerate() {
            incident[*u as usize].push(idx);
            incident[*v as usize].push(idx);
        }
        let ceiling = if cover {
            g.temporal_edge_count()
        } else {
            g.temporal_vertex_count()
        };
        Search {
            g,
            k,
            ell,
            cover,
            prune,
            words,
            masks: vec![full.clone(); g.n() as usize + 1],
            full,
            edges,
            incident,
            starts: vec![Vec::new(); g.n() as usize + 1],
            best: None,
            best_starts: Vec::new(),
            ceiling,
        }
    }

    fn value(&self) -> u64 {
        let mut total = 0u64;
        if self.cover {
            for (u, v, present) in &self.edges {
                let (mu, mv) = (&self.masks[*u as usize], &self.masks[*v as usize]);
                for w in 0..self.words {
                    total += (present[w] & (mu[w] | mv[w])).count_ones() as u64;
                }
            }
        } else {
            let mut dom = vec![0u64; self.words];
            for v in 1..=self.g.n() as usize {
                dom.copy_from_slice(&self.masks[v]);
                for &idx in &self.incident[v] {
                    let (a, b, present) = &self.edges[idx];
                    let other = if *a as usize == v { *b } else { *a } as usize;
                    for w in 0..self.words {
                        dom[w] |= present[w] & self.masks[other][w];
                    }
                }
                total += dom.iter().map(|x| x.count_ones() as u64).sum::<u64>();
            }
        }
        total
    }

    fn done(&self) -> bool {
        self.best == Some(self.ceiling)
    }

    /// Vertices `< v` are fixed; vertices `>= v` still carry full masks.
    fn descend_vertex(&mut self, v: Vertex) {
        if self.done() {
            return;
        }
        if v > self.g.n() {
            let value = self.value();
            if self.best.is_none_or(|b| value > b) {
                self.best = Some(value);
                self.best_starts = self.starts.clone();
            }
            return;
        }
        if self.prune {
            if let Some(best) = self.best {
                if self.value() <= best {
                    return;
                }
            }
        }
        self.masks[v as usize] = vec![0; self.words];
        self.descend_starts(v, 0);
        self.masks[v as usize] = self.full.clone();
    }

    /// Choose further starts for `v`, each later than `after`.
    fn descend_starts(&mut self, v: Vertex, after: Step) {
        self.descend_vertex(v + 1);
        if self.starts[v as usize].len() as u32 >= self.k {
            return;
        }
        let lifetime = self.g.lifetime();
        for a in after + 1..=lifetime {
            if self.done() {
                return;
            }
            let saved = self.masks[v as usize].clone();
            set_range(&mut self.masks[v as usize], a, a.saturating_add(self.ell).min(lifetime));
            self.starts[v as usize].push(a);
            self.descend_starts(v, a);
            self.starts[v as usize].pop();
            self.masks[v as usize] = saved;
        }
    }

    fn best_witness(&self) -> Timeline {
        let lifetime = self.g.lifetime();
        let mut tl = Timeline::new();
        for (v, starts) in self.best_starts.iter().enumerate() {
            for &a in starts {
                tl.push(v as Vertex, a, a.saturating_add(self.ell).min(lifetime));
            }
        }
        tl
    }
}
