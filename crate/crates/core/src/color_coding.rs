//! Randomized color coding for the partial problems, parameterized by `t`.
//!
//! Temporal vertices (or temporal edges) receive random colors from `0..t`.
//! A subset dynamic program then decides whether some timeline hits all `t`
//! colors; such a timeline dominates (covers) at least `t` elements. Repeating
//! with fresh colorings drives the miss probability on yes-instances below
//! `delta`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::SolveError;
use crate::graph::{Step, TemporalGraph, Vertex};
use crate::timeline::{all_active_timeline, ProblemInstance, Timeline};

pub const MAX_COLORS: u32 = 20;
pub const DEFAULT_DELTA: f64 = 0.01;

#[derive(Clone, Debug, PartialEq)]
pub struct ColoringTrialPlan {
    pub t: u32,
    pub trials: u64,
    pub master_seed: u64,
    pub delta: f64,
}

impl ColoringTrialPlan {
    /// Uses `ceil(e^t ln(1/delta))` trials.
    pub fn new(t: u32, master_seed: u64, delta: f64) -> Self {
        ColoringTrialPlan {
            t,
            trials: required_trials(t, delta),
            master_seed,
            delta,
        }
    }

    pub fn for_instance(inst: &ProblemInstance, master_seed: u64, delta: f64) -> Self {
        let t = inst.target().min(u32::MAX as u64) as u32;
        Self::new(t, master_seed, delta)
    }
}

pub fn required_trials(t: u32, delta: f64) -> u64 {
    let delta = delta.clamp(f64::MIN_POSITIVE, 1.0);
    let trials = ((t as f64).exp() * (1.0 / delta).ln()).ceil();
    if trials.is_finite() {
        (trials as u64).max(1)
    } else {
        u64::MAX
    }
}

/// One color per temporal vertex (domination) or temporal edge (cover).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
    /// For cover colorings: index of the first edge of each snapshot.
    offsets: Vec<usize>,
    lifetime: u32,
    cover: bool,
}

impl Coloring {
    fn slots(g: &TemporalGraph, cover: bool) -> (usize, Vec<usize>) {
        if cover {
            let mut offsets = Vec::with_capacity(g.lifetime() as usize + 1);
            let mut acc = 0;
            for (_, s) in g.snapshots() {
                offsets.push(acc);
                acc += s.edges().len();
            }
            offsets.push(acc);
            (acc, offsets)
        } else {
            (g.temporal_vertex_count() as usize, Vec::new())
        }
    }

    pub fn random(g: &TemporalGraph, t: u32, cover: bool, rng: &mut impl Rng) -> Self {
        let (len, offsets) = Self::slots(g, cover);
        let colors = (0..len).map(|_| rng.gen_range(0..t.max(1)) as u8).collect();
        Coloring {
            colors,
            offsets,
            lifetime: g.lifetime(),
            cover,
        }
    }

    /// Builds a coloring from an explicit color list in slot order: vertex
    /// major for domination, snapshot then edge order for cover.
    pub fn from_colors(g: &TemporalGraph, cover: bool, colors: Vec<u8>) -> Option<Self> {
        let (len, offsets) = Self::slots(g, cover);
        (colors.len() == len).then_some(Coloring {
            colors,
            offsets,
            lifetime: g.lifetime(),
            cover,
        })
    }

    fn vertex_color(&self, v: Vertex, i: Step) -> u8 {
        self.colors[((v - 1) * self.lifetime + (i - 1)) as usize]
    }

    fn edge_color(&self, i: Step, idx: usize) -> u8 {
        self.colors[self.offsets[(i - 1) as usize] + idx]
    }
}

/// Candidate intervals of every vertex: full length, start in `1..=T-ell`;
/// a single `(1, T)` when the lifetime is shorter than one interval.
fn candidate_intervals(lifetime: u32, ell: u32) -> Vec<(Step, Step)> {
    if lifetime < ell + 1 {
        vec![(1, lifetime)]
    } else {
        (1..=lifetime - ell).map(|a| (a, a + ell)).collect()
    }
}

/// Subset table: `reach[j][budget]` holds the color sets that vertices
/// `1..=j` can hit, with vertex `j` still owning `budget` unused intervals.
pub struct ColorTable {
    full: usize,
    intervals: Vec<(Step, Step)>,
    /// `hits[j][a]`: colors hit by the `a`-th candidate interval of vertex `j + 1`.
    hits: Vec<Vec<usize>>,
    k: u32,
    reach: Vec<Vec<Vec<bool>>>,
}

impl ColorTable {
    pub fn accepts(&self) -> bool {
        let n = self.hits.len();
        self.reach[n][self.k as usize][self.full]
    }

    /// Whether the colors in `set` can be hit by vertices `1..=j` with vertex
    /// `j` limited to `budget` intervals.
    pub fn holds(&self, set: usize, j: usize, budget: u32) -> bool {
        self.reach[j][budget as usize][set]
    }

    /// Re-descends the table, preferring the earliest start at every choice.
    pub fn witness(&self) -> Option<Timeline> {
        if !self.accepts() {
            return None;
        }
        let mut tl = Timeline::new();
        let mut set = self.full;
        for j in (1..=self.hits.len()).rev() {
            for budget in (1..=self.k).rev() {
                let pick = self.hits[j - 1]
                    .iter()
                    .position(|&c| self.reach[j][(budget - 1) as usize][set & !c])
                    .expect("a true cell has a true predecessor");
                let hit = self.hits[j - 1][pick];
                if set & hit != 0 {
                    let (a, b) = self.intervals[pick];
                    tl.push(j as Vertex, a, b);
                    set &= !hit;
                }
            }
        }
        Some(tl.normalized())
    }
}

/// Decides whether some `k`-activity `ell`-timeline hits all `t` colors.
pub fn cc_dp(g: &TemporalGraph, k: u32, ell: u32, coloring: &Coloring, t: u32) -> Result<ColorTable, SolveError> {
    if t > MAX_COLORS {
        return Err(SolveError::GuardExceeded {
            what: "color count",
            value: t as u64,
            limit: MAX_COLORS as u64,
        });
    }
    let full = (1usize << t) - 1;
    let intervals = candidate_intervals(g.lifetime(), ell);
    let hits: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| {
            intervals
                .iter()
                .map(|&(a, b)| interval_colors(g, coloring, v, a, b))
                .collect()
        })
        .collect();
    let n = g.n() as usize;
    let width = 1usize << t;
    let mut reach = vec![vec![Vec::new(); k as usize + 1]; n + 1];
    let mut start = vec![false; width];
    start[0] = true;
    reach[0][k as usize] = start;
    for j in 1..=n {
        reach[j][0] = reach[j - 1][k as usize].clone();
        for budget in 1..=k as usize {
            let below = &reach[j][budget - 1];
            let row: Vec<bool> = (0..width)
                .map(|set| hits[j - 1].iter().any(|&c| below[set & !c]))
                .collect();
            reach[j][budget] = row;
        }
    }
    Ok(ColorTable {
        full,
        intervals,
        hits,
        k,
        reach,
    })
}

fn interval_colors(g: &TemporalGraph, coloring: &Coloring, v: Vertex, a: Step, b: Step) -> usize {
    let mut set = 0usize;
    for i in a..=b {
        let snap = g.snapshot(i);
        if coloring.cover {
            for (idx, e) in snap.edges().iter().enumerate() {
                if e.touches(v) {
                    set |= 1 << coloring.edge_color(i, idx);
                }
            }
        } else {
            set |= 1 << coloring.vertex_color(v, i);
            for &u in snap.neighbors(v) {
                set |= 1 << coloring.vertex_color(u, i);
            }
        }
    }
    set
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcOutcome {
    pub decision: bool,
    pub witness: Option<Timeline>,
    /// Colorings tried.
    pub trials_run: u64,
}

/// Runs the trials of `plan` against a partial instance.
pub fn solve_partial_cc(inst: &ProblemInstance, plan: &ColoringTrialPlan) -> Result<CcOutcome, SolveError> {
    if !inst.kind.is_partial() {
        return Err(SolveError::Unsupported(
            "color coding expects a partial problem".into(),
        ));
    }
    let g = &inst.graph;
    let t = inst.target();
    let cover = inst.kind.is_cover();
    let total = if cover {
        g.temporal_edge_count()
    } else {
        g.temporal_vertex_count()
    };
    let yes = |witness: Timeline, trials_run| CcOutcome {
        decision: true,
        witness: Some(witness),
        trials_run,
    };
    if t == 0 {
        return Ok(yes(Timeline::new(), 0));
    }
    if t > total {
        return Ok(CcOutcome {
            decision: false,
            witness: None,
            trials_run: 0,
        });
    }
    if (g.lifetime() as u64) < inst.k as u64 * (inst.ell as u64 + 1) {
        return Ok(yes(all_active_timeline(g, inst.k, inst.ell), 0));
    }
    let colors = t as u32;
    if colors > MAX_COLORS {
        return Err(SolveError::GuardExceeded {
            what: "color count",
            value: t,
            limit: MAX_COLORS as u64,
        });
    }
    for trial in 0..plan.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(plan.master_seed.wrapping_add(trial));
        let coloring = Coloring::random(g, colors, cover, &mut rng);
        let table = cc_dp(g, inst.k, inst.ell, &coloring, colors)?;
        if let Some(witness) = table.witness() {
            return Ok(yes(witness, trial + 1));
        }
    }
    Ok(CcOutcome {
        decision: false,
        witness: None,
        trials_run: plan.trials,
    })
}
