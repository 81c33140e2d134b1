//! Layered dynamic program over bag profiles.
//!
//! A profile assigns every bag vertex a pair `(curr, pos)`: `curr` counts the
//! intervals used so far and `pos` is the position inside the current one
//! (0 when inactive). Profiles are packed into a fixed-radix integer, one digit
//! of radix `(k + 1)(ell + 2)` per bag vertex in ascending id order.

use std::collections::HashMap;

use crate::error::{saturating_pow, SolveError};
use crate::graph::{Step, TemporalGraph, Vertex};
use crate::params::vertex_membership_sequence;
use crate::timeline::{tile, Timeline};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Objective {
    Cover,
    Dominate,
}

/// Vertices whose activity is decided outside the table.
#[derive(Clone, Debug, Default)]
pub(crate) struct FixedActivity {
    /// Never placed in a bag and never counted.
    pub excluded: Vec<bool>,
    /// Per step (index `i - 1`): excluded vertices active at that step.
    pub active: Vec<Vec<Vertex>>,
    /// Per step: excluded vertices that must be dominated by someone else.
    pub needs_domination: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    /// Distinct profiles materialized per step.
    pub profiles_per_step: Vec<usize>,
    /// Bag size per step.
    pub bag_sizes: Vec<usize>,
}

impl DpStats {
    pub fn max_profiles(&self) -> usize {
        self.profiles_per_step.iter().copied().max().unwrap_or(0)
    }
}

pub(crate) struct DpRun {
    /// `None` when no profile survives the final read-off.
    pub optimum: Option<u64>,
    pub timeline: Timeline,
    pub stats: DpStats,
}

pub const DEFAULT_DP_BUDGET: u128 = 100_000_000;

/// Upper bound `((k+1)(ell+2))^width` on the profiles of one layer.
pub fn profile_bound(k: u32, ell: u32, width: usize) -> u128 {
    saturating_pow((k as u128 + 1) * (ell as u128 + 2), width)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct State {
    curr: u32,
    pos: u32,
}

struct Table<'g> {
    g: &'g TemporalGraph,
    k: u32,
    ell: u32,
    objective: Objective,
    fixed: FixedActivity,
    radix: u64,
    bags: Vec<Vec<Vertex>>,
}

impl Table<'_> {
    fn encode(&self, s: State) -> u64 {
        s.curr as u64 * (self.ell as u64 + 2) + s.pos as u64
    }

    fn decode(&self, digit: u64) -> State {
        State {
            curr: (digit / (self.ell as u64 + 2)) as u32,
            pos: (digit % (self.ell as u64 + 2)) as u32,
        }
    }

    fn digits(&self, mut code: u64, len: usize) -> Vec<State> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(self.decode(code % self.radix));
            code /= self.radix;
        }
        out
    }

    fn bag(&self, i: Step) -> &[Vertex] {
        &self.bags[(i - 1) as usize]
    }

    /// Every state allowed at step `i` for a vertex without a predecessor.
    fn fresh_states(&self, i: Step) -> Vec<State> {
        let mut out = Vec::new();
        for curr in 0..=self.k {
            for pos in 0..=(self.ell + 1).min(i) {
                if curr == 0 && pos > 0 {
                    continue;
                }
                out.push(State { curr, pos });
            }
        }
        out
    }

    /// Whether `prev` at step `i - 1` may be followed by `next` at step `i`.
    fn compatible(&self, prev: State, next: State, i: Step) -> bool {
        let ended = (i - 1).min(self.ell + 1);
        let closed = prev.pos == ended || prev.pos == 0;
        match (next.curr, next.pos) {
            (0, _) => prev.curr == 0 && prev.pos == 0,
            (c, p) if p >= 2 => prev.curr <= c && prev.pos == p - 1,
            (1, 1) => prev.curr == 0 && prev.pos == 0,
            (c, 1) => prev.curr < c && closed,
            (c, _) => prev.curr <= c && closed,
        }
    }

    /// Self-domination of a vertex entering the bag at `i` in state `s`,
    /// counted over the steps before `i`.
    fn entry_credit(&self, s: State, i: Step) -> u64 {
        let before = (i - 1) as u64;
        let width = self.ell as u64 + 1;
        let reach = if s.pos == 0 {
            s.curr as u64 * width
        } else {
            (s.curr as u64 - 1) * width + s.pos as u64 - 1
        };
        reach.min(before)
    }

    /// Self-domination of a vertex that left the bag at `i` (its last state
    /// `s` was at step `i - 1`), counted over steps `i..=T`.
    fn exit_credit(&self, s: State, i: Step) -> u64 {
        let after = (self.g.lifetime() - i + 1) as u64;
        let width = self.ell as u64 + 1;
        let mut reach = (self.k - s.curr) as u64 * width;
        if s.pos > 0 {
            reach += width - s.pos as u64;
        }
        reach.min(after)
    }

    /// Yield of the snapshot at `i` under a profile, plus entry credits.
    /// `None` when a fixed vertex is left undominated.
    fn gain(&self, i: Step, states: &[State], entering: &[bool], marks: &mut Marks) -> Option<u64> {
        let bag = self.bag(i);
        let snap = self.g.snapshot(i);
        marks.next();
        for (idx, &v) in bag.iter().enumerate() {
            if states[idx].pos > 0 {
                marks.set_active(v);
            }
        }
        if let Some(list) = self.fixed.active.get((i - 1) as usize) {
            for &v in list {
                marks.set_active(v);
            }
        }
        let mut total = 0u64;
        match self.objective {
            Objective::Cover => {
                for e in snap.edges() {
                    if marks.is_active(e.u) || marks.is_active(e.v) {
                        total += 1;
                    }
                }
            }
            Objective::Dominate => {
                let excluded = |v: Vertex| self.fixed.excluded.get(v as usize).copied().unwrap_or(false);
                for idx in 0..marks.active_list.len() {
                    let v = marks.active_list[idx];
                    marks.dominate(v);
                }
                for e in snap.edges() {
                    if marks.is_active(e.u) {
                        marks.dominate(e.v);
                    }
                    if marks.is_active(e.v) {
                        marks.dominate(e.u);
                    }
                }
                total += marks.dominated_list.iter().filter(|&&v| !excluded(v)).count() as u64;
                if let Some(list) = self.fixed.needs_domination.get((i - 1) as usize) {
                    if list.iter().any(|&v| !marks.is_dominated(v)) {
                        return None;
                    }
                }
                for (idx, s) in states.iter().enumerate() {
                    if entering[idx] {
                        total += self.entry_credit(*s, i);
                    }
                }
            }
        }
        Some(total)
    }
}

/// Stamp-based scratch sets, reset in O(1) per step.
struct Marks {
    stamp: u32,
    active: Vec<u32>,
    dominated: Vec<u32>,
    active_list: Vec<Vertex>,
    dominated_list: Vec<Vertex>,
}

impl Marks {
    fn new(n: u32) -> Self {
        Marks {
            stamp: 0,
            active: vec![0; n as usize + 1],
            dominated: vec![0; n as usize + 1],
            active_list: Vec::new(),
            dominated_list: Vec::new(),
        }
    }

    fn next(&mut self) {
        self.stamp += 1;
        self.active_list.clear();
        self.dominated_list.clear();
    }

    fn set_active(&mut self, v: Vertex) {
        if self.active[v as usize] != self.stamp {
            self.active[v as usize] = self.stamp;
            self.active_list.push(v);
        }
    }

    fn is_active(&self, v: Vertex) -> bool {
        self.active[v as usize] == self.stamp
    }

    fn dominate(&mut self, v: Vertex) {
        if self.dominated[v as usize] != self.stamp {
            self.dominated[v as usize] = self.stamp;
            self.dominated_list.push(v);
        }
    }

    fn is_dominated(&self, v: Vertex) -> bool {
        self.dominated[v as usize] == self.stamp
    }

}

pub(crate) fn run(
    g: &TemporalGraph,
    k: u32,
    ell: u32,
    objective: Objective,
    fixed: FixedActivity,
    budget: u128,
) -> Result<DpRun, SolveError> {
    let excluded = |v: Vertex| fixed.excluded.get(v as usize).copied().unwrap_or(false);
    let bags: Vec<Vec<Vertex>> = vertex_membership_sequence(g)
        .bags()
        .iter()
        .map(|b| b.iter().copied().filter(|&v| !excluded(v)).collect())
        .collect();
    let width = bags.iter().map(Vec::len).max().unwrap_or(0);
    let required = profile_bound(k, ell, width);
    if required > budget || required > u64::MAX as u128 {
        return Err(SolveError::BudgetExceeded { required, budget });
    }
    let table = Table {
        g,
        k,
        ell,
        objective,
        fixed,
        radix: (k as u64 + 1) * (ell as u64 + 2),
        bags,
    };
    let lifetime = g.lifetime();
    let mut marks = Marks::new(g.n());
    let mut stats = DpStats::default();
    // back[i - 2] maps a profile at step i to its predecessor at i - 1.
    let mut back: Vec<HashMap<u64, u64>> = Vec::with_capacity(lifetime as usize);

    let mut layer: HashMap<u64, u64> = HashMap::new();
    {
        let bag = table.bag(1);
        let options = vec![table.fresh_states(1); bag.len()];
        let entering = vec![true; bag.len()];
        for_each_profile(&options, |states| {
            let code = pack(&table, states);
            if let Some(v) = table.gain(1, states, &entering, &mut marks) {
                layer.insert(code, v);
            }
        });
        stats.profiles_per_step.push(layer.len());
        stats.bag_sizes.push(bag.len());
    }

    for i in 2..=lifetime {
        let prev_bag = table.bag(i - 1);
        let bag = table.bag(i);
        // position of each bag vertex in the previous bag
        let prev_index: Vec<Option<usize>> = bag.iter().map(|v| prev_bag.binary_search(v).ok()).collect();
        let entering: Vec<bool> = prev_index.iter().map(Option::is_none).collect();
        let leaving: Vec<usize> = (0..prev_bag.len())
            .filter(|&idx| bag.binary_search(&prev_bag[idx]).is_err())
            .collect();
        let fresh = table.fresh_states(i);
        let mut successors: HashMap<u64, Vec<State>> = HashMap::new();
        let mut gains: HashMap<u64, Option<u64>> = HashMap::new();
        let mut next: HashMap<u64, (u64, u64)> = HashMap::new();

        let mut preds: Vec<(u64, u64)> = layer.iter().map(|(&c, &v)| (c, v)).collect();
        preds.sort_unstable();
        for (pred_code, pred_value) in preds {
            let prev_states = table.digits(pred_code, prev_bag.len());
            let mut base = pred_value;
            if objective == Objective::Dominate {
                for &idx in &leaving {
                    base += table.exit_credit(prev_states[idx], i);
                }
            }
            let mut options: Vec<Vec<State>> = Vec::with_capacity(bag.len());
            for slot in &prev_index {
                match slot {
                    None => options.push(fresh.clone()),
                    Some(idx) => {
                        let p = prev_states[*idx];
                        let list = successors
                            .entry(table.encode(p))
                            .or_insert_with(|| fresh.iter().copied().filter(|&s| table.compatible(p, s, i)).collect());
                        options.push(list.clone());
                    }
                }
            }
            for_each_profile(&options, |states| {
                let code = pack(&table, states);
                let gain = *gains
                    .entry(code)
                    .or_insert_with(|| table.gain(i, states, &entering, &mut marks));
                if let Some(gain) = gain {
                    let value = base + gain;
                    match next.get_mut(&code) {
                        Some(cell) if cell.0 >= value => {}
                        Some(cell) => *cell = (value, pred_code),
                        None => {
                            next.insert(code, (value, pred_code));
                        }
                    }
                }
            });
        }
        stats.profiles_per_step.push(next.len());
        stats.bag_sizes.push(bag.len());
        back.push(next.iter().map(|(&c, &(_, p))| (c, p)).collect());
        layer = next.into_iter().map(|(c, (v, _))| (c, v)).collect();
    }

    // read-off: every vertex of the last bag used all k intervals and is
    // either inactive or at the end of a full interval
    let last_len = table.bag(lifetime).len();
    let mut best: Option<(u64, u64)> = None;
    let mut finals: Vec<(u64, u64)> = layer.into_iter().collect();
    finals.sort_unstable();
    for (code, value) in finals {
        let ok = table
            .digits(code, last_len)
            .iter()
            .all(|s| s.curr == k && (s.pos == 0 || s.pos == ell + 1));
        if ok && best.is_none_or(|(_, b)| value > b) {
            best = Some((code, value));
        }
    }
    let Some((final_code, optimum)) = best else {
        return Ok(DpRun {
            optimum: None,
            timeline: Timeline::new(),
            stats,
        });
    };

    let mut codes = vec![0u64; lifetime as usize];
    codes[(lifetime - 1) as usize] = final_code;
    for i in (2..=lifetime).rev() {
        let here = codes[(i - 1) as usize];
        codes[(i - 2) as usize] = back[(i - 2) as usize][&here];
    }
    let timeline = reconstruct(&table, &codes);
    Ok(DpRun {
        optimum: Some(optimum),
        timeline,
        stats,
    })
}

fn pack(table: &Table, states: &[State]) -> u64 {
    states
        .iter()
        .rev()
        .fold(0u64, |acc, &s| acc * table.radix + table.encode(s))
}

/// Calls `visit` for every element of the cartesian product of `options`.
fn for_each_profile<F: FnMut(&[State])>(options: &[Vec<State>], mut visit: F) {
    if options.iter().any(Vec::is_empty) {
        return;
    }
    let mut cursor = vec![0usize; options.len()];
    let mut states: Vec<State> = options.iter().map(|o| o[0]).collect();
    loop {
        visit(&states);
        let mut idx = 0;
        loop {
            if idx == options.len() {
                return;
            }
            cursor[idx] += 1;
            if cursor[idx] < options[idx].len() {
                states[idx] = options[idx][cursor[idx]];
                break;
            }
            cursor[idx] = 0;
            states[idx] = options[idx][0];
            idx += 1;
        }
    }
}

/// Turns the chosen profile of every step back into intervals.
fn reconstruct(table: &Table, codes: &[u64]) -> Timeline {
    let g = table.g;
    let lifetime = g.lifetime();
    let ell = table.ell;
    let dominate = table.objective == Objective::Dominate;
    // per vertex: (step, state) over its bag lifetime
    let mut history: Vec<Vec<(Step, State)>> = vec![Vec::new(); g.n() as usize + 1];
    for i in 1..=lifetime {
        let bag = table.bag(i);
        for (idx, s) in table.digits(codes[(i - 1) as usize], bag.len()).into_iter().enumerate() {
            history[bag[idx] as usize].push((i, s));
        }
    }
    let mut tl = Timeline::new();
    for (v, steps) in history.iter().enumerate() {
        let Some(&(first, entry)) = steps.first() else {
            continue;
        };
        let v = v as Vertex;
        let (last, exit) = *steps.last().unwrap();
        if dominate && first > 1 {
            if entry.pos == 0 {
                tile(&mut tl, v, 1, first - 1, entry.curr, ell);
            } else if first > entry.pos {
                tile(&mut tl, v, 1, first - entry.pos, entry.curr - 1, ell);
            }
        }
        let mut open: Option<Step> = (entry.pos > 0).then(|| first + 1 - entry.pos);
        for &(i, s) in &steps[1..] {
            if s.pos <= 1 {
                if let Some(a) = open.take() {
                    tl.push(v, a, i - 1);
                }
                if s.pos == 1 {
                    open = Some(i);
                }
            }
        }
        let mut resume = last + 1;
        if let Some(a) = open {
            let b = a.saturating_add(ell).min(lifetime);
            tl.push(v, a, b);
            resume = resume.max(b + 1);
        }
        if dominate && last < lifetime {
            tile(&mut tl, v, resume, lifetime, table.k - exit.curr, ell);
        }
    }
    tl
}
