#![allow(dead_code)]

use timeline_core::generators::gen_random;
use timeline_core::{StaticGraph, TemporalGraph, Timeline};

/// One cell of the seeded small-instance grid.
#[derive(Clone, Debug)]
pub struct Case {
    pub graph: TemporalGraph,
    pub k: u32,
    pub ell: u32,
    pub p: f64,
    pub seed: u64,
}

/// `count` seeded instances with n <= 4, T <= 5, k <= 2, ell <= 2.
pub fn small_grid(count: usize, base_seed: u64) -> Vec<Case> {
    let probs = [0.2, 0.5, 0.8];
    (0..count)
        .map(|idx| {
            let seed = base_seed + idx as u64;
            let x = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 7;
            let n = 1 + (x % 4) as u32;
            let lifetime = 1 + ((x / 4) % 5) as u32;
            let k = 1 + ((x / 20) % 2) as u32;
            let ell = ((x / 40) % 3) as u32;
            let p = probs[idx % 3];
            Case {
                graph: gen_random(n, lifetime, p, seed),
                k,
                ell,
                p,
                seed,
            }
        })
        .collect()
}

/// Five vertices over six snapshots; the worked example in the README.
pub fn sample() -> TemporalGraph {
    TemporalGraph::new(
        5,
        vec![
            vec![(2, 4), (3, 4), (4, 5)],
            vec![(1, 2), (2, 3), (2, 4), (2, 5), (4, 5)],
            vec![(1, 2), (3, 4), (4, 5), (3, 5)],
            vec![(2, 3), (4, 5), (1, 2), (3, 4)],
            vec![(1, 5), (3, 5), (1, 3)],
            vec![(1, 4), (2, 5), (3, 5), (1, 2)],
        ],
    )
    .unwrap()
}

/// Per-step activity matrix `active[v][i]`, both 1-indexed.
pub fn activity(g: &TemporalGraph, tl: &Timeline) -> Vec<Vec<bool>> {
    let mut active = vec![vec![false; g.lifetime() as usize + 1]; g.n() as usize + 1];
    for iv in tl.iter() {
        for i in iv.a..=iv.b.min(g.lifetime()) {
            active[iv.v as usize][i as usize] = true;
        }
    }
    active
}

/// Covered temporal edges, counted straight from the edge lists.
pub fn count_covered(g: &TemporalGraph, tl: &Timeline) -> u64 {
    let active = activity(g, tl);
    g.edge_lists()
        .iter()
        .enumerate()
        .map(|(idx, edges)| {
            let i = idx + 1;
            edges
                .iter()
                .filter(|&&(u, v)| active[u as usize][i] || active[v as usize][i])
                .count() as u64
        })
        .sum()
}

/// Dominated temporal vertices, counted straight from the edge lists.
pub fn count_dominated(g: &TemporalGraph, tl: &Timeline) -> u64 {
    let active = activity(g, tl);
    let mut total = 0;
    for (idx, edges) in g.edge_lists().iter().enumerate() {
        let i = idx + 1;
        let mut hit: Vec<bool> = (0..=g.n() as usize).map(|v| active[v][i]).collect();
        for &(u, v) in edges {
            if active[u as usize][i] {
                hit[v as usize] = true;
            }
            if active[v as usize][i] {
                hit[u as usize] = true;
            }
        }
        total += hit[1..].iter().filter(|&&h| h).count() as u64;
    }
    total
}

/// Best count over every timeline with at most `k` intervals of length at
/// most `ell` per vertex, arbitrary endpoints included. Tiny inputs only.
pub fn unrestricted_optimum(g: &TemporalGraph, k: u32, ell: u32, cover: bool) -> u64 {
    let lifetime = g.lifetime();
    let mut intervals = Vec::new();
    for a in 1..=lifetime {
        for b in a..=lifetime.min(a + ell) {
            intervals.push((a, b));
        }
    }
    // every subset of at most k intervals, as index lists
    let mut choices: Vec<Vec<(u32, u32)>> = Vec::new();
    for mask in 0u32..(1 << intervals.len()) {
        if mask.count_ones() <= k {
            choices.push(
                (0..intervals.len())
                    .filter(|&j| mask >> j & 1 == 1)
                    .map(|j| intervals[j])
                    .collect(),
            );
        }
    }
    let n = g.n() as usize;
    let mut pick = vec![0usize; n];
    let mut best = 0;
    loop {
        let mut tl = Timeline::new();
        for (v, &c) in pick.iter().enumerate() {
            for &(a, b) in &choices[c] {
                tl.push(v as u32 + 1, a, b);
            }
        }
        let value = if cover { count_covered(g, &tl) } else { count_dominated(g, &tl) };
        best = best.max(value);
        let mut pos = 0;
        loop {
            if pos == n {
                return best;
            }
            pick[pos] += 1;
            if pick[pos] < choices.len() {
                break;
            }
            pick[pos] = 0;
            pos += 1;
        }
    }
}

/// Smallest dominating set size of a static graph, by subset enumeration.
pub fn static_domination_number(g: &StaticGraph) -> u32 {
    let n = g.n as usize;
    let adj = g.adjacency();
    (0u32..(1 << n))
        .filter(|&mask| {
            (1..=n).all(|v| {
                mask >> (v - 1) & 1 == 1 || adj[v].iter().any(|&u| mask >> (u - 1) & 1 == 1)
            })
        })
        .map(|mask| mask.count_ones())
        .min()
        .unwrap_or(0)
}
