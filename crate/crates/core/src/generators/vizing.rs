//! Misra–Gries edge coloring with at most `Δ + 1` colors.

use crate::graph::{Edge, StaticGraph, Vertex};

struct Palette {
    /// `at[v][c]`: the neighbor joined to `v` by an edge of color `c`.
    at: Vec<Vec<Option<Vertex>>>,
}

impl Palette {
    fn color_of(&self, u: Vertex, w: Vertex) -> Option<usize> {
        self.at[u as usize].iter().position(|&x| x == Some(w))
    }

    fn is_free(&self, v: Vertex, c: usize) -> bool {
        self.at[v as usize][c].is_none()
    }

    fn free_color(&self, v: Vertex) -> usize {
        self.at[v as usize]
            .iter()
            .position(Option::is_none)
            .expect("degree stays below the palette size")
    }

    fn set(&mut self, u: Vertex, w: Vertex, c: usize) {
        self.at[u as usize][c] = Some(w);
        self.at[w as usize][c] = Some(u);
    }

    fn clear(&mut self, u: Vertex, w: Vertex, c: usize) {
        self.at[u as usize][c] = None;
        self.at[w as usize][c] = None;
    }

    /// Swaps colors `c` and `d` along the alternating path leaving `u` by `d`.
    fn invert_path(&mut self, u: Vertex, c: usize, d: usize) {
        let mut path = Vec::new();
        let mut here = u;
        let mut want = d;
        // c is free at u, so the walk is a simple path
        while let Some(next) = self.at[here as usize][want] {
            path.push((here, next, want));
            here = next;
            want = if want == d { c } else { d };
        }
        for &(a, b, col) in &path {
            self.clear(a, b, col);
        }
        for &(a, b, col) in &path {
            let swapped = if col == d { c } else { d };
            self.set(a, b, swapped);
        }
    }
}

/// Partitions the edges into matchings `F_1, …, F_m` with `m <= Δ + 1`.
/// Empty classes are dropped, so a single edge gives one class.
pub fn vizing_edge_coloring(g: &StaticGraph) -> Vec<Vec<Edge>> {
    let palette_size = g.max_degree() + 1;
    let mut pal = Palette {
        at: vec![vec![None; palette_size]; g.n as usize + 1],
    };
    for e in &g.edges {
        color_edge(&mut pal, e.u, e.v);
    }
    let mut classes = vec![Vec::new(); palette_size];
    for e in &g.edges {
        let c = pal.color_of(e.u, e.v).expect("every edge gets colored");
        classes[c].push(*e);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

fn color_edge(pal: &mut Palette, u: Vertex, v: Vertex) {
    // maximal fan of u starting at v
    let mut fan = vec![v];
    loop {
        let last = *fan.last().expect("fan is never empty");
        let next = (0..pal.at[0].len())
            .filter(|&c| pal.is_free(last, c))
            .filter_map(|c| pal.at[u as usize][c])
            .find(|w| !fan.contains(w));
        match next {
            Some(w) => fan.push(w),
            None => break,
        }
    }
    let c = pal.free_color(u);
    let d = pal.free_color(*fan.last().expect("fan is never empty"));
    if c != d {
        pal.invert_path(u, c, d);
    }
    // longest prefix that is still a fan and ends on a vertex missing d
    let mut end = None;
    for i in 0..fan.len() {
        if i > 0 {
            let Some(col) = pal.color_of(u, fan[i]) else { break };
            if !pal.is_free(fan[i - 1], col) {
                break;
            }
        }
        if pal.is_free(fan[i], d) {
            end = Some(i);
            break;
        }
    }
    let end = end.expect("a fan prefix ending on a d-free vertex exists");
    let shifted: Vec<usize> = (1..=end)
        .map(|i| pal.color_of(u, fan[i]).expect("fan edges are colored"))
        .collect();
    for (i, &col) in shifted.iter().enumerate() {
        pal.clear(u, fan[i + 1], col);
    }
    for (i, &col) in shifted.iter().enumerate() {
        pal.set(u, fan[i], col);
    }
    pal.set(u, fan[end], d);
}
