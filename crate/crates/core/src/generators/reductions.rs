//! Hardness reductions and the timelines their yes-directions construct.
//!
//! Colorings are slices with one entry in `0..3` per source vertex. Vertex
//! and snapshot numbering inside each construction is fixed by the helper
//! functions below so tests can address individual gadget pieces.

use thiserror::Error;

use super::sources::{CnfFormula, SourceError};
use super::vizing::vizing_edge_coloring;
use crate::graph::{Edge, GraphError, StaticGraph, Step, TemporalGraph, Vertex};
use crate::timeline::{InstanceError, ProblemInstance, ProblemKind, Timeline};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("source graph has maximum degree {0}, at most 4 is supported")]
    DegreeTooLarge(usize),
    #[error("coloring has {found} entries for {expected} vertices")]
    ColoringLength { expected: usize, found: usize },
    #[error("vertex {vertex} has color {color} outside 0..3")]
    ColorOutOfRange { vertex: Vertex, color: u8 },
    #[error("edge {u}-{v} is monochromatic")]
    Monochromatic { u: Vertex, v: Vertex },
    #[error("vertex set is not a dominating set of size at most {budget}")]
    NotDominating { budget: u32 },
    #[error("assignment does not satisfy the formula")]
    Unsatisfied,
    #[error("assignment has {found} values for {expected} variables")]
    AssignmentLength { expected: usize, found: usize },
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

fn check_degree(g: &StaticGraph) -> Result<(), ReductionError> {
    match g.max_degree() {
        d if d > 4 => Err(ReductionError::DegreeTooLarge(d)),
        _ => Ok(()),
    }
}

fn check_coloring(g: &StaticGraph, coloring: &[u8]) -> Result<(), ReductionError> {
    if coloring.len() != g.n as usize {
        return Err(ReductionError::ColoringLength {
            expected: g.n as usize,
            found: coloring.len(),
        });
    }
    if let Some(pos) = coloring.iter().position(|&c| c >= 3) {
        return Err(ReductionError::ColorOutOfRange {
            vertex: pos as Vertex + 1,
            color: coloring[pos],
        });
    }
    for e in &g.edges {
        if coloring[(e.u - 1) as usize] == coloring[(e.v - 1) as usize] {
            return Err(ReductionError::Monochromatic { u: e.u, v: e.v });
        }
    }
    Ok(())
}

/// Five matchings covering the edges; missing classes are empty.
fn five_matchings(g: &StaticGraph) -> Result<Vec<Vec<Edge>>, ReductionError> {
    check_degree(g)?;
    let mut classes = vizing_edge_coloring(g);
    classes.resize(5, Vec::new());
    Ok(classes)
}

fn pairs(edges: &[Edge], map: impl Fn(Vertex) -> Vertex) -> Vec<(Vertex, Vertex)> {
    edges.iter().map(|e| (map(e.u), map(e.v))).collect()
}

// --- cover, lifetime 23 ------------------------------------------------------

/// First step of each color block: `C1 H1 C2 H2 C3` with blocks of five and
/// four empty steps between them.
pub const TVC_BLOCK_STARTS: [Step; 3] = [1, 10, 19];

/// Full cover with `T = 23`, `k = 2`, `ell = 4`; every snapshot is a matching.
pub fn reduce_3col_to_tvc(g: &StaticGraph) -> Result<ProblemInstance, ReductionError> {
    let classes = five_matchings(g)?;
    let mut snapshots = vec![Vec::new(); 23];
    for start in TVC_BLOCK_STARTS {
        for (j, class) in classes.iter().enumerate() {
            snapshots[start as usize - 1 + j] = pairs(class, |v| v);
        }
    }
    let graph = TemporalGraph::new(g.n, snapshots)?;
    Ok(ProblemInstance::full(graph, ProblemKind::VertexCover, 2, 4)?)
}

/// Every vertex is active throughout the two blocks not of its color.
pub fn tvc_witness(g: &StaticGraph, coloring: &[u8]) -> Result<Timeline, ReductionError> {
    check_coloring(g, coloring)?;
    let mut tl = Timeline::new();
    for v in 1..=g.n {
        for (block, start) in TVC_BLOCK_STARTS.into_iter().enumerate() {
            if block as u8 != coloring[(v - 1) as usize] {
                tl.push(v, start, start + 4);
            }
        }
    }
    Ok(tl)
}

// --- domination, lifetime 35 -------------------------------------------------

/// Gadget roles of the five vertices per source vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TdsRole {
    V = 1,
    VPrime = 2,
    U = 3,
    UPrime = 4,
    UDouble = 5,
}

pub fn tds_vertex(source: Vertex, role: TdsRole) -> Vertex {
    5 * (source - 1) + role as Vertex
}

/// First step of each color block; the 14 steps before them form `H`.
pub const TDS_BLOCK_STARTS: [Step; 3] = [15, 22, 29];

/// Full domination with `T = 35`, `k = 3`, `ell = 6`; every snapshot is a
/// matching.
pub fn reduce_3col_to_tds(g: &StaticGraph) -> Result<ProblemInstance, ReductionError> {
    use TdsRole::*;
    let classes = five_matchings(g)?;
    let n = g.n;
    let mut snapshots: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); 35];
    for snap in snapshots.iter_mut().take(14) {
        for i in 1..=n {
            snap.push((tds_vertex(i, V), tds_vertex(i, U)));
            snap.push((tds_vertex(i, UPrime), tds_vertex(i, UDouble)));
        }
    }
    // u swaps with u' in the second block and with u'' in the third
    let roles = [[U, UPrime, UDouble], [UPrime, U, UDouble], [UDouble, UPrime, U]];
    for (block, start) in TDS_BLOCK_STARTS.into_iter().enumerate() {
        let [hub, left, right] = roles[block];
        let s = start as usize - 1;
        for i in 1..=n {
            for idx in [s, s + 6] {
                snapshots[idx].push((tds_vertex(i, V), tds_vertex(i, VPrime)));
                snapshots[idx].push((tds_vertex(i, left), tds_vertex(i, right)));
            }
        }
        for (j, class) in classes.iter().enumerate() {
            let snap = &mut snapshots[s + 1 + j];
            snap.extend(pairs(class, |x| tds_vertex(x, V)));
            for i in 1..=n {
                snap.push((tds_vertex(i, left), tds_vertex(i, right)));
                if class.iter().any(|e| e.touches(i)) {
                    snap.push((tds_vertex(i, VPrime), tds_vertex(i, hub)));
                } else {
                    snap.push((tds_vertex(i, V), tds_vertex(i, VPrime)));
                }
            }
        }
    }
    let graph = TemporalGraph::new(5 * n, snapshots)?;
    Ok(ProblemInstance::full(graph, ProblemKind::DominatingSet, 3, 6)?)
}

pub fn tds_witness(g: &StaticGraph, coloring: &[u8]) -> Result<Timeline, ReductionError> {
    use TdsRole::*;
    check_coloring(g, coloring)?;
    let mut tl = Timeline::new();
    let block = |b: usize| (TDS_BLOCK_STARTS[b], TDS_BLOCK_STARTS[b] + 6);
    for i in 1..=g.n {
        let color = coloring[(i - 1) as usize] as usize;
        for b in 0..3 {
            let (a, z) = block(b);
            if b == color {
                tl.push(tds_vertex(i, VPrime), a, z);
            } else {
                tl.push(tds_vertex(i, V), a, z);
            }
        }
        let h1 = (1, 7);
        let h2 = (8, 14);
        let (c1, c2, c3) = (block(0), block(1), block(2));
        for (role, span) in [
            (V, h1),
            (VPrime, h1),
            (VPrime, h2),
            (U, h2),
            (U, c1),
            (U, c2),
            (UPrime, h1),
            (UPrime, c2),
            (UPrime, c3),
            (UDouble, h2),
            (UDouble, c1),
            (UDouble, c3),
        ] {
            tl.push(tds_vertex(i, role), span.0, span.1);
        }
    }
    Ok(tl)
}

// --- static domination to partial domination ---------------------------------

/// Partial domination with `T = 2`, `k = 1`, `ell = 0`, target `2n - k`: the
/// source graph followed by one edgeless snapshot.
pub fn reduce_ds_to_tpds(g: &StaticGraph, budget: u32) -> Result<ProblemInstance, ReductionError> {
    let first = pairs(&g.edges, |v| v);
    let graph = TemporalGraph::new(g.n, vec![first, Vec::new()])?;
    let target = (2 * g.n as u64).saturating_sub(budget as u64);
    Ok(ProblemInstance::partial(graph, ProblemKind::DominatingSet, 1, 0, target)?)
}

/// The dominating set is active in the first snapshot, everyone else in the
/// second.
pub fn tpds_witness(g: &StaticGraph, budget: u32, set: &[Vertex]) -> Result<Timeline, ReductionError> {
    let mut chosen = vec![false; g.n as usize + 1];
    for &v in set {
        if v == 0 || v > g.n {
            return Err(ReductionError::NotDominating { budget });
        }
        chosen[v as usize] = true;
    }
    let mut dominated = chosen.clone();
    for e in &g.edges {
        if chosen[e.u as usize] || chosen[e.v as usize] {
            dominated[e.u as usize] = true;
            dominated[e.v as usize] = true;
        }
    }
    let size = chosen.iter().filter(|&&c| c).count();
    if size > budget as usize || dominated.iter().skip(1).any(|&d| !d) {
        return Err(ReductionError::NotDominating { budget });
    }
    let mut tl = Timeline::new();
    for v in 1..=g.n {
        let step = if chosen[v as usize] { 1 } else { 2 };
        tl.push(v, step, step);
    }
    Ok(tl)
}

// --- cover with interval-membership-width 4 ----------------------------------

/// Color indices of the gadget vertex families; `X` is the star center.
pub const IMW4_RED: u32 = 0;
pub const IMW4_YELLOW: u32 = 1;
pub const IMW4_BLUE: u32 = 2;
pub const IMW4_CENTER: u32 = 3;

/// Vertex `c_v^i` (or `x_v^i` for `family = IMW4_CENTER`), `i` in `1..=4`.
pub fn imw4_vertex(source: Vertex, family: u32, i: u32) -> Vertex {
    16 * (source - 1) + 4 * family + i
}

/// Snapshot `G_{v,c,i}`: the star from `x_v^i` to all of `c_v^1..4`.
pub fn imw4_star_step(source: Vertex, color: u32, i: u32) -> Step {
    12 * (source - 1) + 4 * color + i
}

/// Snapshot `G_{e,c}` for the edge at index `edge` of the sorted edge list.
pub fn imw4_edge_step(n: u32, edge: usize, color: u32) -> Step {
    12 * n + 3 * edge as Step + color + 1
}

/// For every edge, its 1-based position among the edges at `u` and at `v`,
/// in sorted edge order.
fn incidence_ordinals(g: &StaticGraph) -> Vec<(u32, u32)> {
    let mut seen = vec![0u32; g.n as usize + 1];
    g.edges
        .iter()
        .map(|e| {
            seen[e.u as usize] += 1;
            seen[e.v as usize] += 1;
            (seen[e.u as usize], seen[e.v as usize])
        })
        .collect()
}

/// Full cover with `k = 2`, `ell = 0`: `12|V| + 3|E|` snapshots, every
/// underlying edge present exactly once.
pub fn reduce_3col_to_tvc_imw4(g: &StaticGraph) -> Result<ProblemInstance, ReductionError> {
    check_degree(g)?;
    let n = g.n;
    let mut snapshots = Vec::with_capacity(12 * n as usize + 3 * g.edges.len());
    for v in 1..=n {
        for color in [IMW4_RED, IMW4_YELLOW, IMW4_BLUE] {
            for i in 1..=4 {
                let center = imw4_vertex(v, IMW4_CENTER, i);
                snapshots.push((1..=4).map(|j| (center, imw4_vertex(v, color, j))).collect());
            }
        }
    }
    for (e, &(iu, iv)) in g.edges.iter().zip(&incidence_ordinals(g)) {
        for color in [IMW4_RED, IMW4_YELLOW, IMW4_BLUE] {
            snapshots.push(vec![(imw4_vertex(e.u, color, iu), imw4_vertex(e.v, color, iv))]);
        }
    }
    let graph = TemporalGraph::new(16 * n, snapshots)?;
    Ok(ProblemInstance::full(graph, ProblemKind::VertexCover, 2, 0)?)
}

pub fn tvc_imw4_witness(g: &StaticGraph, coloring: &[u8]) -> Result<Timeline, ReductionError> {
    check_coloring(g, coloring)?;
    let mut tl = Timeline::new();
    let mut at = |w: Vertex, s: Step| tl.push(w, s, s);
    // relevant snapshot of c_v^i, when v has an i-th edge
    let mut relevant = vec![Vec::new(); g.n as usize + 1];
    for (idx, (e, &(iu, iv))) in g.edges.iter().zip(&incidence_ordinals(g)).enumerate() {
        relevant[e.u as usize].push((iu, idx));
        relevant[e.v as usize].push((iv, idx));
    }
    let x = IMW4_CENTER;
    for v in 1..=g.n {
        let c = coloring[(v - 1) as usize] as u32;
        let others: Vec<u32> = (0..3).filter(|&o| o != c).collect();
        let (alpha, beta) = (others[0], others[1]);
        for i in 1..=4 {
            at(imw4_vertex(v, c, i), imw4_star_step(v, c, 1));
            at(imw4_vertex(v, c, i), imw4_star_step(v, c, 2));
        }
        for (center, first, second) in [
            (1, (alpha, 1), (beta, 1)),
            (2, (alpha, 2), (beta, 2)),
            (3, (c, 3), (alpha, 3)),
            (4, (c, 4), (beta, 4)),
        ] {
            at(imw4_vertex(v, x, center), imw4_star_step(v, first.0, first.1));
            at(imw4_vertex(v, x, center), imw4_star_step(v, second.0, second.1));
        }
        for i in 1..=4 {
            at(imw4_vertex(v, alpha, i), imw4_star_step(v, alpha, 4));
            at(imw4_vertex(v, beta, i), imw4_star_step(v, beta, 3));
        }
        for &(i, idx) in &relevant[v as usize] {
            for color in [alpha, beta] {
                at(imw4_vertex(v, color, i), imw4_edge_step(g.n, idx, color));
            }
        }
    }
    Ok(tl)
}

// --- 3-SAT-(2,2) to partial domination ---------------------------------------

/// Letters of the two seven-vertex sets per variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatLetter {
    X = 0,
    NotX = 1,
    P = 2,
    Q = 3,
    R = 4,
    S = 5,
    T = 6,
}

const CROWN_WITH_X: [SatLetter; 6] = [SatLetter::X, SatLetter::P, SatLetter::Q, SatLetter::R, SatLetter::S, SatLetter::T];
const CROWN_WITH_NOT_X: [SatLetter; 6] =
    [SatLetter::NotX, SatLetter::P, SatLetter::Q, SatLetter::R, SatLetter::S, SatLetter::T];

/// Vertex of `letter` in set `side` (1 or 2) of variable `var`.
pub fn sat_vertex(var: u32, side: u32, letter: SatLetter) -> Vertex {
    14 * (var - 1) + 7 * (side - 1) + letter as Vertex + 1
}

/// Clause vertex `slot` in `0..6` for `a, a', b, b', c, c'`.
pub fn sat_clause_vertex(num_vars: u32, clause: usize, slot: u32) -> Vertex {
    14 * num_vars + 6 * clause as Vertex + slot + 1
}

/// Vertex of each literal occurrence, clause by clause: the first positive
/// occurrence of `x` is `x^1`, the second `x^2`, and the same for negations.
fn occurrence_vertices(f: &CnfFormula) -> Vec<Vec<Vertex>> {
    let mut pos = vec![0u32; f.num_vars as usize + 1];
    let mut neg = vec![0u32; f.num_vars as usize + 1];
    f.clauses
        .iter()
        .map(|c| {
            c.iter()
                .map(|&l| {
                    let var = l.unsigned_abs();
                    let (count, letter) = if l > 0 {
                        (&mut pos[var as usize], SatLetter::X)
                    } else {
                        (&mut neg[var as usize], SatLetter::NotX)
                    };
                    *count += 1;
                    sat_vertex(var, *count, letter)
                })
                .collect()
        })
        .collect()
}

fn crown(var: u32, letters: &[SatLetter; 6]) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::with_capacity(30);
    for &a in letters {
        for &b in letters {
            if a != b {
                edges.push((sat_vertex(var, 1, a), sat_vertex(var, 2, b)));
            }
        }
    }
    edges
}

/// Partial domination with `k = 1`, `ell = 0`, `T = 6n + 7m`, target
/// `76n + 21m`. Clause order is the formula order; the `r`-th literal of a
/// clause is joined to the `r`-th pair of its clause vertices.
pub fn reduce_3sat22_to_tpds(f: &CnfFormula) -> Result<ProblemInstance, ReductionError> {
    f.check_two_two()?;
    let n = f.num_vars;
    let m = f.clauses.len();
    let mut snapshots = Vec::with_capacity(6 * n as usize + 7 * m);
    for var in 1..=n {
        for letters in [&CROWN_WITH_X, &CROWN_WITH_NOT_X] {
            let edges = crown(var, letters);
            for _ in 0..3 {
                snapshots.push(edges.clone());
            }
        }
    }
    for (j, lits) in occurrence_vertices(f).iter().enumerate() {
        let mut edges = vec![(lits[0], lits[1]), (lits[1], lits[2]), (lits[0], lits[2])];
        for (r, &lit) in lits.iter().enumerate() {
            for slot in [2 * r as u32, 2 * r as u32 + 1] {
                edges.push((lit, sat_clause_vertex(n, j, slot)));
            }
        }
        snapshots.push(edges);
    }
    for j in 0..m {
        for primed in [0, 1] {
            let [a, b, c] = [0, 2, 4].map(|s| sat_clause_vertex(n, j, s + primed));
            for _ in 0..3 {
                snapshots.push(vec![(a, b), (b, c), (a, c)]);
            }
        }
    }
    let graph = TemporalGraph::new(14 * n + 6 * m as u32, snapshots)?;
    let target = 76 * n as u64 + 21 * m as u64;
    Ok(ProblemInstance::partial(graph, ProblemKind::DominatingSet, 1, 0, target)?)
}

pub fn tpds_sat_witness(f: &CnfFormula, assignment: &[bool]) -> Result<Timeline, ReductionError> {
    use SatLetter::*;
    f.check_two_two()?;
    if assignment.len() != f.num_vars as usize {
        return Err(ReductionError::AssignmentLength {
            expected: f.num_vars as usize,
            found: assignment.len(),
        });
    }
    if !f.is_satisfied_by(assignment) {
        return Err(ReductionError::Unsatisfied);
    }
    let n = f.num_vars;
    let m = f.clauses.len();
    let mut tl = Timeline::new();
    for var in 1..=n {
        let order = if assignment[(var - 1) as usize] {
            [P, Q, R, NotX, S, T]
        } else {
            [X, P, Q, R, S, T]
        };
        for (offset, letter) in order.into_iter().enumerate() {
            let step = 6 * (var - 1) + offset as Step + 1;
            for side in [1, 2] {
                tl.push(sat_vertex(var, side, letter), step, step);
            }
        }
    }
    for (j, (clause, lits)) in f.clauses.iter().zip(occurrence_vertices(f)).enumerate() {
        let step = 6 * n + j as Step + 1;
        for (&l, v) in clause.iter().zip(lits) {
            if assignment[(l.unsigned_abs() - 1) as usize] == (l > 0) {
                tl.push(v, step, step);
            }
        }
    }
    for j in 0..m {
        let first = 6 * n + m as Step + 6 * j as Step + 1;
        for (offset, slot) in [0, 2, 4, 1, 3, 5].into_iter().enumerate() {
            let step = first + offset as Step;
            tl.push(sat_clause_vertex(n, j, slot), step, step);
        }
    }
    Ok(tl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::timeline::verify;

    fn triangle() -> StaticGraph {
        StaticGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn tvc_triangle() {
        let inst = reduce_3col_to_tvc(&triangle()).unwrap();
        assert_eq!(inst.graph.lifetime(), 23);
        assert_eq!(inst.graph.max_snapshot_degree(), 1);
        let tl = tvc_witness(&triangle(), &[0, 1, 2]).unwrap();
        assert!(verify(&inst, &tl).satisfies_instance);
    }

    #[test]
    fn tds_triangle() {
        let inst = reduce_3col_to_tds(&triangle()).unwrap();
        assert_eq!(inst.graph.lifetime(), 35);
        assert_eq!(inst.graph.max_snapshot_degree(), 1);
        let tl = tds_witness(&triangle(), &[0, 1, 2]).unwrap();
        assert!(verify(&inst, &tl).satisfies_instance);
    }

    #[test]
    fn imw4_triangle() {
        let inst = reduce_3col_to_tvc_imw4(&triangle()).unwrap();
        assert_eq!(inst.graph.lifetime(), 12 * 3 + 3 * 3);
        let tl = tvc_imw4_witness(&triangle(), &[2, 0, 1]).unwrap();
        assert!(verify(&inst, &tl).satisfies_instance);
    }

    #[test]
    fn rejects_bad_coloring() {
        assert_eq!(
            tvc_witness(&triangle(), &[0, 0, 1]),
            Err(ReductionError::Monochromatic { u: 1, v: 2 })
        );
    }

    #[test]
    fn sat_witness() {
        let f = CnfFormula {
            num_vars: 3,
            clauses: vec![vec![1, 2, 3], vec![1, -2, -3], vec![-1, 2, -3], vec![-1, -2, 3]],
        };
        let inst = reduce_3sat22_to_tpds(&f).unwrap();
        assert_eq!(inst.target(), 76 * 3 + 21 * 4);
        let tl = tpds_sat_witness(&f, &[true, true, true]).unwrap();
        assert!(verify(&inst, &tl).satisfies_instance);
    }
}
