//! Interval-membership sequences and the widths derived from them.

use crate::graph::{Edge, Step, TemporalGraph, Vertex};

/// First and last step at which a vertex has an incident edge.
pub fn vertex_lifetimes(g: &TemporalGraph) -> Vec<Option<(Step, Step)>> {
    let mut span: Vec<Option<(Step, Step)>> = vec![None; g.n() as usize + 1];
    for (i, snap) in g.snapshots() {
        for &v in snap.non_isolated() {
            let slot = &mut span[v as usize];
            *slot = Some(match *slot {
                None => (i, i),
                Some((first, _)) => (first, i),
            });
        }
    }
    span
}

/// Per-step bags `F_1..F_T` of vertices (or of underlying edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipSequence<T> {
    bags: Vec<Vec<T>>,
}

impl<T> MembershipSequence<T> {
    /// Bag at 1-based step `i`.
    pub fn bag(&self, i: Step) -> &[T] {
        &self.bags[(i - 1) as usize]
    }

    pub fn bags(&self) -> &[Vec<T>] {
        &self.bags
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.bags.iter().map(Vec::len).collect()
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }
}

pub type VertexBags = MembershipSequence<Vertex>;
pub type EdgeBags = MembershipSequence<Edge>;

pub fn vertex_membership_sequence(g: &TemporalGraph) -> VertexBags {
    let mut bags = vec![Vec::new(); g.lifetime() as usize];
    for (v, span) in vertex_lifetimes(g).into_iter().enumerate() {
        if let Some((first, last)) = span {
            for i in first..=last {
                bags[(i - 1) as usize].push(v as Vertex);
            }
        }
    }
    MembershipSequence { bags }
}

pub fn edge_membership_sequence(g: &TemporalGraph) -> EdgeBags {
    let mut span: std::collections::BTreeMap<Edge, (Step, Step)> = Default::default();
    for (i, snap) in g.snapshots() {
        for e in snap.edges() {
            span.entry(*e).and_modify(|s| s.1 = i).or_insert((i, i));
        }
    }
    let mut bags = vec![Vec::new(); g.lifetime() as usize];
    for (e, (first, last)) in span {
        for i in first..=last {
            bags[(i - 1) as usize].push(e);
        }
    }
    MembershipSequence { bags }
}

pub fn vimw(g: &TemporalGraph) -> usize {
    vertex_membership_sequence(g).width()
}

pub fn imw(g: &TemporalGraph) -> usize {
    edge_membership_sequence(g).width()
}

/// `q`: the largest number of edges in a single snapshot.
pub fn max_snapshot_edges(g: &TemporalGraph) -> usize {
    g.snapshots().map(|(_, s)| s.edges().len()).max().unwrap_or(0)
}

/// Steps ordered by non-increasing bag size, earlier steps first on ties.
pub fn steps_by_bag_size(sizes: &[usize]) -> Vec<Step> {
    let mut order: Vec<Step> = (1..=sizes.len() as Step).collect();
    order.sort_by(|&x, &y| sizes[(y - 1) as usize].cmp(&sizes[(x - 1) as usize]).then(x.cmp(&y)));
    order
}

/// Size of the `rank`-th largest vertex bag; 0 when `rank > T` or `rank == 0`.
pub fn vimw_x(g: &TemporalGraph, rank: usize) -> usize {
    rank_size(&vertex_membership_sequence(g).sizes(), rank)
}

pub(crate) fn rank_size(sizes: &[usize], rank: usize) -> usize {
    if rank == 0 {
        return 0;
    }
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.get(rank - 1).copied().unwrap_or(0)
}

/// Marks the `count` largest bags (ties to earlier steps). Index `i - 1`.
pub fn large_bag_mask(sizes: &[usize], count: usize) -> Vec<bool> {
    let mut mask = vec![false; sizes.len()];
    for &i in steps_by_bag_size(sizes).iter().take(count) {
        mask[(i - 1) as usize] = true;
    }
    mask
}

/// All widths at once, as reported by the command line front end.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ParameterSummary {
    pub n: u32,
    pub lifetime: u32,
    pub vimw: usize,
    pub imw: usize,
    pub q: usize,
    /// `(rank, vimw_x)` pairs.
    pub vimw_x: Vec<(usize, usize)>,
}

pub fn summarize(g: &TemporalGraph, ranks: &[usize]) -> ParameterSummary {
    let sizes = vertex_membership_sequence(g).sizes();
    ParameterSummary {
        n: g.n(),
        lifetime: g.lifetime(),
        vimw: sizes.iter().copied().max().unwrap_or(0),
        imw: imw(g),
        q: max_snapshot_edges(g),
        vimw_x: ranks.iter().map(|&r| (r, rank_size(&sizes, r))).collect(),
    }
}
