//! Temporal graphs over a fixed vertex set `1..=n`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = u32;
pub type Step = u32;

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Builds a normalized edge. Callers are expected to have rejected loops.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a temporal graph needs at least one vertex")]
    NoVertices,
    #[error("a temporal graph needs at least one snapshot")]
    NoSnapshots,
    #[error("snapshot {step}: endpoint {vertex} outside 1..={n}")]
    EndpointOutOfRange { step: Step, vertex: Vertex, n: u32 },
    #[error("snapshot {step}: self-loop on vertex {vertex}")]
    SelfLoop { step: Step, vertex: Vertex },
    #[error("snapshot {step}: duplicate edge {u}-{v}")]
    DuplicateEdge { step: Step, u: Vertex, v: Vertex },
    #[error("edge {u}-{v} is not valid for a graph on {n} vertices")]
    InvalidStaticEdge { u: Vertex, v: Vertex, n: u32 },
}

/// One snapshot: its edges in insertion order plus a compact adjacency
/// table restricted to the non-isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    edges: Vec<Edge>,
    nodes: Vec<Vertex>,
    offsets: Vec<u32>,
    nbrs: Vec<Vertex>,
}

impl Snapshot {
    fn build(edges: Vec<Edge>) -> Self {
        let mut ends: Vec<(Vertex, Vertex)> = Vec::with_capacity(edges.len() * 2);
        for e in &edges {
            ends.push((e.u, e.v));
            ends.push((e.v, e.u));
        }
        ends.sort_unstable();
        let mut nodes = Vec::new();
        let mut offsets = vec![0u32];
        let mut nbrs = Vec::with_capacity(ends.len());
        for (idx, &(x, y)) in ends.iter().enumerate() {
            if idx == 0 || ends[idx - 1].0 != x {
                if idx != 0 {
                    offsets.push(nbrs.len() as u32);
                }
                nodes.push(x);
            }
            nbrs.push(y);
        }
        if !nodes.is_empty() {
            offsets.push(nbrs.len() as u32);
        }
        Snapshot {
            edges,
            nodes,
            offsets,
            nbrs,
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertices with at least one incident edge, ascending.
    pub fn non_isolated(&self) -> &[Vertex] {
        &self.nodes
    }

    /// Sorted neighbors of `v` in this snapshot.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        match self.nodes.binary_search(&v) {
            Ok(idx) => &self.nbrs[self.offsets[idx] as usize..self.offsets[idx + 1] as usize],
            Err(_) => &[],
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.nodes.binary_search(&v).is_err()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.offsets
            .windows(2)
            .map(|w| (w[1] - w[0]) as usize)
            .max()
            .unwrap_or(0)
    }
}

/// A finite sequence of snapshots `G_1..G_T` over the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    n: u32,
    snapshots: Vec<Snapshot>,
}

impl TemporalGraph {
    /// Validates and builds a temporal graph. Edge endpoints may be given in
    /// either order; they are normalized to `u < v` and keep their order.
    pub fn new(n: u32, snapshots: Vec<Vec<(Vertex, Vertex)>>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if snapshots.is_empty() {
            return Err(GraphError::NoSnapshots);
        }
        let mut built = Vec::with_capacity(snapshots.len());
        for (idx, raw) in snapshots.into_iter().enumerate() {
            let step = idx as Step + 1;
            let mut edges = Vec::with_capacity(raw.len());
            for (a, b) in raw {
                for x in [a, b] {
                    if x == 0 || x > n {
                        return Err(GraphError::EndpointOutOfRange { step, vertex: x, n });
                    }
                }
                if a == b {
                    return Err(GraphError::SelfLoop { step, vertex: a });
                }
                edges.push(Edge::new(a, b));
            }
            let mut sorted = edges.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge {
                    step,
                    u: w[0].u,
                    v: w[0].v,
                });
            }
            built.push(Snapshot::build(edges));
        }
        Ok(TemporalGraph {
            n,
            snapshots: built,
        })
    }

    /// `T` edgeless snapshots on `n` vertices.
    pub fn edgeless(n: u32, lifetime: u32) -> Result<Self, GraphError> {
        Self::new(n, vec![Vec::new(); lifetime as usize])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of snapshots `T`.
    pub fn lifetime(&self) -> u32 {
        self.snapshots.len() as u32
    }

    /// Snapshot at 1-based step `i`. Panics when out of range.
    pub fn snapshot(&self, i: Step) -> &Snapshot {
        &self.snapshots[(i - 1) as usize]
    }

    pub fn snapshots(&self) -> impl Iterator<Item = (Step, &Snapshot)> {
        self.snapshots
            .iter()
            .enumerate()
            .map(|(idx, s)| (idx as Step + 1, s))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn temporal_edge_count(&self) -> u64 {
        self.snapshots.iter().map(|s| s.edges.len() as u64).sum()
    }

    pub fn temporal_vertex_count(&self) -> u64 {
        self.n as u64 * self.lifetime() as u64
    }

    pub fn max_snapshot_degree(&self) -> usize {
        self.snapshots.iter().map(Snapshot::max_degree).max().unwrap_or(0)
    }

    /// Edge lists per snapshot, as accepted by [`TemporalGraph::new`].
    pub fn edge_lists(&self) -> Vec<Vec<(Vertex, Vertex)>> {
        self.snapshots
            .iter()
            .map(|s| s.edges.iter().map(|e| (e.u, e.v)).collect())
            .collect()
    }

    /// Copy of the graph with every edge touching a vertex in `removed` dropped.
    /// Vertex ids are kept, so removed vertices become isolated.
    pub fn without_vertices(&self, removed: &[bool]) -> TemporalGraph {
        let gone = |x: Vertex| removed.get(x as usize).copied().unwrap_or(false);
        let snapshots = self
            .snapshots
            .iter()
            .map(|s| {
                Snapshot::build(
                    s.edges
                        .iter()
                        .copied()
                        .filter(|e| !gone(e.u) && !gone(e.v))
                        .collect(),
                )
            })
            .collect();
        TemporalGraph {
            n: self.n,
            snapshots,
        }
    }

    pub fn underlying_graph(&self) -> StaticGraph {
        let mut edges: Vec<Edge> = self
            .snapshots
            .iter()
            .flat_map(|s| s.edges.iter().copied())
            .collect();
        edges.sort_unstable();
        edges.dedup();
        StaticGraph { n: self.n, edges }
    }
}

/// The union of all snapshots, or a plain source graph for the reductions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaticGraph {
    pub n: u32,
    /// Sorted, deduplicated.
    pub edges: Vec<Edge>,
}

impl StaticGraph {
    pub fn new(n: u32, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(GraphError::InvalidStaticEdge { u: a, v: b, n });
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(StaticGraph { n, edges })
    }

    /// Sorted adjacency lists indexed by vertex id (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n as usize + 1];
        for e in &self.edges {
            adj[e.u as usize].push(e.v);
            adj[e.v as usize].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency().iter().map(Vec::len).max().unwrap_or(0)
    }
}
