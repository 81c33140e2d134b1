use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{TemporalGraph, Vertex};

/// Every vertex pair is an edge of every snapshot independently with
/// probability `p`. Identical arguments give identical graphs.
pub fn gen_random(n: u32, lifetime: u32, p: f64, seed: u64) -> TemporalGraph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let snapshots = (0..lifetime)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 1..=n as Vertex {
                for v in u + 1..=n as Vertex {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        })
        .collect();
    TemporalGraph::new(n, snapshots).expect("generated edges are valid")
}
