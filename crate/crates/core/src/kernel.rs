//! Size kernel for full timeline domination in `q + k + ell`, where `q` is the
//! largest number of edges in one snapshot.

use serde::Serialize;

use crate::graph::TemporalGraph;
use crate::params::max_snapshot_edges;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KernelCase {
    /// `2q >= n` and more snapshots than the active slots can reach.
    DenseTooLong,
    /// `2q < n`: every snapshot needs more than `n/2` active vertices.
    SparseTooLong,
    /// `2q < n`, many vertices: one vertex is isolated throughout.
    IsolatedVertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KernelOutcome {
    Answer { decision: bool, case: KernelCase },
    /// The instance already satisfies `T <= 2qk(ell+1)` and `n <= 4qk(ell+1)`.
    Reduced,
}

/// Decides the instance outright or certifies that it is small.
pub fn kernelize_ds(g: &TemporalGraph, k: u32, ell: u32) -> KernelOutcome {
    let n = g.n() as u64;
    let lifetime = g.lifetime() as u64;
    let q = max_snapshot_edges(g) as u64;
    let reach = k as u64 * (ell as u64 + 1);
    let no = |case| KernelOutcome::Answer { decision: false, case };
    if 2 * q >= n {
        if lifetime > 2 * q * reach {
            return no(KernelCase::DenseTooLong);
        }
        return KernelOutcome::Reduced;
    }
    if lifetime > 2 * reach {
        return no(KernelCase::SparseTooLong);
    }
    if n <= 4 * q * reach {
        return KernelOutcome::Reduced;
    }
    KernelOutcome::Answer {
        decision: lifetime <= reach,
        case: KernelCase::IsolatedVertex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_short_is_yes() {
        let g = TemporalGraph::edgeless(3, 2).unwrap();
        assert_eq!(
            kernelize_ds(&g, 1, 1),
            KernelOutcome::Answer {
                decision: true,
                case: KernelCase::IsolatedVertex
            }
        );
    }

    #[test]
    fn edgeless_long_is_no() {
        let g = TemporalGraph::edgeless(2, 3).unwrap();
        assert!(matches!(
            kernelize_ds(&g, 1, 1),
            KernelOutcome::Answer { decision: false, .. }
        ));
    }

    #[test]
    fn reduced_is_stable() {
        let g = TemporalGraph::new(2, vec![vec![(1, 2)], vec![(1, 2)]]).unwrap();
        assert_eq!(kernelize_ds(&g, 1, 0), KernelOutcome::Reduced);
        assert_eq!(kernelize_ds(&g, 1, 0), KernelOutcome::Reduced);
    }
}
