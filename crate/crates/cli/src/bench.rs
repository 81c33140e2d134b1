//! `timeline bench`: a seeded grid of small instances, every applicable
//! algorithm against the oracle, one CSV row per run.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use timeline_core::generators::gen_random;
use timeline_core::params::summarize;
use timeline_core::oracle::DEFAULT_ORACLE_BUDGET;
use timeline_core::dp_vimw::DEFAULT_DP_BUDGET;
use timeline_core::{ProblemInstance, ProblemKind};

use crate::solve::{check_request, run, Algorithm, SolveRequest};
use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchGrid {
    pub count: usize,
    pub seed: u64,
    pub max_n: u32,
    pub max_lifetime: u32,
    pub max_k: u32,
    pub max_ell: u32,
}

impl Default for BenchGrid {
    fn default() -> Self {
        BenchGrid {
            count: 40,
            seed: 1,
            max_n: 4,
            max_lifetime: 5,
            max_k: 2,
            max_ell: 2,
        }
    }
}

#[derive(Serialize)]
struct Row {
    instance: usize,
    n: u32,
    lifetime: u32,
    k: u32,
    ell: u32,
    p: f64,
    seed: u64,
    kind: &'static str,
    t: u64,
    vimw: usize,
    imw: usize,
    q: usize,
    algorithm: &'static str,
    decision: String,
    optimum: String,
    micros: u128,
    agrees: bool,
}

const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];
const ALGORITHMS: [Algorithm; 6] = [
    Algorithm::Dp,
    Algorithm::Vimwx,
    Algorithm::Kernel,
    Algorithm::Branch,
    Algorithm::Ilp0,
    Algorithm::Cc,
];

/// Writes the CSV and returns whether every row agreed with the oracle.
pub fn run_bench(grid: &BenchGrid, out: impl Write) -> Result<bool, CliError> {
    let mut wtr = csv::Writer::from_writer(out);
    let mut all_agree = true;
    for idx in 0..grid.count {
        let i = idx as u64;
        let n = 1 + (i % grid.max_n as u64) as u32;
        let lifetime = 1 + ((i / 2) % grid.max_lifetime as u64) as u32;
        let k = 1 + ((i / 3) % grid.max_k as u64) as u32;
        let ell = ((i / 5) % (grid.max_ell as u64 + 1)) as u32;
        let p = DENSITIES[idx % DENSITIES.len()];
        let seed = grid.seed.wrapping_add(i);
        let g = gen_random(n, lifetime, p, seed);
        let summary = summarize(&g, &[]);
        for kind in [
            ProblemKind::VertexCover,
            ProblemKind::DominatingSet,
            ProblemKind::PartialVertexCover,
            ProblemKind::PartialDominatingSet,
        ] {
            let inst = if kind.is_partial() {
                let total = if kind.is_cover() {
                    g.temporal_edge_count()
                } else {
                    g.temporal_vertex_count()
                };
                ProblemInstance::partial(g.clone(), kind, k, ell, total.div_ceil(2).min(6))?
            } else {
                ProblemInstance::full(g.clone(), kind, k, ell)?
            };
            let req = |algorithm| SolveRequest {
                algorithm,
                seed,
                delta: 0.01,
                dp_budget: DEFAULT_DP_BUDGET,
                oracle_budget: DEFAULT_ORACLE_BUDGET,
                want_lp: false,
            };
            let reference = run(&inst, &req(Algorithm::Oracle))?;
            for algorithm in std::iter::once(Algorithm::Oracle).chain(ALGORITHMS) {
                let request = req(algorithm);
                if check_request(&inst, &request).is_err() {
                    continue;
                }
                let start = Instant::now();
                let result = run(&inst, &request);
                let micros = start.elapsed().as_micros();
                let (decision, optimum, agrees) = match &result {
                    Ok(out) => {
                        let optimum_ok = out.optimum.is_none_or(|o| o == reference.optimum.unwrap_or(o));
                        (
                            out.decision.to_string(),
                            out.optimum.map(|o| o.to_string()).unwrap_or_default(),
                            out.decision == reference.decision && optimum_ok,
                        )
                    }
                    // over a guard is not a disagreement
                    Err(_) => ("skipped".to_string(), String::new(), true),
                };
                all_agree &= agrees;
                wtr.serialize(Row {
                    instance: idx,
                    n,
                    lifetime,
                    k,
                    ell,
                    p,
                    seed,
                    kind: kind.short_name(),
                    t: inst.target(),
                    vimw: summary.vimw,
                    imw: summary.imw,
                    q: summary.q,
                    algorithm: algorithm.name(),
                    decision,
                    optimum,
                    micros,
                    agrees,
                })?;
            }
        }
    }
    wtr.flush().map_err(|e| CliError::Io {
        path: "<bench output>".into(),
        source: e,
    })?;
    Ok(all_agree)
}
