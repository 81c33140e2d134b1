//! Algorithm dispatch for `timeline solve`.

use serde::Serialize;
use timeline_core::branching::{solve_branching_with, BranchLimits};
use timeline_core::color_coding::{solve_partial_cc, ColoringTrialPlan};
use timeline_core::config_ilp::{build_config_program, export_lp, solve_config_exact};
use timeline_core::dp_vimw::{solve_ds_vimw_x_with, solve_pds_dp_with, solve_pvc_dp_with, solve_pvc_vimw_x};
use timeline_core::kernel::{kernelize_ds, KernelOutcome};
use timeline_core::oracle::{oracle_solve_with, OracleConfig};
use timeline_core::timeline::all_active_timeline;
use timeline_core::{ProblemInstance, ProblemKind, SolveError, Timeline};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Auto,
    Oracle,
    Dp,
    Vimwx,
    Kernel,
    Branch,
    Cc,
    Ilp0,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Oracle => "oracle",
            Algorithm::Dp => "dp",
            Algorithm::Vimwx => "vimwx",
            Algorithm::Kernel => "kernel",
            Algorithm::Branch => "branch",
            Algorithm::Cc => "cc",
            Algorithm::Ilp0 => "ilp0",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum KindArg {
    Vc,
    Pvc,
    Ds,
    Pds,
}

impl From<KindArg> for ProblemKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Vc => ProblemKind::VertexCover,
            KindArg::Pvc => ProblemKind::PartialVertexCover,
            KindArg::Ds => ProblemKind::DominatingSet,
            KindArg::Pds => ProblemKind::PartialDominatingSet,
        }
    }
}

/// Everything but the instance itself.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveRequest {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub delta: f64,
    pub dp_budget: u128,
    pub oracle_budget: u128,
    /// Produce the LP text of the configuration program (`ilp0` only).
    pub want_lp: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub decision: bool,
    /// Best count found, when the algorithm computes one.
    pub optimum: Option<u64>,
    /// The algorithm that produced the answer; `auto` reports its pick.
    pub algorithm: String,
    pub witness: Option<Timeline>,
    pub lp: Option<String>,
}

impl SolveOutcome {
    fn new(algorithm: &str, decision: bool, optimum: Option<u64>, witness: Option<Timeline>) -> Self {
        SolveOutcome {
            decision,
            optimum,
            algorithm: algorithm.to_string(),
            witness: witness.filter(|_| decision),
            lp: None,
        }
    }
}

fn invalid(msg: &str) -> CliError {
    CliError::Invalid(msg.to_string())
}

/// Rejects algorithm and kind combinations that have no solver.
pub fn check_request(inst: &ProblemInstance, req: &SolveRequest) -> Result<(), CliError> {
    let kind = inst.kind;
    match req.algorithm {
        Algorithm::Ilp0 if inst.ell != 0 => Err(invalid("ilp0 requires ell = 0")),
        Algorithm::Cc if !kind.is_partial() => Err(invalid("cc requires a partial kind (pvc or pds)")),
        Algorithm::Kernel if kind != ProblemKind::DominatingSet => Err(invalid("kernel requires kind ds")),
        Algorithm::Branch if kind.is_partial() => Err(invalid("branch requires kind ds or vc")),
        Algorithm::Vimwx if kind == ProblemKind::PartialDominatingSet => {
            Err(invalid("vimwx supports vc, pvc and ds"))
        }
        _ => Ok(()),
    }
}

pub fn run(inst: &ProblemInstance, req: &SolveRequest) -> Result<SolveOutcome, CliError> {
    check_request(inst, req)?;
    match req.algorithm {
        Algorithm::Auto => run_auto(inst, req),
        Algorithm::Oracle => run_oracle(inst, req),
        Algorithm::Dp => run_dp(inst, req),
        Algorithm::Vimwx => run_vimwx(inst, req),
        Algorithm::Kernel => run_kernel(inst),
        Algorithm::Branch => run_branch(inst, BranchLimits::default()),
        Algorithm::Cc => {
            let plan = ColoringTrialPlan::for_instance(inst, req.seed, req.delta);
            let out = solve_partial_cc(inst, &plan)?;
            Ok(SolveOutcome::new("cc", out.decision, None, out.witness))
        }
        Algorithm::Ilp0 => {
            let prog = build_config_program(&inst.graph, inst.k, inst.target(), inst.kind)?;
            let sol = solve_config_exact(&prog)?;
            let mut out = SolveOutcome::new("ilp0", sol.feasible, None, Some(sol.witness));
            if req.want_lp {
                out.lp = Some(export_lp(&prog));
            }
            Ok(out)
        }
    }
}

fn run_oracle(inst: &ProblemInstance, req: &SolveRequest) -> Result<SolveOutcome, CliError> {
    let config = OracleConfig {
        budget: req.oracle_budget,
        ..OracleConfig::default()
    };
    let res = oracle_solve_with(inst, &config)?;
    Ok(SolveOutcome::new("oracle", res.decision, Some(res.optimum), Some(res.witness)))
}

fn run_dp(inst: &ProblemInstance, req: &SolveRequest) -> Result<SolveOutcome, CliError> {
    let (g, k, ell) = (&inst.graph, inst.k, inst.ell);
    let sol = if inst.kind.is_cover() {
        solve_pvc_dp_with(g, k, ell, req.dp_budget)?
    } else {
        solve_pds_dp_with(g, k, ell, req.dp_budget)?
    };
    let decision = sol.optimum >= inst.target();
    Ok(SolveOutcome::new("dp", decision, Some(sol.optimum), Some(sol.witness)))
}

fn run_vimwx(inst: &ProblemInstance, req: &SolveRequest) -> Result<SolveOutcome, CliError> {
    let (g, k, ell) = (&inst.graph, inst.k, inst.ell);
    if inst.kind.is_cover() {
        let sol = solve_pvc_vimw_x(g, k, ell, req.dp_budget)?;
        let decision = sol.optimum >= inst.target();
        return Ok(SolveOutcome::new("vimwx", decision, Some(sol.optimum), Some(sol.witness)));
    }
    let out = solve_ds_vimw_x_with(g, k, ell, req.dp_budget)?;
    Ok(SolveOutcome::new("vimwx", out.decision, None, out.witness))
}

fn run_kernel(inst: &ProblemInstance) -> Result<SolveOutcome, CliError> {
    match kernelize_ds(&inst.graph, inst.k, inst.ell) {
        KernelOutcome::Answer { decision, .. } => {
            let witness = decision.then(|| all_active_timeline(&inst.graph, inst.k, inst.ell));
            Ok(SolveOutcome::new("kernel", decision, None, witness))
        }
        KernelOutcome::Reduced => {
            let mut out = run_branch(inst, BranchLimits::default())?;
            out.algorithm = "kernel+branch".to_string();
            Ok(out)
        }
    }
}

fn run_branch(inst: &ProblemInstance, limits: BranchLimits) -> Result<SolveOutcome, CliError> {
    let out = solve_branching_with(&inst.graph, inst.k, inst.ell, inst.kind.is_cover(), limits)?;
    Ok(SolveOutcome::new("branch", out.decision, None, out.witness))
}

fn over_budget(e: &CliError) -> bool {
    matches!(
        e,
        CliError::Solve(SolveError::BudgetExceeded { .. } | SolveError::GuardExceeded { .. })
    )
}

/// Kernel check, then the bag tables, then branching, then the oracle.
fn run_auto(inst: &ProblemInstance, req: &SolveRequest) -> Result<SolveOutcome, CliError> {
    if inst.kind == ProblemKind::DominatingSet {
        if let KernelOutcome::Answer { decision, .. } = kernelize_ds(&inst.graph, inst.k, inst.ell) {
            let witness = decision.then(|| all_active_timeline(&inst.graph, inst.k, inst.ell));
            return Ok(SolveOutcome::new("kernel", decision, None, witness));
        }
    }
    let table = match inst.kind {
        ProblemKind::PartialDominatingSet => run_dp(inst, req),
        _ => run_vimwx(inst, req),
    };
    match table {
        Err(e) if over_budget(&e) => {}
        other => return other,
    }
    if !inst.kind.is_partial() {
        let limits = BranchLimits {
            max_nodes: Some(u64::try_from(req.oracle_budget).unwrap_or(u64::MAX)),
        };
        match run_branch(inst, limits) {
            Err(e) if over_budget(&e) => {}
            other => return other,
        }
    }
    match run_oracle(inst, req) {
        Err(e) if over_budget(&e) => Err(CliError::Invalid(
            "no algorithm fits the budgets; raise --dp-budget or --oracle-budget, \
             or try --algorithm cc for small t"
                .to_string(),
        )),
        other => other,
    }
}
