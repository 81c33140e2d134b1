//! Argument definitions and subcommand handlers.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use timeline_core::dp_vimw::DEFAULT_DP_BUDGET;
use timeline_core::generators::{
    gen_random, parse_dimacs, parse_static_graph, reduce_3col_to_tds, reduce_3col_to_tvc, reduce_3col_to_tvc_imw4,
    reduce_3sat22_to_tpds, reduce_ds_to_tpds, tds_witness, tpds_sat_witness, tpds_witness, tvc_imw4_witness,
    tvc_witness,
};
use timeline_core::oracle::DEFAULT_ORACLE_BUDGET;
use timeline_core::params::{summarize, ParameterSummary};
use timeline_core::{verify, ProblemInstance, StaticGraph, TemporalGraph, Timeline};

use crate::bench::{run_bench, BenchGrid};
use crate::format::{emit_instance, emit_witness, parse_instance, parse_witness};
use crate::solve::{run, Algorithm, KindArg, SolveRequest};
use crate::{CliError, EXIT_NO, EXIT_YES};

#[derive(Parser, Debug)]
#[command(name = "timeline", version, about = "Timeline cover and domination on temporal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide an instance and print the result as JSON.
    Solve(SolveArgs),
    /// Print structural parameters as JSON.
    Params(ParamsArgs),
    /// Check a witness file against an instance.
    Verify(VerifyArgs),
    /// Generate random instances or apply a reduction.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Compare all algorithms on a seeded grid and write CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    /// Instance file (.tg text or JSON).
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(short, long)]
    pub k: u32,
    #[arg(short = 'l', long)]
    pub ell: u32,
    /// Target for the partial kinds.
    #[arg(short, long)]
    pub t: Option<u64>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub algorithm: Algorithm,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.01)]
    pub delta: f64,
    /// Where to write the witness on a yes answer.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_DP_BUDGET)]
    pub dp_budget: u128,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: u128,
    /// Write the configuration program in LP format (ilp0 only).
    #[arg(long)]
    pub lp: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ParamsArgs {
    pub input: PathBuf,
    /// Ranks x for which to report the x-th largest bag.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub ranks: Vec<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub witness: PathBuf,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Instance output path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the forward witness, when a source certificate is given.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ColoringArgs {
    /// Static graph: `n`, then `u v` lines.
    pub source: PathBuf,
    /// Proper 3-coloring, one color in 0..3 per vertex.
    #[arg(long, value_delimiter = ',')]
    pub coloring: Option<Vec<u8>>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lifetime: u32,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    #[command(name = "reduce3col-tvc")]
    Reduce3colTvc(ColoringArgs),
    #[command(name = "reduce3col-tds")]
    Reduce3colTds(ColoringArgs),
    #[command(name = "reduce3col-imw4")]
    Reduce3colImw4(ColoringArgs),
    #[command(name = "reduce-ds-tpds")]
    ReduceDsTpds {
        source: PathBuf,
        /// Dominating set budget of the source.
        #[arg(long)]
        budget: u32,
        /// A dominating set of the source, comma separated.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u32>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    #[command(name = "reduce3sat22-tpds")]
    Reduce3sat22Tpds {
        /// DIMACS CNF file.
        source: PathBuf,
        /// Satisfying assignment as 0/1 values per variable.
        #[arg(long, value_delimiter = ',')]
        assignment: Option<Vec<u8>>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 40)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// CSV output path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<TemporalGraph, CliError> {
    parse_instance(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn load_instance(p: &ProblemArgs) -> Result<ProblemInstance, CliError> {
    let graph = load_graph(&p.input)?;
    Ok(ProblemInstance::new(graph, p.kind.into(), p.k, p.ell, p.t)?)
}

fn load_static(path: &Path) -> Result<StaticGraph, CliError> {
    parse_static_graph(&read(path)?).map_err(|source| CliError::Source {
        path: path.to_path_buf(),
        source,
    })
}

fn emit_line(out: &mut impl Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

#[derive(Serialize)]
pub struct SolveReport {
    pub decision: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum: Option<u64>,
    pub algorithm: String,
    pub params: ParameterSummary,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_path: Option<String>,
}

/// Ranks whose bag sizes parameterize the table variants.
fn solve_ranks(k: u32, ell: u32) -> Vec<usize> {
    let mut ranks = vec![1, 2, ell as usize + 2, k as usize * (ell as usize + 1) + 1];
    ranks.sort_unstable();
    ranks.dedup();
    ranks
}

/// Runs one parsed command, writing its output to `out`; returns the exit code.
pub fn execute(cli: Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve(args) => solve(args, out),
        Command::Params(args) => {
            let g = load_graph(&args.input)?;
            emit_line(out, &summarize(&g, &args.ranks))?;
            Ok(EXIT_YES)
        }
        Command::Verify(args) => {
            let inst = load_instance(&args.problem)?;
            let tl = parse_witness(&read(&args.witness)?).map_err(|source| CliError::Witness {
                path: args.witness.clone(),
                source,
            })?;
            let report = verify(&inst, &tl);
            emit_line(out, &report)?;
            Ok(if report.satisfies_instance { EXIT_YES } else { EXIT_NO })
        }
        Command::Gen(cmd) => generate(cmd, out),
        Command::Bench(args) => {
            let grid = BenchGrid {
                count: args.count,
                seed: args.seed,
                ..BenchGrid::default()
            };
            let agree = match &args.out {
                Some(path) => {
                    let file = fs::File::create(path).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    run_bench(&grid, file)?
                }
                None => run_bench(&grid, &mut *out)?,
            };
            Ok(if agree { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn solve(args: SolveArgs, out: &mut impl Write) -> Result<i32, CliError> {
    let inst = load_instance(&args.problem)?;
    if args.lp.is_some() && args.algorithm != Algorithm::Ilp0 {
        return Err(CliError::Invalid("--lp requires --algorithm ilp0".to_string()));
    }
    let req = SolveRequest {
        algorithm: args.algorithm,
        seed: args.seed,
        delta: args.delta,
        dp_budget: args.dp_budget,
        oracle_budget: args.oracle_budget,
        want_lp: args.lp.is_some(),
    };
    let start = Instant::now();
    let outcome = run(&inst, &req)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    if let (Some(path), Some(lp)) = (&args.lp, &outcome.lp) {
        write(path, lp)?;
    }
    let mut witness_path = None;
    if let (Some(path), Some(tl)) = (&args.witness, &outcome.witness) {
        if !verify(&inst, tl).satisfies_instance {
            return Err(CliError::Invalid(format!(
                "{} produced a witness that does not verify",
                outcome.algorithm
            )));
        }
        write(path, &emit_witness(tl))?;
        witness_path = Some(path.display().to_string());
    }
    let report = SolveReport {
        decision: outcome.decision,
        optimum: outcome.optimum,
        algorithm: outcome.algorithm,
        params: summarize(&inst.graph, &solve_ranks(inst.k, inst.ell)),
        elapsed_ms,
        witness_path,
    };
    emit_line(out, &report)?;
    Ok(if report.decision { EXIT_YES } else { EXIT_NO })
}

/// Instance text preceded by a comment naming the problem.
fn annotated(inst: &ProblemInstance) -> String {
    let mut head = format!("# {} k={} ell={}", inst.kind.short_name(), inst.k, inst.ell);
    if inst.kind.is_partial() {
        head.push_str(&format!(" t={}", inst.target()));
    }
    format!("{head}\n{}", emit_instance(&inst.graph))
}

fn finish_gen(
    inst: &ProblemInstance,
    witness: Option<Timeline>,
    output: &OutputArgs,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let text = annotated(inst);
    match &output.out {
        Some(path) => write(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })?,
    }
    match (&output.witness, witness) {
        (Some(path), Some(tl)) => write(path, &emit_witness(&tl))?,
        (Some(_), None) => {
            return Err(CliError::Invalid(
                "--witness needs a source certificate (--coloring, --set or --assignment)".to_string(),
            ))
        }
        _ => {}
    }
    Ok(EXIT_YES)
}

fn generate(cmd: GenCommand, out: &mut impl Write) -> Result<i32, CliError> {
    match cmd {
        GenCommand::Random {
            n,
            lifetime,
            p,
            seed,
            out: path,
        } => {
            if n == 0 || lifetime == 0 || !(0.0..=1.0).contains(&p) {
                return Err(CliError::Invalid("need n >= 1, lifetime >= 1 and 0 <= p <= 1".to_string()));
            }
            let text = emit_instance(&gen_random(n, lifetime, p, seed));
            match path {
                Some(path) => write(&path, &text)?,
                None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })?,
            }
            Ok(EXIT_YES)
        }
        GenCommand::Reduce3colTvc(args) => {
            let g = load_static(&args.source)?;
            let inst = reduce_3col_to_tvc(&g)?;
            let tl = args.coloring.map(|c| tvc_witness(&g, &c)).transpose()?;
            finish_gen(&inst, tl, &args.output, out)
        }
        GenCommand::Reduce3colTds(args) => {
            let g = load_static(&args.source)?;
            let inst = reduce_3col_to_tds(&g)?;
            let tl = args.coloring.map(|c| tds_witness(&g, &c)).transpose()?;
            finish_gen(&inst, tl, &args.output, out)
        }
        GenCommand::Reduce3colImw4(args) => {
            let g = load_static(&args.source)?;
            let inst = reduce_3col_to_tvc_imw4(&g)?;
            let tl = args.coloring.map(|c| tvc_imw4_witness(&g, &c)).transpose()?;
            finish_gen(&inst, tl, &args.output, out)
        }
        GenCommand::ReduceDsTpds {
            source,
            budget,
            set,
            output,
        } => {
            let g = load_static(&source)?;
            let inst = reduce_ds_to_tpds(&g, budget)?;
            let tl = set.map(|s| tpds_witness(&g, budget, &s)).transpose()?;
            finish_gen(&inst, tl, &output, out)
        }
        GenCommand::Reduce3sat22Tpds {
            source,
            assignment,
            output,
        } => {
            let f = parse_dimacs(&read(&source)?).map_err(|e| CliError::Source {
                path: source.clone(),
                source: e,
            })?;
            let inst = reduce_3sat22_to_tpds(&f)?;
            let tl = assignment
                .map(|a| {
                    let values: Vec<bool> = a.iter().map(|&x| x != 0).collect();
                    tpds_sat_witness(&f, &values)
                })
                .transpose()?;
            finish_gen(&inst, tl, &output, out)
        }
    }
}
