use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use colclust::bench::bench;
use colclust::corpus::{generate_file, reduce, GenSpec};
use colclust::exit;
use colclust::format::{parse_certificate, parse_edge_list, parse_instance, write_colouring, write_deletion};
use colclust::solve::{oracle_bound_from_env, solve, Algo, SolveOptions};
use colclust::verify::verify;
use colclust_core::conflict::build_conflict_graph;
use colclust_core::fpt_stable::DEFAULT_DELTA;
use colclust_core::EdgeColouredGraph;

#[derive(Parser)]
#[command(name = "colclust", version, about = "Solvers for coloured clustering and conflict-pair removal")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    /// Target: stable edges for fpt-stable and exact engines, deletions for fpt-unstable.
    #[arg(long)]
    k: Option<usize>,
    /// Failure probability of fpt-stable.
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print a summary line.
    Solve {
        instance: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        /// Write the colouring certificate here.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Write the deletion-set certificate here.
        #[arg(long)]
        deletion: Option<PathBuf>,
    },
    /// Check a colouring or deletion-set certificate.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate random instances.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "complete")]
        m: Option<usize>,
        #[arg(long, required_unless_present = "complete")]
        t: Option<u32>,
        /// Complete graph with two colours; ignores --m and --t.
        #[arg(long)]
        complete: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long, conflicts_with = "dir")]
        out: Option<PathBuf>,
        /// Number of instances, with seeds seed, seed+1, ...
        #[arg(long, requires = "dir")]
        count: Option<u64>,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Build the coloured gadget of an uncoloured graph (`p edge n m` / `e u v`).
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// JSON map of vertex correspondences.
        #[arg(long)]
        map: PathBuf,
    },
    /// Solve every instance in a directory and print CSV.
    Bench {
        dir: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
    /// Print the edge-conflict graph in DOT format.
    ConflictDot { instance: PathBuf },
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(exit::NO_INPUT, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| fail(exit::IO, format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<EdgeColouredGraph, Failure> {
    parse_instance(&read(path)?).map_err(|e| fail(exit::DATA, format!("{}: {e}", path.display())))
}

fn options(engine: &EngineArgs) -> Result<SolveOptions, Failure> {
    Ok(SolveOptions {
        algo: engine.algo,
        k: engine.k,
        delta: engine.delta,
        seed: engine.seed,
        oracle_bound: oracle_bound_from_env().map_err(|e| fail(exit::USAGE, e))?,
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Solve { instance, engine, cert, deletion } => {
            let g = load_instance(&instance)?;
            let report = solve(&g, &options(&engine)?).map_err(|e| fail(exit::USAGE, e))?;
            if let Some(line) = report.details_line() {
                println!("{line}");
            }
            println!("{}", report.summary_line());
            let comment = [report.summary_line()];
            if let (Some(path), Some(f)) = (&cert, &report.colouring) {
                write(path, &write_colouring(f, &comment))?;
            }
            if let (Some(path), Some(d)) = (&deletion, &report.deleted) {
                write(path, &write_deletion(&g, d, &comment))?;
            }
            Ok(report.decision.exit_code())
        }
        Command::Verify { instance, certificate, k } => {
            let g = load_instance(&instance)?;
            let cert = parse_certificate(&read(&certificate)?, &g)
                .map_err(|e| fail(exit::DATA, format!("{}: {e}", certificate.display())))?;
            let verdict = verify(&g, &cert, k);
            println!("{}", verdict.summary());
            Ok(if verdict.accepted() { exit::OK } else { exit::NO })
        }
        Command::Gen { n, m, t, complete, seed, out, count, dir } => {
            let spec = if complete {
                GenSpec::Complete { n }
            } else {
                GenSpec::Random { n, m: m.unwrap_or(0), t: t.unwrap_or(1) }
            };
            let text = |s: u64| generate_file(spec, s).map_err(|e| fail(exit::USAGE, e.to_string()));
            match (dir, out) {
                (Some(dir), _) => {
                    std::fs::create_dir_all(&dir).map_err(|e| fail(exit::IO, format!("{}: {e}", dir.display())))?;
                    for i in 0..count.unwrap_or(1) {
                        let s = seed.wrapping_add(i);
                        write(&dir.join(format!("inst-{i:04}-seed{s}.cc")), &text(s)?)?;
                    }
                }
                (None, Some(path)) => write(&path, &text(seed)?)?,
                (None, None) => print!("{}", text(seed)?),
            }
            Ok(exit::OK)
        }
        Command::Reduce { graph, out, map } => {
            let source = parse_edge_list(&read(&graph)?)
                .map_err(|e| fail(exit::DATA, format!("{}: {e}", graph.display())))?;
            let (instance, json) = reduce(&source).map_err(|e| fail(exit::DATA, e.to_string()))?;
            write(&out, &instance)?;
            write(&map, &json)?;
            Ok(exit::OK)
        }
        Command::Bench { dir, engine, repeat } => {
            let opts = options(&engine)?;
            bench(&dir, &opts, repeat, std::io::stdout().lock(), std::io::stderr().lock())
                .map_err(|e| fail(exit::IO, format!("{}: {e}", dir.display())))?;
            Ok(exit::OK)
        }
        Command::ConflictDot { instance } => {
            let g = load_instance(&instance)?;
            print!("{}", build_conflict_graph(&g).to_dot());
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::OK as u8 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("colclust: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
