use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use vorder::gen::{gen_random, gen_random_undirected};
use vorder::io::serialize_graph;
use vorder::report::{rational, within_factor, Objective};

mod fail;
mod guards;
mod plan;
mod record;

use fail::{CliResult, Fail};
use guards::Guards;
use plan::{Mode, Params, Plan};
use record::{instance_id, load, RunOptions, RunRecord};

#[derive(Parser)]
#[command(name = "vorder", version, about = "Exact and approximate vertex-ordering solvers")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance and print a JSON record.
    Solve {
        instance: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        /// Also compute the optimum by exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Generate random instances.
    Gen(GenArgs),
    /// Check a corpus against the exhaustive oracle; exits 1 on a violation.
    Verify {
        corpus: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        /// Ratio bound to enforce (default: the guarantee of each run).
        #[arg(long)]
        factor: Option<f64>,
    },
    /// Run several modes over a corpus and write a CSV.
    Bench {
        corpus: PathBuf,
        #[arg(long = "obj", value_parser = parse_objective)]
        objective: Objective,
        #[arg(long, value_delimiter = ',', default_value = "exact,2approx")]
        modes: Vec<Mode>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long = "obj", value_parser = parse_objective)]
    objective: Objective,
    #[arg(long, default_value = "exact")]
    mode: Mode,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    weighted: bool,
    /// With `--mode approx`: use the feedback arc set scheme. `--alpha`
    /// then fixes its prefix fraction.
    #[arg(long)]
    scheme: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report 0 milliseconds so output is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

impl SolverArgs {
    fn params(&self) -> Params {
        Params {
            eps: self.eps,
            alpha: self.alpha,
            weighted: self.weighted,
            scheme: self.scheme,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    wmin: u64,
    #[arg(long, default_value_t = 1)]
    wmax: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    undirected: bool,
    /// Write this many instances (seeds `seed..seed+count`) into the
    /// directory given by `--out`.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vorder: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Fail::Other(e.to_string()))?;
    }
    match cli.cmd {
        Cmd::Solve {
            instance,
            solver,
            oracle,
        } => {
            let guards = Guards::from_env()?;
            let g = load(&instance)?;
            let plan = Plan::resolve(solver.objective, solver.mode, solver.params(), g.is_undirected())?;
            let opts = RunOptions {
                with_oracle: oracle,
                timing: !solver.no_timing,
            };
            let rec = record::run(instance_id(&instance), &g, plan, &guards, &opts)?;
            let mut json = serde_json::to_string(&rec).map_err(|e| Fail::Other(e.to_string()))?;
            json.push('\n');
            emit(solver.out.as_deref(), json.as_bytes())
        }
        Cmd::Gen(args) => gen(args),
        Cmd::Verify {
            corpus,
            solver,
            factor,
        } => verify(&corpus, &solver, factor),
        Cmd::Bench {
            corpus,
            objective,
            modes,
            eps,
            alpha,
            weighted,
            out,
            no_timing,
        } => {
            let params = Params {
                eps,
                alpha,
                weighted,
                scheme: false,
            };
            bench(&corpus, objective, &modes, params, out.as_deref(), !no_timing)
        }
    }
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Fail::Other(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn gen(args: GenArgs) -> CliResult<()> {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Fail::Usage("--p must lie in [0, 1]".into()));
    }
    if args.wmin > args.wmax {
        return Err(Fail::Usage("--wmin exceeds --wmax".into()));
    }
    let make = |seed: u64| {
        let w = args.wmin..=args.wmax;
        let g = if args.undirected {
            gen_random_undirected(args.n, args.p, w, seed)
        } else {
            gen_random(args.n, args.p, w, seed)
        };
        serialize_graph(&g)
    };
    match args.count {
        None => emit(args.out.as_deref(), make(args.seed).as_bytes()),
        Some(count) => {
            let dir = args
                .out
                .as_deref()
                .ok_or_else(|| Fail::Usage("--count needs --out <dir>".into()))?;
            std::fs::create_dir_all(dir)?;
            for i in 0..count {
                let seed = args.seed + i as u64;
                let path = dir.join(format!("n{:02}-s{seed:06}.g", args.n));
                emit(Some(&path), make(seed).as_bytes())?;
            }
            Ok(())
        }
    }
}

/// Instance files (`*.g`) of a corpus directory, sorted by name.
fn corpus_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| Fail::Other(format!("cannot read {}: {e}", dir.display())))? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "g") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

const CSV_HEADER: [&str; 17] = [
    "instance",
    "n",
    "m",
    "objective",
    "mode",
    "value",
    "lower_bound",
    "opt",
    "ratio",
    "factor",
    "bound",
    "ok",
    "table_entries",
    "triangles",
    "cut_cells",
    "recursive_calls",
    "millis",
];

fn write_csv<'a>(out: Option<&Path>, rows: impl Iterator<Item = record::CsvRow<'a>>) -> CliResult<()> {
    let mut wtr = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    wtr.write_record(CSV_HEADER)?;
    for row in rows {
        wtr.serialize(row)?;
    }
    let bytes = wtr.into_inner().map_err(|e| Fail::Other(e.to_string()))?;
    emit(out, &bytes)
}

fn verify(corpus: &Path, solver: &SolverArgs, factor: Option<f64>) -> CliResult<()> {
    let guards = Guards::from_env()?;
    if let Some(f) = factor {
        if !(f >= 1.0 && f.is_finite()) {
            return Err(Fail::Usage("--factor must be a finite number >= 1".into()));
        }
    }
    let files = corpus_files(corpus)?;
    let opts = RunOptions {
        with_oracle: true,
        timing: !solver.no_timing,
    };
    let records: Vec<RunRecord> = files
        .par_iter()
        .map(|path| -> CliResult<RunRecord> {
            let g = load(path)?;
            let plan = Plan::resolve(solver.objective, solver.mode, solver.params(), g.is_undirected())?;
            record::run(instance_id(path), &g, plan, &guards, &opts)
        })
        .collect::<CliResult<_>>()?;

    let mut violations = Vec::new();
    let verdicts: Vec<bool> = records
        .iter()
        .map(|r| {
            let opt = r.opt.expect("oracle ran");
            let ok = r.value >= opt && r.lower_bound <= opt && within_bound(r, opt, factor);
            if !ok {
                violations.push(format!("{} (value {}, opt {opt})", r.instance, r.value));
            }
            ok
        })
        .collect();
    write_csv(
        solver.out.as_deref(),
        records.iter().zip(&verdicts).map(|(r, &ok)| r.csv_row(factor, Some(ok))),
    )?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Fail::Violation(violations.join(", ")))
    }
}

/// Declared bounds get a `1e-12` slack on the ratio; guarantees from the
/// run are exact rationals and compared exactly.
fn within_bound(r: &RunRecord, opt: u64, factor: Option<f64>) -> bool {
    match factor {
        None => within_factor(r.value, opt, r.factor),
        Some(f) => within_factor(r.value, opt, rational(f)) || (r.value as f64) <= (f + 1e-12) * opt as f64,
    }
}

fn bench(
    corpus: &Path,
    objective: Objective,
    modes: &[Mode],
    params: Params,
    out: Option<&Path>,
    timing: bool,
) -> CliResult<()> {
    let guards = Guards::from_env()?;
    let files = corpus_files(corpus)?;
    let opts = RunOptions {
        with_oracle: false,
        timing,
    };
    let jobs: Vec<(&PathBuf, Mode)> = files
        .iter()
        .flat_map(|f| modes.iter().map(move |&m| (f, m)))
        .collect();
    let records: Vec<RunRecord> = jobs
        .par_iter()
        .map(|&(path, mode)| -> CliResult<RunRecord> {
            let g = load(path)?;
            // parameters only reach the modes that take them
            let p = if mode == Mode::Exact {
                Params::default()
            } else {
                params
            };
            let plan = Plan::resolve(objective, mode, p, g.is_undirected())?;
            record::run(instance_id(path), &g, plan, &guards, &opts)
        })
        .collect::<CliResult<_>>()?;
    write_csv(out, records.iter().map(|r| r.csv_row(None, None)))
}
