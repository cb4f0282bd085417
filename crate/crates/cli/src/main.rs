mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use paritydom::gf2::{self, Gf2Matrix, Gf2Vector};
use paritydom::graph::{self, Graph, VertexSet};
use paritydom::{domination, DominationReport};

// exit codes: 0 success (including "unsolvable"), 1 property failure,
// 2 usage/parse error, 3 I/O error
const EXIT_PROPERTY_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "paritydom", about = "Parity domination analysis over GF(2)", version)]
struct Cli {
    /// Input format; default is auto-detection by extension (.g6)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Emit machine-readable JSON where supported
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized subcommands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Edges,
    G6,
}

#[derive(Subcommand)]
enum Command {
    /// Full parity-domination report for one graph
    Analyze { path: PathBuf },
    /// Solve for a C-parity set of the given target
    Solve {
        path: PathBuf,
        #[command(flatten)]
        target: TargetSpec,
    },
    /// Re-check the library's identities over graph sweeps
    Verify {
        /// Exhaustive sweep bound (capped at 5)
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Number of random graphs per sweep
        #[arg(long, default_value_t = 2000)]
        trials: usize,
    },
    /// Time rank/solve/invert on random matrices
    Bench {
        #[arg(long, default_value_t = 1024)]
        size: usize,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TargetSpec {
    /// Comma-separated 1-based vertex list forming the target set C
    #[arg(long)]
    target: Option<String>,
    /// Target every vertex (odd dominating set)
    #[arg(long)]
    all_on: bool,
    /// Target no vertex (print the even-dominating kernel basis)
    #[arg(long)]
    all_off: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("{}: {err}", path.display()),
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Analyze { path } => {
            let g = load_graph(path, cli.format)?;
            cmd_analyze(&g, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { path, target } => {
            let g = load_graph(path, cli.format)?;
            cmd_solve(&g, target)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n, trials } => {
            let outcome = verify::run(*max_n, *trials, cli.seed);
            Ok(if outcome.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_PROPERTY_FAILURE)
            })
        }
        Command::Bench { size, reps } => {
            cmd_bench(*size, *reps, cli.seed);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_graph(path: &Path, format: Option<Format>) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let format = format.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e == "g6") {
            Format::G6
        } else {
            Format::Edges
        }
    });
    let parsed = match format {
        Format::Edges => graph::parse_edge_list(&text),
        Format::G6 => graph::parse_graph6(&text),
    };
    parsed.map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn vertex_list(s: &VertexSet) -> String {
    let items: Vec<String> = s.to_one_based().iter().map(usize::to_string).collect();
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(" ")
    }
}

fn cmd_analyze(g: &Graph, json: bool) {
    let report = domination::parity_theorem_check(g);
    let corollaries = domination::corollary_suite(g);
    if json {
        println!("{}", report_json(&report, &corollaries));
        return;
    }
    println!("order: {}", report.order);
    println!("rank: {}", report.rank);
    println!("nullity: {}", report.nullity);
    println!("odd dominating set: {}", vertex_list(&report.odd_dominating));
    println!(
        "parity check: pr(|S|)=pr(rho)={} OK",
        u8::from(report.odd_parity)
    );
    println!("always solvable: {}", if report.always_solvable { "yes" } else { "no" });
    println!("null vertices: {}", vertex_list(&report.null_vertices));
    println!("null differences:");
    for (v, nd) in report.null_differences.iter().enumerate() {
        println!("  v{}: {nd:+}", v + 1);
    }
    println!("corollaries:");
    for c in &corollaries {
        let verdict = if !c.applicable {
            "n/a"
        } else if c.holds {
            "ok"
        } else {
            "VIOLATED"
        };
        println!("  {}: {verdict}", c.id);
    }
}

fn report_json(report: &DominationReport, corollaries: &[domination::CorollaryCheck]) -> String {
    let corollary_values: Vec<serde_json::Value> = corollaries
        .iter()
        .map(|c| {
            serde_json::json!({
                "id": c.id,
                "applicable": c.applicable,
                "holds": c.holds,
            })
        })
        .collect();
    serde_json::json!({
        "order": report.order,
        "rank": report.rank,
        "nullity": report.nullity,
        "odd_dominating": report.odd_dominating.to_one_based(),
        "null_vertices": report.null_vertices.to_one_based(),
        "null_differences": report.null_differences,
        "checks": {
            "parity_theorem": report.odd_parity == report.rank_parity,
            "always_solvable": report.always_solvable,
            "odd_degree_intersection_parity": report.odd_degree_intersection_parity,
            "corollaries": corollary_values,
        },
    })
    .to_string()
}

fn cmd_solve(g: &Graph, spec: &TargetSpec) -> Result<(), CliError> {
    let n = g.vertex_count();
    if spec.all_off {
        for basis_set in domination::even_dominating_basis(g) {
            println!("{}", vertex_list(&basis_set));
        }
        return Ok(());
    }
    let target = if spec.all_on {
        VertexSet::full(n)
    } else {
        parse_target(spec.target.as_deref().unwrap_or_default(), n)?
    };
    match domination::solve_parity(g, &target).solution {
        // "unsolvable" is a correct answer, not an error: exit 0
        Some(s) => println!("{}", vertex_list(&s)),
        None => println!("unsolvable"),
    }
    Ok(())
}

fn parse_target(text: &str, n: usize) -> Result<VertexSet, CliError> {
    let mut set = VertexSet::empty(n);
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: usize = item
            .parse()
            .map_err(|_| CliError::usage(format!("bad target vertex {item:?}")))?;
        if v < 1 || v > n {
            return Err(CliError::usage(format!(
                "target vertex {v} out of range 1..={n}"
            )));
        }
        set.insert(v - 1);
    }
    Ok(set)
}

fn cmd_bench(size: usize, reps: u32, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut matrix = Gf2Matrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            if rng.gen::<bool>() {
                matrix.set(i, j, true);
            }
        }
    }
    let mut rhs = Gf2Vector::zeros(size);
    for i in 0..size {
        if rng.gen::<bool>() {
            rhs.set(i, true);
        }
    }
    let invertible = gf2::random_symmetric_unit_diagonal_invertible(size.max(1), seed);

    let median = |f: &mut dyn FnMut()| -> Duration {
        let mut times: Vec<Duration> = (0..reps)
            .map(|_| {
                let t = Instant::now();
                f();
                t.elapsed()
            })
            .collect();
        times.sort();
        times[times.len() / 2]
    };

    println!("size: {size}, reps: {reps}, seed: {seed}");
    let rank_time = median(&mut || {
        gf2::rank(&matrix);
    });
    println!("rank:   median {rank_time:.3?}");
    let solve_time = median(&mut || {
        gf2::solve(&matrix, &rhs);
    });
    println!("solve:  median {solve_time:.3?}");
    let invert_time = median(&mut || {
        gf2::invert(&invertible);
    });
    println!("invert: median {invert_time:.3?}");
}
