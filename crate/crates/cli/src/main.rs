//! `wix` builds, scores, verifies, enumerates, and searches trees that are
//! extremal for the Wiener index under a fixed degree sequence.
//!
//! Payload goes to stdout (JSON unless `--format dot`), diagnostics to
//! stderr. Exit codes: 0 success, 1 invalid input, 2 an extremal claim or
//! internal cross-check failed, 3 enumeration cap exceeded.

use std::collections::HashSet;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use wix_core::{
    all_degree_sequences, build_greedy_caterpillar, build_greedy_tree, count_labeled,
    enumerate_labeled, extremal_scan, local_search, random_tree, wiener_edges, wiener_pairwise,
    DegreeSequence, Direction, Error as CoreError, Tree, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "wix",
    version,
    about = "Extremal Wiener index trees for a degree sequence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Wiener-minimizing tree for a degree sequence
    Min(BuildArgs),
    /// Build the Wiener-maximizing caterpillar for a degree sequence
    Max(BuildArgs),
    /// Compute the Wiener index of a tree read from a JSON file
    Wiener(WienerArgs),
    /// Enumerate all trees for small sequences and check both constructions
    Verify(VerifyArgs),
    /// List every labeled tree with the given degree sequence
    Enumerate(EnumerateArgs),
    /// Improve a random starting tree by degree-preserving exchange moves
    Search(SearchArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Internal-vertex degrees, comma or space separated, any order
    #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
    degrees: Vec<usize>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct WienerArgs {
    /// Tree in JSON form: {"n": 4, "edges": [[0,1],[1,2],[2,3]]}
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check a single degree sequence
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// Check every degree sequence with at most this many vertices
    #[arg(long)]
    max_n: Option<usize>,
    /// Refuse sequences with more labeled trees than this
    #[arg(long, env = "WIX_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Worker threads for the enumeration
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Internal-vertex degrees, comma or space separated, any order
    #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
    degrees: Vec<usize>,
    /// Print counts instead of trees
    #[arg(long)]
    count_only: bool,
    /// Keep one representative per isomorphism class
    #[arg(long)]
    distinct: bool,
    /// Refuse sequences with more labeled trees than this
    #[arg(long, env = "WIX_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct SearchArgs {
    /// Internal-vertex degrees, comma or space separated, any order
    #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
    degrees: Vec<usize>,
    /// Optimization direction
    #[arg(long, value_enum)]
    direction: Dir,
    /// Seed for the starting tree and the move sampling
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Copy, Clone, ValueEnum)]
enum Dir {
    Min,
    Max,
}

impl From<Dir> for Direction {
    fn from(dir: Dir) -> Direction {
        match dir {
            Dir::Min => Direction::Min,
            Dir::Max => Direction::Max,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn inconsistent(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(err: CoreError) -> Self {
        let code = match err {
            CoreError::TooLarge { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::input(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                err.exit();
            }
            let _ = err.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("wix: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Min(args) => {
            let ds = DegreeSequence::new(args.degrees)?;
            let tree = build_greedy_tree(&ds).tree().clone();
            emit_tree(&tree, args.format)
        }
        Command::Max(args) => {
            let ds = DegreeSequence::new(args.degrees)?;
            let tree = build_greedy_caterpillar(&ds);
            emit_tree(&tree, args.format)
        }
        Command::Wiener(args) => wiener_command(&args),
        Command::Verify(args) => verify_command(args),
        Command::Enumerate(args) => enumerate_command(args),
        Command::Search(args) => search_command(args),
    }
}

fn emit_tree(tree: &Tree, format: Format) -> Result<(), Failure> {
    let sigma = wiener_edges(tree)?;
    match format {
        Format::Json => println!("{}", json!({ "sigma": sigma, "tree": tree })),
        Format::Dot => {
            println!("// sigma = {sigma}");
            print!("{}", tree.to_dot());
        }
    }
    Ok(())
}

fn wiener_command(args: &WienerArgs) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|err| Failure::input(format!("{}: {err}", args.input.display())))?;
    let tree = Tree::from_json(&text)?;
    let pairwise = wiener_pairwise(&tree)?;
    let edges = wiener_edges(&tree)?;
    println!("{}", json!({ "pairwise": pairwise, "edges": edges }));
    if pairwise != edges {
        return Err(Failure::inconsistent(format!(
            "wiener algorithms disagree: pairwise {pairwise} vs edges {edges}"
        )));
    }
    Ok(())
}

fn verify_command(args: VerifyArgs) -> Result<(), Failure> {
    let targets = match (args.degrees, args.max_n) {
        (Some(degrees), None) => vec![DegreeSequence::new(degrees)?],
        (None, Some(max_n)) => all_degree_sequences(max_n),
        _ => return Err(Failure::input("pass exactly one of --degrees and --max-n")),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut all_hold = true;
    for ds in &targets {
        let report = extremal_scan(ds, args.cap, args.jobs.max(1))?;
        let line = serde_json::to_string(&report).expect("report serializes");
        writeln!(out, "{line}")?;
        all_hold &= report.greedy_matches_min && report.caterpillar_matches_max;
    }
    out.flush()?;
    if all_hold {
        Ok(())
    } else {
        Err(Failure::inconsistent(
            "a construction missed the enumerated extreme; see the reports",
        ))
    }
}

fn enumerate_command(args: EnumerateArgs) -> Result<(), Failure> {
    let ds = DegreeSequence::new(args.degrees)?;
    if args.count_only && !args.distinct {
        println!("{}", json!({ "labeled": count_labeled(&ds)? }));
        return Ok(());
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut seen = HashSet::new();
    let mut labeled: u64 = 0;
    for tree in enumerate_labeled(&ds, args.cap)? {
        labeled += 1;
        if args.distinct && !seen.insert(tree.canonical_code()) {
            continue;
        }
        if !args.count_only {
            writeln!(out, "{}", tree.to_json())?;
        }
    }
    if args.count_only {
        writeln!(
            out,
            "{}",
            json!({ "labeled": labeled, "distinct": seen.len() })
        )?;
    }
    out.flush()?;
    Ok(())
}

fn search_command(args: SearchArgs) -> Result<(), Failure> {
    let ds = DegreeSequence::new(args.degrees)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let start = random_tree(&ds, &mut rng);
    let outcome = local_search(&start, args.direction.into(), args.seed)?;
    println!(
        "{}",
        json!({
            "degrees": ds,
            "direction": match args.direction { Dir::Min => "min", Dir::Max => "max" },
            "seed": args.seed,
            "start_sigma": outcome.start_sigma(),
            "end_sigma": outcome.end_sigma(),
            "moves": outcome.moves,
            "tree": outcome.tree,
        })
    );
    Ok(())
}
