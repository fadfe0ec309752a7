use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use arboreal::ball::{forest_ball_size_formula, sphere, tree_ball, BallOptions, BallStrategy};
use arboreal::bounds::{best_upper_bound, max_code_search, BoundReport, SearchMode};
use arboreal::codes::{
    certify, construct_coset_code, construct_line_code, construct_star_code,
    construct_two_star_code, decode_line_code, decode_star_code, decode_two_star,
    generic_erasure_decode, generic_error_decode, simulate_channel, ChannelKind, PatternMode,
    TreeCode,
};
use arboreal::tree::enumerate_trees;
use arboreal::{prufer_encode, Forest, Guard, LabeledTree, PruferSequence};
use arboreal_cli::output::to_json;
use arboreal_cli::suites::{run_suite, Suite, SuiteParams};
use arboreal_cli::tables::{balls_table, bounds_table, forests_table};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] arboreal::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "arboreal",
    version,
    about = "Codes over labeled trees under the tree distance"
)]
struct Cli {
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every labeled tree on n nodes in Prüfer order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Stop after this many trees.
        #[arg(long)]
        limit: Option<usize>,
        /// Print Prüfer words instead of edge lists.
        #[arg(long)]
        words: bool,
    },
    /// Convert between trees and Prüfer words.
    Prufer {
        #[command(subcommand)]
        action: PruferAction,
    },
    /// Tree distance between two trees.
    Distance { a: String, b: String },
    /// Ball or sphere around a tree, or the ball size of a forest.
    Ball(BallArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Emit a CSV table.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        n: usize,
        /// Radius for the balls table.
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// Upper bounds on code size.
    Bounds {
        #[arg(long)]
        n: usize,
        /// A single distance; all of 1..n when omitted.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Search for a large code by clique search.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build one of the four constructions.
    Construct {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Code file to write; printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute size and minimum distance of a code file.
    Certify { code: PathBuf },
    /// Decode a forest (erasures) or a tree (errors).
    Decode(DecodeArgs),
    /// Push codewords through an erasure or error channel.
    Channel(ChannelArgs),
}

#[derive(Subcommand)]
enum PruferAction {
    /// Tree to word.
    Encode { tree: String },
    /// Word to tree.
    Decode {
        /// Node count; word length plus two when omitted.
        #[arg(long)]
        n: Option<usize>,
        /// Space-separated entries; empty for n <= 2.
        #[arg(default_value = "")]
        word: String,
    },
}

#[derive(Args)]
struct BallArgs {
    #[arg(long, conflicts_with = "forest", required_unless_present = "forest")]
    tree: Option<String>,
    #[arg(long)]
    radius: Option<usize>,
    /// Forest whose completions form the ball.
    #[arg(long)]
    forest: Option<String>,
    /// Only trees at exactly the radius.
    #[arg(long)]
    sphere: bool,
    /// List the member trees.
    #[arg(long)]
    members: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
}

#[derive(Args)]
struct DecodeArgs {
    code: PathBuf,
    #[arg(
        long,
        conflicts_with = "received",
        required_unless_present = "received"
    )]
    forest: Option<String>,
    /// Tree received through an error channel.
    #[arg(long)]
    received: Option<String>,
    #[arg(long, value_enum, default_value_t = DecoderArg::Generic)]
    decoder: DecoderArg,
    /// Step divisor of a two-star code.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct ChannelArgs {
    code: PathBuf,
    #[arg(long, conflicts_with = "errors", required_unless_present = "errors")]
    erasures: Option<usize>,
    #[arg(long)]
    errors: Option<usize>,
    /// Every pattern of the given weight on every codeword.
    #[arg(long, conflicts_with_all = ["trials", "seed"])]
    exhaustive: bool,
    #[arg(long, requires = "seed")]
    trials: Option<usize>,
    #[arg(long, requires = "trials")]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Balls,
    Bounds,
    Forests,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Line,
    Star,
    Coset,
    Twostar,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Exhaustive,
    Completions,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Generic,
    Line,
    Star,
    Twostar,
}

/// Output text and whether the run counts as a success.
struct Outcome {
    stdout: String,
    ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn line(s: String) -> String {
    s + "\n"
}

fn read_code(path: &Path) -> CliResult<TreeCode> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(TreeCode::from_json(&text)?)
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Serialize)]
struct DistanceReport {
    n: usize,
    distance: usize,
    shared_edges: usize,
}

#[derive(Serialize)]
struct PruferReport {
    n: usize,
    word: Vec<usize>,
    tree: String,
}

#[derive(Serialize)]
struct ForestBallReport {
    forest: String,
    n: usize,
    components: usize,
    size: String,
}

#[derive(Serialize)]
struct SearchReport {
    n: usize,
    d: usize,
    mode: &'static str,
    size: usize,
    bound: BoundReport,
}

#[derive(Serialize)]
struct ConstructReport {
    kind: &'static str,
    n: usize,
    d: usize,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coset: Option<arboreal::codes::CosetSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

#[derive(Serialize)]
struct DecodeReport {
    decoder: &'static str,
    tree: String,
}

fn run(command: Command) -> CliResult<Outcome> {
    let guard = Guard::from_env();
    match command {
        Command::Enumerate { n, limit, words } => {
            if limit.is_none() {
                guard.check_trees(n)?;
            }
            let mut out = String::new();
            for tree in enumerate_trees(n).take(limit.unwrap_or(usize::MAX)) {
                let text = if words && n >= 2 {
                    prufer_encode(&tree)?.to_string()
                } else {
                    tree.to_string()
                };
                out.push_str(&line(text));
            }
            Ok(Outcome::ok(out))
        }
        Command::Prufer { action } => {
            let (seq, tree) = match action {
                PruferAction::Encode { tree } => {
                    let tree: LabeledTree = tree.parse()?;
                    (prufer_encode(&tree)?, tree)
                }
                PruferAction::Decode { n, word } => {
                    let seq = match n {
                        Some(n) => PruferSequence::parse_with_n(n, &word)?,
                        None => PruferSequence::parse(&word)?,
                    };
                    let tree = seq.decode();
                    (seq, tree)
                }
            };
            Ok(Outcome::ok(line(to_json(&PruferReport {
                n: seq.n(),
                word: seq.word().to_vec(),
                tree: tree.to_string(),
            }))))
        }
        Command::Distance { a, b } => {
            let a: LabeledTree = a.parse()?;
            let b: LabeledTree = b.parse()?;
            let distance = a.distance(&b)?;
            Ok(Outcome::ok(line(to_json(&DistanceReport {
                n: a.n(),
                distance,
                shared_edges: a.shared_edges(&b),
            }))))
        }
        Command::Ball(args) => ball(args, guard),
        Command::Verify {
            suite,
            n_max,
            t_max,
        } => {
            let suite: Suite = suite.parse()?;
            let params = SuiteParams {
                n_max: n_max.unwrap_or_else(|| suite.default_n_max()),
                t_max,
                guard,
            };
            let start = Instant::now();
            let result = run_suite(suite, &params)?;
            eprintln!(
                "{suite}: {} cases, {} failures, wall time {:.3}s",
                result.cases,
                result.failures.len(),
                start.elapsed().as_secs_f64()
            );
            Ok(Outcome {
                ok: result.passed,
                stdout: line(to_json(&result)),
            })
        }
        Command::Table { kind, n, t } => Ok(Outcome::ok(match kind {
            TableKind::Balls => balls_table(n, t, &guard)?,
            TableKind::Bounds => bounds_table(n)?,
            TableKind::Forests => forests_table(n)?,
        })),
        Command::Bounds { n, d } => {
            let ds: Vec<usize> = match d {
                Some(d) => vec![d],
                None => (1..n).collect(),
            };
            let reports = ds
                .into_iter()
                .map(|d| best_upper_bound(n, d))
                .collect::<Result<Vec<_>, _>>()?;
            #[derive(Serialize)]
            struct Bounds {
                n: usize,
                bounds: Vec<BoundReport>,
            }
            Ok(Outcome::ok(line(to_json(&Bounds { n, bounds: reports }))))
        }
        Command::Search { n, d, mode, out } => {
            let (mode, label) = match mode {
                ModeArg::Exact => (SearchMode::Exact, "exact"),
                ModeArg::Greedy => (SearchMode::Greedy, "greedy"),
            };
            let code = max_code_search(n, d, mode, &guard)?;
            if let Some(path) = &out {
                write_file(path, &code.to_json_pretty())?;
            }
            Ok(Outcome::ok(line(to_json(&SearchReport {
                n,
                d,
                mode: label,
                size: code.len(),
                bound: best_upper_bound(n, d)?,
            }))))
        }
        Command::Construct { kind, n, d, m, out } => construct(kind, n, d, m, out, &guard),
        Command::Certify { code } => {
            let code = read_code(&code)?;
            let cert = certify(&code);
            Ok(Outcome {
                ok: cert.ok,
                stdout: line(to_json(&cert)),
            })
        }
        Command::Decode(args) => decode(args),
        Command::Channel(args) => channel(args, &guard),
    }
}

fn ball(args: BallArgs, guard: Guard) -> CliResult<Outcome> {
    if let Some(forest) = args.forest {
        let forest: Forest = forest.parse()?;
        return Ok(Outcome::ok(line(to_json(&ForestBallReport {
            n: forest.n(),
            components: forest.num_components(),
            size: forest_ball_size_formula(&forest).to_string(),
            forest: forest.to_string(),
        }))));
    }
    let tree: LabeledTree = args.tree.expect("clap requires tree or forest").parse()?;
    let radius = args
        .radius
        .ok_or_else(|| CliError::Usage("--radius is required with --tree".into()))?;
    let opts = BallOptions {
        strategy: match args.strategy {
            StrategyArg::Auto => BallStrategy::Auto,
            StrategyArg::Exhaustive => BallStrategy::Exhaustive,
            StrategyArg::Completions => BallStrategy::Completions,
        },
        guard,
        materialize: args.members,
    };
    let report = if args.sphere {
        sphere(&tree, radius, &opts)?
    } else {
        tree_ball(&tree, radius, &opts)?
    };
    Ok(Outcome::ok(line(to_json(&report))))
}

fn construct(
    kind: KindArg,
    n: usize,
    d: Option<usize>,
    m: Option<usize>,
    out: Option<PathBuf>,
    guard: &Guard,
) -> CliResult<Outcome> {
    let need = |flag: &str, v: Option<usize>| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
    };
    let (label, code, coset) = match kind {
        KindArg::Line => ("line", construct_line_code(n)?, None),
        KindArg::Star => ("star", construct_star_code(n)?, None),
        KindArg::Coset => {
            let built = construct_coset_code(n, need("d", d)?, guard)?;
            let summary = built.summary();
            ("coset", built.code, Some(summary))
        }
        KindArg::Twostar => ("twostar", construct_two_star_code(n, need("m", m)?)?, None),
    };
    let report = ConstructReport {
        kind: label,
        n,
        d: code.declared_distance(),
        size: code.len(),
        m: matches!(kind, KindArg::Twostar).then_some(m).flatten(),
        coset,
        out: out.as_ref().map(|p| p.display().to_string()),
    };
    match out {
        Some(path) => {
            write_file(&path, &(code.to_json_pretty() + "\n"))?;
            Ok(Outcome::ok(line(to_json(&report))))
        }
        None => Ok(Outcome::ok(line(code.to_json_pretty()))),
    }
}

fn decode(args: DecodeArgs) -> CliResult<Outcome> {
    let code = read_code(&args.code)?;
    let (label, tree) = match (args.forest, args.received) {
        (Some(forest), _) => {
            let forest: Forest = forest.parse()?;
            match args.decoder {
                DecoderArg::Generic => ("generic", generic_erasure_decode(&code, &forest)?),
                DecoderArg::Line => ("line", decode_line_code(&code, &forest)?),
                DecoderArg::Star => ("star", decode_star_code(&code, &forest)?),
                DecoderArg::Twostar => {
                    let m = args.m.ok_or_else(|| {
                        CliError::Usage("--m is required for the two-star decoder".into())
                    })?;
                    ("twostar", decode_two_star(&code, m, &forest)?)
                }
            }
        }
        (None, Some(received)) => {
            if !matches!(args.decoder, DecoderArg::Generic) {
                return Err(CliError::Usage(
                    "error decoding uses the generic decoder only".into(),
                ));
            }
            let received: LabeledTree = received.parse()?;
            ("generic", generic_error_decode(&code, &received)?)
        }
        (None, None) => return Err(CliError::Usage("give --forest or --received".into())),
    };
    Ok(Outcome::ok(line(to_json(&DecodeReport {
        decoder: label,
        tree: tree.to_string(),
    }))))
}

fn channel(args: ChannelArgs, guard: &Guard) -> CliResult<Outcome> {
    let code = read_code(&args.code)?;
    let kind = match (args.erasures, args.errors) {
        (Some(k), _) => ChannelKind::Erasure(k),
        (None, Some(k)) => ChannelKind::Error(k),
        (None, None) => return Err(CliError::Usage("give --erasures or --errors".into())),
    };
    let mode = match (args.exhaustive, args.trials, args.seed) {
        (true, _, _) => PatternMode::Exhaustive,
        (false, Some(trials), Some(seed)) => PatternMode::Sampled { trials, seed },
        _ => {
            return Err(CliError::Usage(
                "give --exhaustive, or --trials with a --seed for sampling".into(),
            ))
        }
    };
    let report = simulate_channel(&code, kind, mode, guard)?;
    if !report.within_capability {
        eprintln!(
            "note: weight {} exceeds the guaranteed capability {}; failures are expected",
            kind.weight(),
            report.capability
        );
    }
    Ok(Outcome {
        ok: report.all_succeeded() || !report.within_capability,
        stdout: line(to_json(&report)),
    })
}
