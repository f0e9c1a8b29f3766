use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use oppm_cli::bench::{read_rows, write_rows};
use oppm_cli::io::{format_matrix, format_sequence, parse_matrix, parse_sequence};
use oppm_cli::workload::{trial_seed, validate};
use oppm_cli::{bench, generate, run, summarize, Algo, Dim, Grid, Instance, Preset};

#[derive(Parser)]
#[command(name = "oppm", version, about = "Order-preserving pattern matching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write random text/pattern files, one pair per trial.
    Gen(GenArgs),
    /// Print the 1-based positions where the pattern occurs in the text.
    Match(MatchArgs),
    /// Time the matchers over a grid of sizes and emit CSV.
    Bench(BenchArgs),
    /// Average a benchmark CSV per configuration.
    Summarize(SummarizeArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "1")]
    dim: Dim,
    /// Text length (1D) or side length (2D).
    #[arg(long)]
    n: usize,
    /// Pattern length (1D) or side length (2D).
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 1000)]
    sigma: i64,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory; files are named text-<trial>.txt and pattern-<trial>.txt.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct MatchArgs {
    #[arg(long, value_enum, default_value = "1")]
    dim: Dim,
    #[arg(long, value_enum, default_value = "duel")]
    algo: Algo,
    #[arg(long)]
    text: PathBuf,
    #[arg(long)]
    pattern: PathBuf,
    /// Print comparison counts and timing to stderr.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "1")]
    dim: Dim,
    /// Algorithms to run [default: duel,kmp in 1D, duel,reduction2d in 2D].
    #[arg(long, value_enum, value_delimiter = ',')]
    algo: Vec<Algo>,
    /// Text sizes.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Pattern sizes.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    #[arg(long)]
    sigma: Option<i64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use a predefined 1D grid instead of --n/--m.
    #[arg(long, value_enum, conflicts_with_all = ["n", "m"])]
    preset: Option<Preset>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SummarizeArgs {
    /// Benchmark CSV to read.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> anyhow::Result<()> {
    match Cli::parse().command {
        Command::Gen(args) => gen(args),
        Command::Match(args) => match_files(args),
        Command::Bench(args) => run_bench(args),
        Command::Summarize(args) => run_summarize(args),
    }
}

fn gen(args: GenArgs) -> anyhow::Result<()> {
    validate(args.n, args.m, args.sigma, args.trials)?;
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    for trial in 0..args.trials {
        let seed = trial_seed(args.seed, trial);
        let (text, pattern) = match generate(args.dim, args.n, args.m, args.sigma, seed) {
            Instance::One { text, pattern } => (format_sequence(&text), format_sequence(&pattern)),
            Instance::Two { text, pattern } => (format_matrix(&text), format_matrix(&pattern)),
        };
        fs::write(args.out.join(format!("text-{trial}.txt")), text)?;
        fs::write(args.out.join(format!("pattern-{trial}.txt")), pattern)?;
    }
    Ok(())
}

fn read(path: &PathBuf) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn match_files(args: MatchArgs) -> anyhow::Result<()> {
    let (text, pattern) = (read(&args.text)?, read(&args.pattern)?);
    let parsed = |path: &PathBuf| format!("parsing {}", path.display());
    let instance = match args.dim {
        Dim::One => Instance::One {
            text: parse_sequence(&text).with_context(|| parsed(&args.text))?,
            pattern: parse_sequence(&pattern).with_context(|| parsed(&args.pattern))?,
        },
        Dim::Two => Instance::Two {
            text: parse_matrix(&text).with_context(|| parsed(&args.text))?,
            pattern: parse_matrix(&pattern).with_context(|| parsed(&args.pattern))?,
        },
    };
    if instance.pattern_too_large() {
        eprintln!("warning: pattern is larger than the text; no occurrences");
    }
    let report = run(&instance, args.algo)?;
    let mut out = io::stdout().lock();
    out.write_all(report.positions.to_lines().as_bytes())?;
    if args.stats {
        eprint!("{}", report.stats_block());
    }
    Ok(())
}

fn run_bench(args: BenchArgs) -> anyhow::Result<()> {
    let (grid, default_trials) = match args.preset {
        Some(preset) => {
            if args.dim != Dim::One {
                bail!("presets are one-dimensional");
            }
            (preset.grid(), preset.trials())
        }
        None => {
            if args.n.is_empty() || args.m.is_empty() {
                bail!("give --n and --m, or a --preset");
            }
            (Grid::product(&args.n, &args.m), 1)
        }
    };
    let algos = if args.algo.is_empty() {
        match args.dim {
            Dim::One => vec![Algo::Duel, Algo::Kmp],
            Dim::Two => vec![Algo::Duel, Algo::Reduction2d],
        }
    } else {
        args.algo
    };
    let sigma = args.sigma.unwrap_or(Preset::SIGMA);
    let trials = args.trials.unwrap_or(default_trials);
    let rows = bench(&algos, args.dim, &grid, sigma, trials, args.seed)?;
    match args.out {
        Some(path) => write_rows(fs::File::create(path)?, &rows)?,
        None => write_rows(io::stdout().lock(), &rows)?,
    }
    Ok(())
}

fn run_summarize(args: SummarizeArgs) -> anyhow::Result<()> {
    let rows = read_rows(fs::File::open(&args.input)?)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let summary = summarize(&rows);
    match args.out {
        Some(path) => write_rows(fs::File::create(path)?, &summary)?,
        None => write_rows(io::stdout().lock(), &summary)?,
    }
    Ok(())
}
