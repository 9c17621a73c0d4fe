//! The `ppm` command line: `count`, `detect`, `gen`, `selftest`, `bench`.
//!
//! Exit codes: 0 success, 1 self-test failure, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::count::Count;
use crate::domain::{format_permutation, parse_permutation, PpmInstance};
use crate::dp::LinearDp;
use crate::error::PpmError;
use crate::oracle::{bkm_report, brute_force, DEFAULT_MAX_N};
use crate::rng::{planted_instance, random_permutation};
use crate::selftest::{self, SelftestConfig};
use crate::solver::{
    checked_binomial, count_ppm, count_ppm_parallel, detect_ppm, detect_ppm_parallel, family_size,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ppm", version, about = "Exact permutation pattern matching")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of occurrences of the pattern in the text.
    Count(SolveArgs),
    /// Print "true" if the pattern occurs in the text, "false" otherwise.
    Detect(SolveArgs),
    /// Print a seeded uniformly random permutation of length n.
    Gen(GenArgs),
    /// Run the invariant suites on small instances.
    Selftest(SelftestArgs),
    /// Time the solvers on seeded instances and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Sum over the even-guess decomposition family.
    Fast,
    /// Exact guessing of the even pattern positions.
    Bkm,
    /// Exhaustive search.
    Brute,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Fast => "fast",
            Algorithm::Bkm => "bkm",
            Algorithm::Brute => "brute",
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum, default_value_t = Algorithm::Fast)]
    pub algo: Algorithm,
    /// Text permutation in one-line notation.
    #[arg(long, conflicts_with_all = ["sigma_file", "instance"])]
    pub sigma: Option<String>,
    /// File whose first line is the text permutation.
    #[arg(long)]
    pub sigma_file: Option<PathBuf>,
    /// Pattern permutation in one-line notation.
    #[arg(long, conflicts_with_all = ["pattern_file", "instance"])]
    pub pattern: Option<String>,
    /// File holding the pattern: its second line if it has two, else its first.
    #[arg(long)]
    pub pattern_file: Option<PathBuf>,
    /// Instance file: text on the first line, pattern on the second.
    #[arg(long, conflicts_with_all = ["sigma_file", "pattern_file"])]
    pub instance: Option<PathBuf>,
    /// Worker threads for the fast solver. Output does not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
    /// Size cap for the brute-force oracle.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(short, long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Largest n in the exhaustive suites.
    #[arg(long, default_value_t = SelftestConfig::default().max_n)]
    pub max_n: usize,
    #[arg(long, default_value_t = SelftestConfig::default().seed)]
    pub seed: u64,
    /// Number of seeded random instances in the equivalence suite.
    #[arg(long, default_value_t = SelftestConfig::default().random_instances)]
    pub random: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Algorithm::Fast)]
    pub algo: Algorithm,
    /// Comma-separated `n:k` pairs.
    #[arg(long, value_parser = parse_pairs)]
    pub pairs: Vec<PairList>,
    /// Timed runs per pair; the median is reported.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub reps: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the fast solver. Output does not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (n, k) = s
        .split_once(':')
        .ok_or_else(|| format!("expected n:k, got {s:?}"))?;
    let n: usize = n.trim().parse().map_err(|_| format!("bad n in {s:?}"))?;
    let k: usize = k.trim().parse().map_err(|_| format!("bad k in {s:?}"))?;
    if k == 0 || k > n {
        return Err(format!("need 1 <= k <= n, got {s:?}"));
    }
    Ok((n, k))
}

/// Value of one `--pairs` flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairList(pub Vec<(usize, usize)>);

fn parse_pairs(s: &str) -> Result<PairList, String> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_pair)
        .collect::<Result<_, _>>()
        .map(PairList)
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Solver(PpmError),
}

impl From<PpmError> for CliError {
    fn from(e: PpmError) -> Self {
        CliError::Solver(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(s) => f.write_str(s),
            CliError::Solver(e) => write!(f, "{e}"),
        }
    }
}

fn read_lines(path: &Path) -> Result<Vec<String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn load_instance(args: &SolveArgs) -> Result<PpmInstance, CliError> {
    let (sigma_text, pattern_text) = if let Some(path) = &args.instance {
        let lines = read_lines(path)?;
        match lines.as_slice() {
            [s, p, ..] => (s.clone(), p.clone()),
            _ => {
                return Err(CliError::Input(format!(
                    "{}: instance files need two lines",
                    path.display()
                )))
            }
        }
    } else {
        let sigma = match (&args.sigma, &args.sigma_file) {
            (Some(s), _) => s.clone(),
            (None, Some(path)) => read_lines(path)?
                .into_iter()
                .next()
                .ok_or_else(|| CliError::Input(format!("{}: empty file", path.display())))?,
            (None, None) => return Err(CliError::Input("missing --sigma or --sigma-file".into())),
        };
        let pattern = match (&args.pattern, &args.pattern_file) {
            (Some(p), _) => p.clone(),
            (None, Some(path)) => {
                let lines = read_lines(path)?;
                lines
                    .get(1)
                    .or(lines.first())
                    .cloned()
                    .ok_or_else(|| CliError::Input(format!("{}: empty file", path.display())))?
            }
            (None, None) => {
                return Err(CliError::Input(
                    "missing --pattern or --pattern-file".into(),
                ))
            }
        };
        (sigma, pattern)
    };
    let sigma = parse_permutation(&sigma_text)?;
    let pattern = parse_permutation(&pattern_text)?;
    Ok(PpmInstance::new(sigma, pattern)?)
}

fn solve_count(args: &SolveArgs, instance: &PpmInstance) -> Result<Count, CliError> {
    Ok(match args.algo {
        Algorithm::Fast => count_ppm_parallel(instance, args.threads as usize),
        Algorithm::Bkm => bkm_report(instance, &mut LinearDp::new()).count,
        Algorithm::Brute => brute_force(instance, false, args.max_n)?.count,
    })
}

fn cmd_count(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let instance = load_instance(args)?;
    let count = solve_count(args, &instance)?;
    writeln!(out, "{count}").map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_detect(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let instance = load_instance(args)?;
    let found = match args.algo {
        Algorithm::Fast if args.threads > 1 => {
            detect_ppm_parallel(&instance, args.threads as usize)
        }
        Algorithm::Fast => detect_ppm(&instance),
        _ => !solve_count(args, &instance)?.is_zero(),
    };
    writeln!(out, "{found}").map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.n < 1 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let p = random_permutation(args.n, args.seed);
    writeln!(out, "{}", format_permutation(&p)).map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_selftest(args: &SelftestArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let config = SelftestConfig {
        max_n: args.max_n,
        random_instances: args.random,
        seed: args.seed,
    };
    let mut ok = true;
    for r in selftest::run(&config) {
        ok &= r.passed();
        writeln!(out, "{r}").map_err(io_error)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_SELFTEST_FAILED })
}

/// One line of `ppm bench` output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub algo: Algorithm,
    pub n: usize,
    pub k: usize,
    pub decompositions: u128,
    pub count: Count,
    pub nanos_median: u128,
}

impl BenchRow {
    pub const HEADER: &'static str = "algo,n,k,decompositions,count,nanos_median";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.algo.name(),
            self.n,
            self.k,
            self.decompositions,
            self.count,
            self.nanos_median
        )
    }
}

/// Deterministic instance used by `bench` for `(n, k, seed)`.
pub fn bench_instance(n: usize, k: usize, seed: u64) -> PpmInstance {
    planted_instance(n, k, seed ^ ((n as u64) << 32 | k as u64))
}

/// Median wall time of `reps` runs of `algo` on [`bench_instance`].
pub fn bench_row(
    algo: Algorithm,
    n: usize,
    k: usize,
    seed: u64,
    reps: u32,
    threads: usize,
) -> Result<BenchRow, PpmError> {
    if k == 0 || k > n {
        return Err(PpmError::PatternLongerThanText { n, k });
    }
    let instance = bench_instance(n, k, seed);
    let mut times = Vec::with_capacity(reps as usize);
    let mut result = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let r = match algo {
            Algorithm::Fast => {
                let c = if threads > 1 {
                    count_ppm_parallel(&instance, threads)
                } else {
                    count_ppm(&instance)
                };
                (c, family_size(n, k).unwrap_or(u128::MAX))
            }
            Algorithm::Bkm => {
                let r = bkm_report(&instance, &mut LinearDp::new());
                (r.count, r.decompositions)
            }
            Algorithm::Brute => (
                brute_force(&instance, false, DEFAULT_MAX_N)?.count,
                checked_binomial(n, k).unwrap_or(u128::MAX),
            ),
        };
        times.push(start.elapsed().as_nanos());
        result = Some(r);
    }
    times.sort_unstable();
    let (count, decompositions) = result.expect("at least one repetition");
    Ok(BenchRow {
        algo,
        n,
        k,
        decompositions,
        count,
        nanos_median: times[times.len() / 2],
    })
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let pairs: Vec<(usize, usize)> = args
        .pairs
        .iter()
        .flat_map(|p| p.0.iter().copied())
        .collect();
    if pairs.is_empty() {
        return Err(CliError::Input("missing --pairs".into()));
    }
    writeln!(out, "{}", BenchRow::HEADER).map_err(io_error)?;
    for (n, k) in pairs {
        let row = bench_row(args.algo, n, k, args.seed, args.reps, args.threads as usize)?;
        writeln!(out, "{}", row.csv()).map_err(io_error)?;
    }
    Ok(EXIT_OK)
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Input(format!("write failed: {e}"))
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Count(a) => cmd_count(a, out),
        Command::Detect(a) => cmd_detect(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Selftest(a) => cmd_selftest(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Convenience for tests: runs `args` and returns `(exit code, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}
