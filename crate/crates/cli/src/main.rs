//! `corrkit`: generate sequences, analyze pairs, evaluate Gauss sums and run
//! convergence studies. Standard output carries JSON or CSV only; diagnostics
//! go to standard error.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or invalid input,
//! 3 numerical-check failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use corrkit::experiments::{self, ConvergenceRow};
use corrkit::gauss::{gauss_sum_direct, paris_decompose, GaussParams};
use corrkit::generators::{chu, rudin_shapiro_pair, theorem1_pair, theorem2_pair, ChuSpec};
use corrkit::numeric::fmt17;
use corrkit::seqcore::{parse_text, psc_with, write_text, DemeritReport, Method, Sequence};
use corrkit::verify::{run_suite, CheckOutcome, Suite};
use corrkit::Complex64;

const EXIT_IO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CHECK: u8 = 3;

#[derive(Parser)]
#[command(name = "corrkit", version, about = "Aperiodic correlation of Chu-sequence pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a sequence (or a pair, as <out>.a and <out>.b) in text format
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Demerit factors and Pursley-Sarwate criterion of two sequence files
    Analyze(AnalyzeArgs),
    /// Evaluate a generalized Gauss sum S_N(x, theta)
    Gauss(GaussArgs),
    /// Run a convergence study and print CSV
    Study(StudyArgs),
    /// Run an oracle-equivalence suite; exit 3 if any check fails
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Chu sequence Z_n^(a)
    Chu {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rudin-Shapiro pair of length 2^m
    Rs {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// (Z_n^(1), Z_n^(-1))
    Thm1 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// (Z_2n^(n+1), Z_2n^(n-1))
    Thm2 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Naive,
    Fft,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Naive => Method::Naive,
            MethodArg::Fft => Method::Fft,
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    a: PathBuf,
    b: PathBuf,
    /// Print a JSON object instead of key,value CSV
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
}

#[derive(Args)]
struct GaussArgs {
    #[arg(long = "N")]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    /// Also print every term of the error-function decomposition
    #[arg(long)]
    decompose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StudyKind {
    Eq2,
    Lemma22,
    Thm1,
    Thm2,
    Lemma33,
    All,
}

#[derive(Args)]
struct StudyArgs {
    #[arg(value_enum)]
    kind: StudyKind,
    /// Comma-separated grid of n (default: 64, 256, ..., 16384)
    #[arg(long, value_delimiter = ',')]
    grid: Option<Vec<u64>>,
    /// Extend the default grid to 2^20
    #[arg(long)]
    large: bool,
    /// Shift fractions u/m for the lemma33 study
    #[arg(long, value_delimiter = ',', default_value = "0.25")]
    fractions: Vec<f64>,
    /// Report per-row wall-clock time and fitted power laws on standard error
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemma21,
    Prop31,
    Identities,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Lemma21 => Suite::Lemma21,
            SuiteArg::Prop31 => Suite::Prop31,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Error carrying the process exit code.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<corrkit::Error> for Failure {
    fn from(e: corrkit::Error) -> Self {
        let code = match e {
            corrkit::Error::CheckFailed(_) => EXIT_CHECK,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            err: e.into(),
        }
    }
}

fn io_failure(e: std::io::Error, what: String) -> Failure {
    Failure {
        code: EXIT_IO,
        err: anyhow::Error::new(e).context(what),
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn write_file(path: &Path, text: &str) -> CmdResult {
    std::fs::write(path, text).map_err(|e| io_failure(e, format!("writing {}", path.display())))
}

fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_pair(out: &Path, pair: (Sequence, Sequence)) -> CmdResult {
    write_file(&suffixed(out, ".a"), &write_text(&pair.0))?;
    write_file(&suffixed(out, ".b"), &write_text(&pair.1))
}

fn gen(kind: GenKind) -> CmdResult {
    match kind {
        GenKind::Chu { n, a, out } => {
            let text = write_text(&chu(ChuSpec::new(n, a))?);
            match out {
                Some(p) => write_file(&p, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        GenKind::Rs { m, out } => write_pair(&out, rudin_shapiro_pair(m)?),
        GenKind::Thm1 { n, out } => write_pair(&out, theorem1_pair(n)?),
        GenKind::Thm2 { n, out } => write_pair(&out, theorem2_pair(n)?),
    }
}

fn read_sequence(path: &Path) -> std::result::Result<Sequence, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| io_failure(e, format!("reading {}", path.display())))?;
    parse_text(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.err = f.err.context(format!("parsing {}", path.display()));
        f
    })
}

fn report_csv(r: &DemeritReport) -> String {
    DemeritReport::KEYS
        .iter()
        .zip(r.fields())
        .map(|(k, v)| format!("{k},{}\n", fmt17(v)))
        .collect()
}

fn analyze(args: AnalyzeArgs) -> CmdResult {
    let a = read_sequence(&args.a)?;
    let b = read_sequence(&args.b)?;
    let report = psc_with(&a, &b, args.method.into())?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report_csv(&report));
    }
    Ok(())
}

fn json_complex(z: Complex64) -> String {
    format!("{{\"re\":{},\"im\":{}}}", fmt17(z.re), fmt17(z.im))
}

fn gauss(args: GaussArgs) -> CmdResult {
    let p = GaussParams::new(args.n, args.x, args.theta);
    let mut fields = vec![
        ("N".to_string(), args.n.to_string()),
        ("x".to_string(), fmt17(args.x)),
        ("theta".to_string(), fmt17(args.theta)),
    ];
    if args.decompose {
        let d = paris_decompose(&p)?;
        fields.extend([
            ("total".into(), json_complex(d.total)),
            ("direct".into(), json_complex(d.direct)),
            ("M".into(), d.m.to_string()),
            ("epsilon".into(), fmt17(d.epsilon)),
            ("mu".into(), json_complex(d.mu)),
            ("main_term".into(), json_complex(d.main_term)),
            ("half_mu_term".into(), json_complex(d.half_mu_term)),
            ("e_terms".into(), json_complex(d.e_terms)),
            ("g_terms".into(), json_complex(d.g_terms)),
            ("remainder".into(), json_complex(d.remainder)),
            ("remainder_abs".into(), fmt17(d.remainder.norm())),
        ]);
    } else {
        fields.push(("total".into(), json_complex(gauss_sum_direct(&p))));
    }
    let body: Vec<String> = fields
        .into_iter()
        .map(|(k, v)| format!("\"{k}\":{v}"))
        .collect();
    println!("{{{}}}", body.join(","));
    Ok(())
}

fn study(args: StudyArgs) -> CmdResult {
    let grid = args.grid.clone();
    let base = || grid.clone().unwrap_or_else(|| experiments::default_grid(args.large));
    let mut rows: Vec<ConvergenceRow> = Vec::new();
    let want = |k: StudyKind| args.kind == k || args.kind == StudyKind::All;
    if want(StudyKind::Eq2) {
        rows.extend(experiments::run_eq2_study(&base())?);
    }
    if want(StudyKind::Lemma22) {
        rows.extend(experiments::run_lemma22_study(&base())?);
    }
    if want(StudyKind::Thm1) {
        rows.extend(experiments::run_thm1_study(&base())?);
    }
    if want(StudyKind::Thm2) {
        let g = grid
            .clone()
            .unwrap_or_else(|| experiments::default_thm2_grid(args.large));
        rows.extend(
            experiments::run_thm2_study(&g)?
                .into_iter()
                .map(|mut r| {
                    r.quantity = format!("thm2_{}", r.quantity);
                    r
                }),
        );
    }
    if want(StudyKind::Lemma33) {
        rows.extend(experiments::run_lemma33_study(&base(), &args.fractions)?);
    }
    if args.kind == StudyKind::All {
        rows.sort_by(|a, b| a.quantity.cmp(&b.quantity).then(a.n.cmp(&b.n)));
    }
    print!("{}", experiments::to_csv(&rows));
    if args.timings {
        for r in &rows {
            eprintln!("{:>8} {:<28} {:>10.3} ms", r.n, r.quantity, r.elapsed.as_secs_f64() * 1e3);
        }
        let mut names: Vec<&str> = rows.iter().map(|r| r.quantity.as_str()).collect();
        names.dedup();
        for q in names {
            if let Some((c, alpha)) = experiments::fit_power_law(&experiments::deviations(&rows, q)) {
                eprintln!("fit {q}: deviation ~ {c:.4} * n^(-{alpha:.4})");
            }
        }
    }
    Ok(())
}

fn verify(suite: SuiteArg) -> CmdResult {
    let outcomes = run_suite(suite.into())?;
    println!("{}", CheckOutcome::csv_header());
    for o in &outcomes {
        println!("{}", o.to_csv_line());
    }
    let failed: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.passed()).collect();
    for o in &failed {
        eprintln!(
            "FAILED {}/{}: worst {:e} exceeds tolerance {:e}",
            o.suite, o.check, o.worst, o.tolerance
        );
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_CHECK,
            err: anyhow::anyhow!("{} check(s) failed", failed.len()),
        })
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(v) = std::env::var("CORRKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .with_context(|| format!("CORRKIT_THREADS must be a nonnegative integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring worker threads")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    let result = match cli.command {
        Command::Gen { kind } => gen(kind),
        Command::Analyze(a) => analyze(a),
        Command::Gauss(g) => gauss(g),
        Command::Study(s) => study(s),
        Command::Verify { suite } => verify(suite),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
