//! The `gft` command line: argument parsing, dispatch and exit codes.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use laguerre_gft::laguerre::eval;
use laguerre_gft::report::{parse_scan, tidy_csv};
use laguerre_gft::scan::{
    format_real as fmt_real, run_scan, serialize, write_atomically, ConventionChoice, OutputFormat, ScanConfigPatch,
    ScanTheorem, StepRange,
};
use laguerre_gft::theorems::{corollary_check, thm1_condition, thm2_condition, ConditionVerdict, Quadruple};
use laguerre_gft::{
    check_subordination, Complex64, DiskGrid, Error, Functional, FunctionalKind, JanowskiParams, PolynomialSpec,
    SignConvention, SubordinationReport, TargetDomain,
};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_AMBIGUOUS: u8 = 3;

#[derive(Parser)]
#[command(name = "gft", version, about = "Normalized Laguerre polynomials: evaluation, subordination checks, sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate M_{n,α} or one of its derivatives at complex points.
    Eval(EvalArgs),
    /// Check a sufficient condition or run a single subordination test.
    Check(CheckArgs),
    /// Sweep a parameter grid and write one row per parameter set.
    Scan(ScanArgs),
    /// Convert a scan file into a tidy CSV table.
    Report(ReportArgs),
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    #[arg(short = 'n', long)]
    degree: usize,
    #[arg(short = 'a', long)]
    alpha: f64,
    /// Point such as 0.5, -2, 0.9+0.1i, 2i; repeatable.
    #[arg(short = 'z', required = true, allow_hyphen_values = true, value_parser = parse_complex)]
    z: Vec<Complex64>,
    #[arg(short = 'd', long = "derivative", default_value_t = 0)]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Thm1,
    Thm2,
    Corollary,
    Subordination,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionalArg {
    Identity,
    Starlike,
    Convexity,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Exp,
    Janowski,
    Lemniscate,
    Halfplane,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ReportFormat {
    Human,
    Json,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct CheckArgs {
    #[arg(value_enum)]
    kind: CheckKind,
    #[arg(short = 'n', long)]
    degree: usize,
    #[arg(short = 'a', long)]
    alpha: f64,
    #[arg(short = 'C', long = "C")]
    c: Option<f64>,
    #[arg(short = 'D', long = "D")]
    d: Option<f64>,
    #[arg(long, default_value = "plusD", value_parser = parse_convention)]
    convention: SignConvention,
    /// Radius for the nonvanishing hypotheses.
    #[arg(long, default_value_t = 1.0)]
    root_radius: f64,
    #[arg(long, default_value_t = DiskGrid::CANONICAL.r_max)]
    r_max: f64,
    #[arg(long, default_value_t = DiskGrid::CANONICAL.n_radii)]
    radii: usize,
    #[arg(long, default_value_t = DiskGrid::CANONICAL.n_angles)]
    angles: usize,
    #[arg(long, value_enum, default_value = "identity")]
    functional: FunctionalArg,
    /// Multiply the polynomial by z before forming the functional.
    #[arg(long)]
    prefactor_z: bool,
    #[arg(long, value_enum, default_value = "exp")]
    domain: DomainArg,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, value_enum, default_value = "human")]
    format: ReportFormat,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ScanArgs {
    /// JSON config; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_parser = parse_theorem)]
    theorem: Option<ScanTheorem>,
    /// Inclusive degree range LO:HI.
    #[arg(long = "n", value_parser = parse_n_range)]
    n_range: Option<[usize; 2]>,
    /// START:END:STEP
    #[arg(long = "alpha", allow_hyphen_values = true, value_parser = parse_step_range)]
    alpha_range: Option<StepRange>,
    #[arg(long = "C", allow_hyphen_values = true, value_parser = parse_step_range)]
    c_range: Option<StepRange>,
    #[arg(long = "D", allow_hyphen_values = true, value_parser = parse_step_range)]
    d_range: Option<StepRange>,
    #[arg(long, value_parser = parse_convention_choice)]
    convention: Option<ConventionChoice>,
    #[arg(long, value_parser = parse_format)]
    format: Option<OutputFormat>,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[arg(long)]
    root_radius: Option<f64>,
    #[arg(long)]
    r_max: Option<f64>,
    #[arg(long)]
    radii: Option<usize>,
    #[arg(long)]
    angles: Option<usize>,
}

#[derive(Args)]
struct ReportArgs {
    input: PathBuf,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    t.parse::<Complex64>().map_err(|_| format!("not a complex number: {s:?}"))
}

fn parse_convention(s: &str) -> Result<SignConvention, String> {
    s.parse::<SignConvention>().map_err(|e| e.to_string())
}

fn parse_convention_choice(s: &str) -> Result<ConventionChoice, String> {
    s.parse::<ConventionChoice>().map_err(|e| e.to_string())
}

fn parse_theorem(s: &str) -> Result<ScanTheorem, String> {
    s.parse::<ScanTheorem>().map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse::<OutputFormat>().map_err(|e| e.to_string())
}

fn parse_n_range(s: &str) -> Result<[usize; 2], String> {
    let bad = || format!("expected LO:HI, got {s:?}");
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok([lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?])
}

fn parse_step_range(s: &str) -> Result<StepRange, String> {
    let bad = || format!("expected START:END:STEP, got {s:?}");
    let parts: Vec<f64> = s.split(':').map(|p| p.parse::<f64>().map_err(|_| bad())).collect::<Result<_, _>>()?;
    match parts[..] {
        [start, end, step] => Ok(StepRange::new(start, end, step)),
        _ => Err(bad()),
    }
}

fn fmt_complex(w: Complex64) -> String {
    if w.im == 0.0 {
        fmt_real(w.re)
    } else if w.re == 0.0 {
        format!("{}i", fmt_real(w.im))
    } else if w.im < 0.0 {
        format!("{}-{}i", fmt_real(w.re), fmt_real(-w.im))
    } else {
        format!("{}+{}i", fmt_real(w.re), fmt_real(w.im))
    }
}

fn exit_for(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        Error::AmbiguousRoot { .. } => ExitCode::from(EXIT_AMBIGUOUS),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn pass_fail(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode, Error> {
    let spec = PolynomialSpec::new(args.degree, args.alpha)?;
    for &z in &args.z {
        println!("{}", fmt_complex(eval(&spec, z, args.order)));
    }
    Ok(ExitCode::SUCCESS)
}

fn janowski_from(args: &CheckArgs) -> Result<JanowskiParams, Error> {
    match (args.c, args.d) {
        (Some(c), Some(d)) => JanowskiParams::new(c, d),
        _ => Err(Error::InvalidArgument("-C and -D are required".into())),
    }
}

fn print_verdict(title: &str, verdict: &ConditionVerdict) {
    println!("{title}: {}", if verdict.holds { "holds" } else { "fails" });
    for c in &verdict.clauses {
        let side = |v: Option<f64>| v.map_or("-".to_string(), fmt_real);
        let rel =
            serde_json::to_value(c.relation).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        let status =
            serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        print!("  {}: {} {rel} {}  [{status}]", c.name, side(c.lhs), side(c.rhs));
        match &c.note {
            Some(note) => println!("  ({note})"),
            None => println!(),
        }
    }
}

fn print_report(report: &SubordinationReport) {
    println!(
        "subordinate: {}  worst_margin: {}  witness: {}  samples: {}  undefined: {}",
        report.verdict,
        fmt_real(report.worst_margin),
        fmt_complex(report.witness),
        report.samples_checked,
        report.undefined_points
    );
    if let Some(w) = report.witness_value {
        println!("  value at witness: {}", fmt_complex(w));
    }
}

fn cmd_check(args: &CheckArgs) -> Result<ExitCode, Error> {
    let grid = DiskGrid::new(args.r_max, args.radii, args.angles)?;
    let (n, alpha) = (args.degree, args.alpha);
    let kind = args.kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let title = format!("{kind} n={n} alpha={}", fmt_real(alpha));

    let (ok, verdict, report) = match args.kind {
        CheckKind::Thm1 => {
            let v = thm1_condition(n, alpha)?;
            (v.holds, Some(v), None)
        }
        CheckKind::Thm2 => {
            let p = janowski_from(args)?;
            let v = thm2_condition(&Quadruple::new(n, alpha, p.c(), p.d())?, args.root_radius)?;
            (v.holds, Some(v), None)
        }
        CheckKind::Corollary => {
            let p = janowski_from(args)?;
            let (v, r) = corollary_check(n, alpha, &p, args.convention, args.root_radius, &grid)?;
            (v.holds, Some(v), r)
        }
        CheckKind::Subordination => {
            let spec = PolynomialSpec::new(n, alpha)?;
            let kind = match args.functional {
                FunctionalArg::Identity => FunctionalKind::Identity,
                FunctionalArg::Starlike => FunctionalKind::StarlikeRatio,
                FunctionalArg::Convexity => FunctionalKind::ConvexityRatio,
            };
            let f =
                if args.prefactor_z { Functional::with_prefactor_z(kind, spec) } else { Functional::new(kind, spec) };
            let domain = match args.domain {
                DomainArg::Exp => TargetDomain::Exponential,
                DomainArg::Lemniscate => TargetDomain::Lemniscate,
                DomainArg::Janowski => {
                    TargetDomain::Janowski { params: janowski_from(args)?, convention: args.convention }
                }
                DomainArg::Halfplane => TargetDomain::half_plane(
                    args.beta.ok_or_else(|| Error::InvalidArgument("--beta is required".into()))?,
                )?,
            };
            let r = check_subordination(&f, &domain, &grid)?;
            (r.verdict, None, Some(r))
        }
    };

    if args.format == ReportFormat::Json {
        let doc = json!({
            "kind": kind,
            "n": n,
            "alpha": alpha,
            "C": args.c,
            "D": args.d,
            "sign_convention": args.convention,
            "holds": ok,
            "verdict": verdict,
            "report": report,
        });
        println!("{doc}");
    } else {
        if let Some(v) = &verdict {
            print_verdict(&title, v);
        } else {
            println!("{title}");
        }
        if let Some(r) = &report {
            print_report(r);
        }
    }
    Ok(pass_fail(ok))
}

fn cmd_scan(args: &ScanArgs) -> Result<ExitCode, Error> {
    let file_patch = match &args.config {
        Some(path) => ScanConfigPatch::from_json(
            &fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?,
        )?,
        None => ScanConfigPatch::default(),
    };
    let flag_patch = ScanConfigPatch {
        theorem: args.theorem,
        n_range: args.n_range,
        alpha_range: args.alpha_range,
        c_range: args.c_range,
        d_range: args.d_range,
        grid: None,
        sign_convention: args.convention,
        root_radius: args.root_radius,
        format: args.format,
        output_path: args.output.clone(),
    };
    let mut cfg = ScanConfigPatch::resolve(&[&file_patch, &flag_patch]);
    if let Some(r) = args.r_max {
        cfg.grid.r_max = r;
    }
    if let Some(k) = args.radii {
        cfg.grid.n_radii = k;
    }
    if let Some(k) = args.angles {
        cfg.grid.n_angles = k;
    }

    let out = run_scan(&cfg)?;
    let bytes = serialize(&out)?;
    let to_stdout = cfg.output_path.is_none();
    match &cfg.output_path {
        Some(path) => write_atomically(path, &bytes)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&bytes)?;
        }
    }
    let violations: usize = out.summary.iter().map(|s| s.soundness_violations).sum();
    for s in &out.summary {
        if to_stdout {
            eprintln!("{s}");
        } else {
            println!("{s}");
        }
    }
    Ok(pass_fail(violations == 0))
}

fn cmd_report(args: &ReportArgs) -> Result<ExitCode, Error> {
    let text =
        fs::read_to_string(&args.input).map_err(|e| Error::Malformed(format!("{}: {e}", args.input.display())))?;
    let table = tidy_csv(&parse_scan(&text)?)?;
    match &args.output {
        Some(path) => write_atomically(path, &table)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&table)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn configure_threads() -> Result<(), Error> {
    let Ok(raw) = std::env::var("GFT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::Config(format!("GFT_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| Error::Config(e.to_string()))
}

/// Parses `args` (program name first) and runs the command. Usage errors
/// print clap's message and map to exit code 2.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        return exit_for(&e);
    }
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Check(a) => cmd_check(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Report(a) => cmd_report(a),
    };
    result.unwrap_or_else(|e| exit_for(&e))
}
