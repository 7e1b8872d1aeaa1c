//! Thin command-line front end over the `casimir` crate: parameter entry,
//! sweeps, verification suites, root finding, and CSV/SVG figure emission.
//!
//! Exit codes: 0 on success, 1 on numeric failure, 2 on argument errors.

use casimir::abelplana::{
    bose_integral, bose_integral_closed, find_repulsive_window, shifted_distance_factor,
};
use casimir::figure::{
    fig2_csv, fig2_rows, fig2_svg, run_sweep, sweep_csv, SweepGrid, SweepScale, SweepVariable,
    FIG2_DEFAULT_ALPHA_MAX, FIG2_DEFAULT_POINTS,
};
use casimir::{reduced_pressure, verify, Cutoff, Error, PressureMethod, ReducedParams, Sign};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "casimir",
    version,
    about = "Casimir pressure between parallel plates under IR and UV mode cutoffs",
    long_about = "Computes the reduced Casimir pressure P = p·d⁴ as a function of the \
                  dimensionless UV scale x = dΛ, the IR truncation κ = d·k_c/π (or α = πκ), \
                  and the tanh smoothing width ν = d·μ."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced pressure at one parameter point
    Pressure(PressureArgs),
    /// Emit the IR-window figure (CSV, optionally SVG)
    Fig2(Fig2Args),
    /// Sweep one parameter and emit CSV
    Sweep(SweepArgs),
    /// Run a self-verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteName,
    },
    /// Print the Bose-type integral ∫₀^∞ yⁿ/(e^{2πy}−1) dy
    Bose { n: u32 },
    /// Print the repulsive window of the IR-truncated pressure
    Window {
        /// Root bracketing tolerance
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Print the shifted-distance pressure factor, exact and series
    Shift(ShiftArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CutoffName {
    /// exp(−k/Λ)
    Exp,
    /// exp(−(k/Λ)⁴)
    Exp4,
    /// ½(1 − tanh((k − Λ)/μ))
    Tanh,
    /// f ≡ 1 (closed-form paths only)
    None,
}

impl From<CutoffName> for Cutoff {
    fn from(name: CutoffName) -> Self {
        match name {
            CutoffName::Exp => Cutoff::Exponential,
            CutoffName::Exp4 => Cutoff::PowerExponential { power: 4 },
            CutoffName::Tanh => Cutoff::TanhHard,
            CutoffName::None => Cutoff::None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodName {
    Direct,
    Em,
    AbelPlana,
    Closed,
}

impl From<MethodName> for PressureMethod {
    fn from(name: MethodName) -> Self {
        match name {
            MethodName::Direct => PressureMethod::Direct,
            MethodName::Em => PressureMethod::EulerMaclaurin,
            MethodName::AbelPlana => PressureMethod::AbelPlana,
            MethodName::Closed => PressureMethod::ClosedForm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Coefficients,
    Roots,
    Suppression,
    CrossMethod,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatName {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignName {
    Plus,
    Minus,
}

#[derive(Args)]
struct PressureArgs {
    #[arg(long, value_enum, default_value_t = CutoffName::Exp)]
    cutoff: CutoffName,
    /// UV scale x = dΛ
    #[arg(long, default_value_t = 50.0)]
    x: f64,
    /// IR truncation κ = d·k_c/π
    #[arg(long)]
    kappa: Option<f64>,
    /// IR truncation α = k_c·d = πκ (interchangeable with --kappa)
    #[arg(long)]
    alpha: Option<f64>,
    /// Tanh smoothing width ν = d·μ
    #[arg(long, default_value_t = 1.0)]
    nu: f64,
    #[arg(long, value_enum, default_value_t = MethodName::Direct)]
    method: MethodName,
    #[arg(long, value_enum, default_value_t = FormatName::Text)]
    format: FormatName,
}

#[derive(Args)]
struct Fig2Args {
    /// Upper end of the α range
    #[arg(long, default_value_t = FIG2_DEFAULT_ALPHA_MAX)]
    alpha_max: f64,
    #[arg(long, default_value_t = FIG2_DEFAULT_POINTS)]
    points: usize,
    #[arg(long, default_value = "fig2.csv")]
    out_csv: PathBuf,
    #[arg(long)]
    out_svg: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    variable: VariableName,
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long, default_value_t = 50)]
    points: usize,
    #[arg(long, value_enum, default_value_t = ScaleName::Linear)]
    scale: ScaleName,
    #[arg(long, value_enum, default_value_t = CutoffName::Exp)]
    cutoff: CutoffName,
    /// Fixed x while sweeping another variable
    #[arg(long, default_value_t = 50.0)]
    x: f64,
    /// Fixed κ while sweeping another variable
    #[arg(long)]
    kappa: Option<f64>,
    /// Fixed α = πκ while sweeping another variable (interchangeable with --kappa)
    #[arg(long)]
    alpha: Option<f64>,
    /// Fixed ν while sweeping another variable
    #[arg(long, default_value_t = 1.0)]
    nu: f64,
    /// Evaluation route; defaults per cutoff (direct for exp/exp4,
    /// abel-plana for tanh, closed for none)
    #[arg(long, value_enum)]
    method: Option<MethodName>,
    #[arg(long, default_value = "sweep.csv")]
    out: PathBuf,
    /// Worker threads for sweep evaluation (0 = all cores)
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariableName {
    X,
    Alpha,
    Nu,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleName {
    Linear,
    Log,
}

#[derive(Args)]
struct ShiftArgs {
    /// Shift amplitude α in d → d ± α/Λ
    #[arg(long)]
    alpha: f64,
    /// UV scale x = dΛ
    #[arg(long)]
    x: f64,
    #[arg(long, value_enum, default_value_t = SignName::Plus)]
    sign: SignName,
    /// Series truncation order (≤ 3)
    #[arg(long, default_value_t = 3)]
    order: u32,
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        // Domain and unsupported-combination errors are argument problems;
        // everything else is a numeric failure.
        let code = match e {
            Error::Domain(_) | Error::Unsupported(_) => 2,
            _ => 1,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            message: e.to_string(),
            code: 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Pressure(args) => cmd_pressure(args),
        Command::Fig2(args) => cmd_fig2(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Bose { n } => {
            let value = bose_integral(n)?;
            let closed = bose_integral_closed(n)?;
            println!("bose({n}) = {value:.8e} (closed form {closed:.8e})");
            Ok(())
        }
        Command::Window { tol } => {
            let w = find_repulsive_window(tol)?;
            println!(
                "alpha_low = {:.8e}\nalpha_high = {:.8e}\nbracket_tol = {:.1e}",
                w.alpha_low, w.alpha_high, w.bracket_tol
            );
            Ok(())
        }
        Command::Shift(args) => {
            let sign = match args.sign {
                SignName::Plus => Sign::Plus,
                SignName::Minus => Sign::Minus,
            };
            let f = shifted_distance_factor(args.alpha, args.x, sign, args.order)?;
            println!(
                "exact = {:.8e}\nseries (order {}) = {:.8e}\nresidual = {:.2e}",
                f.exact,
                args.order,
                f.series,
                (f.exact - f.series).abs()
            );
            Ok(())
        }
    }
}

// --kappa and --alpha are interchangeable via α = πκ; when both appear the
// one given last wins, with a warning.
fn resolve_kappa(kappa: Option<f64>, alpha: Option<f64>) -> f64 {
    match (kappa, alpha) {
        (None, None) => 0.0,
        (Some(k), None) => k,
        (None, Some(a)) => a / PI,
        (Some(k), Some(a)) => {
            let alpha_last = std::env::args()
                .rposition(|s| s == "--alpha" || s.starts_with("--alpha="))
                > std::env::args().rposition(|s| s == "--kappa" || s.starts_with("--kappa="));
            eprintln!(
                "warning: both --kappa and --alpha given; using {}",
                if alpha_last { "--alpha" } else { "--kappa" }
            );
            if alpha_last {
                a / PI
            } else {
                k
            }
        }
    }
}

fn check_combination(cutoff: Cutoff, method: PressureMethod, kappa: f64) -> Result<(), Failure> {
    let ok = match method {
        PressureMethod::Direct => cutoff != Cutoff::None,
        PressureMethod::EulerMaclaurin => {
            matches!(
                cutoff,
                Cutoff::Exponential | Cutoff::PowerExponential { .. }
            ) && kappa == 0.0
        }
        PressureMethod::AbelPlana => cutoff != Cutoff::TanhHard || kappa == 0.0,
        PressureMethod::ClosedForm => matches!(cutoff, Cutoff::Exponential | Cutoff::None),
    };
    if ok {
        Ok(())
    } else {
        Err(Failure::usage(format!(
            "method `{method}` is not defined for cutoff `{cutoff}`{}",
            if kappa != 0.0 { " with kappa != 0" } else { "" }
        )))
    }
}

fn cmd_pressure(args: PressureArgs) -> Result<(), Failure> {
    let cutoff = Cutoff::from(args.cutoff);
    let method = PressureMethod::from(args.method);
    let kappa = resolve_kappa(args.kappa, args.alpha);
    check_combination(cutoff, method, kappa)?;
    let params = ReducedParams::with(args.x, kappa, args.nu)?;
    let p = reduced_pressure(cutoff, &params, method)?;
    match args.format {
        FormatName::Text => println!(
            "reduced_pressure = {:.8e} (method = {}, abs_error = {:.2e})",
            p.reduced_pressure, p.method, p.abs_error
        ),
        FormatName::Csv => {
            print!(
                "reduced_pressure,method,abs_error\n{:.8e},{},{:.2e}\n",
                p.reduced_pressure, p.method, p.abs_error
            );
        }
    }
    Ok(())
}

// Writes through a sibling temp file and renames, so concurrent invocations
// never interleave partial output.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)
}

fn cmd_fig2(args: Fig2Args) -> Result<(), Failure> {
    let rows = fig2_rows(args.alpha_max, args.points)?;
    write_atomic(&args.out_csv, &fig2_csv(&rows))?;
    println!("wrote {} ({} rows)", args.out_csv.display(), rows.len());
    if let Some(svg_path) = &args.out_svg {
        write_atomic(svg_path, &fig2_svg(&rows))?;
        println!("wrote {}", svg_path.display());
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), Failure> {
    let cutoff = Cutoff::from(args.cutoff);
    let variable = match args.variable {
        VariableName::X => SweepVariable::X,
        VariableName::Alpha => SweepVariable::Alpha,
        VariableName::Nu => SweepVariable::Nu,
    };
    let grid = SweepGrid {
        variable,
        start: args.start,
        stop: args.stop,
        points: args.points,
        scale: match args.scale {
            ScaleName::Linear => SweepScale::Linear,
            ScaleName::Log => SweepScale::Log,
        },
    };
    let method = args
        .method
        .map(PressureMethod::from)
        .unwrap_or(match cutoff {
            Cutoff::TanhHard => PressureMethod::AbelPlana,
            Cutoff::None => PressureMethod::ClosedForm,
            _ => PressureMethod::Direct,
        });
    let kappa = resolve_kappa(args.kappa, args.alpha);
    let base = ReducedParams::with(args.x, kappa, args.nu)?;
    let threads = if args.threads == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        args.threads
    };

    let rows = run_sweep(&grid, cutoff, &base, method, threads)?;
    write_atomic(&args.out, &sweep_csv(variable, &rows))?;
    let failures = rows.iter().filter(|r| r.pressure.is_err()).count();
    println!(
        "wrote {} ({} rows, {} failed)",
        args.out.display(),
        rows.len(),
        failures
    );
    if failures > 0 {
        return Err(Failure {
            message: format!("{failures} sweep point(s) failed"),
            code: 1,
        });
    }
    Ok(())
}

fn cmd_verify(suite: SuiteName) -> Result<(), Failure> {
    let checks = match suite {
        SuiteName::Coefficients => verify::suite_coefficients(),
        SuiteName::Roots => verify::suite_roots(),
        SuiteName::Suppression => verify::suite_suppression(),
        SuiteName::CrossMethod => verify::suite_cross_method(),
        SuiteName::All => verify::suite_all(),
    }
    .map_err(|e| Failure {
        message: e.to_string(),
        code: 1,
    })?;

    let mut failed = 0;
    for check in &checks {
        println!("{check}");
        if !check.pass {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", checks.len(), failed);
    if failed > 0 {
        return Err(Failure {
            message: format!("{failed} verification check(s) failed"),
            code: 1,
        });
    }
    Ok(())
}
