//! Command-line front end: compute the lattice/circle-subset correspondence,
//! reduce bases, enumerate generator triangles, emit sphere curves as point
//! clouds, certify knots, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification or expectation failure, 2 usage or
//! input error.

mod io;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lattice_exp3::circle::DEFAULT_DEDUP_TOL;
use lattice_exp3::curves;
use lattice_exp3::knot::{certify, TrefoilVerdict};
use lattice_exp3::lattice::{enumerate_generator_triangles, gauss_reduce};
use lattice_exp3::phi::{phi_inverse, phi_with_tol, CompactifiedLattice};
use lattice_exp3::verify::{run_all, run_suite, Suite, SuiteReport};
use lattice_exp3::{Basis, CircleSubset};

/// Chirality convention used in every certificate this tool prints.
const CHIRALITY_CONVENTION: &str =
    "right-handed = Jones polynomial supported on negative exponents";

#[derive(Parser)]
#[command(
    name = "lattice-exp3",
    about = "Plane lattices, subsets of the circle of lines, and trefoil certification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a lattice basis to its subset of circle lines (radians in [0, pi))
    Phi(BasisArgs),
    /// Map 1-3 circle angles back to a lattice (or a degenerate direction)
    PhiInv(AnglesArgs),
    /// Gauss-Lagrange reduce a basis to canonical form
    Reduce(BasisArgs),
    /// Enumerate the origin-anchored generator triangles of a lattice
    Triangles(BasisArgs),
    /// Emit a closed trefoil curve in space (push-off of the diagonal, or
    /// the analytic torus curve)
    TrefoilCurve(TrefoilCurveArgs),
    /// Read a closed polyline and certify its knot type via the Jones
    /// polynomial
    Certify(CertifyArgs),
    /// Run verification suites with seeded generators
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BasisArgs {
    /// Basis as four comma-separated reals: ux,uy,vx,vy
    #[arg(long, value_name = "UX,UY,VX,VY")]
    basis: String,
}

#[derive(Args)]
struct AnglesArgs {
    /// One to three angles in radians, comma-separated
    #[arg(long, value_name = "A[,B[,C]]")]
    angles: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveKind {
    /// Push-off of the diagonal circle through the inverse map and the chart
    Delta,
    /// Analytic parametrization of the discriminant torus curve
    Torus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Obj,
}

#[derive(Args)]
struct TrefoilCurveArgs {
    /// Number of samples along the curve (at least 8)
    #[arg(long, default_value_t = 720)]
    samples: usize,
    /// Push-off half-width in radians, 0 < delta < pi/6
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    /// Which curve to emit
    #[arg(long, value_enum, default_value_t = CurveKind::Delta)]
    curve: CurveKind,
    /// Output file path
    #[arg(long)]
    out: std::path::PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct CertifyArgs {
    /// Input polyline file (csv, json, or obj; detected from the extension)
    #[arg(long = "in", value_name = "PATH")]
    input: std::path::PathBuf,
    /// Seed for the projection direction search
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fail (exit 1) unless the verdict matches
    #[arg(long, value_name = "trefoil|right-trefoil|left-trefoil|unknot")]
    expect: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: well-definedness, invariance, roundtrip, cardinality,
    /// continuity, eisenstein, knot, or all
    #[arg(long)]
    suite: String,
    /// Generator seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Samples per randomized check (heavy checks cap themselves)
    #[arg(long, default_value_t = 1000)]
    n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Inner error type: strings reported on stderr with exit code 2.
type CmdResult = Result<ExitCode, String>;

fn dedup_tol() -> Result<f64, String> {
    match std::env::var("LATTICE_EXP3_TOL") {
        Ok(raw) => {
            let tol: f64 = raw
                .parse()
                .map_err(|_| format!("LATTICE_EXP3_TOL is not a number: {raw:?}"))?;
            if tol.is_finite() && tol >= 0.0 {
                Ok(tol)
            } else {
                Err(format!("LATTICE_EXP3_TOL out of range: {raw:?}"))
            }
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_DEDUP_TOL),
        Err(e) => Err(format!("LATTICE_EXP3_TOL unreadable: {e}")),
    }
}

fn parse_basis(raw: &str) -> Result<Basis, String> {
    let parts: Vec<f64> = raw
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("basis must be four comma-separated reals, got {raw:?}"))?;
    if parts.len() != 4 {
        return Err(format!(
            "basis must be four comma-separated reals, got {} values",
            parts.len()
        ));
    }
    Basis::from_coords(parts[0], parts[1], parts[2], parts[3]).map_err(|e| e.to_string())
}

fn parse_angles(raw: &str, tol: f64) -> Result<CircleSubset, String> {
    let parts: Vec<f64> = raw
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("angles must be comma-separated reals, got {raw:?}"))?;
    CircleSubset::from_angles(&parts, tol).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Phi(args) => {
            let tol = dedup_tol()?;
            let basis = parse_basis(&args.basis)?;
            let subset = phi_with_tol(&CompactifiedLattice::NonDegenerate(basis), tol)
                .map_err(|e| e.to_string())?;
            println!("{}", output::subset_json(&subset));
            Ok(ExitCode::SUCCESS)
        }
        Command::PhiInv(args) => {
            let tol = dedup_tol()?;
            let subset = parse_angles(&args.angles, tol)?;
            let lattice = phi_inverse(&subset).map_err(|e| e.to_string())?;
            println!("{}", output::lattice_json(&lattice));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce(args) => {
            let basis = parse_basis(&args.basis)?;
            let reduced = gauss_reduce(&basis).map_err(|e| e.to_string())?;
            println!("{}", output::basis_json(&reduced.as_basis()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Triangles(args) => {
            let basis = parse_basis(&args.basis)?;
            let triangles = enumerate_generator_triangles(&basis).map_err(|e| e.to_string())?;
            println!("{}", output::triangles_json(&triangles));
            Ok(ExitCode::SUCCESS)
        }
        Command::TrefoilCurve(args) => cmd_trefoil_curve(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_trefoil_curve(args: TrefoilCurveArgs) -> CmdResult {
    let tol = dedup_tol()?;
    if args.samples < 8 {
        return Err("samples must be at least 8".into());
    }
    if !(args.delta > 0.0 && args.delta < std::f64::consts::FRAC_PI_6) {
        return Err("delta must satisfy 0 < delta < pi/6".into());
    }
    let sphere_curve = match args.curve {
        CurveKind::Delta => curves::pushed_off_curve(args.samples, args.delta, tol),
        CurveKind::Torus => curves::torus_curve(args.samples),
    }
    .map_err(|e| e.to_string())?;

    let pole = match curves::select_pole(&sphere_curve) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: pole selection failed: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let line = curves::stereographic_polyline(&sphere_curve, &pole).map_err(|e| e.to_string())?;

    let body = match args.format {
        Format::Csv => io::polyline_to_csv(&line),
        Format::Json => io::polyline_to_json(&line),
        Format::Obj => io::polyline_to_obj(&line),
    };
    std::fs::write(&args.out, body)
        .map_err(|e| format!("cannot write {}: {e}", args.out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(args: CertifyArgs) -> CmdResult {
    let line = io::read_polyline(&args.input)?;
    let cert = certify(&line, args.seed).map_err(|e| e.to_string())?;
    println!("{}", output::certificate_json(&cert, CHIRALITY_CONVENTION));

    if let Some(expect) = args.expect {
        let ok = match expect.as_str() {
            "trefoil" => matches!(
                cert.verdict,
                TrefoilVerdict::RightTrefoil | TrefoilVerdict::LeftTrefoil
            ),
            "right-trefoil" => cert.verdict == TrefoilVerdict::RightTrefoil,
            "left-trefoil" => cert.verdict == TrefoilVerdict::LeftTrefoil,
            "unknot" => cert.verdict == TrefoilVerdict::Unknot,
            other => return Err(format!("unknown expectation {other:?}")),
        };
        if !ok {
            eprintln!("expectation {expect:?} not met: verdict {}", cert.verdict);
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let reports: Vec<SuiteReport> = if args.suite == "all" {
        run_all(args.seed, args.n).map_err(|e| e.to_string())?
    } else {
        let suite = Suite::from_name(&args.suite)
            .ok_or_else(|| format!("unknown suite {:?}", args.suite))?;
        vec![run_suite(suite, args.seed, args.n).map_err(|e| e.to_string())?]
    };
    let all_pass = reports.iter().all(|r| r.passed());
    println!("{}", output::verify_json(&reports, args.seed, args.n));
    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
