//! Command-line front end: verification suites, the moduli metric, the
//! Chern–Simons functional along the dyonic path, and the equivariant
//! index polynomial.
//!
//! Exit codes: 0 when every reported check passes, 1 on numeric failure
//! or non-convergence, 2 on usage errors. Reports render as text, JSON,
//! or CSV (`--format`), optionally into a file (`--out`). The worker
//! count for quadrature comes from `HYPERMONO_THREADS` (0 or unset means
//! all cores); results are bitwise independent of it.

mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use hypermono::integrate::{
    chern_simons, cs_rate, equivariant_index, gram_matrix, GramMatrices, QuadratureError,
    QuadratureSpec,
};
use hypermono::monopole::{DyonGauge, Monopole};
use hypermono::verify::{self, SuiteParams};
use report::{ConvergenceEntry, Format, ResultEntry, RunReport, ValueRepr};

#[derive(Parser)]
#[command(
    name = "hypermono",
    version,
    about = "Hyperbolic monopole fields, moduli pairings, and their invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Algebra,
    Geometry,
    Monopole,
    Deformations,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Run residual and identity check suites at seeded random points.
    Verify {
        /// Which suite to run.
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Base finite-difference step.
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
        /// Sample points per finite-difference check.
        #[arg(long, default_value_t = 10)]
        points: usize,
        /// Seed of the sample-point generator.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Gram matrix of the four symmetry tangent vectors, with a
    /// convergence ladder.
    Metric {
        /// Configuration centre, x.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        x0: f64,
        /// Configuration centre, y.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        y0: f64,
        /// Configuration scale (must be positive).
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        lambda: f64,
        /// Quadrature nodes per axis at the finest rung.
        #[arg(long, default_value_t = 64)]
        nodes: usize,
        /// Relative convergence tolerance.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Chern–Simons functional between the monopole and its dyonic
    /// transform.
    Cs {
        /// Path parameter of the dyonic transformation.
        #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
        s: f64,
        /// Quadrature nodes per axis.
        #[arg(long, default_value_t = 40)]
        nodes: usize,
        /// Relative tolerance for the reported comparisons.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Equivariant index polynomial for charge n and doubled boundary
    /// weight p2.
    Index {
        /// Magnetic charge (positive integer).
        #[arg(long)]
        n: i64,
        /// Doubled boundary weight 2p (positive integer).
        #[arg(long)]
        p2: i64,
    },
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<QuadratureError> for Failure {
    fn from(e: QuadratureError) -> Failure {
        Failure::Numeric(e.to_string())
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli.command) {
        Ok(mut report) => {
            report.wall_time_seconds = started.elapsed().as_secs_f64();
            let rendered = report.render(cli.format);
            if let Some(path) = cli.out {
                if let Err(e) = std::fs::write(&path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return std::process::ExitCode::from(1);
                }
            } else {
                print!("{rendered}");
            }
            if report.all_pass() {
                std::process::ExitCode::SUCCESS
            } else {
                std::process::ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::ExitCode::from(2)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            std::process::ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<RunReport, Failure> {
    match command {
        Command::Verify {
            suite,
            h,
            points,
            seed,
        } => cmd_verify(suite, h, points, seed),
        Command::Metric {
            x0,
            y0,
            lambda,
            nodes,
            tol,
        } => cmd_metric(x0, y0, lambda, nodes, tol),
        Command::Cs { s, nodes, tol } => cmd_cs(s, nodes, tol),
        Command::Index { n, p2 } => cmd_index(n, p2),
    }
}

fn cmd_verify(suite: SuiteArg, h: f64, points: usize, seed: u64) -> Result<RunReport, Failure> {
    if !h.is_finite() || h <= 0.0 {
        return Err(Failure::Usage(format!("--h must be positive, got {h}")));
    }
    if points == 0 {
        return Err(Failure::Usage("--points must be at least 1".to_string()));
    }
    let params = SuiteParams { h, points, seed };
    let suites: Vec<(&str, Vec<verify::CheckResult>)> = match suite {
        SuiteArg::All => verify::all_suites(&params),
        SuiteArg::Algebra => vec![("algebra", verify::suite_algebra(&params))],
        SuiteArg::Geometry => vec![("geometry", verify::suite_geometry(&params))],
        SuiteArg::Monopole => vec![("monopole", verify::suite_monopole(&params))],
        SuiteArg::Deformations => vec![("deformations", verify::suite_deformations(&params))],
    };

    let mut report = RunReport::new("verify");
    report.set_parameter("suite", format!("{suite:?}").to_lowercase());
    report.set_parameter("h", h);
    report.set_parameter("points", points);
    report.set_parameter("seed", seed);
    for (name, checks) in suites {
        for c in checks {
            report.results.push(ResultEntry::bound(
                &format!("{name}/{}", c.name),
                c.value,
                c.tolerance,
                c.pass,
            ));
        }
    }
    Ok(report)
}

fn cmd_metric(x0: f64, y0: f64, lambda: f64, nodes: usize, tol: f64) -> Result<RunReport, Failure> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Failure::Usage(format!(
            "--lambda must be positive, got {lambda}"
        )));
    }
    if nodes < 8 {
        return Err(Failure::Usage(format!(
            "--nodes must be at least 8 (the ladder starts at a quarter of it), got {nodes}"
        )));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
    }
    let cfg = Monopole::new(x0, y0, lambda);
    let base = QuadratureSpec::for_monopole(&cfg, nodes);
    let expected = cfg.expected_energy(); // the analytic diagonal value

    let mut report = RunReport::new("metric");
    report.set_parameter("x0", x0);
    report.set_parameter("y0", y0);
    report.set_parameter("lambda", lambda);
    report.set_parameter("nodes", nodes);
    report.set_parameter("tol", tol);

    let rungs = [nodes / 4, nodes / 2, nodes];
    let mut history: Vec<(usize, GramMatrices)> = Vec::new();
    for &n in &rungs {
        let g = gram_matrix(&cfg, &base.with_nodes(n))?;
        let mean_diag = (0..4).map(|i| g.direct[i][i].re).sum::<f64>() / 4.0;
        report.convergence.push(ConvergenceEntry {
            n,
            value: mean_diag,
        });
        history.push((n, g));
    }
    let g = &history.last().expect("ladder is nonempty").1;
    let rel = gram_rel_change(&history[history.len() - 2].1, g);

    for mu in 0..4 {
        for nu in 0..4 {
            let v = g.direct[mu][nu];
            let (target, row_tol) = if mu == nu {
                (expected, tol)
            } else {
                (0.0, tol * expected)
            };
            report.results.push(ResultEntry::compared(
                &format!("gram-{mu}{nu}"),
                ValueRepr::complex(v.re, v.im),
                ValueRepr::Real(target),
                row_tol,
            ));
        }
    }
    let dev = g.max_deviation_from(expected);
    report.results.push(ResultEntry::bound(
        "max-deviation-from-identity",
        dev,
        tol * expected,
        dev <= tol * expected,
    ));
    let max_imag = (0..4)
        .flat_map(|mu| (0..4).map(move |nu| (mu, nu)))
        .map(|(mu, nu)| g.direct[mu][nu].im.abs())
        .fold(0.0f64, f64::max);
    report.results.push(ResultEntry::bound(
        "max-imaginary-part",
        max_imag,
        tol * expected,
        max_imag <= tol * expected,
    ));
    let gap = g.route_disagreement();
    report.results.push(ResultEntry::bound(
        "route-agreement",
        gap,
        2.0 * tol * expected,
        gap <= 2.0 * tol * expected,
    ));
    report.results.push(ResultEntry::bound(
        "quadrature-converged",
        rel,
        tol,
        rel <= tol,
    ));
    Ok(report)
}

/// Entrywise relative change between two Gram computations.
fn gram_rel_change(a: &GramMatrices, b: &GramMatrices) -> f64 {
    let mut diff: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            diff = diff.max((a.direct[mu][nu] - b.direct[mu][nu]).norm());
            scale = scale.max(b.direct[mu][nu].norm());
        }
    }
    diff / scale.max(1e-300)
}

fn cmd_cs(s: f64, nodes: usize, tol: f64) -> Result<RunReport, Failure> {
    if nodes < 2 {
        return Err(Failure::Usage(format!(
            "--nodes must be at least 2, got {nodes}"
        )));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
    }
    let cfg = Monopole::unit();
    let spec = QuadratureSpec::for_monopole(&cfg, nodes);
    let dyon = DyonGauge::new(&cfg, s);

    let mut report = RunReport::new("cs");
    report.set_parameter("s", s);
    report.set_parameter("nodes", nodes);
    report.set_parameter("tol", tol);

    // Both references descend from the boundary data 2·charge·mass at
    // runtime; nothing is hard-coded.
    let level = 2.0 * std::f64::consts::PI * f64::from(cfg.charge()) * cfg.mass();
    let cs = chern_simons(&cfg, &dyon, &spec)?;
    report.results.push(ResultEntry::compared(
        "chern-simons",
        ValueRepr::Real(cs.total),
        ValueRepr::Real(-2.0 * level * s),
        5.0 * tol,
    ));
    let rate = cs_rate(&cfg, &spec)?;
    report.results.push(ResultEntry::compared(
        "cs-rate",
        ValueRepr::Real(rate),
        ValueRepr::Real(-2.0 * level),
        tol,
    ));
    let spread = cs.boundary_extrapolation_spread() / cs.total.abs().max(1.0);
    report.results.push(ResultEntry::bound(
        "boundary-extrapolation-consistent",
        spread,
        tol,
        spread <= tol,
    ));
    Ok(report)
}

fn cmd_index(n: i64, p2: i64) -> Result<RunReport, Failure> {
    let poly = equivariant_index(n, p2).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut report = RunReport::new("index");
    report.set_parameter("n", n);
    report.set_parameter("p2", p2);
    report.set_parameter("polynomial", poly.to_string());

    let dim = 2 * n as u64;
    report.results.push(ResultEntry::compared(
        "dim-e-plus",
        ValueRepr::Real(poly.dim_plus() as f64),
        ValueRepr::Real(dim as f64),
        0.0,
    ));
    report.results.push(ResultEntry::compared(
        "dim-e-minus",
        ValueRepr::Real(poly.dim_minus() as f64),
        ValueRepr::Real(dim as f64),
        0.0,
    ));
    report.results.push(ResultEntry::compared(
        "term-count",
        ValueRepr::Real(poly.term_count() as f64),
        ValueRepr::Real(2.0 * p2 as f64),
        0.0,
    ));
    let palindromy_defect = poly
        .coeffs
        .keys()
        .filter(|&&k| poly.coeff(k) != poly.coeff(-k))
        .count();
    report.results.push(ResultEntry::compared(
        "palindromy-defect",
        ValueRepr::Real(palindromy_defect as f64),
        ValueRepr::Real(0.0),
        0.0,
    ));
    let uniformity_defect = poly.coeffs.values().filter(|&&v| v != dim).count();
    report.results.push(ResultEntry::compared(
        "coefficient-uniformity-defect",
        ValueRepr::Real(uniformity_defect as f64),
        ValueRepr::Real(0.0),
        0.0,
    ));
    Ok(report)
}
