//! `g2c`: solve, cross-check, generate and draw geodesic two-center instances.

mod io;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use geodesic_two_center::driver::{two_center_with, SolveOptions};
use geodesic_two_center::instances::{random_polygon, sample_points, Family};
use geodesic_two_center::oracle::{oracle_distance, oracle_two_center, OracleConfig, ORACLE_MAX_POINTS};
use geodesic_two_center::{Error, Point2, SimplePolygon, TriangulatedPolygon};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::io::{emit, read_json, to_json, Instance, SolutionRecord};

/// Relative disagreement tolerated between solver and oracle.
const ORACLE_TOL: f64 = 1e-4;

#[derive(Parser, Debug)]
#[command(name = "g2c", version, about = "Geodesic two-center of points inside a simple polygon")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an instance and print its solution record.
    Solve {
        input: PathBuf,
        /// Relative decision slack, in (0, 1e-3].
        #[arg(long, default_value_t = 1e-9)]
        epsilon: f64,
        /// Cross-check against the exhaustive oracle (at most 12 points).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// convex, star, comb or random.
        #[arg(long, default_value = "random")]
        family: Family,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an instance, and optionally a solution, as SVG.
    Render {
        instance: PathBuf,
        solution: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an instance with the exhaustive oracle only.
    Oracle {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// The solver and the oracle disagree.
#[derive(Debug)]
struct OracleMismatch {
    solver: f64,
    oracle: f64,
}

impl std::fmt::Display for OracleMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "oracle mismatch: solver radius {}, oracle radius {}", self.solver, self.oracle)
    }
}

impl std::error::Error for OracleMismatch {}

fn load(path: &Path) -> Result<(Instance, TriangulatedPolygon, Vec<Point2>)> {
    let inst: Instance = read_json(path)?;
    let poly = SimplePolygon::new(inst.polygon_points())?;
    let tp = TriangulatedPolygon::new(poly)?;
    let q = inst.query_points();
    if q.is_empty() {
        return Err(Error::EmptyPointSet.into());
    }
    for &p in &q {
        if !tp.polygon().contains(p) {
            return Err(Error::PointOutsidePolygon(p).into());
        }
    }
    Ok((inst, tp, q))
}

/// Largest distance from a point to its nearer center.
fn certified_radius(poly: &SimplePolygon, q: &[Point2], c1: Point2, c2: Point2) -> Result<f64> {
    let mut worst = 0.0f64;
    for &p in q {
        worst = worst.max(oracle_distance(poly, p, c1)?.min(oracle_distance(poly, p, c2)?));
    }
    Ok(worst)
}

fn solve(input: &Path, epsilon: f64, oracle: bool, out: Option<&Path>, svg_out: Option<&Path>) -> Result<()> {
    let opts = SolveOptions { epsilon };
    opts.validate()?;
    let (_, tp, q) = load(input)?;
    let start = Instant::now();
    let sol = two_center_with(&tp, &q, &opts)?;
    eprintln!("wall_time_ms: {}", start.elapsed().as_millis());
    let record = SolutionRecord::from_solution(&sol);

    if oracle {
        if q.len() > ORACLE_MAX_POINTS {
            log::warn!("--oracle skipped: {} points exceed the oracle limit of {ORACLE_MAX_POINTS}", q.len());
        } else {
            let o = oracle_two_center(tp.polygon(), &q, &OracleConfig::default())?;
            let tol = ORACLE_TOL * sol.radius.max(o.radius) + tp.eps();
            eprintln!("oracle radius: {}", o.radius);
            if (sol.radius - o.radius).abs() > tol {
                return Err(OracleMismatch { solver: sol.radius, oracle: o.radius }.into());
            }
        }
    }
    emit(&to_json(&record)?, out)?;
    if let Some(p) = svg_out {
        emit(&svg::render(&tp, &q, Some(&record))?, Some(p))?;
    }
    Ok(())
}

fn gen(n: usize, m: usize, seed: u64, family: Family, out: Option<&Path>) -> Result<()> {
    if n < 3 {
        bail!(Error::InvalidConfig(format!("--n must be at least 3, got {n}")));
    }
    if m < 1 {
        bail!(Error::InvalidConfig(format!("--m must be at least 1, got {m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vs = random_polygon(family, n, &mut rng)?;
    let tp = TriangulatedPolygon::from_vertices(vs)?;
    let pts = sample_points(&tp, m, &mut rng);
    let inst = Instance {
        polygon: tp.polygon().vertices().iter().map(|p| [p.x, p.y]).collect(),
        points: pts.iter().map(|p| [p.x, p.y]).collect(),
    };
    emit(&to_json(&inst)?, out)
}

fn render(instance: &Path, solution: Option<&Path>, out: &Path) -> Result<()> {
    let (_, tp, q) = load(instance)?;
    let record: Option<SolutionRecord> = solution.map(read_json).transpose()?;
    if let Some(rec) = &record {
        let (c1, c2) = rec.center_points();
        if rec.assignment.len() != q.len() {
            bail!("solution has {} assignments for {} points", rec.assignment.len(), q.len());
        }
        let achieved = certified_radius(tp.polygon(), &q, c1, c2)?;
        if achieved > rec.radius * (1.0 + 1e-6) + tp.eps() {
            bail!(Error::CertificateFailed { radius: rec.radius, achieved });
        }
    }
    emit(&svg::render(&tp, &q, record.as_ref())?, Some(out))
}

fn run_oracle(input: &Path, out: Option<&Path>) -> Result<()> {
    let (_, tp, q) = load(input)?;
    let o = oracle_two_center(tp.polygon(), &q, &OracleConfig::default())?;
    let record = SolutionRecord {
        radius: o.radius,
        centers: [[o.c1.x, o.c1.y], [o.c2.x, o.c2.y]],
        pair: None,
        assignment: o.assignment,
        branch_stats: Default::default(),
    };
    emit(&to_json(&record)?, out)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<OracleMismatch>().is_some() {
        return 3;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::PointOutsidePolygon(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let res = match &cli.command {
        Command::Solve { input, epsilon, oracle, out, svg } => {
            solve(input, *epsilon, *oracle, out.as_deref(), svg.as_deref())
        }
        Command::Gen { n, m, seed, family, out } => gen(*n, *m, *seed, *family, out.as_deref()),
        Command::Render { instance, solution, out } => render(instance, solution.as_deref(), out),
        Command::Oracle { input, out } => run_oracle(input, out.as_deref()),
    };
    match res.context("g2c failed") {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
