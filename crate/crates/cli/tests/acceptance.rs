//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use geodesic_two_center::decision::Decider;
use geodesic_two_center::disk::disks_intersection;
use geodesic_two_center::driver::{candidate_pairs, two_center_in, TwoCenterSolution};
use geodesic_two_center::geodesic::geodesic_distance;
use geodesic_two_center::hull::{geodesic_hull, ChainPair};
use geodesic_two_center::instances::{random_polygon, sample_points, Family};
use geodesic_two_center::one_center::one_center;
use geodesic_two_center::oracle::{oracle_distance, oracle_one_center, oracle_two_center, OracleConfig};
use geodesic_two_center::{Point2, TriangulatedPolygon};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FAMILIES: [Family; 4] = [Family::Convex, Family::Star, Family::Comb, Family::Random];

type Outcome = Result<String, String>;

fn instance(seed: u64, n: usize, m: usize) -> (TriangulatedPolygon, Vec<Point2>, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let family = FAMILIES[(seed % 4) as usize];
    let tp = TriangulatedPolygon::from_vertices(random_polygon(family, n, &mut rng).unwrap()).unwrap();
    let pts = sample_points(&tp, m, &mut rng);
    (tp, pts, rng)
}

fn scale(tp: &TriangulatedPolygon) -> f64 {
    tp.polygon().diameter().max(1.0)
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn distances() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for q in 0..200u64 {
        let n = 3 + (q as usize * 7) % 38;
        let (tp, pts, _) = instance(1000 + q, n, 2);
        let (s, t) = (pts[0], pts[1]);
        let fast = geodesic_distance(&tp, s, t).map_err(|e| e.to_string())?;
        let slow = oracle_distance(tp.polygon(), s, t).map_err(|e| e.to_string())?;
        let err = if fast.max(slow) <= 1e-12 * scale(&tp) { 0.0 } else { rel_err(fast, slow) };
        worst = worst.max(err);
        check(err <= 1e-9, || format!("query {q}: funnel {fast} vs oracle {slow}"))?;
    }
    let took = start.elapsed();
    check(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("200 queries, worst relative error {worst:.2e}, {took:.2?}"))
}

/// Crossings of the geodesic circles of radius `r` around `site` and
/// `other`: sign changes of `d(other, x) - r` between consecutive samples on
/// the circular arcs of the disk of `site`. Changes across a polygon-boundary
/// piece of the disk are where the other circle meets the polygon, not the
/// first circle, and are returned separately.
fn crossings(tp: &TriangulatedPolygon, site: Point2, other: Point2, r: f64) -> Result<(usize, usize), String> {
    let b = disks_intersection(tp, &[site], r).map_err(|e| e.to_string())?.ok_or("empty disk")?;
    let n = ((b.length() / (1e-3 * tp.polygon().diameter())).ceil() as usize).max(16);
    let eps = 1e-9 * scale(tp);
    // (sign, on an arc) for every sample off the other circle.
    let mut signs = Vec::with_capacity(n);
    let mut off_arc = false;
    for i in 0..n {
        let pos = b.position_at(b.length() * i as f64 / n as f64);
        if b.elements[pos.element].as_arc().is_none() {
            off_arc = true;
            continue;
        }
        let v = geodesic_distance(tp, other, b.point(pos)).map_err(|e| e.to_string())? - r;
        if v.abs() > eps {
            signs.push((v > 0.0, !std::mem::take(&mut off_arc)));
        }
    }
    let (mut on, mut across) = (0, 0);
    for i in 0..signs.len() {
        let next = signs[(i + 1) % signs.len()];
        if signs[i].0 != next.0 {
            if next.1 {
                on += 1;
            } else {
                across += 1;
            }
        }
    }
    Ok((on, across))
}

fn pseudo_disks() -> Outcome {
    let (mut most, mut at_polygon) = (0, 0);
    for q in 0..50u64 {
        let (tp, pts, mut rng) = instance(2000 + q, 4 + (q as usize) % 27, 2);
        let r = rng.gen_range(0.05..0.6) * tp.polygon().diameter();
        for (a, b) in [(pts[0], pts[1]), (pts[1], pts[0])] {
            let (c, across) = crossings(&tp, a, b, r)?;
            most = most.max(c);
            at_polygon += across;
            check(c <= 2, || format!("pair {q}: {c} crossings at radius {r}"))?;
        }
    }
    Ok(format!("50 pairs, at most {most} crossings ({at_polygon} sign changes across polygon edges)"))
}

fn one_centers() -> Outcome {
    let mut worst = 0.0f64;
    for q in 0..50u64 {
        let (tp, pts, _) = instance(3000 + q, 4 + (q as usize) % 27, 1 + (q as usize) % 10);
        let oc = one_center(&tp, &pts).map_err(|e| e.to_string())?;
        let o = oracle_one_center(tp.polygon(), &pts, &OracleConfig::default()).map_err(|e| e.to_string())?;
        let err = if oc.radius.max(o.radius) <= 1e-9 * scale(&tp) { 0.0 } else { rel_err(oc.radius, o.radius) };
        worst = worst.max(err);
        check(err <= 1e-4, || format!("instance {q}: solver {} vs oracle {}", oc.radius, o.radius))?;
    }
    Ok(format!("50 instances, worst relative error {worst:.2e}"))
}

fn monotonicity() -> Outcome {
    let mut done = 0;
    for q in 0..200u64 {
        if done == 30 {
            break;
        }
        let (tp, pts, mut rng) = instance(4000 + q, 4 + (q as usize) % 17, 3 + (q as usize) % 8);
        let h = geodesic_hull(&tp, &pts).map_err(|e| e.to_string())?;
        if h.k() < 2 {
            continue;
        }
        let i = rng.gen_range(0..h.k());
        let j = (i + rng.gen_range(1..h.k())) % h.k();
        let pair = ChainPair { i, j };
        let d = Decider::new(&h).map_err(|e| e.to_string())?;
        let hull_r = one_center(&tp, &pts).map_err(|e| e.to_string())?.radius;
        let mut seen_feasible = false;
        for f in [0.2, 0.4, 0.6, 0.8, 1.0] {
            let feasible = d.decide(pair, f * hull_r).map_err(|e| e.to_string())?.feasible;
            check(feasible || !seen_feasible, || format!("instance {q}: infeasible at {f}·r after feasible"))?;
            seen_feasible |= feasible;
        }
        done += 1;
    }
    check(done == 30, || format!("only {done} instances with two extremes"))?;
    Ok("30 instances × 5 radii, no inversion".into())
}

fn per_pair() -> Outcome {
    let mut done = 0;
    for q in 0..200u64 {
        if done == 20 {
            break;
        }
        let (tp, pts, _) = instance(5000 + q, 4 + (q as usize) % 17, 3 + (q as usize) % 8);
        let sol = two_center_in(&tp, &pts).map_err(|e| e.to_string())?;
        let Some(pair) = sol.pair else { continue };
        let h = geodesic_hull(&tp, &pts).map_err(|e| e.to_string())?;
        let d = Decider::new(&h).map_err(|e| e.to_string())?;
        let r = sol.radius;
        let above = d.decide(pair.chain_pair(), r + 1e-5).map_err(|e| e.to_string())?.feasible;
        let below = d.decide(pair.chain_pair(), r - 1e-5 * r.max(1.0)).map_err(|e| e.to_string())?.feasible;
        check(above && !below, || format!("instance {q}: r* = {r}, above {above}, below {below}"))?;
        done += 1;
    }
    check(done == 20, || format!("only {done} instances with a pair"))?;
    Ok("20 instances, feasible just above r* and infeasible just below".into())
}

struct Checked {
    tp: TriangulatedPolygon,
    pts: Vec<Point2>,
    sol: TwoCenterSolution,
    oracle: f64,
}

/// The oracle-checked instances, shared by the optimality, coverage and
/// certificate criteria.
fn oracle_instances() -> Result<Vec<Checked>, String> {
    let mut out = Vec::new();
    for q in 0..25u64 {
        let start = Instant::now();
        let (tp, pts, _) = instance(6000 + q, 4 + (q as usize) % 17, 2 + (q as usize) % 9);
        let sol = two_center_in(&tp, &pts).map_err(|e| e.to_string())?;
        let o = oracle_two_center(tp.polygon(), &pts, &OracleConfig::default()).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        check(took < Duration::from_secs(60), || format!("instance {q} took {took:?}"))?;
        out.push(Checked { tp, pts, sol, oracle: o.radius });
    }
    Ok(out)
}

fn optimality(cases: &[Checked]) -> Outcome {
    let mut worst = 0.0f64;
    for (q, c) in cases.iter().enumerate() {
        let err = if c.sol.radius.max(c.oracle) <= 1e-9 * scale(&c.tp) { 0.0 } else { rel_err(c.sol.radius, c.oracle) };
        worst = worst.max(err);
        check(err <= 1e-4, || format!("instance {q}: solver {} vs oracle {}", c.sol.radius, c.oracle))?;
    }
    Ok(format!("25 instances, worst relative error {worst:.2e}"))
}

fn coverage(cases: &[Checked]) -> Outcome {
    let mut most = 0.0f64;
    for (q, c) in cases.iter().enumerate() {
        let h = geodesic_hull(&c.tp, &c.pts).map_err(|e| e.to_string())?;
        if h.k() < 2 {
            continue;
        }
        let cands = candidate_pairs(&h).map_err(|e| e.to_string())?;
        most = most.max(cands.len() as f64 / h.k() as f64);
        check(cands.len() <= 5 * h.k(), || format!("instance {q}: {} candidates for k = {}", cands.len(), h.k()))?;
        let d = Decider::new(&h).map_err(|e| e.to_string())?;
        let mut best = f64::INFINITY;
        for cand in &cands {
            best = best.min(d.exhaustive_optimum(cand.chain_pair()).map_err(|e| e.to_string())?);
        }
        let err = if best.max(c.oracle) <= 1e-9 * scale(&c.tp) { 0.0 } else { rel_err(best, c.oracle) };
        check(err <= 1e-4, || format!("instance {q}: best candidate split {best} vs oracle {}", c.oracle))?;
    }
    Ok(format!("25 instances, an emitted pair reaches the oracle optimum, at most {most:.1}·k candidates"))
}

fn certificate(tp: &TriangulatedPolygon, pts: &[Point2], sol: &TwoCenterSolution) -> Result<(), String> {
    let h = geodesic_hull(tp, pts).map_err(|e| e.to_string())?;
    check(h.contains(sol.c1) && h.contains(sol.c2), || "a center lies outside the hull".into())?;
    let mut worst = 0.0f64;
    for &p in pts {
        let d1 = geodesic_distance(tp, p, sol.c1).map_err(|e| e.to_string())?;
        let d2 = geodesic_distance(tp, p, sol.c2).map_err(|e| e.to_string())?;
        worst = worst.max(d1.min(d2));
    }
    check(worst <= sol.radius * (1.0 + 1e-6) + 1e-9 * scale(tp), || {
        format!("covering radius {worst} exceeds {}", sol.radius)
    })
}

fn l6() -> TriangulatedPolygon {
    let v = [(0.0, 0.0), (4.0, 0.0), (4.0, 2.0), (2.0, 2.0), (2.0, 4.0), (0.0, 4.0)];
    TriangulatedPolygon::from_vertices(v.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
}

fn fixtures_exact() -> Outcome {
    let p = |x, y| Point2::new(x, y);
    let sq4 = TriangulatedPolygon::from_vertices(vec![p(0.0, 0.0), p(4.0, 0.0), p(4.0, 4.0), p(0.0, 4.0)]).unwrap();
    let qsym = two_center_in(&sq4, &[p(1.0, 1.0), p(1.0, 3.0), p(3.0, 3.0), p(3.0, 1.0)]).map_err(|e| e.to_string())?;
    check((qsym.radius - 1.0).abs() <= 1e-6, || format!("QSYM radius {}", qsym.radius))?;
    let arms =
        two_center_in(&l6(), &[p(3.0, 1.0), p(3.0, 1.5), p(1.0, 3.0), p(1.5, 3.0)]).map_err(|e| e.to_string())?;
    check((arms.radius - 0.25).abs() <= 1e-6, || format!("L6 arms radius {}", arms.radius))?;
    // Both points on one side of the pair: the one-center of the two.
    let single = one_center(&l6(), &[p(3.0, 1.0), p(1.0, 3.0)]).map_err(|e| e.to_string())?;
    check((single.radius - 2f64.sqrt()).abs() <= 1e-6, || format!("L6 single cluster radius {}", single.radius))?;
    check(single.center.dist(p(2.0, 2.0)) <= 1e-6, || format!("L6 single cluster center {:?}", single.center))?;
    Ok(format!("QSYM {}, L6 arms {}, L6 single cluster {:.9}", qsym.radius, arms.radius, single.radius))
}

fn certificates(cases: &[Checked]) -> Outcome {
    for (q, c) in cases.iter().enumerate() {
        certificate(&c.tp, &c.pts, &c.sol).map_err(|e| format!("instance {q}: {e}"))?;
    }
    let mut extra = 0;
    for q in 0..25u64 {
        let (tp, pts, _) = instance(9000 + q, 4 + (q as usize) % 37, 10 + (q as usize) % 21);
        let sol = two_center_in(&tp, &pts).map_err(|e| e.to_string())?;
        certificate(&tp, &pts, &sol).map_err(|e| format!("large instance {q}: {e}"))?;
        extra += 1;
    }
    Ok(format!("{} solutions certified with centers in the hull", cases.len() + extra))
}

fn g2c(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2c")).args(args).output().expect("g2c runs")
}

fn cli_determinism() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut solved = 0;
    for f in &files {
        let path = f.to_str().unwrap();
        let (a, b) = (g2c(&["solve", path]), g2c(&["solve", path]));
        check(a.stdout == b.stdout && a.status.code() == b.status.code(), || format!("{path}: runs differ"))?;
        if !a.status.success() {
            continue;
        }
        // The record replays through the renderer's certificate check.
        let sol = tmp.path().join("sol.json");
        std::fs::write(&sol, &a.stdout).map_err(|e| e.to_string())?;
        let svg = tmp.path().join("out.svg");
        let r = g2c(&["render", path, sol.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
        check(r.status.success(), || format!("{path}: replay failed: {}", String::from_utf8_lossy(&r.stderr)))?;
        solved += 1;
    }
    Ok(format!("{} fixtures byte-identical across runs, {solved} solutions replayed", files.len()))
}

fn report(n: usize, name: &str, outcome: Outcome) -> bool {
    match outcome {
        Ok(msg) => {
            println!("criterion {n:>2} PASS  {name}: {msg}");
            true
        }
        Err(msg) => {
            println!("criterion {n:>2} FAIL  {name}: {msg}");
            false
        }
    }
}

fn main() {
    let mut ok = true;
    ok &= report(1, "distance oracle equivalence", distances());
    ok &= report(2, "pseudo-disks", pseudo_disks());
    ok &= report(3, "one-center vs oracle", one_centers());
    ok &= report(4, "decision monotonicity", monotonicity());
    ok &= report(5, "per-pair consistency", per_pair());
    let cases = oracle_instances();
    match &cases {
        Ok(cases) => {
            ok &= report(6, "two-center vs oracle", optimality(cases));
            ok &= report(7, "exact fixtures", fixtures_exact());
            ok &= report(8, "candidate coverage", coverage(cases));
            ok &= report(9, "certificates", certificates(cases));
        }
        Err(e) => {
            ok &= report(6, "two-center vs oracle", Err(e.clone()));
            ok &= report(7, "exact fixtures", fixtures_exact());
            ok &= report(8, "candidate coverage", Err(e.clone()));
            ok &= report(9, "certificates", Err(e.clone()));
        }
    }
    ok &= report(10, "cli determinism", cli_determinism());
    if !ok {
        std::process::exit(1);
    }
}
