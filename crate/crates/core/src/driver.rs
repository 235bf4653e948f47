//! Optimal geodesic two-center of a point set: candidate partition pairs,
//! an assistant interval from shortest-path-map distances, and per-pair
//! optimization.

use crate::decision::{Branch, Decider};
use crate::error::{Error, Result};
use crate::geodesic::{geodesic_distance, spm_vertices};
use crate::geometry::Point2;
use crate::hull::{geodesic_hull, ChainPair, GeodesicHull};
use crate::optimizer::{optimize_pair, RadiusInterval};
use crate::polygon::SimplePolygon;
use crate::triangulation::TriangulatedPolygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Type1,
    Type2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CandidatePair {
    pub i: usize,
    pub j: usize,
    pub kind: PairKind,
}

impl CandidatePair {
    pub fn chain_pair(&self) -> ChainPair {
        ChainPair { i: self.i, j: self.j }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoCenterSolution {
    pub c1: Point2,
    pub c2: Point2,
    pub radius: f64,
    /// `None` when a fast path settled the instance without pairs.
    pub pair: Option<CandidatePair>,
    /// 1 or 2 for each input point.
    pub assignment: Vec<u8>,
    pub stats: SolveStats,
}

/// Bookkeeping for diagnostics.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SolveStats {
    pub extremes: usize,
    pub candidates: usize,
    pub optimized: usize,
    pub interval: Option<(f64, f64)>,
    pub branches: Vec<(Branch, u64)>,
}

/// Solver knobs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    /// Relative slack added to every decision radius (times `max(1, diameter)`).
    pub epsilon: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { epsilon: crate::decision::DECISION_SLACK }
    }
}

impl SolveOptions {
    pub fn validate(&self) -> Result<()> {
        if self.epsilon > 0.0 && self.epsilon <= 1e-3 {
            Ok(())
        } else {
            Err(Error::InvalidConfig(format!("epsilon must lie in (0, 1e-3], got {}", self.epsilon)))
        }
    }
}

/// Radius of the chain of extremes from position `a` clockwise to `b`.
fn rad(d: &Decider, a: usize, b: usize) -> Result<f64> {
    let h = d.hull();
    let idx: Vec<usize> = h.chain_extremes(a, b).into_iter().map(|t| h.extreme_indices()[t]).collect();
    Ok(d.one_center_of(&idx)?.radius)
}

/// Crossing indices of every position `i`, as `(ccw, cw)`:
/// `ccw` is the first `j` clockwise from `i` with `rad(j, i) <= rad(i, j)`,
/// `cw` the last with `rad(i, j) <= rad(j, i)`. Both predicates are
/// monotone along the hull, and unlike the set of balanced minimizers they
/// stay well behaved when radii tie.
fn crossings(d: &Decider) -> Result<Vec<(usize, usize)>> {
    let k = d.hull().k();
    let tol = 1e-9 * d.scale();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let (mut ccw, mut cw) = (None, (i + 1) % k);
        for step in 1..k {
            let j = (i + step) % k;
            let (inner, outer) = (rad(d, i, j)?, rad(d, j, i)?);
            if ccw.is_none() && outer <= inner + tol {
                ccw = Some(j);
            }
            if inner <= outer + tol {
                cw = j;
            }
        }
        out.push((ccw.unwrap_or((i + k - 1) % k), cw));
    }
    Ok(out)
}

/// Candidate partition pairs: one of them is an optimal pair, and there are
/// at most `5k` of them.
pub fn candidate_pairs(h: &GeodesicHull) -> Result<Vec<CandidatePair>> {
    candidates_with(&Decider::new(h)?)
}

fn candidates_with(d: &Decider) -> Result<Vec<CandidatePair>> {
    let k = d.hull().k();
    if k < 2 {
        return Err(Error::DegenerateHull(k));
    }
    if k == 2 {
        return Ok(vec![
            CandidatePair { i: 0, j: 1, kind: PairKind::Type1 },
            CandidatePair { i: 1, j: 0, kind: PairKind::Type1 },
        ]);
    }
    let cross = crossings(d)?;
    let offset = |from: usize, to: usize| (to + k - from) % k;
    let mut out: Vec<CandidatePair> = Vec::new();
    let push = |i: usize, j: usize, kind: PairKind, out: &mut Vec<CandidatePair>| {
        if i != j && !out.iter().any(|c| c.i == i && c.j == j) {
            out.push(CandidatePair { i, j, kind });
        }
    };
    for i in 0..k {
        let a = cross[i].0;
        let b = cross[(i + 1) % k].1;
        for j in [a, b, (a + k - 1) % k, (b + k - 1) % k] {
            push(i, j, PairKind::Type1, &mut out);
        }
        if offset(i, a) < offset(i, b) {
            // Both v_j and v_{j+1} strictly inside C(a, b).
            let mut j = (a + 1) % k;
            while offset(a, j) + 1 < offset(a, b) {
                push(i, j, PairKind::Type2, &mut out);
                j = (j + 1) % k;
            }
        }
    }
    Ok(out)
}

/// Weighted median of the medians of nonempty lists.
fn median_of_medians(lists: &[Vec<f64>]) -> Option<f64> {
    let mut meds: Vec<(f64, usize)> =
        lists.iter().filter(|l| !l.is_empty()).map(|l| (l[l.len() / 2], l.len())).collect();
    if meds.is_empty() {
        return None;
    }
    meds.sort_by(|a, b| a.0.total_cmp(&b.0));
    let total: usize = meds.iter().map(|m| m.1).sum();
    let mut acc = 0;
    for (v, w) in meds {
        acc += w;
        if 2 * acc >= total {
            return Some(v);
        }
    }
    unreachable!()
}

/// Interval `(r_L, r_U]` containing the optimum and no shortest-path-map
/// vertex distance of any point strictly inside.
pub fn assistant_interval(d: &Decider, candidates: &[CandidatePair]) -> Result<RadiusInterval> {
    if candidates.is_empty() {
        return Err(Error::DegenerateHull(d.hull().k()));
    }
    let h = d.hull();
    let tp = h.ambient();
    let mut lists = Vec::with_capacity(h.points().len());
    for &q in h.points() {
        let mut l: Vec<f64> = spm_vertices(tp, q)?.into_iter().map(|v| v.distance).collect();
        l.sort_by(f64::total_cmp);
        lists.push(l);
    }
    let feasible = |r: f64| -> Result<bool> {
        for c in candidates {
            if d.decide(c.chain_pair(), r)?.feasible {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let mut hi = d.one_center_of(h.extreme_indices())?.radius;
    let mut lo = -d.slack();
    loop {
        for l in lists.iter_mut() {
            l.retain(|&x| lo < x && x < hi);
        }
        let Some(med) = median_of_medians(&lists) else { break };
        if feasible(med)? {
            hi = med;
        } else {
            lo = med;
        }
    }
    Ok(RadiusInterval { lo, hi })
}

fn assignment_of(tp: &TriangulatedPolygon, q: &[Point2], c1: Point2, c2: Point2) -> Result<(Vec<u8>, f64)> {
    let mut out = Vec::with_capacity(q.len());
    let mut radius = 0.0f64;
    for &p in q {
        let (d1, d2) = (geodesic_distance(tp, c1, p)?, geodesic_distance(tp, c2, p)?);
        out.push(if d1 <= d2 { 1 } else { 2 });
        radius = radius.max(d1.min(d2));
    }
    Ok((out, radius))
}

/// Optimal geodesic two-center of `q` inside `poly`.
pub fn two_center(poly: &SimplePolygon, q: &[Point2]) -> Result<TwoCenterSolution> {
    let tp = TriangulatedPolygon::new(poly.clone())?;
    two_center_in(&tp, q)
}

/// [`two_center`] for an already triangulated polygon.
pub fn two_center_in(tp: &TriangulatedPolygon, q: &[Point2]) -> Result<TwoCenterSolution> {
    two_center_with(tp, q, &SolveOptions::default())
}

/// [`two_center_in`] with explicit options.
pub fn two_center_with(tp: &TriangulatedPolygon, q: &[Point2], opts: &SolveOptions) -> Result<TwoCenterSolution> {
    opts.validate()?;
    let h = geodesic_hull(tp, q)?;
    let mut stats = SolveStats { extremes: h.k(), ..SolveStats::default() };
    if h.k() < 2 {
        let c = q[0];
        let (assignment, radius) = assignment_of(tp, q, c, c)?;
        return Ok(TwoCenterSolution { c1: c, c2: c, radius, pair: None, assignment, stats });
    }
    let d = Decider::with_slack(&h, opts.epsilon)?;
    let candidates = candidates_with(&d)?;
    stats.candidates = candidates.len();
    let iv = assistant_interval(&d, &candidates)?;
    stats.interval = Some((iv.lo, iv.hi));
    log::info!("{} extremes, {} candidate pairs, interval ({}, {}]", h.k(), candidates.len(), iv.lo, iv.hi);

    // Cheapest-looking pairs first, so that pruning bites early.
    let mut order: Vec<(f64, CandidatePair)> = Vec::with_capacity(candidates.len());
    for &c in &candidates {
        let (s1, s2) = d.sides(c.chain_pair())?;
        order.push((d.one_center_of(&s1)?.radius.max(d.one_center_of(&s2)?.radius), c));
    }
    order.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1.i, a.1.j).cmp(&(b.1.i, b.1.j))));

    let mut best: Option<(f64, CandidatePair, Point2, Point2)> = None;
    for (_, c) in order {
        let hi = best.map_or(iv.hi, |b| b.0.min(iv.hi));
        if best.is_some() && !d.decide(c.chain_pair(), hi)?.feasible {
            continue;
        }
        stats.optimized += 1;
        if let Some(opt) = optimize_pair(&d, c.chain_pair(), RadiusInterval { lo: iv.lo, hi })? {
            if best.is_none_or(|b| opt.radius < b.0) {
                best = Some((opt.radius, c, opt.c1, opt.c2));
            }
        }
    }
    let Some((_, pair, c1, c2)) = best else {
        return Err(Error::InfeasibleInterval { hi: iv.hi });
    };

    // Re-center each disk on the one-center of the points it serves; this
    // keeps the centers inside the hull without growing the radius.
    let (assignment, _) = assignment_of(tp, q, c1, c2)?;
    let group = |t: u8| -> Vec<usize> { (0..q.len()).filter(|&x| assignment[x] == t).collect() };
    let (g1, g2) = (group(1), group(2));
    let c1 = if g1.is_empty() { c1 } else { d.one_center_of(&g1)?.center };
    let c2 = if g2.is_empty() { c2 } else { d.one_center_of(&g2)?.center };
    let (assignment, radius) = assignment_of(tp, q, c1, c2)?;
    stats.branches = d.branch_stats();

    let claimed = best.unwrap().0;
    if radius > claimed * (1.0 + 1e-6) + 2.0 * d.slack() {
        return Err(Error::CertificateFailed { radius: claimed, achieved: radius });
    }
    Ok(TwoCenterSolution { c1, c2, radius, pair: Some(pair), assignment, stats })
}
