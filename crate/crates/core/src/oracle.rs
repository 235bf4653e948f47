//! Brute-force reference implementations.
//!
//! Nothing here shares code with the funnel, hull or disk machinery: distances
//! come from Dijkstra over the visibility graph, one-centers from grid search
//! with local refinement, and two-centers from exhaustive bipartitions.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::geometry::{on_segment, segments_cross_properly, Point2};
use crate::polygon::{Containment, SimplePolygon};

/// Search parameters for the grid oracles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    /// Grid points per bounding-box side.
    pub grid_resolution: usize,
    /// Each round shrinks the search window around the incumbent by 4x.
    pub refinement_rounds: usize,
    /// Cap on full subset evaluations in the two-center search.
    pub sample_budget: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { grid_resolution: 256, refinement_rounds: 6, sample_budget: usize::MAX }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_resolution < 64 {
            return Err(Error::InvalidConfig(format!(
                "grid_resolution must be at least 64, got {}",
                self.grid_resolution
            )));
        }
        if self.refinement_rounds < 3 {
            return Err(Error::InvalidConfig(format!(
                "refinement_rounds must be at least 3, got {}",
                self.refinement_rounds
            )));
        }
        Ok(())
    }
}

/// `true` when the closed segment `ab` stays inside the closed polygon.
pub fn segment_inside(poly: &SimplePolygon, a: Point2, b: Point2) -> bool {
    if a == b {
        return poly.contains(a);
    }
    if poly.edges().any(|(c, d)| segments_cross_properly(a, b, c, d)) {
        return false;
    }
    // Split at boundary vertices lying on the segment and probe each piece.
    let ab = b - a;
    let len2 = ab.dot(ab);
    let mut ts = vec![0.0, 1.0];
    for &v in poly.vertices() {
        if on_segment(v, a, b) {
            ts.push((v - a).dot(ab) / len2);
        }
    }
    ts.sort_by(f64::total_cmp);
    ts.windows(2).all(|w| w[1] - w[0] <= 0.0 || poly.contains(a.lerp(b, 0.5 * (w[0] + w[1]))))
}

#[derive(PartialEq)]
struct HeapItem(f64, usize);

impl Eq for HeapItem {}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

/// Visibility graph over the polygon vertices.
struct VisibilityGraph<'a> {
    poly: &'a SimplePolygon,
    /// Vertices a path can bend at.
    reflex: Vec<usize>,
    /// `weight[u][v]`: segment length when `u` sees `v`, else infinity.
    weight: Vec<Vec<f64>>,
}

// Dense adjacency matrix: index loops read best here.
#[allow(clippy::needless_range_loop)]
impl<'a> VisibilityGraph<'a> {
    fn new(poly: &'a SimplePolygon) -> Self {
        let n = poly.len();
        let mut weight = vec![vec![f64::INFINITY; n]; n];
        for u in 0..n {
            weight[u][u] = 0.0;
            for v in (u + 1)..n {
                let (a, b) = (poly.vertex(u), poly.vertex(v));
                if segment_inside(poly, a, b) {
                    weight[u][v] = a.dist(b);
                    weight[v][u] = weight[u][v];
                }
            }
        }
        let reflex = (0..n).filter(|&i| poly.is_reflex(i)).collect();
        VisibilityGraph { poly, reflex, weight }
    }

    /// Geodesic distance from `s` to every vertex.
    fn distances_from(&self, s: Point2) -> Vec<f64> {
        let n = self.poly.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut heap = BinaryHeap::new();
        for v in 0..n {
            let p = self.poly.vertex(v);
            if segment_inside(self.poly, s, p) {
                dist[v] = s.dist(p);
                heap.push(HeapItem(dist[v], v));
            }
        }
        let mut done = vec![false; n];
        while let Some(HeapItem(d, u)) = heap.pop() {
            if done[u] {
                continue;
            }
            done[u] = true;
            for v in 0..n {
                let nd = d + self.weight[u][v];
                if nd < dist[v] {
                    dist[v] = nd;
                    heap.push(HeapItem(nd, v));
                }
            }
        }
        dist
    }

    /// Reflex vertices visible from `x`.
    fn visible_reflex(&self, x: Point2) -> Vec<usize> {
        self.reflex.iter().copied().filter(|&v| segment_inside(self.poly, x, self.poly.vertex(v))).collect()
    }
}

fn check_inside(poly: &SimplePolygon, x: Point2) -> Result<()> {
    if x.is_finite() && poly.contains(x) {
        Ok(())
    } else {
        Err(Error::PointOutsidePolygon(x))
    }
}

/// Geodesic distance by Dijkstra over the visibility graph of the polygon
/// vertices together with `s` and `t`.
pub fn oracle_distance(poly: &SimplePolygon, s: Point2, t: Point2) -> Result<f64> {
    check_inside(poly, s)?;
    check_inside(poly, t)?;
    if segment_inside(poly, s, t) {
        return Ok(s.dist(t));
    }
    let g = VisibilityGraph::new(poly);
    let ds = g.distances_from(s);
    let best = (0..poly.len())
        .filter(|&v| ds[v].is_finite() && segment_inside(poly, t, poly.vertex(v)))
        .map(|v| ds[v] + t.dist(poly.vertex(v)))
        .fold(f64::INFINITY, f64::min);
    Ok(best)
}

/// Distances from arbitrary points to a fixed set of sites.
struct SiteField<'a> {
    graph: VisibilityGraph<'a>,
    sites: Vec<Point2>,
    /// `site_dist[k][v]`: geodesic distance from site `k` to vertex `v`.
    site_dist: Vec<Vec<f64>>,
}

impl<'a> SiteField<'a> {
    fn new(poly: &'a SimplePolygon, sites: &[Point2]) -> Self {
        let graph = VisibilityGraph::new(poly);
        let site_dist = sites.iter().map(|&s| graph.distances_from(s)).collect();
        SiteField { graph, sites: sites.to_vec(), site_dist }
    }

    fn inside(&self, x: Point2) -> bool {
        self.graph.poly.classify(x) != Containment::Outside
    }

    /// Distances from `x` to every site.
    fn distances(&self, x: Point2) -> Vec<f64> {
        let vis = self.graph.visible_reflex(x);
        (0..self.sites.len()).map(|k| self.anchored(x, k, &vis).0).collect()
    }

    /// Distance from `x` to site `k` and the last point before `x` on the
    /// shortest path (the site itself, or a visible reflex vertex).
    fn anchored(&self, x: Point2, k: usize, vis: &[usize]) -> (f64, Point2) {
        let s = self.sites[k];
        if segment_inside(self.graph.poly, x, s) {
            return (x.dist(s), s);
        }
        vis.iter()
            .map(|&v| {
                let w = self.graph.poly.vertex(v);
                (x.dist(w) + self.site_dist[k][v], w)
            })
            .fold((f64::INFINITY, x), |a, b| if b.0 < a.0 { b } else { a })
    }

    /// Point equidistant from sites `a`, `b`, `c`, by damped Newton steps
    /// from `start`. Gradients are unit vectors away from the path anchors.
    fn equalize(&self, [a, b, c]: [usize; 3], start: Point2) -> Option<Point2> {
        let scale = self.graph.poly.diameter().max(1.0);
        let residual = |x: Point2| -> Option<([f64; 3], [Point2; 3], f64)> {
            if !self.inside(x) {
                return None;
            }
            let vis = self.graph.visible_reflex(x);
            let mut d = [0.0; 3];
            let mut g = [Point2::default(); 3];
            for (i, k) in [a, b, c].into_iter().enumerate() {
                let (dist, w) = self.anchored(x, k, &vis);
                let len = x.dist(w);
                if !dist.is_finite() || len <= 1e-12 * scale {
                    return None;
                }
                d[i] = dist;
                g[i] = Point2::new((x.x - w.x) / len, (x.y - w.y) / len);
            }
            let norm = (d[0] - d[1]).hypot(d[1] - d[2]);
            Some((d, g, norm))
        };
        let mut x = start;
        let (mut d, mut g, mut norm) = residual(x)?;
        for _ in 0..60 {
            if norm <= 1e-13 * scale {
                return Some(x);
            }
            let (j11, j12) = (g[0].x - g[1].x, g[0].y - g[1].y);
            let (j21, j22) = (g[1].x - g[2].x, g[1].y - g[2].y);
            let det = j11 * j22 - j12 * j21;
            if det.abs() < 1e-14 {
                return None;
            }
            let (f1, f2) = (d[0] - d[1], d[1] - d[2]);
            let dx = -(j22 * f1 - j12 * f2) / det;
            let dy = -(-j21 * f1 + j11 * f2) / det;
            let mut t = 1.0;
            loop {
                let y = Point2::new(x.x + t * dx, x.y + t * dy);
                if let Some(r) = residual(y).filter(|r| r.2 < norm) {
                    x = y;
                    (d, g, norm) = r;
                    break;
                }
                t /= 2.0;
                if t < 1e-6 {
                    return None;
                }
            }
        }
        (norm <= 1e-9 * scale).then_some(x)
    }

    /// Midpoint of the geodesic between sites `a` and `b`, rebuilt backwards
    /// from `b` through the Dijkstra distances of `a`.
    fn midpoint(&self, a: usize, b: usize) -> Point2 {
        let poly = self.graph.poly;
        let (sa, sb) = (self.sites[a], self.sites[b]);
        let total = self.distances(sb)[a];
        let tol = 1e-9 * poly.diameter().max(1.0);
        let mut path = vec![sb];
        let mut cur = sb;
        let mut left = total;
        while !segment_inside(poly, cur, sa) || (cur.dist(sa) - left).abs() > tol {
            let next = (0..poly.len())
                .filter(|&v| segment_inside(poly, cur, poly.vertex(v)) && poly.vertex(v) != cur)
                .map(|v| (self.site_dist[a][v] + cur.dist(poly.vertex(v)), v))
                .filter(|(d, _)| (d - left).abs() <= tol)
                .min_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
            let Some((_, v)) = next else { break };
            left = self.site_dist[a][v];
            cur = poly.vertex(v);
            path.push(cur);
        }
        path.push(sa);
        let mut walk = total / 2.0;
        for w in path.windows(2) {
            let len = w[0].dist(w[1]);
            if walk <= len {
                return if len > 0.0 { w[0].lerp(w[1], walk / len) } else { w[0] };
            }
            walk -= len;
        }
        sa
    }

    fn max_over(&self, x: Point2, mask: u32) -> f64 {
        if !self.inside(x) {
            return f64::INFINITY;
        }
        let d = self.distances(x);
        mask_max(&d, mask)
    }
}

fn circumcenter(a: Point2, b: Point2, c: Point2) -> Option<Point2> {
    let (bx, by, cx, cy) = (b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
    let d = 2.0 * (bx * cy - by * cx);
    if d == 0.0 {
        return None;
    }
    let (b2, c2) = (bx * bx + by * by, cx * cx + cy * cy);
    let p = Point2::new(a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d);
    p.is_finite().then_some(p)
}

fn mask_max(d: &[f64], mask: u32) -> f64 {
    let mut m = 0.0f64;
    for (k, &v) in d.iter().enumerate() {
        if mask & (1 << k) != 0 {
            m = m.max(v);
        }
    }
    m
}

/// Coarse grid with the site distances precomputed at every inside point.
struct Grid {
    points: Vec<Point2>,
    dists: Vec<Vec<f64>>,
    spacing: f64,
    /// Pair midpoints and triple equalizers, with their site distances.
    midpoints: Vec<(Point2, Vec<f64>)>,
}

impl Grid {
    fn new(field: &SiteField<'_>, res: usize) -> Self {
        let vs = field.graph.poly.vertices();
        let (mut lo, mut hi) = (vs[0], vs[0]);
        for p in vs {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let spacing = (hi.x - lo.x).max(hi.y - lo.y) / res as f64;
        let mut points = Vec::new();
        let mut dists = Vec::new();
        for iy in 0..res {
            for ix in 0..res {
                let p = Point2::new(lo.x + (ix as f64 + 0.5) * spacing, lo.y + (iy as f64 + 0.5) * spacing);
                if p.x > hi.x || p.y > hi.y || !field.inside(p) {
                    continue;
                }
                dists.push(field.distances(p));
                points.push(p);
            }
        }
        // Sites themselves are exact zero-radius candidates.
        for &s in &field.sites {
            dists.push(field.distances(s));
            points.push(s);
        }
        // Pair midpoints are exact when two sites pin the optimum, where the
        // max-distance valley is too flat for the pattern search.
        let mut midpoints = Vec::new();
        for a in 0..field.sites.len() {
            for b in (a + 1)..field.sites.len() {
                let m = field.midpoint(a, b);
                if field.inside(m) {
                    midpoints.push((m, field.distances(m)));
                }
            }
        }
        // Likewise equidistant points of triples, for thin three-site valleys.
        let m = field.sites.len();
        for a in 0..m {
            for b in (a + 1)..m {
                for c in (b + 1)..m {
                    let mask = (1u32 << a) | (1 << b) | (1 << c);
                    let mut starts = vec![];
                    if let Some(i) = (0..points.len())
                        .min_by(|&i, &j| mask_max(&dists[i], mask).total_cmp(&mask_max(&dists[j], mask)))
                    {
                        starts.push(points[i]);
                    }
                    if let Some(cc) = circumcenter(field.sites[a], field.sites[b], field.sites[c]) {
                        starts.push(cc);
                    }
                    for s in starts {
                        if let Some(x) = field.equalize([a, b, c], s) {
                            midpoints.push((x, field.distances(x)));
                        }
                    }
                }
            }
        }
        Grid { points, dists, spacing, midpoints }
    }

    fn coarse_radius(&self, mask: u32) -> f64 {
        self.dists.iter().map(|d| mask_max(d, mask)).fold(f64::INFINITY, f64::min)
    }

    /// Up to `k` well-separated grid minimizers of the max distance.
    fn best_seeds(&self, mask: u32, k: usize) -> Vec<(Point2, f64)> {
        let mut order: Vec<(f64, usize)> = self.dists.iter().enumerate().map(|(i, d)| (mask_max(d, mask), i)).collect();
        order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut out: Vec<(Point2, f64)> = Vec::with_capacity(k);
        for (v, i) in order {
            let p = self.points[i];
            if out.iter().all(|(q, _)| q.dist(p) > 2.5 * self.spacing) {
                out.push((p, v));
                if out.len() == k {
                    break;
                }
            }
        }
        out
    }
}

fn refine(field: &SiteField<'_>, mask: u32, seed: (Point2, f64), spacing: f64, rounds: usize) -> (Point2, f64) {
    const HALF: i32 = 8;
    const MAX_SLIDES: usize = 200;
    let (mut best, mut val) = seed;
    let mut step = spacing / 4.0;
    let (mut done, mut slides) = (0, 0);
    while done < rounds {
        let center = best;
        let mut at = (0, 0);
        for iy in -HALF..=HALF {
            for ix in -HALF..=HALF {
                let p = Point2::new(center.x + ix as f64 * step, center.y + iy as f64 * step);
                let v = field.max_over(p, mask);
                if v < val {
                    val = v;
                    best = p;
                    at = (ix, iy);
                }
            }
        }
        // The minimum can sit in a long narrow valley: keep sliding the
        // window at this step while the best point is on its border.
        if (at.0.abs() == HALF || at.1.abs() == HALF) && slides < MAX_SLIDES {
            slides += 1;
            continue;
        }
        step /= 4.0;
        done += 1;
    }
    (best, val)
}

fn grid_one_center(field: &SiteField<'_>, grid: &Grid, mask: u32, cfg: &OracleConfig) -> (Point2, f64) {
    let mut best = (Point2::default(), f64::INFINITY);
    for seed in grid.best_seeds(mask, 3) {
        let r = refine(field, mask, seed, grid.spacing, cfg.refinement_rounds);
        if r.1 < best.1 {
            best = r;
        }
    }
    for (m, d) in &grid.midpoints {
        let v = mask_max(d, mask);
        if v < best.1 {
            best = (*m, v);
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleOneCenter {
    pub center: Point2,
    pub radius: f64,
}

/// Grid search for the point minimizing the largest geodesic distance to `sites`.
pub fn oracle_one_center(poly: &SimplePolygon, sites: &[Point2], cfg: &OracleConfig) -> Result<OracleOneCenter> {
    cfg.validate()?;
    if sites.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if sites.len() > 31 {
        return Err(Error::TooLarge(sites.len()));
    }
    for &s in sites {
        check_inside(poly, s)?;
    }
    let field = SiteField::new(poly, sites);
    let grid = Grid::new(&field, cfg.grid_resolution);
    let mask = (1u32 << sites.len()) - 1;
    let (center, radius) = grid_one_center(&field, &grid, mask, cfg);
    Ok(OracleOneCenter { center, radius })
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleTwoCenter {
    pub c1: Point2,
    pub c2: Point2,
    pub radius: f64,
    /// 1 or 2 for each input point.
    pub assignment: Vec<u8>,
    /// Closest one-center radius of a subset of at most three points; the
    /// optimum is always attained by such a subset.
    pub candidate_radius: f64,
}

pub const ORACLE_MAX_POINTS: usize = 12;

/// Exhaustive two-center: the best bipartition of `points`, with every side
/// solved by the grid one-center oracle.
pub fn oracle_two_center(poly: &SimplePolygon, points: &[Point2], cfg: &OracleConfig) -> Result<OracleTwoCenter> {
    cfg.validate()?;
    let m = points.len();
    if m == 0 {
        return Err(Error::EmptyPointSet);
    }
    if m > ORACLE_MAX_POINTS {
        return Err(Error::TooLarge(m));
    }
    for &q in points {
        check_inside(poly, q)?;
    }
    let field = SiteField::new(poly, points);
    let grid = Grid::new(&field, cfg.grid_resolution);
    let slack = 4.0 * std::f64::consts::SQRT_2 * grid.spacing;
    let full = (1u32 << m) - 1;

    let small: Vec<u32> = (1..=full).filter(|t| t.count_ones() <= 3).collect();
    let coarse_small: HashMap<u32, f64> = small.iter().map(|&t| (t, grid.coarse_radius(t))).collect();
    let lower = |side: u32| -> f64 {
        if side == 0 {
            return 0.0;
        }
        small.iter().filter(|&&t| t & !side == 0).map(|t| coarse_small[t]).fold(0.0, f64::max) - slack
    };

    // Bipartitions with point 0 on side one; side two may be empty.
    let mut parts: Vec<(f64, u32)> =
        (0..=full).filter(|a| a & 1 == 1).map(|a| (lower(a).max(lower(full & !a)), a)).collect();
    parts.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));

    let mut memo: HashMap<u32, (Point2, f64)> = HashMap::new();
    let mut solve = |mask: u32| -> (Point2, f64) {
        if mask == 0 {
            return (points[0], 0.0);
        }
        *memo.entry(mask).or_insert_with(|| grid_one_center(&field, &grid, mask, cfg))
    };
    let mut best: Option<(f64, u32, Point2, Point2)> = None;
    for &(lb, a) in parts.iter().take(cfg.sample_budget) {
        if let Some((r, ..)) = best {
            if lb > r {
                break;
            }
        }
        let (c1, r1) = solve(a);
        let (c2, r2) = solve(full & !a);
        let (c2, r2) = if full & !a == 0 { (c1, r2) } else { (c2, r2) };
        let r = r1.max(r2);
        if best.is_none_or(|(b, ..)| r < b) {
            best = Some((r, a, c1, c2));
        }
    }
    let (radius, side, c1, c2) = best.expect("at least one bipartition");
    let assignment = (0..m).map(|k| if side & (1 << k) != 0 { 1 } else { 2 }).collect();

    let candidate_radius = small
        .iter()
        .filter(|t| (coarse_small[t] - radius).abs() <= 2.0 * slack)
        .map(|&t| solve(t).1)
        .min_by(|x, y| (x - radius).abs().total_cmp(&(y - radius).abs()))
        .unwrap_or(f64::NAN);
    Ok(OracleTwoCenter { c1, c2, radius, assignment, candidate_radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn poly(coords: &[(f64, f64)]) -> SimplePolygon {
        SimplePolygon::new(coords.iter().map(|&c| Point2::from(c)).collect()).unwrap()
    }

    fn sq4() -> SimplePolygon {
        poly(&[(0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0)])
    }

    fn l6() -> SimplePolygon {
        poly(&[(0.0, 0.0), (4.0, 0.0), (4.0, 2.0), (2.0, 2.0), (2.0, 4.0), (0.0, 4.0)])
    }

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn distance_examples() {
        assert!((oracle_distance(&sq4(), p(1.0, 1.0), p(3.0, 3.0)).unwrap() - 2.0 * SQRT_2).abs() < 1e-12);
        assert!((oracle_distance(&l6(), p(3.0, 1.0), p(1.0, 3.0)).unwrap() - 2.0 * SQRT_2).abs() < 1e-12);
        let d = oracle_distance(&l6(), p(3.5, 1.5), p(1.5, 3.5)).unwrap();
        assert!((d - 2.0 * 2.5f64.sqrt()).abs() < 1e-12);
        assert!(oracle_distance(&l6(), p(3.0, 3.0), p(1.0, 1.0)).is_err());
    }

    #[test]
    fn segment_through_reflex_vertex_is_inside() {
        assert!(segment_inside(&l6(), p(3.0, 1.0), p(1.0, 3.0)));
        assert!(!segment_inside(&l6(), p(3.5, 1.5), p(1.5, 3.5)));
        assert!(segment_inside(&l6(), p(4.0, 0.0), p(4.0, 2.0)));
    }

    #[test]
    fn one_center_examples() {
        let cfg = OracleConfig::default();
        let r = oracle_one_center(&sq4(), &[p(1.0, 1.0)], &cfg).unwrap();
        assert!(r.radius <= 1e-4);
        let r = oracle_one_center(&l6(), &[p(3.0, 1.0), p(1.0, 3.0)], &cfg).unwrap();
        assert!((r.radius - SQRT_2).abs() <= 1e-4, "{r:?}");
        assert!(r.center.dist(p(2.0, 2.0)) < 1e-3);
    }

    #[test]
    fn two_center_examples() {
        let cfg = OracleConfig::default();
        let qsym = [p(1.0, 1.0), p(1.0, 3.0), p(3.0, 3.0), p(3.0, 1.0)];
        let r = oracle_two_center(&sq4(), &qsym, &cfg).unwrap();
        assert!((r.radius - 1.0).abs() <= 1e-4, "{r:?}");
        assert!((r.candidate_radius - r.radius).abs() <= 1e-4);

        let arms = [p(3.0, 1.0), p(3.0, 1.5), p(1.0, 3.0), p(1.5, 3.0)];
        let r = oracle_two_center(&l6(), &arms, &cfg).unwrap();
        assert!((r.radius - 0.25).abs() <= 1e-4, "{r:?}");
        assert_eq!(r.assignment[0], r.assignment[1]);
        assert_ne!(r.assignment[0], r.assignment[2]);
    }

    #[test]
    fn too_many_points() {
        let pts: Vec<Point2> = (0..13).map(|k| p(0.2 + 0.25 * k as f64, 0.5)).collect();
        assert_eq!(oracle_two_center(&sq4(), &pts, &OracleConfig::default()), Err(Error::TooLarge(13)));
    }

    #[test]
    fn config_is_validated() {
        let cfg = OracleConfig { grid_resolution: 16, ..Default::default() };
        assert!(matches!(oracle_one_center(&sq4(), &[p(1.0, 1.0)], &cfg), Err(Error::InvalidConfig(_))));
    }
}
