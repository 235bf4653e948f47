//! Geodesic one-center: the smallest geodesic disk enclosing a point set.
//!
//! The optimum is pinned by two points (the midpoint of their geodesic) or by
//! three points (a point equidistant from all three). Candidates of both kinds
//! are scored by the true maximum distance, and the set of sites driving the
//! search grows from the farthest pair until the best candidate covers all.

use crate::error::{Error, Result};
use crate::geodesic::{shortest_path, GeodesicPath};
use crate::geometry::Point2;
use crate::triangulation::TriangulatedPolygon;

#[derive(Clone, Debug, PartialEq)]
pub struct OneCenterResult {
    pub center: Point2,
    pub radius: f64,
    /// Input points at distance `radius` (within tolerance), at most three.
    pub determinators: Vec<Point2>,
}

const NEWTON_MAX_ITER: usize = 100;
const NEWTON_TOL: f64 = 1e-12;

/// Geodesic distance together with the anchor (last bend before `x`) and
/// the unit gradient of `d(site, .)` at `x`.
fn chart(tp: &TriangulatedPolygon, site: Point2, x: Point2) -> Option<(f64, Point2)> {
    let path = shortest_path(tp, site, x).ok()?;
    let w = path.last_bend();
    let v = x - w;
    let len = v.norm();
    let grad = if len > 0.0 { v * (1.0 / len) } else { Point2::default() };
    Some((path.length, grad))
}

fn max_distance(tp: &TriangulatedPolygon, sites: &[Point2], x: Point2) -> Option<(f64, usize)> {
    let mut best = (f64::NEG_INFINITY, 0);
    for (k, &s) in sites.iter().enumerate() {
        let d = shortest_path(tp, s, x).ok()?.length;
        if d > best.0 {
            best = (d, k);
        }
    }
    Some(best)
}

/// A point equidistant from `a`, `b` and `c`, by damped Newton iteration on
/// the local distance charts.
pub fn equalize_three(tp: &TriangulatedPolygon, a: Point2, b: Point2, c: Point2, seed: Point2) -> Option<Point2> {
    let scale = tp.polygon().diameter().max(1.0);
    let residual = |x: Point2| -> Option<(f64, f64, Point2, Point2, Point2)> {
        let (da, ga) = chart(tp, a, x)?;
        let (db, gb) = chart(tp, b, x)?;
        let (dc, gc) = chart(tp, c, x)?;
        Some((da - db, da - dc, ga, gb, gc))
    };
    let mut x = seed;
    let (mut f1, mut f2, mut ga, mut gb, mut gc) = residual(x)?;
    for _ in 0..NEWTON_MAX_ITER {
        let norm = f1.hypot(f2);
        if norm <= NEWTON_TOL * scale {
            return Some(x);
        }
        let r1 = ga - gb;
        let r2 = ga - gc;
        let det = r1.x * r2.y - r1.y * r2.x;
        if det.abs() < 1e-14 {
            return None;
        }
        let dx = Point2::new((f1 * r2.y - f2 * r1.y) / det, (r1.x * f2 - r2.x * f1) / det) * -1.0;
        let mut step = 1.0;
        let mut accepted = false;
        while step > 1e-6 {
            let cand = x + dx * step;
            if let Some(r) = residual(cand) {
                if r.0.hypot(r.1) < norm {
                    x = cand;
                    (f1, f2, ga, gb, gc) = r;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (f1.hypot(f2) <= 1e-9 * scale).then_some(x)
}

fn circumcenter(a: Point2, b: Point2, c: Point2) -> Option<Point2> {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if d.abs() < 1e-300 {
        return None;
    }
    let (a2, b2, c2) = (a.dot(a), b.dot(b), c.dot(c));
    Some(Point2::new(
        (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
        (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d,
    ))
}

struct Search<'a> {
    tp: &'a TriangulatedPolygon,
    sites: &'a [Point2],
    best: (f64, Point2),
}

impl Search<'_> {
    fn offer(&mut self, x: Point2) {
        if let Some((f, _)) = max_distance(self.tp, self.sites, x) {
            if f < self.best.0 {
                self.best = (f, x);
            }
        }
    }
}

/// Smallest enclosing geodesic disk of `sites`.
pub fn one_center(tp: &TriangulatedPolygon, sites: &[Point2]) -> Result<OneCenterResult> {
    if sites.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    for &s in sites {
        if tp.locate(s).is_none() {
            return Err(Error::PointOutsidePolygon(s));
        }
    }
    let tol = 1e-9 * tp.polygon().diameter().max(1.0);
    if sites.len() == 1 {
        return Ok(OneCenterResult { center: sites[0], radius: 0.0, determinators: vec![sites[0]] });
    }

    // Farthest pair from the first site, then from that point.
    let (_, i) = max_distance(tp, sites, sites[0]).ok_or(Error::PointOutsidePolygon(sites[0]))?;
    let (_, j) = max_distance(tp, sites, sites[i]).ok_or(Error::PointOutsidePolygon(sites[i]))?;
    let mut core: Vec<usize> = if i == j { vec![i] } else { vec![i, j] };
    let mut paths: Vec<Vec<Option<GeodesicPath>>> = vec![vec![None; sites.len()]; sites.len()];
    let mut path = |a: usize, b: usize, tp: &TriangulatedPolygon| -> GeodesicPath {
        if paths[a][b].is_none() {
            paths[a][b] = shortest_path(tp, sites[a], sites[b]).ok();
        }
        paths[a][b].clone().expect("sites are inside the polygon")
    };

    loop {
        let core_pts: Vec<Point2> = core.iter().map(|&k| sites[k]).collect();
        let mut search = Search { tp, sites: &core_pts, best: (f64::INFINITY, core_pts[0]) };
        for x in 0..core.len() {
            for y in (x + 1)..core.len() {
                let p = path(core[x], core[y], tp);
                search.offer(p.midpoint());
            }
        }
        if core.len() == 1 {
            search.offer(core_pts[0]);
        }
        for x in 0..core.len() {
            for y in (x + 1)..core.len() {
                for z in (y + 1)..core.len() {
                    let (a, b, c) = (core_pts[x], core_pts[y], core_pts[z]);
                    let mut seeds: Vec<Point2> = Vec::with_capacity(5);
                    if let Some(cc) = circumcenter(a, b, c) {
                        if tp.locate(cc).is_some() {
                            seeds.push(cc);
                        }
                    }
                    let centroid = Point2::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0);
                    if tp.locate(centroid).is_some() {
                        seeds.push(centroid);
                    }
                    for (u, v) in [(x, y), (y, z), (x, z)] {
                        seeds.push(path(core[u], core[v], tp).midpoint());
                    }
                    for seed in seeds {
                        if let Some(e) = equalize_three(tp, a, b, c, seed) {
                            search.offer(e);
                            break;
                        }
                    }
                }
            }
        }
        let (radius, center) = search.best;
        let (far, k) = max_distance(tp, sites, center).expect("center inside");
        // The core's optimum is a lower bound for the full set, so covering
        // everything at that radius is optimal.
        if far <= radius + tol {
            let mut det: Vec<(f64, Point2)> = sites
                .iter()
                .filter_map(|&s| {
                    let d = shortest_path(tp, s, center).ok()?.length;
                    (d >= radius - 1e-7 * tp.polygon().diameter().max(1.0)).then_some((d, s))
                })
                .collect();
            det.sort_by(|u, v| v.0.total_cmp(&u.0));
            det.dedup_by(|u, v| u.1 == v.1);
            det.truncate(3);
            return Ok(OneCenterResult {
                center,
                radius: far.max(radius),
                determinators: det.into_iter().map(|(_, s)| s).collect(),
            });
        }
        if core.contains(&k) {
            // Numerical stall: the farthest site is already in the core.
            log::warn!("one-center search stalled at radius {radius}");
            return Ok(OneCenterResult { center, radius, determinators: vec![sites[k]] });
        }
        core.push(k);
    }
}
