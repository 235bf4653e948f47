//! Geodesic (relative) convex hull of a point set inside a simple polygon.
//!
//! A point of `Q` is an extreme point when it is a turning vertex of the hull
//! boundary. A point is *not* extreme exactly when it lies in the geodesic
//! hull of the remaining points, which in turn is the union of the geodesic
//! triangles (and paths) over triples of those points. Extremes are ordered
//! clockwise by the planar order of their geodesics from one fixed extreme.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geodesic::{shortest_path, GeodesicPath};
use crate::geometry::{orientation, polyline_distance, winding_number, Point2};
use crate::one_center::one_center;
use crate::polygon::signed_area;
use crate::triangulation::TriangulatedPolygon;

#[derive(Clone, Debug)]
pub struct GeodesicHull {
    ambient: TriangulatedPolygon,
    points: Vec<Point2>,
    /// Indices into `points`, clockwise.
    extremes: Vec<usize>,
    /// Indices of the non-extreme points (`Q_I`).
    interior: Vec<usize>,
    /// `boundary[t]` is the geodesic from extreme `t` to extreme `t + 1`.
    boundary: Vec<GeodesicPath>,
    /// Clockwise boundary walk, without the closing repeat.
    cycle: Vec<Point2>,
}

/// Partition pair `(i, j)` of extreme positions (0-based, cyclic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainPair {
    pub i: usize,
    pub j: usize,
}

/// Region bounded by a clockwise hull portion and the geodesic closing it.
#[derive(Clone, Debug, PartialEq)]
pub struct Subpolygon {
    pub cycle: Vec<Point2>,
    /// Extreme positions on the clockwise portion.
    pub extremes: Vec<usize>,
    /// Zero area: the region collapses to a path.
    pub degenerate: bool,
}

/// Lexicographic (x, then y) comparison.
fn lex(a: Point2, b: Point2) -> Ordering {
    a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y))
}

/// Closed walk around the geodesic triangle `abc` with its bounding box.
struct Triangle {
    corners: [usize; 3],
    walk: Vec<Point2>,
    lo: Point2,
    hi: Point2,
}

impl Triangle {
    fn encloses(&self, p: Point2, eps: f64) -> bool {
        p.x >= self.lo.x - eps
            && p.x <= self.hi.x + eps
            && p.y >= self.lo.y - eps
            && p.y <= self.hi.y + eps
            && winding_number(p, &self.walk) != 0
    }
}

fn closed_walk(parts: &[&GeodesicPath]) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::new();
    for p in parts {
        for &w in &p.waypoints {
            if out.last() != Some(&w) {
                out.push(w);
            }
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

pub fn geodesic_hull(tp: &TriangulatedPolygon, q: &[Point2]) -> Result<GeodesicHull> {
    if q.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    for &p in q {
        if tp.locate(p).is_none() {
            return Err(Error::PointOutsidePolygon(p));
        }
    }
    let eps = tp.eps();

    // Distinct representatives.
    let mut reps: Vec<usize> = Vec::new();
    for (k, &p) in q.iter().enumerate() {
        if !reps.iter().any(|&r| q[r].dist(p) <= eps) {
            reps.push(k);
        }
    }
    let u = reps.len();
    let pts: Vec<Point2> = reps.iter().map(|&r| q[r]).collect();
    let mut paths: Vec<Vec<Option<GeodesicPath>>> = vec![vec![None; u]; u];
    for a in 0..u {
        for b in (a + 1)..u {
            let p = shortest_path(tp, pts[a], pts[b])?;
            paths[b][a] = Some(p.reversed());
            paths[a][b] = Some(p);
        }
    }
    let path = |a: usize, b: usize| paths[a][b].as_ref().unwrap();

    // A point is extreme unless it lies on a geodesic between two others or
    // inside a geodesic triangle of three others. Euclidean shortcuts are
    // unsound here: geodesics bend around reflex vertices and can enclose a
    // vertex of the Euclidean hull.
    let mut triangles = Vec::new();
    for a in 0..u {
        for b in (a + 1)..u {
            for c in (b + 1)..u {
                let walk = closed_walk(&[path(a, b), path(b, c), path(c, a)]);
                if walk.len() < 3 {
                    continue;
                }
                let (mut lo, mut hi) = (walk[0], walk[0]);
                for w in &walk {
                    lo = Point2::new(lo.x.min(w.x), lo.y.min(w.y));
                    hi = Point2::new(hi.x.max(w.x), hi.y.max(w.y));
                }
                triangles.push(Triangle { corners: [a, b, c], walk, lo, hi });
            }
        }
    }
    let mut is_extreme = vec![true; u];
    for x in 0..u {
        let p = pts[x];
        let on_path = (0..u)
            .any(|a| a != x && ((a + 1)..u).any(|b| b != x && polyline_distance(p, &path(a, b).waypoints) <= eps));
        is_extreme[x] = !on_path && !triangles.iter().any(|t| !t.corners.contains(&x) && t.encloses(p, eps));
    }

    let mut ext: Vec<usize> = (0..u).filter(|&x| is_extreme[x]).collect();
    let root = *ext.iter().min_by(|&&a, &&b| lex(pts[a], pts[b])).unwrap();
    ext.retain(|&x| x != root);
    // First-step directions out of the root span less than a half-turn; the
    // clockwise sweep starts at the far side of the widest gap between them.
    let angle = |x: usize| -> f64 {
        let d = path(root, x).waypoints[1] - pts[root];
        d.y.atan2(d.x)
    };
    let mut angles: Vec<f64> = ext.iter().map(|&x| angle(x)).collect();
    angles.sort_by(f64::total_cmp);
    let sweep_start = if angles.is_empty() {
        0.0
    } else {
        let n = angles.len();
        let gap = |a: usize| (angles[(a + 1) % n] - angles[a]).rem_euclid(TAU);
        let widest = (0..n).max_by(|&a, &b| gap(a).total_cmp(&gap(b))).unwrap();
        angles[widest]
    };
    let key = |x: usize| -> f64 {
        let k = (sweep_start - angle(x)).rem_euclid(TAU);
        if TAU - k <= 1e-12 {
            0.0
        } else {
            k
        }
    };
    ext.sort_by(|&b, &c| {
        let (pb, pc) = (&path(root, b).waypoints, &path(root, c).waypoints);
        let k = (1..pb.len().min(pc.len())).find(|&k| pb[k] != pc[k]);
        let closer = || pts[root].dist(pts[b]).total_cmp(&pts[root].dist(pts[c]));
        let Some(k) = k else { return pb.len().cmp(&pc.len()) };
        if k == 1 {
            let (kb, kc) = (key(b), key(c));
            if kb != kc {
                return kb.total_cmp(&kc);
            }
            return closer();
        }
        let base = pb[k - 1];
        match orientation(base, pb[k], pc[k]) {
            -1 => Ordering::Less,
            1 => Ordering::Greater,
            _ => closer(),
        }
    });
    let mut order = vec![root];
    order.extend(ext);

    let k = order.len();
    let boundary: Vec<GeodesicPath> =
        if k == 1 { Vec::new() } else { (0..k).map(|t| path(order[t], order[(t + 1) % k]).clone()).collect() };
    let cycle = if k == 1 { vec![pts[root]] } else { closed_walk(&boundary.iter().collect::<Vec<_>>()) };
    if k >= 3 && signed_area(&cycle) > eps * eps {
        log::warn!("hull boundary came out counterclockwise; check extreme order");
    }

    let extremes: Vec<usize> = order.iter().map(|&x| reps[x]).collect();
    let interior: Vec<usize> = (0..q.len()).filter(|t| !extremes.contains(t)).collect();
    Ok(GeodesicHull { ambient: tp.clone(), points: q.to_vec(), extremes, interior, boundary, cycle })
}

impl GeodesicHull {
    pub fn ambient(&self) -> &TriangulatedPolygon {
        &self.ambient
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// Number of extreme points.
    pub fn k(&self) -> usize {
        self.extremes.len()
    }

    /// Indices (into [`Self::points`]) of the extremes, clockwise.
    pub fn extreme_indices(&self) -> &[usize] {
        &self.extremes
    }

    /// Extreme at cyclic position `t`.
    pub fn extreme(&self, t: usize) -> Point2 {
        self.points[self.extremes[t % self.k()]]
    }

    pub fn interior_indices(&self) -> &[usize] {
        &self.interior
    }

    pub fn interior_points(&self) -> Vec<Point2> {
        self.interior.iter().map(|&t| self.points[t]).collect()
    }

    pub fn boundary(&self) -> &[GeodesicPath] {
        &self.boundary
    }

    /// Clockwise boundary walk; the last vertex joins the first.
    pub fn cycle(&self) -> &[Point2] {
        &self.cycle
    }

    pub fn eps(&self) -> f64 {
        self.ambient.eps()
    }

    /// Inside or on the hull, with the coincidence tolerance.
    pub fn contains(&self, x: Point2) -> bool {
        let mut closed = self.cycle.clone();
        closed.push(self.cycle[0]);
        polyline_distance(x, &closed) <= self.eps() || winding_number(x, &self.cycle) != 0
    }

    /// Positions `a, a+1, ..., b` (cyclic, inclusive).
    pub fn chain_extremes(&self, a: usize, b: usize) -> Vec<usize> {
        let k = self.k();
        let (a, b) = (a % k, b % k);
        let mut out = vec![a];
        let mut t = a;
        while t != b {
            t = (t + 1) % k;
            out.push(t);
        }
        out
    }

    pub fn chain_points(&self, a: usize, b: usize) -> Vec<Point2> {
        self.chain_extremes(a, b).into_iter().map(|t| self.extreme(t)).collect()
    }

    /// Region bounded by the clockwise hull portion from extreme `a` to
    /// extreme `b` and the geodesic from `b` back to `a`.
    pub fn subpolygon(&self, a: usize, b: usize) -> Result<Subpolygon> {
        let extremes = self.chain_extremes(a, b);
        let mut parts: Vec<GeodesicPath> = Vec::new();
        for w in extremes.windows(2) {
            parts.push(self.boundary[w[0]].clone());
        }
        let (va, vb) = (self.extreme(a), self.extreme(b));
        parts.push(shortest_path(&self.ambient, vb, va)?);
        let cycle = closed_walk(&parts.iter().collect::<Vec<_>>());
        let eps = self.eps();
        let degenerate = cycle.len() < 3 || signed_area(&cycle).abs() <= eps * eps;
        Ok(Subpolygon { cycle, extremes, degenerate })
    }

    /// Geodesic radius of the subpolygon from extreme `i` to extreme `j`.
    ///
    /// The farthest point of the region from any center is one of its
    /// extremes, so the one-center of the chain's extremes is used.
    pub fn chain_radius(&self, i: usize, j: usize) -> Result<f64> {
        let pts = self.chain_points(i, j);
        Ok(one_center(&self.ambient, &pts)?.radius)
    }

    /// Extreme positions served by each center: `(C(v_{j+1}, v_i), C(v_{i+1}, v_j))`.
    pub fn pair_sides(&self, pair: ChainPair) -> Result<(Vec<usize>, Vec<usize>)> {
        let k = self.k();
        let ChainPair { i, j } = pair;
        if k < 2 || i >= k || j >= k || i == j {
            return Err(Error::InvalidPair { i, j, k });
        }
        Ok((self.chain_extremes(j + 1, i), self.chain_extremes(i + 1, j)))
    }
}
