//! Geodesic shortest paths inside a triangulated simple polygon.
//!
//! Paths are computed with the funnel algorithm over the sleeve of triangles
//! joining the two endpoints in the dual tree. Each query costs time linear
//! in the sleeve length.

use crate::error::{Error, Result};
use crate::geometry::{on_segment, orientation, Point2};
use crate::triangulation::TriangulatedPolygon;

/// Shortest path between two points of the polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct GeodesicPath {
    /// Endpoints plus the reflex vertices the path bends at.
    pub waypoints: Vec<Point2>,
    /// Polygon vertex index of each waypoint, when it is one.
    pub vertex_ids: Vec<Option<usize>>,
    pub length: f64,
}

impl GeodesicPath {
    pub fn source(&self) -> Point2 {
        self.waypoints[0]
    }

    pub fn target(&self) -> Point2 {
        *self.waypoints.last().unwrap()
    }

    /// Last waypoint before the target (the anchor of the target as seen
    /// from the source), or the source when the target is visible.
    pub fn last_bend(&self) -> Point2 {
        let n = self.waypoints.len();
        if n >= 2 {
            self.waypoints[n - 2]
        } else {
            self.waypoints[0]
        }
    }

    /// Point at arc-length `s` from the source, clamped to the path.
    pub fn point_at(&self, s: f64) -> Point2 {
        let mut left = s.max(0.0);
        for w in self.waypoints.windows(2) {
            let len = w[0].dist(w[1]);
            if left <= len {
                return if len == 0.0 { w[0] } else { w[0].lerp(w[1], left / len) };
            }
            left -= len;
        }
        self.target()
    }

    pub fn midpoint(&self) -> Point2 {
        self.point_at(0.5 * self.length)
    }

    pub fn reversed(&self) -> GeodesicPath {
        let mut waypoints = self.waypoints.clone();
        waypoints.reverse();
        let mut vertex_ids = self.vertex_ids.clone();
        vertex_ids.reverse();
        GeodesicPath { waypoints, vertex_ids, length: self.length }
    }
}

#[derive(Clone, Copy)]
struct PortalEnd {
    p: Point2,
    id: Option<usize>,
}

fn locate_checked(tp: &TriangulatedPolygon, x: Point2) -> Result<usize> {
    if !x.is_finite() {
        return Err(Error::PointOutsidePolygon(x));
    }
    tp.locate(x).ok_or(Error::PointOutsidePolygon(x))
}

/// The unique geodesic between `s` and `t`.
pub fn shortest_path(tp: &TriangulatedPolygon, s: Point2, t: Point2) -> Result<GeodesicPath> {
    let ts = locate_checked(tp, s)?;
    let tt = locate_checked(tp, t)?;
    Ok(with_touches(tp, funnel(tp, s, ts, t, tt)))
}

/// Inserts the reflex vertices that the path touches without bending.
fn with_touches(tp: &TriangulatedPolygon, path: GeodesicPath) -> GeodesicPath {
    let mut waypoints = vec![path.waypoints[0]];
    let mut vertex_ids = vec![path.vertex_ids[0]];
    for k in 1..path.waypoints.len() {
        let (a, b) = (path.waypoints[k - 1], path.waypoints[k]);
        let mut touched: Vec<(f64, usize)> = tp
            .reflex_vertices()
            .filter_map(|w| {
                let p = tp.vertex(w);
                (p != a && p != b && orientation(a, b, p) == 0 && on_segment(p, a, b)).then(|| (a.dist(p), w))
            })
            .collect();
        touched.sort_by(|x, y| x.0.total_cmp(&y.0));
        for (_, w) in touched {
            waypoints.push(tp.vertex(w));
            vertex_ids.push(Some(w));
        }
        waypoints.push(b);
        vertex_ids.push(path.vertex_ids[k]);
    }
    GeodesicPath { waypoints, vertex_ids, length: path.length }
}

/// Length of the geodesic between `s` and `t`.
pub fn geodesic_distance(tp: &TriangulatedPolygon, s: Point2, t: Point2) -> Result<f64> {
    shortest_path(tp, s, t).map(|p| p.length)
}

fn funnel(tp: &TriangulatedPolygon, s: Point2, ts: usize, t: Point2, tt: usize) -> GeodesicPath {
    if ts == tt || s == t {
        return GeodesicPath { waypoints: vec![s, t], vertex_ids: vec![None, None], length: s.dist(t) };
    }
    let sleeve = tp.sleeve(ts, tt);
    let mut portals: Vec<(PortalEnd, PortalEnd)> = Vec::with_capacity(sleeve.len() + 1);
    let start = PortalEnd { p: s, id: None };
    let end = PortalEnd { p: t, id: None };
    portals.push((start, start));
    for w in sleeve.windows(2) {
        let (l, r) = tp.portal(w[0], w[1]);
        portals.push((PortalEnd { p: tp.vertex(l), id: Some(l) }, PortalEnd { p: tp.vertex(r), id: Some(r) }));
    }
    portals.push((end, end));

    let mut pts = vec![start];
    let mut apex = start;
    let (mut left, mut right) = (start, start);
    let (mut left_i, mut right_i) = (0usize, 0usize);
    let mut i = 1;
    while i < portals.len() {
        let (pl, pr) = portals[i];

        // Right leg.
        if orientation(apex.p, right.p, pr.p) >= 0 {
            let o = orientation(apex.p, left.p, pr.p);
            if apex.p == right.p || o < 0 || (o == 0 && inside_collinear(apex.p, left.p, pr.p)) {
                right = pr;
                right_i = i;
            } else {
                pts.push(left);
                apex = left;
                let apex_i = left_i;
                left = apex;
                right = apex;
                left_i = apex_i;
                right_i = apex_i;
                i = apex_i + 1;
                continue;
            }
        }

        // Left leg.
        if orientation(apex.p, left.p, pl.p) <= 0 {
            let o = orientation(apex.p, right.p, pl.p);
            if apex.p == left.p || o > 0 || (o == 0 && inside_collinear(apex.p, right.p, pl.p)) {
                left = pl;
                left_i = i;
            } else {
                pts.push(right);
                apex = right;
                let apex_i = right_i;
                left = apex;
                right = apex;
                left_i = apex_i;
                right_i = apex_i;
                i = apex_i + 1;
                continue;
            }
        }
        i += 1;
    }
    pts.push(end);
    simplify(pts)
}

/// For `p` collinear with the funnel leg `apex → leg`: whether `p` stays
/// inside the funnel, i.e. points away from the leg (a flat funnel) or
/// stops short of it.
fn inside_collinear(apex: Point2, leg: Point2, p: Point2) -> bool {
    (leg - apex).dot(p - apex) <= 0.0 || apex.dist(p) < apex.dist(leg)
}

/// Drops repeated waypoints and straight pass-through waypoints.
fn simplify(pts: Vec<PortalEnd>) -> GeodesicPath {
    let mut out: Vec<PortalEnd> = Vec::with_capacity(pts.len());
    for p in pts {
        if out.last().is_some_and(|q| q.p == p.p) {
            continue;
        }
        while out.len() >= 2 {
            let a = out[out.len() - 2].p;
            let b = out[out.len() - 1].p;
            let keep = out[out.len() - 1].id.is_some();
            if !keep && orientation(a, b, p.p) == 0 && (b - a).dot(p.p - b) >= 0.0 {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    if out.len() == 1 {
        out.push(out[0]);
    }
    let length = out.windows(2).map(|w| w[0].p.dist(w[1].p)).sum();
    GeodesicPath {
        waypoints: out.iter().map(|e| e.p).collect(),
        vertex_ids: out.iter().map(|e| e.id).collect(),
        length,
    }
}

/// Geodesic distances from a fixed source to every polygon vertex (and,
/// optionally, to extra points) together with the last-vertex anchors.
#[derive(Clone, Debug)]
pub struct ShortestPathTree {
    pub source: Point2,
    pub dist: Vec<f64>,
    pub parent: Vec<Point2>,
    /// Polygon vertex index of the parent; `None` when it is the source.
    pub parent_vertex: Vec<Option<usize>>,
    pub extra_dist: Vec<f64>,
    pub extra_parent: Vec<Point2>,
}

pub fn shortest_path_tree(tp: &TriangulatedPolygon, s: Point2) -> Result<ShortestPathTree> {
    shortest_path_tree_with(tp, s, &[])
}

pub fn shortest_path_tree_with(tp: &TriangulatedPolygon, s: Point2, extra: &[Point2]) -> Result<ShortestPathTree> {
    let ts = locate_checked(tp, s)?;
    let n = tp.polygon().len();
    let mut dist = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    let mut parent_vertex = Vec::with_capacity(n);
    for v in 0..n {
        let p = tp.vertex(v);
        let tv = tp.triangles().iter().position(|tri| tri.contains(&v)).unwrap();
        let path = with_touches(tp, funnel(tp, s, ts, p, tv));
        dist.push(path.length);
        let k = path.waypoints.len();
        if k >= 3 {
            parent.push(path.waypoints[k - 2]);
            parent_vertex.push(path.vertex_ids[k - 2]);
        } else {
            parent.push(s);
            parent_vertex.push(None);
        }
    }
    let mut extra_dist = Vec::with_capacity(extra.len());
    let mut extra_parent = Vec::with_capacity(extra.len());
    for &x in extra {
        let tx = locate_checked(tp, x)?;
        let path = with_touches(tp, funnel(tp, s, ts, x, tx));
        extra_dist.push(path.length);
        extra_parent.push(path.last_bend());
    }
    Ok(ShortestPathTree { source: s, dist, parent, parent_vertex, extra_dist, extra_parent })
}

/// A vertex of the shortest path map of a source: a polygon vertex or the
/// boundary point hit by extending a tree edge through a reflex vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpmVertex {
    pub position: Point2,
    pub distance: f64,
    /// Reflex vertex whose extension produced this entry.
    pub extended_from: Option<usize>,
}

pub fn spm_vertices(tp: &TriangulatedPolygon, s: Point2) -> Result<Vec<SpmVertex>> {
    let spt = shortest_path_tree(tp, s)?;
    let poly = tp.polygon();
    let eps = tp.eps();
    let mut out: Vec<SpmVertex> = (0..poly.len())
        .map(|v| SpmVertex { position: poly.vertex(v), distance: spt.dist[v], extended_from: None })
        .collect();
    for w in tp.reflex_vertices() {
        let wp = poly.vertex(w);
        let par = spt.parent[w];
        let dir = wp - par;
        let len = dir.norm();
        if len <= eps {
            continue;
        }
        let dir = dir * (1.0 / len);
        if let Some(hit) = extend_ray(tp, wp, dir) {
            out.push(SpmVertex { position: hit, distance: spt.dist[w] + wp.dist(hit), extended_from: Some(w) });
        }
    }
    Ok(out)
}

/// First boundary point hit by the ray from `origin` in direction `dir`
/// (unit), provided the ray enters the polygon interior. Grazing contacts
/// with vertices are passed through.
pub fn extend_ray(tp: &TriangulatedPolygon, origin: Point2, dir: Point2) -> Option<Point2> {
    let poly = tp.polygon();
    let eps = tp.eps();
    let probe = eps.max(1e-7 * poly.diameter());
    let mut from = origin;
    for _ in 0..poly.len() + 1 {
        if !poly.strictly_contains(from + dir * probe) {
            return if from == origin { None } else { Some(from) };
        }
        let mut best = f64::INFINITY;
        for (a, b) in poly.edges() {
            if let Some((t, _)) = crate::geometry::ray_segment_hit(from, dir, a, b) {
                if t > probe * 0.5 && t < best {
                    best = t;
                }
            }
        }
        if !best.is_finite() {
            return None;
        }
        let hit = from + dir * best;
        if poly.strictly_contains(hit + dir * probe) && poly.boundary_distance(hit + dir * probe) > eps {
            // Grazed a vertex; keep going.
            from = hit;
            continue;
        }
        return Some(hit);
    }
    None
}
