//! Geodesic disks, their circles, and intersections of equal-radius disks.
//!
//! A geodesic circle is a union of Euclidean arcs, each centered at an
//! *anchor*: the site itself or a reflex vertex where shortest paths from the
//! site bend. The arc around anchor `w` has Euclidean radius `r - d(site, w)`.
//! Arcs are oriented clockwise about their anchor, so walking an arc keeps
//! the disk on the right; the same convention orders the boundary of an
//! intersection.

use std::f64::consts::TAU;

use crate::error::Result;
use crate::geodesic::{geodesic_distance, shortest_path_tree};
use crate::geometry::{normalize_angle, Circle, Point2};
use crate::one_center::one_center;
use crate::triangulation::TriangulatedPolygon;

/// Relative tolerance for "this point lies on the circle".
const ON_CIRCLE: f64 = 1e-9;
/// Relative tolerance for joining arc endpoints.
const JOIN: f64 = 1e-7;

fn scale(tp: &TriangulatedPolygon) -> f64 {
    tp.polygon().diameter().max(1.0)
}

/// A site with the anchors of its shortest path map.
#[derive(Clone, Debug)]
pub struct GeodesicSite {
    pub point: Point2,
    /// `(anchor, d(point, anchor))`: the site first, then reflex vertices.
    pub anchors: Vec<(Point2, f64)>,
    /// Predecessor of each anchor on its shortest path (the site for itself).
    parents: Vec<Point2>,
}

impl GeodesicSite {
    pub fn new(tp: &TriangulatedPolygon, point: Point2) -> Result<Self> {
        let spt = shortest_path_tree(tp, point)?;
        let mut anchors = vec![(point, 0.0)];
        let mut parents = vec![point];
        for w in tp.reflex_vertices() {
            let wp = tp.vertex(w);
            if wp.dist(point) <= tp.eps() {
                continue;
            }
            anchors.push((wp, spt.dist[w]));
            parents.push(spt.parent[w]);
        }
        Ok(GeodesicSite { point, anchors, parents })
    }

    /// Anchors whose circle at geodesic radius `r` is nondegenerate, with the
    /// Euclidean radius of that circle.
    fn circles(&self, r: f64) -> impl Iterator<Item = (usize, Circle)> + '_ {
        self.anchors
            .iter()
            .enumerate()
            .filter(move |(_, (_, d))| *d < r)
            .map(move |(k, &(a, d))| (k, Circle::new(a, r - d)))
    }
}

/// Euclidean arc of a geodesic circle, traversed clockwise about `anchor`:
/// the point at offset `t ∈ [0, sweep]` has angle `start - t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircularArc {
    pub anchor: Point2,
    pub euclid_radius: f64,
    pub start: f64,
    pub sweep: f64,
    /// Index of the contributing site in the site list.
    pub owner: usize,
    pub owner_point: Point2,
}

impl CircularArc {
    pub fn end(&self) -> f64 {
        self.start - self.sweep
    }

    pub fn point_at(&self, t: f64) -> Point2 {
        Point2::from_polar(self.anchor, self.euclid_radius, self.start - t)
    }

    pub fn start_point(&self) -> Point2 {
        self.point_at(0.0)
    }

    pub fn end_point(&self) -> Point2 {
        self.point_at(self.sweep)
    }

    pub fn length(&self) -> f64 {
        self.euclid_radius * self.sweep
    }

    pub fn is_full_circle(&self) -> bool {
        self.sweep >= TAU
    }

    fn circle(&self) -> Circle {
        Circle::new(self.anchor, self.euclid_radius)
    }

    /// Offset of the circle point at `angle`, if it lies on the arc.
    fn offset_of(&self, angle: f64, slack: f64) -> Option<f64> {
        let t = normalize_angle(self.start - angle);
        if t <= self.sweep + slack {
            Some(t.min(self.sweep))
        } else if t >= TAU - slack {
            Some(0.0)
        } else {
            None
        }
    }

    fn sub(&self, t0: f64, t1: f64) -> CircularArc {
        CircularArc { start: self.start - t0, sweep: t1 - t0, ..*self }
    }
}

pub fn disk_contains(tp: &TriangulatedPolygon, c: Point2, r: f64, x: Point2) -> Result<bool> {
    Ok(geodesic_distance(tp, c, x)? <= r + tp.eps())
}

/// Geodesic circle of radius `r` around `q`.
pub fn geodesic_circle(tp: &TriangulatedPolygon, q: Point2, r: f64) -> Result<Vec<CircularArc>> {
    let site = GeodesicSite::new(tp, q)?;
    circle_arcs(tp, &site, 0, r)
}

pub(crate) fn circle_arcs(
    tp: &TriangulatedPolygon,
    site: &GeodesicSite,
    owner: usize,
    r: f64,
) -> Result<Vec<CircularArc>> {
    let poly = tp.polygon();
    let tol = ON_CIRCLE * scale(tp);
    let mut out = Vec::new();
    for (k, circle) in site.circles(r) {
        let (a, rho) = (circle.center, circle.radius);
        if rho <= tol {
            continue;
        }
        let mut crit: Vec<f64> = Vec::new();
        for v in poly.vertices() {
            let d = v.dist(a);
            if d > tp.eps() && d <= rho + tol {
                crit.push(v.angle_from(a));
            }
        }
        for (p0, p1) in poly.edges() {
            crit.extend(circle.intersect_segment(p0, p1));
        }
        if k > 0 {
            crit.push(normalize_angle((a - site.parents[k]).angle_from(Point2::default())));
        }
        crit.iter_mut().for_each(|c| *c = normalize_angle(*c));
        crit.sort_by(f64::total_cmp);
        crit.dedup_by(|x, y| (*x - *y).abs() < 1e-13);
        // Counterclockwise angular intervals [lo, hi] of the circle.
        let pieces: Vec<(f64, f64)> = if crit.is_empty() {
            vec![(0.0, TAU)]
        } else {
            (0..crit.len())
                .map(|t| {
                    let lo = crit[t];
                    let hi = if t + 1 < crit.len() { crit[t + 1] } else { crit[0] + TAU };
                    (lo, hi)
                })
                .collect()
        };
        let keep: Vec<bool> = pieces
            .iter()
            .map(|&(lo, hi)| {
                let m = circle.point_at(0.5 * (lo + hi));
                poly.strictly_contains(m)
                    && geodesic_distance(tp, site.point, m).map(|d| (d - r).abs() <= tol).unwrap_or(false)
            })
            .collect();
        for (lo, hi) in merge_cyclic(&pieces, &keep) {
            out.push(CircularArc {
                anchor: a,
                euclid_radius: rho,
                start: hi,
                sweep: hi - lo,
                owner,
                owner_point: site.point,
            });
        }
    }
    Ok(out)
}

/// Merge consecutive kept intervals of a cyclic partition of the circle.
fn merge_cyclic(pieces: &[(f64, f64)], keep: &[bool]) -> Vec<(f64, f64)> {
    let n = pieces.len();
    if keep.iter().all(|&k| k) {
        return vec![(pieces[0].0, pieces[0].0 + TAU)];
    }
    // Start right after a dropped piece so no run wraps around.
    let first = (0..n).find(|&t| !keep[t]).unwrap();
    let mut out = Vec::new();
    let mut run: Option<(f64, f64)> = None;
    for s in 1..=n {
        let t = (first + s) % n;
        let (mut lo, mut hi) = pieces[t];
        if t <= first {
            // Wrapped past the last piece: shift by a full turn for continuity.
            lo += TAU;
            hi += TAU;
        }
        if keep[t] {
            run = Some(match run {
                Some((l, _)) => (l, hi),
                None => (lo, hi),
            });
        } else if let Some(rn) = run.take() {
            out.push(rn);
        }
    }
    if let Some(rn) = run {
        out.push(rn);
    }
    out
}

/// One piece of an intersection boundary.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundaryElement {
    Arc(CircularArc),
    /// A clockwise walk along the polygon boundary (first and last points
    /// are the neighbouring arc endpoints).
    Chain(Vec<Point2>),
}

impl BoundaryElement {
    pub fn length(&self) -> f64 {
        match self {
            BoundaryElement::Arc(a) => a.length(),
            BoundaryElement::Chain(c) => c.windows(2).map(|w| w[0].dist(w[1])).sum(),
        }
    }

    pub fn as_arc(&self) -> Option<&CircularArc> {
        match self {
            BoundaryElement::Arc(a) => Some(a),
            BoundaryElement::Chain(_) => None,
        }
    }
}

/// Location on an [`ArcBoundary`]: element index and offset (angle offset for
/// arcs, arc length for chains).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPos {
    pub element: usize,
    pub t: f64,
}

/// Boundary of an intersection of equal-radius geodesic disks, clockwise.
#[derive(Clone, Debug)]
pub struct ArcBoundary {
    pub elements: Vec<BoundaryElement>,
    pub radius: f64,
    pub sites: Vec<Point2>,
    offsets: Vec<f64>,
    length: f64,
    /// The arcs were chained into one closed curve.
    pub ordered: bool,
}

impl ArcBoundary {
    fn new(elements: Vec<BoundaryElement>, radius: f64, sites: Vec<Point2>, ordered: bool) -> Self {
        let mut offsets = Vec::with_capacity(elements.len());
        let mut acc = 0.0;
        for e in &elements {
            offsets.push(acc);
            acc += e.length();
        }
        ArcBoundary { elements, radius, sites, offsets, length: acc, ordered }
    }

    /// Arcs with their element index, in boundary order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, &CircularArc)> + '_ {
        self.elements.iter().enumerate().filter_map(|(k, e)| e.as_arc().map(|a| (k, a)))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs().count()
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Clockwise arc-length parameter of a position, from the first element.
    pub fn param(&self, pos: BoundaryPos) -> f64 {
        let scale = match &self.elements[pos.element] {
            BoundaryElement::Arc(a) => a.euclid_radius,
            BoundaryElement::Chain(_) => 1.0,
        };
        self.offsets[pos.element] + scale * pos.t
    }

    /// Position at clockwise arc-length parameter `s` (taken modulo the length).
    pub fn position_at(&self, s: f64) -> BoundaryPos {
        let s = if self.length > 0.0 { s.rem_euclid(self.length) } else { 0.0 };
        let k = self.offsets.partition_point(|&o| o <= s).saturating_sub(1);
        let local = s - self.offsets[k];
        let t = match &self.elements[k] {
            BoundaryElement::Arc(a) if a.euclid_radius > 0.0 => (local / a.euclid_radius).min(a.sweep),
            BoundaryElement::Arc(_) => 0.0,
            BoundaryElement::Chain(_) => local,
        };
        BoundaryPos { element: k, t }
    }

    /// `n` points evenly spaced by arc length around the boundary.
    pub fn sample(&self, n: usize) -> Vec<Point2> {
        (0..n).map(|i| self.point(self.position_at(self.length * i as f64 / n as f64))).collect()
    }

    pub fn point(&self, pos: BoundaryPos) -> Point2 {
        match &self.elements[pos.element] {
            BoundaryElement::Arc(a) => a.point_at(pos.t),
            BoundaryElement::Chain(c) => {
                let mut left = pos.t;
                for w in c.windows(2) {
                    let len = w[0].dist(w[1]);
                    if left <= len && len > 0.0 {
                        return w[0].lerp(w[1], left / len);
                    }
                    left -= len;
                }
                *c.last().unwrap()
            }
        }
    }

    /// Owners of the arcs, in boundary order with repeats collapsed.
    pub fn owners(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (_, a) in self.arcs() {
            if out.last() != Some(&a.owner) {
                out.push(a.owner);
            }
        }
        if out.len() > 1 && out.first() == out.last() {
            out.pop();
        }
        out
    }

    /// Points sampled along the arcs at roughly the given spacing.
    pub fn sample_arcs(&self, spacing: f64) -> Vec<(usize, Point2)> {
        let mut out = Vec::new();
        for (_, a) in self.arcs() {
            let steps = ((a.length() / spacing).ceil() as usize).max(1);
            for s in 0..=steps {
                out.push((a.owner, a.point_at(a.sweep * s as f64 / steps as f64)));
            }
        }
        out
    }
}

/// Intersection of the radius-`r` geodesic disks around `sites`, or `None`
/// when it is empty.
pub fn disks_intersection(tp: &TriangulatedPolygon, sites: &[Point2], r: f64) -> Result<Option<ArcBoundary>> {
    let geo = sites.iter().map(|&s| GeodesicSite::new(tp, s)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&GeodesicSite> = geo.iter().collect();
    let oc = one_center(tp, sites)?;
    intersection_of(tp, &refs, r, oc.radius, oc.center)
}

/// [`disks_intersection`] over prepared sites, given their one-center.
pub(crate) fn intersection_of(
    tp: &TriangulatedPolygon,
    sites: &[&GeodesicSite],
    r: f64,
    oc_radius: f64,
    oc_center: Point2,
) -> Result<Option<ArcBoundary>> {
    let sc = scale(tp);
    let tol = ON_CIRCLE * sc;
    let points: Vec<Point2> = sites.iter().map(|s| s.point).collect();
    if oc_radius > r + tol {
        return Ok(None);
    }
    let mut arcs: Vec<CircularArc> = Vec::new();
    for (k, s) in sites.iter().enumerate() {
        for arc in circle_arcs(tp, s, k, r)? {
            arcs.extend(clip_arc(tp, sites, k, &arc, r)?);
        }
    }
    if arcs.is_empty() {
        if oc_radius >= r - JOIN * sc {
            // The intersection has shrunk to (about) the one-center itself.
            let mut owner = 0;
            let mut far = f64::NEG_INFINITY;
            for (k, s) in sites.iter().enumerate() {
                let d = geodesic_distance(tp, s.point, oc_center)?;
                if d > far {
                    (owner, far) = (k, d);
                }
            }
            let site = sites[owner];
            let path = crate::geodesic::shortest_path(tp, site.point, oc_center)?;
            let anchor = path.last_bend();
            let arc = CircularArc {
                anchor,
                euclid_radius: anchor.dist(oc_center),
                start: oc_center.angle_from(anchor),
                sweep: 0.0,
                owner,
                owner_point: site.point,
            };
            return Ok(Some(ArcBoundary::new(vec![BoundaryElement::Arc(arc)], r, points, true)));
        }
        // No circle reaches inside the polygon: the intersection is all of it.
        let mut walk: Vec<Point2> = tp.polygon().vertices().to_vec();
        walk.reverse();
        walk.push(walk[0]);
        return Ok(Some(ArcBoundary::new(vec![BoundaryElement::Chain(walk)], r, points, true)));
    }
    let (elements, ordered) = chain_arcs(tp, arcs);
    if !ordered {
        log::warn!("intersection boundary arcs could not be chained into one curve");
    }
    Ok(Some(ArcBoundary::new(elements, r, points, ordered)))
}

/// Offsets on `arc` where the geodesic circle of `site` may cross it, plus
/// a flag telling whether `site` covers the whole arc (`Some(true)`) or
/// misses it entirely (`Some(false)`).
fn crossing_offsets(
    tp: &TriangulatedPolygon,
    site: &GeodesicSite,
    arc: &CircularArc,
    r: f64,
    tol: f64,
) -> Result<(Option<bool>, Vec<f64>)> {
    let w = arc.anchor;
    if site.point.dist(w) - arc.euclid_radius > r + tol {
        return Ok((Some(false), Vec::new()));
    }
    let dw = geodesic_distance(tp, site.point, w)?;
    if dw + arc.euclid_radius <= r + tol {
        return Ok((Some(true), Vec::new()));
    }
    let mut cuts = Vec::new();
    let own = arc.circle();
    for (_, c) in site.circles(r) {
        for ang in own.intersect_circle(&c) {
            if let Some(t) = arc.offset_of(ang, 1e-12) {
                cuts.push(t);
            }
        }
    }
    Ok((None, cuts))
}

fn sorted_cuts(mut cuts: Vec<f64>, sweep: f64) -> Vec<f64> {
    cuts.push(0.0);
    cuts.push(sweep);
    cuts.retain(|&t| (0.0..=sweep).contains(&t));
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|x, y| (*x - *y).abs() < 1e-13);
    cuts
}

/// Parts of `arc` (owned by `sites[owner]`) inside every other disk.
fn clip_arc(
    tp: &TriangulatedPolygon,
    sites: &[&GeodesicSite],
    owner: usize,
    arc: &CircularArc,
    r: f64,
) -> Result<Vec<CircularArc>> {
    let tol = ON_CIRCLE * scale(tp);
    let mut active: Vec<usize> = Vec::new();
    let mut cuts: Vec<f64> = Vec::new();
    for (k, s) in sites.iter().enumerate() {
        if k == owner {
            continue;
        }
        match crossing_offsets(tp, s, arc, r, tol)? {
            (Some(false), _) => return Ok(Vec::new()),
            (Some(true), _) => {}
            (None, c) => {
                active.push(k);
                cuts.extend(c);
            }
        }
    }
    if active.is_empty() {
        return Ok(vec![*arc]);
    }
    let full = arc.is_full_circle();
    let cuts = sorted_cuts(cuts, arc.sweep);
    let mut keep: Vec<(f64, f64)> = Vec::new();
    for w in cuts.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        if t1 - t0 <= 1e-14 {
            continue;
        }
        let m = arc.point_at(0.5 * (t0 + t1));
        let mut inside = true;
        for &k in &active {
            let d = geodesic_distance(tp, sites[k].point, m)?;
            // Coincident circles: the smaller site index owns the arc.
            if d > r + tol || (k < owner && (d - r).abs() <= tol) {
                inside = false;
                break;
            }
        }
        if inside {
            match keep.last_mut() {
                Some(last) if last.1 == t0 => last.1 = t1,
                _ => keep.push((t0, t1)),
            }
        }
    }
    if full && keep.len() >= 2 && keep[0].0 == 0.0 && keep.last().unwrap().1 == arc.sweep {
        // Rejoin the run that crosses the arbitrary start of a full circle.
        let (l0, _) = keep.pop().unwrap();
        keep[0] = (l0, keep[0].1 + TAU);
    }
    Ok(keep.into_iter().map(|(t0, t1)| arc.sub(t0, t1)).collect())
}

/// Order arcs clockwise along the intersection boundary, inserting walks
/// along the polygon boundary between arcs that do not meet directly.
fn chain_arcs(tp: &TriangulatedPolygon, arcs: Vec<CircularArc>) -> (Vec<BoundaryElement>, bool) {
    let poly = tp.polygon();
    let join = JOIN * scale(tp);
    let n = arcs.len();
    if n == 1 && arcs[0].is_full_circle() {
        return (vec![BoundaryElement::Arc(arcs[0])], true);
    }
    let perim = poly.perimeter();
    let on_boundary = |p: Point2| poly.boundary_distance(p) <= join;
    let mut used = vec![false; n];
    used[0] = true;
    let mut order = vec![0usize];
    let mut chains: Vec<Option<Vec<Point2>>> = Vec::new();
    let mut ordered = true;
    let mut cur = 0;
    loop {
        let e = arcs[cur].end_point();
        let open = |b: usize| b == 0 || !used[b];
        let direct = (0..n)
            .filter(|&b| open(b) && b != cur)
            .map(|b| (b, arcs[b].start_point().dist(e)))
            .filter(|&(_, d)| d <= join)
            .min_by(|x, y| x.1.total_cmp(&y.1));
        let (next, chain) = if let Some((b, _)) = direct {
            (b, None)
        } else if on_boundary(e) {
            let pe = poly.boundary_param(e);
            let best = (0..n)
                .filter(|&b| open(b) && on_boundary(arcs[b].start_point()))
                .map(|b| {
                    let ps = poly.boundary_param(arcs[b].start_point());
                    (b, cw_gap(pe, ps, perim, join))
                })
                .min_by(|x, y| x.1.total_cmp(&y.1));
            match best {
                Some((b, _)) => (b, Some(boundary_walk(tp, e, arcs[b].start_point()))),
                None => {
                    ordered = false;
                    break;
                }
            }
        } else {
            ordered = false;
            break;
        };
        chains.push(chain);
        if next == 0 {
            break;
        }
        used[next] = true;
        order.push(next);
        cur = next;
    }
    if !ordered || used.iter().any(|&u| !u) {
        // Fall back to the raw list; callers check `ordered`.
        let elements = arcs.into_iter().map(BoundaryElement::Arc).collect();
        return (elements, false);
    }
    let mut elements = Vec::with_capacity(2 * n);
    for (k, &a) in order.iter().enumerate() {
        elements.push(BoundaryElement::Arc(arcs[a]));
        if let Some(c) = &chains[k] {
            elements.push(BoundaryElement::Chain(c.clone()));
        }
    }
    (elements, true)
}

/// Clockwise boundary distance from parameter `pe` to `ps`.
fn cw_gap(pe: f64, ps: f64, perim: f64, tol: f64) -> f64 {
    let g = (pe - ps).rem_euclid(perim);
    if g > perim - tol {
        0.0
    } else {
        g
    }
}

/// Clockwise walk along the polygon boundary from `e` to `s`.
fn boundary_walk(tp: &TriangulatedPolygon, e: Point2, s: Point2) -> Vec<Point2> {
    let poly = tp.polygon();
    let perim = poly.perimeter();
    let tol = JOIN * scale(tp);
    let pe = poly.boundary_param(e);
    let gap = cw_gap(pe, poly.boundary_param(s), perim, tol);
    let mut verts: Vec<(f64, Point2)> = Vec::new();
    let mut acc = 0.0;
    for (a, b) in poly.edges() {
        let g = cw_gap(pe, acc, perim, tol);
        if g > tol && g < gap - tol {
            verts.push((g, a));
        }
        acc += a.dist(b);
    }
    verts.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut out = vec![e];
    out.extend(verts.into_iter().map(|(_, p)| p));
    out.push(s);
    out
}

/// Where `D_r(q)` meets the arcs of a boundary.
#[derive(Clone, Debug, PartialEq)]
pub enum Coverage {
    /// Every arc lies in the disk.
    Covers,
    /// No arc point lies in the disk.
    Disjoint,
    /// Maximal runs of arc points inside the disk, each from its entry to its
    /// exit in clockwise order (gaps made of polygon-boundary walks do not
    /// split a run).
    Blocks(Vec<(BoundaryPos, BoundaryPos)>),
}

/// Offsets on `arc` where the point lies in `D_r(site)`, as closed intervals.
fn inside_intervals(
    tp: &TriangulatedPolygon,
    site: &GeodesicSite,
    arc: &CircularArc,
    r: f64,
    tol: f64,
) -> Result<Vec<(f64, f64)>> {
    if arc.sweep == 0.0 {
        let d = geodesic_distance(tp, site.point, arc.start_point())?;
        return Ok(if d <= r + tol { vec![(0.0, 0.0)] } else { Vec::new() });
    }
    let cuts = match crossing_offsets(tp, site, arc, r, tol)? {
        (Some(true), _) => return Ok(vec![(0.0, arc.sweep)]),
        (Some(false), _) => return Ok(Vec::new()),
        (None, c) => sorted_cuts(c, arc.sweep),
    };
    let mut out: Vec<(f64, f64)> = Vec::new();
    for w in cuts.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        if t1 - t0 <= 1e-14 {
            continue;
        }
        let m = arc.point_at(0.5 * (t0 + t1));
        if geodesic_distance(tp, site.point, m)? <= r + tol {
            match out.last_mut() {
                Some(last) if last.1 == t0 => last.1 = t1,
                _ => out.push((t0, t1)),
            }
        }
    }
    Ok(out)
}

/// Coverage of the boundary's arcs by `D_r(site)`, with `r` the boundary's
/// radius and `tol` the containment slack.
pub(crate) fn coverage_of(
    tp: &TriangulatedPolygon,
    boundary: &ArcBoundary,
    site: &GeodesicSite,
    tol: f64,
) -> Result<Coverage> {
    let r = boundary.radius;
    let arcs: Vec<(usize, &CircularArc)> = boundary.arcs().collect();
    if arcs.is_empty() {
        return Ok(Coverage::Disjoint);
    }
    // Runs as (arc ordinal, t0, arc ordinal, t1).
    let mut runs: Vec<(usize, f64, usize, f64)> = Vec::new();
    let mut all_full = true;
    for (ord, (_, arc)) in arcs.iter().enumerate() {
        let iv = inside_intervals(tp, site, arc, r, tol)?;
        if !(iv.len() == 1 && iv[0].0 == 0.0 && iv[0].1 == arc.sweep) {
            all_full = false;
        }
        for (t0, t1) in iv {
            match runs.last_mut() {
                Some(last) if last.2 + 1 == ord && last.3 == arcs[last.2].1.sweep && t0 == 0.0 => {
                    last.2 = ord;
                    last.3 = t1;
                }
                _ => runs.push((ord, t0, ord, t1)),
            }
        }
    }
    if all_full {
        return Ok(Coverage::Covers);
    }
    if runs.is_empty() {
        return Ok(Coverage::Disjoint);
    }
    // A run reaching the end of the last arc continues into the first arc.
    let last_ord = arcs.len() - 1;
    if runs.len() >= 2 {
        let (first, last) = (runs[0], *runs.last().unwrap());
        if last.2 == last_ord && last.3 == arcs[last_ord].1.sweep && first.0 == 0 && first.1 == 0.0 {
            runs.pop();
            runs[0] = (last.0, last.1, first.2, first.3);
        }
    }
    let pos = |ord: usize, t: f64| BoundaryPos { element: arcs[ord].0, t };
    Ok(Coverage::Blocks(runs.into_iter().map(|(a, t0, b, t1)| (pos(a, t0), pos(b, t1))).collect()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    In,
    Out,
}

/// A point where an interior point's disk starts or stops covering the arcs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Event {
    pub position: Point2,
    /// Index into the interior point list.
    pub owner: usize,
    pub flag: Flag,
    /// Clockwise arc length from the reference point.
    pub param: f64,
    pub at: BoundaryPos,
}

/// Events of a family of interior points on one boundary, plus the points
/// whose disks contribute no events.
#[derive(Clone, Debug, Default)]
pub struct EventSet {
    /// Sorted by parameter; at equal parameters `In` comes first.
    pub events: Vec<Event>,
    pub covers: Vec<usize>,
    pub disjoint: Vec<usize>,
    /// Points whose disks meet the arcs in more than one run.
    pub irregular: Vec<usize>,
    /// Points whose run contains the reference point in its interior.
    pub straddling: Vec<usize>,
}

/// Clockwise parameter of `param` measured from `origin`.
pub(crate) fn relative_param(boundary: &ArcBoundary, origin: f64, param: f64) -> f64 {
    let len = boundary.length();
    if len <= 0.0 {
        return 0.0;
    }
    let rel = (param - origin).rem_euclid(len);
    if len - rel <= 1e-12 * len.max(1.0) {
        0.0
    } else {
        rel
    }
}

pub(crate) fn events_from(boundary: &ArcBoundary, coverage: &[Coverage], origin: f64) -> EventSet {
    let mut set = EventSet::default();
    for (q, cov) in coverage.iter().enumerate() {
        match cov {
            Coverage::Covers => set.covers.push(q),
            Coverage::Disjoint => set.disjoint.push(q),
            Coverage::Blocks(blocks) => {
                if blocks.len() > 1 {
                    set.irregular.push(q);
                }
                for &(a, b) in blocks {
                    let pa = relative_param(boundary, origin, boundary.param(a));
                    let pb = relative_param(boundary, origin, boundary.param(b));
                    if pa > pb {
                        set.straddling.push(q);
                    }
                    set.events.push(Event { position: boundary.point(a), owner: q, flag: Flag::In, param: pa, at: a });
                    set.events.push(Event { position: boundary.point(b), owner: q, flag: Flag::Out, param: pb, at: b });
                }
            }
        }
    }
    set.events.sort_by(|x, y| x.param.total_cmp(&y.param).then(x.flag.cmp(&y.flag)).then(x.owner.cmp(&y.owner)));
    set
}

/// Events of `interior` points on `boundary`, parameterized clockwise from
/// the boundary point `reference`.
pub fn compute_events(
    tp: &TriangulatedPolygon,
    boundary: &ArcBoundary,
    interior: &[Point2],
    reference: BoundaryPos,
) -> Result<EventSet> {
    let tol = ON_CIRCLE * scale(tp);
    let coverage = interior
        .iter()
        .map(|&q| coverage_of(tp, boundary, &GeodesicSite::new(tp, q)?, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(events_from(boundary, &coverage, boundary.param(reference)))
}
