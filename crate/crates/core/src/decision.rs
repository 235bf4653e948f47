//! Decision procedure: is `r` at least the optimal radius of the two-center
//! restricted to a partition pair `(i, j)`?
//!
//! A restricted two-center for `(i, j, r)` is a pair of centers whose radius-`r`
//! disks contain the chains `C(v_{j+1}, v_i)` and `C(v_{i+1}, v_j)`
//! respectively and together cover every point. The procedure runs a cascade
//! of cheap checks and falls through to a simultaneous scan of the events on
//! the two disk intersections.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::disk::{
    coverage_of, events_from, intersection_of, ArcBoundary, BoundaryPos, Coverage, EventSet, Flag, GeodesicSite,
};
use crate::error::{Error, Result};
use crate::geodesic::{geodesic_distance, shortest_path, GeodesicPath};
use crate::geometry::{orientation, Point2};
use crate::hull::{ChainPair, GeodesicHull};
use crate::one_center::{one_center, OneCenterResult};

/// Which step of the cascade settled a decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// One disk already covers the whole hull.
    HullRadius,
    /// Some optimal pair shares one of `v_i, v_{i+1}, v_j, v_{j+1}`.
    SharedVertex,
    /// One chain alone does not fit in a disk.
    IEmpty,
    /// No interior points to distribute.
    QiEmpty,
    /// No events on either intersection boundary.
    MBothEmpty,
    /// Events on one boundary only.
    MOneEmpty,
    /// Three-cursor event scan.
    Scan,
    /// All event pairs, when the boundary structure is irregular.
    EventPairs,
    /// Exhaustive split of the interior points.
    Exhaustive,
}

impl Branch {
    pub const ALL: [Branch; 9] = [
        Branch::HullRadius,
        Branch::SharedVertex,
        Branch::IEmpty,
        Branch::QiEmpty,
        Branch::MBothEmpty,
        Branch::MOneEmpty,
        Branch::Scan,
        Branch::EventPairs,
        Branch::Exhaustive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::HullRadius => "hull-radius",
            Branch::SharedVertex => "shared-vertex",
            Branch::IEmpty => "I-empty",
            Branch::QiEmpty => "QI-empty",
            Branch::MBothEmpty => "M-both-empty",
            Branch::MOneEmpty => "M-one-empty",
            Branch::Scan => "scan",
            Branch::EventPairs => "event-pairs",
            Branch::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecisionResult {
    pub feasible: bool,
    pub centers: Option<(Point2, Point2)>,
    /// Per input point: 1 or 2, the center serving it.
    pub assignment: Option<Vec<u8>>,
    pub branch: Branch,
}

/// Point on an intersection boundary from which every interior point's
/// entry event precedes its exit event clockwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReferencePoint {
    pub t: u8,
    pub position: Point2,
    pub at: BoundaryPos,
    /// Clockwise parameter of the point on its boundary.
    pub param: f64,
}

/// Relative slack added to every radius handed to [`Decider::decide`].
pub const DECISION_SLACK: f64 = 1e-9;
/// Relative containment tolerance inside a decision.
const CONTAIN: f64 = 1e-10;
/// Interior points beyond which the exhaustive fallback is refused.
const EXHAUSTIVE_LIMIT: usize = 20;

/// Shared state for many decisions on one hull: per-point shortest path
/// maps and memoized one-centers of point subsets.
pub struct Decider<'h> {
    hull: &'h GeodesicHull,
    sites: Vec<GeodesicSite>,
    memo: Mutex<HashMap<Vec<usize>, OneCenterResult>>,
    stats: Mutex<HashMap<Branch, u64>>,
    scale: f64,
    slack: f64,
}

impl<'h> Decider<'h> {
    pub fn new(hull: &'h GeodesicHull) -> Result<Self> {
        Self::with_slack(hull, DECISION_SLACK)
    }

    /// Like [`Decider::new`] with a custom relative slack (see
    /// [`Decider::slack`]); it must lie in `(0, 1e-3]`.
    pub fn with_slack(hull: &'h GeodesicHull, relative: f64) -> Result<Self> {
        if !(relative > 0.0 && relative <= 1e-3) {
            return Err(Error::InvalidConfig(format!("slack must lie in (0, 1e-3], got {relative}")));
        }
        let tp = hull.ambient();
        let sites = hull.points().iter().map(|&q| GeodesicSite::new(tp, q)).collect::<Result<Vec<_>>>()?;
        Ok(Decider {
            hull,
            sites,
            memo: Mutex::new(HashMap::new()),
            stats: Mutex::new(HashMap::new()),
            scale: tp.polygon().diameter().max(1.0),
            slack: relative,
        })
    }

    pub fn hull(&self) -> &GeodesicHull {
        self.hull
    }

    /// Number of decisions settled by each branch so far.
    pub fn branch_stats(&self) -> Vec<(Branch, u64)> {
        let stats = self.stats.lock().unwrap();
        Branch::ALL.iter().map(|&b| (b, stats.get(&b).copied().unwrap_or(0))).collect()
    }

    /// Radius added to each decision radius for numerical robustness.
    pub fn slack(&self) -> f64 {
        self.slack * self.scale
    }

    /// Length scale of the instance: `max(1, diameter of P)`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Geodesic distance in the ambient polygon.
    pub fn distance(&self, a: Point2, b: Point2) -> Result<f64> {
        self.dist(a, b)
    }

    fn tol(&self) -> f64 {
        CONTAIN.min(0.1 * self.slack) * self.scale
    }

    fn point(&self, q: usize) -> Point2 {
        self.hull.points()[q]
    }

    /// One-center of a set of point indices (memoized).
    pub fn one_center_of(&self, idx: &[usize]) -> Result<OneCenterResult> {
        let mut key = idx.to_vec();
        key.sort_unstable();
        key.dedup();
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let pts: Vec<Point2> = key.iter().map(|&q| self.point(q)).collect();
        let res = one_center(self.hull.ambient(), &pts)?;
        self.memo.lock().unwrap().insert(key, res.clone());
        Ok(res)
    }

    /// Point indices of the two chains of a pair.
    pub fn sides(&self, pair: ChainPair) -> Result<(Vec<usize>, Vec<usize>)> {
        let (s1, s2) = self.hull.pair_sides(pair)?;
        let ext = self.hull.extreme_indices();
        Ok((s1.iter().map(|&t| ext[t]).collect(), s2.iter().map(|&t| ext[t]).collect()))
    }

    fn dist(&self, a: Point2, b: Point2) -> Result<f64> {
        geodesic_distance(self.hull.ambient(), a, b)
    }

    /// Checks a candidate pair of centers at radius `r` and builds the result.
    fn witness(
        &self,
        q1: &[usize],
        q2: &[usize],
        c1: Point2,
        c2: Point2,
        r: f64,
        branch: Branch,
    ) -> Result<Option<DecisionResult>> {
        let tol = self.tol();
        for &q in q1 {
            if self.dist(c1, self.point(q))? > r + tol {
                return Ok(None);
            }
        }
        for &q in q2 {
            if self.dist(c2, self.point(q))? > r + tol {
                return Ok(None);
            }
        }
        let mut assignment = Vec::with_capacity(self.hull.points().len());
        for &q in self.hull.points() {
            let (d1, d2) = (self.dist(c1, q)?, self.dist(c2, q)?);
            if d1.min(d2) > r + tol {
                return Ok(None);
            }
            assignment.push(if d1 <= d2 { 1 } else { 2 });
        }
        for &q in q1 {
            assignment[q] = 1;
        }
        for &q in q2 {
            assignment[q] = 2;
        }
        Ok(Some(DecisionResult { feasible: true, centers: Some((c1, c2)), assignment: Some(assignment), branch }))
    }

    fn infeasible(&self, branch: Branch) -> DecisionResult {
        DecisionResult { feasible: false, centers: None, assignment: None, branch }
    }

    /// Restricted two-center in which the extreme at position `v` lies in
    /// both disks, if one exists at radius `r` (no slack added).
    pub fn shared_vertex_decide(&self, pair: ChainPair, r: f64, v: usize) -> Result<Option<(Point2, Point2)>> {
        let (q1, q2) = self.sides(pair)?;
        let tp = self.hull.ambient();
        let k = self.hull.k();
        let vi = self.hull.extreme_indices()[v % k];
        let vp = self.point(vi);
        let eps = tp.eps();
        let side_of = |q: usize| -> Option<u8> {
            if q1.contains(&q) {
                Some(1)
            } else if q2.contains(&q) {
                Some(2)
            } else {
                None
            }
        };
        // Points at the vertex itself belong to both disks.
        let mut both = vec![vi];
        let mut others: Vec<usize> = Vec::new();
        for q in 0..self.hull.points().len() {
            if q == vi {
                continue;
            }
            if self.point(q).dist(vp) <= eps {
                both.push(q);
            } else {
                others.push(q);
            }
        }
        let next = self.hull.extreme(v + 1);
        let order = geodesic_order(self.hull, vp, next, &others)?;
        let tol = self.tol();
        for cut in 0..=order.len() {
            let (a, b) = order.split_at(cut);
            for (sa, sb) in [(1u8, 2u8), (2, 1)] {
                if a.iter().any(|&q| side_of(q).is_some_and(|s| s != sa))
                    || b.iter().any(|&q| side_of(q).is_some_and(|s| s != sb))
                {
                    continue;
                }
                let mut g1: Vec<usize> = both.clone();
                let mut g2: Vec<usize> = both.clone();
                let (ga, gb) = if sa == 1 { (&mut g1, &mut g2) } else { (&mut g2, &mut g1) };
                ga.extend_from_slice(a);
                gb.extend_from_slice(b);
                let o1 = self.one_center_of(&g1)?;
                if o1.radius > r + tol {
                    continue;
                }
                let o2 = self.one_center_of(&g2)?;
                if o2.radius <= r + tol {
                    return Ok(Some((o1.center, o2.center)));
                }
            }
        }
        Ok(None)
    }

    /// Restricted feasibility by trying every split of the interior points.
    pub fn exhaustive_decide(&self, pair: ChainPair, r: f64) -> Result<Option<(Point2, Point2)>> {
        let (q1, q2) = self.sides(pair)?;
        let qi = self.hull.interior_indices();
        if qi.len() > EXHAUSTIVE_LIMIT {
            return Err(Error::TooLarge(qi.len()));
        }
        let tol = self.tol();
        for mask in 0u64..(1u64 << qi.len()) {
            let mut g1 = q1.clone();
            let mut g2 = q2.clone();
            for (b, &q) in qi.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g1.push(q);
                } else {
                    g2.push(q);
                }
            }
            let o1 = self.one_center_of(&g1)?;
            if o1.radius > r + tol {
                continue;
            }
            let o2 = self.one_center_of(&g2)?;
            if o2.radius <= r + tol {
                return Ok(Some((o1.center, o2.center)));
            }
        }
        Ok(None)
    }

    /// Optimal restricted radius by trying every split of the interior
    /// points (reference for tests).
    pub fn exhaustive_optimum(&self, pair: ChainPair) -> Result<f64> {
        let (q1, q2) = self.sides(pair)?;
        let qi = self.hull.interior_indices();
        if qi.len() > EXHAUSTIVE_LIMIT {
            return Err(Error::TooLarge(qi.len()));
        }
        let mut best = f64::INFINITY;
        for mask in 0u64..(1u64 << qi.len()) {
            let mut g1 = q1.clone();
            let mut g2 = q2.clone();
            for (b, &q) in qi.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g1.push(q);
                } else {
                    g2.push(q);
                }
            }
            let v = self.one_center_of(&g1)?.radius.max(self.one_center_of(&g2)?.radius);
            best = best.min(v);
        }
        Ok(best)
    }
}

/// Sort `targets` (point indices) clockwise around `v` by their geodesics
/// from `v`, starting from the direction of the geodesic to `next`.
fn geodesic_order(hull: &GeodesicHull, v: Point2, next: Point2, targets: &[usize]) -> Result<Vec<usize>> {
    let tp = hull.ambient();
    let first_dir = |p: &GeodesicPath| p.waypoints.get(1).map(|&w| w - v).unwrap_or_default();
    let base = first_dir(&shortest_path(tp, v, next)?);
    let base_angle = base.y.atan2(base.x);
    let paths: Vec<GeodesicPath> =
        targets.iter().map(|&q| shortest_path(tp, v, hull.points()[q])).collect::<Result<Vec<_>>>()?;
    let key = |p: &GeodesicPath| -> f64 {
        let d = first_dir(p);
        let k = (base_angle - d.y.atan2(d.x)).rem_euclid(std::f64::consts::TAU);
        if k > std::f64::consts::TAU - 1e-12 {
            0.0
        } else {
            k
        }
    };
    let mut idx: Vec<usize> = (0..targets.len()).collect();
    idx.sort_by(|&b, &c| {
        let (pb, pc) = (&paths[b].waypoints, &paths[c].waypoints);
        let closer = || paths[b].length.total_cmp(&paths[c].length);
        let Some(k) = (1..pb.len().min(pc.len())).find(|&k| pb[k] != pc[k]) else {
            return pb.len().cmp(&pc.len());
        };
        if k == 1 {
            let (kb, kc) = (key(&paths[b]), key(&paths[c]));
            if kb != kc {
                return kb.total_cmp(&kc);
            }
            return closer();
        }
        match orientation(pb[k - 1], pb[k], pc[k]) {
            -1 => std::cmp::Ordering::Less,
            1 => std::cmp::Ordering::Greater,
            _ => closer(),
        }
    });
    Ok(idx.into_iter().map(|t| targets[t]).collect())
}

/// Cursor position of the scan on the second boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
enum Cursor {
    Origin,
    Event(usize),
}

/// Boolean tables and counters for the three cursors of the scan.
struct ScanState {
    n: usize,
    c1: Vec<bool>,
    c2c: Vec<bool>,
    c2cc: Vec<bool>,
    union_c: Vec<bool>,
    union_cc: Vec<bool>,
    /// Counts for `c1`, `c2c`, `c2cc`, `c1 ∪ c2c`, `c1 ∪ c2cc`.
    counts: [usize; 5],
}

impl ScanState {
    fn new(n: usize, covers1: &[usize], covers2: &[usize]) -> Self {
        let mut s = ScanState {
            n,
            c1: vec![false; n],
            c2c: vec![false; n],
            c2cc: vec![false; n],
            union_c: vec![false; n],
            union_cc: vec![false; n],
            counts: [0; 5],
        };
        for &q in covers1 {
            s.set(0, q, true);
        }
        for &q in covers2 {
            s.set(1, q, true);
            s.set(2, q, true);
        }
        s
    }

    fn flip(table: &mut [bool], count: &mut usize, q: usize, value: bool) {
        if table[q] != value {
            table[q] = value;
            if value {
                *count += 1;
            } else {
                *count -= 1;
            }
        }
    }

    /// Update membership of `q` for cursor 0 (`c1`), 1 (`c2c`) or 2 (`c2cc`).
    fn set(&mut self, cursor: usize, q: usize, value: bool) {
        let table = match cursor {
            0 => &mut self.c1,
            1 => &mut self.c2c,
            _ => &mut self.c2cc,
        };
        Self::flip(table, &mut self.counts[cursor], q, value);
        let uc = self.c1[q] || self.c2c[q];
        let ucc = self.c1[q] || self.c2cc[q];
        Self::flip(&mut self.union_c, &mut self.counts[3], q, uc);
        Self::flip(&mut self.union_cc, &mut self.counts[4], q, ucc);
    }

    /// Which second cursor (if any) completes the cover with `c1`.
    fn decision(&self) -> Option<bool> {
        if self.counts[3] == self.n {
            Some(true)
        } else if self.counts[4] == self.n {
            Some(false)
        } else {
            None
        }
    }
}

/// Three-cursor scan over the sorted events of both boundaries. Returns the
/// event index of `c1` and the position of the second center.
fn scan_events(m1: &EventSet, m2: &EventSet, n: usize) -> Option<(usize, Cursor)> {
    let e1 = &m1.events;
    let e2 = &m2.events;
    let mut st = ScanState::new(n, &m1.covers, &m2.covers);
    // c2c has handled e2[..a]; c2cc has handled e2[b..].
    let mut a = 0;
    let mut b = e2.len();
    while a < b && e2[a].param == 0.0 && e2[a].flag == Flag::In {
        st.set(1, e2[a].owner, true);
        a += 1;
    }
    let pos_c = |a: usize| if a == 0 { Cursor::Origin } else { Cursor::Event(a - 1) };
    let pos_cc = |b: usize| if b == e2.len() { Cursor::Origin } else { Cursor::Event(b) };
    let hit = |st: &ScanState, e: usize, a: usize, b: usize| {
        st.decision().map(|clockwise| (e, if clockwise { pos_c(a) } else { pos_cc(b) }))
    };
    for (e, ev) in e1.iter().enumerate() {
        let q = ev.owner;
        if ev.flag == Flag::In {
            st.set(0, q, true);
            if let Some(w) = hit(&st, e, a, b) {
                return Some(w);
            }
            continue;
        }
        if let Some(w) = hit(&st, e, a, b) {
            return Some(w);
        }
        if !st.c2c[q] {
            loop {
                if a >= b {
                    return None;
                }
                let y = e2[a];
                a += 1;
                match y.flag {
                    Flag::In => {
                        st.set(1, y.owner, true);
                        if let Some(w) = hit(&st, e, a, b) {
                            return Some(w);
                        }
                        if y.owner == q {
                            break;
                        }
                    }
                    Flag::Out => {
                        if let Some(w) = hit(&st, e, a, b) {
                            return Some(w);
                        }
                        st.set(1, y.owner, false);
                    }
                }
            }
        }
        if !st.c2cc[q] {
            loop {
                if b <= a {
                    return None;
                }
                b -= 1;
                let y = e2[b];
                match y.flag {
                    Flag::Out => {
                        st.set(2, y.owner, true);
                        if let Some(w) = hit(&st, e, a, b) {
                            return Some(w);
                        }
                        if y.owner == q {
                            break;
                        }
                    }
                    Flag::In => {
                        if let Some(w) = hit(&st, e, a, b) {
                            return Some(w);
                        }
                        st.set(2, y.owner, false);
                    }
                }
            }
        }
        if let Some(w) = hit(&st, e, a, b) {
            return Some(w);
        }
        st.set(0, q, false);
    }
    None
}

/// Nearest position on the boundary to `x`.
fn nearest_position(boundary: &ArcBoundary, x: Point2) -> BoundaryPos {
    let mut best = (f64::INFINITY, BoundaryPos { element: 0, t: 0.0 });
    for (k, el) in boundary.elements.iter().enumerate() {
        match el {
            crate::disk::BoundaryElement::Arc(a) => {
                let ang = x.angle_from(a.anchor);
                let t = (a.start - ang).rem_euclid(std::f64::consts::TAU);
                let cands = [t.min(a.sweep), 0.0, a.sweep];
                for t in cands {
                    let d = a.point_at(t).dist(x);
                    if d < best.0 {
                        best = (d, BoundaryPos { element: k, t });
                    }
                }
            }
            crate::disk::BoundaryElement::Chain(c) => {
                let mut acc = 0.0;
                for w in c.windows(2) {
                    let (p, s) = crate::geometry::project_to_segment(x, w[0], w[1]);
                    let len = w[0].dist(w[1]);
                    let d = p.dist(x);
                    if d < best.0 {
                        best = (d, BoundaryPos { element: k, t: acc + s * len });
                    }
                    acc += len;
                }
            }
        }
    }
    best.1
}

/// First arc position at or clockwise after `pos`.
fn first_arc_from(boundary: &ArcBoundary, pos: BoundaryPos) -> BoundaryPos {
    let n = boundary.elements.len();
    if boundary.elements[pos.element].as_arc().is_some() {
        return pos;
    }
    (1..=n)
        .map(|s| (pos.element + s) % n)
        .find(|&k| boundary.elements[k].as_arc().is_some())
        .map(|k| BoundaryPos { element: k, t: 0.0 })
        .unwrap_or(pos)
}

impl Decider<'_> {
    /// Reference point on the boundary of the intersection for chain `t`,
    /// whose sites are the points `chain` (clockwise). The construction
    /// follows the arcs of the chain's end sites; if the result violates the
    /// ordering condition for some interior point, arc endpoints and run
    /// endpoints are searched for a valid one.
    pub fn reference_point(
        &self,
        boundary: &ArcBoundary,
        t: u8,
        chain: &[usize],
        coverage: &[Coverage],
    ) -> Result<Option<ReferencePoint>> {
        if boundary.arc_count() == 0 {
            return Err(Error::NoArcs);
        }
        let owners = boundary.owners();
        let make = |at: BoundaryPos| ReferencePoint { t, position: boundary.point(at), at, param: boundary.param(at) };
        let valid = |at: BoundaryPos| events_from(boundary, coverage, boundary.param(at)).straddling.is_empty();
        let on_chain: Vec<usize> = owners.iter().copied().filter(|&o| o < chain.len()).collect();
        let constructed = if owners.len() == 1 || on_chain.is_empty() {
            let v = boundary.arcs().next().unwrap().1.owner_point;
            first_arc_from(boundary, nearest_position(boundary, v))
        } else {
            let (u, w) = (*on_chain.iter().max().unwrap(), *on_chain.iter().min().unwrap());
            let n = boundary.elements.len();
            let w_el = boundary.arcs().find(|(_, a)| a.owner == w).map(|(k, _)| k).unwrap();
            let u_el = (1..=n)
                .map(|s| (w_el + n - s) % n)
                .find(|&k| boundary.elements[k].as_arc().is_some_and(|a| a.owner == u));
            match u_el {
                Some(k) => BoundaryPos { element: k, t: boundary.elements[k].as_arc().unwrap().sweep },
                None => BoundaryPos { element: w_el, t: 0.0 },
            }
        };
        if valid(constructed) {
            return Ok(Some(make(constructed)));
        }
        log::debug!("constructed reference point invalid; searching arc endpoints");
        let mut cands: Vec<BoundaryPos> = Vec::new();
        for (k, a) in boundary.arcs() {
            cands.push(BoundaryPos { element: k, t: 0.0 });
            cands.push(BoundaryPos { element: k, t: a.sweep });
        }
        for cov in coverage {
            if let Coverage::Blocks(bl) = cov {
                for &(s, e) in bl {
                    cands.push(s);
                    cands.push(e);
                }
            }
        }
        Ok(cands.into_iter().find(|&c| valid(c)).map(make))
    }

    /// Witness search over every pair of event positions.
    fn event_pairs(&self, m1: &EventSet, m2: &EventSet, qi: &[usize], r: f64) -> Result<Option<(Point2, Point2)>> {
        let tol = self.tol();
        let cover = |events: &EventSet| -> Result<Vec<(Point2, Vec<bool>)>> {
            let mut out: Vec<(Point2, Vec<bool>)> = Vec::new();
            for ev in &events.events {
                if out.iter().any(|(p, _)| *p == ev.position) {
                    continue;
                }
                let mut c = Vec::with_capacity(qi.len());
                for &q in qi {
                    c.push(self.dist(ev.position, self.point(q))? <= r + tol);
                }
                out.push((ev.position, c));
            }
            Ok(out)
        };
        let (c1, c2) = (cover(m1)?, cover(m2)?);
        for (x, a) in &c1 {
            for (y, b) in &c2 {
                if a.iter().zip(b).all(|(u, v)| *u || *v) {
                    return Ok(Some((*x, *y)));
                }
            }
        }
        Ok(None)
    }

    /// Decide whether `r` is at least the optimal restricted radius of `pair`.
    pub fn decide(&self, pair: ChainPair, r: f64) -> Result<DecisionResult> {
        let res = self.decide_inner(pair, r)?;
        *self.stats.lock().unwrap().entry(res.branch).or_insert(0) += 1;
        Ok(res)
    }

    fn decide_inner(&self, pair: ChainPair, r: f64) -> Result<DecisionResult> {
        let (q1, q2) = self.sides(pair)?;
        let tp = self.hull.ambient();
        let re = r + self.slack();
        let tol = self.tol();
        let k = self.hull.k();

        let hull_oc = self.one_center_of(self.hull.extreme_indices())?;
        if hull_oc.radius <= re + tol {
            if let Some(w) = self.witness(&q1, &q2, hull_oc.center, hull_oc.center, re, Branch::HullRadius)? {
                return Ok(w);
            }
        }

        let mut shared = vec![pair.i % k, (pair.i + 1) % k, pair.j % k, (pair.j + 1) % k];
        shared.dedup();
        shared.sort_unstable();
        shared.dedup();
        for v in shared {
            if let Some((c1, c2)) = self.shared_vertex_decide(pair, re, v)? {
                if let Some(w) = self.witness(&q1, &q2, c1, c2, re, Branch::SharedVertex)? {
                    return Ok(w);
                }
            }
        }

        // A point whose disk misses one intersection boundary can only be
        // served by the other center: fold it into that side's sites.
        let (mut g1, mut g2) = (q1.clone(), q2.clone());
        let mut free: Vec<usize> = self.hull.interior_indices().to_vec();
        let (b1, b2, cov1, cov2) = loop {
            let (o1, o2) = (self.one_center_of(&g1)?, self.one_center_of(&g2)?);
            if o1.radius > re + tol || o2.radius > re + tol {
                return Ok(self.infeasible(Branch::IEmpty));
            }
            if free.is_empty() {
                return self.checked(&q1, &q2, o1.center, o2.center, re, Branch::QiEmpty, pair);
            }
            let sites1: Vec<&GeodesicSite> = g1.iter().map(|&q| &self.sites[q]).collect();
            let sites2: Vec<&GeodesicSite> = g2.iter().map(|&q| &self.sites[q]).collect();
            let b1 = intersection_of(tp, &sites1, re, o1.radius, o1.center)?;
            let b2 = intersection_of(tp, &sites2, re, o2.radius, o2.center)?;
            let (Some(b1), Some(b2)) = (b1, b2) else {
                return Ok(self.infeasible(Branch::IEmpty));
            };
            if b1.arc_count() == 0 || b2.arc_count() == 0 {
                return self.exhaustive_fallback(pair, &q1, &q2, re);
            }
            let cov1 = free.iter().map(|&q| coverage_of(tp, &b1, &self.sites[q], tol)).collect::<Result<Vec<_>>>()?;
            let cov2 = free.iter().map(|&q| coverage_of(tp, &b2, &self.sites[q], tol)).collect::<Result<Vec<_>>>()?;
            let mut moved = false;
            let mut rest = Vec::with_capacity(free.len());
            for (x, &q) in free.iter().enumerate() {
                match (&cov1[x], &cov2[x]) {
                    (Coverage::Disjoint, Coverage::Disjoint) => return Ok(self.infeasible(Branch::IEmpty)),
                    (Coverage::Disjoint, _) => g2.push(q),
                    (_, Coverage::Disjoint) => g1.push(q),
                    _ => {
                        rest.push(q);
                        continue;
                    }
                }
                moved = true;
            }
            if !moved {
                break (b1, b2, cov1, cov2);
            }
            free = rest;
        };
        let qi = free;
        let quiet = |c: &Coverage| matches!(c, Coverage::Covers);
        let (m1_empty, m2_empty) = (cov1.iter().all(quiet), cov2.iter().all(quiet));
        let arc_point = |b: &ArcBoundary| b.arcs().next().unwrap().1.start_point();

        if m1_empty || m2_empty {
            // Every remaining point lies in each disk centered on the quiet
            // boundary, so any two boundary points serve.
            let branch = if m1_empty && m2_empty { Branch::MBothEmpty } else { Branch::MOneEmpty };
            return self.checked(&q1, &q2, arc_point(&b1), arc_point(&b2), re, branch, pair);
        }

        let regular = |b: &ArcBoundary, cov: &[Coverage]| {
            b.ordered && cov.iter().all(|c| !matches!(c, Coverage::Blocks(bl) if bl.len() > 1))
        };
        if regular(&b1, &cov1) && regular(&b2, &cov2) {
            let o1 = self.reference_point(&b1, 1, &g1[..q1.len()], &cov1)?;
            let o2 = self.reference_point(&b2, 2, &g2[..q2.len()], &cov2)?;
            if let (Some(o1), Some(o2)) = (o1, o2) {
                let m1 = events_from(&b1, &cov1, o1.param);
                let m2 = events_from(&b2, &cov2, o2.param);
                return match scan_events(&m1, &m2, qi.len()) {
                    None => Ok(self.infeasible(Branch::Scan)),
                    Some((e, c)) => {
                        let c1 = m1.events[e].position;
                        let c2 = match c {
                            Cursor::Origin => o2.position,
                            Cursor::Event(y) => m2.events[y].position,
                        };
                        match self.witness(&q1, &q2, c1, c2, re, Branch::Scan)? {
                            Some(w) => Ok(w),
                            None => {
                                log::warn!("scan witness failed its check; trying all event pairs");
                                self.pairs_decide(&b1, &b2, &cov1, &cov2, &q1, &q2, &qi, re)
                            }
                        }
                    }
                };
            }
        }
        self.pairs_decide(&b1, &b2, &cov1, &cov2, &q1, &q2, &qi, re)
    }

    #[allow(clippy::too_many_arguments)]
    fn pairs_decide(
        &self,
        b1: &ArcBoundary,
        b2: &ArcBoundary,
        cov1: &[Coverage],
        cov2: &[Coverage],
        q1: &[usize],
        q2: &[usize],
        qi: &[usize],
        re: f64,
    ) -> Result<DecisionResult> {
        let m1 = events_from(b1, cov1, 0.0);
        let m2 = events_from(b2, cov2, 0.0);
        match self.event_pairs(&m1, &m2, qi, re)? {
            Some((c1, c2)) => {
                Ok(self.witness(q1, q2, c1, c2, re, Branch::EventPairs)?.unwrap_or(self.infeasible(Branch::EventPairs)))
            }
            None => Ok(self.infeasible(Branch::EventPairs)),
        }
    }

    /// Witness check for the quiet branches, falling back to the exhaustive
    /// split when the witness fails numerically.
    #[allow(clippy::too_many_arguments)]
    fn checked(
        &self,
        q1: &[usize],
        q2: &[usize],
        c1: Point2,
        c2: Point2,
        re: f64,
        branch: Branch,
        pair: ChainPair,
    ) -> Result<DecisionResult> {
        match self.witness(q1, q2, c1, c2, re, branch)? {
            Some(w) => Ok(w),
            None => {
                log::warn!("{} witness failed its check; splitting exhaustively", branch.name());
                self.exhaustive_fallback(pair, q1, q2, re)
            }
        }
    }

    fn exhaustive_fallback(&self, pair: ChainPair, q1: &[usize], q2: &[usize], re: f64) -> Result<DecisionResult> {
        match self.exhaustive_decide(pair, re) {
            Ok(Some((c1, c2))) => {
                Ok(self.witness(q1, q2, c1, c2, re, Branch::Exhaustive)?.unwrap_or(self.infeasible(Branch::Exhaustive)))
            }
            Ok(None) => Ok(self.infeasible(Branch::Exhaustive)),
            Err(Error::TooLarge(_)) => {
                log::warn!("too many interior points for the exhaustive split; reporting infeasible");
                Ok(self.infeasible(Branch::Exhaustive))
            }
            Err(e) => Err(e),
        }
    }
}

/// One-shot decision for a pair `(i, j)` at radius `r`.
pub fn decide(h: &GeodesicHull, i: usize, j: usize, r: f64) -> Result<DecisionResult> {
    Decider::new(h)?.decide(ChainPair { i, j }, r)
}

/// Scan two event lists sorted from their reference points; returns the
/// positions of a covering pair of centers, if the scan finds one.
pub fn scan_decide(m1: &EventSet, m2: &EventSet, interior_count: usize, origin2: Point2) -> Option<(Point2, Point2)> {
    scan_events(m1, m2, interior_count).map(|(e, c)| {
        let c2 = match c {
            Cursor::Origin => origin2,
            Cursor::Event(y) => m2.events[y].position,
        };
        (m1.events[e].position, c2)
    })
}
