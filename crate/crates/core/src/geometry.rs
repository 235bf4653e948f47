//! Planar primitives: points, robust orientation, segments and circles.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Absolute coincidence tolerance for unit-scale instances. Callers scale it
/// by the instance diameter (see [`crate::polygon::SimplePolygon::eps`]).
pub const EPS_GEOM: f64 = 1e-9;

/// Relative tolerance for comparing geodesic distances.
pub const EPS_REL: f64 = 1e-9;

#[derive(Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3d cross product.
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        self + (o - self) * t
    }

    pub fn midpoint(self, o: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    pub fn from_polar(center: Point2, radius: f64, angle: f64) -> Point2 {
        Point2::new(center.x + radius * angle.cos(), center.y + radius * angle.sin())
    }

    /// Direction angle of `self - from`, in `[0, 2π)`.
    pub fn angle_from(self, from: Point2) -> f64 {
        normalize_angle((self.y - from.y).atan2(self.x - from.x))
    }

    pub fn abs_max(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2::new(x, y)
    }
}

/// Sign of the turn `a -> b -> c`: `+1` counterclockwise, `-1` clockwise,
/// `0` collinear.
///
/// Uses an adaptive-precision determinant, so the sign is exact for the
/// given floating-point inputs.
pub fn orientation(a: Point2, b: Point2, c: Point2) -> i8 {
    let det = robust::orient2d(
        robust::Coord { x: a.x, y: a.y },
        robust::Coord { x: b.x, y: b.y },
        robust::Coord { x: c.x, y: c.y },
    );
    if det > 0.0 {
        1
    } else if det < 0.0 {
        -1
    } else {
        0
    }
}

/// Orientation that reports collinear whenever `|cross| <= eps * scale`,
/// where scale is the largest coordinate magnitude involved.
pub fn orientation_tol(a: Point2, b: Point2, c: Point2, eps: f64) -> i8 {
    let cross = (b - a).cross(c - a);
    let scale = a.abs_max().max(b.abs_max()).max(c.abs_max()).max(1.0);
    if cross.abs() <= eps * scale * scale {
        0
    } else {
        orientation(a, b, c)
    }
}

/// Twice the signed area of the triangle `abc`.
pub fn cross3(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Closest point of segment `ab` to `p` and its parameter in `[0, 1]`.
pub fn project_to_segment(p: Point2, a: Point2, b: Point2) -> (Point2, f64) {
    let d = b - a;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return (a, 0.0);
    }
    let t = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    (a + d * t, t)
}

pub fn segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    project_to_segment(p, a, b).0.dist(p)
}

/// `true` when `p` lies on the closed segment `ab` (exact predicate).
pub fn on_segment(p: Point2, a: Point2, b: Point2) -> bool {
    orientation(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Proper crossing: the open segments share exactly one interior point.
pub fn segments_cross_properly(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Closed segments intersect (including touching and collinear overlap).
pub fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(c, a, b))
        || (o2 == 0 && on_segment(d, a, b))
        || (o3 == 0 && on_segment(a, c, d))
        || (o4 == 0 && on_segment(b, c, d))
}

/// Parameter `t` along the ray `origin + t * dir` where it meets segment `ab`,
/// together with the hit point. Parallel segments report no hit.
pub fn ray_segment_hit(origin: Point2, dir: Point2, a: Point2, b: Point2) -> Option<(f64, Point2)> {
    let e = b - a;
    let denom = dir.cross(e);
    if denom.abs() < 1e-300 {
        return None;
    }
    let w = a - origin;
    let t = w.cross(e) / denom;
    let s = w.cross(dir) / denom;
    if (-1e-12..=1.0 + 1e-12).contains(&s) {
        Some((t, origin + dir * t))
    } else {
        None
    }
}

/// Distance from `p` to the closed polyline through `pts`.
pub fn polyline_distance(p: Point2, pts: &[Point2]) -> f64 {
    match pts.len() {
        0 => f64::INFINITY,
        1 => p.dist(pts[0]),
        _ => pts.windows(2).map(|w| segment_distance(p, w[0], w[1])).fold(f64::INFINITY, f64::min),
    }
}

/// Winding number of the closed cycle `pts` (last vertex joins the first)
/// around `p`. Exact for points off the cycle.
pub fn winding_number(p: Point2, pts: &[Point2]) -> i32 {
    let n = pts.len();
    let mut w = 0;
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        if a.y <= p.y {
            if b.y > p.y && orientation(a, b, p) > 0 {
                w += 1;
            }
        } else if b.y <= p.y && orientation(a, b, p) < 0 {
            w -= 1;
        }
    }
    w
}

/// Euclidean circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Self {
        Circle { center, radius }
    }

    pub fn point_at(&self, angle: f64) -> Point2 {
        Point2::from_polar(self.center, self.radius, angle)
    }

    /// Angles (on `self`) of the intersections with `other`. Tangency
    /// returns a single angle; concentric or disjoint circles return none.
    pub fn intersect_circle(&self, other: &Circle) -> Vec<f64> {
        let d = other.center - self.center;
        let dist = d.norm();
        if dist == 0.0 {
            return Vec::new();
        }
        let (r0, r1) = (self.radius, other.radius);
        let scale = dist.max(r0).max(r1);
        if dist > r0 + r1 + 1e-14 * scale || dist < (r0 - r1).abs() - 1e-14 * scale {
            return Vec::new();
        }
        let base = d.y.atan2(d.x);
        let cos_a = ((dist * dist + r0 * r0 - r1 * r1) / (2.0 * dist * r0)).clamp(-1.0, 1.0);
        let a = cos_a.acos();
        if a == 0.0 {
            return vec![normalize_angle(base)];
        }
        vec![normalize_angle(base - a), normalize_angle(base + a)]
    }

    /// Angles of the intersections with the closed segment `ab`.
    pub fn intersect_segment(&self, a: Point2, b: Point2) -> Vec<f64> {
        let d = b - a;
        let f = a - self.center;
        let qa = d.dot(d);
        if qa == 0.0 {
            return Vec::new();
        }
        let qb = 2.0 * f.dot(d);
        let qc = f.dot(f) - self.radius * self.radius;
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < 0.0 {
            return Vec::new();
        }
        let sq = disc.sqrt();
        let mut out = Vec::with_capacity(2);
        for t in [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)] {
            if (-1e-12..=1.0 + 1e-12).contains(&t) {
                let p = a + d * t.clamp(0.0, 1.0);
                out.push(p.angle_from(self.center));
            }
        }
        out
    }
}
