//! Simple polygons: validation, normalization and point classification.

use crate::error::{Error, Result};
use crate::geometry::{orientation, project_to_segment, segment_distance, segments_intersect, Point2, EPS_GEOM};

/// Result of [`SimplePolygon::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// A simple polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplePolygon {
    vertices: Vec<Point2>,
    diameter: f64,
}

impl SimplePolygon {
    /// Validates and normalizes `vertices`: consecutive duplicates (within
    /// the coincidence tolerance) and straight-angle vertices are merged and
    /// clockwise input is reversed.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidPolygon(format!("non-finite vertex {p:?}")));
        }
        let diameter = bbox_diameter(&vertices);
        let eps = EPS_GEOM * diameter.max(1.0);

        let mut vs: Vec<Point2> = Vec::with_capacity(vertices.len());
        for &p in &vertices {
            if vs.last().is_none_or(|q: &Point2| q.dist(p) > eps) {
                vs.push(p);
            }
        }
        while vs.len() > 1 && vs[0].dist(*vs.last().unwrap()) <= eps {
            vs.pop();
        }
        // Drop vertices lying strictly between their neighbours.
        let mut changed = true;
        while changed && vs.len() >= 3 {
            changed = false;
            let n = vs.len();
            for i in 0..n {
                let (a, b, c) = (vs[(i + n - 1) % n], vs[i], vs[(i + 1) % n]);
                if orientation(a, b, c) == 0 && (b - a).dot(c - b) > 0.0 {
                    vs.remove(i);
                    changed = true;
                    break;
                }
            }
        }
        if vs.len() < 3 {
            return Err(Error::InvalidPolygon(format!("need at least 3 distinct vertices, got {}", vs.len())));
        }
        let area = signed_area(&vs);
        if area == 0.0 {
            return Err(Error::InvalidPolygon("zero area".into()));
        }
        if area < 0.0 {
            log::warn!("polygon given in clockwise order; reversing");
            vs.reverse();
        }
        check_simple(&vs)?;
        Ok(SimplePolygon { vertices: vs, diameter })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Point2, Point2) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    /// Diagonal of the bounding box.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Absolute coincidence tolerance scaled to this instance.
    pub fn eps(&self) -> f64 {
        EPS_GEOM * self.diameter.max(1.0)
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        let n = self.len();
        orientation(self.vertex(i + n - 1), self.vertex(i), self.vertex(i + 1)) < 0
    }

    pub fn boundary_distance(&self, x: Point2) -> f64 {
        self.edges().map(|(a, b)| segment_distance(x, a, b)).fold(f64::INFINITY, f64::min)
    }

    /// Crossing-number classification with a boundary band of width
    /// [`SimplePolygon::eps`].
    pub fn classify(&self, x: Point2) -> Containment {
        if self.boundary_distance(x) <= self.eps() {
            return Containment::Boundary;
        }
        if self.crossing_parity(x) {
            Containment::Inside
        } else {
            Containment::Outside
        }
    }

    pub fn contains(&self, x: Point2) -> bool {
        self.classify(x) != Containment::Outside
    }

    /// Strict interior test without a tolerance band (exact crossing number,
    /// boundary points count as outside).
    pub fn strictly_contains(&self, x: Point2) -> bool {
        if self.edges().any(|(a, b)| orientation(a, b, x) == 0 && crate::geometry::on_segment(x, a, b)) {
            return false;
        }
        self.crossing_parity(x)
    }

    fn crossing_parity(&self, x: Point2) -> bool {
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.y > x.y) != (b.y > x.y) {
                // Orientation decides the side exactly.
                let o = orientation(a, b, x);
                let upward = b.y > a.y;
                if (upward && o > 0) || (!upward && o < 0) {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Position of a boundary point as `(edge, t)`, choosing the nearest edge.
    pub fn locate_on_boundary(&self, x: Point2) -> (usize, f64) {
        let mut best = (0, 0.0, f64::INFINITY);
        for (i, (a, b)) in self.edges().enumerate() {
            let (p, t) = project_to_segment(x, a, b);
            let d = p.dist(x);
            if d < best.2 {
                best = (i, t, d);
            }
        }
        (best.0, best.1)
    }

    /// Arc-length position along the counterclockwise boundary from vertex 0.
    pub fn boundary_param(&self, x: Point2) -> f64 {
        let (e, t) = self.locate_on_boundary(x);
        let mut s = 0.0;
        for i in 0..e {
            let (a, b) = self.edge(i);
            s += a.dist(b);
        }
        let (a, b) = self.edge(e);
        s + t * a.dist(b)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.dist(b)).sum()
    }
}

pub fn signed_area(vs: &[Point2]) -> f64 {
    let n = vs.len();
    0.5 * (0..n).map(|i| vs[i].cross(vs[(i + 1) % n])).sum::<f64>()
}

pub fn bbox_diameter(vs: &[Point2]) -> f64 {
    if vs.is_empty() {
        return 0.0;
    }
    let (mut lo, mut hi) = (vs[0], vs[0]);
    for p in vs {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    lo.dist(hi)
}

fn check_simple(vs: &[Point2]) -> Result<()> {
    let n = vs.len();
    for i in 0..n {
        let (a, b) = (vs[i], vs[(i + 1) % n]);
        for j in (i + 1)..n {
            let (c, d) = (vs[j], vs[(j + 1) % n]);
            let adjacent_next = j == i + 1;
            let adjacent_prev = i == 0 && j == n - 1;
            if adjacent_next || adjacent_prev {
                // Adjacent edges may only share their common endpoint.
                let (shared, other_a, other_b) = if adjacent_next { (b, a, d) } else { (a, b, c) };
                if orientation(other_a, shared, other_b) == 0 && (other_a - shared).dot(other_b - shared) > 0.0 {
                    return Err(Error::InvalidPolygon(format!("edges {i} and {j} fold back onto each other")));
                }
                continue;
            }
            if segments_intersect(a, b, c, d) {
                return Err(Error::InvalidPolygon(format!("edges {i} and {j} intersect")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq4() -> SimplePolygon {
        SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(4.0, 0.0),
            Point2::new(4.0, 4.0),
            Point2::new(0.0, 4.0),
        ])
        .unwrap()
    }

    fn l6() -> SimplePolygon {
        SimplePolygon::new(
            [(0.0, 0.0), (4.0, 0.0), (4.0, 2.0), (2.0, 2.0), (2.0, 4.0), (0.0, 4.0)].map(Point2::from).to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn classify_fixtures() {
        assert_eq!(sq4().classify(Point2::new(2.0, 2.0)), Containment::Inside);
        assert_eq!(sq4().classify(Point2::new(4.0, 2.0)), Containment::Boundary);
        assert_eq!(l6().classify(Point2::new(3.0, 3.0)), Containment::Outside);
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let p =
            SimplePolygon::new([(0.0, 0.0), (0.0, 4.0), (4.0, 4.0), (4.0, 0.0)].map(Point2::from).to_vec()).unwrap();
        assert!(p.area() > 0.0);
    }

    #[test]
    fn duplicates_and_straight_vertices_are_merged() {
        let p = SimplePolygon::new(
            [(0.0, 0.0), (2.0, 0.0), (4.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0), (0.0, 0.0)]
                .map(Point2::from)
                .to_vec(),
        )
        .unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn bowtie_is_rejected() {
        let err = SimplePolygon::new([(0.0, 0.0), (4.0, 4.0), (4.0, 0.0), (0.0, 4.0)].map(Point2::from).to_vec());
        assert!(matches!(err, Err(Error::InvalidPolygon(_))));
    }

    #[test]
    fn reflex_vertex_of_l6() {
        let p = l6();
        let reflex: Vec<usize> = (0..p.len()).filter(|&i| p.is_reflex(i)).collect();
        assert_eq!(reflex, vec![3]);
    }
}
