//! Ear-clipping triangulation and its dual tree.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geometry::{orientation, segment_distance, Point2};
use crate::polygon::SimplePolygon;

/// A simple polygon together with a triangulation and the dual tree.
#[derive(Clone, Debug)]
pub struct TriangulatedPolygon {
    polygon: SimplePolygon,
    triangles: Vec<[usize; 3]>,
    /// `neighbors[t][e]` is the triangle across edge `e` (from corner `e` to
    /// corner `e + 1`) of triangle `t`.
    neighbors: Vec<[Option<usize>; 3]>,
    /// `next_hop[a * T + b]`: neighbour of `a` on the dual-tree path to `b`.
    next_hop: Vec<u32>,
    reflex: Vec<bool>,
}

impl TriangulatedPolygon {
    pub fn new(polygon: SimplePolygon) -> Result<Self> {
        let triangles = ear_clip(&polygon)?;
        let neighbors = build_neighbors(&triangles);
        let t = triangles.len();
        let edges: usize = neighbors.iter().flatten().filter(|n| n.is_some()).count() / 2;
        if edges + 1 != t {
            return Err(Error::InvalidPolygon("dual graph is not a tree".into()));
        }
        let next_hop = build_next_hop(&neighbors);
        let reflex = (0..polygon.len()).map(|i| polygon.is_reflex(i)).collect();
        Ok(TriangulatedPolygon { polygon, triangles, neighbors, next_hop, reflex })
    }

    pub fn from_vertices(vertices: Vec<Point2>) -> Result<Self> {
        Self::new(SimplePolygon::new(vertices)?)
    }

    pub fn polygon(&self) -> &SimplePolygon {
        &self.polygon
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn neighbors(&self, t: usize) -> [Option<usize>; 3] {
        self.neighbors[t]
    }

    pub fn dual_edge_count(&self) -> usize {
        self.neighbors.iter().flatten().filter(|n| n.is_some()).count() / 2
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        self.polygon.vertex(i)
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        self.reflex[i]
    }

    pub fn reflex_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.reflex.len()).filter(move |&i| self.reflex[i])
    }

    pub fn eps(&self) -> f64 {
        self.polygon.eps()
    }

    pub fn triangle_points(&self, t: usize) -> [Point2; 3] {
        let [a, b, c] = self.triangles[t];
        [self.vertex(a), self.vertex(b), self.vertex(c)]
    }

    /// Triangle containing `x`, allowing points within the coincidence
    /// tolerance of a triangle.
    pub fn locate(&self, x: Point2) -> Option<usize> {
        let mut best = (usize::MAX, f64::INFINITY);
        for t in 0..self.triangles.len() {
            let [a, b, c] = self.triangle_points(t);
            if orientation(a, b, x) >= 0 && orientation(b, c, x) >= 0 && orientation(c, a, x) >= 0 {
                return Some(t);
            }
            let d = segment_distance(x, a, b).min(segment_distance(x, b, c)).min(segment_distance(x, c, a));
            if d < best.1 {
                best = (t, d);
            }
        }
        (best.1 <= self.eps()).then_some(best.0)
    }

    /// Dual-tree path from triangle `from` to triangle `to` (inclusive).
    pub fn sleeve(&self, from: usize, to: usize) -> Vec<usize> {
        let t = self.triangles.len();
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            cur = self.next_hop[cur * t + to] as usize;
            path.push(cur);
        }
        path
    }

    /// Shared edge of adjacent triangles as `(left, right)` when walking from
    /// `from` into `to`.
    pub fn portal(&self, from: usize, to: usize) -> (usize, usize) {
        let tri = self.triangles[from];
        for e in 0..3 {
            if self.neighbors[from][e] == Some(to) {
                // The edge runs counterclockwise around `from`, so its start
                // lies on the right when leaving through it.
                return (tri[(e + 1) % 3], tri[e]);
            }
        }
        panic!("triangles {from} and {to} are not adjacent");
    }
}

fn ear_clip(polygon: &SimplePolygon) -> Result<Vec<[usize; 3]>> {
    let n = polygon.len();
    let pts = polygon.vertices();
    let mut idx: Vec<usize> = (0..n).collect();
    let mut tris = Vec::with_capacity(n - 2);
    let mut guard = 0usize;
    while idx.len() > 3 {
        let m = idx.len();
        let mut clipped = false;
        for k in 0..m {
            let (ia, ib, ic) = (idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]);
            let (a, b, c) = (pts[ia], pts[ib], pts[ic]);
            if orientation(a, b, c) <= 0 {
                continue;
            }
            let blocked = idx.iter().any(|&j| {
                if j == ia || j == ib || j == ic {
                    return false;
                }
                let p = pts[j];
                if p == a || p == b || p == c {
                    return false;
                }
                orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0
            });
            if blocked {
                continue;
            }
            tris.push([ia, ib, ic]);
            idx.remove(k);
            clipped = true;
            break;
        }
        if !clipped {
            return Err(Error::InvalidPolygon("no ear found; polygon is not simple".into()));
        }
        guard += 1;
        if guard > n {
            return Err(Error::InvalidPolygon("ear clipping did not terminate".into()));
        }
    }
    let (a, b, c) = (pts[idx[0]], pts[idx[1]], pts[idx[2]]);
    if orientation(a, b, c) <= 0 {
        return Err(Error::InvalidPolygon("degenerate final triangle".into()));
    }
    tris.push([idx[0], idx[1], idx[2]]);
    Ok(tris)
}

fn build_neighbors(tris: &[[usize; 3]]) -> Vec<[Option<usize>; 3]> {
    use std::collections::HashMap;
    let mut by_edge: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for (t, tri) in tris.iter().enumerate() {
        for e in 0..3 {
            by_edge.insert((tri[e], tri[(e + 1) % 3]), (t, e));
        }
    }
    let mut out = vec![[None; 3]; tris.len()];
    for (t, tri) in tris.iter().enumerate() {
        for e in 0..3 {
            if let Some(&(u, _)) = by_edge.get(&(tri[(e + 1) % 3], tri[e])) {
                out[t][e] = Some(u);
            }
        }
    }
    out
}

fn build_next_hop(neighbors: &[[Option<usize>; 3]]) -> Vec<u32> {
    let t = neighbors.len();
    let mut hop = vec![u32::MAX; t * t];
    // BFS from every target; the parent pointer toward the target is the hop.
    for target in 0..t {
        hop[target * t + target] = target as u32;
        let mut queue = VecDeque::from([target]);
        while let Some(cur) = queue.pop_front() {
            for nb in neighbors[cur].iter().flatten() {
                if hop[nb * t + target] == u32::MAX {
                    hop[nb * t + target] = cur as u32;
                    queue.push_back(*nb);
                }
            }
        }
    }
    hop
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(coords: &[(f64, f64)]) -> Result<TriangulatedPolygon> {
        TriangulatedPolygon::from_vertices(coords.iter().map(|&c| Point2::from(c)).collect())
    }

    #[test]
    fn square_has_two_triangles() {
        let t = tp(&[(0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0)]).unwrap();
        assert_eq!(t.triangles().len(), 2);
        assert_eq!(t.dual_edge_count(), 1);
    }

    #[test]
    fn l6_has_four_triangles() {
        let t = tp(&[(0.0, 0.0), (4.0, 0.0), (4.0, 2.0), (2.0, 2.0), (2.0, 4.0), (0.0, 4.0)]).unwrap();
        assert_eq!(t.triangles().len(), 4);
        assert_eq!(t.dual_edge_count(), 3);
        for k in 0..4 {
            let [a, b, c] = t.triangle_points(k);
            assert_eq!(orientation(a, b, c), 1);
        }
    }

    #[test]
    fn bowtie_fails() {
        assert!(tp(&[(0.0, 0.0), (4.0, 4.0), (4.0, 0.0), (0.0, 4.0)]).is_err());
    }

    #[test]
    fn triangles_cover_area() {
        let t = tp(&[(0.0, 0.0), (6.0, 0.0), (6.0, 1.0), (1.0, 1.0), (1.0, 2.0), (6.0, 2.0), (6.0, 3.0), (0.0, 3.0)])
            .unwrap();
        let area: f64 = (0..t.triangles().len())
            .map(|k| {
                let [a, b, c] = t.triangle_points(k);
                0.5 * crate::geometry::cross3(a, b, c)
            })
            .sum();
        assert!((area - t.polygon().area()).abs() < 1e-12);
    }
}
