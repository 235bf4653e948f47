//! Seeded random instances: simple polygons of a few shapes and points
//! sampled uniformly inside them.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{segments_cross_properly, Point2};
use crate::polygon::SimplePolygon;
use crate::triangulation::TriangulatedPolygon;

/// Side length of the square that generated polygons fit in.
pub const EXTENT: f64 = 20.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Convex,
    Star,
    Comb,
    Random,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Convex => "convex",
            Family::Star => "star",
            Family::Comb => "comb",
            Family::Random => "random",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convex" => Ok(Family::Convex),
            "star" => Ok(Family::Star),
            "comb" => Ok(Family::Comb),
            "random" => Ok(Family::Random),
            other => Err(Error::InvalidConfig(format!("unknown family {other:?}"))),
        }
    }
}

/// A simple polygon with `n` vertices (counterclockwise).
pub fn random_polygon<R: Rng>(family: Family, n: usize, rng: &mut R) -> Result<Vec<Point2>> {
    if n < 3 {
        return Err(Error::InvalidConfig(format!("need n >= 3, got {n}")));
    }
    for _ in 0..100 {
        let vs = match family {
            Family::Convex => convex(n, rng),
            Family::Star => star(n, rng),
            Family::Comb => comb(n, rng),
            Family::Random => random_2opt(n, rng),
        };
        if let Ok(p) = SimplePolygon::new(vs.clone()) {
            if p.len() == n {
                return Ok(p.vertices().to_vec());
            }
        }
    }
    Err(Error::InvalidConfig(format!("could not generate a {family} polygon with {n} vertices")))
}

fn sorted_angles<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    // Jittered uniform spacing keeps angles distinct.
    let step = TAU / n as f64;
    (0..n).map(|k| (k as f64 + rng.gen_range(0.1..0.9)) * step).collect()
}

fn convex<R: Rng>(n: usize, rng: &mut R) -> Vec<Point2> {
    let c = Point2::new(EXTENT / 2.0, EXTENT / 2.0);
    sorted_angles(n, rng).into_iter().map(|a| Point2::from_polar(c, EXTENT / 2.0, a)).collect()
}

fn star<R: Rng>(n: usize, rng: &mut R) -> Vec<Point2> {
    let c = Point2::new(EXTENT / 2.0, EXTENT / 2.0);
    sorted_angles(n, rng)
        .into_iter()
        .map(|a| Point2::from_polar(c, EXTENT / 2.0 * rng.gen_range(0.3..1.0), a))
        .collect()
}

fn comb<R: Rng>(n: usize, rng: &mut R) -> Vec<Point2> {
    let teeth = n / 4;
    if teeth == 0 {
        return convex(n, rng);
    }
    let extra = n - 4 * teeth;
    let slot = EXTENT / teeth as f64;
    let base = EXTENT * 0.25;
    let spans: Vec<(f64, f64, f64)> = (0..teeth)
        .map(|t| {
            let x0 = t as f64 * slot;
            let xl = if t == 0 { 0.0 } else { x0 + slot * rng.gen_range(0.15..0.35) };
            let xr = if t + 1 == teeth { EXTENT } else { x0 + slot * rng.gen_range(0.65..0.85) };
            (xl, xr, base + (EXTENT - base) * rng.gen_range(0.5..1.0))
        })
        .collect();
    let mut vs = vec![Point2::new(0.0, 0.0)];
    // Small dents along the bottom edge absorb the leftover vertices.
    for k in 0..extra {
        let x = EXTENT * (k as f64 + 1.0) / (extra as f64 + 1.0);
        vs.push(Point2::new(x, -rng.gen_range(0.05..0.5)));
    }
    vs.push(Point2::new(EXTENT, 0.0));
    for t in (0..teeth).rev() {
        let (xl, xr, h) = spans[t];
        vs.push(Point2::new(xr, h));
        vs.push(Point2::new(xl, h));
        if t > 0 {
            vs.push(Point2::new(xl, base));
            vs.push(Point2::new(spans[t - 1].1, base));
        }
    }
    vs
}

fn random_2opt<R: Rng>(n: usize, rng: &mut R) -> Vec<Point2> {
    let mut vs: Vec<Point2> =
        (0..n).map(|_| Point2::new(rng.gen_range(0.0..EXTENT), rng.gen_range(0.0..EXTENT))).collect();
    // Untangle: reverse the chain between any two crossing edges until none cross.
    for _ in 0..(50 * n * n) {
        let mut changed = false;
        'outer: for i in 0..n {
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (vs[i], vs[(i + 1) % n]);
                let (c, d) = (vs[j], vs[(j + 1) % n]);
                if segments_cross_properly(a, b, c, d) {
                    vs[i + 1..=j].reverse();
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
    vs
}

/// `m` points uniformly distributed in the polygon, sampled by picking a
/// triangle with probability proportional to its area.
pub fn sample_points<R: Rng>(tp: &TriangulatedPolygon, m: usize, rng: &mut R) -> Vec<Point2> {
    let areas: Vec<f64> = (0..tp.triangles().len())
        .map(|t| {
            let [a, b, c] = tp.triangle_points(t);
            0.5 * (b - a).cross(c - a)
        })
        .collect();
    let total: f64 = areas.iter().sum();
    (0..m)
        .map(|_| {
            let mut pick = rng.gen_range(0.0..total);
            let mut t = 0;
            while t + 1 < areas.len() && pick >= areas[t] {
                pick -= areas[t];
                t += 1;
            }
            let [a, b, c] = tp.triangle_points(t);
            let (mut u, mut v) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
            if u + v > 1.0 {
                u = 1.0 - u;
                v = 1.0 - v;
            }
            a + (b - a) * u + (c - a) * v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn every_family_yields_valid_polygons() {
        for family in [Family::Convex, Family::Star, Family::Comb, Family::Random] {
            for n in [3, 4, 5, 8, 13, 20, 40] {
                for seed in 0..5 {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let vs = random_polygon(family, n, &mut rng)
                        .unwrap_or_else(|e| panic!("{family} n={n} seed={seed}: {e}"));
                    assert_eq!(vs.len(), n, "{family} n={n}");
                    let tp = TriangulatedPolygon::from_vertices(vs).unwrap();
                    let pts = sample_points(&tp, 10, &mut rng);
                    assert!(pts.iter().all(|&q| tp.polygon().contains(q)));
                }
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_polygon(Family::Random, 12, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = random_polygon(Family::Random, 12, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
    }
}
