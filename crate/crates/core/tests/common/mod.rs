#![allow(dead_code)]

use geodesic_two_center::instances::{random_polygon, sample_points, Family};
use geodesic_two_center::{Point2, TriangulatedPolygon};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const FAMILIES: [Family; 4] = [Family::Convex, Family::Star, Family::Comb, Family::Random];

/// A random polygon of `n` vertices and `m` points inside it.
pub fn instance(family: Family, n: usize, m: usize, seed: u64) -> (TriangulatedPolygon, Vec<Point2>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tp = TriangulatedPolygon::from_vertices(random_polygon(family, n, &mut rng).unwrap()).unwrap();
    let pts = sample_points(&tp, m, &mut rng);
    (tp, pts)
}

pub fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(FAMILIES.to_vec())
}

/// Instances with `n` in `ns` and `m` in `ms`.
pub fn instances(
    ns: std::ops::RangeInclusive<usize>,
    ms: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (TriangulatedPolygon, Vec<Point2>)> {
    (family(), ns, ms, any::<u64>()).prop_map(|(f, n, m, seed)| instance(f, n, m, seed))
}

/// Absolute tolerance for an instance: `rel · max(1, diameter)`.
pub fn tol(tp: &TriangulatedPolygon, rel: f64) -> f64 {
    rel * tp.polygon().diameter().max(1.0)
}
