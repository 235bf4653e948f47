use geodesic_two_center::decision::Decider;
use geodesic_two_center::hull::{geodesic_hull, ChainPair};
use geodesic_two_center::instances::{random_polygon, sample_points, Family};
use geodesic_two_center::optimizer::{critical_radii, narrow_interval, optimize_pair, RadiusInterval};
use geodesic_two_center::TriangulatedPolygon;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seeds(default: u64) -> u64 {
    std::env::var("AGREEMENT_SEEDS").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

/// Per-pair optimum matches the exhaustive split, and lies in the critical
/// set of the narrowed interval.
#[test]
fn pair_optimum_matches_exhaustive_split() {
    let (mut total, mut in_set) = (0, 0);
    for seed in 0..seeds(12) {
        let family = [Family::Convex, Family::Star, Family::Comb, Family::Random][seed as usize % 4];
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let tp = TriangulatedPolygon::from_vertices(random_polygon(family, 10, &mut rng).unwrap()).unwrap();
        let pts = sample_points(&tp, 10, &mut rng);
        let h = geodesic_hull(&tp, &pts).unwrap();
        let d = Decider::new(&h).unwrap();
        let hull_radius = d.one_center_of(h.extreme_indices()).unwrap().radius;
        let iv = RadiusInterval::new(0.0, hull_radius);
        for i in 0..h.k() {
            for j in 0..h.k() {
                let pair = ChainPair { i, j };
                if d.sides(pair).is_err() {
                    continue;
                }
                let want = d.exhaustive_optimum(pair).unwrap();
                let got = optimize_pair(&d, pair, iv).unwrap().expect("hull radius is always feasible");
                let tol = 1e-6 * d.scale();
                assert!((got.radius - want).abs() <= tol, "seed {seed} {pair:?}: {} vs {want}", got.radius);
                let narrowed = narrow_interval(&d, pair, iv).unwrap();
                let set = critical_radii(&d, pair, narrowed).unwrap();
                total += 1;
                if set.values.iter().any(|c| (c.value - got.radius).abs() <= tol) {
                    in_set += 1;
                }
            }
        }
    }
    assert_eq!(in_set, total, "optimum outside the critical set");
}
