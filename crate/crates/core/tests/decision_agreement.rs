use geodesic_two_center::decision::{Branch, Decider};
use geodesic_two_center::hull::{geodesic_hull, ChainPair};
use geodesic_two_center::instances::{random_polygon, sample_points, Family};
use geodesic_two_center::TriangulatedPolygon;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `decide` agrees with the exhaustive split just above and below each
/// pair's optimum.
#[test]
fn decide_matches_exhaustive_split() {
    let mut totals = std::collections::BTreeMap::new();
    let mut checked = 0;
    let seeds: u64 = std::env::var("AGREEMENT_SEEDS").ok().and_then(|s| s.parse().ok()).unwrap_or(24);
    for seed in 0..seeds {
        let family = [Family::Convex, Family::Star, Family::Comb, Family::Random][seed as usize % 4];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tp = TriangulatedPolygon::from_vertices(random_polygon(family, 10, &mut rng).unwrap()).unwrap();
        let pts = sample_points(&tp, 14, &mut rng);
        let h = geodesic_hull(&tp, &pts).unwrap();
        let d = Decider::new(&h).unwrap();
        let k = h.k();
        for i in 0..k {
            for j in 0..k {
                let pair = ChainPair { i, j };
                if d.sides(pair).is_err() {
                    continue;
                }
                let opt = d.exhaustive_optimum(pair).unwrap();
                let scale = tp.polygon().diameter();
                let above = d.decide(pair, opt + 1e-7 * scale).unwrap();
                assert!(above.feasible, "seed {seed} pair {pair:?} opt {opt}: {above:?}");
                let below = d.decide(pair, opt - 1e-5 * scale).unwrap();
                assert!(!below.feasible, "seed {seed} pair {pair:?} opt {opt}: {below:?}");
                for f in [0.8, 0.9, 0.95, 1.05, 1.2] {
                    let r = opt * f;
                    let got = d.decide(pair, r).unwrap().feasible;
                    let want = d.exhaustive_decide(pair, r).unwrap().is_some();
                    assert_eq!(got, want, "seed {seed} pair {pair:?} r {r} opt {opt}");
                }
                checked += 1;
            }
        }
        for (b, n) in d.branch_stats() {
            *totals.entry(b.name()).or_insert(0) += n;
        }
    }
    eprintln!("{checked} pairs; branches {totals:?}");
    assert!(totals[Branch::Scan.name()] > 0 || totals[Branch::EventPairs.name()] > 0);
}
