mod common;

use common::{instances, tol};
use geodesic_two_center::disk::{compute_events, disks_intersection, geodesic_circle, Flag};
use geodesic_two_center::geodesic::{geodesic_distance, shortest_path};
use geodesic_two_center::geometry::polyline_distance;
use geodesic_two_center::hull::{geodesic_hull, ChainPair};
use geodesic_two_center::one_center::one_center;
use geodesic_two_center::polygon::signed_area;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hull_contains_points_and_paths((tp, pts) in instances(4..=14, 1..=10)) {
        let h = geodesic_hull(&tp, &pts).unwrap();
        prop_assert!(h.k() >= 1);
        let mut closed = h.cycle().to_vec();
        closed.push(h.cycle()[0]);
        for t in 0..h.k() {
            prop_assert!(polyline_distance(h.extreme(t), &closed) <= h.eps());
        }
        for (a, &p) in pts.iter().enumerate() {
            prop_assert!(h.contains(p), "point {a} outside the hull");
            for &q in &pts[a + 1..] {
                for w in shortest_path(&tp, p, q).unwrap().waypoints {
                    prop_assert!(h.contains(w), "waypoint {:?} of a geodesic leaves the hull", w);
                }
            }
        }
        prop_assert!(signed_area(h.cycle()) <= h.eps() * tp.polygon().diameter(), "hull boundary is not clockwise");
        // Weak simplicity: no boundary vertex is visited more than twice.
        for &v in h.cycle() {
            let visits = h.cycle().iter().filter(|&&u| u.dist(v) <= h.eps()).count();
            prop_assert!(visits <= 2, "{:?} visited {} times", v, visits);
        }
        // Interior and extreme indices partition the input.
        let mut all: Vec<usize> = h.extreme_indices().iter().chain(h.interior_indices()).copied().collect();
        all.sort();
        all.dedup();
        prop_assert_eq!(all.len(), pts.len());
    }

    #[test]
    fn pair_sides_partition_the_extremes((tp, pts) in instances(4..=14, 2..=10), a in 0usize..64, b in 0usize..64) {
        let h = geodesic_hull(&tp, &pts).unwrap();
        let k = h.k();
        let pair = ChainPair { i: a % k.max(1), j: b % k.max(1) };
        match h.pair_sides(pair) {
            Ok((s1, s2)) => {
                prop_assert!(pair.i != pair.j);
                prop_assert_eq!(s1.len() + s2.len(), k);
                let mut all: Vec<usize> = s1.iter().chain(&s2).copied().collect();
                all.sort();
                prop_assert_eq!(all, (0..k).collect::<Vec<_>>());
                prop_assert_eq!(*s1.last().unwrap(), pair.i);
                prop_assert_eq!(*s2.last().unwrap(), pair.j);
            }
            Err(_) => prop_assert!(k < 2 || pair.i == pair.j),
        }
    }

    #[test]
    fn circle_arcs_are_at_radius((tp, pts) in instances(4..=14, 1..=1), f in 0.05f64..0.8) {
        let q = pts[0];
        let r = f * tp.polygon().diameter();
        let eps = tol(&tp, 1e-8);
        for arc in geodesic_circle(&tp, q, r).unwrap() {
            let anchor_dist = geodesic_distance(&tp, q, arc.anchor).unwrap();
            prop_assert!(arc.euclid_radius >= 0.0);
            prop_assert!((arc.euclid_radius - (r - anchor_dist)).abs() <= eps);
            for s in 0..=8 {
                let x = arc.point_at(arc.sweep * s as f64 / 8.0);
                prop_assert!(tp.polygon().contains(x));
                let d = geodesic_distance(&tp, q, x).unwrap();
                prop_assert!((d - r).abs() <= eps, "sample at distance {} for radius {}", d, r);
            }
        }
    }

    #[test]
    fn intersection_boundaries_are_pseudo_disks(
        (tp, pts) in instances(4..=14, 1..=5),
        grow in 0.01f64..0.5,
    ) {
        let oc = one_center(&tp, &pts).unwrap();
        let r = oc.radius * (1.0 + grow) + tol(&tp, 1e-6);
        let eps = tol(&tp, 1e-8);
        let b = disks_intersection(&tp, &pts, r).unwrap().expect("contains the one-center");
        prop_assert!(b.length() > 0.0);
        // Arcs of each site form one consecutive run.
        let owners = b.owners();
        let mut seen = owners.clone();
        seen.sort();
        seen.dedup();
        prop_assert_eq!(seen.len(), owners.len(), "owners {:?}", owners);
        for (owner, x) in b.sample_arcs(1e-2 * tp.polygon().diameter()) {
            let d = geodesic_distance(&tp, pts[owner], x).unwrap();
            prop_assert!((d - r).abs() <= eps, "arc point at {} from its owner, radius {}", d, r);
            for &s in &pts {
                prop_assert!(geodesic_distance(&tp, s, x).unwrap() <= r + eps);
            }
        }
        // The boundary closes up.
        let ring = b.sample(64);
        for w in ring.windows(2) {
            prop_assert!(w[0].dist(w[1]) <= b.length() / 64.0 + eps);
        }
    }

    #[test]
    fn events_lie_on_both_circles(
        (tp, pts) in instances(4..=14, 3..=8),
        split in 1usize..3,
        grow in 0.0f64..0.4,
    ) {
        let (sites, interior) = pts.split_at(split.min(pts.len() - 1));
        let r = one_center(&tp, sites).unwrap().radius * (1.0 + grow) + tol(&tp, 1e-6);
        let eps = tol(&tp, 1e-7);
        let b = disks_intersection(&tp, sites, r).unwrap().expect("contains the one-center");
        prop_assume!(b.arc_count() > 0);
        let reference = b.position_at(0.0);
        let ev = compute_events(&tp, &b, interior, reference).unwrap();
        for e in &ev.events {
            prop_assert!(e.param >= 0.0 && e.param <= b.length() + eps);
            let d = geodesic_distance(&tp, interior[e.owner], e.position).unwrap();
            // Off the circle, a run can only end where an arc meets a
            // polygon-boundary piece.
            let n = b.elements.len();
            let arc = b.elements[e.at.element].as_arc().expect("events lie on arcs");
            let junction = (e.at.t == 0.0 && b.elements[(e.at.element + n - 1) % n].as_arc().is_none())
                || (e.at.t == arc.sweep && b.elements[(e.at.element + 1) % n].as_arc().is_none());
            prop_assert!(
                (d - r).abs() <= eps || (junction && d <= r + eps),
                "event at {} from owner, radius {}, junction {}", d, r, junction
            );
        }
        for w in ev.events.windows(2) {
            prop_assert!(w[0].param <= w[1].param);
        }
        for q in 0..interior.len() {
            if ev.straddling.contains(&q) || ev.irregular.contains(&q) {
                continue;
            }
            let ins: Vec<f64> = ev.events.iter().filter(|e| e.owner == q && e.flag == Flag::In).map(|e| e.param).collect();
            let outs: Vec<f64> = ev.events.iter().filter(|e| e.owner == q && e.flag == Flag::Out).map(|e| e.param).collect();
            prop_assert_eq!(ins.len(), outs.len());
            for (i, o) in ins.iter().zip(&outs) {
                prop_assert!(i <= o, "In at {} after Out at {}", i, o);
            }
        }
    }
}
