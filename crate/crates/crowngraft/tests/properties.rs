//! Property-based invariants across the library: projective identities,
//! polygon coordinates, grafting round trips, exact matchings, and twist
//! charts.

use num_complex::Complex;
use num_rational::Rational64;
use proptest::prelude::*;

use crowngraft::grafting::{graft_forward, graft_invert, fiber_enumerate, WeightedDiagonals};
use crowngraft::matching::{minimal_match, is_minimal, ArcEnd};
use crowngraft::moebius::{cross_ratio, elliptic, MoebiusMap, SpherePoint, Tolerance};
use crowngraft::polygon::{Diagonal, DiagonalSet, IdealPolygon};
use crowngraft::crown::TwistChart;
use crowngraft::ode::stokes_geometry;

type C = Complex<f64>;

fn tol() -> Tolerance<f64> {
    Tolerance::default()
}

/// Strategy: a well-separated ideal polygon with n vertices.
fn polygon_strategy(n: usize) -> impl Strategy<Value = IdealPolygon<f64>> {
    (
        prop::collection::vec(0.2f64..1.0, n),
        0.0f64..std::f64::consts::TAU,
    )
        .prop_map(move |(gaps, start)| {
            let total: f64 = gaps.iter().sum();
            let scale = std::f64::consts::TAU / total;
            let mut angle = start;
            let vertices: Vec<C> = gaps
                .iter()
                .map(|g| {
                    let v = C::from_polar(1.0, angle);
                    angle += g * scale;
                    v
                })
                .collect();
            IdealPolygon::new(vertices, &tol()).expect("generated gaps are valid")
        })
}

/// Strategy: an invertible Möbius map with a comfortably large determinant.
fn moebius_strategy() -> impl Strategy<Value = MoebiusMap<f64>> {
    let entry = || (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| C::new(re, im));
    (entry(), entry(), entry(), entry())
        .prop_filter_map("matrix must be far from singular", |(a, b, c, d)| {
            if (a * d - b * c).norm() < 0.3 {
                None
            } else {
                MoebiusMap::new(a, b, c, d).ok()
            }
        })
}

/// Strategy: four pairwise well-separated points on the unit circle.
fn four_points_strategy() -> impl Strategy<Value = [SpherePoint<f64>; 4]> {
    polygon_strategy(4).prop_map(|p| {
        [
            p.vertex_point(0),
            p.vertex_point(1),
            p.vertex_point(2),
            p.vertex_point(3),
        ]
    })
}

/// A triangulation of the n-gon grown from a seed diagonal by greedy
/// completion; the seed index selects among all valid diagonals.
fn seeded_triangulation(n: usize, seed: usize) -> DiagonalSet {
    let mut candidates = Vec::new();
    for i in 0..n {
        for j in (i + 2)..n {
            if let Ok(d) = Diagonal::new(i, j) {
                if d.is_valid_for(n) {
                    candidates.push(d);
                }
            }
        }
    }
    let first = candidates[seed % candidates.len()];
    DiagonalSet::new(n, vec![first])
        .expect("single diagonal is non-crossing")
        .complete_to_triangulation()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cross_ratio_is_moebius_invariant(
        pts in four_points_strategy(),
        m in moebius_strategy(),
    ) {
        let t = tol();
        let chi = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3], &t).unwrap();
        let imgs: Vec<SpherePoint<f64>> = pts.iter().map(|p| m.apply(p)).collect();
        let chi_m = cross_ratio(&imgs[0], &imgs[1], &imgs[2], &imgs[3], &t).unwrap();
        prop_assert!(chi.chordal_distance(&chi_m) < 1e-8);
    }

    #[test]
    fn cross_ratio_rotation_by_two_is_invariant(pts in four_points_strategy()) {
        let t = tol();
        let chi = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3], &t).unwrap();
        let rot = cross_ratio(&pts[2], &pts[3], &pts[0], &pts[1], &t).unwrap();
        prop_assert!(chi.chordal_distance(&rot) < 1e-9);
    }

    #[test]
    fn elliptic_maps_form_a_one_parameter_group(
        pts in four_points_strategy(),
        s in -6.0f64..6.0,
        w in -6.0f64..6.0,
    ) {
        let t = tol();
        let p = &pts[0];
        let q = &pts[2];
        let a = elliptic(p, q, s, &t).unwrap();
        let b = elliptic(p, q, w, &t).unwrap();
        let ab = a.compose(&b);
        let sum = elliptic(p, q, s + w, &t).unwrap();
        let loose = Tolerance::new(1e-8);
        prop_assert!(ab.projectively_eq(&sum, &loose));
    }

    #[test]
    fn polygon_coordinates_are_moebius_invariant(
        poly in polygon_strategy(6),
        m in moebius_strategy(),
    ) {
        let t = tol();
        let coords = poly.coordinates(&t).unwrap();
        // Images need not lie on the unit circle, so compare raw cross-ratios.
        let pts: Vec<SpherePoint<f64>> =
            (0..poly.len()).map(|k| m.apply(&poly.vertex_point(k))).collect();
        for j in 0..coords.len() {
            let chi = cross_ratio(&pts[j], &pts[j + 1], &pts[j + 2], &pts[j + 3], &t)
                .unwrap()
                .to_complex()
                .expect("coordinates of a polygon are finite");
            prop_assert!((chi.re - coords[j]).abs() < 1e-7 * (1.0 + coords[j].abs()));
            prop_assert!(chi.im.abs() < 1e-7 * (1.0 + coords[j].abs()));
        }
    }

    #[test]
    fn polygon_coordinate_round_trip(poly in polygon_strategy(7)) {
        let t = tol();
        let coords = poly.coordinates(&t).unwrap();
        let rebuilt = IdealPolygon::from_coordinates(&coords, &t).unwrap();
        let back = rebuilt.coordinates(&t).unwrap();
        for (a, b) in coords.iter().zip(&back) {
            prop_assert!((a - b).abs() < 1e-8 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn diagonal_crossing_matches_the_interleaving_oracle(
        n in 6usize..12,
        a in 0usize..12,
        b in 0usize..12,
        c in 0usize..12,
        d in 0usize..12,
    ) {
        let (a, b, c, d) = (a % n, b % n, c % n, d % n);
        let d1 = Diagonal::new(a.min(b), a.max(b));
        let d2 = Diagonal::new(c.min(d), c.max(d));
        if let (Ok(d1), Ok(d2)) = (d1, d2) {
            if d1.is_valid_for(n) && d2.is_valid_for(n) {
                // Oracle: strict interleaving of endpoints around the circle.
                let (i, j) = (d1.i(), d1.j());
                let (k, l) = (d2.i(), d2.j());
                let inside = |x: usize| i < x && x < j;
                let oracle = inside(k) != inside(l)
                    && k != i && k != j && l != i && l != j;
                prop_assert_eq!(d1.crosses(&d2), oracle);
            }
        }
    }

    #[test]
    fn grafting_round_trip_recovers_coordinates_and_weights(
        poly in polygon_strategy(6),
        seed in 0usize..64,
        raw_weights in prop::collection::vec(0.05f64..6.2, 3),
    ) {
        let t = tol();
        let n = poly.len();
        let tri = seeded_triangulation(n, seed);
        let pairs: Vec<(Diagonal, f64)> = tri
            .diagonals()
            .iter()
            .copied()
            .zip(raw_weights.iter().copied())
            .collect();
        let weighted = WeightedDiagonals::new(n, pairs).unwrap();
        let tips = graft_forward(&poly, &weighted, &t).unwrap();
        let (rec_poly, rec_weights) = graft_invert(&tips, tri_ref(&weighted), &t).unwrap();
        let coords = poly.coordinates(&t).unwrap();
        let rec_coords = rec_poly.coordinates(&t).unwrap();
        for (a, b) in coords.iter().zip(&rec_coords) {
            prop_assert!((a - b).abs() < 1e-7 * (1.0 + a.abs()));
        }
        for (d, w) in weighted.pairs() {
            let rw = rec_weights.weight_of(&d).unwrap();
            let diff = (w - rw).abs();
            let circ = diff.min((std::f64::consts::TAU - diff).abs());
            prop_assert!(circ < 1e-7);
        }
    }

    #[test]
    fn fiber_elements_differ_by_exact_turns(
        seed in 0usize..32,
        nmax in 0u32..3,
    ) {
        let n = 6;
        let tri = seeded_triangulation(n, seed);
        let pairs: Vec<(Diagonal, f64)> = tri
            .diagonals()
            .iter()
            .copied()
            .enumerate()
            .map(|(k, d)| (d, 0.5 + 0.3 * k as f64))
            .collect();
        let weighted = WeightedDiagonals::new(n, pairs).unwrap();
        let fiber = fiber_enumerate(&weighted, nmax);
        prop_assert_eq!(fiber.len(), ((nmax + 1) as usize).pow(tri.len() as u32));
        for elem in &fiber {
            for ((_, base), ((_, lifted), shift)) in weighted
                .pairs()
                .zip(elem.weights.pairs().zip(elem.shifts.iter()))
            {
                let expected = base + std::f64::consts::TAU * f64::from(*shift);
                prop_assert!((lifted - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn minimal_matching_is_a_splitting_and_minimal(
        top_w in prop::collection::vec((1i64..40, 1i64..8), 1..6),
        bottom_n in 1usize..6,
    ) {
        let top: Vec<ArcEnd> = top_w
            .iter()
            .enumerate()
            .map(|(k, (n, d))| ArcEnd { origin: k, weight: Rational64::new(*n, *d) })
            .collect();
        let total: Rational64 = top.iter().map(|e| e.weight).sum();
        // Split the same total across `bottom_n` equal entries (exact).
        let share = total / Rational64::from_integer(bottom_n as i64);
        let bottom: Vec<ArcEnd> = (0..bottom_n)
            .map(|k| ArcEnd { origin: k, weight: share })
            .collect();
        let strands = minimal_match(&top, &bottom).unwrap();
        prop_assert!(is_minimal(&strands));
        prop_assert!(strands.len() < top.len() + bottom.len());
        // Exact per-entry conservation on both rows.
        for (k, e) in top.iter().enumerate() {
            let sum: Rational64 = strands
                .iter()
                .filter(|s| s.top.entry == k)
                .map(|s| s.weight)
                .sum();
            prop_assert_eq!(sum, e.weight);
        }
        for (k, e) in bottom.iter().enumerate() {
            let sum: Rational64 = strands
                .iter()
                .filter(|s| s.bottom.entry == k)
                .map(|s| s.weight)
                .sum();
            prop_assert_eq!(sum, e.weight);
        }
    }

    #[test]
    fn chart_split_join_round_trip_on_dyadics(
        l_num in 1i32..64,
        t in -40i64..40,
        s_num in 0i32..256,
    ) {
        // l = l_num / 16, s = (s_num / 256) * l: both dyadic, s in [0, l).
        let l = f64::from(l_num) / 16.0;
        let s = f64::from(s_num) / 256.0 * l;
        let chart = TwistChart::join(t, s, l).unwrap();
        let (t2, s2) = chart.split().unwrap();
        prop_assert_eq!(t, t2);
        prop_assert_eq!(s.to_bits(), s2.to_bits());
    }

    #[test]
    fn sector_bisectors_sit_between_consecutive_rays(d in 1usize..40) {
        let g = stokes_geometry(d).unwrap();
        let n = g.sector_count();
        prop_assert_eq!(g.rays().len(), n);
        for k in 0..n {
            let ray = g.rays()[k];
            let next = g.rays()[(k + 1) % n];
            let bis = g.bisectors()[k];
            // Twice the bisector equals ray + next (mod 2, in units of pi).
            let two = num_rational::Ratio::new(2i64, 1);
            let lhs = (bis + bis) % two;
            let rhs = (ray + next + if k + 1 == n { two } else { num_rational::Ratio::new(0, 1) }) % two;
            prop_assert_eq!(lhs, rhs);
        }
    }
}

/// The triangulation underlying a weighted system (helper for borrow
/// clarity in the round-trip test).
fn tri_ref(w: &WeightedDiagonals<f64>) -> &DiagonalSet {
    w.set()
}
