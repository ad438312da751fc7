//! Grafting of weighted diagonal systems: developing an ideal polygon across
//! its triangulation by elliptic twists, the inverse reconstruction, and the
//! integer fiber of weight systems over a tip configuration.
//!
//! Forward direction: complete the diagonal system to a triangulation (new
//! diagonals get weight zero), root the dual tree at the triangle containing
//! the side `(0, 1)`, and develop outward. Crossing a diagonal `{i, k}`
//! composes the running map with an elliptic twist about the diagonal's
//! endpoints, oriented so the child triangle lies to the right of the twist
//! axis. Each vertex `v` receives the tip `c_v`, its image under the map of
//! any triangle containing it (the maps agree there, because every diagonal
//! separating two such triangles has `v` as an endpoint and the twist fixes
//! it).

use std::collections::VecDeque;

use num_complex::Complex;
use thiserror::Error;

use crate::moebius::{
    cross_ratio, elliptic, map_from_triples, MoebiusError, MoebiusMap, SpherePoint, Tolerance,
};
use crate::polygon::{Diagonal, DiagonalSet, IdealPolygon, PolygonError};
use crate::scalar::Real;

/// Errors from grafting, inversion, and tip handling.
#[derive(Debug, Error)]
pub enum GraftError {
    /// Polygon size and diagonal-system size disagree.
    #[error("polygon has {polygon} vertices but the diagonal system is for {weights}")]
    SizeMismatch { polygon: usize, weights: usize },
    /// A weight is NaN or infinite.
    #[error("weight for diagonal {0} is not finite")]
    InvalidWeight(Diagonal),
    /// Tip configurations need at least three points.
    #[error("tip configuration needs at least 3 points, got {0}")]
    TooFewTips(usize),
    /// The four tips around a diagonal do not determine a cross-ratio usable
    /// for inversion.
    #[error("tips around diagonal {0} form a degenerate quadrilateral")]
    DegenerateQuadrilateral(Diagonal),
    /// Fewer than three pairwise distinct tips: no normalization exists.
    #[error("fewer than three distinct tips; cannot normalize")]
    TooFewDistinctTips,
    /// Polygon-level failure (validation, triangulation structure).
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    /// Projective degeneration in an underlying map.
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
}

/// A non-crossing diagonal system with a real weight per diagonal.
#[derive(Debug, Clone)]
pub struct WeightedDiagonals<R: Real> {
    set: DiagonalSet,
    weights: Vec<R>,
}

impl<R: Real> WeightedDiagonals<R> {
    /// Validate diagonals (as a system for an `n`-gon) and attach weights.
    pub fn new(n: usize, pairs: Vec<(Diagonal, R)>) -> Result<Self, GraftError> {
        let mut pairs = pairs;
        pairs.sort_by_key(|(d, _)| *d);
        for (d, w) in &pairs {
            if !w.is_finite() {
                return Err(GraftError::InvalidWeight(*d));
            }
        }
        let set = DiagonalSet::new(n, pairs.iter().map(|(d, _)| *d).collect())?;
        let weights = pairs.into_iter().map(|(_, w)| w).collect();
        Ok(Self { set, weights })
    }

    /// The underlying diagonal system.
    pub fn set(&self) -> &DiagonalSet {
        &self.set
    }

    /// Polygon size the system belongs to.
    pub fn polygon_size(&self) -> usize {
        self.set.polygon_size()
    }

    /// Weights in the sorted order of [`DiagonalSet::diagonals`].
    pub fn weights(&self) -> &[R] {
        &self.weights
    }

    /// Weight of a diagonal, if present.
    pub fn weight_of(&self, d: &Diagonal) -> Option<R> {
        self.set
            .diagonals()
            .binary_search(d)
            .ok()
            .map(|k| self.weights[k])
    }

    /// Iterate `(diagonal, weight)` pairs in sorted diagonal order.
    pub fn pairs(&self) -> impl Iterator<Item = (Diagonal, R)> + '_ {
        self.set
            .diagonals()
            .iter()
            .copied()
            .zip(self.weights.iter().copied())
    }

    /// Complete the system to a triangulation, giving weight zero to every
    /// added diagonal.
    pub fn complete_with_zero_fill(&self) -> Self {
        let full = self.set.complete_to_triangulation();
        let weights = full
            .diagonals()
            .iter()
            .map(|d| self.weight_of(d).unwrap_or_else(R::zero))
            .collect();
        Self { set: full, weights }
    }
}

/// The tips of a grafted polygon: one sphere point per vertex.
#[derive(Debug, Clone)]
pub struct TipConfiguration<R: Real> {
    points: Vec<SpherePoint<R>>,
}

impl<R: Real> TipConfiguration<R> {
    /// Wrap a list of at least three tips.
    pub fn new(points: Vec<SpherePoint<R>>) -> Result<Self, GraftError> {
        if points.len() < 3 {
            return Err(GraftError::TooFewTips(points.len()));
        }
        Ok(Self { points })
    }

    /// The tips, indexed by polygon vertex.
    pub fn points(&self) -> &[SpherePoint<R>] {
        &self.points
    }

    /// Number of tips.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false: construction requires at least three tips.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest chordal distance between corresponding tips.
    pub fn max_distance(&self, other: &Self) -> R {
        self.points
            .iter()
            .zip(&other.points)
            .map(|(a, b)| a.chordal_distance(b))
            .fold(R::zero(), |acc, d| acc.max(d))
    }

    /// Möbius-normalize: the first three pairwise distinct tips (in scan
    /// order) are sent to `(0, inf, 1)`. Idempotent up to rounding.
    pub fn normalize(&self, tol: &Tolerance<R>) -> Result<Self, GraftError> {
        let mut anchor = Vec::with_capacity(3);
        for p in &self.points {
            if anchor.iter().all(|a: &SpherePoint<R>| !a.projectively_eq(p, tol)) {
                anchor.push(*p);
                if anchor.len() == 3 {
                    break;
                }
            }
        }
        if anchor.len() < 3 {
            return Err(GraftError::TooFewDistinctTips);
        }
        let m = map_from_triples(
            &[anchor[0], anchor[1], anchor[2]],
            &[
                SpherePoint::zero(),
                SpherePoint::infinity(),
                SpherePoint::one(),
            ],
            tol,
        )?;
        Ok(Self {
            points: self.points.iter().map(|p| m.apply(p)).collect(),
        })
    }
}

/// Rooted dual-tree traversal order shared by the forward and inverse passes.
///
/// Yields `(triangle, parent_apex, child_apex, diagonal)` steps in BFS order
/// from the triangle containing the side `(0, 1)`.
struct Traversal {
    triangles: Vec<[usize; 3]>,
    root: usize,
    /// `(parent_triangle, child_triangle, diagonal)` in visit order.
    steps: Vec<(usize, usize, Diagonal)>,
}

fn apex_of(triangle: &[usize; 3], d: &Diagonal) -> usize {
    *triangle
        .iter()
        .find(|v| **v != d.i() && **v != d.j())
        .expect("triangle bounded by diagonal has one further vertex")
}

impl Traversal {
    fn new(set: &DiagonalSet) -> Result<Self, GraftError> {
        let triangles = set.triangles()?;
        let edges = set.dual_edges()?;
        let mut adjacency = vec![Vec::new(); triangles.len()];
        for e in &edges {
            adjacency[e.first].push((e.second, e.diagonal));
            adjacency[e.second].push((e.first, e.diagonal));
        }
        let root = triangles
            .iter()
            .position(|t| t.contains(&0) && t.contains(&1))
            .expect("side (0, 1) bounds exactly one triangle");
        let mut steps = Vec::with_capacity(edges.len());
        let mut seen = vec![false; triangles.len()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            for &(next, diagonal) in &adjacency[t] {
                if !seen[next] {
                    seen[next] = true;
                    steps.push((t, next, diagonal));
                    queue.push_back(next);
                }
            }
        }
        Ok(Self {
            triangles,
            root,
            steps,
        })
    }
}

/// Graft a polygon along a weighted diagonal system, producing the tips.
///
/// The system need not be a full triangulation: it is completed with
/// zero-weight diagonals first, which leaves the tips unchanged.
pub fn graft_forward<R: Real>(
    polygon: &IdealPolygon<R>,
    weighted: &WeightedDiagonals<R>,
    tol: &Tolerance<R>,
) -> Result<TipConfiguration<R>, GraftError> {
    let n = polygon.len();
    if weighted.polygon_size() != n {
        return Err(GraftError::SizeMismatch {
            polygon: n,
            weights: weighted.polygon_size(),
        });
    }
    let full = weighted.complete_with_zero_fill();
    let traversal = Traversal::new(full.set())?;
    let mut maps: Vec<Option<MoebiusMap<R>>> = vec![None; traversal.triangles.len()];
    maps[traversal.root] = Some(MoebiusMap::identity());
    let mut tips: Vec<Option<SpherePoint<R>>> = vec![None; n];
    let record = |t: usize, maps: &[Option<MoebiusMap<R>>], tips: &mut Vec<Option<SpherePoint<R>>>| {
        let m = maps[t].as_ref().expect("triangle map already developed");
        for &v in &traversal.triangles[t] {
            if tips[v].is_none() {
                tips[v] = Some(m.apply(&polygon.vertex_point(v)));
            }
        }
    };
    record(traversal.root, &maps, &mut tips);
    for &(parent, child, diagonal) in &traversal.steps {
        let apex = apex_of(&traversal.triangles[child], &diagonal);
        // The twist axis is oriented so the child triangle sits on its right:
        // from i to k when the child apex lies between them, else reversed.
        let (p, q) = if diagonal.i() < apex && apex < diagonal.j() {
            (
                polygon.vertex_point(diagonal.i()),
                polygon.vertex_point(diagonal.j()),
            )
        } else {
            (
                polygon.vertex_point(diagonal.j()),
                polygon.vertex_point(diagonal.i()),
            )
        };
        let w = full
            .weight_of(&diagonal)
            .expect("completed system weights every diagonal");
        let twist = elliptic(&p, &q, w, tol)?;
        let parent_map = maps[parent].as_ref().expect("parent developed first");
        maps[child] = Some(parent_map.compose(&twist));
        record(child, &maps, &mut tips);
    }
    let points = tips
        .into_iter()
        .map(|t| t.expect("every vertex lies in some triangle"))
        .collect();
    TipConfiguration::new(points)
}

/// Recover the polygon and diagonal weights from tips and the triangulation.
///
/// Uses only cross-ratios of tips, so any Möbius translate of a tip
/// configuration inverts to the same data. Weights are returned as the
/// representative in `[0, 2*pi)`; the reconstructed polygon is anchored with
/// the root triangle's vertices (in increasing index order) at `(-1, 1, i)`.
pub fn graft_invert<R: Real>(
    tips: &TipConfiguration<R>,
    triangulation: &DiagonalSet,
    tol: &Tolerance<R>,
) -> Result<(IdealPolygon<R>, WeightedDiagonals<R>), GraftError> {
    let n = triangulation.polygon_size();
    if tips.len() != n {
        return Err(GraftError::SizeMismatch {
            polygon: tips.len(),
            weights: n,
        });
    }
    let traversal = Traversal::new(triangulation)?;
    let mut placed: Vec<Option<SpherePoint<R>>> = vec![None; n];
    let [v0, v1, v2] = traversal.triangles[traversal.root];
    placed[v0] = Some(SpherePoint::from_real(-R::one()));
    placed[v1] = Some(SpherePoint::one());
    placed[v2] = Some(SpherePoint::i());
    let standard = [
        SpherePoint::infinity(),
        SpherePoint::from_real(-R::one()),
        SpherePoint::zero(),
    ];
    let tau = R::PI() + R::PI();
    let mut weights = Vec::with_capacity(traversal.steps.len());
    for &(parent, child, diagonal) in &traversal.steps {
        let parent_apex = apex_of(&traversal.triangles[parent], &diagonal);
        let child_apex = apex_of(&traversal.triangles[child], &diagonal);
        // Counterclockwise quadruple around the diagonal: (x, parent apex,
        // y, child apex) with (x, y) = (i, k) exactly when the parent apex
        // lies between them.
        let (x, y) = if diagonal.i() < parent_apex && parent_apex < diagonal.j() {
            (diagonal.i(), diagonal.j())
        } else {
            (diagonal.j(), diagonal.i())
        };
        let tp = tips.points();
        let lambda = cross_ratio(&tp[x], &tp[parent_apex], &tp[y], &tp[child_apex], tol)
            .map_err(|_| GraftError::DegenerateQuadrilateral(diagonal))?;
        let z = lambda
            .to_complex()
            .ok_or(GraftError::DegenerateQuadrilateral(diagonal))?;
        let r = z.norm();
        if !(r > R::zero()) || !r.is_finite() {
            return Err(GraftError::DegenerateQuadrilateral(diagonal));
        }
        let mut w = -z.arg();
        if w < R::zero() {
            w = w + tau;
        }
        weights.push((diagonal, w));
        // The modulus is the untwisted cross-ratio; planting it via the map
        // sending (inf, -1, 0) onto the placed (x, parent apex, y) puts the
        // child apex where the zero-weight polygon would have it.
        let anchors = [
            placed[x].expect("parent triangle placed"),
            placed[parent_apex].expect("parent triangle placed"),
            placed[y].expect("parent triangle placed"),
        ];
        let back = map_from_triples(&standard, &anchors, tol)
            .map_err(|_| GraftError::DegenerateQuadrilateral(diagonal))?;
        placed[child_apex] = Some(back.apply(&SpherePoint::from_real(r)));
    }
    let vertices = placed
        .into_iter()
        .map(|p| {
            p.expect("traversal places every vertex")
                .to_complex()
                .ok_or(PolygonError::CoordOutOfRange)
        })
        .collect::<Result<Vec<Complex<R>>, _>>()?;
    let polygon = IdealPolygon::new(vertices, tol)?;
    let weighted = WeightedDiagonals::new(n, weights)?;
    Ok((polygon, weighted))
}

/// One element of the integer fiber over a tip configuration.
#[derive(Debug, Clone)]
pub struct FiberElement<R: Real> {
    /// Integer shift applied to each diagonal, in sorted diagonal order.
    pub shifts: Vec<u32>,
    /// The shifted weight system: `w + 2*pi*shift` per diagonal.
    pub weights: WeightedDiagonals<R>,
}

/// Enumerate the fiber representatives `w_i + 2*pi*n_i`, `0 <= n_i <= nmax`,
/// in lexicographic order of the shift vector (first diagonal most
/// significant). All `(nmax + 1)^k` elements graft to the same tips.
pub fn fiber_enumerate<R: Real>(weighted: &WeightedDiagonals<R>, nmax: u32) -> Vec<FiberElement<R>> {
    let k = weighted.set().len();
    let tau = R::PI() + R::PI();
    let base: Vec<(Diagonal, R)> = weighted.pairs().collect();
    let mut shifts = vec![0u32; k];
    let mut out = Vec::new();
    loop {
        let pairs = base
            .iter()
            .zip(&shifts)
            .map(|(&(d, w), &s)| (d, w + tau * R::from_u32(s).expect("small integer")))
            .collect();
        out.push(FiberElement {
            shifts: shifts.clone(),
            weights: WeightedDiagonals::new(weighted.polygon_size(), pairs)
                .expect("shifted weights stay valid"),
        });
        // Odometer increment with the last diagonal fastest.
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if shifts[pos] < nmax {
                shifts[pos] += 1;
                for s in &mut shifts[pos + 1..] {
                    *s = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn d(a: usize, b: usize) -> Diagonal {
        Diagonal::new(a, b).unwrap()
    }

    fn hexagon() -> IdealPolygon<f64> {
        let angles = [0.3, 1.1, 2.0, 3.1, 4.2, 5.5];
        IdealPolygon::new(
            angles.iter().map(|t| C::from_polar(1.0, *t)).collect(),
            &tol(),
        )
        .unwrap()
    }

    #[test]
    fn zero_weights_reproduce_the_vertices() {
        let p = hexagon();
        let weighted = WeightedDiagonals::new(
            6,
            vec![(d(0, 2), 0.0), (d(0, 3), 0.0), (d(3, 5), 0.0)],
        )
        .unwrap();
        let tips = graft_forward(&p, &weighted, &tol()).unwrap();
        for (v, t) in p.vertices().iter().zip(tips.points()) {
            assert!(t.chordal_distance(&SpherePoint::from_complex(*v)) < 1e-12);
        }
    }

    #[test]
    fn quadrilateral_calibration_rotates_the_cross_ratio() {
        // For a quadrilateral with coordinate r and weight t on {0, 2}, the
        // tip cross-ratio is r * exp(-i t).
        let r = 1.7;
        let t = 0.8;
        let p = IdealPolygon::from_coordinates(&[r], &tol()).unwrap();
        let weighted = WeightedDiagonals::new(4, vec![(d(0, 2), t)]).unwrap();
        let tips = graft_forward(&p, &weighted, &tol()).unwrap();
        let tp = tips.points();
        let chi = cross_ratio(&tp[0], &tp[1], &tp[2], &tp[3], &tol())
            .unwrap()
            .to_complex()
            .unwrap();
        let expect = C::from_polar(r, -t);
        assert!((chi - expect).norm() < 1e-12, "{chi} vs {expect}");
    }

    #[test]
    fn both_diagonals_of_a_quadrilateral_round_trip() {
        let r = 1.7;
        let t = 0.8;
        let p = IdealPolygon::from_coordinates(&[r], &tol()).unwrap();
        for diag in [d(0, 2), d(1, 3)] {
            let weighted = WeightedDiagonals::new(4, vec![(diag, t)]).unwrap();
            let tips = graft_forward(&p, &weighted, &tol()).unwrap();
            let full = DiagonalSet::new(4, vec![diag]).unwrap();
            let (q, w) = graft_invert(&tips, &full, &tol()).unwrap();
            let coords = q.coordinates(&tol()).unwrap();
            assert!((coords[0] - r).abs() < 1e-10, "coordinate for {diag}");
            assert!((w.weight_of(&diag).unwrap() - t).abs() < 1e-10, "weight for {diag}");
        }
    }

    #[test]
    fn hexagon_round_trips_for_star_and_path_trees() {
        let p = hexagon();
        let coords = p.coordinates(&tol()).unwrap();
        let systems = [
            vec![(d(0, 2), 0.5), (d(2, 4), 1.2), (d(0, 4), 2.9)],
            vec![(d(0, 2), 0.5), (d(0, 3), 1.2), (d(3, 5), 2.9)],
        ];
        for pairs in systems {
            let weighted = WeightedDiagonals::new(6, pairs.clone()).unwrap();
            let tips = graft_forward(&p, &weighted, &tol()).unwrap();
            let set = DiagonalSet::new(6, pairs.iter().map(|(dd, _)| *dd).collect()).unwrap();
            let (q, w) = graft_invert(&tips, &set, &tol()).unwrap();
            let recovered = q.coordinates(&tol()).unwrap();
            for (a, b) in coords.iter().zip(&recovered) {
                assert!((a - b).abs() < 1e-9, "{a} vs {b}");
            }
            for (dd, expect) in &pairs {
                let got = w.weight_of(dd).unwrap();
                assert!((got - expect).abs() < 1e-9, "{dd}: {got} vs {expect}");
            }
        }
    }

    #[test]
    fn inversion_is_moebius_invariant() {
        let p = hexagon();
        let pairs = vec![(d(0, 2), 0.5), (d(0, 3), 1.2), (d(3, 5), 2.9)];
        let weighted = WeightedDiagonals::new(6, pairs.clone()).unwrap();
        let tips = graft_forward(&p, &weighted, &tol()).unwrap();
        let moved = tips.normalize(&tol()).unwrap();
        let set = DiagonalSet::new(6, pairs.iter().map(|(dd, _)| *dd).collect()).unwrap();
        let (qa, wa) = graft_invert(&tips, &set, &tol()).unwrap();
        let (qb, wb) = graft_invert(&moved, &set, &tol()).unwrap();
        for (a, b) in qa
            .coordinates(&tol())
            .unwrap()
            .iter()
            .zip(qb.coordinates(&tol()).unwrap())
        {
            assert!((a - b).abs() < 1e-9);
        }
        for (a, b) in wa.weights().iter().zip(wb.weights()) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn partial_systems_complete_with_zero_fill() {
        let angles = [0.2, 1.4, 2.5, 3.6, 5.0];
        let p = IdealPolygon::new(
            angles.iter().map(|t| C::from_polar(1.0, *t)).collect(),
            &tol(),
        )
        .unwrap();
        let partial = WeightedDiagonals::new(5, vec![(d(0, 2), 1.1)]).unwrap();
        let explicit =
            WeightedDiagonals::new(5, vec![(d(0, 2), 1.1), (d(0, 3), 0.0)]).unwrap();
        let a = graft_forward(&p, &partial, &tol()).unwrap();
        let b = graft_forward(&p, &explicit, &tol()).unwrap();
        assert!(a.max_distance(&b) < 1e-13);
    }

    #[test]
    fn normalize_tips_frozen_image_and_idempotence() {
        // (1, 2, 3) -> (0, inf, 1) is z -> (z-1)/(2(z-2)) ... checked by hand:
        // the image of 4 is 3/4.
        let tips = TipConfiguration::new(
            [1.0, 2.0, 3.0, 4.0]
                .iter()
                .map(|x| SpherePoint::from_real(*x))
                .collect(),
        )
        .unwrap();
        let normalized = tips.normalize(&tol()).unwrap();
        let tp = normalized.points();
        assert!(tp[0].projectively_eq(&SpherePoint::zero(), &tol()));
        assert!(tp[1].is_infinity());
        assert!(tp[2].projectively_eq(&SpherePoint::one(), &tol()));
        assert!(tp[3].chordal_distance(&SpherePoint::from_real(0.75)) < 1e-12);
        let again = normalized.normalize(&tol()).unwrap();
        assert!(again.max_distance(&normalized) < 1e-12);
    }

    #[test]
    fn normalize_skips_repeated_tips() {
        let pts = vec![
            SpherePoint::from_real(2.0),
            SpherePoint::from_real(2.0),
            SpherePoint::from_real(5.0),
            SpherePoint::infinity(),
        ];
        let tips = TipConfiguration::new(pts).unwrap();
        let normalized = tips.normalize(&tol()).unwrap();
        let tp = normalized.points();
        assert!(tp[0].projectively_eq(&SpherePoint::zero(), &tol()));
        assert!(tp[1].projectively_eq(&SpherePoint::zero(), &tol()));
        assert!(tp[2].is_infinity());
        assert!(tp[3].projectively_eq(&SpherePoint::one(), &tol()));

        let flat = TipConfiguration::new(vec![SpherePoint::<f64>::one(); 4]).unwrap();
        assert!(matches!(
            flat.normalize(&tol()),
            Err(GraftError::TooFewDistinctTips)
        ));
    }

    #[test]
    fn fiber_enumeration_is_lexicographic_and_invariant() {
        let p = hexagon();
        let pairs = vec![(d(0, 2), 0.4), (d(2, 4), 1.9)];
        let weighted = WeightedDiagonals::new(6, pairs).unwrap();
        let fiber = fiber_enumerate(&weighted, 1);
        let shifts: Vec<Vec<u32>> = fiber.iter().map(|f| f.shifts.clone()).collect();
        assert_eq!(shifts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let base = graft_forward(&p, &weighted, &tol()).unwrap();
        for f in &fiber {
            let tips = graft_forward(&p, &f.weights, &tol()).unwrap();
            assert!(base.max_distance(&tips) < 1e-12);
        }
    }

    #[test]
    fn error_paths() {
        let p = hexagon();
        let wrong = WeightedDiagonals::new(5, vec![(d(0, 2), 1.0)]).unwrap();
        assert!(matches!(
            graft_forward(&p, &wrong, &tol()),
            Err(GraftError::SizeMismatch { .. })
        ));
        assert!(matches!(
            WeightedDiagonals::new(6, vec![(d(0, 2), f64::NAN)]),
            Err(GraftError::InvalidWeight(_))
        ));
        let tips = TipConfiguration::new(vec![SpherePoint::<f64>::one(); 6]).unwrap();
        let partial = DiagonalSet::new(6, vec![d(0, 2)]).unwrap();
        assert!(matches!(
            graft_invert(&tips, &partial, &tol()),
            Err(GraftError::Polygon(PolygonError::NotATriangulation { .. }))
        ));
        let full = partial.complete_to_triangulation();
        assert!(matches!(
            graft_invert(&tips, &full, &tol()),
            Err(GraftError::DegenerateQuadrilateral(_))
        ));
    }
}
