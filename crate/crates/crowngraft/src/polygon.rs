//! Ideal polygons on the unit circle, their cross-ratio coordinates, and
//! non-crossing diagonal systems with dual trees.
//!
//! An ideal `n`-gon (`n >= 3`) is a tuple of distinct unit-circle points in
//! strictly counterclockwise order, winding around the circle exactly once.
//! Its shape modulo Möbius maps is encoded by `n - 3` positive real
//! cross-ratio coordinates; the anchored representative has its first three
//! vertices at `(-1, 1, i)`.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::moebius::{
    cross_ratio, map_from_triples, MoebiusError, SpherePoint, Tolerance,
};
use crate::scalar::Real;

/// Errors from polygon construction and diagonal-system validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    /// Fewer than three vertices.
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    /// A vertex is off the unit circle beyond tolerance.
    #[error("vertex {0} is not on the unit circle")]
    NotOnCircle(usize),
    /// Vertices are not in strictly counterclockwise order winding once.
    #[error("vertices are not in strict counterclockwise order around the circle")]
    NotCounterclockwise,
    /// A diagonal is out of range, adjacent, or trivial for the polygon size.
    #[error("invalid diagonal ({0}, {1})")]
    InvalidDiagonal(usize, usize),
    /// The same diagonal appears twice.
    #[error("duplicate diagonal ({0}, {1})")]
    DuplicateDiagonal(usize, usize),
    /// Two diagonals cross in the interior.
    #[error("diagonals ({0}, {1}) and ({2}, {3}) cross")]
    CrossingDiagonals(usize, usize, usize, usize),
    /// An operation requiring a full triangulation got a partial system.
    #[error("diagonal system has {have} diagonals, a triangulation needs {need}")]
    NotATriangulation { have: usize, need: usize },
    /// A coordinate vector lies outside the admissible (nested) region.
    #[error("cross-ratio coordinates lie outside the admissible region")]
    CoordOutOfRange,
    /// Underlying projective computation degenerated.
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
}

/// An ideal polygon: distinct unit-circle vertices in strict ccw order.
#[derive(Debug, Clone)]
pub struct IdealPolygon<R: Real> {
    vertices: Vec<Complex<R>>,
}

fn tau<R: Real>() -> R {
    R::PI() + R::PI()
}

/// Argument normalized to `[0, 2*pi)`.
fn angle<R: Real>(z: Complex<R>) -> R {
    let t = z.arg();
    if t < R::zero() {
        t + tau()
    } else {
        t
    }
}

impl<R: Real> IdealPolygon<R> {
    /// Validate and build a polygon from unit-circle vertices.
    pub fn new(vertices: Vec<Complex<R>>, tol: &Tolerance<R>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        for (k, v) in vertices.iter().enumerate() {
            if !v.re.is_finite() || !v.im.is_finite() || (v.norm() - R::one()).abs() > tol.eps {
                return Err(PolygonError::NotOnCircle(k));
            }
        }
        // Strict ccw, winding once: all angular gaps positive and summing to
        // one full turn (a doubled winding would sum to a higher multiple).
        let angles: Vec<R> = vertices.iter().map(|v| angle(*v)).collect();
        let mut total = R::zero();
        for k in 0..n {
            let mut gap = angles[(k + 1) % n] - angles[k];
            if gap <= R::zero() {
                gap = gap + tau();
            }
            if !(gap > R::zero()) || gap >= tau() {
                return Err(PolygonError::NotCounterclockwise);
            }
            total = total + gap;
        }
        if (total - tau()).abs() > R::PI() {
            return Err(PolygonError::NotCounterclockwise);
        }
        Ok(Self { vertices })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false: construction requires at least three vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The vertices, counterclockwise.
    pub fn vertices(&self) -> &[Complex<R>] {
        &self.vertices
    }

    /// Vertex `k` as a sphere point.
    pub fn vertex_point(&self, k: usize) -> SpherePoint<R> {
        SpherePoint::from_complex(self.vertices[k])
    }

    /// Number of cross-ratio coordinates, `n - 3`.
    pub fn coordinate_count(&self) -> usize {
        self.vertices.len() - 3
    }

    /// Möbius-normalize so the first three vertices become `(-1, 1, i)`.
    ///
    /// The normalizing map preserves the unit circle and its orientation, so
    /// the result is again a valid polygon; on an already anchored polygon
    /// this is the identity up to rounding.
    pub fn normalize(&self, tol: &Tolerance<R>) -> Result<Self, PolygonError> {
        let anchors = [
            SpherePoint::from_real(-R::one()),
            SpherePoint::one(),
            SpherePoint::i(),
        ];
        let m = map_from_triples(
            &[
                self.vertex_point(0),
                self.vertex_point(1),
                self.vertex_point(2),
            ],
            &anchors,
            tol,
        )?;
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                m.apply(&SpherePoint::from_complex(*v))
                    .to_complex()
                    .ok_or(PolygonError::NotCounterclockwise)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices, tol)
    }

    /// Cross-ratio coordinates: `chi(a_j, a_{j+1}, a_{j+2}, a_{j+3})` for
    /// `j = 0 .. n-4`. For a valid ccw polygon these are positive reals.
    pub fn coordinates(&self, tol: &Tolerance<R>) -> Result<Vec<R>, PolygonError> {
        let n = self.vertices.len();
        let mut coords = Vec::with_capacity(n - 3);
        for j in 0..n - 3 {
            let chi = cross_ratio(
                &self.vertex_point(j),
                &self.vertex_point(j + 1),
                &self.vertex_point(j + 2),
                &self.vertex_point(j + 3),
                tol,
            )?;
            let z = chi.to_complex().ok_or(MoebiusError::DegenerateTriple)?;
            coords.push(z.re);
        }
        Ok(coords)
    }

    /// Rebuild the anchored polygon with the given coordinates.
    ///
    /// Vertices are placed one at a time from the anchors `(-1, 1, i)`; the
    /// admissible coordinate region is nested (whether a value is allowed
    /// depends on the earlier ones), so validity is checked on the finished
    /// polygon and any failure reports [`PolygonError::CoordOutOfRange`].
    pub fn from_coordinates(coords: &[R], tol: &Tolerance<R>) -> Result<Self, PolygonError> {
        for c in coords {
            if !c.is_finite() || *c <= R::zero() {
                return Err(PolygonError::CoordOutOfRange);
            }
        }
        let mut points = vec![
            SpherePoint::from_real(-R::one()),
            SpherePoint::one(),
            SpherePoint::i(),
        ];
        let standard = [
            SpherePoint::infinity(),
            SpherePoint::from_real(-R::one()),
            SpherePoint::zero(),
        ];
        for (j, c) in coords.iter().enumerate() {
            let back = map_from_triples(
                &standard,
                &[points[j], points[j + 1], points[j + 2]],
                tol,
            )
            .map_err(|_| PolygonError::CoordOutOfRange)?;
            points.push(back.apply(&SpherePoint::from_real(*c)));
        }
        let vertices = points
            .iter()
            .map(|p| p.to_complex().ok_or(PolygonError::CoordOutOfRange))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices, tol).map_err(|_| PolygonError::CoordOutOfRange)
    }
}

/// A polygon diagonal, stored with endpoints in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    i: usize,
    j: usize,
}

impl Diagonal {
    /// Diagonal between two distinct vertex indices (order-insensitive).
    pub fn new(a: usize, b: usize) -> Result<Self, PolygonError> {
        if a == b {
            return Err(PolygonError::InvalidDiagonal(a, b));
        }
        Ok(Self {
            i: a.min(b),
            j: a.max(b),
        })
    }

    /// Smaller endpoint.
    pub fn i(&self) -> usize {
        self.i
    }

    /// Larger endpoint.
    pub fn j(&self) -> usize {
        self.j
    }

    /// Whether this diagonal is admissible in an `n`-gon: in range and not a
    /// side.
    pub fn is_valid_for(&self, n: usize) -> bool {
        self.j < n && self.j - self.i >= 2 && !(self.i == 0 && self.j == n - 1)
    }

    /// Strict interior crossing with another diagonal (shared endpoints do
    /// not count as crossing).
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (i, j, k, l) = (self.i, self.j, other.i, other.j);
        (i < k && k < j && j < l) || (k < i && i < l && l < j)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

impl Serialize for Diagonal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.i, self.j).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagonal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (a, b) = <(usize, usize)>::deserialize(deserializer)?;
        Diagonal::new(a, b).map_err(D::Error::custom)
    }
}

/// An edge of the dual tree: two triangle indices separated by a diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEdge {
    /// Index into [`DiagonalSet::triangles`] of one side.
    pub first: usize,
    /// Index of the other side (`first < second`).
    pub second: usize,
    /// The diagonal the two triangles share.
    pub diagonal: Diagonal,
}

/// A validated set of pairwise non-crossing diagonals of an `n`-gon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSet {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl DiagonalSet {
    /// Validate a collection of diagonals for an `n`-gon: in range,
    /// non-adjacent endpoints, no duplicates, pairwise non-crossing.
    pub fn new(n: usize, mut diagonals: Vec<Diagonal>) -> Result<Self, PolygonError> {
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        diagonals.sort();
        for d in &diagonals {
            if !d.is_valid_for(n) {
                return Err(PolygonError::InvalidDiagonal(d.i, d.j));
            }
        }
        for w in diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(PolygonError::DuplicateDiagonal(w[0].i, w[0].j));
            }
        }
        for (a, d) in diagonals.iter().enumerate() {
            for e in &diagonals[a + 1..] {
                if d.crosses(e) {
                    return Err(PolygonError::CrossingDiagonals(d.i, d.j, e.i, e.j));
                }
            }
        }
        Ok(Self { n, diagonals })
    }

    /// The empty diagonal system of an `n`-gon.
    pub fn empty(n: usize) -> Result<Self, PolygonError> {
        Self::new(n, Vec::new())
    }

    /// Polygon size this system belongs to.
    pub fn polygon_size(&self) -> usize {
        self.n
    }

    /// The diagonals in sorted order.
    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// Number of diagonals.
    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    /// Whether the system is empty.
    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    /// Whether a diagonal is present.
    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.binary_search(d).is_ok()
    }

    /// Whether the system is a full triangulation (`n - 3` diagonals).
    pub fn is_triangulation(&self) -> bool {
        self.diagonals.len() == self.n - 3
    }

    /// Complete to a triangulation by scanning candidate diagonals in
    /// lexicographic order and inserting whenever non-crossing.
    ///
    /// Starting from the empty system this produces the fan at vertex 0.
    pub fn complete_to_triangulation(&self) -> Self {
        let mut diagonals = self.diagonals.clone();
        for i in 0..self.n {
            for j in i + 2..self.n {
                let d = Diagonal { i, j };
                if !d.is_valid_for(self.n) || diagonals.contains(&d) {
                    continue;
                }
                if diagonals.iter().all(|e| !d.crosses(e)) {
                    diagonals.push(d);
                }
            }
        }
        diagonals.sort();
        debug_assert_eq!(diagonals.len(), self.n - 3);
        Self {
            n: self.n,
            diagonals,
        }
    }

    /// The triangles of a triangulation, each as an increasing index triple,
    /// in lexicographic order.
    ///
    /// In the edge graph of a triangulated polygon every 3-clique bounds a
    /// face, so listing cliques of sides-plus-diagonals is exact.
    pub fn triangles(&self) -> Result<Vec<[usize; 3]>, PolygonError> {
        if !self.is_triangulation() {
            return Err(PolygonError::NotATriangulation {
                have: self.diagonals.len(),
                need: self.n - 3,
            });
        }
        let n = self.n;
        let mut adj = vec![BTreeSet::new(); n];
        let mut connect = |a: usize, b: usize| {
            adj[a].insert(b);
            adj[b].insert(a);
        };
        for k in 0..n {
            connect(k, (k + 1) % n);
        }
        for d in &self.diagonals {
            connect(d.i, d.j);
        }
        let mut triangles = Vec::with_capacity(n - 2);
        for a in 0..n {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > b) {
                    if adj[a].contains(&c) {
                        triangles.push([a, b, c]);
                    }
                }
            }
        }
        debug_assert_eq!(triangles.len(), n - 2);
        Ok(triangles)
    }

    /// Dual tree edges of a triangulation: one edge per diagonal, joining the
    /// two triangles that share it. Triangle indices refer to
    /// [`DiagonalSet::triangles`].
    pub fn dual_edges(&self) -> Result<Vec<DualEdge>, PolygonError> {
        let triangles = self.triangles()?;
        let mut edges = Vec::with_capacity(self.diagonals.len());
        for d in &self.diagonals {
            let mut owners = triangles
                .iter()
                .enumerate()
                .filter(|(_, t)| t.contains(&d.i) && t.contains(&d.j))
                .map(|(k, _)| k);
            let first = owners.next().expect("diagonal bounds a triangle");
            let second = owners.next().expect("interior diagonal bounds two");
            debug_assert!(owners.next().is_none());
            edges.push(DualEdge {
                first,
                second,
                diagonal: *d,
            });
        }
        Ok(edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn circle_pts(angles: &[f64]) -> Vec<C> {
        angles.iter().map(|t| C::from_polar(1.0, *t)).collect()
    }

    fn close(a: C, b: C) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn accepts_ccw_square_and_rejects_reversals() {
        let square = circle_pts(&[
            0.0,
            std::f64::consts::FRAC_PI_2,
            std::f64::consts::PI,
            -std::f64::consts::FRAC_PI_2,
        ]);
        assert!(IdealPolygon::new(square.clone(), &tol()).is_ok());
        let mut cw = square;
        cw.reverse();
        assert!(matches!(
            IdealPolygon::new(cw, &tol()),
            Err(PolygonError::NotCounterclockwise)
        ));
    }

    #[test]
    fn rejects_off_circle_and_tiny_polygons() {
        assert!(matches!(
            IdealPolygon::new(vec![C::new(0.5, 0.0), C::new(0.0, 1.0), C::new(-1.0, 0.0)], &tol()),
            Err(PolygonError::NotOnCircle(0))
        ));
        assert!(matches!(
            IdealPolygon::new(circle_pts(&[0.0, 1.0]), &tol()),
            Err(PolygonError::TooFewVertices(2))
        ));
    }

    #[test]
    fn rejects_double_winding() {
        // Angles increase but wrap twice around the circle.
        let p = IdealPolygon::new(circle_pts(&[0.0, 2.0, 4.0, 6.0, 1.5, 3.5, 5.5]), &tol());
        assert!(matches!(p, Err(PolygonError::NotCounterclockwise)));
    }

    #[test]
    fn normalize_frozen_image() {
        // (1, i, -1, -i) anchors to (-1, 1, i, (-3+4i)/5): the image of -i
        // under the map sending (1, i, -1) to (-1, 1, i), worked by hand.
        let p = IdealPolygon::new(
            vec![C::new(1.0, 0.0), C::new(0.0, 1.0), C::new(-1.0, 0.0), C::new(0.0, -1.0)],
            &tol(),
        )
        .unwrap();
        let q = p.normalize(&tol()).unwrap();
        assert!(close(q.vertices()[0], C::new(-1.0, 0.0)));
        assert!(close(q.vertices()[1], C::new(1.0, 0.0)));
        assert!(close(q.vertices()[2], C::new(0.0, 1.0)));
        assert!(close(q.vertices()[3], C::new(-0.6, 0.8)));
    }

    #[test]
    fn normalize_is_idempotent_on_anchored_polygons() {
        let anchored = IdealPolygon::new(
            vec![
                C::new(-1.0, 0.0),
                C::new(1.0, 0.0),
                C::new(0.0, 1.0),
                C::from_polar(1.0, 3.0 * std::f64::consts::FRAC_PI_4),
            ],
            &tol(),
        )
        .unwrap();
        let again = anchored.normalize(&tol()).unwrap();
        for (a, b) in anchored.vertices().iter().zip(again.vertices()) {
            assert!(close(*a, *b));
        }
    }

    #[test]
    fn square_coordinate_is_one() {
        let p = IdealPolygon::new(
            vec![C::new(-1.0, 0.0), C::new(0.0, -1.0), C::new(1.0, 0.0), C::new(0.0, 1.0)],
            &tol(),
        )
        .unwrap();
        let coords = p.coordinates(&tol()).unwrap();
        assert_eq!(coords.len(), 1);
        assert!((coords[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coordinates_are_positive_and_moebius_invariant() {
        let p = IdealPolygon::new(circle_pts(&[0.3, 1.1, 2.0, 3.1, 4.2, 5.5]), &tol()).unwrap();
        let coords = p.coordinates(&tol()).unwrap();
        assert_eq!(coords.len(), 3);
        assert!(coords.iter().all(|c| *c > 0.0));
        let normalized = p.normalize(&tol()).unwrap();
        let coords2 = normalized.coordinates(&tol()).unwrap();
        for (a, b) in coords.iter().zip(&coords2) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn coordinate_round_trip_reproduces_normalized_polygon() {
        let p = IdealPolygon::new(circle_pts(&[0.3, 1.1, 2.0, 3.1, 4.2, 5.5]), &tol()).unwrap();
        let rebuilt = IdealPolygon::from_coordinates(&p.coordinates(&tol()).unwrap(), &tol()).unwrap();
        let normalized = p.normalize(&tol()).unwrap();
        for (a, b) in normalized.vertices().iter().zip(rebuilt.vertices()) {
            assert!((a - b).norm() < 1e-9);
        }
    }

    #[test]
    fn quadrilateral_from_unit_coordinate_matches_frozen_vertex() {
        let p = IdealPolygon::from_coordinates(&[1.0], &tol()).unwrap();
        assert!(close(p.vertices()[3], C::new(-0.6, 0.8)));
    }

    #[test]
    fn from_coordinates_rejects_bad_values() {
        assert!(matches!(
            IdealPolygon::<f64>::from_coordinates(&[-2.0], &tol()),
            Err(PolygonError::CoordOutOfRange)
        ));
        assert!(matches!(
            IdealPolygon::<f64>::from_coordinates(&[0.0], &tol()),
            Err(PolygonError::CoordOutOfRange)
        ));
        // Jointly inadmissible pair: the second value would fold the polygon
        // back over the anchor arc.
        assert!(matches!(
            IdealPolygon::<f64>::from_coordinates(&[1.0, 1e9], &tol()),
            Err(PolygonError::CoordOutOfRange)
        ));
    }

    #[test]
    fn diagonal_validation() {
        assert!(Diagonal::new(3, 3).is_err());
        let d = Diagonal::new(4, 1).unwrap();
        assert_eq!((d.i(), d.j()), (1, 4));
        assert!(!Diagonal::new(0, 1).unwrap().is_valid_for(6));
        assert!(!Diagonal::new(0, 5).unwrap().is_valid_for(6));
        assert!(Diagonal::new(0, 4).unwrap().is_valid_for(6));
        assert!(Diagonal::new(0, 5).unwrap().is_valid_for(7));
    }

    #[test]
    fn crossing_predicate() {
        let d02 = Diagonal::new(0, 2).unwrap();
        let d13 = Diagonal::new(1, 3).unwrap();
        let d03 = Diagonal::new(0, 3).unwrap();
        assert!(d02.crosses(&d13));
        assert!(d13.crosses(&d02));
        assert!(!d02.crosses(&d03));
        assert!(!d02.crosses(&d02));
    }

    #[test]
    fn diagonal_set_validation() {
        let n = 6;
        let ok = DiagonalSet::new(
            n,
            vec![Diagonal::new(0, 2).unwrap(), Diagonal::new(2, 4).unwrap()],
        );
        assert!(ok.is_ok());
        assert!(matches!(
            DiagonalSet::new(n, vec![Diagonal::new(0, 2).unwrap(), Diagonal::new(1, 3).unwrap()]),
            Err(PolygonError::CrossingDiagonals(0, 2, 1, 3))
        ));
        assert!(matches!(
            DiagonalSet::new(n, vec![Diagonal::new(0, 2).unwrap(), Diagonal::new(2, 0).unwrap()]),
            Err(PolygonError::DuplicateDiagonal(0, 2))
        ));
        assert!(matches!(
            DiagonalSet::new(n, vec![Diagonal::new(4, 5).unwrap()]),
            Err(PolygonError::InvalidDiagonal(4, 5))
        ));
    }

    #[test]
    fn pentagon_completion_is_the_fan_at_zero() {
        let fan = DiagonalSet::empty(5).unwrap().complete_to_triangulation();
        let expect = vec![Diagonal::new(0, 2).unwrap(), Diagonal::new(0, 3).unwrap()];
        assert_eq!(fan.diagonals(), expect.as_slice());
        assert!(fan.is_triangulation());
    }

    #[test]
    fn completion_preserves_existing_diagonals() {
        let start = DiagonalSet::new(6, vec![Diagonal::new(1, 3).unwrap()]).unwrap();
        let full = start.complete_to_triangulation();
        assert!(full.contains(&Diagonal::new(1, 3).unwrap()));
        assert!(full.is_triangulation());
    }

    #[test]
    fn hexagon_star_triangulation_shapes() {
        // {(0,2), (2,4), (0,4)}: central triangle (0,2,4) with three ears;
        // the dual tree is a star centered there.
        let ds = DiagonalSet::new(
            6,
            vec![
                Diagonal::new(0, 2).unwrap(),
                Diagonal::new(2, 4).unwrap(),
                Diagonal::new(0, 4).unwrap(),
            ],
        )
        .unwrap();
        let tris = ds.triangles().unwrap();
        assert_eq!(tris, vec![[0, 1, 2], [0, 2, 4], [0, 4, 5], [2, 3, 4]]);
        let edges = ds.dual_edges().unwrap();
        assert_eq!(edges.len(), 3);
        let center = 1; // index of [0, 2, 4]
        let mut degree = [0usize; 4];
        for e in &edges {
            degree[e.first] += 1;
            degree[e.second] += 1;
        }
        assert_eq!(degree[center], 3);
        assert!(degree.iter().filter(|&&d| d == 1).count() == 3);
    }

    #[test]
    fn hexagon_path_triangulation_shapes() {
        // {(0,2), (0,3), (3,5)}: the dual tree is a path of four triangles.
        let ds = DiagonalSet::new(
            6,
            vec![
                Diagonal::new(0, 2).unwrap(),
                Diagonal::new(0, 3).unwrap(),
                Diagonal::new(3, 5).unwrap(),
            ],
        )
        .unwrap();
        let tris = ds.triangles().unwrap();
        assert_eq!(tris, vec![[0, 1, 2], [0, 2, 3], [0, 3, 5], [3, 4, 5]]);
        let edges = ds.dual_edges().unwrap();
        let mut degree = [0usize; 4];
        for e in &edges {
            degree[e.first] += 1;
            degree[e.second] += 1;
        }
        let mut sorted = degree.to_vec();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 2, 2]);
    }

    #[test]
    fn triangles_requires_triangulation() {
        let ds = DiagonalSet::new(6, vec![Diagonal::new(0, 2).unwrap()]).unwrap();
        assert!(matches!(
            ds.triangles(),
            Err(PolygonError::NotATriangulation { have: 1, need: 3 })
        ));
    }

    #[test]
    fn diagonal_serde_is_a_pair() {
        let d = Diagonal::new(2, 5).unwrap();
        assert_eq!(serde_json::to_string(&d).unwrap(), "[2,5]");
        let back: Diagonal = serde_json::from_str("[5,2]").unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<Diagonal>("[3,3]").is_err());
    }
}
