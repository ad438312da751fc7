//! Points on the Riemann sphere and the Möbius maps acting on them.
//!
//! Points are stored in homogeneous coordinates `(z1, z2)`, canonicalized so
//! that `max(|z1|, |z2|) = 1`. This keeps every point, including infinity, in
//! a uniform representation and makes projective comparisons scale-free.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::Real;

/// Errors from projective constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoebiusError {
    /// Two of the three points defining a map or cross-ratio coincide.
    #[error("triple of points is projectively degenerate")]
    DegenerateTriple,
    /// A matrix with (near-)zero or non-finite determinant was constructed.
    #[error("matrix is singular or non-finite")]
    SingularMatrix,
    /// Homogeneous coordinates were the zero vector or non-finite.
    #[error("homogeneous coordinates are zero or non-finite")]
    InvalidHomogeneous,
}

/// Comparison tolerance for projective equality and degeneracy tests.
///
/// The default (`1e-10`) is tuned for `f64`; pass an explicit value when
/// working in `f32`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance<R: Real> {
    /// Bound on the canonicalized homogeneous determinant `|z1 w2 - z2 w1|`.
    pub eps: R,
}

impl<R: Real> Default for Tolerance<R> {
    fn default() -> Self {
        Self {
            eps: R::from_f64_lossy(1e-10),
        }
    }
}

impl<R: Real> Tolerance<R> {
    /// Tolerance with an explicit bound.
    pub fn new(eps: R) -> Self {
        Self { eps }
    }
}

/// A point of the Riemann sphere in canonicalized homogeneous coordinates.
#[derive(Debug, Clone, Copy)]
pub struct SpherePoint<R: Real> {
    z1: Complex<R>,
    z2: Complex<R>,
}

fn is_finite_c<R: Real>(z: Complex<R>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Homogeneous determinant `p1 q2 - p2 q1`; zero exactly when `p` and `q`
/// represent the same sphere point.
fn det2<R: Real>(p: &SpherePoint<R>, q: &SpherePoint<R>) -> Complex<R> {
    p.z1 * q.z2 - p.z2 * q.z1
}

impl<R: Real> SpherePoint<R> {
    /// Point from homogeneous coordinates; canonicalizes the scale.
    pub fn from_homogeneous(z1: Complex<R>, z2: Complex<R>) -> Result<Self, MoebiusError> {
        if !is_finite_c(z1) || !is_finite_c(z2) {
            return Err(MoebiusError::InvalidHomogeneous);
        }
        let m = z1.norm().max(z2.norm());
        if !(m > R::zero()) || !m.is_finite() {
            return Err(MoebiusError::InvalidHomogeneous);
        }
        Ok(Self {
            z1: z1 / m,
            z2: z2 / m,
        })
    }

    /// The finite point `z`.
    pub fn from_complex(z: Complex<R>) -> Self {
        Self::from_homogeneous(z, Complex::new(R::one(), R::zero()))
            .unwrap_or_else(|_| Self::infinity())
    }

    /// The finite point `x + 0i`.
    pub fn from_real(x: R) -> Self {
        Self::from_complex(Complex::new(x, R::zero()))
    }

    /// The point at infinity, `(1 : 0)`.
    pub fn infinity() -> Self {
        Self {
            z1: Complex::new(R::one(), R::zero()),
            z2: Complex::new(R::zero(), R::zero()),
        }
    }

    /// The origin, `(0 : 1)`.
    pub fn zero() -> Self {
        Self {
            z1: Complex::new(R::zero(), R::zero()),
            z2: Complex::new(R::one(), R::zero()),
        }
    }

    /// The point `1`.
    pub fn one() -> Self {
        Self::from_real(R::one())
    }

    /// The point `i`.
    pub fn i() -> Self {
        Self::from_complex(Complex::new(R::zero(), R::one()))
    }

    /// Canonicalized homogeneous coordinates `(z1, z2)`.
    pub fn homogeneous(&self) -> (Complex<R>, Complex<R>) {
        (self.z1, self.z2)
    }

    /// Whether this is exactly the point at infinity.
    pub fn is_infinity(&self) -> bool {
        self.z2.re == R::zero() && self.z2.im == R::zero()
    }

    /// Affine coordinate `z1 / z2`, or `None` at infinity.
    pub fn to_complex(&self) -> Option<Complex<R>> {
        if self.is_infinity() {
            None
        } else {
            Some(self.z1 / self.z2)
        }
    }

    /// Projective equality: canonicalized determinant below `tol.eps`.
    pub fn projectively_eq(&self, other: &Self, tol: &Tolerance<R>) -> bool {
        det2(self, other).norm() < tol.eps
    }

    /// Chordal distance on the sphere, normalized to `[0, 1]`
    /// (antipodal points are at distance 1).
    pub fn chordal_distance(&self, other: &Self) -> R {
        let np = (self.z1.norm_sqr() + self.z2.norm_sqr()).sqrt();
        let nq = (other.z1.norm_sqr() + other.z2.norm_sqr()).sqrt();
        det2(self, other).norm() / (np * nq)
    }
}

impl<R: Real + Serialize> Serialize for SpherePoint<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_complex() {
            None => "inf".serialize(serializer),
            Some(z) => {
                #[derive(Serialize)]
                struct Finite<R> {
                    re: R,
                    im: R,
                }
                Finite { re: z.re, im: z.im }.serialize(serializer)
            }
        }
    }
}

impl<'de, R: Real + Deserialize<'de>> Deserialize<'de> for SpherePoint<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr<R> {
            Label(String),
            Finite { re: R, im: R },
        }
        match Repr::<R>::deserialize(deserializer)? {
            Repr::Label(s) if s == "inf" => Ok(SpherePoint::infinity()),
            Repr::Label(s) => Err(D::Error::custom(format!(
                "expected \"inf\" or {{re, im}}, got string {s:?}"
            ))),
            Repr::Finite { re, im } => {
                let p = SpherePoint::from_complex(Complex::new(re, im));
                if !re.is_finite() || !im.is_finite() {
                    return Err(D::Error::custom("non-finite point coordinates"));
                }
                Ok(p)
            }
        }
    }
}

/// A Möbius transformation, stored as a matrix normalized to determinant 1.
///
/// The normalization leaves a global sign ambiguity (the matrix group double
/// covers the Möbius group), so equality of maps is tested projectively with
/// [`MoebiusMap::projectively_eq`].
#[derive(Debug, Clone, Copy)]
pub struct MoebiusMap<R: Real> {
    a: Complex<R>,
    b: Complex<R>,
    c: Complex<R>,
    d: Complex<R>,
}

impl<R: Real> MoebiusMap<R> {
    /// Map `z -> (a z + b) / (c z + d)`; fails if the matrix is singular.
    ///
    /// Singularity here is a machine-level guard (determinant negligible
    /// relative to the squared entry scale), not a user tolerance: degeneracy
    /// of the defining data is detected before construction by the callers.
    pub fn new(
        a: Complex<R>,
        b: Complex<R>,
        c: Complex<R>,
        d: Complex<R>,
    ) -> Result<Self, MoebiusError> {
        for z in [a, b, c, d] {
            if !is_finite_c(z) {
                return Err(MoebiusError::SingularMatrix);
            }
        }
        let det = a * d - b * c;
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        let guard = R::epsilon() * R::from_f64_lossy(64.0) * scale * scale;
        if !is_finite_c(det) || det.norm() <= guard {
            return Err(MoebiusError::SingularMatrix);
        }
        let s = det.sqrt();
        Ok(Self {
            a: a / s,
            b: b / s,
            c: c / s,
            d: d / s,
        })
    }

    /// The identity map.
    pub fn identity() -> Self {
        let one = Complex::new(R::one(), R::zero());
        let zero = Complex::new(R::zero(), R::zero());
        Self {
            a: one,
            b: zero,
            c: zero,
            d: one,
        }
    }

    /// Matrix entries `(a, b, c, d)`, normalized to determinant 1.
    pub fn coefficients(&self) -> (Complex<R>, Complex<R>, Complex<R>, Complex<R>) {
        (self.a, self.b, self.c, self.d)
    }

    /// Image of a sphere point.
    pub fn apply(&self, p: &SpherePoint<R>) -> SpherePoint<R> {
        let (z1, z2) = p.homogeneous();
        let w1 = self.a * z1 + self.b * z2;
        let w2 = self.c * z1 + self.d * z2;
        SpherePoint::from_homogeneous(w1, w2)
            .expect("invertible map sends nonzero vectors to nonzero vectors")
    }

    /// Image of a finite complex number.
    pub fn apply_complex(&self, z: Complex<R>) -> SpherePoint<R> {
        self.apply(&SpherePoint::from_complex(z))
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let a = self.a * other.a + self.b * other.c;
        let b = self.a * other.b + self.b * other.d;
        let c = self.c * other.a + self.d * other.c;
        let d = self.c * other.b + self.d * other.d;
        // Determinant is 1 up to rounding; renormalize so long compositions
        // cannot drift.
        Self::new(a, b, c, d).expect("product of unimodular matrices is unimodular")
    }

    /// Inverse map.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Projective equality of maps: `min(|M - N|, |M + N|) < tol.eps`
    /// entrywise in the determinant-1 normalizations.
    pub fn projectively_eq(&self, other: &Self, tol: &Tolerance<R>) -> bool {
        let diff = [
            self.a - other.a,
            self.b - other.b,
            self.c - other.c,
            self.d - other.d,
        ];
        let sum = [
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
            self.d + other.d,
        ];
        let max_norm = |m: &[Complex<R>; 4]| {
            m.iter()
                .map(|z| z.norm())
                .fold(R::zero(), |acc, x| acc.max(x))
        };
        max_norm(&diff).min(max_norm(&sum)) < tol.eps
    }
}

/// Map sending `(p1, p2, p3)` to `(0, 1, inf)`.
///
/// Row construction: the linear form `L_i(Z) = det(Z, P_i)` vanishes exactly
/// at `P_i`, so `[L3(P2) * L1 ; L1(P2) * L3]` sends `P1 -> 0`, `P3 -> inf`,
/// and balances the scales so that `P2 -> 1`.
fn map_to_standard<R: Real>(
    triple: &[SpherePoint<R>; 3],
    tol: &Tolerance<R>,
) -> Result<MoebiusMap<R>, MoebiusError> {
    let [p1, p2, p3] = triple;
    if p1.projectively_eq(p2, tol) || p2.projectively_eq(p3, tol) || p1.projectively_eq(p3, tol) {
        return Err(MoebiusError::DegenerateTriple);
    }
    let (a1, b1) = p1.homogeneous();
    let (a3, b3) = p3.homogeneous();
    let l3_p2 = det2(p2, p3);
    let l1_p2 = det2(p2, p1);
    MoebiusMap::new(b1 * l3_p2, -a1 * l3_p2, b3 * l1_p2, -a3 * l1_p2)
}

/// The unique Möbius map sending one projectively distinct triple to another.
pub fn map_from_triples<R: Real>(
    src: &[SpherePoint<R>; 3],
    dst: &[SpherePoint<R>; 3],
    tol: &Tolerance<R>,
) -> Result<MoebiusMap<R>, MoebiusError> {
    let a = map_to_standard(src, tol)?;
    let b = map_to_standard(dst, tol)?;
    Ok(b.inverse().compose(&a))
}

/// Cross-ratio `chi(a, b, c, d)`: the image of `d` under the map sending
/// `(a, b, c) -> (inf, -1, 0)`.
///
/// With this normalization `chi(inf, -1, 0, z) = z` and the value is invariant
/// under rotating the arguments by two positions. The result may be `0` or
/// `inf` (when `d` meets `c` or `a`); only degeneracy among `(a, b, c)` is an
/// error.
pub fn cross_ratio<R: Real>(
    a: &SpherePoint<R>,
    b: &SpherePoint<R>,
    c: &SpherePoint<R>,
    d: &SpherePoint<R>,
    tol: &Tolerance<R>,
) -> Result<SpherePoint<R>, MoebiusError> {
    if a.projectively_eq(b, tol) || b.projectively_eq(c, tol) || a.projectively_eq(c, tol) {
        return Err(MoebiusError::DegenerateTriple);
    }
    let num = -(det2(b, a) * det2(d, c));
    let den = det2(b, c) * det2(d, a);
    SpherePoint::from_homogeneous(num, den).map_err(|_| MoebiusError::DegenerateTriple)
}

/// Elliptic Möbius map fixing `p` and `q`, rotating by angle `t` around them.
///
/// Normalization: conjugating `p -> 0`, `q -> inf` turns the map into
/// `z -> exp(-i t) z`. In particular `elliptic(0, inf, t)` is clockwise
/// rotation by `t` and `elliptic(inf, 0, t)` is the counterclockwise one.
/// As an element of the Möbius group the result is 2π-periodic in `t`.
pub fn elliptic<R: Real>(
    p: &SpherePoint<R>,
    q: &SpherePoint<R>,
    t: R,
    tol: &Tolerance<R>,
) -> Result<MoebiusMap<R>, MoebiusError> {
    if p.projectively_eq(q, tol) {
        return Err(MoebiusError::DegenerateTriple);
    }
    // Third anchor: the first of {0, 1, i} distinct from both fixed points.
    let candidates = [SpherePoint::zero(), SpherePoint::one(), SpherePoint::i()];
    let r = candidates
        .iter()
        .find(|r| !r.projectively_eq(p, tol) && !r.projectively_eq(q, tol))
        .copied()
        .ok_or(MoebiusError::DegenerateTriple)?;
    let conj = map_from_triples(
        &[*p, *q, r],
        &[SpherePoint::zero(), SpherePoint::infinity(), SpherePoint::one()],
        tol,
    )?;
    let half = t / R::from_f64_lossy(2.0);
    let zero = Complex::new(R::zero(), R::zero());
    let rot = MoebiusMap::new(
        Complex::from_polar(R::one(), -half),
        zero,
        zero,
        Complex::from_polar(R::one(), half),
    )?;
    Ok(conj.inverse().compose(&rot).compose(&conj))
}
