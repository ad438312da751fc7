//! Computational geometry of ideal polygons and crowns on the Riemann sphere.
//!
//! The crate has four layers:
//!
//! * projective geometry: points on the sphere in homogeneous coordinates,
//!   Möbius maps, cross-ratios and elliptic one-parameter groups
//!   ([`moebius`]);
//! * combinatorial geometry: ideal polygons with their cross-ratio
//!   coordinates and triangulations ([`polygon`]), grafting of weighted
//!   triangulations into tip configurations with an exact inverse and fiber
//!   enumeration ([`grafting`]), and measured laminations on crowns with
//!   twist charts and dual metric graphs ([`crown`]);
//! * exact-rational combinatorics: minimal matchings of weighted arc rows
//!   and the two-stage gluing of crowns onto surfaces ([`matching`]);
//! * numerics: a developing-map engine for the linear equation attached to
//!   a monic centered polynomial, asymptotic tips with error reporting,
//!   exact sector geometry, and finite-difference Schwarzian checks
//!   ([`ode`]).
//!
//! All floating-point modules are generic over the scalar via
//! [`scalar::Real`]; `f64` aliases are exported at the crate root. The
//! matching layer is exact (`i64` rationals) and not scalar-generic.

// Guards are written as `!(x > bound)` on purpose: for generic scalars the
// negated form also rejects NaN, which `x <= bound` would silently accept.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod crown;
pub mod grafting;
pub mod matching;
pub mod moebius;
pub mod ode;
pub mod polygon;
pub mod scalar;

pub use scalar::Real;

/// Double-precision point on the Riemann sphere.
pub type SpherePoint64 = moebius::SpherePoint<f64>;
/// Double-precision Möbius transformation.
pub type MoebiusMap64 = moebius::MoebiusMap<f64>;
/// Double-precision comparison tolerances.
pub type Tolerance64 = moebius::Tolerance<f64>;
/// Double-precision ideal polygon.
pub type IdealPolygon64 = polygon::IdealPolygon<f64>;
/// Double-precision weighted diagonal system.
pub type WeightedDiagonals64 = grafting::WeightedDiagonals<f64>;
/// Double-precision tip configuration.
pub type TipConfiguration64 = grafting::TipConfiguration<f64>;
/// Double-precision crown lamination.
pub type CrownLamination64 = crown::CrownLamination<f64>;
/// Double-precision twist chart.
pub type TwistChart64 = crown::TwistChart<f64>;
/// Double-precision monic centered polynomial.
pub type PolynomialQD64 = ode::PolynomialQD<f64>;
/// Double-precision developing-map engine.
pub type DevelopingMap64 = ode::DevelopingMap<f64>;
/// Double-precision engine configuration.
pub type EngineConfig64 = ode::EngineConfig<f64>;
