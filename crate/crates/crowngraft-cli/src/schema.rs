//! Versioned JSON interchange documents.
//!
//! Every document carries `"schema": "crowngraft/v1"`. Rational weights are
//! exchanged as strings (`"3/4"`, `"2"`) so they survive JSON's float-only
//! numbers exactly. Floats rely on `serde_json`'s shortest round-trip
//! formatting, so emitted documents are canonical for fixed inputs.

use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crowngraft::crown::{CrownArc, CrownCoords, CrownLamination, DualMetricGraph};
use crowngraft::crown::{DualEdgeKind, DualStubKind, DualVertexKind};
use crowngraft::grafting::{TipConfiguration, WeightedDiagonals};
use crowngraft::moebius::Tolerance;
use crowngraft::polygon::{Diagonal, IdealPolygon};
use crowngraft::SpherePoint64;

use crate::error::CliError;

/// Schema tag stamped on every document.
pub const SCHEMA: &str = "crowngraft/v1";

/// Name of the environment variable overriding the default tolerance.
pub const TOL_ENV: &str = "CROWNGRAFT_TOL";

/// Reject a document whose schema tag is missing or foreign.
pub fn check_schema(tag: &str) -> Result<(), CliError> {
    if tag == SCHEMA {
        Ok(())
    } else {
        Err(CliError::Schema(format!(
            "unsupported schema tag {tag:?}; this build speaks {SCHEMA:?}"
        )))
    }
}

/// Resolve the working tolerance: flag value, else `CROWNGRAFT_TOL`, else
/// the library default.
pub fn resolve_tolerance(flag: Option<f64>) -> Result<Tolerance<f64>, CliError> {
    if let Some(t) = flag {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Schema(format!(
                "--tol must be a positive finite number, got {t}"
            )));
        }
        return Ok(Tolerance::new(t));
    }
    match std::env::var(TOL_ENV) {
        Ok(raw) => {
            let t: f64 = raw.parse().map_err(|_| {
                CliError::Schema(format!("{TOL_ENV} must be a number, got {raw:?}"))
            })?;
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::Schema(format!(
                    "{TOL_ENV} must be positive and finite, got {raw:?}"
                )));
            }
            Ok(Tolerance::new(t))
        }
        Err(_) => Ok(Tolerance::default()),
    }
}

// ------------------------------------------------------------------- I/O

/// Read an entire input: a path, or stdin when the path is `None` or `-`.
pub fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

/// Write an output document: to a path, or stdout when `None` or `-`.
pub fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::write(p, content)?;
            Ok(())
        }
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

/// Parse a JSON document of the given shape.
pub fn parse<T: for<'de> Deserialize<'de>>(raw: &str) -> Result<T, CliError> {
    Ok(serde_json::from_str(raw)?)
}

/// Serialize a document, pretty-printed with a trailing newline.
pub fn emit<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

// -------------------------------------------------------------- rationals

/// A rational weight carried as a string in JSON (`"3/4"`, `"2"`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rat(pub Rational64);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        let value = Rational64::from_str(raw.trim()).map_err(|e| {
            serde::de::Error::custom(format!("bad rational {raw:?}: {e}"))
        })?;
        Ok(Rat(value))
    }
}

// ------------------------------------------------------- polygon documents

/// A polygon given either by its cross-ratio coordinates or by explicit
/// ideal vertices on the unit circle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonSpec {
    /// Cross-ratio coordinates (length `n - 3`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<f64>>,
    /// Ideal vertices in counterclockwise order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<SpherePoint64>>,
}

impl PolygonSpec {
    /// Build the polygon this spec describes.
    pub fn resolve(&self, tol: &Tolerance<f64>) -> Result<IdealPolygon<f64>, CliError> {
        match (&self.coordinates, &self.vertices) {
            (Some(coords), None) => Ok(IdealPolygon::from_coordinates(coords, tol)?),
            (None, Some(points)) => {
                let complexes: Result<Vec<_>, CliError> = points
                    .iter()
                    .map(|p| {
                        p.to_complex().ok_or_else(|| {
                            CliError::Domain(
                                "polygon vertices must be finite points on the unit circle"
                                    .into(),
                            )
                        })
                    })
                    .collect();
                Ok(IdealPolygon::new(complexes?, tol)?)
            }
            _ => Err(CliError::Schema(
                "polygon needs exactly one of \"coordinates\" or \"vertices\"".into(),
            )),
        }
    }
}

/// `polygon` input.
#[derive(Debug, Deserialize)]
pub struct PolygonInput {
    /// Schema tag.
    pub schema: String,
    /// The polygon description.
    #[serde(flatten)]
    pub polygon: PolygonSpec,
}

/// Canonical polygon body: vertices and coordinates together.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolygonBody {
    /// Ideal vertices in counterclockwise order.
    pub vertices: Vec<SpherePoint64>,
    /// Cross-ratio coordinates.
    pub coordinates: Vec<f64>,
}

impl PolygonBody {
    /// Snapshot a polygon.
    pub fn of(poly: &IdealPolygon<f64>, tol: &Tolerance<f64>) -> Result<Self, CliError> {
        Ok(Self {
            vertices: poly
                .vertices()
                .iter()
                .map(|&z| SpherePoint64::from_complex(z))
                .collect(),
            coordinates: poly.coordinates(tol)?,
        })
    }
}

/// `polygon` output.
#[derive(Debug, Serialize)]
pub struct PolygonDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// The resolved polygon.
    pub polygon: PolygonBody,
}

// ------------------------------------------------------ grafting documents

/// A diagonal with a grafting weight.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct WeightedDiagonalJson {
    /// Vertex pair, smaller first.
    pub diagonal: Diagonal,
    /// Grafting weight in radians.
    pub weight: f64,
}

/// Convert the JSON list into the validated core type.
pub fn weighted_diagonals(
    n: usize,
    list: &[WeightedDiagonalJson],
) -> Result<WeightedDiagonals<f64>, CliError> {
    let pairs = list.iter().map(|w| (w.diagonal, w.weight)).collect();
    Ok(WeightedDiagonals::new(n, pairs)?)
}

/// `graft` input: a polygon plus weighted diagonals.
#[derive(Debug, Deserialize)]
pub struct GraftInput {
    /// Schema tag.
    pub schema: String,
    /// Base polygon.
    pub polygon: PolygonSpec,
    /// Weighted diagonals (missing diagonals get weight zero).
    pub diagonals: Vec<WeightedDiagonalJson>,
}

/// `graft` output: the tip configuration.
#[derive(Debug, Serialize)]
pub struct TipsDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// Tips indexed by polygon vertex.
    pub tips: Vec<SpherePoint64>,
}

/// `ungraft` input: tips plus the triangulation to read weights off.
#[derive(Debug, Deserialize)]
pub struct UngraftInput {
    /// Schema tag.
    pub schema: String,
    /// Tip configuration.
    pub tips: Vec<SpherePoint64>,
    /// Diagonals of a triangulation of the polygon.
    pub diagonals: Vec<Diagonal>,
}

/// `ungraft` output: the recovered polygon and weights.
#[derive(Debug, Serialize)]
pub struct UngraftDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// Recovered polygon.
    pub polygon: PolygonBody,
    /// Recovered weights on the given triangulation.
    pub diagonals: Vec<WeightedDiagonalJson>,
}

/// `fiber` input: weighted diagonals on an `n`-gon.
#[derive(Debug, Deserialize)]
pub struct FiberInput {
    /// Schema tag.
    pub schema: String,
    /// Number of polygon vertices.
    pub n: usize,
    /// Base weights.
    pub diagonals: Vec<WeightedDiagonalJson>,
    /// Largest full-turn shift to enumerate (flag `--nmax` overrides).
    #[serde(default)]
    pub nmax: Option<u32>,
}

/// One fiber element.
#[derive(Debug, Serialize)]
pub struct FiberElementJson {
    /// Full-turn shift per diagonal, in diagonal order.
    pub shifts: Vec<u32>,
    /// Lifted weights.
    pub diagonals: Vec<WeightedDiagonalJson>,
}

/// `fiber` output.
#[derive(Debug, Serialize)]
pub struct FiberDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// All lifts with shifts up to the bound.
    pub elements: Vec<FiberElementJson>,
}

/// Snapshot weighted diagonals into JSON order.
pub fn weighted_diagonals_json(w: &WeightedDiagonals<f64>) -> Vec<WeightedDiagonalJson> {
    w.pairs()
        .map(|(diagonal, weight)| WeightedDiagonalJson { diagonal, weight })
        .collect()
}

/// Build a tip configuration from JSON points.
pub fn tip_configuration(points: &[SpherePoint64]) -> Result<TipConfiguration<f64>, CliError> {
    Ok(TipConfiguration::new(points.to_vec())?)
}

// --------------------------------------------------------- crown documents

/// A measured crown lamination in serialization form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaminationJson {
    /// Number of cusps.
    pub m: usize,
    /// Weight of the boundary leaf (only valid without boundary arcs).
    #[serde(default)]
    pub leaf_weight: f64,
    /// The arcs.
    pub arcs: Vec<CrownArc<f64>>,
}

impl LaminationJson {
    /// Validate into the core type.
    pub fn resolve(&self) -> Result<CrownLamination<f64>, CliError> {
        Ok(CrownLamination::new(self.m, self.arcs.clone(), self.leaf_weight)?)
    }

    /// Snapshot a validated lamination.
    pub fn of(lam: &CrownLamination<f64>) -> Self {
        Self {
            m: lam.cusp_count(),
            leaf_weight: lam.leaf_weight(),
            arcs: lam.arcs(),
        }
    }
}

/// `crown-coords` input: exactly one of the two representations.
#[derive(Debug, Deserialize)]
pub struct CrownInput {
    /// Schema tag.
    pub schema: String,
    /// Lamination to convert to coordinates.
    #[serde(default)]
    pub lamination: Option<LaminationJson>,
    /// Coordinates to convert to a lamination.
    #[serde(default)]
    pub coords: Option<CrownCoords<f64>>,
}

/// Dual-graph vertex in JSON form.
#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DualVertexJson {
    /// Region over a chord.
    Chord {
        /// Smaller endpoint.
        from: usize,
        /// Larger endpoint.
        to: usize,
    },
    /// Region between consecutive boundary arcs.
    Sector {
        /// Index in cusp order.
        index: usize,
    },
    /// The single boundary region when no boundary arcs exist.
    Collar,
}

/// Dual-graph edge in JSON form.
#[derive(Debug, Serialize)]
pub struct DualEdgeJson {
    /// First endpoint vertex index.
    pub a: usize,
    /// Second endpoint vertex index.
    pub b: usize,
    /// Metric length.
    pub length: f64,
    /// `"chord"` or `"boundary_arc"`.
    pub kind: &'static str,
    /// Defining cusp labels (two for a chord, one for a boundary arc).
    pub labels: Vec<usize>,
}

/// Dual-graph stub in JSON form.
#[derive(Debug, Serialize)]
pub struct DualStubJson {
    /// Vertex the stub hangs from.
    pub vertex: usize,
    /// `"side"` (infinite) or `"boundary_leaf"` (finite).
    pub kind: &'static str,
    /// Side index for side stubs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<usize>,
    /// Length for finite stubs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<f64>,
}

/// Dual metric graph in JSON form.
#[derive(Debug, Serialize)]
pub struct DualGraphJson {
    /// Vertices (complementary regions).
    pub vertices: Vec<DualVertexJson>,
    /// Finite edges; the first `cycle_edges` form the unique cycle.
    pub edges: Vec<DualEdgeJson>,
    /// Stubs.
    pub stubs: Vec<DualStubJson>,
    /// Number of leading edges forming the cycle.
    pub cycle_edges: usize,
    /// Total cycle length.
    pub cycle_length: f64,
    /// Whether every vertex has total degree three.
    pub trivalent: bool,
}

impl DualGraphJson {
    /// Snapshot a dual metric graph.
    pub fn of(g: &DualMetricGraph<f64>) -> Self {
        let vertices = g
            .vertices()
            .iter()
            .map(|v| match *v {
                DualVertexKind::Chord { from, to } => DualVertexJson::Chord { from, to },
                DualVertexKind::Sector(index) => DualVertexJson::Sector { index },
                DualVertexKind::Collar => DualVertexJson::Collar,
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .map(|e| {
                let (kind, labels) = match e.kind {
                    DualEdgeKind::Chord { from, to } => ("chord", vec![from, to]),
                    DualEdgeKind::BoundaryArc { cusp } => ("boundary_arc", vec![cusp]),
                };
                DualEdgeJson {
                    a: e.a,
                    b: e.b,
                    length: e.length,
                    kind,
                    labels,
                }
            })
            .collect();
        let stubs = g
            .stubs()
            .iter()
            .map(|s| match s.kind {
                DualStubKind::Side(side) => DualStubJson {
                    vertex: s.vertex,
                    kind: "side",
                    side: Some(side),
                    length: None,
                },
                DualStubKind::BoundaryLeaf(length) => DualStubJson {
                    vertex: s.vertex,
                    kind: "boundary_leaf",
                    side: None,
                    length: Some(length),
                },
            })
            .collect();
        Self {
            vertices,
            edges,
            stubs,
            cycle_edges: g.cycle_edge_count(),
            cycle_length: g.cycle_length(),
            trivalent: g.is_trivalent(),
        }
    }
}

/// `crown-coords` output: both representations plus the dual graph.
#[derive(Debug, Serialize)]
pub struct CrownDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// Lamination form.
    pub lamination: LaminationJson,
    /// Coordinate form.
    pub coords: CrownCoords<f64>,
    /// Dual metric graph.
    pub dual: DualGraphJson,
}

// ------------------------------------------------------ matching documents

/// One end of a row of arcs, with rational weight.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ArcEndJson {
    /// Caller's label for the arc this end belongs to.
    pub origin: usize,
    /// Positive weight.
    pub weight: Rat,
}

/// A split reference: piece `piece` of row entry `entry`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SplitRefJson {
    /// Index into the row.
    pub entry: usize,
    /// Piece within that entry, left to right.
    pub piece: usize,
}

/// One strand of a matching.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct StrandJson {
    /// Piece of the top row.
    pub top: SplitRefJson,
    /// Piece of the bottom row.
    pub bottom: SplitRefJson,
    /// Strand weight.
    pub weight: Rat,
}

/// `match` input: two balanced rows.
#[derive(Debug, Deserialize)]
pub struct MatchInput {
    /// Schema tag.
    pub schema: String,
    /// Top row, left to right.
    pub top: Vec<ArcEndJson>,
    /// Bottom row, left to right.
    pub bottom: Vec<ArcEndJson>,
}

/// `match` output.
#[derive(Debug, Serialize)]
pub struct MatchDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// The minimal matching, left to right.
    pub strands: Vec<StrandJson>,
    /// Number of matchings found by exhaustive search (with `--exhaustive`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive_count: Option<usize>,
}

/// A crown strand entering a gluing scene.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CrownStrandJson {
    /// Cusp label.
    pub cusp: usize,
    /// Twist count.
    pub twist: i64,
    /// Position along the gluing circle.
    pub position: Rat,
    /// Positive weight.
    pub weight: Rat,
}

/// A surface arc entering a gluing scene.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SurfaceArcJson {
    /// Position of the first endpoint.
    pub first: Rat,
    /// Position of the second endpoint.
    pub second: Rat,
    /// Positive weight.
    pub weight: Rat,
}

/// `glue` input: a full gluing scene.
#[derive(Debug, Deserialize)]
pub struct GlueInput {
    /// Schema tag.
    pub schema: String,
    /// Crown strands.
    pub crown: Vec<CrownStrandJson>,
    /// Surface arcs.
    pub surface: Vec<SurfaceArcJson>,
}

/// One end of a combined arc.
#[derive(Debug, Serialize)]
pub struct CombinedEndJson {
    /// Crown strand index in the scene.
    pub crown_index: usize,
    /// Cusp label carried from the strand.
    pub cusp: usize,
    /// Twist carried from the strand.
    pub twist: i64,
    /// Stage-1 piece within the strand.
    pub stage1: usize,
    /// Stage-2 piece within the stage-1 piece.
    pub stage2: usize,
    /// Weight of the stage-1 piece.
    pub stage1_weight: Rat,
}

/// One combined arc of the glued lamination.
#[derive(Debug, Serialize)]
pub struct CombinedArcJson {
    /// The two crown ends.
    pub ends: [CombinedEndJson; 2],
    /// Surface arc the strand runs along.
    pub surface_arc: usize,
    /// Weight.
    pub weight: Rat,
}

/// `glue` output.
#[derive(Debug, Serialize)]
pub struct GlueDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// Combined arcs.
    pub arcs: Vec<CombinedArcJson>,
}

// ----------------------------------------------------------- ODE documents

/// Exact Stokes data: angles as strings `"p/q"`, in units of pi.
#[derive(Debug, Serialize)]
pub struct StokesJson {
    /// Number of sectors (`d + 2`).
    pub sectors: usize,
    /// Anti-Stokes (reading) ray angles.
    pub rays: Vec<String>,
    /// Per-sector `(lower, upper)` Stokes bounds.
    pub sector_bounds: Vec<(String, String)>,
    /// Sector bisectors.
    pub bisectors: Vec<String>,
}

/// `tips` output.
#[derive(Debug, Serialize)]
pub struct TipsEngineDoc {
    /// Schema tag.
    pub schema: &'static str,
    /// Polynomial degree.
    pub degree: usize,
    /// Low coefficients `c_0 .. c_{d-2}` as `[re, im]` pairs.
    pub coefficients: Vec<[f64; 2]>,
    /// Exact Stokes geometry.
    pub stokes: StokesJson,
    /// Tips indexed by sector.
    pub tips: Vec<SpherePoint64>,
    /// Reported per-tip chordal error bounds.
    pub errors: Vec<f64>,
    /// Chordal gap between each tip and its independent recomputation from
    /// an asymptotically seeded subdominant solution.
    pub subdominant_gaps: Vec<f64>,
    /// Measured Wronskian drift on the calibration segments.
    pub wronskian_drift: f64,
}

// -------------------------------------------------------- figure documents

/// What `render` should draw.
#[derive(Debug, Deserialize)]
#[serde(tag = "figure", rename_all = "snake_case")]
pub enum FigureSpec {
    /// Ideal polygon in the disk, with optional weighted diagonals and tips.
    Polygon {
        /// The polygon.
        polygon: PolygonSpec,
        /// Weighted diagonals to draw.
        #[serde(default)]
        diagonals: Vec<WeightedDiagonalJson>,
        /// Tip configuration to chart next to the disk.
        #[serde(default)]
        tips: Option<Vec<SpherePoint64>>,
        /// Layers to draw; defaults to all that apply.
        #[serde(default)]
        layers: Option<Vec<String>>,
    },
    /// Crown with a measured lamination and its dual graph.
    Crown {
        /// The lamination.
        lamination: LaminationJson,
        /// Layers to draw; defaults to all that apply.
        #[serde(default)]
        layers: Option<Vec<String>>,
    },
    /// Band diagram of a two-row matching.
    Bands {
        /// Top row.
        top: Vec<ArcEndJson>,
        /// Bottom row.
        bottom: Vec<ArcEndJson>,
    },
    /// Stereographic chart of a tip configuration with error rings.
    Tips {
        /// The tips.
        tips: Vec<SpherePoint64>,
        /// Optional per-tip error bounds.
        #[serde(default)]
        errors: Option<Vec<f64>>,
    },
}

/// `render` input.
#[derive(Debug, Deserialize)]
pub struct RenderInput {
    /// Schema tag.
    pub schema: String,
    /// The figure to draw.
    #[serde(flatten)]
    pub figure: FigureSpec,
}
