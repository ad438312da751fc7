//! Measured laminations on a crown: arc systems, their dual metric graphs,
//! and the twist chart for the boundary cycle.
//!
//! A crown has `m >= 3` cusps labeled `1..=m` and boundary sides labeled
//! `1..=m`, side `k` running between cusp `k-1` and cusp `k` (side 1, between
//! cusp `m` and cusp 1, is the canonical cut). Cutting along side 1 unrolls
//! the crown into a strip with the cusps in order, which is the model used
//! for all crossing rules below. The crown is bounded below by a closed
//! geodesic; a lamination consists of
//!
//! * chords: arcs between cusps `i < j` with `j - i >= 2` and
//!   `(i, j) != (1, m)` (that pair is isotopic to the boundary geodesic);
//! * boundary arcs: arcs from a cusp down to the boundary geodesic, carrying
//!   an integer twisting number and a landing offset along the geodesic;
//! * optionally the boundary geodesic itself as a closed leaf (only when no
//!   boundary arcs are present, since those would meet it).
//!
//! Every component carries a positive weight. The dual metric graph has a
//! vertex per complementary region, a finite edge per arc (length = weight),
//! one infinite stub per side, and when the closed leaf is present a finite
//! stub of its weight. Boundary arcs contribute the unique cycle; its total
//! length is the boundary measure `l` and twisting along it is described by
//! [`TwistChart`].

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::scalar::Real;

/// Errors from lamination validation, charts, and coordinate conversion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrownError {
    /// Crowns need at least three cusps.
    #[error("crown needs at least 3 cusps, got {0}")]
    TooFewCusps(usize),
    /// A cusp label is outside `1..=m`.
    #[error("cusp label {0} out of range")]
    CuspOutOfRange(usize),
    /// A chord violates the admissibility rules.
    #[error("invalid chord ({0}, {1})")]
    InvalidChord(usize, usize),
    /// The same arc (chord pair, or boundary cusp) appears twice.
    #[error("duplicate arc")]
    DuplicateArc,
    /// Two arcs cross.
    #[error("arcs cross")]
    CrossingArcs,
    /// A weight is non-positive or non-finite.
    #[error("arc weights must be positive and finite")]
    InvalidWeight,
    /// The closed-leaf weight is invalid or conflicts with boundary arcs.
    #[error("boundary leaf weight must be nonnegative and excludes boundary arcs")]
    InvalidLeaf,
    /// Boundary arcs carry different twisting numbers.
    #[error("boundary arcs have mixed twisting numbers")]
    MixedTwists,
    /// Boundary-arc offsets do not follow the chart layout.
    #[error("boundary-arc offsets are inconsistent with the chart layout")]
    InconsistentOffsets,
    /// Boundary weights do not sum to the chart length.
    #[error("boundary weights do not match the chart length")]
    LengthMismatch,
    /// Chart data is out of domain (`l <= 0` where a cycle is required,
    /// `s` outside `[0, l)`, non-finite values).
    #[error("invalid twist chart data")]
    InvalidChart,
    /// Coordinate vectors are structurally malformed.
    #[error("malformed coordinate data")]
    MalformedCoords,
}

/// A cusp-to-cusp arc with weight, endpoints in increasing order.
#[derive(Debug, Clone, Copy)]
pub struct ChordArc<R: Real> {
    /// Smaller cusp label.
    pub from: usize,
    /// Larger cusp label.
    pub to: usize,
    /// Transverse weight, positive.
    pub weight: R,
}

/// An arc from a cusp to the boundary geodesic.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryArc<R: Real> {
    /// Cusp label.
    pub cusp: usize,
    /// Integer twisting number around the boundary geodesic.
    pub twist: i64,
    /// Landing position along the geodesic, in `[0, l)` under the chart
    /// layout.
    pub offset: R,
    /// Transverse weight, positive.
    pub weight: R,
}

/// Input / serialization form of a single lamination component.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CrownArc<R: Real> {
    /// Cusp-to-cusp arc.
    Chord {
        /// One endpoint cusp.
        from: usize,
        /// Other endpoint cusp.
        to: usize,
        /// Transverse weight.
        weight: R,
    },
    /// Cusp-to-boundary arc.
    Boundary {
        /// Cusp label.
        cusp: usize,
        /// Integer twisting number.
        twist: i64,
        /// Landing position on the boundary geodesic.
        offset: R,
        /// Transverse weight.
        weight: R,
    },
}

/// A validated measured lamination on a crown with `m` cusps.
#[derive(Debug, Clone)]
pub struct CrownLamination<R: Real> {
    m: usize,
    chords: Vec<ChordArc<R>>,
    boundary: Vec<BoundaryArc<R>>,
    leaf_weight: R,
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (i, j) = a;
    let (k, l) = b;
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

impl<R: Real> CrownLamination<R> {
    /// Validate and build a lamination from components.
    ///
    /// `leaf_weight` is the weight of the boundary geodesic as a closed leaf
    /// (zero for absent); it is only allowed when there are no boundary arcs.
    pub fn new(m: usize, arcs: Vec<CrownArc<R>>, leaf_weight: R) -> Result<Self, CrownError> {
        if m < 3 {
            return Err(CrownError::TooFewCusps(m));
        }
        if !leaf_weight.is_finite() || leaf_weight < R::zero() {
            return Err(CrownError::InvalidLeaf);
        }
        let mut chords = Vec::new();
        let mut boundary = Vec::new();
        for arc in arcs {
            match arc {
                CrownArc::Chord { from, to, weight } => {
                    if from < 1 || from > m {
                        return Err(CrownError::CuspOutOfRange(from));
                    }
                    if to < 1 || to > m {
                        return Err(CrownError::CuspOutOfRange(to));
                    }
                    let (from, to) = (from.min(to), from.max(to));
                    if to - from < 2 || (from == 1 && to == m) {
                        return Err(CrownError::InvalidChord(from, to));
                    }
                    if !weight.is_finite() || weight <= R::zero() {
                        return Err(CrownError::InvalidWeight);
                    }
                    chords.push(ChordArc { from, to, weight });
                }
                CrownArc::Boundary {
                    cusp,
                    twist,
                    offset,
                    weight,
                } => {
                    if cusp < 1 || cusp > m {
                        return Err(CrownError::CuspOutOfRange(cusp));
                    }
                    if !weight.is_finite() || weight <= R::zero() {
                        return Err(CrownError::InvalidWeight);
                    }
                    if !offset.is_finite() {
                        return Err(CrownError::InconsistentOffsets);
                    }
                    boundary.push(BoundaryArc {
                        cusp,
                        twist,
                        offset,
                        weight,
                    });
                }
            }
        }
        chords.sort_by_key(|c| (c.from, c.to));
        for w in chords.windows(2) {
            if (w[0].from, w[0].to) == (w[1].from, w[1].to) {
                return Err(CrownError::DuplicateArc);
            }
        }
        for (a, c) in chords.iter().enumerate() {
            for d in &chords[a + 1..] {
                if chords_cross((c.from, c.to), (d.from, d.to)) {
                    return Err(CrownError::CrossingArcs);
                }
            }
        }
        boundary.sort_by_key(|b| b.cusp);
        for w in boundary.windows(2) {
            if w[0].cusp == w[1].cusp {
                return Err(CrownError::DuplicateArc);
            }
        }
        // A boundary arc descends from its cusp to the geodesic, so any chord
        // strictly spanning that cusp blocks it.
        for b in &boundary {
            for c in &chords {
                if c.from < b.cusp && b.cusp < c.to {
                    return Err(CrownError::CrossingArcs);
                }
            }
        }
        if leaf_weight > R::zero() && !boundary.is_empty() {
            return Err(CrownError::InvalidLeaf);
        }
        Ok(Self {
            m,
            chords,
            boundary,
            leaf_weight,
        })
    }

    /// Number of cusps.
    pub fn cusp_count(&self) -> usize {
        self.m
    }

    /// Chords, sorted by endpoint pair.
    pub fn chords(&self) -> &[ChordArc<R>] {
        &self.chords
    }

    /// Boundary arcs, sorted by cusp.
    pub fn boundary_arcs(&self) -> &[BoundaryArc<R>] {
        &self.boundary
    }

    /// Weight of the boundary geodesic as a closed leaf (zero if absent).
    pub fn leaf_weight(&self) -> R {
        self.leaf_weight
    }

    /// All components in input form (chords first, then boundary arcs).
    pub fn arcs(&self) -> Vec<CrownArc<R>> {
        self.chords
            .iter()
            .map(|c| CrownArc::Chord {
                from: c.from,
                to: c.to,
                weight: c.weight,
            })
            .chain(self.boundary.iter().map(|b| CrownArc::Boundary {
                cusp: b.cusp,
                twist: b.twist,
                offset: b.offset,
                weight: b.weight,
            }))
            .collect()
    }

    /// Signed boundary measure: total boundary-arc weight if arcs are
    /// present, minus the leaf weight if the geodesic is a leaf, else zero.
    pub fn boundary_measure(&self) -> R {
        if !self.boundary.is_empty() {
            self.boundary
                .iter()
                .fold(R::zero(), |acc, b| acc + b.weight)
        } else if self.leaf_weight > R::zero() {
            -self.leaf_weight
        } else {
            R::zero()
        }
    }

    /// Build the dual metric graph of the lamination.
    pub fn to_dual_graph(&self) -> DualMetricGraph<R> {
        DualMetricGraph::build(self)
    }

    /// The combinatorial shape: arcs without measures.
    pub fn shape(&self) -> LaminationShape {
        LaminationShape {
            m: self.m,
            chords: self.chords.iter().map(|c| (c.from, c.to)).collect(),
            boundary_cusps: self.boundary.iter().map(|b| b.cusp).collect(),
            has_boundary_leaf: self.leaf_weight > R::zero(),
        }
    }
}

/// Kind of a dual-graph vertex (a complementary region).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualVertexKind {
    /// Region enclosed by the chord `(from, to)` from above.
    Chord {
        /// Smaller chord endpoint.
        from: usize,
        /// Larger chord endpoint.
        to: usize,
    },
    /// Region along the boundary geodesic between two consecutive boundary
    /// arcs (index in cusp order).
    Sector(usize),
    /// The single region along the geodesic when no boundary arcs exist.
    Collar,
}

/// Kind of a finite dual-graph edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualEdgeKind {
    /// Dual to the chord `(from, to)`.
    Chord {
        /// Smaller chord endpoint.
        from: usize,
        /// Larger chord endpoint.
        to: usize,
    },
    /// Dual to the boundary arc at this cusp.
    BoundaryArc {
        /// Cusp label.
        cusp: usize,
    },
}

/// A finite edge of the dual metric graph.
#[derive(Debug, Clone, Copy)]
pub struct DualGraphEdge<R: Real> {
    /// One endpoint vertex index.
    pub a: usize,
    /// Other endpoint vertex index (may equal `a`: a loop).
    pub b: usize,
    /// Metric length (the dual arc's weight).
    pub length: R,
    /// Which arc this edge is dual to.
    pub kind: DualEdgeKind,
}

/// A stub (dangling edge) of the dual metric graph.
#[derive(Debug, Clone, Copy)]
pub struct DualStub<R: Real> {
    /// Vertex the stub hangs from.
    pub vertex: usize,
    /// What the stub represents.
    pub kind: DualStubKind<R>,
}

/// Kind of dual-graph stub.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DualStubKind<R: Real> {
    /// Infinite ray out of the crown side `k`.
    Side(usize),
    /// Finite stub across the boundary-geodesic leaf, with its length.
    BoundaryLeaf(R),
}

/// Dual metric graph of a crown lamination.
///
/// Vertices are complementary regions; each arc contributes a finite edge of
/// length its weight; each of the `m` sides contributes an infinite stub at
/// the region it belongs to. With `B >= 1` boundary arcs the first `B` edges
/// form the unique cycle, listed in cusp order (for `B = 1` it is a loop).
#[derive(Debug, Clone)]
pub struct DualMetricGraph<R: Real> {
    vertices: Vec<DualVertexKind>,
    edges: Vec<DualGraphEdge<R>>,
    stubs: Vec<DualStub<R>>,
    cycle_len: usize,
}

impl<R: Real> DualMetricGraph<R> {
    fn build(lam: &CrownLamination<R>) -> Self {
        let b_count = lam.boundary.len();
        let mut vertices = Vec::new();
        if b_count == 0 {
            vertices.push(DualVertexKind::Collar);
        } else {
            for s in 0..b_count {
                vertices.push(DualVertexKind::Sector(s));
            }
        }
        let chord_base = vertices.len();
        for c in &lam.chords {
            vertices.push(DualVertexKind::Chord {
                from: c.from,
                to: c.to,
            });
        }

        // Sector owning a side, by the cyclic interval (c_b, c_{b+1}].
        let cusps: Vec<usize> = lam.boundary.iter().map(|b| b.cusp).collect();
        let sector_of = |side: usize| -> usize {
            debug_assert!(!cusps.is_empty());
            for b in 0..cusps.len() {
                let lo = cusps[b];
                let hi = cusps[(b + 1) % cusps.len()];
                let inside = if b + 1 < cusps.len() {
                    lo < side && side <= hi
                } else {
                    side > lo || side <= hi
                };
                if inside {
                    return b;
                }
            }
            unreachable!("cyclic intervals cover all sides")
        };
        // Innermost chord enclosing a side: maximal left endpoint, then
        // minimal right endpoint (the enclosing chords are totally nested).
        let innermost = |side: usize| -> Option<usize> {
            lam.chords
                .iter()
                .enumerate()
                .filter(|(_, c)| c.from < side && side <= c.to)
                .max_by_key(|(_, c)| (c.from, std::cmp::Reverse(c.to)))
                .map(|(k, _)| k)
        };
        // Region below the geodesic shadow of a region containing `side`:
        // the sector (or collar) that would own the side.
        let floor_region = |side: usize| -> usize {
            if b_count == 0 {
                0
            } else {
                sector_of(side)
            }
        };

        let mut edges = Vec::new();
        // Boundary-arc edges first: the cycle in cusp order. Arc b separates
        // the sector before it from the sector after it.
        for (b, arc) in lam.boundary.iter().enumerate() {
            let before = (b + b_count - 1) % b_count;
            edges.push(DualGraphEdge {
                a: before,
                b,
                length: arc.weight,
                kind: DualEdgeKind::BoundaryArc { cusp: arc.cusp },
            });
        }
        let cycle_len = if b_count >= 1 { b_count } else { 0 };

        // Chord nesting forest: scan with a stack, parents before children.
        let mut order: Vec<usize> = (0..lam.chords.len()).collect();
        order.sort_by(|&x, &y| {
            let cx = &lam.chords[x];
            let cy = &lam.chords[y];
            cx.from.cmp(&cy.from).then(cy.to.cmp(&cx.to))
        });
        let mut parent: Vec<Option<usize>> = vec![None; lam.chords.len()];
        let mut stack: Vec<usize> = Vec::new();
        for &k in &order {
            let c = &lam.chords[k];
            while let Some(&top) = stack.last() {
                let t = &lam.chords[top];
                if t.from <= c.from && c.to <= t.to {
                    break;
                }
                stack.pop();
            }
            parent[k] = stack.last().copied();
            stack.push(k);
        }
        for (k, c) in lam.chords.iter().enumerate() {
            let below = match parent[k] {
                Some(p) => chord_base + p,
                // Top-level chord: nothing between it and the geodesic, so
                // its whole shadow lies in one sector.
                None => floor_region(c.from + 1),
            };
            edges.push(DualGraphEdge {
                a: below,
                b: chord_base + k,
                length: c.weight,
                kind: DualEdgeKind::Chord {
                    from: c.from,
                    to: c.to,
                },
            });
        }

        let mut stubs = Vec::new();
        for side in 1..=lam.m {
            let vertex = match innermost(side) {
                Some(k) => chord_base + k,
                None => floor_region(side),
            };
            stubs.push(DualStub {
                vertex,
                kind: DualStubKind::Side(side),
            });
        }
        if lam.leaf_weight > R::zero() {
            stubs.push(DualStub {
                vertex: 0,
                kind: DualStubKind::BoundaryLeaf(lam.leaf_weight),
            });
        }

        Self {
            vertices,
            edges,
            stubs,
            cycle_len,
        }
    }

    /// Region vertices.
    pub fn vertices(&self) -> &[DualVertexKind] {
        &self.vertices
    }

    /// Finite edges; the first [`Self::cycle_edge_count`] form the boundary
    /// cycle in cusp order.
    pub fn edges(&self) -> &[DualGraphEdge<R>] {
        &self.edges
    }

    /// Stubs: one infinite ray per side, plus the leaf stub if present.
    pub fn stubs(&self) -> &[DualStub<R>] {
        &self.stubs
    }

    /// Number of edges in the boundary cycle (0 when there are no boundary
    /// arcs).
    pub fn cycle_edge_count(&self) -> usize {
        self.cycle_len
    }

    /// Total metric length of the boundary cycle.
    pub fn cycle_length(&self) -> R {
        self.edges[..self.cycle_len]
            .iter()
            .fold(R::zero(), |acc, e| acc + e.length)
    }

    /// Degree of a vertex: incident finite edges (loops count twice) plus
    /// incident stubs.
    pub fn degree(&self, v: usize) -> usize {
        let mut d = 0;
        for e in &self.edges {
            if e.a == v {
                d += 1;
            }
            if e.b == v {
                d += 1;
            }
        }
        d + self.stubs.iter().filter(|s| s.vertex == v).count()
    }

    /// Whether every region vertex is trivalent.
    pub fn is_trivalent(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.degree(v) == 3)
    }
}

/// Twist chart for the boundary cycle: signed length `l` and twist `tau`.
///
/// `l > 0` means boundary arcs of total weight `l`; `l < 0` means the
/// boundary geodesic is a closed leaf of weight `-l`; `l = 0` means neither.
/// When `l <= 0` there is no cycle to twist along, so `tau` is quotiented to
/// the canonical representative 0.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TwistChart<R: Real> {
    l: R,
    tau: R,
}

impl<R: Real> TwistChart<R> {
    /// Build a chart; canonicalizes `tau` to 0 when `l <= 0`.
    pub fn new(l: R, tau: R) -> Result<Self, CrownError> {
        if !l.is_finite() || !tau.is_finite() {
            return Err(CrownError::InvalidChart);
        }
        let tau = if l > R::zero() { tau } else { R::zero() };
        Ok(Self { l, tau })
    }

    /// Signed boundary measure.
    pub fn length(&self) -> R {
        self.l
    }

    /// Twist coordinate.
    pub fn twist(&self) -> R {
        self.tau
    }

    /// Split the twist into the integer wedge index and the position
    /// `s in [0, l)`: `tau = t * l + s`.
    ///
    /// The wedge `V_j` of the chart is exactly `t = j`; the upper wedge
    /// boundary `tau = (j + 1) * l` splits as `t = j + 1`, `s = 0`.
    /// Requires `l > 0`.
    pub fn split(&self) -> Result<(i64, R), CrownError> {
        if !(self.l > R::zero()) {
            return Err(CrownError::InvalidChart);
        }
        let t_real = (self.tau / self.l).floor();
        let mut t = t_real.to_i64().ok_or(CrownError::InvalidChart)?;
        let mut s = self.tau - t_real * self.l;
        // Post-adjust against floor rounding at wedge boundaries.
        while s < R::zero() {
            s = s + self.l;
            t -= 1;
        }
        while s >= self.l {
            s = s - self.l;
            t += 1;
        }
        Ok((t, s))
    }

    /// Assemble a chart from wedge index and position: `tau = t * l + s`.
    /// Requires `l > 0` and `s in [0, l)`.
    pub fn join(t: i64, s: R, l: R) -> Result<Self, CrownError> {
        if !l.is_finite() || !s.is_finite() || !(l > R::zero()) || s < R::zero() || s >= l {
            return Err(CrownError::InvalidChart);
        }
        let t_real = R::from_i64(t).ok_or(CrownError::InvalidChart)?;
        Self::new(l, t_real * l + s)
    }
}

impl<'de, R: Real + Deserialize<'de>> Deserialize<'de> for TwistChart<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr<R> {
            l: R,
            tau: R,
        }
        let r = Repr::<R>::deserialize(deserializer)?;
        TwistChart::new(r.l, r.tau).map_err(D::Error::custom)
    }
}

/// One chord with its weight, in coordinate form.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ChordCoord<R: Real> {
    /// Smaller cusp label.
    pub from: usize,
    /// Larger cusp label.
    pub to: usize,
    /// Transverse weight.
    pub weight: R,
}

/// Coordinate form of a crown lamination: chord weights, boundary-arc cusps
/// and weights (in cusp order), and the twist chart.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrownCoords<R: Real> {
    /// Number of cusps.
    pub m: usize,
    /// Chord arcs with weights.
    pub chords: Vec<ChordCoord<R>>,
    /// Cusps carrying boundary arcs, strictly increasing.
    pub boundary_cusps: Vec<usize>,
    /// Boundary-arc weights, parallel to `boundary_cusps`.
    pub boundary_weights: Vec<R>,
    /// Twist chart; `length` must match the total boundary weight (or be
    /// `-leaf weight` / zero when there are no boundary arcs).
    pub chart: TwistChart<R>,
}

/// Convert a lamination to coordinates.
///
/// Requires all boundary arcs to share one twisting number and their offsets
/// to follow the chart layout: arc `b` at `(s + w_0 + ... + w_{b-1}) mod l`,
/// where `s` is read from the first arc. `eps` bounds the allowed deviation.
pub fn lamination_to_coords<R: Real>(
    lam: &CrownLamination<R>,
    eps: R,
) -> Result<CrownCoords<R>, CrownError> {
    let chords = lam
        .chords()
        .iter()
        .map(|c| ChordCoord {
            from: c.from,
            to: c.to,
            weight: c.weight,
        })
        .collect();
    let boundary = lam.boundary_arcs();
    if boundary.is_empty() {
        let chart = TwistChart::new(lam.boundary_measure(), R::zero())?;
        return Ok(CrownCoords {
            m: lam.cusp_count(),
            chords,
            boundary_cusps: Vec::new(),
            boundary_weights: Vec::new(),
            chart,
        });
    }
    let twist = boundary[0].twist;
    if boundary.iter().any(|b| b.twist != twist) {
        return Err(CrownError::MixedTwists);
    }
    let l = lam.boundary_measure();
    let s = boundary[0].offset;
    if s < R::zero() || s >= l {
        return Err(CrownError::InconsistentOffsets);
    }
    let mut prefix = R::zero();
    for b in boundary {
        let mut expect = s + prefix;
        if expect >= l {
            expect = expect - l;
        }
        // Circular distance on the cycle of length l.
        let diff = (b.offset - expect).abs();
        let circ = diff.min((l - diff).abs());
        if circ > eps {
            return Err(CrownError::InconsistentOffsets);
        }
        prefix = prefix + b.weight;
    }
    Ok(CrownCoords {
        m: lam.cusp_count(),
        chords,
        boundary_cusps: boundary.iter().map(|b| b.cusp).collect(),
        boundary_weights: boundary.iter().map(|b| b.weight).collect(),
        chart: TwistChart::join(twist, s, l)?,
    })
}

/// Convert coordinates back to a lamination.
///
/// With boundary arcs present, the chart length must equal the total
/// boundary weight within `eps`; arcs are laid out at offsets
/// `(s + partial weight sums) mod l` with the common twisting number from
/// the chart split.
pub fn coords_to_lamination<R: Real>(
    coords: &CrownCoords<R>,
    eps: R,
) -> Result<CrownLamination<R>, CrownError> {
    if coords.boundary_cusps.len() != coords.boundary_weights.len() {
        return Err(CrownError::MalformedCoords);
    }
    let mut arcs: Vec<CrownArc<R>> = coords
        .chords
        .iter()
        .map(|c| CrownArc::Chord {
            from: c.from,
            to: c.to,
            weight: c.weight,
        })
        .collect();
    let l = coords.chart.length();
    let mut leaf = R::zero();
    if coords.boundary_cusps.is_empty() {
        if l > R::zero() {
            return Err(CrownError::LengthMismatch);
        }
        if l < R::zero() {
            leaf = -l;
        }
    } else {
        let total = coords
            .boundary_weights
            .iter()
            .fold(R::zero(), |acc, w| acc + *w);
        if !(l > R::zero()) || (total - l).abs() > eps {
            return Err(CrownError::LengthMismatch);
        }
        let (t, s) = coords.chart.split()?;
        let mut prefix = R::zero();
        for (cusp, w) in coords
            .boundary_cusps
            .iter()
            .zip(&coords.boundary_weights)
        {
            let mut offset = s + prefix;
            if offset >= l {
                offset = offset - l;
            }
            arcs.push(CrownArc::Boundary {
                cusp: *cusp,
                twist: t,
                offset,
                weight: *w,
            });
            prefix = prefix + *w;
        }
    }
    CrownLamination::new(coords.m, arcs, leaf)
}

/// The combinatorial shape of a lamination: which arcs, without measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminationShape {
    /// Number of cusps.
    pub m: usize,
    /// Chord endpoint pairs, sorted.
    pub chords: Vec<(usize, usize)>,
    /// Cusps with boundary arcs, sorted.
    pub boundary_cusps: Vec<usize>,
    /// Whether the boundary geodesic is a closed leaf.
    pub has_boundary_leaf: bool,
}

impl LaminationShape {
    /// Number of arcs (chords plus boundary arcs; the leaf is not an arc).
    pub fn arc_count(&self) -> usize {
        self.chords.len() + self.boundary_cusps.len()
    }

    /// Materialize with every component at the given weight, zero twisting,
    /// and chart layout offsets starting at 0.
    pub fn materialize<R: Real>(&self, weight: R) -> Result<CrownLamination<R>, CrownError> {
        let mut arcs: Vec<CrownArc<R>> = self
            .chords
            .iter()
            .map(|(from, to)| CrownArc::Chord {
                from: *from,
                to: *to,
                weight,
            })
            .collect();
        let mut prefix = R::zero();
        for cusp in &self.boundary_cusps {
            arcs.push(CrownArc::Boundary {
                cusp: *cusp,
                twist: 0,
                offset: prefix,
                weight,
            });
            prefix = prefix + weight;
        }
        let leaf = if self.has_boundary_leaf {
            weight
        } else {
            R::zero()
        };
        CrownLamination::new(self.m, arcs, leaf)
    }
}

/// All valid lamination shapes on `m` cusps: every pairwise compatible set
/// of candidate arcs, each arc-free-boundary subset also in its closed-leaf
/// variant. Intended for small `m` (the count grows exponentially).
pub fn enumerate_shapes(m: usize) -> Vec<LaminationShape> {
    #[derive(Clone, Copy)]
    enum Cand {
        Chord(usize, usize),
        Boundary(usize),
    }
    let mut cands = Vec::new();
    for i in 1..=m {
        for j in i + 2..=m {
            if !(i == 1 && j == m) {
                cands.push(Cand::Chord(i, j));
            }
        }
    }
    for c in 1..=m {
        cands.push(Cand::Boundary(c));
    }
    let compatible = |a: &Cand, b: &Cand| -> bool {
        match (a, b) {
            (Cand::Chord(i, j), Cand::Chord(k, l)) => !chords_cross((*i, *j), (*k, *l)),
            (Cand::Chord(i, j), Cand::Boundary(c)) | (Cand::Boundary(c), Cand::Chord(i, j)) => {
                !(i < c && c < j)
            }
            (Cand::Boundary(_), Cand::Boundary(_)) => true,
        }
    };
    let mut shapes = Vec::new();
    let total = 1usize << cands.len();
    'subsets: for mask in 0..total {
        let chosen: Vec<&Cand> = cands
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, c)| c)
            .collect();
        for (x, a) in chosen.iter().enumerate() {
            for b in &chosen[x + 1..] {
                if !compatible(a, b) {
                    continue 'subsets;
                }
            }
        }
        let mut chords = Vec::new();
        let mut boundary_cusps = Vec::new();
        for c in chosen {
            match c {
                Cand::Chord(i, j) => chords.push((*i, *j)),
                Cand::Boundary(c) => boundary_cusps.push(*c),
            }
        }
        chords.sort();
        boundary_cusps.sort();
        let leaf_allowed = boundary_cusps.is_empty();
        shapes.push(LaminationShape {
            m,
            chords: chords.clone(),
            boundary_cusps: boundary_cusps.clone(),
            has_boundary_leaf: false,
        });
        if leaf_allowed {
            shapes.push(LaminationShape {
                m,
                chords,
                boundary_cusps,
                has_boundary_leaf: true,
            });
        }
    }
    shapes
}
