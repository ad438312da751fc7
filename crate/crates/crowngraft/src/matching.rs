//! Exact-rational matching of weighted arc rows, and the two-stage gluing of
//! crown boundary arcs onto surface arcs across a closed geodesic.
//!
//! A *row* is an ordered list of arc ends with positive rational weights.
//! Matching two rows of equal total weight means splitting both into strands
//! that pair them up in order (no crossings). The greedy two-pointer matching
//! is *minimal*: no two consecutive strands connect the same pair of entries.
//! It is in fact the only matching with that property: a strand that takes
//! less than the full available minimum leaves both current entries
//! unfinished, forcing the next strand to connect the same pair. The
//! exhaustive searcher below demonstrates this on concrete rows by trying
//! every smaller split on a rational grid and failing.
//!
//! All arithmetic here is exact (`i64` rationals); this module is
//! deliberately not generic over floating scalars.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Errors from row matching and scene gluing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    /// Row totals differ.
    #[error("row totals differ: {top} vs {bottom}")]
    UnbalancedRows {
        /// Total weight of the top row.
        top: Rational64,
        /// Total weight of the bottom row.
        bottom: Rational64,
    },
    /// A weight is zero or negative.
    #[error("weights must be positive")]
    NonPositiveWeight,
    /// A band or scene entry sits exactly on the basepoint.
    #[error("entry lies exactly on the basepoint")]
    BasepointCollision,
    /// Bands on the circle overlap.
    #[error("bands overlap")]
    OverlappingBands,
    /// A band does not fit the circle.
    #[error("band offset or width out of range")]
    InvalidBand,
    /// A position is negative.
    #[error("positions must be positive")]
    InvalidPosition,
    /// Two entries of one row share a position.
    #[error("two entries of a row share a position")]
    DuplicatePosition,
    /// Two crown strands share a cusp label.
    #[error("crown strands must come from distinct cusps (cusp {0} repeats)")]
    DuplicateCusp(usize),
    /// Crown weight does not equal twice the surface weight.
    #[error("scene is unbalanced: crown total {crown} vs surface total {surface}")]
    UnbalancedScene {
        /// Total crown-strand weight.
        crown: Rational64,
        /// Total surface-arc weight.
        surface: Rational64,
    },
}

/// One entry of a row: an arc end with a caller-chosen origin label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEnd {
    /// Caller label (e.g. index into a scene); not interpreted here.
    pub origin: usize,
    /// Positive weight.
    pub weight: Rational64,
}

/// Reference to a split piece of a row entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitRef {
    /// Index of the entry within its row.
    pub entry: usize,
    /// Which piece of that entry (0-based, in row order).
    pub piece: usize,
}

/// A strand of a matching: a piece of the top row glued to a piece of the
/// bottom row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strand {
    /// Piece of the top row.
    pub top: SplitRef,
    /// Piece of the bottom row.
    pub bottom: SplitRef,
    /// Common weight of the two pieces.
    pub weight: Rational64,
}

fn row_total(row: &[ArcEnd]) -> Result<Rational64, MatchError> {
    let mut total = Rational64::zero();
    for e in row {
        if !e.weight.is_positive() {
            return Err(MatchError::NonPositiveWeight);
        }
        total += e.weight;
    }
    Ok(total)
}

/// Greedy two-pointer matching of two balanced rows.
///
/// Produces at most `top.len() + bottom.len() - 1` strands, and no two
/// consecutive strands connect the same pair of entries.
pub fn minimal_match(top: &[ArcEnd], bottom: &[ArcEnd]) -> Result<Vec<Strand>, MatchError> {
    let t_total = row_total(top)?;
    let b_total = row_total(bottom)?;
    if t_total != b_total {
        return Err(MatchError::UnbalancedRows {
            top: t_total,
            bottom: b_total,
        });
    }
    let mut strands = Vec::new();
    let mut top_pieces = vec![0usize; top.len()];
    let mut bottom_pieces = vec![0usize; bottom.len()];
    let (mut i, mut j) = (0usize, 0usize);
    let mut rem_t = top.first().map(|e| e.weight).unwrap_or_else(Rational64::zero);
    let mut rem_b = bottom
        .first()
        .map(|e| e.weight)
        .unwrap_or_else(Rational64::zero);
    while i < top.len() && j < bottom.len() {
        let w = rem_t.min(rem_b);
        strands.push(Strand {
            top: SplitRef {
                entry: i,
                piece: top_pieces[i],
            },
            bottom: SplitRef {
                entry: j,
                piece: bottom_pieces[j],
            },
            weight: w,
        });
        top_pieces[i] += 1;
        bottom_pieces[j] += 1;
        rem_t -= w;
        rem_b -= w;
        if rem_t.is_zero() {
            i += 1;
            if i < top.len() {
                rem_t = top[i].weight;
            }
        }
        if rem_b.is_zero() {
            j += 1;
            if j < bottom.len() {
                rem_b = bottom[j].weight;
            }
        }
    }
    debug_assert!(strands.len() < top.len() + bottom.len() || strands.is_empty());
    Ok(strands)
}

/// Whether a strand list is minimal: no two consecutive strands connect the
/// same (top entry, bottom entry) pair.
pub fn is_minimal(strands: &[Strand]) -> bool {
    strands.windows(2).all(|w| {
        (w[0].top.entry, w[0].bottom.entry) != (w[1].top.entry, w[1].bottom.entry)
    })
}

/// Exhaustively enumerate all monotone matchings of two balanced rows whose
/// strand weights lie on the rational grid spanned by the input denominators,
/// excluding consecutive strands on the same entry pair.
///
/// Off-grid strand weights cannot occur in any matching satisfying the
/// exclusion rule: a strand lighter than both remainders leaves both entries
/// unfinished, so the following strand repeats the pair. The search tries
/// every grid weight (not just the forced minimum), so uniqueness of the
/// result is established by exhaustion rather than assumption.
pub fn brute_force_match(
    top: &[ArcEnd],
    bottom: &[ArcEnd],
) -> Result<Vec<Vec<Strand>>, MatchError> {
    let t_total = row_total(top)?;
    let b_total = row_total(bottom)?;
    if t_total != b_total {
        return Err(MatchError::UnbalancedRows {
            top: t_total,
            bottom: b_total,
        });
    }
    let mut denom_lcm = 1i64;
    for e in top.iter().chain(bottom) {
        denom_lcm = denom_lcm.lcm(e.weight.denom());
    }
    let grid = Rational64::new(1, denom_lcm);

    struct Search<'a> {
        top: &'a [ArcEnd],
        bottom: &'a [ArcEnd],
        grid: Rational64,
        top_pieces: Vec<usize>,
        bottom_pieces: Vec<usize>,
        current: Vec<Strand>,
        solutions: Vec<Vec<Strand>>,
    }

    impl Search<'_> {
        fn dfs(&mut self, i: usize, j: usize, rem_t: Rational64, rem_b: Rational64) {
            if i == self.top.len() && j == self.bottom.len() {
                self.solutions.push(self.current.clone());
                return;
            }
            if i == self.top.len() || j == self.bottom.len() {
                return;
            }
            if let Some(last) = self.current.last() {
                if last.top.entry == i && last.bottom.entry == j {
                    return;
                }
            }
            let cap = rem_t.min(rem_b);
            let mut w = self.grid;
            while w <= cap {
                self.current.push(Strand {
                    top: SplitRef {
                        entry: i,
                        piece: self.top_pieces[i],
                    },
                    bottom: SplitRef {
                        entry: j,
                        piece: self.bottom_pieces[j],
                    },
                    weight: w,
                });
                self.top_pieces[i] += 1;
                self.bottom_pieces[j] += 1;
                let nt = rem_t - w;
                let nb = rem_b - w;
                let (ni, nrt) = if nt.is_zero() {
                    (
                        i + 1,
                        self.top.get(i + 1).map(|e| e.weight).unwrap_or_else(Rational64::zero),
                    )
                } else {
                    (i, nt)
                };
                let (nj, nrb) = if nb.is_zero() {
                    (
                        j + 1,
                        self.bottom
                            .get(j + 1)
                            .map(|e| e.weight)
                            .unwrap_or_else(Rational64::zero),
                    )
                } else {
                    (j, nb)
                };
                self.dfs(ni, nj, nrt, nrb);
                self.top_pieces[i] -= 1;
                self.bottom_pieces[j] -= 1;
                self.current.pop();
                w += self.grid;
            }
        }
    }

    let mut search = Search {
        top,
        bottom,
        grid,
        top_pieces: vec![0; top.len()],
        bottom_pieces: vec![0; bottom.len()],
        current: Vec::new(),
        solutions: Vec::new(),
    };
    let rt = top.first().map(|e| e.weight).unwrap_or_else(Rational64::zero);
    let rb = bottom
        .first()
        .map(|e| e.weight)
        .unwrap_or_else(Rational64::zero);
    if top.is_empty() && bottom.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    search.dfs(0, 0, rt, rb);
    Ok(search.solutions)
}

/// A band of leaves on the circle: starts at `offset`, width `weight`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandInput {
    /// Caller label carried into the resulting row entries.
    pub origin: usize,
    /// Start position in `[0, circumference)`.
    pub offset: Rational64,
    /// Width, positive and at most the circumference.
    pub weight: Rational64,
}

/// Cut a disjoint cyclic band layout at the basepoint 0, producing a row.
///
/// A band wrapping across the basepoint is pre-split: its wrapped head
/// (starting at 0) becomes the first row entry and its tail the last, both
/// keeping the band's origin label. A band starting exactly at the basepoint
/// is rejected (the cut would graze its first leaf ambiguously).
pub fn cut_bands_at_basepoint(
    bands: &[BandInput],
    circumference: Rational64,
) -> Result<Vec<ArcEnd>, MatchError> {
    if !circumference.is_positive() {
        return Err(MatchError::InvalidBand);
    }
    for b in bands {
        if !b.weight.is_positive() || b.weight > circumference {
            return Err(MatchError::InvalidBand);
        }
        if b.offset.is_negative() || b.offset >= circumference {
            return Err(MatchError::InvalidBand);
        }
        if b.offset.is_zero() {
            return Err(MatchError::BasepointCollision);
        }
    }
    let mut sorted: Vec<&BandInput> = bands.iter().collect();
    sorted.sort_by_key(|b| b.offset);
    for w in sorted.windows(2) {
        if w[0].offset + w[0].weight > w[1].offset {
            return Err(MatchError::OverlappingBands);
        }
    }
    let mut row = Vec::with_capacity(bands.len() + 1);
    let mut wrapped_head: Option<ArcEnd> = None;
    if let Some(last) = sorted.last() {
        let end = last.offset + last.weight;
        if end > circumference {
            let head = end - circumference;
            // The wrapped head may not reach back into the first band.
            if let Some(first) = sorted.first() {
                if head > first.offset {
                    return Err(MatchError::OverlappingBands);
                }
            }
            wrapped_head = Some(ArcEnd {
                origin: last.origin,
                weight: head,
            });
        }
    }
    if let Some(head) = wrapped_head {
        row.push(head);
    }
    for (k, b) in sorted.iter().enumerate() {
        let is_wrapping = k + 1 == sorted.len() && wrapped_head.is_some();
        let weight = if is_wrapping {
            circumference - b.offset
        } else {
            b.weight
        };
        row.push(ArcEnd {
            origin: b.origin,
            weight,
        });
    }
    Ok(row)
}

/// A crown boundary strand arriving on the gluing geodesic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrownStrand {
    /// Cusp label; distinct across the scene.
    pub cusp: usize,
    /// Twisting number the strand carries.
    pub twist: i64,
    /// Position on the geodesic (order is all that matters), positive.
    pub position: Rational64,
    /// Positive weight.
    pub weight: Rational64,
}

/// A surface arc with both endpoints on the gluing geodesic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceArc {
    /// Position of the first endpoint.
    pub first: Rational64,
    /// Position of the second endpoint.
    pub second: Rational64,
    /// Positive weight (each endpoint absorbs this much crown weight).
    pub weight: Rational64,
}

/// A gluing scene: crown strands and surface arcs along one geodesic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingScene {
    /// Crown strands (order irrelevant; sorted by position internally).
    pub crown: Vec<CrownStrand>,
    /// Surface arcs, identified by their index.
    pub surface: Vec<SurfaceArc>,
}

/// One end of a combined arc, with full lineage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombinedEnd {
    /// Index of the crown strand in the scene.
    pub crown_index: usize,
    /// Its cusp label.
    pub cusp: usize,
    /// Its twisting number.
    pub twist: i64,
    /// Piece number of the crown strand in the stage-1 split.
    pub stage1: usize,
    /// Piece number of the stage-1 strand in the stage-2 split.
    pub stage2: usize,
    /// Rational weight of this end's stage-1 strand.
    pub stage1_weight: Rational64,
}

/// An arc of the combined lamination: crown strand, surface arc, crown
/// strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombinedArc {
    /// The two crown ends.
    pub ends: [CombinedEnd; 2],
    /// Index of the surface arc traversed.
    pub surface_arc: usize,
    /// Weight of the combined arc.
    pub weight: Rational64,
}

impl CombinedArc {
    /// Canonical signature: the unordered pair of `(cusp, twist)` ends plus
    /// the surface arc index. Distinct for every combined arc of a valid
    /// scene.
    pub fn signature(&self) -> ((usize, i64), (usize, i64), usize) {
        let a = (self.ends[0].cusp, self.ends[0].twist);
        let b = (self.ends[1].cusp, self.ends[1].twist);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        (lo, hi, self.surface_arc)
    }
}

/// Glue crown strands onto surface arcs across the geodesic.
///
/// Stage 1 matches the crown row against the row of surface-arc endpoints
/// (both in position order). Stage 2 matches, for each surface arc, the
/// strands entering its first endpoint against the reversal of those
/// entering its second, producing combined arcs with full lineage. Because
/// stage-1 strands into one endpoint are consecutive, each crown strand
/// reaches a given endpoint at most once, which makes the signatures of the
/// combined arcs pairwise distinct.
pub fn glue_crown_to_surface(scene: &GluingScene) -> Result<Vec<CombinedArc>, MatchError> {
    // Validation.
    let mut crown_total = Rational64::zero();
    for s in &scene.crown {
        if !s.weight.is_positive() {
            return Err(MatchError::NonPositiveWeight);
        }
        if s.position.is_negative() {
            return Err(MatchError::InvalidPosition);
        }
        if s.position.is_zero() {
            return Err(MatchError::BasepointCollision);
        }
        crown_total += s.weight;
    }
    let mut surface_total = Rational64::zero();
    let mut endpoint_positions = Vec::new();
    for a in &scene.surface {
        if !a.weight.is_positive() {
            return Err(MatchError::NonPositiveWeight);
        }
        for p in [a.first, a.second] {
            if p.is_negative() {
                return Err(MatchError::InvalidPosition);
            }
            if p.is_zero() {
                return Err(MatchError::BasepointCollision);
            }
            endpoint_positions.push(p);
        }
        surface_total += a.weight;
    }
    if crown_total != surface_total + surface_total {
        return Err(MatchError::UnbalancedScene {
            crown: crown_total,
            surface: surface_total,
        });
    }
    let mut crown_positions: Vec<Rational64> = scene.crown.iter().map(|s| s.position).collect();
    crown_positions.sort();
    if crown_positions.windows(2).any(|w| w[0] == w[1]) {
        return Err(MatchError::DuplicatePosition);
    }
    endpoint_positions.sort();
    if endpoint_positions.windows(2).any(|w| w[0] == w[1]) {
        return Err(MatchError::DuplicatePosition);
    }
    let mut cusps: Vec<usize> = scene.crown.iter().map(|s| s.cusp).collect();
    cusps.sort();
    if let Some(w) = cusps.windows(2).find(|w| w[0] == w[1]) {
        return Err(MatchError::DuplicateCusp(w[0]));
    }

    // Stage 1 rows.
    let mut crown_order: Vec<usize> = (0..scene.crown.len()).collect();
    crown_order.sort_by_key(|&k| scene.crown[k].position);
    let crown_row: Vec<ArcEnd> = crown_order
        .iter()
        .map(|&k| ArcEnd {
            origin: k,
            weight: scene.crown[k].weight,
        })
        .collect();
    // Endpoint code: 2 * arc + side.
    let mut endpoint_order: Vec<usize> = (0..2 * scene.surface.len()).collect();
    endpoint_order.sort_by_key(|&code| {
        let arc = &scene.surface[code / 2];
        if code % 2 == 0 {
            arc.first
        } else {
            arc.second
        }
    });
    let endpoint_row: Vec<ArcEnd> = endpoint_order
        .iter()
        .map(|&code| ArcEnd {
            origin: code,
            weight: scene.surface[code / 2].weight,
        })
        .collect();

    let stage1 = minimal_match(&crown_row, &endpoint_row)?;

    // Group stage-1 strands by endpoint, in row (= position) order.
    #[derive(Clone, Copy)]
    struct Piece {
        crown_index: usize,
        stage1: usize,
        weight: Rational64,
    }
    let mut into_endpoint: Vec<Vec<Piece>> = vec![Vec::new(); 2 * scene.surface.len()];
    for s in &stage1 {
        let crown_index = crown_row[s.top.entry].origin;
        let code = endpoint_row[s.bottom.entry].origin;
        into_endpoint[code].push(Piece {
            crown_index,
            stage1: s.top.piece,
            weight: s.weight,
        });
    }

    // Stage 2: per surface arc, match the first endpoint's strands against
    // the reversed second endpoint's strands.
    let mut combined = Vec::new();
    for (arc_index, _) in scene.surface.iter().enumerate() {
        let a_list = &into_endpoint[2 * arc_index];
        let mut b_list = into_endpoint[2 * arc_index + 1].clone();
        b_list.reverse();
        let a_row: Vec<ArcEnd> = a_list
            .iter()
            .enumerate()
            .map(|(k, p)| ArcEnd {
                origin: k,
                weight: p.weight,
            })
            .collect();
        let b_row: Vec<ArcEnd> = b_list
            .iter()
            .enumerate()
            .map(|(k, p)| ArcEnd {
                origin: k,
                weight: p.weight,
            })
            .collect();
        let stage2 = minimal_match(&a_row, &b_row)?;
        for s in stage2 {
            let pa = a_list[s.top.entry];
            let pb = b_list[s.bottom.entry];
            let make_end = |p: Piece, piece2: usize| CombinedEnd {
                crown_index: p.crown_index,
                cusp: scene.crown[p.crown_index].cusp,
                twist: scene.crown[p.crown_index].twist,
                stage1: p.stage1,
                stage2: piece2,
                stage1_weight: p.weight,
            };
            combined.push(CombinedArc {
                ends: [make_end(pa, s.top.piece), make_end(pb, s.bottom.piece)],
                surface_arc: arc_index,
                weight: s.weight,
            });
        }
    }
    Ok(combined)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn end(origin: usize, n: i64) -> ArcEnd {
        ArcEnd {
            origin,
            weight: r(n, 1),
        }
    }

    #[test]
    fn worked_example_two_two_against_one_three() {
        let top = [end(0, 2), end(1, 2)];
        let bottom = [end(0, 1), end(1, 3)];
        let strands = minimal_match(&top, &bottom).unwrap();
        let weights: Vec<Rational64> = strands.iter().map(|s| s.weight).collect();
        assert_eq!(weights, vec![r(1, 1), r(1, 1), r(2, 1)]);
        assert_eq!(strands[0].top, SplitRef { entry: 0, piece: 0 });
        assert_eq!(strands[0].bottom, SplitRef { entry: 0, piece: 0 });
        assert_eq!(strands[1].top, SplitRef { entry: 0, piece: 1 });
        assert_eq!(strands[1].bottom, SplitRef { entry: 1, piece: 0 });
        assert_eq!(strands[2].top, SplitRef { entry: 1, piece: 0 });
        assert_eq!(strands[2].bottom, SplitRef { entry: 1, piece: 1 });
        assert!(is_minimal(&strands));
        assert!(strands.len() < top.len() + bottom.len());
    }

    #[test]
    fn matching_validates_rows() {
        assert!(matches!(
            minimal_match(&[end(0, 2)], &[end(0, 1)]),
            Err(MatchError::UnbalancedRows { .. })
        ));
        assert!(matches!(
            minimal_match(&[ArcEnd { origin: 0, weight: r(0, 1) }], &[]),
            Err(MatchError::NonPositiveWeight)
        ));
        assert_eq!(minimal_match(&[], &[]).unwrap(), Vec::new());
    }

    #[test]
    fn rational_weights_split_exactly() {
        let top = [
            ArcEnd { origin: 0, weight: r(1, 3) },
            ArcEnd { origin: 1, weight: r(1, 6) },
        ];
        let bottom = [ArcEnd { origin: 0, weight: r(1, 2) }];
        let strands = minimal_match(&top, &bottom).unwrap();
        assert_eq!(strands.len(), 2);
        assert_eq!(strands[0].weight, r(1, 3));
        assert_eq!(strands[1].weight, r(1, 6));
        let total: Rational64 = strands.iter().map(|s| s.weight).sum();
        assert_eq!(total, r(1, 2));
    }

    #[test]
    fn brute_force_finds_exactly_the_greedy_matching() {
        let cases: Vec<(Vec<ArcEnd>, Vec<ArcEnd>)> = vec![
            (vec![end(0, 1)], vec![end(0, 1)]),
            (vec![end(0, 2)], vec![end(0, 1), end(1, 1)]),
            (vec![end(0, 2), end(1, 2)], vec![end(0, 1), end(1, 3)]),
            (
                vec![end(0, 3), end(1, 1), end(2, 2)],
                vec![end(0, 2), end(1, 4)],
            ),
        ];
        for (top, bottom) in cases {
            let all = brute_force_match(&top, &bottom).unwrap();
            assert_eq!(all.len(), 1, "rows {top:?} / {bottom:?}");
            assert_eq!(all[0], minimal_match(&top, &bottom).unwrap());
        }
    }

    #[test]
    fn band_cutting_handles_wrap_and_collisions() {
        let c = r(4, 1);
        let plain = cut_bands_at_basepoint(
            &[
                BandInput { origin: 7, offset: r(1, 1), weight: r(1, 1) },
                BandInput { origin: 8, offset: r(5, 2), weight: r(1, 1) },
            ],
            c,
        )
        .unwrap();
        assert_eq!(plain, vec![end(7, 1), end(8, 1)]);

        // Band [3, 5) on a circle of circumference 4 wraps: head [0,1) first.
        let wrapped = cut_bands_at_basepoint(
            &[
                BandInput { origin: 7, offset: r(3, 1), weight: r(2, 1) },
                BandInput { origin: 8, offset: r(3, 2), weight: r(1, 1) },
            ],
            c,
        )
        .unwrap();
        assert_eq!(
            wrapped,
            vec![end(7, 1), end(8, 1), end(7, 1)],
        );

        assert!(matches!(
            cut_bands_at_basepoint(
                &[BandInput { origin: 0, offset: r(0, 1), weight: r(1, 1) }],
                c
            ),
            Err(MatchError::BasepointCollision)
        ));
        assert!(matches!(
            cut_bands_at_basepoint(
                &[
                    BandInput { origin: 0, offset: r(1, 1), weight: r(2, 1) },
                    BandInput { origin: 1, offset: r(2, 1), weight: r(1, 1) },
                ],
                c
            ),
            Err(MatchError::OverlappingBands)
        ));
        // Wrapped head reaching into the first band also overlaps.
        assert!(matches!(
            cut_bands_at_basepoint(
                &[
                    BandInput { origin: 0, offset: r(1, 2), weight: r(1, 1) },
                    BandInput { origin: 1, offset: r(7, 2), weight: r(3, 2) },
                ],
                c
            ),
            Err(MatchError::OverlappingBands)
        ));
    }

    fn simple_scene() -> GluingScene {
        GluingScene {
            crown: vec![
                CrownStrand { cusp: 1, twist: 0, position: r(1, 4), weight: r(1, 1) },
                CrownStrand { cusp: 2, twist: -1, position: r(1, 2), weight: r(1, 1) },
            ],
            surface: vec![SurfaceArc { first: r(3, 8), second: r(5, 8), weight: r(1, 1) }],
        }
    }

    #[test]
    fn simple_scene_produces_one_combined_arc() {
        let combined = glue_crown_to_surface(&simple_scene()).unwrap();
        assert_eq!(combined.len(), 1);
        let arc = &combined[0];
        assert_eq!(arc.weight, r(1, 1));
        assert_eq!(arc.surface_arc, 0);
        assert_eq!(arc.signature(), ((1, 0), (2, -1), 0));
    }

    #[test]
    fn straddling_strand_connects_to_itself() {
        let scene = GluingScene {
            crown: vec![CrownStrand { cusp: 3, twist: 2, position: r(1, 4), weight: r(2, 1) }],
            surface: vec![SurfaceArc { first: r(1, 3), second: r(2, 3), weight: r(1, 1) }],
        };
        let combined = glue_crown_to_surface(&scene).unwrap();
        assert_eq!(combined.len(), 1);
        let arc = &combined[0];
        assert_eq!(arc.ends[0].crown_index, 0);
        assert_eq!(arc.ends[1].crown_index, 0);
        assert_eq!(arc.signature(), ((3, 2), (3, 2), 0));
        // Crown conservation counts both ends.
        assert_eq!(arc.weight + arc.weight, scene.crown[0].weight);
    }

    #[test]
    fn conservation_and_distinct_signatures_on_a_branching_scene() {
        let scene = GluingScene {
            crown: vec![
                CrownStrand { cusp: 1, twist: 0, position: r(1, 10), weight: r(3, 2) },
                CrownStrand { cusp: 2, twist: 1, position: r(3, 10), weight: r(5, 2) },
                CrownStrand { cusp: 3, twist: 0, position: r(7, 10), weight: r(2, 1) },
            ],
            surface: vec![
                SurfaceArc { first: r(2, 10), second: r(6, 10), weight: r(1, 1) },
                SurfaceArc { first: r(4, 10), second: r(8, 10), weight: r(2, 1) },
            ],
        };
        let combined = glue_crown_to_surface(&scene).unwrap();
        // Conservation per crown strand: weight counted once per end.
        for (k, s) in scene.crown.iter().enumerate() {
            let total: Rational64 = combined
                .iter()
                .flat_map(|c| c.ends.iter().map(move |e| (e, c.weight)))
                .filter(|(e, _)| e.crown_index == k)
                .map(|(_, w)| w)
                .sum();
            assert_eq!(total, s.weight, "crown strand {k}");
        }
        // Conservation per surface arc.
        for (k, a) in scene.surface.iter().enumerate() {
            let total: Rational64 = combined
                .iter()
                .filter(|c| c.surface_arc == k)
                .map(|c| c.weight)
                .sum();
            assert_eq!(total, a.weight, "surface arc {k}");
        }
        // Signatures pairwise distinct.
        let mut sigs: Vec<_> = combined.iter().map(|c| c.signature()).collect();
        sigs.sort();
        let before = sigs.len();
        sigs.dedup();
        assert_eq!(sigs.len(), before);
    }

    #[test]
    fn scene_validation_errors() {
        let mut unbalanced = simple_scene();
        unbalanced.crown[0].weight = r(2, 1);
        assert!(matches!(
            glue_crown_to_surface(&unbalanced),
            Err(MatchError::UnbalancedScene { .. })
        ));
        let mut dup_cusp = simple_scene();
        dup_cusp.crown[1].cusp = 1;
        assert!(matches!(
            glue_crown_to_surface(&dup_cusp),
            Err(MatchError::DuplicateCusp(1))
        ));
        let mut collision = simple_scene();
        collision.crown[0].position = r(0, 1);
        assert!(matches!(
            glue_crown_to_surface(&collision),
            Err(MatchError::BasepointCollision)
        ));
        let mut dup_pos = simple_scene();
        dup_pos.crown[0].position = dup_pos.crown[1].position;
        assert!(matches!(
            glue_crown_to_surface(&dup_pos),
            Err(MatchError::DuplicatePosition)
        ));
    }
}
