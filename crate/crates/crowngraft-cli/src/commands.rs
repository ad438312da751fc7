//! Subcommand handlers: parse a document, call the library, emit a document.
//!
//! No numeric logic lives here; every computation is a single call into the
//! core crate.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex;
use num_rational::Rational64;

use crowngraft::crown::{coords_to_lamination, lamination_to_coords};
use crowngraft::grafting::{fiber_enumerate, graft_forward, graft_invert};
use crowngraft::matching::{
    brute_force_match, glue_crown_to_surface, minimal_match, ArcEnd, CrownStrand, GluingScene,
    Strand, SurfaceArc,
};
use crowngraft::moebius::Tolerance;
use crowngraft::ode::{ratio_angle, stokes_geometry, DevelopingMap, EngineConfig, PolynomialQD};
use crowngraft::polygon::DiagonalSet;

use crate::error::CliError;
use crate::schema::{
    check_schema, emit, parse, read_input, tip_configuration, weighted_diagonals,
    weighted_diagonals_json, write_output, ArcEndJson, CombinedArcJson, CombinedEndJson,
    CrownDoc, CrownInput, DualGraphJson, FiberDoc, FiberElementJson, FigureSpec, GlueDoc,
    GlueInput, GraftInput, LaminationJson, MatchDoc, MatchInput, PolygonBody, PolygonDoc,
    PolygonInput, Rat, RenderInput, SplitRefJson, StokesJson, StrandJson, TipsDoc,
    TipsEngineDoc, UngraftDoc, UngraftInput, SCHEMA,
};
use crate::svg;

type In<'a> = Option<&'a Path>;

/// `polygon`: validate and normalize a polygon description.
pub fn polygon(input: In, output: In, tol: &Tolerance<f64>) -> Result<(), CliError> {
    let doc: PolygonInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let poly = doc.polygon.resolve(tol)?;
    let out = PolygonDoc {
        schema: SCHEMA,
        polygon: PolygonBody::of(&poly, tol)?,
    };
    write_output(output, &emit(&out)?)
}

/// `graft`: polygon + weighted diagonals -> tips.
pub fn graft(input: In, output: In, tol: &Tolerance<f64>) -> Result<(), CliError> {
    let doc: GraftInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let poly = doc.polygon.resolve(tol)?;
    let weighted = weighted_diagonals(poly.len(), &doc.diagonals)?;
    let tips = graft_forward(&poly, &weighted, tol)?;
    let out = TipsDoc {
        schema: SCHEMA,
        tips: tips.points().to_vec(),
    };
    write_output(output, &emit(&out)?)
}

/// `ungraft`: tips + triangulation -> polygon + weights.
pub fn ungraft(input: In, output: In, tol: &Tolerance<f64>) -> Result<(), CliError> {
    let doc: UngraftInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let config = tip_configuration(&doc.tips)?;
    let triangulation = DiagonalSet::new(config.len(), doc.diagonals)?;
    let (poly, weights) = graft_invert(&config, &triangulation, tol)?;
    let out = UngraftDoc {
        schema: SCHEMA,
        polygon: PolygonBody::of(&poly, tol)?,
        diagonals: weighted_diagonals_json(&weights),
    };
    write_output(output, &emit(&out)?)
}

/// `fiber`: enumerate full-turn lifts of a weight vector.
pub fn fiber(input: In, output: In, nmax_flag: Option<u32>) -> Result<(), CliError> {
    let doc: crate::schema::FiberInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let weighted = weighted_diagonals(doc.n, &doc.diagonals)?;
    let nmax = nmax_flag.or(doc.nmax).unwrap_or(1);
    let elements = fiber_enumerate(&weighted, nmax)
        .into_iter()
        .map(|e| FiberElementJson {
            shifts: e.shifts,
            diagonals: weighted_diagonals_json(&e.weights),
        })
        .collect();
    let out = FiberDoc {
        schema: SCHEMA,
        elements,
    };
    write_output(output, &emit(&out)?)
}

/// `crown-coords`: convert between a lamination and its coordinates, and
/// report the dual metric graph.
pub fn crown_coords(input: In, output: In, eps: f64) -> Result<(), CliError> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(CliError::Schema(format!(
            "--eps must be positive and finite, got {eps}"
        )));
    }
    let doc: CrownInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let lam = match (&doc.lamination, &doc.coords) {
        (Some(lam_json), None) => lam_json.resolve()?,
        (None, Some(coords)) => coords_to_lamination(coords, eps)?,
        _ => {
            return Err(CliError::Schema(
                "crown-coords needs exactly one of \"lamination\" or \"coords\"".into(),
            ))
        }
    };
    let coords = lamination_to_coords(&lam, eps)?;
    let dual = lam.to_dual_graph();
    let out = CrownDoc {
        schema: SCHEMA,
        lamination: LaminationJson::of(&lam),
        coords,
        dual: DualGraphJson::of(&dual),
    };
    write_output(output, &emit(&out)?)
}

fn core_row(row: &[ArcEndJson]) -> Vec<ArcEnd> {
    row.iter()
        .map(|e| ArcEnd {
            origin: e.origin,
            weight: e.weight.0,
        })
        .collect()
}

fn strand_json(s: &Strand) -> StrandJson {
    StrandJson {
        top: SplitRefJson {
            entry: s.top.entry,
            piece: s.top.piece,
        },
        bottom: SplitRefJson {
            entry: s.bottom.entry,
            piece: s.bottom.piece,
        },
        weight: Rat(s.weight),
    }
}

/// `match`: minimal matching of two balanced rows.
pub fn run_match(input: In, output: In, exhaustive: bool) -> Result<(), CliError> {
    let doc: MatchInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let top = core_row(&doc.top);
    let bottom = core_row(&doc.bottom);
    let strands = minimal_match(&top, &bottom)?;
    let exhaustive_count = if exhaustive {
        Some(brute_force_match(&top, &bottom)?.len())
    } else {
        None
    };
    let out = MatchDoc {
        schema: SCHEMA,
        strands: strands.iter().map(strand_json).collect(),
        exhaustive_count,
    };
    write_output(output, &emit(&out)?)
}

/// `glue`: run the two-stage crown-to-surface matching.
pub fn glue(input: In, output: In) -> Result<(), CliError> {
    let doc: GlueInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let scene = GluingScene {
        crown: doc
            .crown
            .iter()
            .map(|s| CrownStrand {
                cusp: s.cusp,
                twist: s.twist,
                position: s.position.0,
                weight: s.weight.0,
            })
            .collect(),
        surface: doc
            .surface
            .iter()
            .map(|a| SurfaceArc {
                first: a.first.0,
                second: a.second.0,
                weight: a.weight.0,
            })
            .collect(),
    };
    let arcs = glue_crown_to_surface(&scene)?;
    let out = GlueDoc {
        schema: SCHEMA,
        arcs: arcs
            .iter()
            .map(|a| CombinedArcJson {
                ends: [0, 1].map(|k| {
                    let e = &a.ends[k];
                    CombinedEndJson {
                        crown_index: e.crown_index,
                        cusp: e.cusp,
                        twist: e.twist,
                        stage1: e.stage1,
                        stage2: e.stage2,
                        stage1_weight: Rat(e.stage1_weight),
                    }
                }),
                surface_arc: a.surface_arc,
                weight: Rat(a.weight),
            })
            .collect(),
    };
    write_output(output, &emit(&out)?)
}

/// Options for the `tips` subcommand.
pub struct TipsOptions {
    /// Degree for a pure power `z^d`.
    pub degree: Option<usize>,
    /// Low coefficients `c_0, ..., c_{d-2}` as complex literals.
    pub coeffs: Option<Vec<String>>,
    /// Seed radius override for asymptotic seeding.
    pub radius: Option<f64>,
    /// Integration tolerance override (absolute and relative).
    pub tol: Option<f64>,
    /// Write developing-map samples along every reading ray to this CSV.
    pub trace_csv: Option<PathBuf>,
}

fn parse_coeffs(raw: &[String]) -> Result<Vec<Complex<f64>>, CliError> {
    raw.iter()
        .map(|s| {
            Complex::<f64>::from_str(s.trim()).map_err(|e| {
                CliError::Schema(format!(
                    "bad complex coefficient {s:?}: {e} (examples: \"1\", \"-2.5i\", \"1+2i\")"
                ))
            })
        })
        .collect()
}

/// `tips`: run the developing-map engine on a polynomial potential.
pub fn tips(opts: TipsOptions, output: In) -> Result<(), CliError> {
    let q = match (opts.degree, &opts.coeffs) {
        (Some(d), None) => PolynomialQD::pure(d)?,
        (None, Some(raw)) => PolynomialQD::new(parse_coeffs(raw)?)?,
        (Some(d), Some(raw)) => {
            let coeffs = parse_coeffs(raw)?;
            if d != coeffs.len() + 1 {
                return Err(CliError::Schema(format!(
                    "--degree {d} disagrees with {} coefficients (degree = count + 1)",
                    coeffs.len()
                )));
            }
            PolynomialQD::new(coeffs)?
        }
        (None, None) => {
            return Err(CliError::Schema(
                "tips needs --degree (pure power) or --coeffs (low coefficients)".into(),
            ))
        }
    };
    let mut config = EngineConfig::default();
    if let Some(t) = opts.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Schema(format!(
                "--tol must be positive and finite, got {t}"
            )));
        }
        config.atol = t;
        config.rtol = t;
    }
    if let Some(r) = opts.radius {
        if !(r.is_finite() && r > 0.0) {
            return Err(CliError::Schema(format!(
                "--radius must be positive and finite, got {r}"
            )));
        }
        config.seed_radius = r;
    }
    let degree = q.degree();
    let coefficients = q.coefficients().iter().map(|c| [c.re, c.im]).collect();
    let engine = DevelopingMap::new(q, config)?;
    let geometry = stokes_geometry(degree)?;
    let outcome = engine.tips()?;
    let subdominant_gaps = outcome
        .tips
        .iter()
        .enumerate()
        .map(|(k, tip)| {
            engine
                .tip_from_subdominant(k, config.seed_radius)
                .map(|other| tip.chordal_distance(&other))
        })
        .collect::<Result<Vec<f64>, _>>()?;

    if let Some(csv_path) = &opts.trace_csv {
        let mut csv = String::from("sector,radius,re,im\n");
        let radii: Vec<f64> = (0..10)
            .map(|j| config.first_radius * config.radius_factor.powi(j))
            .collect();
        for (k, &bisector) in geometry.bisectors().iter().enumerate() {
            let angle: f64 = ratio_angle(bisector);
            let samples = engine.ray_samples(angle, &radii)?;
            for (r, p) in radii.iter().zip(&samples) {
                let (re, im) = match p.to_complex() {
                    Some(z) => (z.re.to_string(), z.im.to_string()),
                    None => ("inf".into(), "inf".into()),
                };
                csv.push_str(&format!("{k},{r},{re},{im}\n"));
            }
        }
        std::fs::write(csv_path, csv)?;
    }

    let fmt_ratio = |r: &num_rational::Ratio<i64>| r.to_string();
    let out = TipsEngineDoc {
        schema: SCHEMA,
        degree,
        coefficients,
        stokes: StokesJson {
            sectors: geometry.sector_count(),
            rays: geometry.rays().iter().map(fmt_ratio).collect(),
            sector_bounds: geometry
                .sector_bounds()
                .iter()
                .map(|(a, b)| (fmt_ratio(a), fmt_ratio(b)))
                .collect(),
            bisectors: geometry.bisectors().iter().map(fmt_ratio).collect(),
        },
        tips: outcome.tips.clone(),
        errors: outcome.errors.clone(),
        subdominant_gaps,
        wronskian_drift: outcome.wronskian_drift,
    };
    write_output(output, &emit(&out)?)
}

/// `render`: draw a figure document as a standalone SVG.
pub fn render(input: In, output: In, tol: &Tolerance<f64>) -> Result<(), CliError> {
    let doc: RenderInput = parse(&read_input(input)?)?;
    check_schema(&doc.schema)?;
    let svg = match doc.figure {
        FigureSpec::Polygon {
            polygon,
            diagonals,
            tips,
            layers,
        } => {
            let poly = polygon.resolve(tol)?;
            let weighted = weighted_diagonals(poly.len(), &diagonals)?;
            svg::polygon_figure(&poly, &weighted, tips.as_deref(), &layers)
        }
        FigureSpec::Crown { lamination, layers } => {
            let lam = lamination.resolve()?;
            svg::crown_figure(&lam, &layers)
        }
        FigureSpec::Bands { top, bottom } => {
            let core_top = core_row(&top);
            let core_bottom = core_row(&bottom);
            let strands = minimal_match(&core_top, &core_bottom)?;
            let top_pairs: Vec<(usize, Rational64)> =
                core_top.iter().map(|e| (e.origin, e.weight)).collect();
            let bottom_pairs: Vec<(usize, Rational64)> =
                core_bottom.iter().map(|e| (e.origin, e.weight)).collect();
            svg::bands_figure(&top_pairs, &bottom_pairs, &strands)
        }
        FigureSpec::Tips { tips, errors } => {
            if let Some(errs) = &errors {
                if errs.len() != tips.len() {
                    return Err(CliError::Schema(format!(
                        "{} errors for {} tips",
                        errs.len(),
                        tips.len()
                    )));
                }
            }
            svg::tips_figure(&tips, errors.as_deref())
        }
    };
    write_output(output, &svg)
}
