//! Static SVG figure emission.
//!
//! Non-normative debugging output: disk pictures of ideal polygons with
//! their grafted diagonals, crowns with measured laminations and dual-graph
//! stubs, band diagrams of matchings, and stereographic tip charts with the
//! point at infinity drawn as an explicit boundary glyph. Output is a pure
//! function of the input document.

use num_complex::Complex;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use crowngraft::crown::{CrownArc, CrownLamination, DualStubKind, DualVertexKind};
use crowngraft::grafting::WeightedDiagonals;
use crowngraft::matching::Strand;
use crowngraft::polygon::IdealPolygon;
use crowngraft::SpherePoint64;

type C = Complex<f64>;

const DISK_SIZE: f64 = 640.0;
const DISK_RADIUS: f64 = 260.0;

/// A growing SVG document.
struct Svg {
    width: f64,
    height: f64,
    body: String,
}

impl Svg {
    fn new(width: f64, height: f64) -> Self {
        Self {
            width,
            height,
            body: String::new(),
        }
    }

    fn push(&mut self, element: &str) {
        self.body.push_str("  ");
        self.body.push_str(element);
        self.body.push('\n');
    }

    fn circle(&mut self, x: f64, y: f64, r: f64, class: &str, style: &str) {
        self.push(&format!(
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" class="{class}" {style}/>"#
        ));
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, class: &str, style: &str) {
        self.push(&format!(
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" class="{class}" {style}/>"#
        ));
    }

    fn path(&mut self, d: &str, class: &str, style: &str) {
        self.push(&format!(r#"<path d="{d}" class="{class}" {style}/>"#));
    }

    fn text(&mut self, x: f64, y: f64, class: &str, content: &str) {
        self.push(&format!(
            r#"<text x="{x:.2}" y="{y:.2}" class="{class}">{}</text>"#,
            escape(content)
        ));
    }

    fn finish(self) -> String {
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" "#,
                r#"viewBox="0 0 {w} {h}">"#,
                "\n",
                "  <style>\n",
                "    svg {{ background: white; }}\n",
                "    text {{ font-family: monospace; font-size: 13px; fill: #333; }}\n",
                "    .disk {{ fill: none; stroke: #333; stroke-width: 1.5; }}\n",
                "    .side {{ fill: none; stroke: #888; stroke-width: 1; }}\n",
                "    .diagonal {{ fill: none; stroke: #c22; stroke-width: 1.5; }}\n",
                "    .chord {{ fill: none; stroke: #c22; stroke-width: 1.5; }}\n",
                "    .boundary-arc {{ fill: none; stroke: #26a; stroke-width: 1.5; }}\n",
                "    .boundary-geodesic {{ fill: none; stroke: #999; stroke-width: 1; stroke-dasharray: 6 4; }}\n",
                "    .stub {{ stroke: #2a6; stroke-width: 1.5; stroke-dasharray: 4 3; }}\n",
                "    .dual-vertex {{ fill: #2a6; }}\n",
                "    .vertex {{ fill: #333; }}\n",
                "    .tip {{ fill: #c22; }}\n",
                "    .error-ring {{ fill: none; stroke: #c22; stroke-dasharray: 3 3; }}\n",
                "    .infinity {{ fill: none; stroke: #c22; stroke-width: 2; }}\n",
                "    .frame {{ fill: none; stroke: #aaa; }}\n",
                "    .band-top {{ fill: #cde; stroke: #333; }}\n",
                "    .band-bottom {{ fill: #dec; stroke: #333; }}\n",
                "    .strand {{ fill: #c22; fill-opacity: 0.25; stroke: #c22; }}\n",
                "  </style>\n",
                "{body}",
                "</svg>\n"
            ),
            w = self.width,
            h = self.height,
            body = self.body
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Disk coordinates (unit disk) to screen coordinates, y flipped.
fn to_screen(z: C, cx: f64, cy: f64) -> (f64, f64) {
    (cx + DISK_RADIUS * z.re, cy - DISK_RADIUS * z.im)
}

/// SVG path for the hyperbolic geodesic between two ideal points on the
/// unit circle: an arc of the circle orthogonal to the boundary, or a
/// diameter when the points are antipodal.
fn geodesic_path(p: C, q: C, cx: f64, cy: f64) -> String {
    let (px, py) = to_screen(p, cx, cy);
    let (qx, qy) = to_screen(q, cx, cy);
    let denom = 1.0 + (p * q.conj()).re;
    if denom.abs() < 1e-9 {
        return format!("M {px:.2} {py:.2} L {qx:.2} {qy:.2}");
    }
    let center = (p + q) / denom;
    let radius = (center - p).norm() * DISK_RADIUS;
    let alpha = (p - center).arg();
    let beta = (q - center).arg();
    let mut delta = beta - alpha;
    while delta > std::f64::consts::PI {
        delta -= std::f64::consts::TAU;
    }
    while delta <= -std::f64::consts::PI {
        delta += std::f64::consts::TAU;
    }
    // Counterclockwise in disk coordinates flips to sweep 0 on screen.
    let sweep = if delta > 0.0 { 0 } else { 1 };
    format!("M {px:.2} {py:.2} A {radius:.2} {radius:.2} 0 0 {sweep} {qx:.2} {qy:.2}")
}

/// Midpoint of the geodesic (the point nearest the origin), for labels.
fn geodesic_midpoint(p: C, q: C) -> C {
    let denom = 1.0 + (p * q.conj()).re;
    if denom.abs() < 1e-9 {
        return (p + q) / 2.0;
    }
    let center = (p + q) / denom;
    let radius = (center - p).norm();
    center - center / center.norm() * radius
}

fn layer_on(layers: &Option<Vec<String>>, name: &str) -> bool {
    match layers {
        None => true,
        Some(list) => list.iter().any(|l| l == name),
    }
}

// -------------------------------------------------------------- tip chart

/// Draw a stereographic chart of tips into `svg` at the given origin with
/// the given square size. Finite tips are plotted in plane coordinates,
/// auto-scaled; infinite tips become a marked glyph on the frame boundary.
fn draw_tip_chart(
    svg: &mut Svg,
    tips: &[SpherePoint64],
    errors: Option<&[f64]>,
    x0: f64,
    y0: f64,
    size: f64,
) {
    let margin = 40.0;
    svg.push(&format!(
        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" class="frame"/>"#,
        x0 + margin,
        y0 + margin,
        size - 2.0 * margin,
        size - 2.0 * margin
    ));
    let finite: Vec<C> = tips.iter().filter_map(|t| t.to_complex()).collect();
    let extent = finite
        .iter()
        .map(|z| z.re.abs().max(z.im.abs()))
        .fold(1.0f64, f64::max);
    let scale = (size / 2.0 - margin - 10.0) / extent;
    let cx = x0 + size / 2.0;
    let cy = y0 + size / 2.0;
    // Axes of the chart.
    svg.line(x0 + margin, cy, x0 + size - margin, cy, "frame", "");
    svg.line(cx, y0 + margin, cx, y0 + size - margin, "frame", "");
    let mut infinite = 0usize;
    for (k, tip) in tips.iter().enumerate() {
        match tip.to_complex() {
            Some(z) => {
                let px = cx + z.re * scale;
                let py = cy - z.im * scale;
                if let Some(errs) = errors {
                    let ring = (errs[k] * scale).max(3.0);
                    svg.circle(px, py, ring, "error-ring", "");
                }
                svg.circle(px, py, 4.0, "tip", "");
                svg.text(px + 6.0, py - 6.0, "label", &format!("t{k}"));
            }
            None => {
                // Boundary glyph for the point at infinity: a marked ring
                // on the frame edge, one slot per infinite tip.
                let gx = x0 + size - margin - 14.0 - 26.0 * infinite as f64;
                let gy = y0 + margin;
                svg.circle(gx, gy, 8.0, "infinity", "");
                svg.line(gx - 8.0, gy, gx + 8.0, gy, "infinity", "");
                svg.text(gx - 4.0, gy - 12.0, "label", &format!("t{k}=inf"));
                infinite += 1;
            }
        }
    }
}

// ---------------------------------------------------------- polygon figure

/// Ideal polygon in the disk with grafting data.
pub fn polygon_figure(
    poly: &IdealPolygon<f64>,
    weighted: &WeightedDiagonals<f64>,
    tips: Option<&[SpherePoint64]>,
    layers: &Option<Vec<String>>,
) -> String {
    let with_chart = tips.is_some() && layer_on(layers, "tips");
    let width = if with_chart { 2.0 * DISK_SIZE } else { DISK_SIZE };
    let mut svg = Svg::new(width, DISK_SIZE);
    let cx = DISK_SIZE / 2.0;
    let cy = DISK_SIZE / 2.0;
    let vertices = poly.vertices();
    if layer_on(layers, "disk") {
        svg.circle(cx, cy, DISK_RADIUS, "disk", "");
        for k in 0..vertices.len() {
            let next = vertices[(k + 1) % vertices.len()];
            svg.path(&geodesic_path(vertices[k], next, cx, cy), "side", "");
        }
    }
    if layer_on(layers, "diagonals") {
        for (diagonal, weight) in weighted.pairs() {
            let p = vertices[diagonal.i()];
            let q = vertices[diagonal.j()];
            svg.path(&geodesic_path(p, q, cx, cy), "diagonal", "");
            if layer_on(layers, "labels") {
                let (mx, my) = to_screen(geodesic_midpoint(p, q), cx, cy);
                svg.text(mx + 4.0, my - 4.0, "label", &format!("w={weight:.4}"));
            }
        }
    }
    if layer_on(layers, "vertices") {
        for (k, &v) in vertices.iter().enumerate() {
            let (px, py) = to_screen(v, cx, cy);
            svg.circle(px, py, 3.5, "vertex", "");
            let (lx, ly) = to_screen(v * 1.08, cx, cy);
            svg.text(lx - 4.0, ly + 4.0, "label", &format!("{k}"));
        }
    }
    if let (true, Some(t)) = (with_chart, tips) {
        draw_tip_chart(&mut svg, t, None, DISK_SIZE, 0.0, DISK_SIZE);
    }
    svg.finish()
}

// ------------------------------------------------------------ crown figure

/// Crown with a measured lamination: disk, cusps, sides, the boundary
/// geodesic (dashed inner circle), the arcs, and dual-graph stubs.
pub fn crown_figure(lam: &CrownLamination<f64>, layers: &Option<Vec<String>>) -> String {
    let mut svg = Svg::new(DISK_SIZE, DISK_SIZE);
    let cx = DISK_SIZE / 2.0;
    let cy = DISK_SIZE / 2.0;
    let m = lam.cusp_count();
    let cusp_point = |c: usize| -> C {
        let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * (c as f64 - 1.0) / m as f64;
        C::from_polar(1.0, angle)
    };
    let inner = 0.45;
    if layer_on(layers, "disk") {
        svg.circle(cx, cy, DISK_RADIUS, "disk", "");
        svg.circle(cx, cy, DISK_RADIUS * inner, "boundary-geodesic", "");
        for c in 1..=m {
            let next = if c == m { 1 } else { c + 1 };
            svg.path(
                &geodesic_path(cusp_point(c), cusp_point(next), cx, cy),
                "side",
                "",
            );
        }
    }
    if layer_on(layers, "vertices") {
        for c in 1..=m {
            let (px, py) = to_screen(cusp_point(c), cx, cy);
            svg.circle(px, py, 3.5, "vertex", "");
            let (lx, ly) = to_screen(cusp_point(c) * 1.08, cx, cy);
            svg.text(lx - 4.0, ly + 4.0, "label", &format!("c{c}"));
        }
    }
    if layer_on(layers, "arcs") {
        let l = lam.boundary_measure();
        for arc in lam.arcs() {
            match arc {
                CrownArc::Chord { from, to, weight } => {
                    let p = cusp_point(from);
                    let q = cusp_point(to);
                    svg.path(&geodesic_path(p, q, cx, cy), "chord", "");
                    if layer_on(layers, "labels") {
                        let (mx, my) = to_screen(geodesic_midpoint(p, q), cx, cy);
                        svg.text(mx + 4.0, my - 4.0, "label", &format!("w={weight:.4}"));
                    }
                }
                CrownArc::Boundary {
                    cusp,
                    twist,
                    offset,
                    weight,
                } => {
                    let p = cusp_point(cusp);
                    let frac = if l > 0.0 { offset / l } else { 0.0 };
                    let landing = C::from_polar(
                        inner,
                        std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * frac,
                    );
                    let (px, py) = to_screen(p, cx, cy);
                    let (ax, ay) = to_screen(landing, cx, cy);
                    let (mx, my) = to_screen((p + landing) * 0.55, cx, cy);
                    svg.path(
                        &format!("M {px:.2} {py:.2} Q {mx:.2} {my:.2} {ax:.2} {ay:.2}"),
                        "boundary-arc",
                        "",
                    );
                    if layer_on(layers, "labels") {
                        svg.text(
                            mx + 4.0,
                            my - 4.0,
                            "label",
                            &format!("w={weight:.4} n={twist}"),
                        );
                    }
                }
            }
        }
    }
    if layer_on(layers, "dual") {
        let dual = lam.to_dual_graph();
        // Region vertices, schematically placed.
        let chords = lam.chords();
        let boundary = lam.boundary_arcs();
        let place = |kind: &DualVertexKind| -> C {
            match *kind {
                DualVertexKind::Collar => C::new(0.0, 0.0),
                DualVertexKind::Sector(j) => {
                    let b = boundary.len().max(1);
                    C::from_polar(
                        0.22,
                        std::f64::consts::FRAC_PI_2
                            + std::f64::consts::TAU * (j as f64 + 0.5) / b as f64,
                    )
                }
                DualVertexKind::Chord { from, to } => {
                    (cusp_point(from) + cusp_point(to)) * 0.45
                }
            }
        };
        let _ = chords;
        for kind in dual.vertices() {
            let (px, py) = to_screen(place(kind), cx, cy);
            svg.circle(px, py, 3.0, "dual-vertex", "");
        }
        // One infinite stub per side, drawn out through the side midpoint.
        for stub in dual.stubs() {
            match stub.kind {
                DualStubKind::Side(side) => {
                    let a = cusp_point(side);
                    let b = cusp_point(if side == m { 1 } else { side + 1 });
                    let mid = geodesic_midpoint(a, b);
                    let from = place(&dual.vertices()[stub.vertex]);
                    let (x1, y1) = to_screen(from, cx, cy);
                    let (x2, y2) = to_screen(mid, cx, cy);
                    svg.line(x1, y1, x2, y2, "stub", "");
                }
                DualStubKind::BoundaryLeaf(length) => {
                    let from = place(&dual.vertices()[stub.vertex]);
                    let (x1, y1) = to_screen(from, cx, cy);
                    svg.line(x1, y1, cx, cy, "stub", "");
                    if layer_on(layers, "labels") {
                        svg.text(
                            (x1 + cx) / 2.0,
                            (y1 + cy) / 2.0 - 4.0,
                            "label",
                            &format!("leaf={length:.4}"),
                        );
                    }
                }
            }
        }
    }
    svg.finish()
}

// ------------------------------------------------------------- band figure

fn rat_f64(r: Rational64) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Band diagram of a two-row matching: the rows as horizontal bars split
/// into their arc entries, with one translucent ribbon per strand.
pub fn bands_figure(
    top: &[(usize, Rational64)],
    bottom: &[(usize, Rational64)],
    strands: &[Strand],
) -> String {
    let width = 820.0;
    let height = 430.0;
    let margin = 60.0;
    let bar = 26.0;
    let top_y = 80.0;
    let bottom_y = 320.0;
    let total: f64 = top.iter().map(|&(_, w)| rat_f64(w)).sum::<f64>().max(1e-9);
    let scale = (width - 2.0 * margin) / total;
    let mut svg = Svg::new(width, height);

    let mut spans = |row: &[(usize, Rational64)], y: f64, class: &str, above: bool| -> Vec<f64> {
        let mut cum = Vec::with_capacity(row.len() + 1);
        let mut x = margin;
        cum.push(x);
        for &(origin, w) in row {
            let wpx = rat_f64(w) * scale;
            svg.push(&format!(
                r#"<rect x="{x:.2}" y="{y:.2}" width="{wpx:.2}" height="{bar:.2}" class="{class}"/>"#
            ));
            let label_y = if above { y - 8.0 } else { y + bar + 16.0 };
            svg.text(x + wpx / 2.0 - 10.0, label_y, "label", &format!("a{origin}={w}"));
            x += wpx;
            cum.push(x);
        }
        cum
    };
    let top_cum = spans(top, top_y, "band-top", true);
    let bottom_cum = spans(bottom, bottom_y, "band-bottom", false);

    // Walk the strands, consuming each entry left to right.
    let mut top_used = vec![0.0f64; top.len()];
    let mut bottom_used = vec![0.0f64; bottom.len()];
    for strand in strands {
        let w = rat_f64(strand.weight) * scale;
        let tx = top_cum[strand.top.entry] + top_used[strand.top.entry];
        let bx = bottom_cum[strand.bottom.entry] + bottom_used[strand.bottom.entry];
        top_used[strand.top.entry] += w;
        bottom_used[strand.bottom.entry] += w;
        svg.path(
            &format!(
                "M {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} Z",
                tx,
                top_y + bar,
                tx + w,
                top_y + bar,
                bx + w,
                bottom_y,
                bx,
                bottom_y
            ),
            "strand",
            "",
        );
        svg.text(
            (tx + bx) / 2.0 + w / 2.0,
            (top_y + bottom_y + bar) / 2.0,
            "label",
            &format!("{}", strand.weight),
        );
    }
    svg.finish()
}

// -------------------------------------------------------------- tip figure

/// Standalone stereographic tip chart with error rings.
pub fn tips_figure(tips: &[SpherePoint64], errors: Option<&[f64]>) -> String {
    let mut svg = Svg::new(DISK_SIZE, DISK_SIZE);
    draw_tip_chart(&mut svg, tips, errors, 0.0, 0.0, DISK_SIZE);
    svg.finish()
}
