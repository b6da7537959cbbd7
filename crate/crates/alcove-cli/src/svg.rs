//! Deterministic SVG pictures of rank-2 apartments.
//!
//! Floating point lives only here: simple coroots are embedded in the plane
//! using the Gram matrix of the coroot system, everything else is exact.

use std::fmt::{self, Write};

use alcove_core::{AffineWeylElement, Chimney, EndSimplex, FaceType, Gallery, HalfApartment, RationalPoint, RootSystem, Sign};

const SIZE: f64 = 640.0;
const MARGIN: f64 = 16.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RenderError {
    Rank(usize),
    Window(i64),
}

impl fmt::Display for RenderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RenderError::Rank(n) => write!(f, "rendering needs a rank 2 root system, got rank {n}"),
            RenderError::Window(w) => write!(f, "window must be at least 1, got {w}"),
        }
    }
}

impl std::error::Error for RenderError {}

/// What to draw. Layers always go background, hyperplanes, sector, shadow,
/// galleries, labels.
pub struct Scene<'a> {
    pub rs: &'a RootSystem,
    /// half-width of the view in simple-coroot coordinates
    pub window: i64,
    pub fills: Vec<AffineWeylElement>,
    pub chimney: Option<&'a Chimney>,
    pub shadow: Vec<(EndSimplex, Option<usize>)>,
    pub galleries: Vec<Gallery>,
    pub title: Option<String>,
}

impl<'a> Scene<'a> {
    pub fn new(rs: &'a RootSystem, window: i64) -> Self {
        Scene { rs, window, fills: Vec::new(), chimney: None, shadow: Vec::new(), galleries: Vec::new(), title: None }
    }
}

type P = (f64, f64);

struct Frame {
    // columns: images of the simple coroots
    basis: [P; 2],
    lo: P,
    hi: P,
    scale: f64,
}

impl Frame {
    fn new(rs: &RootSystem, window: i64) -> Frame {
        // |a_i^vee|^2 up to a common factor, from a_ij c_i = a_ji c_j
        let c1 = 1.0;
        let c2 = rs.cartan_entry(0, 1) as f64 / rs.cartan_entry(1, 0) as f64;
        let g12 = rs.cartan_entry(0, 1) as f64 * c1 / 2.0;
        let cos = g12 / (c1 * c2).sqrt();
        let sin = (1.0 - cos * cos).sqrt();
        let basis = [(c1.sqrt(), 0.0), (c2.sqrt() * cos, c2.sqrt() * sin)];
        let w = window as f64;
        let mut lo = (f64::MAX, f64::MAX);
        let mut hi = (f64::MIN, f64::MIN);
        for (a, b) in [(-w, -w), (-w, w), (w, -w), (w, w)] {
            let p = (a * basis[0].0 + b * basis[1].0, a * basis[0].1 + b * basis[1].1);
            lo = (lo.0.min(p.0), lo.1.min(p.1));
            hi = (hi.0.max(p.0), hi.1.max(p.1));
        }
        let scale = (SIZE - 2.0 * MARGIN) / (hi.0 - lo.0).max(hi.1 - lo.1);
        Frame { basis, lo, hi, scale }
    }

    fn embed(&self, p: &RationalPoint) -> P {
        let a = p.num()[0] as f64 / p.den() as f64;
        let b = p.num()[1] as f64 / p.den() as f64;
        (a * self.basis[0].0 + b * self.basis[1].0, a * self.basis[0].1 + b * self.basis[1].1)
    }

    fn px(&self, p: P) -> P {
        (MARGIN + (p.0 - self.lo.0) * self.scale, MARGIN + (self.hi.1 - p.1) * self.scale)
    }

    fn width(&self) -> f64 {
        2.0 * MARGIN + (self.hi.0 - self.lo.0) * self.scale
    }

    fn height(&self) -> f64 {
        2.0 * MARGIN + (self.hi.1 - self.lo.1) * self.scale
    }

    // the root g as a linear functional on the plane: <g, v> = w . v
    fn functional(&self, rs: &RootSystem, g: usize) -> P {
        let f0 = rs.pairing(rs.root(g), &[1, 0]).unwrap() as f64;
        let f1 = rs.pairing(rs.root(g), &[0, 1]).unwrap() as f64;
        let [(a, c), (b, d)] = self.basis;
        // solve M^T w = f for M = [[a, b], [c, d]]
        let det = a * d - b * c;
        ((d * f0 - c * f1) / det, (-b * f0 + a * f1) / det)
    }

    fn corners(&self) -> Vec<P> {
        vec![self.lo, (self.hi.0, self.lo.1), self.hi, (self.lo.0, self.hi.1)]
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn points(frame: &Frame, pts: &[P]) -> String {
    pts.iter()
        .map(|&p| {
            let q = frame.px(p);
            format!("{},{}", num(q.0), num(q.1))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

// keep the part of a convex polygon where w . p >= k (or <= k)
fn clip(poly: &[P], w: P, k: f64, keep_above: bool) -> Vec<P> {
    let val = |p: P| {
        let v = w.0 * p.0 + w.1 * p.1 - k;
        if keep_above {
            v
        } else {
            -v
        }
    };
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        let (va, vb) = (val(a), val(b));
        if va >= 0.0 {
            out.push(a);
        }
        if (va >= 0.0) != (vb >= 0.0) {
            let t = va / (va - vb);
            out.push((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)));
        }
    }
    out
}

// the segment of the line w . p = k inside the view, if any
fn segment(frame: &Frame, w: P, k: f64) -> Option<(P, P)> {
    let strip = clip(&clip(&frame.corners(), w, k - 1e-9, true), w, k + 1e-9, false);
    if strip.len() < 2 {
        return None;
    }
    let dir = (-w.1, w.0);
    let t = |p: &P| p.0 * dir.0 + p.1 * dir.1;
    let a = strip.iter().copied().min_by(|p, q| t(p).total_cmp(&t(q)))?;
    let b = strip.iter().copied().max_by(|p, q| t(p).total_cmp(&t(q)))?;
    (t(&b) - t(&a) > 1e-9).then_some((a, b))
}

// center of the face of x.a fixed by x W_T x^{-1}
fn face_center(rs: &RootSystem, x: &AffineWeylElement, face: FaceType) -> RationalPoint {
    let vs = rs.alcove_vertices();
    let chosen: Vec<&RationalPoint> =
        vs.iter().enumerate().filter(|(i, _)| *i == 0 || !face.contains(*i)).map(|(_, v)| v).collect();
    mean(rs, x, &chosen)
}

// center of the panel of x.a of type s
fn panel_center(rs: &RootSystem, x: &AffineWeylElement, s: usize) -> RationalPoint {
    let vs = rs.alcove_vertices();
    let chosen: Vec<&RationalPoint> = vs.iter().enumerate().filter(|(i, _)| *i != s).map(|(_, v)| v).collect();
    mean(rs, x, &chosen)
}

fn mean(rs: &RootSystem, x: &AffineWeylElement, pts: &[&RationalPoint]) -> RationalPoint {
    let n = rs.rank();
    let den: i64 = pts.iter().map(|p| p.den()).product::<i64>() * pts.len() as i64;
    let num = (0..n)
        .map(|i| pts.iter().map(|p| p.num()[i] * (den / pts.len() as i64 / p.den())).sum::<i64>())
        .collect();
    x.apply_rational(&RationalPoint::new(num, den))
}

fn face_vertices(rs: &RootSystem, x: &AffineWeylElement, face: FaceType) -> Vec<RationalPoint> {
    rs.alcove_vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i == 0 || !face.contains(*i))
        .map(|(_, v)| x.apply_rational(v))
        .collect()
}

fn half_plane(frame: &Frame, rs: &RootSystem, poly: Vec<P>, h: &HalfApartment) -> Vec<P> {
    let w = frame.functional(rs, h.hyperplane.root);
    clip(&poly, w, h.hyperplane.level as f64, h.side == Sign::Plus)
}

pub fn render_svg(scene: &Scene) -> Result<String, RenderError> {
    let rs = scene.rs;
    if rs.rank() != 2 {
        return Err(RenderError::Rank(rs.rank()));
    }
    if scene.window < 1 {
        return Err(RenderError::Window(scene.window));
    }
    let frame = Frame::new(rs, scene.window);
    let mut s = String::new();
    let (w, h) = (num(frame.width()), num(frame.height()));
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );

    let _ = writeln!(s, r#"<g id="background">"#);
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##);
    let base = [rs.identity()];
    for (i, x) in base.iter().chain(&scene.fills).enumerate() {
        let fill = if i == 0 { "#e0e0e0" } else { "#f4b6c2" };
        let vs: Vec<P> = face_vertices(rs, x, FaceType::alcove()).iter().map(|p| frame.embed(p)).collect();
        let _ = writeln!(s, r#"<polygon points="{}" fill="{fill}"/>"#, points(&frame, &vs));
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="hyperplanes" fill="none">"#);
    for g in 0..rs.num_positive_roots() {
        let wv = frame.functional(rs, g);
        let reach = frame.corners().iter().map(|p| (wv.0 * p.0 + wv.1 * p.1).abs()).fold(0.0, f64::max);
        let bound = reach.floor() as i64;
        for k in -bound..=bound {
            if let Some((a, b)) = segment(&frame, wv, k as f64) {
                let (a, b) = (frame.px(a), frame.px(b));
                let (color, width) = if k == 0 { ("#555555", "1.2000") } else { ("#b0b0b0", "0.6000") };
                let _ = writeln!(
                    s,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{width}"/>"#,
                    num(a.0),
                    num(a.1),
                    num(b.0),
                    num(b.1)
                );
            }
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="sector">"#);
    if let Some(c) = scene.chimney {
        let mut poly = frame.corners();
        for half in c.sector(rs) {
            poly = half_plane(&frame, rs, poly, &half);
        }
        if poly.len() >= 3 {
            let _ = writeln!(
                s,
                r##"<polygon points="{}" fill="#4a90d9" fill-opacity="0.1500" stroke="#4a90d9" stroke-width="1.0000"/>"##,
                points(&frame, &poly)
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="shadow">"#);
    let r0 = frame.scale * 0.06;
    for (simplex, mult) in &scene.shadow {
        let vs: Vec<P> = face_vertices(rs, &simplex.rep, simplex.face).iter().map(|p| frame.embed(p)).collect();
        match vs.len() {
            1 => {
                let c = frame.px(vs[0]);
                let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="{}" fill="#000000"/>"##, num(c.0), num(c.1), num(r0));
                for ring in 1..mult.unwrap_or(1) {
                    let _ = writeln!(
                        s,
                        r##"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="#000000" stroke-width="1.0000"/>"##,
                        num(c.0),
                        num(c.1),
                        num(r0 * (1.0 + ring as f64))
                    );
                }
            }
            2 => {
                let (a, b) = (frame.px(vs[0]), frame.px(vs[1]));
                let _ = writeln!(
                    s,
                    r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-width="{}"/>"##,
                    num(a.0),
                    num(a.1),
                    num(b.0),
                    num(b.1),
                    num(1.5 * mult.unwrap_or(1) as f64)
                );
            }
            _ => {
                let opacity = (0.25 * mult.unwrap_or(1) as f64).min(0.9);
                let _ = writeln!(
                    s,
                    r##"<polygon points="{}" fill="#000000" fill-opacity="{}"/>"##,
                    points(&frame, &vs),
                    num(opacity)
                );
            }
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="galleries" fill="none" stroke-width="1.5000" stroke-opacity="0.8000">"#);
    for (i, g) in scene.galleries.iter().enumerate() {
        let t = g.gallery_type();
        let alcoves = g.alcoves(rs);
        let mut path = vec![frame.embed(&face_center(rs, &alcoves[0], t.start))];
        path.push(frame.embed(&face_center(rs, &alcoves[0], FaceType::alcove())));
        for (k, &letter) in t.word.iter().enumerate() {
            path.push(frame.embed(&panel_center(rs, &alcoves[k], letter)));
            path.push(frame.embed(&face_center(rs, &alcoves[k + 1], FaceType::alcove())));
        }
        path.push(frame.embed(&face_center(rs, &alcoves[g.len()], t.end)));
        let _ = writeln!(s, r#"<polyline points="{}" stroke="{}"/>"#, points(&frame, &path), PALETTE[i % PALETTE.len()]);
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="labels" font-family="sans-serif" font-size="12">"#);
    let origin = frame.px((0.0, 0.0));
    let _ = writeln!(s, r#"<text x="{}" y="{}">0</text>"#, num(origin.0 + 4.0), num(origin.1 - 4.0));
    if let Some(title) = &scene.title {
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, num(MARGIN), num(MARGIN - 4.0), escape(title));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
