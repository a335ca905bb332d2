//! Deterministic SVG rendering of point sets, hulls, admissible regions and
//! witnesses. All coordinates are computed exactly and printed with a fixed
//! number of decimals, so identical inputs give identical bytes.

use std::fmt::Write;

use crate::geom::convex_hull;
use crate::region::{boundary_crossing, Cell, HalfPlane, Region};
use crate::{Point, PointSet, Rat};

const SIZE: i64 = 800;
const DECIMALS: u32 = 3;

#[derive(Clone, Debug)]
pub struct SvgScene<'a> {
    pub points: &'a PointSet,
    pub region: Option<&'a Region>,
    pub witness: Option<&'a Point>,
}

struct Viewport {
    min: Point,
    max: Point,
    scale: Rat,
}

impl Viewport {
    fn fit(pts: &[&Point]) -> Viewport {
        let mut min = pts[0].clone();
        let mut max = pts[0].clone();
        for p in pts {
            min.x = min.x.clone().min(p.x.clone());
            min.y = min.y.clone().min(p.y.clone());
            max.x = max.x.clone().max(p.x.clone());
            max.y = max.y.clone().max(p.y.clone());
        }
        let mut w = &max.x - &min.x;
        let mut h = &max.y - &min.y;
        if w.is_zero() && h.is_zero() {
            w = Rat::one();
            h = Rat::one();
        }
        let span = w.max(h);
        let margin = &span * Rat::new(1, 10);
        let pad = Point::new(margin.clone(), margin);
        let min = min.sub(&pad);
        let max = max.add(&pad);
        let side = (&max.x - &min.x).max(&max.y - &min.y);
        Viewport {
            scale: Rat::from_int(SIZE) / side,
            min,
            max,
        }
    }

    fn x(&self, p: &Point) -> String {
        ((&p.x - &self.min.x) * &self.scale).to_decimal_string(DECIMALS)
    }

    fn y(&self, p: &Point) -> String {
        (Rat::from_int(SIZE) - (&p.y - &self.min.y) * &self.scale).to_decimal_string(DECIMALS)
    }

    fn xy(&self, p: &Point) -> String {
        format!("{},{}", self.x(p), self.y(p))
    }

    fn clip_box(&self) -> Vec<HalfPlane> {
        let h = |a: i64, b: i64, c: &Rat| HalfPlane::new(&Rat::from_int(a), &Rat::from_int(b), c).expect("axis");
        vec![
            h(1, 0, &self.max.x),
            h(-1, 0, &-&self.min.x),
            h(0, 1, &self.max.y),
            h(0, -1, &-&self.min.y),
        ]
    }
}

/// Vertices of `cell` clipped to the viewport, in CCW order.
fn clipped_polygon(cell: &Cell, vp: &Viewport) -> Vec<Point> {
    let mut hs: Vec<HalfPlane> = cell.constraints().to_vec();
    hs.extend(vp.clip_box());
    let clipped = Cell::new(hs.clone());
    let mut verts: Vec<Point> = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            if let Some(p) = boundary_crossing(&hs[i], &hs[j]) {
                if clipped.contains(&p) {
                    verts.push(p);
                }
            }
        }
    }
    verts.sort();
    verts.dedup();
    if verts.len() < 3 {
        return verts;
    }
    // Strictly convex hull also drops collinear crossings.
    convex_hull(&verts).hull
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(scene: &SvgScene) -> String {
    let mut anchors: Vec<&Point> = scene.points.points().iter().collect();
    if let Some(w) = scene.witness {
        anchors.push(w);
    }
    let vp = Viewport::fit(&anchors);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#);

    if let Some(region) = scene.region {
        let _ = writeln!(out, r##"<g id="region" fill="#9ecae1" fill-opacity="0.6" stroke="#3182bd" stroke-width="2">"##);
        for (i, cell) in region.cells().iter().enumerate() {
            let list: Vec<String> = cell.constraints().iter().map(|h| h.to_string()).collect();
            let _ = writeln!(out, "<!-- cell {i}: {} -->", escape(&list.join("; ")));
            let poly = clipped_polygon(cell, &vp);
            match poly.len() {
                0 => {}
                1 => {
                    let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3"/>"#, vp.x(&poly[0]), vp.y(&poly[0]));
                }
                2 => {
                    let _ = writeln!(
                        out,
                        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                        vp.x(&poly[0]),
                        vp.y(&poly[0]),
                        vp.x(&poly[1]),
                        vp.y(&poly[1])
                    );
                }
                _ => {
                    let pts: Vec<String> = poly.iter().map(|p| vp.xy(p)).collect();
                    let _ = writeln!(out, r#"<polygon points="{}"/>"#, pts.join(" "));
                }
            }
        }
        let _ = writeln!(out, "</g>");
    }

    let hull = convex_hull(scene.points.points()).hull;
    if hull.len() >= 2 {
        let pts: Vec<String> = hull.iter().map(|p| vp.xy(p)).collect();
        let _ = writeln!(
            out,
            r#"<polygon id="hull" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            pts.join(" ")
        );
    }

    let _ = writeln!(out, r#"<g id="points" fill="black" font-family="monospace" font-size="14">"#);
    for (i, p) in scene.points.points().iter().enumerate() {
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="4"/>"#, vp.x(p), vp.y(p));
        if let Some(l) = scene.points.label(i) {
            let _ = writeln!(out, r#"<text x="{}" y="{}" dx="6" dy="-6">{}</text>"#, vp.x(p), vp.y(p), escape(l));
        }
    }
    let _ = writeln!(out, "</g>");

    if let Some(w) = scene.witness {
        let _ = writeln!(out, "<!-- witness {w} -->");
        let _ = writeln!(
            out,
            r#"<circle id="witness" cx="{}" cy="{}" r="6" fill="none" stroke="red" stroke-width="2"/>"#,
            vp.x(w),
            vp.y(w)
        );
    }
    out.push_str("</svg>\n");
    out
}
