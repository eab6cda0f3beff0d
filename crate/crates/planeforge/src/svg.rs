//! Static SVG figures of constructed instances. Conics are drawn as
//! sampled polylines; every object appears exactly once under its catalog
//! name.

use crate::conic::{Conic, ConicClass};
use crate::geom::{pt, Circle, Line, Point};
use crate::scenario::{Built, Object};
use std::fmt::Write;

struct Bounds {
    min: Point,
    max: Point,
}

impl Bounds {
    fn add(&mut self, p: Point) {
        if !p.is_finite() {
            return;
        }
        self.min = pt(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = pt(self.max.x.max(p.x), self.max.y.max(p.y));
    }
}

fn bounds_of(built: &Built) -> Bounds {
    let mut b = Bounds {
        min: pt(f64::INFINITY, f64::INFINITY),
        max: pt(f64::NEG_INFINITY, f64::NEG_INFINITY),
    };
    for (_, obj) in &built.objects {
        match obj {
            Object::Point(p) => b.add(*p),
            Object::Circle(c) => {
                b.add(c.center + pt(c.r, c.r));
                b.add(c.center - pt(c.r, c.r));
            }
            Object::Line(_) | Object::Conic(_) => {}
        }
    }
    if !b.min.is_finite() {
        b.min = pt(-1.0, -1.0);
        b.max = pt(1.0, 1.0);
    }
    let margin = (b.max - b.min).norm().max(1.0) * 0.15;
    b.min = b.min - pt(margin, margin);
    b.max = b.max + pt(margin, margin);
    b
}

/// Clip a line to the bounding rectangle; None when it misses.
fn clip_line(l: &Line, b: &Bounds) -> Option<(Point, Point)> {
    let corners_dist = (b.max - b.min).norm();
    let center = (b.min + b.max) * 0.5;
    let foot = l.foot(center);
    let d = l.direction();
    let p1 = foot + d * corners_dist;
    let p2 = foot - d * corners_dist;
    // Liang-Barsky style clamp on the segment p1-p2
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    let dx = p2.x - p1.x;
    let dy = p2.y - p1.y;
    let checks = [
        (-dx, p1.x - b.min.x),
        (dx, b.max.x - p1.x),
        (-dy, p1.y - b.min.y),
        (dy, b.max.y - p1.y),
    ];
    for (p, q) in checks {
        if p.abs() < 1e-12 {
            if q < 0.0 {
                return None;
            }
            continue;
        }
        let r = q / p;
        if p < 0.0 {
            t0 = t0.max(r);
        } else {
            t1 = t1.min(r);
        }
        if t0 > t1 {
            return None;
        }
    }
    Some((
        pt(p1.x + t0 * dx, p1.y + t0 * dy),
        pt(p1.x + t1 * dx, p1.y + t1 * dy),
    ))
}

fn conic_polylines(c: &Conic, b: &Bounds) -> Vec<Vec<Point>> {
    let span = (b.max - b.min).norm();
    match c.class() {
        ConicClass::LinePair | ConicClass::DoubleLine => {
            match crate::conic::split_line_pair(&c.m) {
                Ok((l1, l2)) => [l1, l2]
                    .iter()
                    .filter_map(|l| clip_line(l, b).map(|(p, q)| vec![p, q]))
                    .collect(),
                Err(_) => vec![],
            }
        }
        _ => {
            // sample by sweeping lines through an interior-ish anchor
            let anchor = c.center().unwrap_or((b.min + b.max) * 0.5);
            let mut branches: Vec<Vec<Point>> = vec![vec![], vec![]];
            let n = 256;
            for k in 0..n {
                let theta = std::f64::consts::PI * k as f64 / n as f64;
                let dir = pt(theta.cos(), theta.sin());
                if let Ok(l) = Line::through_dir(anchor, dir) {
                    let hits = crate::conic::conic_meet_line(c, &l);
                    for (i, h) in hits.iter().enumerate().take(2) {
                        if h.is_finite() && (h.dist(anchor)) < span * 2.0 {
                            branches[i].push(*h);
                        }
                    }
                }
            }
            branches
                .into_iter()
                .filter(|br| br.len() > 3)
                .map(|mut br| {
                    // order around the anchor for a clean polyline
                    br.sort_by(|p, q| {
                        (p.y - anchor.y)
                            .atan2(p.x - anchor.x)
                            .total_cmp(&(q.y - anchor.y).atan2(q.x - anchor.x))
                    });
                    br
                })
                .collect()
        }
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render one constructed instance as a standalone SVG 1.1 document.
pub fn render(built: &Built) -> String {
    let b = bounds_of(built);
    let w = 800.0;
    let span = b.max - b.min;
    let h = (w * span.y / span.x).max(100.0);
    let sx = w / span.x;
    let sy = h / span.y;
    let map = |p: Point| -> (f64, f64) { ((p.x - b.min.x) * sx, (b.max.y - p.y) * sy) };
    let mut s = String::new();
    writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"  <rect width="100%" height="100%" fill="white"/>"#
    )
    .unwrap();
    for (name, obj) in &built.objects {
        let id = xml_escape(name);
        match obj {
            Object::Line(l) => {
                if let Some((p, q)) = clip_line(l, &b) {
                    let (x1, y1) = map(p);
                    let (x2, y2) = map(q);
                    writeln!(
                        s,
                        r##"  <line id="{id}" x1="{x1:.4}" y1="{y1:.4}" x2="{x2:.4}" y2="{y2:.4}" stroke="#445" stroke-width="1"/>"##
                    )
                    .unwrap();
                }
            }
            Object::Circle(c) => {
                let (cx, cy) = map(c.center);
                writeln!(
                    s,
                    r##"  <circle id="{id}" cx="{cx:.4}" cy="{cy:.4}" r="{:.4}" fill="none" stroke="#286" stroke-width="1"/>"##,
                    c.r * sx
                )
                .unwrap();
            }
            Object::Conic(k) => {
                let polys = conic_polylines(k, &b);
                if polys.is_empty() {
                    continue;
                }
                write!(s, r##"  <g id="{id}" fill="none" stroke="#a36" stroke-width="1">"##).unwrap();
                for poly in polys {
                    write!(s, r#"<polyline points=""#).unwrap();
                    for p in poly {
                        let (x, y) = map(p);
                        write!(s, "{x:.3},{y:.3} ").unwrap();
                    }
                    write!(s, r#""/>"#).unwrap();
                }
                writeln!(s, "</g>").unwrap();
            }
            Object::Point(p) => {
                let (x, y) = map(*p);
                writeln!(
                    s,
                    r##"  <g id="{id}"><circle cx="{x:.4}" cy="{y:.4}" r="2.5" fill="#c22"/><text x="{:.4}" y="{:.4}" font-size="11" fill="#222">{id}</text></g>"##,
                    x + 4.0,
                    y - 4.0
                )
                .unwrap();
            }
        }
    }
    writeln!(s, "</svg>").unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::circle;

    #[test]
    fn renders_every_object_once() {
        let mut built = Built::new();
        built.point("A", pt(0.0, 0.0));
        built.point("B", pt(1.0, 0.0));
        built.circle("c", circle(pt(0.5, 0.5), 0.7));
        built.line("l", Line::new(1.0, -1.0, 0.2).unwrap());
        built.conic("k", Conic::from_circle(&circle(pt(0.0, 0.0), 1.0)));
        let svg = render(&built);
        assert!(svg.starts_with("<?xml"));
        for id in ["\"A\"", "\"B\"", "\"c\"", "\"l\"", "\"k\""] {
            let id = format!("id={id}");
            assert_eq!(svg.matches(&id).count(), 1, "object {id} not unique");
        }
        assert!(svg.contains("viewBox"));
    }
}
