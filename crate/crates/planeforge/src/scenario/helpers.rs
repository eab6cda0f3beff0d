//! Shared generator and selection utilities for the scenario builders.
//!
//! Branch selection is always by incidence with a third object, never by
//! array index, so rebuilds with perturbed inputs stay on the same branch.

use super::BuildCtx;
use crate::error::{Error, Result};
use crate::geom::{midpoint, pt, Circle, Line, Point};
use crate::triangle::{tri, Triangle};

/// Random triangle with every angle in the given degree range, vertices in
/// a disk of radius 1.5.
pub fn triangle_with_angles(ctx: &mut BuildCtx, lo_deg: f64, hi_deg: f64) -> Result<Triangle> {
    let lo = lo_deg.to_radians();
    let hi = hi_deg.to_radians();
    for _ in 0..200 {
        let t = tri(
            ctx.point_in_disk(1.5),
            ctx.point_in_disk(1.5),
            ctx.point_in_disk(1.5),
        );
        if t.signed_area().abs() < 0.05 {
            continue;
        }
        let [a, b, c] = t.vertices();
        let angles = [
            crate::geom::angle_at(a, b, c),
            crate::geom::angle_at(b, c, a),
            crate::geom::angle_at(c, a, b),
        ];
        if angles.iter().all(|&x| x > lo && x < hi) {
            return Ok(t);
        }
    }
    Err(Error::DegenerateTriangle)
}

/// Standard scenario triangle: minimum angle 15 degrees plus margin.
pub fn random_triangle(ctx: &mut BuildCtx) -> Result<Triangle> {
    triangle_with_angles(ctx, 20.0, 140.0)
}

/// Acute triangle with margins, for orthocenter-heavy configurations.
pub fn acute_triangle(ctx: &mut BuildCtx) -> Result<Triangle> {
    triangle_with_angles(ctx, 30.0, 80.0)
}

/// Four lines in general position inside the unit-ish disk.
pub fn four_general_lines(ctx: &mut BuildCtx) -> Result<[Line; 4]> {
    for _ in 0..100 {
        let mk = |ctx: &mut BuildCtx| -> Result<Line> {
            Line::through(ctx.point_in_disk(1.5), ctx.point_in_disk(1.5))
        };
        let (Ok(a), Ok(b), Ok(c), Ok(d)) = (mk(ctx), mk(ctx), mk(ctx), mk(ctx)) else {
            continue;
        };
        let ls = [a, b, c, d];
        if lines_in_general_position(&ls) {
            return Ok(ls);
        }
    }
    Err(Error::DegenerateQuadrilateral)
}

fn lines_in_general_position(ls: &[Line; 4]) -> bool {
    let mut xs = vec![];
    for i in 0..4 {
        for j in i + 1..4 {
            match crate::geom::meet_lines(&ls[i], &ls[j]) {
                Ok(p) => {
                    if p.norm() > 40.0 {
                        return false;
                    }
                    xs.push(p)
                }
                Err(_) => return false,
            }
        }
    }
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i].dist(xs[j]) < 0.05 {
                return false;
            }
        }
    }
    true
}

/// Convex cyclic quadrilateral: four points in circular order on a random
/// circle, with minimum angular gaps.
pub fn cyclic_quad(ctx: &mut BuildCtx, circ: &Circle) -> Result<[Point; 4]> {
    for _ in 0..100 {
        let mut angles: Vec<f64> = (0..4).map(|_| ctx.angle()).collect();
        angles.sort_by(f64::total_cmp);
        let mut ok = true;
        for i in 0..4 {
            let next = if i == 3 {
                angles[0] + std::f64::consts::TAU
            } else {
                angles[i + 1]
            };
            if next - angles[i] < 0.45 {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        return Ok([
            circ.point_at(angles[0]),
            circ.point_at(angles[1]),
            circ.point_at(angles[2]),
            circ.point_at(angles[3]),
        ]);
    }
    Err(Error::DegenerateInput)
}

/// The intersection of `c1` and `c2` best incident with `c3`.
pub fn common_point_by_third(c1: &Circle, c2: &Circle, c3: &Circle) -> Result<Point> {
    let candidates = crate::geom::meet_circles(c1, c2)?;
    candidates
        .into_iter()
        .min_by(|p, q| {
            let dp = (p.dist(c3.center) - c3.r).abs();
            let dq = (q.dist(c3.center) - c3.r).abs();
            dp.total_cmp(&dq)
        })
        .ok_or(Error::NoSolution)
}

/// Perspector candidate of two triangles: meet of the first two vertex
/// joins (the relation itself re-checks the third).
pub fn perspector(t1: &Triangle, t2: &Triangle) -> Result<Point> {
    let l1 = Line::through(t1.a, t2.a)?;
    let l2 = Line::through(t1.b, t2.b)?;
    crate::geom::meet_lines(&l1, &l2)
}

/// Vertices of the triangle formed by three lines, labeled so vertex i is
/// opposite line i.
pub fn line_triangle(ls: &[Line; 3]) -> Result<Triangle> {
    Ok(tri(
        crate::geom::meet_lines(&ls[1], &ls[2])?,
        crate::geom::meet_lines(&ls[0], &ls[2])?,
        crate::geom::meet_lines(&ls[0], &ls[1])?,
    ))
}

/// Midpoint triangle (vertex i is the midpoint of the side opposite vertex
/// i of the source).
pub fn midpoint_triangle(t: &Triangle) -> Triangle {
    tri(
        midpoint(t.b, t.c),
        midpoint(t.c, t.a),
        midpoint(t.a, t.b),
    )
}

/// Reject configurations whose named points have collapsed or exploded.
pub fn well_spread(points: &[Point], min_sep: f64, max_norm: f64) -> bool {
    for (i, p) in points.iter().enumerate() {
        if !p.is_finite() || p.norm() > max_norm {
            return false;
        }
        for q in points.iter().skip(i + 1) {
            if p.dist(*q) < min_sep {
                return false;
            }
        }
    }
    true
}

/// Guard for points that must stay finite and bounded but may coincide.
pub fn bounded(points: &[Point], max_norm: f64) -> bool {
    points.iter().all(|p| p.is_finite() && p.norm() <= max_norm)
}

pub fn segment_point(a: Point, b: Point, t: f64) -> Point {
    a + (b - a) * t
}

pub fn pt_xy(x: f64, y: f64) -> Point {
    pt(x, y)
}
