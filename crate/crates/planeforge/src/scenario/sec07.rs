//! Combination statements: Pappus with Ceva, tangency homothety centers,
//! conic chord constructions, radical lines of classical triangles, and the
//! tangent-reflection circles (S7.1 - S7.10).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::circles::{apollonius, circle_through_two_tangent, Constraint, TangencySign};
use crate::conic::{conic_meet_line, Conic};
use crate::error::{Error, Result};
use crate::geom::{
    circumcircle, external_homothety_center, internal_bisector, meet_lines, pt, radical_axis,
    Circle, Line, Point,
};
use crate::quad::{boxtimes, m_seg_seg, miquel_point, otimes, poncelet_point};
use crate::relation::Relation;
use crate::triangle::{
    incenter, morley_triangle, napoleon_triangle, tri, tritangent_circle, Triangle,
    TritangentKind,
};

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef { id: "S7.1", anchor: "is perspective to the both triangles", tier: 1, build: s7_1 },
        ScenarioDef { id: "S7.2", anchor: "perspective at the incenter", tier: 3, build: s7_2 },
        ScenarioDef { id: "S7.3", anchor: "the Poncelet points of quadrilaterals", tier: 2, build: s7_3 },
        ScenarioDef { id: "S7.4", anchor: "Omega_BCD = Omega_ABC", tier: 2, build: s7_4 },
        ScenarioDef { id: "S7.5", anchor: "P lies on l", tier: 1, build: s7_5 },
        ScenarioDef { id: "S7.6", anchor: "Lines W, BE, l_3 are concurrent", tier: 1, build: s7_6 },
        ScenarioDef { id: "S7.7", anchor: "form an equilateral triangle which is perspective", tier: 1, build: s7_7 },
        ScenarioDef { id: "S7.8", anchor: "are concurrent", tier: 1, build: s7_8 },
        ScenarioDef { id: "S7.9", anchor: "lie on the circle", tier: 1, build: s7_9 },
        ScenarioDef { id: "S7.10", anchor: "goes through the same point", tier: 3, build: s7_10 },
    ]
}

/// Pappus lines over two cevian subdivisions bound a triangle perspective
/// to both bases.
fn s7_1(ctx: &mut BuildCtx) -> Result<Built> {
    let t1 = random_triangle(ctx)?;
    let t2 = triangle_with_angles(ctx, 25.0, 130.0)?;
    let w1 = (ctx.range(0.2, 0.8), ctx.range(0.2, 0.8), ctx.range(0.2, 0.8));
    let w2 = (ctx.range(0.2, 0.8), ctx.range(0.2, 0.8), ctx.range(0.2, 0.8));
    let p = t1.from_barycentric(w1);
    let q = t2.from_barycentric(w2);
    let cev1 = crate::triangle::cevian_triangle(p, &t1)?;
    let cev2 = crate::triangle::cevian_triangle(q, &t2)?;
    let mut out = Built::new();
    out.point("P", p);
    out.point("Q", q);
    let c1s = ctx.probe_point(cev1.c);
    let (a1s, b1s) = (cev1.a, cev1.b);
    let (a2s, b2s, c2s) = (cev2.a, cev2.b, cev2.c);
    for (n, x) in [
        ("A1*", a1s), ("B1*", b1s), ("C1*", c1s),
        ("A2*", a2s), ("B2*", b2s), ("C2*", c2s),
    ] {
        out.point(n, x);
    }
    // Pappus line over collinear triples; the orientation pairing the first
    // vertex of one triple with the last of the other makes the three lines
    // meet at one point (and only for cevian feet)
    let pappus = |p1: [Point; 3], p2: [Point; 3], out: &mut Built, tag: &str| -> Result<Line> {
        let x1 = meet_lines(&Line::through(p1[0], p2[1])?, &Line::through(p2[0], p1[1])?)?;
        let x2 = meet_lines(&Line::through(p1[0], p2[2])?, &Line::through(p2[0], p1[2])?)?;
        let x3 = meet_lines(&Line::through(p1[1], p2[2])?, &Line::through(p2[1], p1[2])?)?;
        if !well_spread(&[x1, x2, x3], 0.02, 80.0) {
            return Err(Error::DegenerateInput);
        }
        let l = Line::through(x1, x2)?;
        // hypothesis rows from probe builds are never inspected
        out.hypothesis(
            &format!("pappus_collinear_{tag}"),
            l.eval(x3).abs() / x1.dist(x2).max(1.0),
        );
        Ok(l)
    };
    let l_c = pappus([t1.a, c1s, t1.b], [t2.b, c2s, t2.a], &mut out, "c")?;
    let l_a = pappus([t1.b, a1s, t1.c], [t2.c, a2s, t2.b], &mut out, "a")?;
    let l_b = pappus([t1.c, b1s, t1.a], [t2.a, b2s, t2.c], &mut out, "b")?;
    out.line("l_A", l_a);
    out.line("l_B", l_b);
    out.line("l_C", l_c);
    out.relation(
        "pappus_lines_concurrent",
        Relation::Concurrent(vec![l_a, l_b, l_c]),
    );
    // the common point doubles as the perspector to both base triangles
    let v = line_triangle(&[l_a, l_b, l_c])?;
    out.relation(
        "perspective_to_first",
        Relation::Perspective([v.a, v.b, v.c], [t1.a, t1.b, t1.c]),
    );
    out.relation(
        "perspective_to_second",
        Relation::Perspective([v.a, v.b, v.c], [t2.a, t2.b, t2.c]),
    );
    Ok(out)
}

/// Side-tangent circles against chord-tangent circles: the two homothety
/// triangles are perspective at the incenter.
fn s7_2(ctx: &mut BuildCtx) -> Result<Built> {
    let t = triangle_with_angles(ctx, 35.0, 75.0)?;
    let circ = circumcircle(t.a, t.b, t.c)?;
    let (incircle, _) = tritangent_circle(TritangentKind::Incircle, &t)?;
    let mut out = Built::new();
    out.circle("circ", circ);
    out.circle("incircle", incircle);
    // circle tangent to the two side lines at a vertex and externally
    // tangent to the circumcircle, on the far side of the opposite side
    let omega_at = |v: Point, p: Point, q: Point| -> Result<Circle> {
        let sols = apollonius(&[
            Constraint::TangentLine(Line::through(v, p)?),
            Constraint::TangentLine(Line::through(v, q)?),
            Constraint::TangentCircle(circ, TangencySign::External),
        ])?;
        let bis = internal_bisector(v, p, q)?;
        let opposite = Line::through(p, q)?;
        let side_of_v = opposite.eval(v);
        sols.into_iter()
            .filter(|c| bis.eval(c.center).abs() < 1e-6 * (1.0 + c.center.norm()))
            .filter(|c| opposite.eval(c.center) * side_of_v < 0.0)
            .max_by(|x, y| x.r.total_cmp(&y.r))
            .ok_or(Error::NoSolution)
    };
    let w_a = out.circle("w_A", omega_at(t.a, t.b, t.c)?);
    let w_b = out.circle("w_B", omega_at(t.b, t.c, t.a)?);
    let w_c = out.circle("w_C", omega_at(t.c, t.a, t.b)?);
    // circle through the endpoints of a side, internally tangent to the
    // incircle (the incircle inside)
    let big_at = |p: Point, q: Point| -> Result<Circle> {
        let sols = circle_through_two_tangent(p, q, &incircle, TangencySign::Internal)?;
        sols.into_iter()
            .filter(|c| c.center.dist(incircle.center) <= c.r - incircle.r + 1e-7)
            .min_by(|x, y| x.r.total_cmp(&y.r))
            .ok_or(Error::NoSolution)
    };
    let om_a = out.circle("Om_A", big_at(t.b, t.c)?);
    let om_b = out.circle("Om_B", big_at(t.c, t.a)?);
    let om_c = out.circle("Om_C", big_at(t.a, t.b)?);
    let h_a = ctx.probe_point(external_homothety_center(&w_b, &w_c)?);
    let h_b = external_homothety_center(&w_c, &w_a)?;
    let h_c = external_homothety_center(&w_a, &w_b)?;
    let hh_a = external_homothety_center(&om_b, &om_c)?;
    let hh_b = external_homothety_center(&om_c, &om_a)?;
    let hh_c = external_homothety_center(&om_a, &om_b)?;
    for (n, x) in [
        ("h_A", h_a), ("h_B", h_b), ("h_C", h_c),
        ("H_A", hh_a), ("H_B", hh_b), ("H_C", hh_c),
    ] {
        out.point(n, x);
    }
    if h_a.dist(hh_a) < 0.02 || h_b.dist(hh_b) < 0.02 || h_c.dist(hh_c) < 0.02 {
        return Err(Error::DegenerateInput);
    }
    let l_a = Line::through(h_a, hh_a)?;
    let l_b = Line::through(h_b, hh_b)?;
    let l_c = Line::through(h_c, hh_c)?;
    let v = line_triangle(&[l_a, l_b, l_c])?;
    if !well_spread(&v.vertices(), 5e-3, 120.0) {
        return Err(Error::DegenerateInput);
    }
    let m_a = external_homothety_center(&w_a, &om_a)?;
    let m_b = external_homothety_center(&w_b, &om_b)?;
    let m_c = external_homothety_center(&w_c, &om_c)?;
    out.point("HH_A", m_a);
    out.point("HH_B", m_b);
    out.point("HH_C", m_c);
    out.relation(
        "homothety_triangles_perspective",
        Relation::Perspective([v.a, v.b, v.c], [m_a, m_b, m_c]),
    );
    let persp = perspector(&v, &tri(m_a, m_b, m_c))?;
    out.point("perspector", persp);
    out.relation(
        "perspector_is_incenter",
        Relation::EqualPoint(persp, incenter(&t)),
    );
    Ok(out)
}

struct ConicChords {
    x: Point,
    pairs: [(Point, Point); 4],
}

/// A conic, a point, and four chords through it.
fn conic_chords(ctx: &mut BuildCtx) -> Result<(Conic, ConicChords)> {
    let f1 = ctx.point_in_disk(0.8);
    let f2 = ctx.point_in_disk(0.8);
    let a = f1.dist(f2) / 2.0 + ctx.range(0.4, 1.1);
    let conic = crate::conic::conic_from_foci(f1, f2, crate::conic::FocalBranch::Ellipse, a)?;
    let center = crate::geom::midpoint(f1, f2);
    let x = center + ctx.point_in_disk(0.35 * a);
    let mut pairs = vec![];
    let base = ctx.range(0.0, std::f64::consts::PI);
    for k in 0..4 {
        let theta = base + k as f64 * std::f64::consts::FRAC_PI_4 + ctx.range(-0.25, 0.25);
        let l = Line::through_dir(x, pt(theta.cos(), theta.sin()))?;
        let hits = conic_meet_line(&conic, &l);
        if hits.len() != 2 || hits[0].dist(hits[1]) < 0.2 {
            return Err(Error::DegenerateInput);
        }
        pairs.push((hits[0], hits[1]));
    }
    Ok((
        conic,
        ConicChords {
            x,
            pairs: [pairs[0], pairs[1], pairs[2], pairs[3]],
        },
    ))
}

/// Poncelet points over conic chords: four circles, one common point.
fn s7_3(ctx: &mut BuildCtx) -> Result<Built> {
    let (conic, ch) = conic_chords(ctx)?;
    let mut out = Built::new();
    out.conic("conic", conic);
    out.point("X", ch.x);
    let names = ["A", "B", "C", "D"];
    for (i, (p, q)) in ch.pairs.iter().enumerate() {
        out.point(&format!("{}1", names[i]), *p);
        out.point(&format!("{}2", names[i]), *q);
    }
    let pon = |i: usize, j: usize| -> Result<Point> {
        poncelet_point(ch.pairs[i].0, ch.pairs[i].1, ch.pairs[j].0, ch.pairs[j].1)
    };
    let p_ab = ctx.probe_point(pon(0, 1)?);
    let p_ac = pon(0, 2)?;
    let p_ad = pon(0, 3)?;
    let p_bc = pon(1, 2)?;
    let p_bd = pon(1, 3)?;
    let p_cd = pon(2, 3)?;
    if !well_spread(&[p_ab, p_ac, p_ad, p_bc, p_bd, p_cd], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    let om_abc = out.circle("Om_ABC", circumcircle(p_ab, p_ac, p_bc)?);
    let om_bcd = out.circle("Om_BCD", circumcircle(p_bc, p_bd, p_cd)?);
    let om_acd = out.circle("Om_ACD", circumcircle(p_ac, p_ad, p_cd)?);
    let om_abd = out.circle("Om_ABD", circumcircle(p_ab, p_ad, p_bd)?);
    let p = common_point_by_third(&om_bcd, &om_acd, &om_abd)?;
    out.point("common", p);
    out.relation("common_on_abd", Relation::PointOnCircle(p, om_abd));
    out.relation("common_on_abc", Relation::PointOnCircle(p, om_abc));
    Ok(out)
}

/// Segment pairings over conic chords: the two triple circles coincide.
fn s7_4(ctx: &mut BuildCtx) -> Result<Built> {
    let (conic, ch) = conic_chords(ctx)?;
    let mut out = Built::new();
    out.conic("conic", conic);
    out.point("X", ch.x);
    let m = |i: usize, j: usize| -> Result<Point> {
        m_seg_seg(
            ch.pairs[i].0,
            ch.pairs[i].1,
            ch.pairs[j].0,
            ch.pairs[j].1,
        )
    };
    let m_ab = m(0, 1)?;
    let m_ac = m(0, 2)?;
    let m_bc = ctx.probe_point(m(1, 2)?);
    let m_bd = m(1, 3)?;
    let m_cd = m(2, 3)?;
    for (n, x) in [
        ("M_AB", m_ab),
        ("M_AC", m_ac),
        ("M_BC", m_bc),
        ("M_BD", m_bd),
        ("M_CD", m_cd),
    ] {
        out.point(n, x);
    }
    if !well_spread(&[m_ab, m_ac, m_bc], 5e-3, 40.0)
        || !well_spread(&[m_bc, m_bd, m_cd], 5e-3, 40.0)
    {
        return Err(Error::DegenerateInput);
    }
    let om_abc = out.circle("Om_ABC", circumcircle(m_ab, m_ac, m_bc)?);
    let om_bcd = out.circle("Om_BCD", circumcircle(m_bc, m_bd, m_cd)?);
    out.relation("same_circle", Relation::SameCircle(om_abc, om_bcd));
    Ok(out)
}

/// Radical lines of point-decorated quadrilateral circles: when they
/// concur, the concurrency point sits on the Gauss line.
fn s7_5(ctx: &mut BuildCtx) -> Result<Built> {
    let ls = four_general_lines(ctx)?;
    let x = |i: usize, j: usize| meet_lines(&ls[i], &ls[j]);
    let x12 = x(0, 1)?;
    let x13 = x(0, 2)?;
    let x14 = x(0, 3)?;
    let x23 = x(1, 2)?;
    let x24 = x(1, 3)?;
    let x34 = x(2, 3)?;
    let u1 = ctx.range(0.25, 0.8);
    let p1 = ctx.probe_point(x12 + (x13 - x12) * u1);
    let p2 = x12 + (x24 - x12) * ctx.range(0.25, 0.8);
    let p3 = x13 + (x34 - x13) * ctx.range(0.25, 0.8);
    let base4 = x14;
    let dir4 = (x24 - x14).unit();
    let reach = x14.dist(x24).max(1.0) * 1.4;
    let radicals = |p4: Point| -> Result<(Line, Line, Line)> {
        let c1 = circumcircle(p1, p2, x12)?;
        let c2 = circumcircle(p3, p4, x34)?;
        let r1 = radical_axis(&c1, &c2)?;
        let c3 = circumcircle(p1, p3, x13)?;
        let c4 = circumcircle(p2, p4, x24)?;
        let r2 = radical_axis(&c3, &c4)?;
        let c5 = circumcircle(p1, p4, x14)?;
        let c6 = circumcircle(p2, p3, x23)?;
        let r3 = radical_axis(&c5, &c6)?;
        Ok((r1, r2, r3))
    };
    let tau = ctx.close_root(
        |s| {
            let p4 = base4 + dir4 * s;
            match radicals(p4) {
                Ok((r1, r2, r3)) => match meet_lines(&r1, &r2) {
                    Ok(p) => r3.eval(p),
                    Err(_) => f64::NAN,
                },
                Err(_) => f64::NAN,
            }
        },
        -reach,
        reach,
        64,
    )?;
    let p4 = base4 + dir4 * tau;
    let (r1, r2, r3) = radicals(p4)?;
    let p = meet_lines(&r1, &r2)?;
    let mut out = Built::new();
    for (n, q) in [("P1", p1), ("P2", p2), ("P3", p3), ("P4", p4), ("P", p)] {
        out.point(n, q);
    }
    out.line("r1", r1);
    out.line("r2", r2);
    out.line("r3", r3);
    if !ctx.is_probe() {
        out.hypothesis("radical_lines_concur", r3.eval(p).abs());
    }
    let g = out.line("gauss", crate::quad::gauss_line(&ls)?);
    out.relation("concurrency_on_gauss_line", Relation::PointOnLine(p, g));
    Ok(out)
}

/// Hexagon radical lines against the perpendicular from the center to the
/// Pascal line: two concurrency claims.
fn s7_6(ctx: &mut BuildCtx) -> Result<Built> {
    let circ = crate::geom::circle(ctx.point_in_disk(0.4), ctx.range(0.9, 1.7));
    let mut angles: Vec<f64> = (0..6).map(|_| ctx.angle()).collect();
    angles.sort_by(f64::total_cmp);
    for i in 0..6 {
        let next = if i == 5 {
            angles[0] + std::f64::consts::TAU
        } else {
            angles[i + 1]
        };
        if next - angles[i] < 0.3 {
            return Err(Error::DegenerateInput);
        }
    }
    let a = circ.point_at(angles[0]);
    let b = circ.point_at(angles[1]);
    let c = circ.point_at(angles[2]);
    let d = circ.point_at(angles[3]);
    let e = circ.point_at(angles[4]);
    let f = circ.point_at(angles[5]);
    let mut out = Built::new();
    out.circle("circ", circ);
    for (n, q) in [("A", a), ("B", b), ("C", c), ("D", d), ("E", e), ("F", f)] {
        out.point(n, q);
    }
    let x = ctx.probe_point(meet_lines(&Line::through(a, e)?, &Line::through(b, f)?)?);
    let y = meet_lines(&Line::through(d, b)?, &Line::through(c, e)?)?;
    out.point("X", x);
    out.point("Y", y);
    if x.dist(y) < 0.05 || !bounded(&[x, y], 40.0) {
        return Err(Error::DegenerateInput);
    }
    let l1 = radical_axis(&circumcircle(e, f, x)?, &circumcircle(b, c, y)?)?;
    let l2 = radical_axis(&circumcircle(d, y, e)?, &circumcircle(b, x, a)?)?;
    let l3 = radical_axis(&circumcircle(a, x, f)?, &circumcircle(c, d, y)?)?;
    out.line("l1", l1);
    out.line("l2", l2);
    out.line("l3", l3);
    let pascal = Line::through(x, y)?;
    out.line("pascal", pascal);
    let w = crate::geom::perpendicular_through(circ.center, &pascal);
    out.line("w", w);
    out.relation(
        "w_be_l3_concurrent",
        Relation::Concurrent(vec![w, Line::through(b, e)?, l3]),
    );
    out.relation(
        "w_l1_l2_concurrent",
        Relation::Concurrent(vec![w, l1, l2]),
    );
    Ok(out)
}

fn split_radical_lines(
    t: &Triangle,
    inner: &Triangle,
    probe_a: Point,
) -> Result<(Line, Line, Line)> {
    let (a2, b2, c2) = (probe_a, inner.b, inner.c);
    let l_a = radical_axis(
        &circumcircle(t.a, b2, c2)?,
        &circumcircle(a2, t.b, t.c)?,
    )?;
    let l_b = radical_axis(
        &circumcircle(t.b, a2, c2)?,
        &circumcircle(b2, t.c, t.a)?,
    )?;
    let l_c = radical_axis(
        &circumcircle(t.c, a2, b2)?,
        &circumcircle(c2, t.a, t.b)?,
    )?;
    Ok((l_a, l_b, l_c))
}

/// Morley triangle radical lines: an equilateral triangle perspective to
/// the base.
fn s7_7(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let m = morley_triangle(&t)?;
    let mut out = Built::new();
    let a2 = ctx.probe_point(m.a);
    out.point("A'", a2);
    out.point("B'", m.b);
    out.point("C'", m.c);
    let (l_a, l_b, l_c) = split_radical_lines(&t, &m, a2)?;
    out.line("l_A", l_a);
    out.line("l_B", l_b);
    out.line("l_C", l_c);
    let v = line_triangle(&[l_a, l_b, l_c])?;
    if !well_spread(&v.vertices(), 5e-3, 80.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "equilateral_angle_at_a",
        Relation::AngleEq {
            vertex: v.a,
            p: v.b,
            q: v.c,
            target: std::f64::consts::FRAC_PI_3,
        },
    );
    out.relation(
        "equilateral_angle_at_b",
        Relation::AngleEq {
            vertex: v.b,
            p: v.c,
            q: v.a,
            target: std::f64::consts::FRAC_PI_3,
        },
    );
    out.relation(
        "perspective_to_base",
        Relation::Perspective([v.a, v.b, v.c], [t.a, t.b, t.c]),
    );
    Ok(out)
}

/// Napoleon triangle radical lines concur.
fn s7_8(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let n = napoleon_triangle(&t)?;
    let mut out = Built::new();
    let a2 = ctx.probe_point(n.a);
    out.point("A'", a2);
    out.point("B'", n.b);
    out.point("C'", n.c);
    let (l_a, l_b, l_c) = split_radical_lines(&t, &n, a2)?;
    out.line("l_A", l_a);
    out.line("l_B", l_b);
    out.line("l_C", l_c);
    out.relation(
        "radical_lines_concurrent",
        Relation::Concurrent(vec![l_a, l_b, l_c]),
    );
    Ok(out)
}

/// The four tangency points of the reflected-tangent circles over the
/// triple triangles are concyclic.
fn s7_9(ctx: &mut BuildCtx) -> Result<Built> {
    let ls = four_general_lines(ctx)?;
    let m = miquel_point(&ls)?;
    let mut out = Built::new();
    out.point("M", m);
    let x = |i: usize, j: usize| meet_lines(&ls[i], &ls[j]);
    let triples = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
    let mut points = vec![];
    for (k, tr) in triples.iter().enumerate() {
        let v1 = x(tr[0], tr[1])?;
        let v2 = x(tr[0], tr[2])?;
        let v3 = x(tr[1], tr[2])?;
        let p = otimes(&tri(v1, v2, v3), m)?;
        let p = if k == 0 { ctx.probe_point(p) } else { p };
        out.point(&format!("T{}", k + 1), p);
        points.push(p);
    }
    if !well_spread(&points, 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation("tangency_points_concyclic", Relation::Concyclic(points));
    Ok(out)
}

/// Three tangent-reflection circles over five parabola tangents share a
/// point.
fn s7_10(ctx: &mut BuildCtx) -> Result<Built> {
    let f = ctx.range(0.35, 0.9);
    let theta = ctx.angle();
    let center = ctx.point_in_disk(0.5);
    let param_pt = |t: f64| -> Point { center + pt(t, t * t / (4.0 * f)).rotated(theta) };
    let param_dir = |t: f64| -> Point { pt(1.0, t / (2.0 * f)).rotated(theta).unit() };
    let mut ts: Vec<f64> = (0..5).map(|_| ctx.range(-2.2, 2.2)).collect();
    ts.sort_by(f64::total_cmp);
    for i in 0..4 {
        if ts[i + 1] - ts[i] < 0.35 {
            return Err(Error::DegenerateInput);
        }
    }
    let mut tangents = vec![];
    for (i, &tp) in ts.iter().enumerate() {
        let p = if i == 4 {
            ctx.probe_point(param_pt(tp))
        } else {
            param_pt(tp)
        };
        tangents.push(Line::through_dir(p, param_dir(tp))?);
    }
    let mut out = Built::new();
    for (i, l) in tangents.iter().enumerate() {
        out.line(&format!("t{}", i + 1), *l);
    }
    let c1 = out.circle("box_1234", boxtimes(&[tangents[0], tangents[1], tangents[2], tangents[3]])?);
    let c2 = out.circle("box_1235", boxtimes(&[tangents[0], tangents[1], tangents[2], tangents[4]])?);
    let c3 = out.circle("box_1254", boxtimes(&[tangents[0], tangents[1], tangents[4], tangents[3]])?);
    let p = common_point_by_third(&c1, &c2, &c3)?;
    out.point("common", p);
    out.relation("common_on_third", Relation::PointOnCircle(p, c3));
    Ok(out)
}
