//! Conic deformation statements: double-tangent conics in a circle and the
//! conic pairing point (S5.1 - S5.4).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::conic::{
    common_tangents_conics, conic_foci, conic_from_foci, conic_meet_conic, conic_meet_line,
    double_tangent_member, Conic, FocalBranch, TangentKind,
};
use crate::error::{Error, Result};
use crate::geom::{
    circle, circumcircle, meet_lines, pt, second_meet_circles, Circle, Line, Point,
};
use crate::quad::conic_miquel;
use crate::relation::Relation;
use crate::triangle::{isogonal_conjugate, Triangle};

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef { id: "S5.1", anchor: "Then angle CEO = pi/2", tier: 2, build: s5_1 },
        ScenarioDef { id: "S5.2", anchor: "Then X, Y, Z are collinear", tier: 2, build: s5_2 },
        ScenarioDef { id: "S5.3", anchor: "intersect at the same point", tier: 2, build: s5_3 },
        ScenarioDef { id: "S5.4", anchor: "lie on the same circle", tier: 2, build: s5_4 },
    ]
}

struct DoubleTangentPair {
    omega: Circle,
    k1: Conic,
    k2: Conic,
    touches1: (Point, Point),
    touches2: (Point, Point),
    ext: (Line, Line),
}

/// Two disjoint conics tangent to one circle at two points each, with their
/// two external common tangents.
fn double_tangent_pair(ctx: &mut BuildCtx) -> Result<DoubleTangentPair> {
    let omega = circle(ctx.point_in_disk(0.3), ctx.range(1.2, 1.8));
    let base = Conic::from_circle(&omega);
    let theta1 = ctx.angle();
    let theta2 = theta1 + ctx.range(2.0, 4.3);
    let make = |ctx: &mut BuildCtx, theta: f64| -> Result<(Conic, (Point, Point))> {
        let dir = pt(theta.cos(), theta.sin());
        let offset = ctx.range(0.35, 0.7) * omega.r;
        let chord = Line::new(dir.x, dir.y, -(dir.dot(omega.center) + offset))?;
        let hits = crate::geom::meet_line_circle(&chord, &omega);
        if hits.len() != 2 || hits[0].dist(hits[1]) < 0.3 * omega.r {
            return Err(Error::DegenerateInput);
        }
        let lambda = ctx.range(0.8, 2.5);
        let k = double_tangent_member(&base, &chord, lambda)?;
        if k.class() != crate::conic::ConicClass::Ellipse {
            return Err(Error::DegenerateInput);
        }
        Ok((k, (hits[0], hits[1])))
    };
    let (k1, touches1) = make(ctx, theta1)?;
    let (k2, touches2) = make(ctx, theta2)?;
    if !conic_meet_conic(&k1, &k2)?.is_empty() {
        return Err(Error::DegenerateInput);
    }
    let ext = common_tangents_conics(&k1, &k2, TangentKind::External)?;
    if ext.len() != 2 {
        return Err(Error::NoSolution);
    }
    Ok(DoubleTangentPair {
        omega,
        k1,
        k2,
        touches1,
        touches2,
        ext: (ext[0], ext[1]),
    })
}

/// The outer tangent crossing C sees the circle center at a right angle
/// from the second intersection of the two touch-chord circles.
fn s5_1(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = double_tangent_pair(ctx)?;
    let mut out = Built::new();
    out.circle("omega", cfg.omega);
    out.conic("K1", cfg.k1);
    out.conic("K2", cfg.k2);
    let (p1, q1) = cfg.touches1;
    let (p2, q2) = cfg.touches2;
    out.point("P1", p1);
    out.point("Q1", q1);
    out.point("P2", p2);
    out.point("Q2", q2);
    let c = ctx.probe_point(meet_lines(&cfg.ext.0, &cfg.ext.1)?);
    out.point("C", c);
    if !bounded(&[c], 60.0) || c.dist(cfg.omega.center) < 0.05 {
        return Err(Error::DegenerateInput);
    }
    let c1 = circumcircle(c, p1, q1)?;
    let c2 = circumcircle(c, p2, q2)?;
    out.circle("circ_CP1Q1", c1);
    out.circle("circ_CP2Q2", c2);
    let e = second_meet_circles(&c1, &c2, c)?;
    out.point("E", e);
    if e.dist(c) < 0.02 || e.dist(cfg.omega.center) < 0.02 {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "right_angle_at_e",
        Relation::Perpendicular(Line::through(e, c)?, Line::through(e, cfg.omega.center)?),
    );
    Ok(out)
}

/// Cross joins of the two focus pairs meet the tangent crossing on one
/// line.
fn s5_2(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = double_tangent_pair(ctx)?;
    let mut out = Built::new();
    out.conic("K1", cfg.k1);
    out.conic("K2", cfg.k2);
    let (f1, f2) = conic_foci(&cfg.k1)?;
    let (f3, f4) = conic_foci(&cfg.k2)?;
    out.point("F1", f1);
    out.point("F2", f2);
    out.point("F3", f3);
    out.point("F4", f4);
    let z = ctx.probe_point(meet_lines(&cfg.ext.0, &cfg.ext.1)?);
    out.point("Z", z);
    // label the second pair so the joins cross between the conics
    let crossing = |a: Point, b: Point, c: Point, d: Point| -> Option<Point> {
        let l1 = Line::through(a, d).ok()?;
        let l2 = Line::through(b, c).ok()?;
        let y = meet_lines(&l1, &l2).ok()?;
        let on_seg = |p: Point, q: Point, x: Point| (x - p).dot(q - p) > 0.0 && (x - q).dot(p - q) > 0.0;
        if on_seg(a, d, y) && on_seg(b, c, y) {
            Some(y)
        } else {
            None
        }
    };
    let y = crossing(f1, f2, f3, f4)
        .or_else(|| crossing(f1, f2, f4, f3))
        .ok_or(Error::DegenerateInput)?;
    out.point("Y", y);
    // the labels entering the circles follow the crossing choice
    let (f3c, f4c) = if crossing(f1, f2, f3, f4).is_some() {
        (f3, f4)
    } else {
        (f4, f3)
    };
    if !well_spread(&[y, z, f1, f2, f3c, f4c], 5e-3, 80.0) {
        return Err(Error::DegenerateInput);
    }
    let c1 = circumcircle(f1, y, f3c)?;
    let c2 = circumcircle(f2, y, f4c)?;
    let x = second_meet_circles(&c1, &c2, y)?;
    out.point("X", x);
    out.relation("xyz_collinear", Relation::Collinear(vec![x, y, z]));
    Ok(out)
}

/// Four separated conics: the four circles over pairing-point triples share
/// a point.
fn s5_3(ctx: &mut BuildCtx) -> Result<Built> {
    // four small ellipses on jittered square corners stay mutually disjoint
    let base = ctx.angle();
    let spread = ctx.range(1.6, 2.2);
    let mut conics = vec![];
    let mut out = Built::new();
    for k in 0..4 {
        let phi = base + k as f64 * std::f64::consts::FRAC_PI_2 + ctx.range(-0.2, 0.2);
        let center = pt(phi.cos(), phi.sin()) * spread + ctx.point_in_disk(0.15);
        let f1 = center + ctx.point_in_disk(0.3);
        let f2 = center + ctx.point_in_disk(0.3);
        let a = f1.dist(f2) / 2.0 + ctx.range(0.15, 0.4);
        let k_c = conic_from_foci(f1, f2, FocalBranch::Ellipse, a)?;
        out.conic(&format!("C_{}", ["A", "B", "C", "D"][k]), k_c);
        conics.push(k_c);
    }
    let m = |i: usize, j: usize| conic_miquel(&conics[i], &conics[j]);
    let m_ab = ctx.probe_point(m(0, 1)?);
    let m_ac = m(0, 2)?;
    let m_ad = m(0, 3)?;
    let m_bc = m(1, 2)?;
    let m_bd = m(1, 3)?;
    let m_cd = m(2, 3)?;
    for (n, x) in [
        ("M_AB", m_ab),
        ("M_AC", m_ac),
        ("M_AD", m_ad),
        ("M_BC", m_bc),
        ("M_BD", m_bd),
        ("M_CD", m_cd),
    ] {
        out.point(n, x);
    }
    if !well_spread(&[m_ab, m_ac, m_ad, m_bc, m_bd, m_cd], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    let w_d = out.circle("w_D", circumcircle(m_ab, m_ac, m_bc)?);
    let w_c = out.circle("w_C", circumcircle(m_ab, m_ad, m_bd)?);
    let w_b = out.circle("w_B", circumcircle(m_ac, m_ad, m_cd)?);
    let w_a = out.circle("w_A", circumcircle(m_bc, m_bd, m_cd)?);
    let p = common_point_by_third(&w_a, &w_b, &w_c)?;
    out.point("common", p);
    out.relation("common_on_w_c", Relation::PointOnCircle(p, w_c));
    out.relation("common_on_w_d", Relation::PointOnCircle(p, w_d));
    Ok(out)
}

/// Inscribed conic with the given focus pair: the semi major axis follows
/// from the reflection of one focus in a side.
fn inconic(t: &Triangle, p: Point, q: Point) -> Result<Conic> {
    let refl = t.side_a()?.reflect_point(p);
    let a = refl.dist(q) / 2.0;
    conic_from_foci(p, q, FocalBranch::Ellipse, a)
}

/// The pairing point of two inscribed conics with isogonal focus pairs lies
/// on the circumcircle.
fn s5_4(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let wp = (
        ctx.range(0.25, 0.75),
        ctx.range(0.25, 0.75),
        ctx.range(0.25, 0.75),
    );
    let wq = (
        ctx.range(0.25, 0.75),
        ctx.range(0.25, 0.75),
        ctx.range(0.25, 0.75),
    );
    let p = t.from_barycentric(wp);
    let q = t.from_barycentric(wq);
    let p_conj = ctx.probe_point(isogonal_conjugate(p, &t)?);
    let q_conj = isogonal_conjugate(q, &t)?;
    if p.dist(p_conj) < 0.04 || q.dist(q_conj) < 0.04 || p.dist(q) < 0.08 {
        return Err(Error::DegenerateInput);
    }
    let mut out = Built::new();
    out.point("P", p);
    out.point("P'", p_conj);
    out.point("Q", q);
    out.point("Q'", q_conj);
    let c_p = inconic(&t, p, p_conj)?;
    let c_q = inconic(&t, q, q_conj)?;
    out.conic("C_P", c_p);
    out.conic("C_Q", c_q);
    if !ctx.is_probe() {
        // tangency to the remaining sides pins the isogonal-focus property
        out.hypothesis(
            "inscribed_p",
            crate::conic::conic_tangency_residual(&c_p, &t.side_b()?)
                .max(crate::conic::conic_tangency_residual(&c_p, &t.side_c()?)),
        );
        out.hypothesis(
            "inscribed_q",
            crate::conic::conic_tangency_residual(&c_q, &t.side_b()?)
                .max(crate::conic::conic_tangency_residual(&c_q, &t.side_c()?)),
        );
    }
    let m = conic_miquel(&c_p, &c_q)?;
    out.point("M", m);
    if !well_spread(&[t.a, t.b, t.c, m], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "pairing_point_concyclic",
        Relation::Concyclic(vec![t.a, t.b, t.c, m]),
    );
    Ok(out)
}
