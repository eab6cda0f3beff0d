//! Triangle-center transport statements (S3.1 - S3.3).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::error::{Error, Result};
use crate::geom::{
    circumcircle, meet_lines, midpoint, perpendicular_through, second_meet_line_circle, Line,
    Point,
};
use crate::relation::Relation;
use crate::triangle::{incenter, tritangent_circle, TritangentKind};

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef {
            id: "S3.1",
            anchor: "Then AX \u{22a5} CN",
            tier: 1,
            build: s3_1,
        },
        ScenarioDef {
            id: "S3.2",
            anchor: "where G is the Gergonne point",
            tier: 1,
            build: s3_2,
        },
        ScenarioDef {
            id: "S3.3",
            anchor: "coincide with the circumcenter",
            tier: 1,
            build: s3_3,
        },
    ]
}

/// Excircle touch points, their perpendicular meet N, second circle meets:
/// AX is perpendicular to CN.
fn s3_1(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let (_, ta) = tritangent_circle(TritangentKind::ExcircleA, &t)?;
    let (_, tb) = tritangent_circle(TritangentKind::ExcircleB, &t)?;
    let (_, tc) = tritangent_circle(TritangentKind::ExcircleC, &t)?;
    let a1 = out.point("A1", ta[0]);
    let b1 = out.point("B1", tb[1]);
    let c1 = out.point("C1", tc[2]);
    let b2 = out.point("B2", midpoint(t.c, t.a));
    let c2 = out.point("C2", midpoint(t.a, t.b));
    // perpendiculars to AB from C1, to BC from A1, to CA from B1 concur
    let p_ab = perpendicular_through(c1, &t.side_c()?);
    let p_bc = perpendicular_through(a1, &t.side_a()?);
    let p_ca = perpendicular_through(b1, &t.side_b()?);
    let n0 = meet_lines(&p_ab, &p_bc)?;
    let scale = t.a.dist(t.b).max(t.b.dist(t.c));
    out.hypothesis("perpendiculars_concur", p_ca.eval(n0).abs() / scale);
    let n = ctx.probe_point(n0);
    out.point("N", n);
    let circ = circumcircle(a1, b1, c1)?;
    out.circle("circ_touch", circ);
    let c3 = second_meet_line_circle(&t.side_c()?, &circ, c1)?;
    let a3 = second_meet_line_circle(&t.side_a()?, &circ, a1)?;
    out.point("C3", c3);
    out.point("A3", a3);
    let x = meet_lines(&Line::through(a3, c3)?, &Line::through(b2, c2)?)?;
    out.point("X", x);
    if !well_spread(&[x, t.a], 0.02, 40.0) || !well_spread(&[n, t.c], 0.02, 40.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "ax_perp_cn",
        Relation::Perpendicular(Line::through(t.a, x)?, Line::through(t.c, n)?),
    );
    Ok(out)
}

/// Reflections of the vertices in a touch cevian: the cross meets are
/// concyclic with the incenter and the Gergonne point.
fn s3_2(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let (_, touch) = tritangent_circle(TritangentKind::Incircle, &t)?;
    let a_t = ctx.probe_point(touch[0]);
    let b_t = touch[1];
    let c_t = touch[2];
    out.point("A'", a_t);
    out.point("B'", b_t);
    out.point("C'", c_t);
    let star = |v: Point, tp: Point, o1: Point, o2: Point| -> Result<Point> {
        let axis = Line::through(v, tp)?;
        let r1 = axis.reflect_point(o1);
        let r2 = axis.reflect_point(o2);
        meet_lines(&Line::through(o2, r1)?, &Line::through(o1, r2)?)
    };
    let a_star = out.point("A*", star(t.a, a_t, t.b, t.c)?);
    let b_star = out.point("B*", star(t.b, b_t, t.c, t.a)?);
    let c_star = out.point("C*", star(t.c, c_t, t.a, t.b)?);
    let i = out.point("I", incenter(&t));
    let g = out.point("G", crate::triangle::gergonne_point(&t)?);
    if !well_spread(&[a_star, b_star, c_star, i, g], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "five_concyclic",
        Relation::Concyclic(vec![a_star, b_star, c_star, i, g]),
    );
    Ok(out)
}

/// Touch-point reflections in the other touch cevians: the incenter is the
/// circumcenter of the meet triangle.
fn s3_3(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let (_, touch) = tritangent_circle(TritangentKind::Incircle, &t)?;
    let a_t = ctx.probe_point(touch[0]);
    let b_t = touch[1];
    let c_t = touch[2];
    out.point("A'", a_t);
    out.point("B'", b_t);
    out.point("C'", c_t);
    let cev_a = Line::through(t.a, a_t)?;
    let cev_b = Line::through(t.b, b_t)?;
    let cev_c = Line::through(t.c, c_t)?;
    let star = |tp: Point, l1: &Line, l2: &Line, via1: Point, via2: Point| -> Result<Point> {
        let r1 = l1.reflect_point(tp);
        let r2 = l2.reflect_point(tp);
        meet_lines(&Line::through(r1, via1)?, &Line::through(r2, via2)?)
    };
    let a_star = out.point("A*", star(a_t, &cev_b, &cev_c, c_t, b_t)?);
    let b_star = out.point("B*", star(b_t, &cev_c, &cev_a, a_t, c_t)?);
    let c_star = out.point("C*", star(c_t, &cev_a, &cev_b, b_t, a_t)?);
    if !well_spread(&[a_star, b_star, c_star], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    let o = circumcircle(a_star, b_star, c_star)?.center;
    out.point("O*", o);
    let i = out.point("I", incenter(&t));
    out.relation("incenter_is_circumcenter", Relation::EqualPoint(i, o));
    Ok(out)
}
