//! Incircles and conjugations in orthocenter configurations (S6.1 - S6.12).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::circles::{
    apollonius, common_tangent_lines, CommonTangentKind, Constraint, TangencySign,
};
use crate::error::{Error, Result};
use crate::geom::{
    arc_midpoint_minor, circle, circumcircle, meet_line_circle, meet_lines, midpoint,
    perpendicular_through, radical_axis, Circle, Line, Point,
};
use crate::relation::Relation;
use crate::triangle::{
    altitude_foot, excenter, incenter_of, isogonal_conjugate, ninepoint_circle, orthocenter,
    orthocenter_of, pedal_circle, tri, tritangent_circle, Triangle, TritangentKind,
};

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef { id: "S6.1", anchor: "I_1I_4, I_2I_3, CC' are concurrent", tier: 1, build: s6_1 },
        ScenarioDef { id: "S6.2", anchor: "Then H_C, C_1, C_2 are collinear", tier: 1, build: s6_2 },
        ScenarioDef { id: "S6.3", anchor: "is perspective to ABC", tier: 1, build: s6_3 },
        ScenarioDef { id: "S6.4", anchor: "I is the orthocenter", tier: 1, build: s6_4 },
        ScenarioDef { id: "S6.5", anchor: "meet at the same point", tier: 3, build: s6_5 },
        ScenarioDef { id: "S6.6", anchor: "lie on the same conic", tier: 1, build: s6_6 },
        ScenarioDef { id: "S6.7", anchor: "lies on the radical line", tier: 1, build: s6_7 },
        ScenarioDef { id: "S6.8", anchor: "I_1I_2, I_3I_4 and HW are concurrent", tier: 1, build: s6_8 },
        ScenarioDef { id: "S6.9", anchor: "H lies on the radical line", tier: 3, build: s6_9 },
        ScenarioDef { id: "S6.10", anchor: "externally touches to", tier: 3, build: s6_10 },
        ScenarioDef { id: "S6.11", anchor: "are concurrent", tier: 1, build: s6_11 },
        ScenarioDef { id: "S6.12", anchor: "H is the orthocenter of the triangle", tier: 1, build: s6_12 },
    ]
}

struct OrthoConfig {
    t: Triangle,
    h: Point,
    feet: [Point; 3],
}

fn ortho_config(ctx: &mut BuildCtx) -> Result<OrthoConfig> {
    let t = acute_triangle(ctx)?;
    let h = orthocenter(&t)?;
    let feet = [
        altitude_foot(t.a, t.b, t.c)?,
        altitude_foot(t.b, t.c, t.a)?,
        altitude_foot(t.c, t.a, t.b)?,
    ];
    Ok(OrthoConfig { t, h, feet })
}

/// Six incenters around one altitude: two concurrencies with the altitude
/// line.
fn s6_1(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = ortho_config(ctx)?;
    let (t, feet) = (cfg.t, cfg.feet);
    let h = ctx.probe_point(cfg.h);
    let mut out = Built::new();
    let a_f = out.point("A'", feet[0]);
    let b_f = out.point("B'", feet[1]);
    let c_f = out.point("C'", feet[2]);
    out.point("H", h);
    let cc = Line::through(t.c, c_f)?;
    let c_star = meet_lines(&Line::through(a_f, b_f)?, &cc)?;
    out.point("C*", c_star);
    if c_star.dist(h) < 0.02 || c_star.dist(a_f) < 0.02 || c_star.dist(c_f) < 0.02 {
        return Err(Error::DegenerateInput);
    }
    let i1 = out.point("I1", incenter_of(t.a, b_f, c_f));
    let i2 = out.point("I2", incenter_of(t.b, a_f, c_f));
    let i3 = out.point("I3", incenter_of(h, t.b, a_f));
    let i4 = out.point("I4", incenter_of(h, t.a, b_f));
    let i5 = out.point("I5", incenter_of(h, a_f, c_star));
    let i6 = out.point("I6", incenter_of(h, c_star, b_f));
    if !well_spread(&[i1, i2, i3, i4, i5, i6], 5e-3, 20.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "first_concurrency",
        Relation::Concurrent(vec![Line::through(i1, i4)?, Line::through(i2, i3)?, cc]),
    );
    out.relation(
        "second_concurrency",
        Relation::Concurrent(vec![Line::through(i6, i4)?, Line::through(i5, i3)?, cc]),
    );
    Ok(out)
}

/// Second tangents from two altitude feet to the excircles meet along a
/// line through the third foot.
fn s6_2(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let h_a = ctx.probe_point(altitude_foot(t.a, t.b, t.c)?);
    let h_b = altitude_foot(t.b, t.c, t.a)?;
    let h_c = altitude_foot(t.c, t.a, t.b)?;
    out.point("H_A", h_a);
    out.point("H_B", h_b);
    out.point("H_C", h_c);
    let (exc_a, _) = tritangent_circle(TritangentKind::ExcircleA, &t)?;
    let (exc_b, _) = tritangent_circle(TritangentKind::ExcircleB, &t)?;
    let (exc_c, _) = tritangent_circle(TritangentKind::ExcircleC, &t)?;
    let side_a = t.side_a()?;
    let side_b = t.side_b()?;
    let tan = |p: Point, c: &Circle, avoid: &Line| -> Result<Line> {
        crate::triangle::second_tangent_line(p, c, avoid)
    };
    let c1 = meet_lines(&tan(h_a, &exc_a, &side_a)?, &tan(h_b, &exc_b, &side_b)?)?;
    let c2 = meet_lines(&tan(h_a, &exc_c, &side_a)?, &tan(h_b, &exc_c, &side_b)?)?;
    out.point("C1", c1);
    out.point("C2", c2);
    if !well_spread(&[h_c, c1, c2], 0.02, 60.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation("collinear_with_foot", Relation::Collinear(vec![h_c, c1, c2]));
    Ok(out)
}

/// Lines through the incenter pairs of each split altitude triangle bound a
/// triangle perspective to the base.
fn s6_3(ctx: &mut BuildCtx) -> Result<Built> {
    let t = acute_triangle(ctx)?;
    let mut out = Built::new();
    let h_a = ctx.probe_point(altitude_foot(t.a, t.b, t.c)?);
    let h_b = altitude_foot(t.b, t.c, t.a)?;
    let h_c = altitude_foot(t.c, t.a, t.b)?;
    for (n, p) in [("H_A", h_a), ("H_B", h_b), ("H_C", h_c)] {
        out.point(n, p);
    }
    let split = |v: Point, foot: Point, p: Point, q: Point| -> Result<Line> {
        Line::through(incenter_of(v, foot, p), incenter_of(v, foot, q))
    };
    let l_a = out.line("l_A", split(t.a, h_a, t.b, t.c)?);
    let l_b = out.line("l_B", split(t.b, h_b, t.a, t.c)?);
    let l_c = out.line("l_C", split(t.c, h_c, t.a, t.b)?);
    let v = line_triangle(&[l_a, l_b, l_c])?;
    if !well_spread(&v.vertices(), 5e-3, 60.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "perspective_to_base",
        Relation::Perspective([v.a, v.b, v.c], [t.a, t.b, t.c]),
    );
    Ok(out)
}

/// Incenter-orthocenter alternation over the base sides.
fn s6_4(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let i = incenter_of(t.a, t.b, t.c);
    let mut out = Built::new();
    out.point("I", i);
    let h_a = ctx.probe_point(orthocenter_of(t.b, t.c, i)?);
    let h_b = orthocenter_of(t.c, t.a, i)?;
    let h_c = orthocenter_of(t.a, t.b, i)?;
    out.point("H_a", h_a);
    out.point("H_b", h_b);
    out.point("H_c", h_c);
    let i_a = out.point("I_a", incenter_of(t.b, h_a, t.c));
    let i_b = out.point("I_b", incenter_of(t.c, h_b, t.a));
    let i_c = out.point("I_c", incenter_of(t.a, h_c, t.b));
    if !well_spread(&[i_a, i_b, i_c], 5e-3, 30.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "incenter_is_orthocenter",
        Relation::EqualPoint(i, orthocenter_of(i_a, i_b, i_c)?),
    );
    let h2_a = orthocenter_of(t.b, i_a, t.c)?;
    let h2_b = orthocenter_of(t.c, i_b, t.a)?;
    let h2_c = orthocenter_of(t.a, i_c, t.b)?;
    out.point("H2_a", h2_a);
    out.point("H2_b", h2_b);
    out.point("H2_c", h2_c);
    out.relation(
        "second_orthocenters_perspective",
        Relation::Perspective([h2_a, h2_b, h2_c], [t.a, t.b, t.c]),
    );
    let i2_a = incenter_of(t.b, h2_a, t.c);
    let i2_b = incenter_of(t.c, h2_b, t.a);
    let i2_c = incenter_of(t.a, h2_c, t.b);
    out.relation(
        "second_incenters_perspective",
        Relation::Perspective([t.a, t.b, t.c], [i2_a, i2_b, i2_c]),
    );
    Ok(out)
}

fn second_external_tangent(c1: &Circle, c2: &Circle, avoid: &Line) -> Result<Line> {
    let ts = common_tangent_lines(c1, c2, CommonTangentKind::External)?;
    let best = ts
        .into_iter()
        .max_by(|l1, l2| l1.param_dist(avoid).total_cmp(&l2.param_dist(avoid)))
        .ok_or(Error::NoSolution)?;
    if best.param_dist(avoid) < 1e-4 {
        return Err(Error::AmbiguousSelection);
    }
    Ok(best)
}

/// Second external tangents of the orthic incircles: four circles through
/// one point.
fn s6_5(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = ortho_config(ctx)?;
    let (t, h) = (cfg.t, cfg.h);
    let mut out = Built::new();
    out.point("H", h);
    let (w, _) = tritangent_circle(TritangentKind::Incircle, &t)?;
    let (w_a, _) = tritangent_circle(TritangentKind::Incircle, &tri(t.b, t.c, h))?;
    let (w_b, _) = tritangent_circle(TritangentKind::Incircle, &tri(t.a, t.c, h))?;
    let (w_c, _) = tritangent_circle(TritangentKind::Incircle, &tri(t.a, t.b, h))?;
    out.circle("w", w);
    out.circle("w_A", w_a);
    out.circle("w_B", w_b);
    out.circle("w_C", w_c);
    // external tangents exist unless one circle contains the other
    for c in [&w_a, &w_b, &w_c] {
        if c.center.dist(w.center) < (c.r - w.r).abs() + 0.01 {
            return Err(Error::DegenerateInput);
        }
    }
    let l_a = out.line("l_A", second_external_tangent(&w_a, &w, &t.side_a()?)?);
    let l_b = out.line("l_B", second_external_tangent(&w_b, &w, &t.side_b()?)?);
    let l_c = out.line("l_C", second_external_tangent(&w_c, &w, &t.side_c()?)?);
    let a_star = ctx.probe_point(meet_lines(&l_b, &l_c)?);
    let b_star = meet_lines(&l_a, &l_c)?;
    let c_star = meet_lines(&l_b, &l_a)?;
    out.point("A*", a_star);
    out.point("B*", b_star);
    out.point("C*", c_star);
    let a_bang = meet_lines(&l_a, &t.side_a()?)?;
    let b_bang = meet_lines(&l_b, &t.side_b()?)?;
    let c_bang = meet_lines(&l_c, &t.side_c()?)?;
    out.point("A!", a_bang);
    out.point("B!", b_bang);
    out.point("C!", c_bang);
    if !well_spread(&[a_star, b_star, c_star], 0.02, 60.0)
        || !well_spread(&[a_bang, b_bang, c_bang], 0.02, 60.0)
    {
        return Err(Error::DegenerateInput);
    }
    let star_tri = tri(a_star, b_star, c_star);
    let pi = out.circle("pi", pedal_circle(h, &star_tri)?);
    let nine_base = out.circle("ninepoint_abc", ninepoint_circle(&t)?);
    let nine_star = out.circle("ninepoint_star", ninepoint_circle(&star_tri)?);
    let bang = out.circle("circ_bang", circumcircle(a_bang, b_bang, c_bang)?);
    let p = common_point_by_third(&nine_base, &bang, &nine_star)?;
    out.point("common", p);
    out.relation(
        "common_on_ninepoint_star",
        Relation::PointOnCircle(p, nine_star),
    );
    out.relation("common_on_pedal", Relation::PointOnCircle(p, pi));
    Ok(out)
}

/// Orthic in/excenters on one conic.
fn s6_6(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = ortho_config(ctx)?;
    let (t, feet) = (cfg.t, cfg.feet);
    let (a_f, b_f, c_f) = (feet[0], feet[1], feet[2]);
    let mut out = Built::new();
    let i1 = ctx.probe_point(incenter_of(c_f, b_f, t.a));
    let i2 = incenter_of(c_f, a_f, t.b);
    // excenters opposite the C' vertex in the two split triangles
    let i1p = excenter(&tri(t.a, c_f, b_f), 1);
    let i2p = excenter(&tri(c_f, t.b, a_f), 0);
    out.point("I1", i1);
    out.point("I2", i2);
    out.point("I1'", i1p);
    out.point("I2'", i2p);
    if !well_spread(&[i1, i2, i1p, i2p, t.a, t.b], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "six_point_conic",
        Relation::Conconic(vec![i1, i2, i1p, i2p, t.a, t.b]),
    );
    Ok(out)
}

/// Mixed in/excenter circles over midpoints and feet: radical-line
/// incidence, Euler-line symmetry and coaxiality.
fn s6_7(ctx: &mut BuildCtx) -> Result<Built> {
    // relabel an acute scalene triangle so the angles satisfy C > A > B,
    // which pins each altitude foot on the required side of the midpoint
    let t0 = acute_triangle(ctx)?;
    let [a0, b0, c0] = t0.vertices();
    let ang = |v: Point, p: Point, q: Point| crate::geom::angle_at(v, p, q);
    let mut labeled = [
        (ang(a0, b0, c0), a0),
        (ang(b0, c0, a0), b0),
        (ang(c0, a0, b0), c0),
    ];
    labeled.sort_by(|x, y| x.0.total_cmp(&y.0));
    if labeled[1].0 - labeled[0].0 < 0.06 || labeled[2].0 - labeled[1].0 < 0.06 {
        return Err(Error::DegenerateInput);
    }
    // smallest angle at B, middle at A, largest at C
    let t = tri(labeled[1].1, labeled[0].1, labeled[2].1);
    let h = ctx.probe_point(orthocenter(&t)?);
    let mut out = Built::new();
    out.point("H", h);
    let a_f = altitude_foot(t.a, t.b, t.c)?;
    let b_f = altitude_foot(t.b, t.c, t.a)?;
    let c_f = altitude_foot(t.c, t.a, t.b)?;
    let a1 = midpoint(t.b, t.c);
    let b1 = midpoint(t.c, t.a);
    let c1 = midpoint(t.a, t.b);
    for (n, p) in [
        ("A'", a_f),
        ("B'", b_f),
        ("C'", c_f),
        ("A1", a1),
        ("B1", b1),
        ("C1", c1),
    ] {
        out.point(n, p);
    }
    for (x, y) in [(c_f, c1), (b_f, b1), (a_f, a1)] {
        if x.dist(y) < 0.04 || x.dist(h) < 0.04 || y.dist(h) < 0.04 {
            return Err(Error::DegenerateInput);
        }
    }
    let w1 = out.circle(
        "w1",
        circumcircle(
            incenter_of(c_f, c1, h),
            incenter_of(b_f, b1, h),
            excenter(&tri(h, a_f, a1), 0),
        )?,
    );
    let w2 = out.circle(
        "w2",
        circumcircle(
            excenter(&tri(c_f, c1, h), 2),
            excenter(&tri(b_f, b1, h), 2),
            incenter_of(h, a_f, a1),
        )?,
    );
    let orthic = out.circle("circ_orthic", circumcircle(a_f, b_f, c_f)?);
    out.relation(
        "h_on_radical_line",
        Relation::PointOnLine(h, radical_axis(&w1, &orthic)?),
    );
    let euler = out.line("euler", crate::triangle::euler_line(&t)?);
    let w1_reflected = crate::geom::reflect_circle_in_line(&euler, &w1);
    out.relation("mirror_circles", Relation::SameCircle(w1_reflected, w2));
    out.relation("coaxial_triple", Relation::Coaxial(vec![w1, w2, orthic]));
    Ok(out)
}

/// Cyclic quadrilateral with perpendicular diagonals: two incenter joins
/// meet the arc-midpoint cevian.
fn s6_8(ctx: &mut BuildCtx) -> Result<Built> {
    let circ = circle(ctx.point_in_disk(0.3), ctx.range(1.0, 1.8));
    let ta = ctx.angle();
    let tc = ta + ctx.range(1.8, 2.9);
    let a = circ.point_at(ta);
    let c = circ.point_at(tc);
    let u = ctx.range(0.25, 0.75);
    let h0 = a + (c - a) * u;
    let diag = Line::through(a, c)?;
    let perp = perpendicular_through(h0, &diag);
    let hits = meet_line_circle(&perp, &circ);
    if hits.len() != 2 || hits[0].dist(hits[1]) < 0.3 {
        return Err(Error::DegenerateInput);
    }
    // order the quadrilateral A, B, C, D around the circle
    let (b, d) = if diag.eval(hits[0]) > 0.0 {
        (hits[1], hits[0])
    } else {
        (hits[0], hits[1])
    };
    // the arc from D to A must avoid B and C and stay minor
    let ang_of = |p: Point| (p - circ.center).angle();
    let span = |from: f64, to: f64| {
        let mut d = to - from;
        while d < 0.0 {
            d += std::f64::consts::TAU;
        }
        d
    };
    let fwd = span(ang_of(d), ang_of(a));
    let bwd = span(ang_of(a), ang_of(d));
    let (gap, from, to) = if fwd < bwd {
        (fwd, ang_of(d), ang_of(a))
    } else {
        (bwd, ang_of(a), ang_of(d))
    };
    let _ = to;
    if gap > std::f64::consts::PI - 0.15 {
        return Err(Error::DegenerateInput);
    }
    for p in [b, c] {
        if span(from, ang_of(p)) < gap {
            return Err(Error::DegenerateInput);
        }
    }
    let w = arc_midpoint_minor(&circ, d, a);
    let mut out = Built::new();
    for (n, p) in [("A", a), ("B", b), ("C", c), ("D", d)] {
        out.point(n, p);
    }
    out.circle("circ", circ);
    let h = meet_lines(&diag, &Line::through(b, d)?)?;
    out.point("H", h);
    out.hypothesis(
        "diagonals_perpendicular",
        (c - a).unit().dot((d - b).unit()).abs(),
    );
    let x = ctx.probe_point(Line::through(a, b)?.foot(h));
    let y = Line::through(c, d)?.foot(h);
    let m = midpoint(a, b);
    let n = midpoint(c, d);
    for (nm, p) in [("X", x), ("Y", y), ("M", m), ("N", n)] {
        out.point(nm, p);
    }
    if x.dist(m) < 0.03 || y.dist(n) < 0.03 || x.dist(h) < 0.03 || y.dist(h) < 0.03 {
        return Err(Error::DegenerateInput);
    }
    let i1 = out.point("I1", incenter_of(h, x, m));
    let i2 = out.point("I2", incenter_of(a, b, d));
    let i3 = out.point("I3", incenter_of(h, y, n));
    let i4 = out.point("I4", incenter_of(c, a, d));
    out.point("W", w);
    if i1.dist(i2) < 0.02 || i3.dist(i4) < 0.02 || h.dist(w) < 0.05 {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "incenter_joins_concurrent",
        Relation::Concurrent(vec![
            Line::through(i1, i2)?,
            Line::through(i3, i4)?,
            Line::through(h, w)?,
        ]),
    );
    Ok(out)
}

/// Circles tangent internally to the two incircle triples around the
/// altitudes: their radical line passes through the orthocenter.
fn s6_9(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = ortho_config(ctx)?;
    let (t, h, feet) = (cfg.t, cfg.h, cfg.feet);
    let (a_f, b_f, c_f) = (feet[0], feet[1], feet[2]);
    let mut out = Built::new();
    out.point("H", h);
    let inc = |p: Point, q: Point, r: Point| -> Result<Circle> {
        Ok(tritangent_circle(TritangentKind::Incircle, &tri(p, q, r))?.0)
    };
    let mut g1 = [inc(h, a_f, t.c)?, inc(h, b_f, t.a)?, inc(h, c_f, t.b)?];
    let g2 = [inc(h, a_f, t.b)?, inc(h, b_f, t.c)?, inc(h, c_f, t.a)?];
    g1[0] = Circle {
        center: ctx.probe_point(g1[0].center),
        r: g1[0].r,
    };
    for (i, c) in g1.iter().enumerate() {
        out.circle(&format!("inc1_{i}"), *c);
    }
    for (i, c) in g2.iter().enumerate() {
        out.circle(&format!("inc2_{i}"), *c);
    }
    let enclosing = |g: &[Circle; 3]| -> Result<Circle> {
        let sols = apollonius(&[
            Constraint::TangentCircle(g[0], TangencySign::Internal),
            Constraint::TangentCircle(g[1], TangencySign::Internal),
            Constraint::TangentCircle(g[2], TangencySign::Internal),
        ])?;
        sols.into_iter()
            .filter(|s| g.iter().all(|c| s.center.dist(c.center) + c.r <= s.r + 1e-7))
            .min_by(|x, y| x.r.total_cmp(&y.r))
            .ok_or(Error::NoSolution)
    };
    let w1 = out.circle("w1", enclosing(&g1)?);
    let w2 = out.circle("w2", enclosing(&g2)?);
    out.relation(
        "h_on_radical_line",
        Relation::PointOnLine(h, radical_axis(&w1, &w2)?),
    );
    Ok(out)
}

/// Excenter sextet over the reflections of the orthocenter: two radical
/// lines through the orthocenter.
fn s6_10(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = ortho_config(ctx)?;
    let (t, h) = (cfg.t, cfg.h);
    let mut out = Built::new();
    out.point("H", h);
    let w_a = ctx.probe_point(t.side_a()?.reflect_point(h));
    let w_b = t.side_b()?.reflect_point(h);
    let w_c = t.side_c()?.reflect_point(h);
    out.point("W_A", w_a);
    out.point("W_B", w_b);
    out.point("W_C", w_c);
    // excircle opposite the orthocenter vertex in (X, H, W_Y)
    let exc = |x: Point, wy: Point| -> Result<(Point, Circle)> {
        let tr = tri(x, h, wy);
        tr.check_nondegenerate()?;
        let center = excenter(&tr, 1);
        let r = Line::through(x, wy)?.eval(center).abs();
        Ok((center, circle(center, r)))
    };
    let (i_ab, c_ab) = exc(t.a, w_b)?;
    let (i_cb, c_cb) = exc(t.c, w_b)?;
    let (i_ca, c_ca) = exc(t.c, w_a)?;
    let (i_ba, c_ba) = exc(t.b, w_a)?;
    let (i_bc, c_bc) = exc(t.b, w_c)?;
    let (i_ac, c_ac) = exc(t.a, w_c)?;
    for (n, p) in [
        ("I_AB", i_ab),
        ("I_CB", i_cb),
        ("I_CA", i_ca),
        ("I_BA", i_ba),
        ("I_BC", i_bc),
        ("I_AC", i_ac),
    ] {
        out.point(n, p);
    }
    if !well_spread(&[i_ab, i_cb, i_ca, i_ba, i_bc, i_ac], 0.02, 60.0) {
        return Err(Error::DegenerateInput);
    }
    let circ1 = circumcircle(i_ab, i_bc, i_ca)?;
    let circ2 = circumcircle(i_ba, i_cb, i_ac)?;
    out.relation(
        "h_on_excenter_circle_radical_line",
        Relation::PointOnLine(h, radical_axis(&circ1, &circ2)?),
    );
    let tangent_triple = |cs: &[Circle; 3]| -> Result<Circle> {
        let sols = apollonius(&[
            Constraint::TangentCircle(cs[0], TangencySign::External),
            Constraint::TangentCircle(cs[1], TangencySign::External),
            Constraint::TangentCircle(cs[2], TangencySign::External),
        ])?;
        sols.into_iter()
            .min_by(|x, y| x.r.total_cmp(&y.r))
            .ok_or(Error::NoSolution)
    };
    let o1 = out.circle("omega1", tangent_triple(&[c_ab, c_bc, c_ca])?);
    let o2 = out.circle("omega2", tangent_triple(&[c_ac, c_ba, c_cb])?);
    out.relation(
        "h_on_tangent_circle_radical_line",
        Relation::PointOnLine(h, radical_axis(&o1, &o2)?),
    );
    Ok(out)
}

/// Conjugated orthocenters over the incenter cevian triangle: three joins
/// concur.
fn s6_11(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let i = incenter_of(t.a, t.b, t.c);
    let mut out = Built::new();
    out.point("I", i);
    let cev = crate::triangle::cevian_triangle(i, &t)?;
    let a_c = ctx.probe_point(cev.a);
    let b_c = cev.b;
    let c_c = cev.c;
    out.point("A'", a_c);
    out.point("B'", b_c);
    out.point("C'", c_c);
    let conj = |p: Point, q: Point, r: Point| -> Result<Point> {
        isogonal_conjugate(orthocenter_of(p, q, r)?, &t)
    };
    let i_ab = conj(i, t.a, b_c)?;
    let i_a_b = conj(i, a_c, t.b)?;
    let i_ac = conj(i, t.a, c_c)?;
    let i_a_c = conj(i, a_c, t.c)?;
    let i_bc = conj(i, t.b, c_c)?;
    let i_b_c = conj(i, b_c, t.c)?;
    for (n, p) in [
        ("i_IAB'", i_ab),
        ("i_IA'B", i_a_b),
        ("i_IAC'", i_ac),
        ("i_IA'C", i_a_c),
        ("i_IBC'", i_bc),
        ("i_IB'C", i_b_c),
    ] {
        out.point(n, p);
    }
    if i_ab.dist(i_b_c) < 0.02 || i_a_b.dist(i_a_c) < 0.02 || i_ac.dist(i_bc) < 0.02 {
        return Err(Error::DegenerateInput);
    }
    if !bounded(&[i_ab, i_a_b, i_ac, i_a_c, i_bc, i_b_c], 60.0) {
        return Err(Error::DegenerateInput);
    }
    // joins pair the conjugates sharing a cevian foot
    out.relation(
        "conjugate_joins_concurrent",
        Relation::Concurrent(vec![
            Line::through(i_ab, i_b_c)?,
            Line::through(i_a_b, i_a_c)?,
            Line::through(i_ac, i_bc)?,
        ]),
    );
    Ok(out)
}

/// Conjugations of the orthocenter in the reflection-triangle cuts.
fn s6_12(ctx: &mut BuildCtx) -> Result<Built> {
    let cfg = ortho_config(ctx)?;
    let (t, h) = (cfg.t, cfg.h);
    let mut out = Built::new();
    out.point("H", h);
    let a_r = ctx.probe_point(t.side_a()?.reflect_point(h));
    let b_r = t.side_b()?.reflect_point(h);
    let c_r = t.side_c()?.reflect_point(h);
    out.point("A'", a_r);
    out.point("B'", b_r);
    out.point("C'", c_r);
    let l_ab = Line::through(a_r, b_r)?;
    let l_bc = Line::through(b_r, c_r)?;
    let l_ac = Line::through(a_r, c_r)?;
    // the subscript names the vertex absent from the cutting side
    let c_b = meet_lines(&l_ab, &Line::through(t.c, t.a)?)?;
    let c_a = meet_lines(&l_ab, &Line::through(t.c, t.b)?)?;
    let a_b = meet_lines(&l_bc, &Line::through(t.a, t.c)?)?;
    let a_c = meet_lines(&l_bc, &Line::through(t.a, t.b)?)?;
    let b_a = meet_lines(&l_ac, &Line::through(t.b, t.c)?)?;
    let b_c = meet_lines(&l_ac, &Line::through(t.b, t.a)?)?;
    for (n, p) in [
        ("C_B", c_b),
        ("C_A", c_a),
        ("A_B", a_b),
        ("A_C", a_c),
        ("B_A", b_a),
        ("B_C", b_c),
    ] {
        out.point(n, p);
    }
    if !bounded(&[c_b, c_a, a_b, a_c, b_a, b_c], 40.0) {
        return Err(Error::DegenerateInput);
    }
    let conj = |p: Point, q: Point, r: Point| -> Result<Point> {
        isogonal_conjugate(h, &tri(p, q, r))
    };
    let i1 = conj(t.a, a_b, b_r)?;
    let i2 = conj(t.b, b_a, a_r)?;
    let i3 = conj(t.b, b_c, c_r)?;
    let i4 = conj(t.c, c_b, b_r)?;
    let i5 = conj(t.c, c_a, a_r)?;
    let i6 = conj(t.a, a_c, c_r)?;
    if i1.dist(i2) < 0.02 || i3.dist(i4) < 0.02 || i5.dist(i6) < 0.02 {
        return Err(Error::DegenerateInput);
    }
    if !bounded(&[i1, i2, i3, i4, i5, i6], 60.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "conjugation_joins_concurrent",
        Relation::Concurrent(vec![
            Line::through(i1, i2)?,
            Line::through(i3, i4)?,
            Line::through(i5, i6)?,
        ]),
    );
    let j1 = conj(t.c, c_a, c_b)?;
    let j2 = conj(t.b, b_c, b_a)?;
    let j3 = conj(t.a, a_b, a_c)?;
    out.point("j_C", j1);
    out.point("j_B", j2);
    out.point("j_A", j3);
    out.relation(
        "h_is_orthocenter",
        Relation::EqualPoint(h, orthocenter_of(j1, j2, j3)?),
    );
    Ok(out)
}
