//! Fermat-point, Miquel-point, Steiner-line and isogonal-conjugation
//! statements for a general triangle (scenario ids S2.1 - S2.10).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::error::{Error, Result};
use crate::geom::{
    circle, circumcircle, meet_lines, midpoint, parallel_through, radical_axis, Line, Point,
};
use crate::relation::Relation;
use crate::triangle::{
    fermat1, fermat2, isogonal_conjugate, pedal_circle, simson_line, tri, tritangent_circle,
    TritangentKind,
};

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef {
            id: "S2.1",
            anchor: "goes through the midpoint of the segment",
            tier: 1,
            build: s2_1,
        },
        ScenarioDef {
            id: "S2.2",
            anchor: "goes through the middle of F_1F_2",
            tier: 1,
            build: s2_2,
        },
        ScenarioDef {
            id: "S2.3",
            anchor: "F_2 lies on the circles",
            tier: 1,
            build: s2_3,
        },
        ScenarioDef {
            id: "S2.4",
            anchor: "Consider an alphabet with the letters",
            tier: 1,
            build: s2_4,
        },
        ScenarioDef {
            id: "S2.5",
            anchor: "F, X_A, X_B, X_C are collinear",
            tier: 1,
            build: s2_5,
        },
        ScenarioDef {
            id: "S2.6",
            anchor: "P'P*, Q'Q*, R'R* are concurrent",
            tier: 1,
            build: s2_6,
        },
        ScenarioDef {
            id: "S2.7",
            anchor: "passes through the same point",
            tier: 1,
            build: s2_7,
        },
        ScenarioDef {
            id: "S2.8",
            anchor: "concurrent at X_2^1",
            tier: 1,
            build: s2_8,
        },
        ScenarioDef {
            id: "S2.9",
            anchor: "lies on the radical line",
            tier: 1,
            build: s2_9,
        },
        ScenarioDef {
            id: "S2.10",
            anchor: "F is the Miquel point",
            tier: 1,
            build: s2_10,
        },
    ]
}

/// The circle about F2 through F1 and the circumcircle have their radical
/// line through the midpoint of F1F2.
fn s2_1(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    out.point("A", t.a);
    out.point("B", t.b);
    out.point("C", t.c);
    let f1 = out.point("F1", fermat1(&t)?);
    let f2 = out.point("F2", fermat2(&t)?);
    if !well_spread(&[f1, f2], 0.05, 20.0) {
        return Err(Error::DegenerateInput);
    }
    let radius = ctx.probe_scalar(f2.dist(f1));
    let omega = out.circle("omega", circle(f2, radius));
    let circ = out.circle("circ_abc", circumcircle(t.a, t.b, t.c)?);
    let rad = out.line("rad", radical_axis(&omega, &circ)?);
    let mid = out.point("mid_f1f2", midpoint(f1, f2));
    out.relation("midpoint_on_radical_line", Relation::PointOnLine(mid, rad));
    Ok(out)
}

/// Feet of the F2-parallels to the F1-cevians are collinear with the
/// midpoint of F1F2.
fn s2_2(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let f1 = fermat1(&t)?;
    let f2 = ctx.probe_point(fermat2(&t)?);
    out.point("F1", f1);
    out.point("F2", f2);
    let feet = [
        (t.a, t.b, t.c, "A'"),
        (t.b, t.c, t.a, "B'"),
        (t.c, t.a, t.b, "C'"),
    ];
    let mut prim = vec![];
    for (v, s1, s2, name) in feet {
        let dir = Line::through(v, f1)?;
        let par = parallel_through(f2, &dir);
        let side = Line::through(s1, s2)?;
        let p = meet_lines(&par, &side)?;
        out.point(name, p);
        prim.push(p);
    }
    if !bounded(&prim, 50.0) {
        return Err(Error::DegenerateInput);
    }
    let mid = out.point("mid_f1f2", midpoint(f1, fermat2(&t)?));
    out.relation("feet_collinear", Relation::Collinear(prim.clone()));
    out.relation(
        "midpoint_on_line",
        Relation::Collinear(vec![prim[0], prim[1], mid]),
    );
    Ok(out)
}

/// Sub-triangle second Fermat points: circle incidences, the pi/3 angle and
/// the perspectivity of the conjugate triangle.
fn s2_3(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let f1 = out.point("F1", fermat1(&t)?);
    let f2 = out.point("F2", fermat2(&t)?);
    let t_a = tri(t.b, t.c, f1);
    let t_b = tri(t.a, t.c, f1);
    let t_c = tri(t.a, t.b, f1);
    let fa = ctx.probe_point(fermat2(&t_a)?);
    let fb = fermat2(&t_b)?;
    let fc = fermat2(&t_c)?;
    out.point("F_A", fa);
    out.point("F_B", fb);
    out.point("F_C", fc);
    if !well_spread(&[fa, fb, fc, f2], 1e-3, 30.0) {
        return Err(Error::DegenerateInput);
    }
    // (1) reflections in the vertex-F1 lines
    let fa_r = out.point("F_A'", Line::through(t.a, f1)?.reflect_point(fa));
    let fb_r = out.point("F_B'", Line::through(t.b, f1)?.reflect_point(fb));
    let fc_r = out.point("F_C'", Line::through(t.c, f1)?.reflect_point(fc));
    out.relation("f2_on_circle_fafbfc", {
        Relation::PointOnCircle(f2, circumcircle(fa, fb, fc)?)
    });
    out.relation(
        "f2_on_circle_reflected",
        Relation::PointOnCircle(f2, circumcircle(fa_r, fb_r, fc_r)?),
    );
    // (2) isogonal conjugates of F_A in the three sub-triangles
    let faa = isogonal_conjugate(fa, &t_a)?;
    let fab = isogonal_conjugate(fa, &t_b)?;
    let fac = isogonal_conjugate(fa, &t_c)?;
    out.point("F_A^A", faa);
    out.point("F_A^B", fab);
    out.point("F_A^C", fac);
    if !well_spread(&[faa, fab, fac], 1e-3, 30.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "angle_at_faa_is_pi_3",
        Relation::AngleEq {
            vertex: faa,
            p: fab,
            q: fac,
            target: std::f64::consts::FRAC_PI_3,
        },
    );
    // (3) the diagonal conjugates form a perspective triangle
    let fbb = isogonal_conjugate(fb, &t_b)?;
    let fcc = isogonal_conjugate(fc, &t_c)?;
    out.point("F_B^B", fbb);
    out.point("F_C^C", fcc);
    out.relation(
        "perspective_with_abc",
        Relation::Perspective([t.a, t.b, t.c], [faa, fbb, fcc]),
    );
    Ok(out)
}

/// Word recursion over {a, b, c}: parity of the word length decides which
/// Fermat point joins the three leaves on one circle.
fn s2_4(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let f1 = fermat1(&t)?;
    let f2 = fermat2(&t)?;
    out.point("F1", f1);
    out.point("F2", f2);
    let len = 1 + (ctx.unit() * 3.0) as usize; // word length 1..=3
    let word: Vec<u8> = (0..len).map(|_| (ctx.unit() * 3.0) as u8).collect();
    let sides = [(t.b, t.c), (t.c, t.a), (t.a, t.b)];
    let mut pts = [f1, f1, f1];
    for &letter in &word {
        let mut next = pts;
        for (i, &(p, q)) in sides.iter().enumerate() {
            next[i] = match letter {
                0 => fermat2(&tri(p, q, pts[i]))?,
                1 => Line::through(p, q)?.reflect_point(pts[i]),
                _ => midpoint(p, q) * 2.0 - pts[i],
            };
        }
        pts = next;
    }
    pts[0] = ctx.probe_point(pts[0]);
    out.point("F_A^w", pts[0]);
    out.point("F_B^w", pts[1]);
    out.point("F_C^w", pts[2]);
    let anchor = if len % 2 == 1 { f2 } else { f1 };
    if !well_spread(&[pts[0], pts[1], pts[2], anchor], 1e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "parity_concyclic",
        Relation::Concyclic(vec![anchor, pts[0], pts[1], pts[2]]),
    );
    Ok(out)
}

/// Tangent meets over first Fermat points of the inner subdivision are
/// collinear with F.
fn s2_5(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let f = ctx.probe_point(fermat1(&t)?);
    out.point("F", f);
    let sub = |p: Point, q: Point| -> Result<Point> { fermat2(&tri(f, p, q)) };
    let f_a = sub(t.b, t.c)?;
    let f_b = sub(t.a, t.c)?;
    let f_c = sub(t.a, t.b)?;
    out.point("F_A", f_a);
    out.point("F_B", f_b);
    out.point("F_C", f_c);
    let x_of = |fu: Point, fv: Point, v: Point| -> Result<Point> {
        // first Fermat points of FF_uV pairs, then the tangent meet
        let p1 = fermat1(&tri(f, fu, v))?;
        let p2 = fermat1(&tri(f, fv, v))?;
        let circ = circumcircle(p1, p2, v)?;
        let t1 = circ.tangent_at(p1)?;
        let t2 = circ.tangent_at(p2)?;
        meet_lines(&t1, &t2)
    };
    let x_a = out.point("X_A", x_of(f_b, f_c, t.a)?);
    let x_b = out.point("X_B", x_of(f_a, f_c, t.b)?);
    let x_c = out.point("X_C", x_of(f_a, f_b, t.c)?);
    if !bounded(&[x_a, x_b, x_c], 60.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation("collinear_with_f", Relation::Collinear(vec![f, x_a, x_b, x_c]));
    Ok(out)
}

/// Simson lines of the three Miquel points cut the midpoint triangle in a
/// perspective configuration.
fn s2_6(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let w = (
        ctx.range(0.2, 0.8),
        ctx.range(0.2, 0.8),
        ctx.range(0.2, 0.8),
    );
    let x = t.from_barycentric(w);
    let mut out = Built::new();
    out.point("X", x);
    let la = Line::through(t.a, x)?;
    let lb = Line::through(t.b, x)?;
    let lc = Line::through(t.c, x)?;
    let p = meet_lines(&la, &t.side_a()?)?;
    let q = meet_lines(&lb, &t.side_b()?)?;
    let r = meet_lines(&lc, &t.side_c()?)?;
    out.point("P", p);
    out.point("Q", q);
    out.point("R", r);
    if !well_spread(&[p, q, r], 0.02, 30.0) {
        return Err(Error::DegenerateInput);
    }
    // Miquel points of the three line quadruples, with their Simson lines
    let m_q = ctx.probe_point(crate::quad::miquel_point(&[
        la,
        lc,
        Line::through(t.b, t.a)?,
        Line::through(t.b, t.c)?,
    ])?);
    let m_p = crate::quad::miquel_point(&[lb, lc, Line::through(t.a, t.b)?, Line::through(t.a, t.c)?])?;
    let m_r = crate::quad::miquel_point(&[la, lb, Line::through(t.c, t.a)?, Line::through(t.c, t.b)?])?;
    out.point("M_Q", m_q);
    out.point("M_P", m_p);
    out.point("M_R", m_r);
    let l_q = simson_line(m_q, &tri(x, p, t.c))?;
    let l_p = simson_line(m_p, &tri(x, q, t.c))?;
    let l_r = simson_line(m_r, &tri(x, p, t.b))?;
    out.line("l_Q", l_q);
    out.line("l_P", l_p);
    out.line("l_R", l_r);
    // midpoint triangle of PQR: P' = mid(QR), Q' = mid(PR), R' = mid(PQ)
    let p_m = midpoint(q, r);
    let q_m = midpoint(p, r);
    let r_m = midpoint(p, q);
    let r_star = meet_lines(&Line::through(p_m, q_m)?, &l_r)?;
    let p_star = meet_lines(&Line::through(q_m, r_m)?, &l_p)?;
    let q_star = meet_lines(&Line::through(p_m, r_m)?, &l_q)?;
    out.point("P*", p_star);
    out.point("Q*", q_star);
    out.point("R*", r_star);
    if !well_spread(&[p_star, q_star, r_star, p_m, q_m, r_m], 1e-4, 60.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "mid_cevians_concurrent",
        Relation::Concurrent(vec![
            Line::through(p_m, p_star)?,
            Line::through(q_m, q_star)?,
            Line::through(r_m, r_star)?,
        ]),
    );
    Ok(out)
}

/// Steiner lines of the three vertex quadruples bound a triangle whose
/// circumcircle meets the pedal circle of P and the nine-point circle at a
/// common point.
fn s2_7(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let w = (
        ctx.range(0.15, 0.85),
        ctx.range(0.15, 0.85),
        ctx.range(0.15, 0.85),
    );
    let p = t.from_barycentric(w);
    let mut out = Built::new();
    out.point("P", p);
    let steiner_of = |v1: Point, v2: Point, v3: Point| -> Result<Line> {
        crate::quad::steiner_line_quad(&[
            Line::through(v1, v2)?,
            Line::through(v1, v3)?,
            Line::through(p, v2)?,
            Line::through(p, v3)?,
        ])
    };
    let l_a = ctx.probe_line(steiner_of(t.a, t.b, t.c)?);
    let l_b = steiner_of(t.b, t.a, t.c)?;
    let l_c = steiner_of(t.c, t.a, t.b)?;
    out.line("L_A", l_a);
    out.line("L_B", l_b);
    out.line("L_C", l_c);
    let tr = line_triangle(&[l_a, l_b, l_c])?;
    if !well_spread(&tr.vertices(), 0.01, 60.0) {
        return Err(Error::DegenerateInput);
    }
    let circ = out.circle("circ_steiner_triangle", circumcircle(tr.a, tr.b, tr.c)?);
    let ped = out.circle("pedal_of_p", pedal_circle(p, &t)?);
    let nine = out.circle("ninepoint", crate::triangle::ninepoint_circle(&t)?);
    let common = common_point_by_third(&ped, &nine, &circ)?;
    out.point("common", common);
    out.relation("common_on_steiner_circle", Relation::PointOnCircle(common, circ));
    Ok(out)
}

/// Touch-triangle conjugates of the vertices: two concurrencies and one
/// eight-point conic.
fn s2_8(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let (_, touch_in) = tritangent_circle(TritangentKind::Incircle, &t)?;
    let a1 = ctx.probe_point(touch_in[0]);
    let b1 = touch_in[1];
    let c1 = touch_in[2];
    out.point("A1", a1);
    out.point("B1", b1);
    out.point("C1", c1);
    let (_, ta) = tritangent_circle(TritangentKind::ExcircleA, &t)?;
    let (_, tb) = tritangent_circle(TritangentKind::ExcircleB, &t)?;
    let (_, tc) = tritangent_circle(TritangentKind::ExcircleC, &t)?;
    let a2 = out.point("A2", ta[0]);
    let b2 = out.point("B2", tb[1]);
    let c2 = out.point("C2", tc[2]);
    let contact = tri(a1, b1, c1);
    let ex_contact = tri(a2, b2, c2);
    let a_1 = isogonal_conjugate(t.a, &contact)?;
    let b_1 = isogonal_conjugate(t.b, &contact)?;
    let c_1 = isogonal_conjugate(t.c, &contact)?;
    let a_2 = isogonal_conjugate(t.a, &ex_contact)?;
    let b_2 = isogonal_conjugate(t.b, &ex_contact)?;
    let c_2 = isogonal_conjugate(t.c, &ex_contact)?;
    out.point("A^1", a_1);
    out.point("B^1", b_1);
    out.point("C^1", c_1);
    out.point("A^2", a_2);
    out.point("B^2", b_2);
    out.point("C^2", c_2);
    if !well_spread(&[a_1, b_1, c_1, a_2, b_2, c_2], 1e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    let l1 = [
        Line::through(a2, a_1)?,
        Line::through(b2, b_1)?,
        Line::through(c2, c_1)?,
    ];
    let l2 = [
        Line::through(a1, a_2)?,
        Line::through(b1, b_2)?,
        Line::through(c1, c_2)?,
    ];
    out.relation("first_concurrency", Relation::Concurrent(l1.to_vec()));
    out.relation("second_concurrency", Relation::Concurrent(l2.to_vec()));
    let x21 = meet_lines(&l1[0], &l1[1])?;
    let x12 = meet_lines(&l2[0], &l2[1])?;
    out.point("X_2^1", x21);
    out.point("X_1^2", x12);
    out.relation(
        "eight_point_conic",
        Relation::Conconic(vec![a_1, b_1, c_1, a_2, b_2, c_2, x21, x12]),
    );
    Ok(out)
}

/// Circumcenters of the centroid subdivision: the pedal-circle center of G
/// sits on the radical line.
fn s2_9(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let g = crate::triangle::centroid(&t);
    out.point("G", g);
    let o_ab = ctx.probe_point(circumcircle(t.a, t.b, g)?.center);
    let o_cb = circumcircle(t.c, t.b, g)?.center;
    let o_ac = circumcircle(t.a, g, t.c)?.center;
    out.point("O_AB", o_ab);
    out.point("O_CB", o_cb);
    out.point("O_AC", o_ac);
    if !well_spread(&[o_ab, o_cb, o_ac], 1e-3, 50.0) {
        return Err(Error::DegenerateInput);
    }
    let omega = out.circle("omega", circumcircle(o_ab, o_cb, o_ac)?);
    let circ = out.circle("circ_abc", circumcircle(t.a, t.b, t.c)?);
    let rad = out.line("rad", radical_axis(&circ, &omega)?);
    let pc = pedal_circle(g, &t)?;
    let center = out.point("pedal_center", pc.center);
    out.relation("pedal_center_on_radical_line", Relation::PointOnLine(center, rad));
    Ok(out)
}

/// F is the Miquel point of the three reflected-circumcenter lines together
/// with the radical line.
fn s2_10(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let mut out = Built::new();
    let f = out.point("F", fermat1(&t)?);
    let o_a = circumcircle(f, t.b, t.c)?.center;
    let o_b = circumcircle(f, t.a, t.c)?.center;
    let o_c = circumcircle(f, t.a, t.b)?.center;
    out.point("O_A", o_a);
    out.point("O_B", o_b);
    out.point("O_C", o_c);
    let x_a = ctx.probe_point(t.side_a()?.reflect_point(o_a));
    let x_b = t.side_b()?.reflect_point(o_b);
    let x_c = t.side_c()?.reflect_point(o_c);
    out.point("X_A", x_a);
    out.point("X_B", x_b);
    out.point("X_C", x_c);
    if !well_spread(&[x_a, x_b, x_c], 0.02, 40.0) {
        return Err(Error::DegenerateInput);
    }
    let l = radical_axis(&circumcircle(o_a, o_b, o_c)?, &circumcircle(t.a, t.b, t.c)?)?;
    out.line("l", l);
    let ls = [
        Line::through(x_a, x_b)?,
        Line::through(x_b, x_c)?,
        Line::through(x_a, x_c)?,
        l,
    ];
    // F on all four triple-circumcircles of the quadrilateral
    let names = ["AB\u{00d7}BC\u{00d7}AC", "AB\u{00d7}BC\u{00d7}l", "AB\u{00d7}AC\u{00d7}l", "BC\u{00d7}AC\u{00d7}l"];
    let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for (name, tr) in names.iter().zip(triples) {
        let v1 = meet_lines(&ls[tr[0]], &ls[tr[1]])?;
        let v2 = meet_lines(&ls[tr[0]], &ls[tr[2]])?;
        let v3 = meet_lines(&ls[tr[1]], &ls[tr[2]])?;
        if !well_spread(&[v1, v2, v3], 1e-4, 200.0) {
            return Err(Error::DegenerateInput);
        }
        let circ = circumcircle(v1, v2, v3)?;
        out.relation(&format!("f_on_circle_{name}"), Relation::PointOnCircle(f, circ));
    }
    Ok(out)
}
