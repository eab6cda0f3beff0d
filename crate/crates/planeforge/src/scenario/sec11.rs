//! Recursions over Gauss, Steiner, Euler and Simson lines (S11.1 - S11.4).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::error::{Error, Result};
use crate::geom::{meet_line_circle, meet_lines, midpoint, Line};
use crate::quad::{gauss_line, steiner_line_quad};
use crate::relation::Relation;
use crate::triangle::{euler_line, simson_line, tri};

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef {
            id: "S11.1",
            anchor: "l, g_1, g_2, g_3, g_4 are concurrent",
            tier: 1,
            build: s11_1,
        },
        ScenarioDef {
            id: "S11.2",
            anchor: "is parallel to l",
            tier: 1,
            build: s11_2,
        },
        ScenarioDef {
            id: "S11.3",
            anchor: "are the same",
            tier: 1,
            build: s11_3,
        },
        ScenarioDef {
            id: "S11.4",
            anchor: "middle of PN lies on QR",
            tier: 1,
            build: s11_4,
        },
    ]
}

/// Replacing each line of a quadruple by its Gauss line: the five Gauss
/// lines concur.
fn s11_1(ctx: &mut BuildCtx) -> Result<Built> {
    let ls = four_general_lines(ctx)?;
    let mut out = Built::new();
    let l = ctx.probe_line(gauss_line(&ls)?);
    out.line("l", l);
    let mut gs = vec![];
    for i in 0..4 {
        let mut quad = ls;
        quad[i] = l;
        let g = gauss_line(&quad)?;
        out.line(&format!("g{}", i + 1), g);
        gs.push(g);
    }
    let mut all = vec![l];
    all.extend(gs);
    out.relation("five_gauss_lines_concurrent", Relation::Concurrent(all));
    Ok(out)
}

/// The same replacement recursion for Steiner lines ends parallel to the
/// original.
fn s11_2(ctx: &mut BuildCtx) -> Result<Built> {
    let ls = four_general_lines(ctx)?;
    let mut out = Built::new();
    let l = ctx.probe_line(steiner_line_quad(&ls)?);
    out.line("l", l);
    let mut gs = vec![];
    for i in 0..4 {
        let mut quad = ls;
        quad[i] = l;
        let g = steiner_line_quad(&quad)?;
        out.line(&format!("g{}", i + 1), g);
        gs.push(g);
    }
    let fin = steiner_line_quad(&[gs[0], gs[1], gs[2], gs[3]])?;
    out.line("steiner_of_g", fin);
    out.relation("parallel_to_l", Relation::Parallel(fin, l));
    Ok(out)
}

/// Euler-line cuts: the Euler line survives the subdivision, and the
/// complement triangles recover the original.
fn s11_3(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let e = euler_line(&t)?;
    let mut out = Built::new();
    out.line("euler", e);
    let a1 = ctx.probe_point(meet_lines(&e, &t.side_a()?)?);
    let b1 = meet_lines(&e, &t.side_b()?)?;
    let c1 = meet_lines(&e, &t.side_c()?)?;
    out.point("A1", a1);
    out.point("B1", b1);
    out.point("C1", c1);
    if !well_spread(&[a1, b1, c1], 0.03, 30.0) {
        return Err(Error::DegenerateInput);
    }
    let e_a = euler_line(&tri(t.a, b1, c1))?;
    let e_b = euler_line(&tri(a1, t.b, c1))?;
    let e_c = euler_line(&tri(a1, b1, t.c))?;
    out.line("e_A", e_a);
    out.line("e_B", e_b);
    out.line("e_C", e_c);
    let delta = line_triangle(&[e_a, e_b, e_c])?;
    if !well_spread(&delta.vertices(), 0.02, 60.0) {
        return Err(Error::DegenerateInput);
    }
    let e_delta = euler_line(&delta)?;
    out.relation("euler_line_preserved", Relation::SameLine(e_delta, e));
    // the euler line of the inner triangle plus its sides cut three more
    // triangles whose euler lines rebuild the base vertices
    let quads = [
        [e_delta, e_a, e_b],
        [e_delta, e_a, e_c],
        [e_delta, e_b, e_c],
    ];
    let mut rebuilt = vec![];
    for q in quads {
        let v = line_triangle(&[q[0], q[1], q[2]])?;
        rebuilt.push(euler_line(&v)?);
    }
    let rebuilt_tri = line_triangle(&[rebuilt[0], rebuilt[1], rebuilt[2]])?;
    // match rebuilt vertices to the base triangle by proximity
    let verts = rebuilt_tri.vertices();
    for (name, target) in [("A", t.a), ("B", t.b), ("C", t.c)] {
        let best = verts
            .iter()
            .min_by(|p, q| p.dist(target).total_cmp(&q.dist(target)))
            .copied()
            .ok_or(Error::DegenerateInput)?;
        out.relation(
            &format!("vertex_{name}_recovered"),
            Relation::EqualPoint(best, target),
        );
    }
    Ok(out)
}

/// Simson-line chord: the midpoint of P and the Simson crossing point lies
/// on the chord.
fn s11_4(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let circ = crate::geom::circumcircle(t.a, t.b, t.c)?;
    let p = circ.point_at(ctx.angle());
    let mut out = Built::new();
    out.point("P", p);
    out.circle("circ", circ);
    let s_p = simson_line(p, &t)?;
    out.line("simson_P", s_p);
    let hits = meet_line_circle(&s_p, &circ);
    if hits.len() != 2 || hits[0].dist(hits[1]) < 0.15 {
        return Err(Error::DegenerateInput);
    }
    let q = ctx.probe_point(hits[0]);
    let r = hits[1];
    out.point("Q", q);
    out.point("R", r);
    let s_q = simson_line(q, &t)?;
    let s_r = simson_line(r, &t)?;
    out.line("simson_Q", s_q);
    out.line("simson_R", s_r);
    let n = meet_lines(&s_q, &s_r)?;
    out.point("N", n);
    let mid = out.point("mid_PN", midpoint(p, n));
    out.relation(
        "midpoint_on_chord",
        Relation::PointOnLine(mid, Line::through(q, r)?),
    );
    Ok(out)
}
