//! Segment-pairing (midpoint analog) statements (S4.1 - S4.4).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::error::{Error, Result};
use crate::geom::{circle, circumcircle, meet_lines, second_meet_line_circle, Line, Point};
use crate::quad::m_seg_seg;
use crate::relation::Relation;
use crate::triangle::{circumcenter, isogonal_conjugate, ninepoint_circle, tri};

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef {
            id: "S4.1",
            anchor: "intersect at the same point",
            tier: 1,
            build: s4_1,
        },
        ScenarioDef {
            id: "S4.2",
            anchor: "pass through the same point",
            tier: 1,
            build: s4_2,
        },
        ScenarioDef {
            id: "S4.3",
            anchor: "goes through the same point",
            tier: 1,
            build: s4_3,
        },
        ScenarioDef {
            id: "S4.4",
            anchor: "are coaxial",
            tier: 1,
            build: s4_4,
        },
    ]
}

/// Four segments: the four circles over pairing-point triples meet at one
/// point.
fn s4_1(ctx: &mut BuildCtx) -> Result<Built> {
    let mut seg = vec![];
    for name in ["A", "B", "C", "D"] {
        let p = ctx.point_in_disk(1.6);
        let q = ctx.point_in_disk(1.6);
        if p.dist(q) < 0.3 {
            return Err(Error::DegenerateInput);
        }
        seg.push((name, p, q));
    }
    let mut out = Built::new();
    for (name, p, q) in &seg {
        out.point(&format!("P_{name}"), *p);
        out.point(&format!("Q_{name}"), *q);
    }
    let m = |i: usize, j: usize| -> Result<Point> {
        m_seg_seg(seg[i].1, seg[i].2, seg[j].1, seg[j].2)
    };
    let m_ab = ctx.probe_point(m(0, 1)?);
    let m_ac = m(0, 2)?;
    let m_ad = m(0, 3)?;
    let m_bc = m(1, 2)?;
    let m_bd = m(1, 3)?;
    let m_cd = m(2, 3)?;
    for (n, p) in [
        ("M_AB", m_ab),
        ("M_AC", m_ac),
        ("M_AD", m_ad),
        ("M_BC", m_bc),
        ("M_BD", m_bd),
        ("M_CD", m_cd),
    ] {
        out.point(n, p);
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

/// Six points on a circle: the chord-pairing triangle, the cross-meet
/// triangle and the nine-point circle of their join triangle share a point.
fn s4_2(ctx: &mut BuildCtx) -> Result<Built> {
    let circ = circle(ctx.point_in_disk(0.5), ctx.range(0.8, 1.6));
    let mut angles: Vec<f64> = (0..6).map(|_| ctx.angle()).collect();
    angles.sort_by(f64::total_cmp);
    for i in 0..6 {
        let next = if i == 5 {
            angles[0] + std::f64::consts::TAU
        } else {
            angles[i + 1]
        };
        if next - angles[i] < 0.25 {
            return Err(Error::DegenerateInput);
        }
    }
    let mut out = Built::new();
    out.circle("omega", circ);
    let pa = circ.point_at(angles[0]);
    let qa = circ.point_at(angles[3]);
    let pb = circ.point_at(angles[1]);
    let qb = circ.point_at(angles[4]);
    let pc = circ.point_at(angles[2]);
    let qc = circ.point_at(angles[5]);
    for (n, p) in [
        ("P_A", pa),
        ("Q_A", qa),
        ("P_B", pb),
        ("Q_B", qb),
        ("P_C", pc),
        ("Q_C", qc),
    ] {
        out.point(n, p);
    }
    let a_pair = ctx.probe_point(m_seg_seg(pb, qb, pc, qc)?);
    let b_pair = m_seg_seg(pa, qa, pc, qc)?;
    let c_pair = m_seg_seg(pa, qa, pb, qb)?;
    out.point("A'", a_pair);
    out.point("B'", b_pair);
    out.point("C'", c_pair);
    let a1 = meet_lines(&Line::through(pb, pc)?, &Line::through(qb, qc)?)?;
    let b1 = meet_lines(&Line::through(pa, pc)?, &Line::through(qa, qc)?)?;
    let c1 = meet_lines(&Line::through(pa, pb)?, &Line::through(qa, qb)?)?;
    out.point("A1", a1);
    out.point("B1", b1);
    out.point("C1", c1);
    if !well_spread(&[a_pair, b_pair, c_pair], 5e-3, 40.0)
        || !well_spread(&[a1, b1, c1], 5e-3, 40.0)
    {
        return Err(Error::DegenerateInput);
    }
    let join_tri = line_triangle(&[
        Line::through(a1, a_pair)?,
        Line::through(b1, b_pair)?,
        Line::through(c1, c_pair)?,
    ])?;
    if !well_spread(&join_tri.vertices(), 5e-3, 60.0) {
        return Err(Error::DegenerateInput);
    }
    let w1 = out.circle("w1", ninepoint_circle(&join_tri)?);
    let c_pairing = out.circle("circ_pairing", circumcircle(a_pair, b_pair, c_pair)?);
    let c_meets = out.circle("circ_meets", circumcircle(a1, b1, c1)?);
    let p = common_point_by_third(&c_pairing, &c_meets, &w1)?;
    out.point("common", p);
    out.relation("common_on_ninepoint", Relation::PointOnCircle(p, w1));
    Ok(out)
}

/// Isogonal pairs with parallel join segments: common circle point, vertex
/// concurrency, and the concurrency point on a pairing circle.
fn s4_3(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let wp = (
        ctx.range(0.2, 0.8),
        ctx.range(0.2, 0.8),
        ctx.range(0.2, 0.8),
    );
    let p = ctx.probe_point(t.from_barycentric(wp));
    let p_conj = isogonal_conjugate(p, &t)?;
    if p.dist(p_conj) < 0.05 {
        return Err(Error::DegenerateInput);
    }
    let dir_p = (p_conj - p).unit();
    // q moves along a random interior line; root-find closes the
    // parallelism of the two conjugate joins
    let wb = (
        ctx.range(0.3, 0.7),
        ctx.range(0.3, 0.7),
        ctx.range(0.3, 0.7),
    );
    let base = t.from_barycentric(wb);
    let dir = ctx.unit_dir();
    let t_par = ctx.close_root(
        |s| {
            let q = base + dir * s;
            let Ok(qc) = isogonal_conjugate(q, &t) else {
                return f64::NAN;
            };
            let d = qc - q;
            if d.norm() < 1e-9 {
                return f64::NAN;
            }
            dir_p.cross(d.unit())
        },
        -0.9,
        0.9,
        48,
    )?;
    let q = base + dir * t_par;
    let q_conj = isogonal_conjugate(q, &t)?;
    if q.dist(q_conj) < 0.05 || q.dist(p) < 0.08 {
        return Err(Error::DegenerateInput);
    }
    let mut out = Built::new();
    out.point("P", p);
    out.point("P'", p_conj);
    out.point("Q", q);
    out.point("Q'", q_conj);
    if !ctx.is_probe() {
        out.hypothesis("pp_parallel_qq", dir_p.cross((q_conj - q).unit()).abs());
    }
    // second intersections of the conjugate cevians with the vertex circles
    let second = |v: Point, o1: Point, o2: Point, x: Point| -> Result<Point> {
        let circ = circumcircle(o1, o2, x)?;
        second_meet_line_circle(&Line::through(v, x)?, &circ, x)
    };
    let p_a = second(t.a, t.b, t.c, p_conj)?;
    let p_b = second(t.b, t.c, t.a, p_conj)?;
    let p_c = second(t.c, t.a, t.b, p_conj)?;
    let q_a = second(t.a, t.b, t.c, q_conj)?;
    let q_b = second(t.b, t.c, t.a, q_conj)?;
    let q_c = second(t.c, t.a, t.b, q_conj)?;
    for (n, x) in [
        ("P_A", p_a),
        ("P_B", p_b),
        ("P_C", p_c),
        ("Q_A", q_a),
        ("Q_B", q_b),
        ("Q_C", q_c),
    ] {
        out.point(n, x);
    }
    if !well_spread(&[p_a, p_b, p_c, q_a, q_b, q_c], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    let r_c = meet_lines(&Line::through(q_a, p_b)?, &Line::through(q_b, p_a)?)?;
    let r_b = meet_lines(&Line::through(q_a, p_c)?, &Line::through(q_c, p_a)?)?;
    let r_a = meet_lines(&Line::through(q_b, p_c)?, &Line::through(q_c, p_b)?)?;
    out.point("R_A", r_a);
    out.point("R_B", r_b);
    out.point("R_C", r_c);
    if !well_spread(&[r_a, r_b, r_c], 5e-3, 40.0) {
        return Err(Error::DegenerateInput);
    }
    let m_ab = m_seg_seg(q_a, p_a, q_b, p_b)?;
    let m_cb = m_seg_seg(q_c, p_c, q_b, p_b)?;
    let m_ac = m_seg_seg(q_a, p_a, q_c, p_c)?;
    let m_a_qp = m_seg_seg(q_a, p_a, q, p)?;
    let m_b_qp = m_seg_seg(q_b, p_b, q, p)?;
    let m_c_qp = m_seg_seg(q_c, p_c, q, p)?;
    let rho1 = circumcircle(m_ab, m_cb, m_ac)?;
    let rho2 = circumcircle(m_ab, m_a_qp, m_b_qp)?;
    let rho3 = out.circle("circ_r", circumcircle(r_a, r_b, r_c)?);
    let common = common_point_by_third(&rho1, &rho2, &rho3)?;
    out.point("common", common);
    out.relation("common_on_r_circle", Relation::PointOnCircle(common, rho3));
    let la = Line::through(t.a, r_a)?;
    let lb = Line::through(t.b, r_b)?;
    let lc = Line::through(t.c, r_c)?;
    out.relation(
        "vertex_lines_concurrent",
        Relation::Concurrent(vec![la, lb, lc]),
    );
    let s = meet_lines(&la, &lb)?;
    out.point("S", s);
    let rho4 = circumcircle(m_a_qp, m_b_qp, m_c_qp)?;
    out.relation(
        "concurrency_on_pairing_circle",
        Relation::PointOnCircle(s, rho4),
    );
    Ok(out)
}

/// Circumcenter segments of an isogonal pair: coaxial vertex circles, the
/// segment pairings on them, and a six-point circle.
fn s4_4(ctx: &mut BuildCtx) -> Result<Built> {
    let t = random_triangle(ctx)?;
    let wp = (
        ctx.range(0.2, 0.8),
        ctx.range(0.2, 0.8),
        ctx.range(0.2, 0.8),
    );
    let p = t.from_barycentric(wp);
    let q = ctx.probe_point(isogonal_conjugate(p, &t)?);
    if p.dist(q) < 0.08 {
        return Err(Error::DegenerateInput);
    }
    let mut out = Built::new();
    out.point("P", p);
    out.point("Q", q);
    let oap = circumcenter(&tri(t.b, t.c, p))?;
    let obp = circumcenter(&tri(t.c, t.a, p))?;
    let ocp = circumcenter(&tri(t.a, t.b, p))?;
    let oaq = circumcenter(&tri(t.b, t.c, q))?;
    let obq = circumcenter(&tri(t.c, t.a, q))?;
    let ocq = circumcenter(&tri(t.a, t.b, q))?;
    for (n, x) in [
        ("O_A^P", oap),
        ("O_B^P", obp),
        ("O_C^P", ocp),
        ("O_A^Q", oaq),
        ("O_B^Q", obq),
        ("O_C^Q", ocq),
    ] {
        out.point(n, x);
    }
    if oap.dist(oaq) < 0.03 || obp.dist(obq) < 0.03 || ocp.dist(ocq) < 0.03 {
        return Err(Error::DegenerateInput);
    }
    if !bounded(&[oap, obp, ocp, oaq, obq, ocq], 40.0) {
        return Err(Error::DegenerateInput);
    }
    let m_a = m_seg_seg(obp, obq, ocp, ocq)?;
    let m_b = m_seg_seg(ocp, ocq, oap, oaq)?;
    let m_c = m_seg_seg(oap, oaq, obp, obq)?;
    out.point("M_A", m_a);
    out.point("M_B", m_b);
    out.point("M_C", m_c);
    let o = circumcenter(&t)?;
    out.point("O", o);
    if !well_spread(&[m_a, m_b, m_c], 5e-3, 60.0)
        || !well_spread(&[o, t.a, t.b, t.c], 5e-3, 60.0)
        || o.dist(m_a).min(o.dist(m_b)).min(o.dist(m_c)) < 5e-3
    {
        return Err(Error::DegenerateInput);
    }
    let ca = out.circle("circ_OM_AA", circumcircle(o, m_a, t.a)?);
    let cb = out.circle("circ_OM_BB", circumcircle(o, m_b, t.b)?);
    let cc = out.circle("circ_OM_CC", circumcircle(o, m_c, t.c)?);
    out.relation("vertex_circles_coaxial", Relation::Coaxial(vec![ca, cb, cc]));
    let a_tri = m_seg_seg(p, q, oap, oaq)?;
    let b_tri = m_seg_seg(p, q, obp, obq)?;
    let c_tri = m_seg_seg(p, q, ocp, ocq)?;
    out.point("A^", a_tri);
    out.point("B^", b_tri);
    out.point("C^", c_tri);
    out.relation(
        "a_pairing_on_vertex_circle",
        Relation::PointOnCircle(a_tri, ca),
    );
    if !well_spread(&[a_tri, b_tri, c_tri, m_a, m_b, m_c], 5e-3, 60.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "six_point_circle",
        Relation::Concyclic(vec![a_tri, b_tri, c_tri, m_a, m_b, m_c]),
    );
    Ok(out)
}
