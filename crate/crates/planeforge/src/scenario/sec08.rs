//! Blow-ups: classical incidence theorems with points fattened into
//! circles (S8.1 - S8.5).

use super::helpers::*;
use super::{Built, BuildCtx, ScenarioDef};
use crate::circles::{
    apollonius, circle_tangency_residual, common_tangent_lines, CommonTangentKind, Constraint,
    TangencySign,
};
use crate::error::{Error, Result};
use crate::geom::{
    circle, external_homothety_center, invert_circle, meet_lines, perpendicular_through, pt,
    Circle, CircleOrLine, Line, Point,
};
use crate::quad::{m_point_seg, m_seg_seg};
use crate::relation::Relation;

pub fn defs() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef { id: "S8.1", anchor: "perspective centers lie on the same line", tier: 1, build: s8_1 },
        ScenarioDef { id: "S8.2", anchor: "L_QCD also goes through W", tier: 1, build: s8_2 },
        ScenarioDef { id: "S8.3", anchor: "there exists a circle w_M", tier: 3, build: s8_3 },
        ScenarioDef { id: "S8.4", anchor: "are collinear", tier: 3, build: s8_4 },
        ScenarioDef { id: "S8.5", anchor: "are concurrent", tier: 3, build: s8_5 },
    ]
}

/// Homothety-center lines of two fattened triangles: three perspectivities
/// with collinear perspectors.
fn s8_1(ctx: &mut BuildCtx) -> Result<Built> {
    let t1 = random_triangle(ctx)?;
    let t2 = triangle_with_angles(ctx, 25.0, 130.0)?;
    let mut radii = [0.0f64; 6];
    for r in radii.iter_mut() {
        *r = ctx.range(0.15, 0.8);
    }
    // distinct radii keep every external homothety center finite
    for i in 0..6 {
        for j in i + 1..6 {
            if (radii[i] - radii[j]).abs() < 0.02 {
                return Err(Error::DegenerateInput);
            }
        }
    }
    let cs = [
        circle(t1.a, radii[0]),
        circle(t1.b, radii[1]),
        circle(t1.c, radii[2]),
        circle(t2.a, radii[3]),
        circle(t2.b, radii[4]),
        circle(t2.c, radii[5]),
    ];
    let mut out = Built::new();
    for (i, c) in cs.iter().enumerate() {
        out.circle(&format!("w{}", i), *c);
    }
    let h = |i: usize, j: usize| external_homothety_center(&cs[i], &cs[j]);
    let h_ab = h(0, 1)?;
    let h_bc = h(1, 2)?;
    let h_ca = h(2, 0)?;
    let h_ab2 = h(3, 4)?;
    let h_bc2 = h(4, 5)?;
    let h_ca2 = h(5, 3)?;
    let h_aa = h(0, 3)?;
    let h_bb = h(1, 4)?;
    let h_cc = h(2, 5)?;
    for (n, p) in [
        ("H_AB", h_ab),
        ("H_BC", h_bc),
        ("H_CA", h_ca),
        ("H_A'B'", h_ab2),
        ("H_B'C'", h_bc2),
        ("H_C'A'", h_ca2),
        ("H_AA'", h_aa),
        ("H_BB'", h_bb),
        ("H_CC'", h_cc),
    ] {
        out.point(n, p);
    }
    if !bounded(&[h_ab, h_bc, h_ca, h_ab2, h_bc2, h_ca2, h_aa, h_bb, h_cc], 80.0) {
        return Err(Error::DegenerateInput);
    }
    if h_ab.dist(h_ab2) < 0.05 || h_bc.dist(h_bc2) < 0.05 || h_ca.dist(h_ca2) < 0.05 {
        return Err(Error::DegenerateInput);
    }
    let l1 = Line::through(h_ab, h_ab2)?;
    let l2 = Line::through(h_bc, h_bc2)?;
    let l3 = Line::through(h_ca, h_ca2)?;
    out.line("L_AB", l1);
    out.line("L_BC", l2);
    out.line("L_CA", l3);
    let va = ctx.probe_point(meet_lines(&l1, &l3)?);
    let vb = meet_lines(&l1, &l2)?;
    let vc = meet_lines(&l2, &l3)?;
    if !well_spread(&[va, vb, vc], 0.02, 120.0) {
        return Err(Error::DegenerateInput);
    }
    let tri_h = [va, vb, vc];
    let mut perspectors = vec![];
    for (name, base) in [
        ("homothety_triangle", [h_aa, h_bb, h_cc]),
        ("first_triangle", [t1.a, t1.b, t1.c]),
        ("second_triangle", [t2.a, t2.b, t2.c]),
    ] {
        out.relation(
            &format!("perspective_to_{name}"),
            Relation::Perspective(tri_h, base),
        );
        let p = meet_lines(
            &Line::through(tri_h[0], base[0])?,
            &Line::through(tri_h[1], base[1])?,
        )?;
        perspectors.push(p);
    }
    if !well_spread(&perspectors, 0.02, 200.0) {
        return Err(Error::DegenerateInput);
    }
    out.point("persp_1", perspectors[0]);
    out.point("persp_2", perspectors[1]);
    out.point("persp_3", perspectors[2]);
    out.relation("perspectors_collinear", Relation::Collinear(perspectors));
    Ok(out)
}

/// Parallel segments with prescribed midpoints: the fourth center line
/// passes through the common point of the other three.
fn s8_2(ctx: &mut BuildCtx) -> Result<Built> {
    // base quadrilateral with D sliding along the line CD
    let a = ctx.point_in_disk(1.2);
    let b = a + pt(ctx.range(1.0, 1.8), ctx.range(-0.4, 0.4));
    let c = a + pt(ctx.range(0.7, 1.4), ctx.range(0.9, 1.7));
    let d0 = a + pt(ctx.range(-0.8, -0.1), ctx.range(0.8, 1.5));
    let cd_dir = (d0 - c).unit();
    let affine = |p: Point, q: Point, x: Point| -> f64 {
        // parameter of x on the line p q
        (x - p).dot(q - p) / (q - p).norm2()
    };
    let chain = |d: Point| -> Result<(f64, f64, f64, f64, Point, Point)> {
        let p = meet_lines(&Line::through(a, b)?, &Line::through(c, d)?)?;
        let q = meet_lines(&Line::through(b, c)?, &Line::through(a, d)?)?;
        let s_p = affine(a, b, p);
        let t_p = affine(c, d, p);
        let s_q = affine(b, c, q);
        let t_q = affine(a, d, q);
        if [s_p, t_p, s_q, t_q]
            .iter()
            .any(|v| !v.is_finite() || v.abs() < 1e-3 || (v - 1.0).abs() < 1e-3)
        {
            return Err(Error::DegenerateInput);
        }
        Ok((s_p, t_p, s_q, t_q, p, q))
    };
    let mu = ctx.close_root(
        |m| {
            let d = d0 + cd_dir * m;
            match chain(d) {
                Ok((s_p, t_p, s_q, t_q, _, _)) => {
                    let bb = -(1.0 - s_p) / s_p;
                    let cc = -bb * (1.0 - s_q) / s_q;
                    let dd = -cc * (1.0 - t_p) / t_p;
                    (1.0 - t_q) + t_q * dd
                }
                Err(_) => f64::NAN,
            }
        },
        -1.0,
        1.0,
        56,
    )?;
    let d = d0 + cd_dir * mu;
    let (s_p, t_p, s_q, t_q, p, q) = chain(d)?;
    let bb = -(1.0 - s_p) / s_p;
    let cc = -bb * (1.0 - s_q) / s_q;
    let dd = -cc * (1.0 - t_p) / t_p;
    let closure_residual = ((1.0 - t_q) + t_q * dd).abs();
    let sigma = ctx.range(0.18, 0.32);
    // the parallel direction is the second closure parameter
    let build_lines = |theta: f64,
                       probe: Option<Point>|
     -> Result<(Line, Line, Line, Line, [Point; 8])> {
        let u = pt(theta.cos(), theta.sin());
        let offs = [sigma, sigma * bb, sigma * cc, sigma * dd];
        let mut ends = [pt(0.0, 0.0); 8];
        for (i, (m, o)) in [(a, offs[0]), (b, offs[1]), (c, offs[2]), (d, offs[3])]
            .iter()
            .enumerate()
        {
            ends[2 * i] = *m + u * *o;
            ends[2 * i + 1] = *m - u * *o;
        }
        if let Some(pa1) = probe {
            ends[0] = pa1;
        }
        let (a1, a2, b1, b2, c1, c2, d1, d2) = (
            ends[0], ends[1], ends[2], ends[3], ends[4], ends[5], ends[6], ends[7],
        );
        let omega_line = |x: Point,
                          s1: (Point, Point),
                          s2: (Point, Point),
                          perp_to: (Point, Point)|
         -> Result<Line> {
            let m1 = m_point_seg(x, s1.0, s1.1)?;
            let m2 = m_point_seg(x, s2.0, s2.1)?;
            let m3 = m_seg_seg(s1.0, s1.1, s2.0, s2.1)?;
            let center = crate::geom::circumcircle(m1, m2, m3)?.center;
            Ok(perp_to_join(center, perp_to)?)
        };
        let l_pbc = omega_line(p, (b1, b2), (c1, c2), (d, a))?;
        let l_pda = omega_line(p, (d1, d2), (a1, a2), (b, c))?;
        let l_qab = omega_line(q, (a1, a2), (b1, b2), (c, d))?;
        let l_qcd = omega_line(q, (c1, c2), (d1, d2), (a, b))?;
        Ok((l_pbc, l_pda, l_qab, l_qcd, ends))
    };
    let theta = ctx.close_root(
        |th| match build_lines(th, None) {
            Ok((l_pbc, l_pda, l_qab, _, _)) => match meet_lines(&l_pbc, &l_pda) {
                Ok(w) => l_qab.eval(w),
                Err(_) => f64::NAN,
            },
            Err(_) => f64::NAN,
        },
        0.08,
        std::f64::consts::PI - 0.08,
        48,
    )?;
    // probe one segment endpoint, breaking the midpoint hypothesis
    let u = pt(theta.cos(), theta.sin());
    let probe_a1 = ctx.probe_point(a + u * sigma);
    let (l_pbc, l_pda, l_qab, l_qcd, ends) =
        build_lines(theta, Some(probe_a1))?;
    let mut out = Built::new();
    for (n, x) in [("A", a), ("B", b), ("C", c), ("D", d), ("P", p), ("Q", q)] {
        out.point(n, x);
    }
    let names = ["A1", "A2", "B1", "B2", "C1", "C2", "D1", "D2"];
    for (n, x) in names.iter().zip(ends.iter()) {
        out.point(n, *x);
    }
    out.hypothesis("segment_system_closed", closure_residual);
    out.line("L_PBC", l_pbc);
    out.line("L_PDA", l_pda);
    out.line("L_QAB", l_qab);
    out.line("L_QCD", l_qcd);
    let w = meet_lines(&l_pbc, &l_pda)?;
    out.point("W", w);
    if !ctx.is_probe() {
        out.hypothesis("three_lines_concur", l_qab.eval(w).abs());
    }
    out.relation("fourth_line_through_w", Relation::PointOnLine(w, l_qcd));
    Ok(out)
}

// small wrapper so the closure above stays readable
fn perp_to_join(center: Point, through: (Point, Point)) -> Result<Line> {
    Ok(perpendicular_through(
        center,
        &Line::through(through.0, through.1)?,
    ))
}

/// Ratio-matched circles on a quadrilateral: one circle is tangent to all
/// four through-point tangent circles.
///
/// The four ratio conditions close by themselves (a Menelaus identity of
/// the complete quadrilateral), so the radii chain needs no root solve; the
/// probe breaks one radius instead.
fn s8_3(ctx: &mut BuildCtx) -> Result<Built> {
    let a = ctx.point_in_disk(1.3);
    let b = a + pt(ctx.range(1.2, 2.0), ctx.range(-0.3, 0.3));
    let c = b + pt(ctx.range(-0.4, 0.4), ctx.range(1.1, 1.9));
    let d = a + pt(ctx.range(-0.4, 0.4), ctx.range(1.0, 1.8));
    let p = meet_lines(&Line::through(a, b)?, &Line::through(c, d)?)?;
    let q = meet_lines(&Line::through(b, c)?, &Line::through(a, d)?)?;
    if !bounded(&[p, q], 30.0) {
        return Err(Error::DegenerateInput);
    }
    let r_a = 1.0f64;
    let r_b = r_a * p.dist(b) / p.dist(a);
    let r_c = r_b * q.dist(c) / q.dist(b);
    let r_d = r_c * p.dist(d) / p.dist(c);
    let mut radii = [r_a, r_b, r_c, r_d];
    // scale the radii well below the separations
    let pts = [a, b, c, d, p, q];
    let mut min_sep = f64::INFINITY;
    for i in 0..6 {
        for j in i + 1..6 {
            min_sep = min_sep.min(pts[i].dist(pts[j]));
        }
    }
    let max_r = radii.iter().fold(0.0f64, |m, r| m.max(*r));
    let scale = ctx.range(0.15, 0.22) * min_sep / max_r;
    for r in radii.iter_mut() {
        *r *= scale;
    }
    radii[3] = ctx.probe_scalar(radii[3] * 50.0) / 50.0;
    if radii[3] <= 1e-4 {
        return Err(Error::DegenerateInput);
    }
    let w_a = circle(a, radii[0]);
    let w_b = circle(b, radii[1]);
    let w_c = circle(c, radii[2]);
    let w_d = circle(d, radii[3]);
    let mut out = Built::new();
    for (n, w) in [("w_A", w_a), ("w_B", w_b), ("w_C", w_c), ("w_D", w_d)] {
        out.circle(n, w);
    }
    for (n, x) in [("P", p), ("Q", q)] {
        out.point(n, x);
    }
    if !ctx.is_probe() {
        let h1 = (p.dist(a) / p.dist(b) - w_a.r / w_b.r).abs();
        let h2 = (q.dist(d) / q.dist(a) - w_d.r / w_a.r).abs();
        out.hypothesis("ratio_conditions", h1.max(h2) * 1e-3);
    }
    // circle through the cross point containing the two adjacent circles
    let through_tangent = |x: Point, c1: &Circle, c2: &Circle| -> Result<Circle> {
        let sols = apollonius(&[
            Constraint::Through(x),
            Constraint::TangentCircle(*c1, TangencySign::Internal),
            Constraint::TangentCircle(*c2, TangencySign::Internal),
        ])?;
        sols.into_iter()
            .filter(|s| {
                s.center.dist(c1.center) + c1.r <= s.r + 1e-6
                    && s.center.dist(c2.center) + c2.r <= s.r + 1e-6
            })
            .min_by(|x1, x2| x1.r.total_cmp(&x2.r))
            .ok_or(Error::NoSolution)
    };
    let om_pbc = out.circle("Om_PBC", through_tangent(p, &w_b, &w_c)?);
    let om_qab = out.circle("Om_QAB", through_tangent(q, &w_a, &w_b)?);
    let om_qcd = out.circle("Om_QCD", through_tangent(q, &w_c, &w_d)?);
    let om_pda = out.circle("Om_PDA", through_tangent(p, &w_d, &w_a)?);
    let sols = apollonius(&[
        Constraint::TangentCircle(om_pbc, TangencySign::Any),
        Constraint::TangentCircle(om_qab, TangencySign::Any),
        Constraint::TangentCircle(om_qcd, TangencySign::Any),
    ])?;
    let band = om_pbc.r.max(om_qab.r).max(om_qcd.r) * 4.0;
    let w_m = sols
        .into_iter()
        .filter(|s| s.r > 1e-5 && s.r < band)
        .min_by(|x, y| {
            circle_tangency_residual(x, &om_pda).total_cmp(&circle_tangency_residual(y, &om_pda))
        })
        .ok_or(Error::NoSolution)?;
    out.circle("w_M", w_m);
    out.relation("tangent_to_fourth", Relation::TangentCircles(w_m, om_pda));
    Ok(out)
}

/// n angles around the circle with at least `min_gap` between neighbors.
fn spaced_angles(ctx: &mut BuildCtx, n: usize, min_gap: f64) -> Result<Vec<f64>> {
    let leftover = std::f64::consts::TAU - n as f64 * min_gap;
    if leftover <= 0.05 {
        return Err(Error::DegenerateInput);
    }
    let mut weights: Vec<f64> = (0..n).map(|_| ctx.range(0.05, 1.0)).collect();
    let total: f64 = weights.iter().sum();
    for w in weights.iter_mut() {
        *w = *w / total * leftover;
    }
    let rot = ctx.angle();
    let mut angles = vec![];
    let mut acc = rot;
    for w in weights {
        angles.push(acc);
        acc += min_gap + w;
    }
    Ok(angles)
}

struct TangentFamily {
    members: Vec<Circle>,
}

/// Circles tangent to two base circles, built in a concentric annulus and
/// carried over by a random inversion.
fn tangent_family(ctx: &mut BuildCtx, angles: &[f64], big_r: f64) -> Result<TangentFamily> {
    let r_t = (big_r - 1.0) / 2.0;
    let rho = (big_r + 1.0) / 2.0;
    let z0_angle = ctx.angle();
    let z0 = pt(z0_angle.cos(), z0_angle.sin()) * (big_r * ctx.range(1.25, 1.8));
    let power = ctx.range(1.0, 2.2);
    let mut members = vec![];
    for &phi in angles {
        let c = circle(pt(phi.cos(), phi.sin()) * rho, r_t);
        match invert_circle(z0, power, &c)? {
            CircleOrLine::Circle(ic) => members.push(ic),
            CircleOrLine::Line(_) => return Err(Error::DegenerateInput),
        }
    }
    Ok(TangentFamily { members })
}

/// Diagonal point of the quadrilateral bounded by the external tangents of
/// two circle pairs.
fn diagonal_point(c1: &Circle, c2: &Circle, c3: &Circle, c4: &Circle) -> Result<Point> {
    let t_first = common_tangent_lines(c1, c2, CommonTangentKind::External)?;
    let t_second = common_tangent_lines(c3, c4, CommonTangentKind::External)?;
    if t_first.len() != 2 || t_second.len() != 2 {
        return Err(Error::MissingTangents);
    }
    let v11 = meet_lines(&t_first[0], &t_second[0])?;
    let v12 = meet_lines(&t_first[0], &t_second[1])?;
    let v21 = meet_lines(&t_first[1], &t_second[0])?;
    let v22 = meet_lines(&t_first[1], &t_second[1])?;
    meet_lines(&Line::through(v11, v22)?, &Line::through(v12, v21)?)
}

/// Blow-up of the hexagon chord theorem: three diagonal points collinear.
fn s8_4(ctx: &mut BuildCtx) -> Result<Built> {
    let big_r = ctx.range(1.7, 2.2);
    let r_t = (big_r - 1.0) / 2.0;
    let rho = (big_r + 1.0) / 2.0;
    let min_gap = 2.0 * (r_t / rho).asin() + 0.1;
    let angles = spaced_angles(ctx, 6, min_gap)?;
    let fam = tangent_family(ctx, &angles, big_r)?;
    let mut out = Built::new();
    let mut members = fam.members;
    members[2] = circle(ctx.probe_point(members[2].center), members[2].r);
    for (i, c) in members.iter().enumerate() {
        out.circle(&format!("w_{}", ["A", "B", "C", "D", "E", "F"][i]), *c);
    }
    let p_ab_cd = diagonal_point(&members[0], &members[1], &members[2], &members[3])?;
    let p_bc_de = diagonal_point(&members[1], &members[2], &members[3], &members[4])?;
    let p_cd_ef = diagonal_point(&members[2], &members[3], &members[4], &members[5])?;
    out.point("P_AB_CD", p_ab_cd);
    out.point("P_BC_DE", p_bc_de);
    out.point("P_CD_EF", p_cd_ef);
    if !well_spread(&[p_ab_cd, p_bc_de, p_cd_ef], 0.02, 80.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "diagonal_points_collinear",
        Relation::Collinear(vec![p_ab_cd, p_bc_de, p_cd_ef]),
    );
    Ok(out)
}

/// Blow-up of the hexagon tangent theorem: the three cross joins of
/// diagonal points concur.
fn s8_5(ctx: &mut BuildCtx) -> Result<Built> {
    let big_r = ctx.range(1.28, 1.42);
    let r_t = (big_r - 1.0) / 2.0;
    let rho = (big_r + 1.0) / 2.0;
    let delta = 2.0 * (r_t / rho).asin();
    let bases = spaced_angles(ctx, 6, 2.0 * delta + 0.08)?;
    let mut angles = vec![];
    for b in &bases {
        angles.push(*b);
        angles.push(*b + delta);
    }
    let fam = tangent_family(ctx, &angles, big_r)?;
    let mut members = fam.members;
    members[0] = circle(ctx.probe_point(members[0].center), members[0].r);
    let mut out = Built::new();
    for (i, c) in members.iter().enumerate() {
        out.circle(&format!("w{}", i), *c);
    }
    let pair = |k: usize| (&members[2 * k], &members[2 * k + 1]);
    let diag = |i: usize, j: usize| -> Result<Point> {
        let (a1, a2) = pair(i);
        let (b1, b2) = pair(j);
        diagonal_point(a1, a2, b1, b2)
    };
    let p_ab = diag(0, 1)?;
    let p_bc = diag(1, 2)?;
    let p_cd = diag(2, 3)?;
    let p_de = diag(3, 4)?;
    let p_ef = diag(4, 5)?;
    let p_fa = diag(5, 0)?;
    for (n, x) in [
        ("P_AB", p_ab),
        ("P_BC", p_bc),
        ("P_CD", p_cd),
        ("P_DE", p_de),
        ("P_EF", p_ef),
        ("P_FA", p_fa),
    ] {
        out.point(n, x);
    }
    if p_ab.dist(p_de) < 0.05 || p_bc.dist(p_ef) < 0.05 || p_cd.dist(p_fa) < 0.05 {
        return Err(Error::DegenerateInput);
    }
    if !bounded(&[p_ab, p_bc, p_cd, p_de, p_ef, p_fa], 120.0) {
        return Err(Error::DegenerateInput);
    }
    out.relation(
        "main_diagonals_concurrent",
        Relation::Concurrent(vec![
            Line::through(p_ab, p_de)?,
            Line::through(p_bc, p_ef)?,
            Line::through(p_cd, p_fa)?,
        ]),
    );
    Ok(out)
}
