// probe-mode diagnostics for the tangent-quadruple scenario
use planeforge::circles::*;
use planeforge::geom::{circle, meet_lines, pt, Circle, Line, Point};

#[test]
fn dbg_s8_3() {
    // reproduce a closed instance manually
    let a = pt(0.0, 0.0);
    let b = pt(1.6, 0.1);
    let c = pt(1.4, 1.5);
    // find d on a sliding line so that the ratio chain closes
    let d0 = pt(-0.1, 1.3);
    let slide = pt(0.3, 1.0).unit();
    let geom = |dpt: Point| -> Option<(Point, Point, [f64; 4])> {
        let p = meet_lines(&Line::through(a, b).ok()?, &Line::through(c, dpt).ok()?).ok()?;
        let q = meet_lines(&Line::through(b, c).ok()?, &Line::through(a, dpt).ok()?).ok()?;
        let r_a = 1.0f64;
        let r_b = r_a * p.dist(b) / p.dist(a);
        let r_c = r_b * q.dist(c) / q.dist(b);
        let r_d = r_c * p.dist(dpt) / p.dist(c);
        Some((p, q, [r_a, r_b, r_c, r_d]))
    };
    let f = |m: f64| {
        let d = d0 + slide * m;
        match geom(d) {
            Some((_, q, r)) => (r[3] * q.dist(a) / (r[0] * q.dist(d))).ln(),
            None => f64::NAN,
        }
    };
    let (mut lo, mut hi) = (-0.9, 0.9);
    let mut flo = f(lo);
    for k in 1..=60 {
        let x = -0.9 + 1.8 * k as f64 / 60.0;
        let fx = f(x);
        if flo.is_finite() && fx.is_finite() && flo.signum() != fx.signum() {
            hi = x;
            break;
        }
        lo = x;
        flo = fx;
    }
    for _ in 0..80 {
        let m = 0.5 * (lo + hi);
        if f(lo) * f(m) <= 0.0 { hi = m } else { lo = m }
    }
    let mu = 0.5 * (lo + hi);
    println!("closure residual {:.2e}", f(mu));
    for probe in [0.0, 0.03] {
        let d = d0 + slide * mu + pt(probe, probe * 0.4);
        let (p, q, mut radii) = geom(d).unwrap();
        let scale = 0.2 * 0.9 / radii.iter().cloned().fold(0.0f64, f64::max);
        for r in radii.iter_mut() { *r *= scale; }
        let w = [circle(a, radii[0]), circle(b, radii[1]), circle(c, radii[2]), circle(d, radii[3])];
        let through_tangent = |x: Point, c1: &Circle, c2: &Circle| -> Circle {
            let sols = apollonius(&[
                Constraint::Through(x),
                Constraint::TangentCircle(*c1, TangencySign::Internal),
                Constraint::TangentCircle(*c2, TangencySign::Internal),
            ]).unwrap();
            sols.into_iter()
                .filter(|s| s.center.dist(c1.center) + c1.r <= s.r + 1e-6
                    && s.center.dist(c2.center) + c2.r <= s.r + 1e-6)
                .min_by(|x1, x2| x1.r.total_cmp(&x2.r))
                .unwrap()
        };
        let om_pbc = through_tangent(p, &w[1], &w[2]);
        let om_qab = through_tangent(q, &w[0], &w[1]);
        let om_qcd = through_tangent(q, &w[2], &w[3]);
        let om_pda = through_tangent(p, &w[3], &w[0]);
        let sols = apollonius(&[
            Constraint::TangentCircle(om_pbc, TangencySign::Any),
            Constraint::TangentCircle(om_qab, TangencySign::Any),
            Constraint::TangentCircle(om_qcd, TangencySign::Any),
        ]).unwrap();
        println!("probe={probe}: {} candidates", sols.len());
        let mut scored: Vec<(f64, f64, Point)> = sols.iter().map(|s| (circle_tangency_residual(s, &om_pda), s.r, s.center)).collect();
        scored.sort_by(|x, y| x.0.total_cmp(&y.0));
        for (res4, r, cen) in scored.iter().take(4) {
            println!("   resid4 {res4:.2e} r {r:.3} center ({:.3},{:.3}) dist to P {:.3} Q {:.3}",
                cen.x, cen.y, cen.dist(p), cen.dist(q));
        }
    }
}
