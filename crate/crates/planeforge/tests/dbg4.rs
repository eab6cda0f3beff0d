use planeforge::circles::*;
use planeforge::geom::{circle, meet_lines, pt, Circle, Line, Point};

fn setup(probe: f64) -> ([Circle; 4], Point, Point) {
    let a = pt(0.0, 0.0);
    let b = pt(1.6, 0.1);
    let c = pt(1.4, 1.5);
    let d0 = pt(-0.1, 1.3);
    let slide = pt(0.3, 1.0).unit();
    let geom = |dpt: Point| -> (Point, Point, [f64; 4]) {
        let p = meet_lines(&Line::through(a, b).unwrap(), &Line::through(c, dpt).unwrap()).unwrap();
        let q = meet_lines(&Line::through(b, c).unwrap(), &Line::through(a, dpt).unwrap()).unwrap();
        let r_a = 1.0f64;
        let r_b = r_a * p.dist(b) / p.dist(a);
        let r_c = r_b * q.dist(c) / q.dist(b);
        let r_d = r_c * p.dist(dpt) / p.dist(c);
        (p, q, [r_a, r_b, r_c, r_d])
    };
    let f = |m: f64| {
        let d = d0 + slide * m;
        let (_, q, r) = geom(d);
        (r[3] * q.dist(a) / (r[0] * q.dist(d))).ln()
    };
    let (mut lo, mut hi) = (-0.9f64, 0.9f64);
    let mut flo = f(lo);
    for k in 1..=60 {
        let x = -0.9 + 1.8 * k as f64 / 60.0;
        let fx = f(x);
        if flo.is_finite() && fx.is_finite() && flo.signum() != fx.signum() { hi = x; break; }
        lo = x; flo = fx;
    }
    for _ in 0..80 { let m = 0.5*(lo+hi); if f(lo)*f(m) <= 0.0 { hi = m } else { lo = m } }
    let mu = 0.5*(lo+hi);
    let d = d0 + slide * mu + pt(probe, probe*0.4);
    let (p, q, mut radii) = geom(d);
    let scale = 0.2 * 0.9 / radii.iter().cloned().fold(0.0f64, f64::max);
    for r in radii.iter_mut() { *r *= scale; }
    ([circle(a, radii[0]), circle(b, radii[1]), circle(c, radii[2]), circle(d, radii[3])], p, q)
}

#[test]
fn dbg_s8_3_combos() {
    for probe in [0.0, 0.04] {
        let (w, p, q) = setup(probe);
        let through_tangent_all = |x: Point, c1: &Circle, c2: &Circle| -> Vec<Circle> {
            apollonius(&[
                Constraint::Through(x),
                Constraint::TangentCircle(*c1, TangencySign::Any),
                Constraint::TangentCircle(*c2, TangencySign::Any),
            ]).unwrap()
        };
        let s_pbc = through_tangent_all(p, &w[1], &w[2]);
        let s_qab = through_tangent_all(q, &w[0], &w[1]);
        let s_qcd = through_tangent_all(q, &w[2], &w[3]);
        let s_pda = through_tangent_all(p, &w[3], &w[0]);
        println!("probe={probe} counts {} {} {} {}", s_pbc.len(), s_qab.len(), s_qcd.len(), s_pda.len());
        let mut best: Vec<(f64, f64, usize, usize, usize, usize)> = vec![];
        for (i1, o1) in s_pbc.iter().enumerate() {
            for (i2, o2) in s_qab.iter().enumerate() {
                for (i3, o3) in s_qcd.iter().enumerate() {
                    for (i4, o4) in s_pda.iter().enumerate() {
                        let sols = apollonius(&[
                            Constraint::TangentCircle(*o1, TangencySign::Any),
                            Constraint::TangentCircle(*o2, TangencySign::Any),
                            Constraint::TangentCircle(*o3, TangencySign::Any),
                        ]).unwrap();
                        for s in sols {
                            if s.r < 0.05 || s.r > 50.0 { continue; } // skip point/line branches
                            let r4 = circle_tangency_residual(&s, o4);
                            best.push((r4, s.r, i1, i2, i3, i4));
                        }
                    }
                }
            }
        }
        best.sort_by(|x, y| x.0.total_cmp(&y.0));
        for b in best.iter().take(5) {
            println!("  resid4 {:.2e} r {:.3} combo {:?}", b.0, b.1, (b.2, b.3, b.4, b.5));
        }
    }
}
