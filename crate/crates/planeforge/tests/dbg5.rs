use planeforge::circles::*;
use planeforge::geom::{circle, meet_circles, meet_lines, pt, Circle, Line, Point};

#[test]
fn dbg_s8_3_concurrency() {
    let a = pt(0.0, 0.0);
    let b = pt(1.6, 0.1);
    let c = pt(1.4, 1.5);
    let d = pt(-0.05, 1.42);
    let p = meet_lines(&Line::through(a, b).unwrap(), &Line::through(c, d).unwrap()).unwrap();
    let q = meet_lines(&Line::through(b, c).unwrap(), &Line::through(a, d).unwrap()).unwrap();
    // closed-ratio radii vs random radii
    let r_a = 1.0f64;
    let r_b = r_a * p.dist(b) / p.dist(a);
    let r_c = r_b * q.dist(c) / q.dist(b);
    let r_d = r_c * p.dist(d) / p.dist(c);
    let closure = (r_d * q.dist(a) / (r_a * q.dist(d))).ln();
    println!("closure residual (not closed here): {closure:.3}");
    for (tag, radii) in [
        ("chain", [r_a, r_b, r_c, r_d]),
        ("random", [1.0, 0.7, 1.3, 0.9]),
    ] {
        let scale = 0.18 * 0.9 / radii.iter().cloned().fold(0.0f64, f64::max);
        let w = [
            circle(a, radii[0] * scale),
            circle(b, radii[1] * scale),
            circle(c, radii[2] * scale),
            circle(d, radii[3] * scale),
        ];
        let tt = |x: Point, c1: &Circle, c2: &Circle| -> Circle {
            apollonius(&[
                Constraint::Through(x),
                Constraint::TangentCircle(*c1, TangencySign::Internal),
                Constraint::TangentCircle(*c2, TangencySign::Internal),
            ])
            .unwrap()
            .into_iter()
            .filter(|s| s.center.dist(c1.center) + c1.r <= s.r + 1e-6
                && s.center.dist(c2.center) + c2.r <= s.r + 1e-6)
            .min_by(|x1, x2| x1.r.total_cmp(&x2.r))
            .unwrap()
        };
        let oms = [tt(p, &w[1], &w[2]), tt(q, &w[0], &w[1]), tt(q, &w[2], &w[3]), tt(p, &w[3], &w[0])];
        // common point of the first two, checked on the others
        let cands = meet_circles(&oms[0], &oms[1]).unwrap();
        for cand in cands {
            let r2 = (cand.dist(oms[2].center) - oms[2].r).abs();
            let r3 = (cand.dist(oms[3].center) - oms[3].r).abs();
            if r2 < 0.05 {
              println!("{tag}: near-common point ({:.3},{:.3}) resid on третья {r2:.2e} fourth {r3:.2e}", cand.x, cand.y);
            }
        }
        let sols = apollonius(&[
            Constraint::TangentCircle(oms[0], TangencySign::Any),
            Constraint::TangentCircle(oms[1], TangencySign::Any),
            Constraint::TangentCircle(oms[2], TangencySign::Any),
        ]).unwrap();
        let best = sols.iter().filter(|s| s.r < 5.0)
            .map(|s| (circle_tangency_residual(s, &oms[3]), s.r))
            .min_by(|x, y| x.0.total_cmp(&y.0));
        println!("{tag}: best bounded candidate {:?}", best);
    }
}
