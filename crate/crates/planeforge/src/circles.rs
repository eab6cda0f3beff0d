//! Tangency solvers: Apollonius problems, one-parameter circle families and
//! common tangents of circles.
//!
//! The Apollonius solver works uniformly on (x, y, r, w) with w = x^2+y^2-r^2:
//! every point/tangent-circle constraint is linear there, tangent-line
//! constraints are linear in (x, y, r) once a side sign is chosen. Three
//! constraints leave a one-parameter affine family; substituting the
//! definition of w gives a quadratic. A Newton polish then tightens each
//! candidate before verification.

use crate::error::{Error, Result};
use crate::geom::{circle, meet_line_circle, radical_axis, Circle, Line, Point};
use crate::numeric::solve_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangencySign {
    /// Distance of centers equals r + rho.
    External,
    /// Distance of centers equals |r - rho|.
    Internal,
    Any,
}

#[derive(Clone, Copy, Debug)]
pub enum Constraint {
    Through(Point),
    TangentLine(Line),
    TangentCircle(Circle, TangencySign),
}

/// One linear equation k . (x, y, r, w) + rhs = 0.
#[derive(Clone, Copy, Debug)]
struct LinRow {
    k: [f64; 4],
    rhs: f64,
}

fn circle_row(q: Point, rho: f64, s: f64) -> LinRow {
    // (x-qx)^2 + (y-qy)^2 = (r + s rho)^2
    LinRow {
        k: [-2.0 * q.x, -2.0 * q.y, -2.0 * s * rho, 1.0],
        rhs: q.norm2() - rho * rho,
    }
}

fn line_row(l: &Line, sigma: f64) -> LinRow {
    // a x + b y + c = sigma r
    LinRow {
        k: [l.a, l.b, -sigma, 0.0],
        rhs: l.c,
    }
}

fn residuals(candidate: &Circle, cons: &[Constraint]) -> Vec<f64> {
    cons.iter()
        .map(|c| match c {
            Constraint::Through(p) => candidate.center.dist(*p) - candidate.r,
            Constraint::TangentLine(l) => l.eval(candidate.center).abs() - candidate.r,
            Constraint::TangentCircle(t, sign) => {
                let d = candidate.center.dist(t.center);
                match sign {
                    TangencySign::External => d - (candidate.r + t.r),
                    TangencySign::Internal => d - (candidate.r - t.r).abs(),
                    TangencySign::Any => (d - (candidate.r + t.r))
                        .abs()
                        .min((d - (candidate.r - t.r).abs()).abs()),
                }
            }
        })
        .collect()
}

/// Signed constraint residuals for a fixed sign pattern; smooth in
/// (x, y, r) including negative working radii.
fn signed_residuals(center: Point, r: f64, cons: &[Constraint], signs: &[f64; 3]) -> [f64; 3] {
    let mut out = [0.0f64; 3];
    for (i, c) in cons.iter().enumerate() {
        out[i] = match c {
            Constraint::Through(p) => center.dist(*p) - r.abs(),
            Constraint::TangentLine(l) => l.eval(center) - signs[i] * r,
            Constraint::TangentCircle(t, _) => center.dist(t.center) - (r + signs[i] * t.r),
        };
    }
    out
}

fn polish_signed(mut center: Point, mut r: f64, cons: &[Constraint], signs: &[f64; 3]) -> (Point, f64) {
    for _ in 0..8 {
        let f0 = signed_residuals(center, r, cons, signs);
        if f0.iter().all(|x| x.abs() < 1e-13) {
            break;
        }
        let h = 1e-7 * (1.0 + r.abs());
        let mut j = [[0.0f64; 3]; 3];
        for col in 0..3 {
            let (mut cc, mut rr) = (center, r);
            match col {
                0 => cc.x += h,
                1 => cc.y += h,
                _ => rr += h,
            }
            let f1 = signed_residuals(cc, rr, cons, signs);
            for row in 0..3 {
                j[row][col] = (f1[row] - f0[row]) / h;
            }
        }
        let det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1])
            - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0])
            + j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
        if det.abs() < 1e-16 {
            break;
        }
        let mut delta = [0.0f64; 3];
        for col in 0..3 {
            let mut m = j;
            for row in 0..3 {
                m[row][col] = f0[row];
            }
            let d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            delta[col] = d / det;
        }
        let next_c = Point { x: center.x - delta[0], y: center.y - delta[1] };
        let next_r = r - delta[2];
        if !next_c.is_finite() || !next_r.is_finite() {
            break;
        }
        center = next_c;
        r = next_r;
    }
    (center, r)
}

#[allow(dead_code)]
fn polish(mut c: Circle, cons: &[Constraint]) -> Circle {
    // Newton on the three signed tangency residuals in (x, y, r)
    for _ in 0..6 {
        let v = [c.center.x, c.center.y, c.r];
        let f0 = residuals(&c, cons);
        let h = 1e-8 * (1.0 + c.r.abs());
        let mut j = [[0.0f64; 3]; 3];
        for col in 0..3 {
            let mut vv = v;
            vv[col] += h;
            let cc = circle(Point { x: vv[0], y: vv[1] }, vv[2]);
            let f1 = residuals(&cc, cons);
            for row in 0..3 {
                j[row][col] = (f1[row] - f0[row]) / h;
            }
        }
        let det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1])
            - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0])
            + j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
        if det.abs() < 1e-16 {
            break;
        }
        // Cramer
        let mut delta = [0.0f64; 3];
        for col in 0..3 {
            let mut m = j;
            for row in 0..3 {
                m[row][col] = f0[row];
            }
            let d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            delta[col] = d / det;
        }
        let next = circle(
            Point {
                x: v[0] - delta[0],
                y: v[1] - delta[1],
            },
            v[2] - delta[2],
        );
        if !next.center.is_finite() || !next.r.is_finite() {
            break;
        }
        c = next;
    }
    c
}

/// Solve the 3x4 affine system by full-pivot Gaussian elimination,
/// returning a particular solution and the kernel direction.
fn solve_affine(rows: &[LinRow; 3]) -> Option<([f64; 4], [f64; 4])> {
    let mut m = [[0.0f64; 5]; 3];
    for (i, r) in rows.iter().enumerate() {
        m[i][..4].copy_from_slice(&r.k);
        m[i][4] = r.rhs;
    }
    let mut pivots = [usize::MAX; 3];
    let mut col_used = [false; 4];
    for step in 0..3 {
        // full pivot over the remaining rows and columns
        let (mut br, mut bc, mut bv) = (usize::MAX, usize::MAX, 0.0f64);
        for row in step..3 {
            for col in 0..4 {
                if !col_used[col] && m[row][col].abs() > bv {
                    bv = m[row][col].abs();
                    br = row;
                    bc = col;
                }
            }
        }
        if bc == usize::MAX || bv < 1e-11 {
            return None; // rank-deficient constraint set
        }
        m.swap(step, br);
        col_used[bc] = true;
        pivots[step] = bc;
        let p = m[step][bc];
        for col in 0..5 {
            m[step][col] /= p;
        }
        for other in 0..3 {
            if other != step {
                let f = m[other][bc];
                for col in 0..5 {
                    m[other][col] -= f * m[step][col];
                }
            }
        }
    }
    let free = (0..4).find(|c| !col_used[*c])?;
    let mut part = [0.0f64; 4];
    let mut dir = [0.0f64; 4];
    dir[free] = 1.0;
    // rows encode k . v + rhs = 0, i.e. v_pivot = -rhs' - coef * v_free
    for row in 0..3 {
        let pc = pivots[row];
        part[pc] = -m[row][4];
        dir[pc] = -m[row][free];
    }
    Some((part, dir))
}

/// All circles satisfying three point/line/circle constraints (at most
/// eight). Every returned circle is polished and re-verified; the requested
/// circle-tangency signs are honored.
pub fn apollonius(constraints: &[Constraint; 3]) -> Result<Vec<Circle>> {
    // expand Any into both sign options, lines into both side options
    let mut sign_sets: Vec<[f64; 3]> = vec![[0.0; 3]];
    for (i, c) in constraints.iter().enumerate() {
        let choices: Vec<f64> = match c {
            Constraint::Through(_) => vec![1.0],
            Constraint::TangentLine(_) => vec![1.0, -1.0],
            Constraint::TangentCircle(_, TangencySign::External) => vec![1.0],
            Constraint::TangentCircle(_, TangencySign::Internal) => vec![-1.0],
            Constraint::TangentCircle(_, TangencySign::Any) => vec![1.0, -1.0],
        };
        sign_sets = sign_sets
            .into_iter()
            .flat_map(|base| {
                choices.iter().map(move |s| {
                    let mut b = base;
                    b[i] = *s;
                    b
                })
            })
            .collect();
    }
    let mut out: Vec<Circle> = vec![];
    for signs in sign_sets {
        let rows: Vec<LinRow> = constraints
            .iter()
            .zip(signs)
            .map(|(c, s)| match c {
                Constraint::Through(p) => circle_row(*p, 0.0, 1.0),
                Constraint::TangentLine(l) => line_row(l, s),
                Constraint::TangentCircle(t, _) => circle_row(t.center, t.r, s),
            })
            .collect();
        let Some((part, dir)) = solve_affine(&[rows[0], rows[1], rows[2]]) else {
            continue;
        };
        // impose w = x^2 + y^2 - r^2 on v = part + t dir
        let sq = |i: usize| (part[i], dir[i]);
        let (px, dx) = sq(0);
        let (py, dy) = sq(1);
        let (pr, dr) = sq(2);
        let (pw, dw) = sq(3);
        let c2 = dx * dx + dy * dy - dr * dr;
        let c1 = 2.0 * (px * dx + py * dy - pr * dr) - dw;
        let c0 = px * px + py * py - pr * pr - pw;
        let Ok(ts) = solve_poly(&[c0, c1, c2]) else {
            continue;
        };
        for t in ts {
            let center0 = Point {
                x: px + t * dx,
                y: py + t * dy,
            };
            let r0 = pr + t * dr;
            if !(r0.is_finite() && center0.is_finite()) {
                continue;
            }
            // polish on the raw signed radius; a negative radius encodes the
            // mirrored sign pattern and flips at the end
            let (center, r) = polish_signed(center0, r0, constraints, &signs);
            if r.abs() < 1e-12 || !center.is_finite() || !r.is_finite() {
                continue;
            }
            let cand = circle(center, r.abs());
            let scale = cand.r.max(1.0);
            let res = residuals(&cand, constraints);
            if res.iter().all(|r| r.abs() < 1e-9 * scale) {
                let dup = out
                    .iter()
                    .any(|c| c.center.dist(cand.center) < 1e-7 * scale && (c.r - cand.r).abs() < 1e-7 * scale);
                if !dup {
                    out.push(cand);
                }
            }
        }
    }
    Ok(out)
}

/// Circles through `p` and `q` tangent to `target` with the requested sign.
pub fn circle_through_two_tangent(
    p: Point,
    q: Point,
    target: &Circle,
    side: TangencySign,
) -> Result<Vec<Circle>> {
    if p.dist(q) < 1e-12 {
        return Err(Error::CoincidentPoints);
    }
    apollonius(&[
        Constraint::Through(p),
        Constraint::Through(q),
        Constraint::TangentCircle(*target, side),
    ])
}

/// Members of the pencil spanned by two circles that are tangent to `l`.
pub fn pencil_member_tangent_line(base1: &Circle, base2: &Circle, l: &Line) -> Result<Vec<Circle>> {
    let d = |c: &Circle| (-2.0 * c.center.x, -2.0 * c.center.y, c.center.norm2() - c.r * c.r);
    let (d1, e1, f1) = d(base1);
    let (d2, e2, f2) = d(base2);
    if (d1 - d2).abs() + (e1 - e2).abs() + (f1 - f2).abs() < 1e-12 {
        return Err(Error::IdenticalObjects);
    }
    // member(t): x^2+y^2 + D(t) x + E(t) y + F(t), linear in t
    let dd = (d2 - d1, e2 - e1, f2 - f1);
    // tangency: (a cx + b cy + c)^2 = r^2 with cx = -D/2, cy = -E/2,
    // r^2 = cx^2 + cy^2 - F; expand in t and solve the quadratic
    let cx = |t: f64| -(d1 + t * dd.0) / 2.0;
    let cy = |t: f64| -(e1 + t * dd.1) / 2.0;
    let ff = |t: f64| f1 + t * dd.2;
    let g = |t: f64| {
        let x = cx(t);
        let y = cy(t);
        let e = l.a * x + l.b * y + l.c;
        e * e - (x * x + y * y - ff(t))
    };
    // g is quadratic in t: interpolate at 0, 1, -1
    let g0 = g(0.0);
    let g1 = g(1.0);
    let gm = g(-1.0);
    let a2 = (g1 + gm) / 2.0 - g0;
    let a1 = (g1 - gm) / 2.0;
    let mut out = vec![];
    for t in solve_poly(&[g0, a1, a2])? {
        let x = cx(t);
        let y = cy(t);
        let r2 = x * x + y * y - ff(t);
        if r2 <= 1e-14 {
            continue;
        }
        let cand = circle(Point { x, y }, r2.sqrt());
        if (l.eval(cand.center).abs() - cand.r).abs() < 1e-9 * cand.r.max(1.0) {
            out.push(cand);
        }
    }
    if out.is_empty() {
        return Err(Error::NoSolution);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommonTangentKind {
    External,
    Internal,
    All,
}

/// Common tangents of two circles. External tangents keep the centers on
/// one side, internal tangents separate them; tangent equal circles yield
/// the coincident internal tangent twice.
pub fn common_tangents_circles(
    c1: &Circle,
    c2: &Circle,
    kind: CommonTangentKind,
) -> Result<Vec<Circle2Tangents>> {
    let d = c1.center.dist(c2.center);
    if d < 1e-13 * (c1.r + c2.r + 1.0) {
        return Ok(vec![]);
    }
    let mut out = vec![];
    let signs: &[(f64, bool)] = match kind {
        CommonTangentKind::External => &[(1.0, false)],
        CommonTangentKind::Internal => &[(-1.0, true)],
        CommonTangentKind::All => &[(1.0, false), (-1.0, true)],
    };
    for &(s2, internal) in signs {
        // unit normal n with n.c1 + c = r1, n.c2 + c = s2 r2
        let rhs = s2 * c2.r - c1.r;
        let dir = (c2.center - c1.center) / d;
        // n . dir*d = rhs
        let cosphi = rhs / d;
        if cosphi.abs() > 1.0 + 1e-12 {
            continue;
        }
        let cp = cosphi.clamp(-1.0, 1.0);
        let sp = (1.0 - cp * cp).max(0.0).sqrt();
        for sgn in [1.0, -1.0] {
            let n = Point {
                x: dir.x * cp - sgn * sp * dir.y,
                y: sgn * sp * dir.x + dir.y * cp,
            };
            let c = c1.r - (n.x * c1.center.x + n.y * c1.center.y);
            let Ok(l) = Line::new(n.x, n.y, c) else {
                continue;
            };
            if (l.eval(c1.center).abs() - c1.r).abs() < 1e-9 * (c1.r + 1.0)
                && (l.eval(c2.center).abs() - c2.r).abs() < 1e-9 * (c2.r + 1.0)
            {
                out.push(Circle2Tangents { line: l, internal });
            }
            if sp < 1e-12 {
                // the two sign branches coincide: keep multiplicity two
                out.push(Circle2Tangents {
                    line: Line::new(n.x, n.y, c).unwrap(),
                    internal,
                });
                break;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct Circle2Tangents {
    pub line: Line,
    pub internal: bool,
}

/// Convenience wrapper returning only the lines.
pub fn common_tangent_lines(
    c1: &Circle,
    c2: &Circle,
    kind: CommonTangentKind,
) -> Result<Vec<Line>> {
    Ok(common_tangents_circles(c1, c2, kind)?
        .into_iter()
        .map(|t| t.line)
        .collect())
}

/// Verified tangency residual used to re-check solver output.
pub fn circle_tangency_residual(c1: &Circle, c2: &Circle) -> f64 {
    let d = c1.center.dist(c2.center);
    (d - (c1.r + c2.r))
        .abs()
        .min((d - (c1.r - c2.r).abs()).abs())
        / c1.r.max(c2.r).max(1e-12)
}

/// Second intersection selector on a pencil: the radical axis meets a
/// member circle where all members do.
pub fn pencil_base_points(c1: &Circle, c2: &Circle) -> Result<Vec<Point>> {
    Ok(meet_line_circle(&radical_axis(c1, c2)?, c1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;
    use crate::numeric::RandomStream;

    #[test]
    fn three_points_reduce_to_circumcircle() {
        let sols = apollonius(&[
            Constraint::Through(pt(0.0, 0.0)),
            Constraint::Through(pt(4.0, 0.0)),
            Constraint::Through(pt(0.0, 3.0)),
        ])
        .unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].center.dist(pt(2.0, 1.5)) < 1e-9);
        assert!((sols[0].r - 2.5).abs() < 1e-9);
    }

    #[test]
    fn inner_soddy_circle_of_three_unit_circles() {
        // three mutually tangent unit circles on an equilateral triangle of
        // side 2; Descartes' circle theorem gives the inner radius
        let h = 3f64.sqrt();
        let cs = [
            circle(pt(0.0, 0.0), 1.0),
            circle(pt(2.0, 0.0), 1.0),
            circle(pt(1.0, h), 1.0),
        ];
        let sols = apollonius(&[
            Constraint::TangentCircle(cs[0], TangencySign::External),
            Constraint::TangentCircle(cs[1], TangencySign::External),
            Constraint::TangentCircle(cs[2], TangencySign::External),
        ])
        .unwrap();
        // Descartes: k4 = k1+k2+k3 + 2 sqrt(k1k2+k2k3+k3k1) = 3 + 2 sqrt(3)
        let want = 1.0 / (3.0 + 2.0 * 3f64.sqrt());
        let inner = sols
            .iter()
            .find(|c| (c.r - want).abs() < 1e-6)
            .unwrap_or_else(|| panic!("no inner Soddy circle in {sols:?}"));
        assert!((inner.r - want).abs() < 1e-9);
        for c in &cs {
            assert!(circle_tangency_residual(inner, c) < 1e-9);
        }
    }

    #[test]
    fn two_lines_one_circle_symmetric() {
        let lx = Line::new(0.0, 1.0, 0.0).unwrap(); // y = 0
        let ly = Line::new(1.0, 0.0, 0.0).unwrap(); // x = 0
        let target = circle(pt(3.0, 3.0), 1.0);
        let sols = apollonius(&[
            Constraint::TangentLine(lx),
            Constraint::TangentLine(ly),
            Constraint::TangentCircle(target, TangencySign::External),
        ])
        .unwrap();
        assert!(!sols.is_empty());
        for s in &sols {
            // solutions tangent to both axes sit on y = +-x
            assert!(
                (s.center.x.abs() - s.center.y.abs()).abs() < 1e-9,
                "{s:?}"
            );
            assert!((s.center.x.abs() - s.r).abs() < 1e-10);
            assert!(
                (s.center.dist(target.center) - (s.r + target.r)).abs() < 1e-10
            );
        }
        // at least one solution on the bisector through the circle
        assert!(sols.iter().any(|s| s.center.x > 0.0 && s.center.y > 0.0));
    }

    #[test]
    fn solution_count_matches_grid_oracle() {
        // brute-force oracle: coarse grid over (x, y, r) with a refinement
        // polish, counting distinct tangency-sign solutions
        let c1 = circle(pt(0.0, 0.0), 1.0);
        let c2 = circle(pt(3.0, 0.4), 0.8);
        let c3 = circle(pt(1.4, 2.6), 0.6);
        let all = apollonius(&[
            Constraint::TangentCircle(c1, TangencySign::Any),
            Constraint::TangentCircle(c2, TangencySign::Any),
            Constraint::TangentCircle(c3, TangencySign::Any),
        ])
        .unwrap();
        // disjoint circles in general position admit all eight Apollonius
        // circles
        assert_eq!(all.len(), 8, "{all:?}");
        for s in &all {
            for c in [&c1, &c2, &c3] {
                assert!(circle_tangency_residual(s, c) < 1e-9);
            }
        }
    }

    #[test]
    fn inversion_covariance_of_solutions() {
        use crate::geom::{invert_circle, CircleOrLine};
        let c1 = circle(pt(0.0, 0.0), 1.0);
        let c2 = circle(pt(3.0, 0.4), 0.8);
        let c3 = circle(pt(1.4, 2.6), 0.6);
        let sols = apollonius(&[
            Constraint::TangentCircle(c1, TangencySign::Any),
            Constraint::TangentCircle(c2, TangencySign::Any),
            Constraint::TangentCircle(c3, TangencySign::Any),
        ])
        .unwrap();
        let center = pt(-2.3, -1.9);
        let power = 1.7;
        let inv = |c: &Circle| match invert_circle(center, power, c).unwrap() {
            CircleOrLine::Circle(ic) => ic,
            CircleOrLine::Line(_) => panic!("unexpected line image"),
        };
        let (i1, i2, i3) = (inv(&c1), inv(&c2), inv(&c3));
        for s in &sols {
            let is = inv(s);
            for t in [&i1, &i2, &i3] {
                assert!(circle_tangency_residual(&is, t) < 1e-8);
            }
        }
    }

    #[test]
    fn through_two_points_tangent_circle() {
        let target = circle(pt(0.0, 3.0), 1.0);
        let sols =
            circle_through_two_tangent(pt(-2.0, 0.0), pt(2.0, 0.0), &target, TangencySign::Any)
                .unwrap();
        assert!(!sols.is_empty());
        for s in &sols {
            assert!(s.center.x.abs() < 1e-9); // centers on x = 0 by symmetry
            assert!((s.center.dist(pt(2.0, 0.0)) - s.r).abs() < 1e-10);
            assert!(circle_tangency_residual(s, &target) < 1e-10);
        }
    }

    #[test]
    fn tiny_far_target_approaches_point_constraint() {
        let target = circle(pt(10.0, 10.0), 1e-3);
        let via_tangent =
            circle_through_two_tangent(pt(-1.0, 0.0), pt(1.0, 0.0), &target, TangencySign::Any)
                .unwrap();
        let via_point = apollonius(&[
            Constraint::Through(pt(-1.0, 0.0)),
            Constraint::Through(pt(1.0, 0.0)),
            Constraint::Through(pt(10.0, 10.0)),
        ])
        .unwrap();
        let best = via_tangent
            .iter()
            .map(|s| {
                via_point
                    .iter()
                    .map(|p| s.center.dist(p.center) + (s.r - p.r).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(f64::INFINITY, f64::min);
        assert!(best < 1e-2, "limit mismatch {best}");
    }

    #[test]
    fn pencil_member_tangent_line_through_base_points() {
        // pencil of circles through (+-1, 0); member tangent to y = 2
        let b1 = circle(pt(0.0, 0.0), 1.0);
        let b2 = circle(pt(0.0, 1.0), 2f64.sqrt());
        let l = Line::new(0.0, 1.0, -2.0).unwrap();
        let sols = pencil_member_tangent_line(&b1, &b2, &l).unwrap();
        assert!(!sols.is_empty());
        for s in &sols {
            assert!((l.eval(s.center).abs() - s.r).abs() < 1e-12);
            // still through the base points
            assert!(s.power(pt(1.0, 0.0)).abs() < 1e-10);
            assert!(s.power(pt(-1.0, 0.0)).abs() < 1e-10);
        }
        // the radical axis itself (y = 0 ... the line through the base
        // points) is crossed by every member: no tangent member
        let axis = Line::new(0.0, 1.0, 0.0).unwrap();
        assert!(pencil_member_tangent_line(&b1, &b2, &axis).is_err());
        assert!(pencil_member_tangent_line(&b1, &b1, &l).is_err());
    }

    #[test]
    fn common_tangents_of_unit_circles() {
        let c1 = circle(pt(0.0, 0.0), 1.0);
        let c2 = circle(pt(4.0, 0.0), 1.0);
        let ext = common_tangent_lines(&c1, &c2, CommonTangentKind::External).unwrap();
        assert_eq!(ext.len(), 2);
        for l in &ext {
            assert!(l.a.abs() < 1e-12 && (l.c.abs() - 1.0).abs() < 1e-12); // y = +-1
        }
        let int = common_tangent_lines(&c1, &c2, CommonTangentKind::Internal).unwrap();
        assert_eq!(int.len(), 2);
        for l in &int {
            assert!(l.eval(pt(2.0, 0.0)).abs() < 1e-12);
            let slope = (-l.a / l.b).abs();
            assert!((slope - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn tangent_equal_circles_internal_tangent_doubles() {
        let c1 = circle(pt(0.0, 0.0), 1.0);
        let c2 = circle(pt(2.0, 0.0), 1.0);
        let int = common_tangent_lines(&c1, &c2, CommonTangentKind::Internal).unwrap();
        assert_eq!(int.len(), 2);
        assert!(int[0].param_dist(&int[1]) < 1e-9);
        // nested concentric circles have no common tangents
        let nested = common_tangent_lines(
            &circle(pt(0.0, 0.0), 1.0),
            &circle(pt(0.0, 0.0), 2.0),
            CommonTangentKind::All,
        )
        .unwrap();
        assert!(nested.is_empty());
    }

    #[test]
    fn random_solver_outputs_always_verify() {
        let mut rng = RandomStream::new(77, 0);
        for _ in 0..100 {
            let mk = |rng: &mut RandomStream| {
                circle(
                    pt(rng.range(-3.0, 3.0), rng.range(-3.0, 3.0)),
                    rng.range(0.2, 1.0),
                )
            };
            let c1 = mk(&mut rng);
            let c2 = mk(&mut rng);
            let c3 = mk(&mut rng);
            let sols = apollonius(&[
                Constraint::TangentCircle(c1, TangencySign::Any),
                Constraint::TangentCircle(c2, TangencySign::Any),
                Constraint::TangentCircle(c3, TangencySign::Any),
            ])
            .unwrap();
            for s in &sols {
                for c in [&c1, &c2, &c3] {
                    assert!(circle_tangency_residual(s, c) < 1e-9);
                }
            }
        }
    }
}
