//! Triangle-derived objects: centers, tritangent circles, conjugations,
//! pedal and cevian structures, special lines, Morley and Napoleon
//! triangles.

use crate::error::{Error, Result};
use crate::geom::{
    circle, circumcircle, internal_bisector, meet_lines, midpoint, perpendicular_through, pt,
    Circle, Line, Point,
};

#[derive(Clone, Copy, Debug)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

pub fn tri(a: Point, b: Point, c: Point) -> Triangle {
    Triangle { a, b, c }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterKind {
    Centroid,
    Incenter,
    ExcenterA,
    ExcenterB,
    ExcenterC,
    Circumcenter,
    Orthocenter,
    NinePointCenter,
    Fermat1,
    Fermat2,
    Gergonne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TritangentKind {
    Incircle,
    ExcircleA,
    ExcircleB,
    ExcircleC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialLineKind {
    Euler,
    Simson(PointArg),
    SteinerOfPoint(PointArg),
}

/// Wrapper so the enum stays `Copy`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointArg(pub Point);
impl Eq for PointArg {}

impl Triangle {
    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    /// Side lengths (a, b, c) opposite the same-named vertices.
    pub fn side_lengths(&self) -> (f64, f64, f64) {
        (
            self.b.dist(self.c),
            self.c.dist(self.a),
            self.a.dist(self.b),
        )
    }

    pub fn side_a(&self) -> Result<Line> {
        Line::through(self.b, self.c)
    }
    pub fn side_b(&self) -> Result<Line> {
        Line::through(self.c, self.a)
    }
    pub fn side_c(&self) -> Result<Line> {
        Line::through(self.a, self.b)
    }

    pub fn signed_area(&self) -> f64 {
        (self.b - self.a).cross(self.c - self.a) / 2.0
    }

    pub fn min_angle(&self) -> f64 {
        let [a, b, c] = self.vertices();
        crate::geom::angle_at(a, b, c)
            .min(crate::geom::angle_at(b, c, a))
            .min(crate::geom::angle_at(c, a, b))
    }

    pub fn check_nondegenerate(&self) -> Result<()> {
        let (a, b, c) = self.side_lengths();
        if self.signed_area().abs() < 1e-13 * a.max(b).max(c).powi(2) {
            return Err(Error::DegenerateTriangle);
        }
        Ok(())
    }

    /// Barycentric coordinates of a point (normalized to sum 1).
    pub fn barycentric(&self, p: Point) -> (f64, f64, f64) {
        let area = self.signed_area();
        let wa = (self.b - p).cross(self.c - p) / 2.0 / area;
        let wb = (self.c - p).cross(self.a - p) / 2.0 / area;
        let wc = 1.0 - wa - wb;
        (wa, wb, wc)
    }

    pub fn from_barycentric(&self, w: (f64, f64, f64)) -> Point {
        let s = w.0 + w.1 + w.2;
        (self.a * w.0 + self.b * w.1 + self.c * w.2) / s
    }
}

pub fn centroid(t: &Triangle) -> Point {
    (t.a + t.b + t.c) / 3.0
}

pub fn circumcenter(t: &Triangle) -> Result<Point> {
    Ok(circumcircle(t.a, t.b, t.c)?.center)
}

pub fn orthocenter(t: &Triangle) -> Result<Point> {
    let o = circumcenter(t)?;
    Ok(t.a + t.b + t.c - o * 2.0)
}

pub fn orthocenter_of(a: Point, b: Point, c: Point) -> Result<Point> {
    orthocenter(&tri(a, b, c))
}

pub fn incenter(t: &Triangle) -> Point {
    let (a, b, c) = t.side_lengths();
    (t.a * a + t.b * b + t.c * c) / (a + b + c)
}

pub fn incenter_of(a: Point, b: Point, c: Point) -> Point {
    incenter(&tri(a, b, c))
}

/// Excenter opposite vertex 0/1/2 of the triangle.
pub fn excenter(t: &Triangle, opposite: usize) -> Point {
    let (a, b, c) = t.side_lengths();
    let mut w = [a, b, c];
    w[opposite] = -w[opposite];
    (t.a * w[0] + t.b * w[1] + t.c * w[2]) / (w[0] + w[1] + w[2])
}

pub fn ninepoint_center(t: &Triangle) -> Result<Point> {
    Ok(midpoint(circumcenter(t)?, orthocenter(t)?))
}

pub fn ninepoint_circle(t: &Triangle) -> Result<Circle> {
    circumcircle(
        midpoint(t.b, t.c),
        midpoint(t.c, t.a),
        midpoint(t.a, t.b),
    )
}

/// Apex of the equilateral triangle erected on (p, q); `outward` is measured
/// against the third point `other`.
fn equilateral_apex(p: Point, q: Point, other: Point, outward: bool) -> Point {
    let side = Line::through(p, q).expect("triangle side");
    let rot = std::f64::consts::FRAC_PI_3;
    let cand1 = p + (q - p).rotated(rot);
    let cand2 = p + (q - p).rotated(-rot);
    let same1 = side.eval(cand1) * side.eval(other) > 0.0;
    if same1 == !outward {
        cand1
    } else {
        cand2
    }
}

fn fermat_point(t: &Triangle, outward: bool) -> Result<Point> {
    t.check_nondegenerate()?;
    let apex_a = equilateral_apex(t.b, t.c, t.a, outward);
    let apex_b = equilateral_apex(t.c, t.a, t.b, outward);
    let apex_c = equilateral_apex(t.a, t.b, t.c, outward);
    let scale = t.a.dist(t.b).max(t.b.dist(t.c)).max(t.c.dist(t.a));
    let mut lines = vec![];
    for (v, apex) in [(t.a, apex_a), (t.b, apex_b), (t.c, apex_c)] {
        if v.dist(apex) < 1e-9 * scale {
            return Err(Error::FermatUndefined);
        }
        lines.push(Line::through(v, apex)?);
    }
    let p = meet_lines(&lines[0], &lines[1]).map_err(|_| Error::FermatUndefined)?;
    if lines[2].eval(p).abs() > 1e-7 * scale {
        return Err(Error::FermatUndefined);
    }
    Ok(p)
}

/// First Fermat point: concurrency of the joins to the outward equilateral
/// apexes.
pub fn fermat1(t: &Triangle) -> Result<Point> {
    fermat_point(t, true)
}

/// Second Fermat point: the inward-erection concurrency, used uniformly
/// regardless of the angle sizes.
pub fn fermat2(t: &Triangle) -> Result<Point> {
    fermat_point(t, false)
}

pub fn gergonne_point(t: &Triangle) -> Result<Point> {
    let (_, touch) = tritangent_circle(TritangentKind::Incircle, t)?;
    let la = Line::through(t.a, touch[0])?;
    let lb = Line::through(t.b, touch[1])?;
    meet_lines(&la, &lb)
}

pub fn triangle_center(kind: CenterKind, t: &Triangle) -> Result<Point> {
    t.check_nondegenerate()?;
    match kind {
        CenterKind::Centroid => Ok(centroid(t)),
        CenterKind::Incenter => Ok(incenter(t)),
        CenterKind::ExcenterA => Ok(excenter(t, 0)),
        CenterKind::ExcenterB => Ok(excenter(t, 1)),
        CenterKind::ExcenterC => Ok(excenter(t, 2)),
        CenterKind::Circumcenter => circumcenter(t),
        CenterKind::Orthocenter => orthocenter(t),
        CenterKind::NinePointCenter => ninepoint_center(t),
        CenterKind::Fermat1 => fermat1(t),
        CenterKind::Fermat2 => fermat2(t),
        CenterKind::Gergonne => gergonne_point(t),
    }
}

/// Incircle or an excircle together with its touch points on the side
/// lines BC, CA, AB (in that order).
pub fn tritangent_circle(kind: TritangentKind, t: &Triangle) -> Result<(Circle, [Point; 3])> {
    t.check_nondegenerate()?;
    let center = match kind {
        TritangentKind::Incircle => incenter(t),
        TritangentKind::ExcircleA => excenter(t, 0),
        TritangentKind::ExcircleB => excenter(t, 1),
        TritangentKind::ExcircleC => excenter(t, 2),
    };
    let sides = [t.side_a()?, t.side_b()?, t.side_c()?];
    let r = sides[0].eval(center).abs();
    let touch = [
        sides[0].foot(center),
        sides[1].foot(center),
        sides[2].foot(center),
    ];
    Ok((circle(center, r), touch))
}

/// Isogonal conjugate via the barycentric map (a^2/x : b^2/y : c^2/z).
/// The reflected-cevian construction is the independent check in the test
/// suite.
pub fn isogonal_conjugate(p: Point, t: &Triangle) -> Result<Point> {
    t.check_nondegenerate()?;
    let (x, y, z) = t.barycentric(p);
    let scale = t.a.dist(t.b).max(t.b.dist(t.c)).max(t.c.dist(t.a));
    for side in [t.side_a()?, t.side_b()?, t.side_c()?] {
        if side.eval(p).abs() < 1e-10 * scale {
            return Err(Error::PointOnSideline);
        }
    }
    let (a, b, c) = t.side_lengths();
    let w = (a * a / x, b * b / y, c * c / z);
    let s = w.0 + w.1 + w.2;
    let wmax = w.0.abs().max(w.1.abs()).max(w.2.abs());
    if s.abs() < 1e-10 * wmax {
        return Err(Error::ConjugateAtInfinity);
    }
    Ok(t.from_barycentric(w))
}

/// Feet of the perpendiculars from `p` to the side lines (a pedal triangle).
pub fn pedal_triangle(p: Point, t: &Triangle) -> Result<Triangle> {
    t.check_nondegenerate()?;
    Ok(tri(
        t.side_a()?.foot(p),
        t.side_b()?.foot(p),
        t.side_c()?.foot(p),
    ))
}

pub fn pedal_circle(p: Point, t: &Triangle) -> Result<Circle> {
    let ped = pedal_triangle(p, t)?;
    circumcircle(ped.a, ped.b, ped.c).map_err(|_| Error::DegeneratePedal)
}

pub fn cevian_triangle(p: Point, t: &Triangle) -> Result<Triangle> {
    t.check_nondegenerate()?;
    let fa = meet_lines(&Line::through(t.a, p)?, &t.side_a()?)
        .map_err(|_| Error::CevianParallel)?;
    let fb = meet_lines(&Line::through(t.b, p)?, &t.side_b()?)
        .map_err(|_| Error::CevianParallel)?;
    let fc = meet_lines(&Line::through(t.c, p)?, &t.side_c()?)
        .map_err(|_| Error::CevianParallel)?;
    Ok(tri(fa, fb, fc))
}

pub fn cevian_circle(p: Point, t: &Triangle) -> Result<Circle> {
    let cev = cevian_triangle(p, t)?;
    circumcircle(cev.a, cev.b, cev.c)
}

pub fn euler_line(t: &Triangle) -> Result<Line> {
    let o = circumcenter(t)?;
    let h = orthocenter(t)?;
    let scale = t.a.dist(t.b).max(t.b.dist(t.c)).max(t.c.dist(t.a));
    if o.dist(h) < 1e-9 * scale {
        return Err(Error::EquilateralEulerUndefined);
    }
    Line::through(o, h)
}

/// Simson line of a circumcircle point: the feet of the perpendiculars to
/// the three sides are collinear; the line joins the first two feet, and
/// the hypothesis check on the third foot is the caller's job in probe
/// contexts.
pub fn simson_line(p: Point, t: &Triangle) -> Result<Line> {
    let ped = pedal_triangle(p, t)?;
    Line::through(ped.a, ped.b)
}

/// Residual of the Simson precondition: how far the third pedal foot is
/// from the line of the first two.
pub fn simson_defect(p: Point, t: &Triangle) -> Result<f64> {
    let ped = pedal_triangle(p, t)?;
    let l = Line::through(ped.a, ped.b)?;
    let scale = ped.a.dist(ped.b).max(1e-12);
    Ok(l.eval(ped.c).abs() / scale)
}

/// Steiner line of a circumcircle point: the Simson line scaled by two from
/// the point; it passes through the orthocenter.
pub fn steiner_line_of_point(p: Point, t: &Triangle) -> Result<Line> {
    let ped = pedal_triangle(p, t)?;
    let q1 = ped.a * 2.0 - p;
    let q2 = ped.b * 2.0 - p;
    Line::through(q1, q2)
}

pub fn special_line(kind: SpecialLineKind, t: &Triangle) -> Result<Line> {
    match kind {
        SpecialLineKind::Euler => euler_line(t),
        SpecialLineKind::Simson(PointArg(p)) => {
            let circ = circumcircle(t.a, t.b, t.c)?;
            if (p.dist(circ.center) - circ.r).abs() > 1e-6 * circ.r {
                return Err(Error::PointNotOnCircumcircle);
            }
            simson_line(p, t)
        }
        SpecialLineKind::SteinerOfPoint(PointArg(p)) => {
            let circ = circumcircle(t.a, t.b, t.c)?;
            if (p.dist(circ.center) - circ.r).abs() > 1e-6 * circ.r {
                return Err(Error::PointNotOnCircumcircle);
            }
            steiner_line_of_point(p, t)
        }
    }
}

/// Inner Morley triangle: pairwise intersections of adjacent angle
/// trisectors.
pub fn morley_triangle(t: &Triangle) -> Result<Triangle> {
    t.check_nondegenerate()?;
    let [a, b, c] = t.vertices();
    let orient = (t.b - t.a).cross(t.c - t.a).signum();
    // trisector of the angle at v adjacent to the side toward `toward`,
    // rotated into the interior
    let trisector = |v: Point, toward: Point, other: Point| -> Result<Line> {
        let ang = crate::geom::angle_at(v, toward, other);
        let s = (toward - v).cross(other - v).signum();
        Line::through_dir(v, (toward - v).rotated(s * ang / 3.0))
    };
    let _ = orient;
    let ma = meet_lines(&trisector(b, c, a)?, &trisector(c, b, a)?)?;
    let mb = meet_lines(&trisector(c, a, b)?, &trisector(a, c, b)?)?;
    let mc = meet_lines(&trisector(a, b, c)?, &trisector(b, a, c)?)?;
    Ok(tri(ma, mb, mc))
}

/// Napoleon triangle: centroids of the outward equilateral triangles.
pub fn napoleon_triangle(t: &Triangle) -> Result<Triangle> {
    t.check_nondegenerate()?;
    let na = (t.b + t.c + equilateral_apex(t.b, t.c, t.a, true)) / 3.0;
    let nb = (t.c + t.a + equilateral_apex(t.c, t.a, t.b, true)) / 3.0;
    let nc = (t.a + t.b + equilateral_apex(t.a, t.b, t.c, true)) / 3.0;
    Ok(tri(na, nb, nc))
}

/// Foot of the altitude from `v` onto the opposite side through `p`, `q`.
pub fn altitude_foot(v: Point, p: Point, q: Point) -> Result<Point> {
    let side = Line::through(p, q)?;
    Ok(side.foot(v))
}

/// Reflect the cevian line from each vertex in the internal bisector there;
/// used as the oracle for `isogonal_conjugate`.
pub fn isogonal_by_reflection(p: Point, t: &Triangle) -> Result<Point> {
    let [a, b, c] = t.vertices();
    let mut cevians = vec![];
    for (v, p1, p2) in [(a, b, c), (b, c, a), (c, a, b)] {
        let bis = internal_bisector(v, p1, p2)?;
        let cev = Line::through(v, p)?;
        cevians.push(bis.reflect_line(cev));
    }
    let q = meet_lines(&cevians[0], &cevians[1])?;
    Ok(q)
}

/// Concurrency defect of the third reflected cevian; the oracle residual.
pub fn isogonal_reflection_defect(p: Point, t: &Triangle) -> Result<f64> {
    let q = isogonal_by_reflection(p, t)?;
    let [a, b, c] = t.vertices();
    let bis = internal_bisector(c, a, b)?;
    let cev = Line::through(c, p)?;
    let third = bis.reflect_line(cev);
    let scale = a.dist(b).max(b.dist(c));
    Ok(third.eval(q).abs() / scale)
}

/// The tangent from `p` to `c` that differs from `avoid`.
pub fn second_tangent_line(p: Point, c: &Circle, avoid: &Line) -> Result<Line> {
    let ts = crate::geom::tangents_from_point_circle(p, c)?;
    ts.into_iter()
        .max_by(|l1, l2| l1.param_dist(avoid).total_cmp(&l2.param_dist(avoid)))
        .ok_or(Error::NoSolution)
        .and_then(|l| {
            if l.param_dist(avoid) < 1e-4 {
                Err(Error::AmbiguousSelection)
            } else {
                Ok(l)
            }
        })
}

/// Perpendicular dropped from a point to the line through two others.
pub fn drop_perpendicular(p: Point, a: Point, b: Point) -> Result<Line> {
    Ok(perpendicular_through(p, &Line::through(a, b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::angle_at;
    use crate::numeric::RandomStream;

    fn random_triangle(rng: &mut RandomStream) -> Triangle {
        loop {
            let t = tri(
                pt(rng.range(-1.5, 1.5), rng.range(-1.5, 1.5)),
                pt(rng.range(-1.5, 1.5), rng.range(-1.5, 1.5)),
                pt(rng.range(-1.5, 1.5), rng.range(-1.5, 1.5)),
            );
            if t.min_angle() > 15f64.to_radians() {
                return t;
            }
        }
    }

    #[test]
    fn equilateral_centers_coincide() {
        let t = tri(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, 3f64.sqrt() / 2.0));
        let want = pt(0.5, 3f64.sqrt() / 6.0);
        for kind in [
            CenterKind::Centroid,
            CenterKind::Incenter,
            CenterKind::Circumcenter,
            CenterKind::Fermat1,
        ] {
            let p = triangle_center(kind, &t).unwrap();
            assert!(p.dist(want) < 1e-9, "{kind:?} -> {p:?}");
        }
        // the inward erection degenerates for an equilateral triangle
        assert_eq!(fermat2(&t), Err(Error::FermatUndefined));
    }

    #[test]
    fn fermat_points_match_figure_coordinates() {
        let t = tri(pt(5.78, 3.38), pt(4.06, 0.54), pt(7.58, 0.28));
        let f1 = fermat1(&t).unwrap();
        let f2 = fermat2(&t).unwrap();
        assert!(f1.dist(pt(5.7201, 1.4315)) < 2e-3, "{f1:?}");
        assert!(f2.dist(pt(4.6638, 3.0500)) < 2e-3, "{f2:?}");
    }

    #[test]
    fn fermat1_sees_sides_at_120_degrees() {
        let mut rng = RandomStream::new(3, 0);
        let mut tested = 0;
        while tested < 200 {
            let t = random_triangle(&mut rng);
            // all angles below 120 degrees
            if t.min_angle() < 20f64.to_radians() {
                continue;
            }
            let [a, b, c] = t.vertices();
            let max_angle = angle_at(a, b, c).max(angle_at(b, c, a)).max(angle_at(c, a, b));
            if max_angle > 115f64.to_radians() {
                continue;
            }
            let f = fermat1(&t).unwrap();
            for (p, q) in [(a, b), (b, c), (c, a)] {
                assert!((angle_at(f, p, q) - 2.0 * std::f64::consts::FRAC_PI_3).abs() < 1e-8);
            }
            tested += 1;
        }
    }

    #[test]
    fn incircle_right_triangle() {
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(0.0, 3.0));
        assert!(incenter(&t).dist(pt(1.0, 1.0)) < 1e-12);
        let (c, touch) = tritangent_circle(TritangentKind::Incircle, &t).unwrap();
        assert!((c.r - 1.0).abs() < 1e-12);
        // touch on the horizontal side (AB, the side line y = 0) at (1, 0)
        assert!(touch[2].dist(pt(1.0, 0.0)) < 1e-12);
        // touch on the hypotenuse: the foot of the incenter on 3x + 4y = 12
        assert!(touch[0].dist(pt(1.6, 1.8)) < 1e-12);
    }

    #[test]
    fn excircle_radius_formula() {
        // r_A = area / (s - a) = 6 / (6 - 5) = 6 for the 3-4-5 triangle
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(0.0, 3.0));
        let (c, _) = tritangent_circle(TritangentKind::ExcircleA, &t).unwrap();
        assert!((c.r - 6.0).abs() < 1e-11, "r_A = {}", c.r);
        // tangent to all three side lines
        for side in [t.side_a().unwrap(), t.side_b().unwrap(), t.side_c().unwrap()] {
            assert!((side.eval(c.center).abs() - c.r).abs() < 1e-11);
        }
    }

    #[test]
    fn incircle_touch_points_set_midpoints_for_equilateral() {
        let t = tri(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, 3f64.sqrt() / 2.0));
        let (_, touch) = tritangent_circle(TritangentKind::Incircle, &t).unwrap();
        assert!(touch[0].dist(midpoint(t.b, t.c)) < 1e-12);
        assert!(touch[1].dist(midpoint(t.c, t.a)) < 1e-12);
        assert!(touch[2].dist(midpoint(t.a, t.b)) < 1e-12);
    }

    #[test]
    fn isogonal_classical_pairs() {
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0));
        let i = incenter(&t);
        assert!(isogonal_conjugate(i, &t).unwrap().dist(i) < 1e-10);
        let h = orthocenter(&t).unwrap();
        let o = circumcenter(&t).unwrap();
        assert!(isogonal_conjugate(h, &t).unwrap().dist(o) < 1e-10);
    }

    #[test]
    fn isogonal_formula_matches_reflection_oracle() {
        let mut rng = RandomStream::new(17, 0);
        let mut tested = 0;
        while tested < 100 {
            let t = random_triangle(&mut rng);
            let p = t.from_barycentric((
                rng.range(0.1, 0.8),
                rng.range(0.1, 0.8),
                rng.range(0.1, 0.8),
            ));
            let Ok(q) = isogonal_conjugate(p, &t) else {
                continue;
            };
            let oracle = isogonal_by_reflection(p, &t).unwrap();
            assert!(q.dist(oracle) < 1e-8 * (1.0 + q.norm()), "{q:?} vs {oracle:?}");
            assert!(isogonal_reflection_defect(p, &t).unwrap() < 1e-9);
            tested += 1;
        }
    }

    #[test]
    fn isogonal_is_involutive() {
        let mut rng = RandomStream::new(23, 0);
        let mut tested = 0;
        while tested < 100 {
            let t = random_triangle(&mut rng);
            let p = t.from_barycentric((
                rng.range(0.05, 1.0),
                rng.range(0.05, 1.0),
                rng.range(0.05, 1.0),
            ));
            let Ok(q) = isogonal_conjugate(p, &t) else {
                continue;
            };
            let Ok(back) = isogonal_conjugate(q, &t) else {
                continue;
            };
            assert!(back.dist(p) < 1e-8 * (1.0 + p.norm()));
            tested += 1;
        }
    }

    #[test]
    fn pedal_triangle_examples() {
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0));
        // circumcenter -> medial triangle
        let o = circumcenter(&t).unwrap();
        let ped = pedal_triangle(o, &t).unwrap();
        assert!(ped.a.dist(midpoint(t.b, t.c)) < 1e-12);
        assert!(ped.b.dist(midpoint(t.c, t.a)) < 1e-12);
        assert!(ped.c.dist(midpoint(t.a, t.b)) < 1e-12);
        // orthocenter -> orthic triangle (feet of the altitudes)
        let h = orthocenter(&t).unwrap();
        let orthic = pedal_triangle(h, &t).unwrap();
        assert!(orthic.a.dist(altitude_foot(t.a, t.b, t.c).unwrap()) < 1e-12);
        // circumcircle point -> collinear feet (Simson)
        let circ = circumcircle(t.a, t.b, t.c).unwrap();
        let p = circ.point_at(0.9);
        assert!(simson_defect(p, &t).unwrap() < 1e-10);
    }

    #[test]
    fn pedal_circles_of_isogonal_conjugates_coincide() {
        let mut rng = RandomStream::new(31, 0);
        let mut tested = 0;
        while tested < 50 {
            let t = random_triangle(&mut rng);
            let p = t.from_barycentric((
                rng.range(0.15, 0.7),
                rng.range(0.15, 0.7),
                rng.range(0.15, 0.7),
            ));
            let Ok(q) = isogonal_conjugate(p, &t) else {
                continue;
            };
            let (Ok(c1), Ok(c2)) = (pedal_circle(p, &t), pedal_circle(q, &t)) else {
                continue;
            };
            assert!(c1.center.dist(c2.center) + (c1.r - c2.r).abs() < 1e-8);
            tested += 1;
        }
    }

    #[test]
    fn cevian_triangle_examples() {
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0));
        let g = centroid(&t);
        let cev = cevian_triangle(g, &t).unwrap();
        assert!(cev.a.dist(midpoint(t.b, t.c)) < 1e-12);
        // gergonne point -> contact triangle
        let ge = gergonne_point(&t).unwrap();
        let cev = cevian_triangle(ge, &t).unwrap();
        let (_, touch) = tritangent_circle(TritangentKind::Incircle, &t).unwrap();
        assert!(cev.a.dist(touch[0]) < 1e-10);
        assert!(cev.b.dist(touch[1]) < 1e-10);
        assert!(cev.c.dist(touch[2]) < 1e-10);
        // incenter cevian foot divides BC by the bisector section formula
        let t2 = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(0.0, 3.0));
        let cev2 = cevian_triangle(incenter(&t2), &t2).unwrap();
        let side = t2.side_a().unwrap();
        assert!(side.eval(cev2.a).abs() < 1e-12);
        // |BA'| / |A'C| = c/b = 4/3 by the bisector section formula
        let ratio = cev2.a.dist(t2.b) / cev2.a.dist(t2.c);
        assert!((ratio - 4.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn euler_line_right_triangle() {
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(0.0, 3.0));
        let l = euler_line(&t).unwrap();
        // orthocenter is the right-angle vertex, circumcenter the hypotenuse midpoint
        assert!(l.eval(pt(0.0, 0.0)).abs() < 1e-12);
        assert!(l.eval(pt(2.0, 1.5)).abs() < 1e-12);
        assert!(l.eval(centroid(&t)).abs() < 1e-11);
        let eq = tri(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, 3f64.sqrt() / 2.0));
        assert_eq!(euler_line(&eq), Err(Error::EquilateralEulerUndefined));
    }

    #[test]
    fn simson_of_antipode_passes_midpoint() {
        let t = tri(pt(0.1, -0.2), pt(1.9, 0.3), pt(0.7, 1.8));
        let circ = circumcircle(t.a, t.b, t.c).unwrap();
        let antipode = circ.center * 2.0 - t.a;
        let l = special_line(SpecialLineKind::Simson(PointArg(antipode)), &t).unwrap();
        assert!(l.eval(midpoint(t.b, t.c)).abs() < 1e-10);
    }

    #[test]
    fn steiner_line_contains_orthocenter() {
        let mut rng = RandomStream::new(39, 0);
        for k in 0..40 {
            let t = random_triangle(&mut rng);
            let circ = circumcircle(t.a, t.b, t.c).unwrap();
            let p = circ.point_at(rng.angle() + k as f64);
            let l = special_line(SpecialLineKind::SteinerOfPoint(PointArg(p)), &t).unwrap();
            let h = orthocenter(&t).unwrap();
            assert!(l.eval(h).abs() < 1e-10 * circ.r.max(1.0));
        }
    }

    #[test]
    fn morley_triangle_is_equilateral() {
        let mut rng = RandomStream::new(41, 0);
        for _ in 0..60 {
            let t = random_triangle(&mut rng);
            let m = morley_triangle(&t).unwrap();
            let s1 = m.a.dist(m.b);
            let s2 = m.b.dist(m.c);
            let s3 = m.c.dist(m.a);
            let avg = (s1 + s2 + s3) / 3.0;
            assert!((s1 - avg).abs().max((s2 - avg).abs()).max((s3 - avg).abs()) < 1e-9 * avg);
        }
    }

    #[test]
    fn morley_side_length_formula() {
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0));
        let m = morley_triangle(&t).unwrap();
        let circ = circumcircle(t.a, t.b, t.c).unwrap();
        let [a, b, c] = t.vertices();
        let want = 8.0
            * circ.r
            * (angle_at(a, b, c) / 3.0).sin()
            * (angle_at(b, c, a) / 3.0).sin()
            * (angle_at(c, a, b) / 3.0).sin();
        assert!((m.a.dist(m.b) - want).abs() < 1e-9);
    }

    #[test]
    fn napoleon_triangle_properties() {
        let t = tri(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0));
        let n = napoleon_triangle(&t).unwrap();
        let s1 = n.a.dist(n.b);
        let s2 = n.b.dist(n.c);
        let s3 = n.c.dist(n.a);
        assert!((s1 - s2).abs().max((s2 - s3).abs()) < 1e-10);
        assert!(centroid(&n).dist(centroid(&t)) < 1e-10);
        let flat = tri(pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 1e-15));
        assert!(napoleon_triangle(&flat).is_err());
    }

    #[test]
    fn centers_satisfy_defining_incidences() {
        let mut rng = RandomStream::new(47, 0);
        for _ in 0..1000 {
            let t = random_triangle(&mut rng);
            let o = circumcenter(&t).unwrap();
            assert!((o.dist(t.a) - o.dist(t.b)).abs() < 1e-10);
            assert!((o.dist(t.a) - o.dist(t.c)).abs() < 1e-10);
            let h = orthocenter(&t).unwrap();
            assert!((h - t.a).dot(t.b - t.c).abs() < 1e-9);
            assert!((h - t.b).dot(t.c - t.a).abs() < 1e-9);
            let i = incenter(&t);
            let d1 = t.side_a().unwrap().eval(i).abs();
            let d2 = t.side_b().unwrap().eval(i).abs();
            let d3 = t.side_c().unwrap().eval(i).abs();
            assert!((d1 - d2).abs().max((d2 - d3).abs()) < 1e-11);
        }
    }

    #[test]
    fn second_fermat_of_near_equilateral_approaches_circumcircle() {
        // the equilateral degeneracy: F2 lands on (ABC)
        let eps = 1e-4;
        let t = tri(
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(0.5 + eps, 3f64.sqrt() / 2.0 - eps),
        );
        let f2 = fermat2(&t).unwrap();
        let circ = circumcircle(t.a, t.b, t.c).unwrap();
        assert!((f2.dist(circ.center) - circ.r).abs() < 1e-2);
    }
}
