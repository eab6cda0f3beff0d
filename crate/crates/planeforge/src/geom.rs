//! Points, lines, circles, primitive constructions and transforms.
//!
//! Lines are kept with a unit normal and a canonical sign so that two equal
//! lines have (nearly) equal coefficient triples.

use crate::error::{Error, Result};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

pub fn pt(x: f64, y: f64) -> Point {
    Point { x, y }
}

impl Point {
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
    pub fn norm2(self) -> f64 {
        self.x * self.x + self.y * self.y
    }
    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }
    /// Counter-clockwise rotation by a quarter turn.
    pub fn perp(self) -> Point {
        pt(-self.y, self.x)
    }
    pub fn unit(self) -> Point {
        let n = self.norm();
        pt(self.x / n, self.y / n)
    }
    pub fn rotated(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        pt(c * self.x - s * self.y, s * self.x + c * self.y)
    }
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        pt(self.x + o.x, self.y + o.y)
    }
}
impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        pt(self.x - o.x, self.y - o.y)
    }
}
impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        pt(self.x * k, self.y * k)
    }
}
impl Div<f64> for Point {
    type Output = Point;
    fn div(self, k: f64) -> Point {
        pt(self.x / k, self.y / k)
    }
}
impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        pt(-self.x, -self.y)
    }
}

pub fn midpoint(p: Point, q: Point) -> Point {
    (p + q) * 0.5
}

/// Unsigned angle at `v` spanned by `p` and `q`, in `[0, pi]`.
pub fn angle_at(v: Point, p: Point, q: Point) -> f64 {
    let u = p - v;
    let w = q - v;
    u.cross(w).abs().atan2(u.dot(w))
}

/// Line ax + by + c = 0 with a^2 + b^2 = 1 and the first nonzero of (a, b)
/// positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Line> {
        let n = a.hypot(b);
        if n < 1e-300 {
            return Err(Error::DegenerateInput);
        }
        let (mut a, mut b, mut c) = (a / n, b / n, c / n);
        let flip = if a.abs() > 1e-12 { a < 0.0 } else { b < 0.0 };
        if flip {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    pub fn through(p: Point, q: Point) -> Result<Line> {
        if p.dist(q) < 1e-13 * (1.0 + p.norm() + q.norm()) {
            return Err(Error::CoincidentPoints);
        }
        let d = q - p;
        Line::new(-d.y, d.x, d.y * p.x - d.x * p.y)
    }

    pub fn through_dir(p: Point, dir: Point) -> Result<Line> {
        Line::new(-dir.y, dir.x, dir.y * p.x - dir.x * p.y)
    }

    /// Signed distance of `p` from the line.
    pub fn eval(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    pub fn direction(&self) -> Point {
        pt(-self.b, self.a)
    }

    pub fn normal(&self) -> Point {
        pt(self.a, self.b)
    }

    pub fn foot(&self, p: Point) -> Point {
        p - self.normal() * self.eval(p)
    }

    pub fn reflect_point(&self, p: Point) -> Point {
        p - self.normal() * (2.0 * self.eval(p))
    }

    pub fn reflect_line(&self, l: Line) -> Line {
        // reflect two points of l
        let p = l.foot(pt(0.0, 0.0));
        let q = p + l.direction();
        Line::through(self.reflect_point(p), self.reflect_point(q))
            .expect("reflected line is proper")
    }

    pub fn is_parallel(&self, o: &Line, tol: f64) -> bool {
        (self.a * o.b - self.b * o.a).abs() < tol
    }

    /// Parameter-space distance to another canonical line; used by the
    /// `same_line` relation.
    pub fn param_dist(&self, o: &Line) -> f64 {
        let d1 = (self.a - o.a).hypot(self.b - o.b).hypot(self.c - o.c);
        let d2 = (self.a + o.a).hypot(self.b + o.b).hypot(self.c + o.c);
        d1.min(d2)
    }
}

pub fn meet_lines(l1: &Line, l2: &Line) -> Result<Point> {
    let det = l1.a * l2.b - l1.b * l2.a;
    if det.abs() < 1e-12 {
        return Err(Error::ParallelLines);
    }
    Ok(pt(
        (l1.b * l2.c - l2.b * l1.c) / det,
        (l2.a * l1.c - l1.a * l2.c) / det,
    ))
}

#[derive(Clone, Copy, Debug)]
pub struct Circle {
    pub center: Point,
    pub r: f64,
}

pub fn circle(center: Point, r: f64) -> Circle {
    Circle { center, r }
}

impl Circle {
    /// Power of a point: d(P, center)^2 - r^2.
    pub fn power(&self, p: Point) -> f64 {
        (p - self.center).norm2() - self.r * self.r
    }

    pub fn point_at(&self, theta: f64) -> Point {
        self.center + pt(theta.cos(), theta.sin()) * self.r
    }

    /// Tangent line at a boundary point.
    pub fn tangent_at(&self, p: Point) -> Result<Line> {
        Line::through_dir(p, (p - self.center).perp())
    }
}

/// Line-circle intersection; tangency returns the touch point twice.
pub fn meet_line_circle(l: &Line, c: &Circle) -> Vec<Point> {
    let d = l.eval(c.center);
    let h2 = c.r * c.r - d * d;
    let tol = 1e-12 * c.r.max(1.0) * c.r.max(1.0);
    if h2 < -tol {
        return vec![];
    }
    let foot = c.center - l.normal() * d;
    if h2 <= tol {
        return vec![foot, foot];
    }
    let h = h2.sqrt();
    let t = l.direction();
    vec![foot + t * h, foot - t * h]
}

/// Circle-circle intersection; tangency returns the touch point twice.
pub fn meet_circles(c1: &Circle, c2: &Circle) -> Result<Vec<Point>> {
    let d = c1.center.dist(c2.center);
    if d < 1e-13 * (c1.r + c2.r + 1.0) {
        if (c1.r - c2.r).abs() < 1e-13 * (c1.r + c2.r + 1.0) {
            return Err(Error::IdenticalObjects);
        }
        return Ok(vec![]);
    }
    Ok(meet_line_circle(&radical_axis(c1, c2)?, c1))
}

pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<Circle> {
    let ab = b - a;
    let ac = c - a;
    let det = 2.0 * ab.cross(ac);
    let scale = ab.norm() * ac.norm();
    if det.abs() < 1e-13 * scale.max(1e-300) {
        return Err(Error::CollinearPoints);
    }
    let ab2 = ab.norm2();
    let ac2 = ac.norm2();
    let ux = (ac.y * ab2 - ab.y * ac2) / det;
    let uy = (ab.x * ac2 - ac.x * ab2) / det;
    let center = a + pt(ux, uy);
    Ok(circle(center, center.dist(a)))
}

pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<Line> {
    let d = c2.center - c1.center;
    if d.norm() < 1e-13 * (c1.r + c2.r + 1.0) {
        return Err(Error::ConcentricCircles);
    }
    let k1 = c1.center.norm2() - c1.r * c1.r;
    let k2 = c2.center.norm2() - c2.r * c2.r;
    Line::new(2.0 * d.x, 2.0 * d.y, k1 - k2)
}

/// External homothety center; at infinity (error) for equal radii.
pub fn external_homothety_center(c1: &Circle, c2: &Circle) -> Result<Point> {
    let dr = c2.r - c1.r;
    if dr.abs() < 1e-12 * (c1.r + c2.r) {
        return Err(Error::EqualCircles);
    }
    Ok((c1.center * c2.r - c2.center * c1.r) / dr)
}

pub fn internal_homothety_center(c1: &Circle, c2: &Circle) -> Point {
    (c1.center * c2.r + c2.center * c1.r) / (c1.r + c2.r)
}

/// Both tangent lines from an outside point; a boundary point gives the
/// tangent there twice.
pub fn tangents_from_point_circle(p: Point, c: &Circle) -> Result<Vec<Line>> {
    let d = p.dist(c.center);
    let tol = 1e-12 * (c.r + d).max(1.0);
    if d < c.r - tol {
        return Ok(vec![]);
    }
    if (d - c.r).abs() <= tol {
        let t = c.tangent_at(p)?;
        return Ok(vec![t, t]);
    }
    let u = (p - c.center) / d;
    let cos_a = c.r / d;
    let sin_a = (1.0 - cos_a * cos_a).max(0.0).sqrt();
    let mut out = vec![];
    for s in [1.0, -1.0] {
        let touch = c.center + pt(cos_a * u.x - s * sin_a * u.y, s * sin_a * u.x + cos_a * u.y) * c.r;
        out.push(Line::through(p, touch)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// transforms

pub fn reflect_in_point(center: Point, p: Point) -> Point {
    center * 2.0 - p
}

pub fn reflect_circle_in_line(l: &Line, c: &Circle) -> Circle {
    circle(l.reflect_point(c.center), c.r)
}

pub fn reflect_circle_in_point(center: Point, c: &Circle) -> Circle {
    circle(reflect_in_point(center, c.center), c.r)
}

pub fn rotate_about(center: Point, theta: f64, p: Point) -> Point {
    center + (p - center).rotated(theta)
}

pub fn homothety(center: Point, k: f64, p: Point) -> Point {
    center + (p - center) * k
}

/// Inversion image of a point.
pub fn invert_point(center: Point, power: f64, p: Point) -> Result<Point> {
    let d2 = (p - center).norm2();
    if d2 < 1e-24 {
        return Err(Error::InvertThroughCenter);
    }
    Ok(center + (p - center) * (power / d2))
}

#[derive(Clone, Copy, Debug)]
pub enum CircleOrLine {
    Circle(Circle),
    Line(Line),
}

/// Inversion image of a circle: a circle, or a line when the circle passes
/// through the inversion center.
pub fn invert_circle(center: Point, power: f64, c: &Circle) -> Result<CircleOrLine> {
    let d = c.center - center;
    let s = d.norm2() - c.r * c.r; // power of the inversion center wrt c
    if s.abs() < 1e-12 * (c.r * c.r + d.norm2()).max(1e-300) {
        // image is a line perpendicular to d
        let p1 = meet_line_circle(&Line::through_dir(c.center, d.perp())?, c);
        let q1 = invert_point(center, power, p1[0])?;
        let q2 = invert_point(center, power, p1[1])?;
        return Ok(CircleOrLine::Line(Line::through(q1, q2)?));
    }
    let k = power / s;
    Ok(CircleOrLine::Circle(circle(center + d * k, (k * c.r).abs())))
}

pub fn invert_line(center: Point, power: f64, l: &Line) -> Result<CircleOrLine> {
    let d = l.eval(center);
    if d.abs() < 1e-13 {
        return Ok(CircleOrLine::Line(*l));
    }
    // image circle passes through the inversion center
    let foot = l.foot(center);
    let q = invert_point(center, power, foot)?;
    Ok(CircleOrLine::Circle(circle(
        midpoint(center, q),
        q.dist(center) / 2.0,
    )))
}

// ---------------------------------------------------------------------------
// small constructions used everywhere

pub fn perpendicular_through(p: Point, l: &Line) -> Line {
    Line::through_dir(p, l.normal()).expect("unit normal")
}

pub fn parallel_through(p: Point, l: &Line) -> Line {
    Line::through_dir(p, l.direction()).expect("unit direction")
}

/// Internal angle-bisector line at `v` of the angle toward `p` and `q`.
pub fn internal_bisector(v: Point, p: Point, q: Point) -> Result<Line> {
    let d = (p - v).unit() + (q - v).unit();
    if d.norm() < 1e-12 {
        return Err(Error::DegenerateInput);
    }
    Line::through_dir(v, d)
}

pub fn external_bisector(v: Point, p: Point, q: Point) -> Result<Line> {
    let d = (p - v).unit() - (q - v).unit();
    if d.norm() < 1e-12 {
        return Err(Error::DegenerateInput);
    }
    Line::through_dir(v, d)
}

/// Among `candidates`, the one farthest from `known`; used to pick the
/// "second" intersection point.
fn farthest_from(candidates: Vec<Point>, known: Point) -> Result<Point> {
    candidates
        .into_iter()
        .max_by(|p, q| p.dist(known).total_cmp(&q.dist(known)))
        .ok_or(Error::NoSolution)
}

pub fn second_meet_line_circle(l: &Line, c: &Circle, known: Point) -> Result<Point> {
    farthest_from(meet_line_circle(l, c), known)
}

pub fn second_meet_circles(c1: &Circle, c2: &Circle, known: Point) -> Result<Point> {
    farthest_from(meet_circles(c1, c2)?, known)
}

/// Midpoint of the minor arc from `p` to `q`.
pub fn arc_midpoint_minor(c: &Circle, p: Point, q: Point) -> Point {
    let tp = (p - c.center).angle();
    let tq = (q - c.center).angle();
    let mut delta = tq - tp;
    while delta > std::f64::consts::PI {
        delta -= std::f64::consts::TAU;
    }
    while delta < -std::f64::consts::PI {
        delta += std::f64::consts::TAU;
    }
    c.point_at(tp + delta / 2.0)
}
