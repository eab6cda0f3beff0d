//! Scalar policy: tolerances, counter-based randomness, polynomial roots and
//! bracketed 1-D root finding.
//!
//! Everything here is pure; trial workers may call any of it concurrently.

use crate::error::{Error, Result};

/// Residual thresholds shared by every scenario.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    /// Residual below which a conclusion counts as satisfied.
    pub pass_tol: f64,
    /// Residual above which a conclusion counts as falsified; the probe
    /// margin must clear this for a PASS.
    pub fail_floor: f64,
    /// Sine of the smallest angle a generated triangle may have.
    pub degenerate_angle: f64,
    /// Relative separation below which two objects count as coincident.
    pub degenerate_sep: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            pass_tol: 1e-8,
            fail_floor: 1e-4,
            degenerate_angle: 15f64.to_radians().sin(),
            degenerate_sep: 1e-3,
        }
    }
}

impl Tolerance {
    pub fn new(pass_tol: f64, fail_floor: f64) -> Result<Self> {
        if !(0.0 < pass_tol && pass_tol < fail_floor && fail_floor < 1.0) {
            return Err(Error::InvalidParameter);
        }
        Ok(Self {
            pass_tol,
            fail_floor,
            ..Default::default()
        })
    }
}

/// Counter-based random stream: every draw is a pure function of
/// `(seed, trial, lane, draw_index)`, so the value sequence does not depend
/// on evaluation order or thread schedule.
#[derive(Clone, Copy, Debug)]
pub struct RandomStream {
    seed: u64,
    trial: u64,
    lane: u64,
    draw: u64,
}

fn mix64(mut z: u64) -> u64 {
    // splitmix64 finalizer
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

impl RandomStream {
    pub fn new(seed: u64, trial: u64) -> Self {
        Self::with_lane(seed, trial, 0)
    }

    /// Separate lanes give independent sub-streams (generation attempts,
    /// probe directions) without disturbing draw counters elsewhere.
    pub fn with_lane(seed: u64, trial: u64, lane: u64) -> Self {
        Self { seed, trial, lane, draw: 0 }
    }

    pub fn value_at(seed: u64, trial: u64, lane: u64, draw: u64) -> u64 {
        let a = mix64(seed ^ 0x9e3779b97f4a7c15);
        let b = mix64(a ^ trial.wrapping_mul(0xd1342543de82ef95));
        let c = mix64(b ^ lane.wrapping_mul(0xaf251af3b0f025b5));
        mix64(c ^ draw.wrapping_mul(0x2545f4914f6cdd1d))
    }

    pub fn next_u64(&mut self) -> u64 {
        let d = self.draw;
        self.draw += 1;
        Self::value_at(self.seed, self.trial, self.lane, d)
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn angle(&mut self) -> f64 {
        self.range(0.0, std::f64::consts::TAU)
    }

    pub fn sign(&mut self) -> f64 {
        if self.next_u64() & 1 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn poly_deriv_eval(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if k == 0 {
            break;
        }
        acc = acc * x + c * k as f64;
    }
    acc
}

fn newton_polish(coeffs: &[f64], mut x: f64) -> f64 {
    for _ in 0..3 {
        let f = poly_eval(coeffs, x);
        let df = poly_deriv_eval(coeffs, x);
        if df.abs() < 1e-300 {
            break;
        }
        let step = f / df;
        if !step.is_finite() {
            break;
        }
        x -= step;
    }
    x
}

fn solve_quadratic(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    // c2 x^2 + c1 x + c0
    let disc = c1 * c1 - 4.0 * c2 * c0;
    let scale = c1 * c1 + (4.0 * c2 * c0).abs();
    if disc < -1e-12 * scale.max(1e-300) {
        return vec![];
    }
    if disc <= 1e-12 * scale.max(1e-300) {
        // near-multiple roots collapse to a double root at the extremum
        let r = -c1 / (2.0 * c2);
        return vec![r, r];
    }
    let sq = disc.sqrt();
    let q = -0.5 * (c1 + c1.signum() * sq);
    let (r1, r2) = if q.abs() > 1e-300 {
        (q / c2, c0 / q)
    } else {
        (0.0, -c1 / c2)
    };
    let mut v = vec![r1, r2];
    v.sort_by(f64::total_cmp);
    v
}

fn solve_cubic(c0: f64, c1: f64, c2: f64, c3: f64) -> Vec<f64> {
    // depressed cubic t^3 + p t + q, x = t - b/(3a)
    let a = c2 / c3;
    let b = c1 / c3;
    let c = c0 / c3;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let scale = (q * q / 4.0).abs() + (p * p * p / 27.0).abs();
    let mut roots = if disc > 1e-14 * scale.max(1e-300) {
        let sq = disc.sqrt();
        let u = (-q / 2.0 + sq).cbrt();
        let v = (-q / 2.0 - sq).cbrt();
        vec![u + v + shift]
    } else if disc >= -1e-14 * scale.max(1e-300) {
        // multiple root boundary
        if q.abs() < 1e-300 && p.abs() < 1e-300 {
            vec![shift, shift, shift]
        } else {
            let u = (-q / 2.0).cbrt();
            vec![2.0 * u + shift, -u + shift, -u + shift]
        }
    } else {
        // three distinct real roots, trigonometric form
        let m = (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| {
                2.0 * m * (theta - std::f64::consts::TAU * k as f64 / 3.0).cos() + shift
            })
            .collect()
    };
    let coeffs = [c0, c1, c2, c3];
    for r in roots.iter_mut() {
        *r = newton_polish(&coeffs, *r);
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn solve_quartic(c0: f64, c1: f64, c2: f64, c3: f64, c4: f64) -> Vec<f64> {
    // depressed quartic t^4 + p t^2 + q t + r via the resolvent cubic,
    // each root polished on the original polynomial.
    let a3 = c3 / c4;
    let a2 = c2 / c4;
    let a1 = c1 / c4;
    let a0 = c0 / c4;
    let shift = -a3 / 4.0;
    let p = a2 - 3.0 * a3 * a3 / 8.0;
    let q = a1 - a3 * a2 / 2.0 + a3 * a3 * a3 / 8.0;
    let r = a0 - a3 * a1 / 4.0 + a3 * a3 * a2 / 16.0 - 3.0 * a3 * a3 * a3 * a3 / 256.0;
    let coeffs = [c0, c1, c2, c3, c4];
    let qscale = p.abs().max(q.abs()).max(r.abs()).max(1.0);
    let mut roots: Vec<f64> = if q.abs() < 1e-13 * qscale {
        // biquadratic
        let mut out = vec![];
        for u in solve_quadratic(r, p, 1.0) {
            if u > 1e-13 * qscale {
                out.push(u.sqrt() + shift);
                out.push(-u.sqrt() + shift);
            } else if u > -1e-13 * qscale {
                out.push(shift);
                out.push(shift);
            }
        }
        out
    } else {
        // resolvent: u^3 + 2p u^2 + (p^2-4r) u - q^2 = 0 has a positive root
        let res = solve_cubic(-q * q, p * p - 4.0 * r, 2.0 * p, 1.0);
        let u = res
            .into_iter()
            .filter(|u| *u > 0.0)
            .fold(f64::NAN, f64::max);
        if !u.is_finite() {
            return vec![];
        }
        let m = u.sqrt();
        let s1 = (p + u - q / m) / 2.0;
        let s2 = (p + u + q / m) / 2.0;
        let mut out = vec![];
        for t in solve_quadratic(s1, m, 1.0) {
            out.push(t + shift);
        }
        for t in solve_quadratic(s2, -m, 1.0) {
            out.push(t + shift);
        }
        out
    };
    for x in roots.iter_mut() {
        *x = newton_polish(&coeffs, *x);
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Real roots (with multiplicity) of a polynomial of degree at most four.
///
/// Coefficients are ascending: `coeffs[k]` multiplies `x^k`. Leading
/// coefficients within relative `1e-13` of zero are trimmed first.
pub fn solve_poly(coeffs: &[f64]) -> Result<Vec<f64>> {
    let maxc = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if maxc == 0.0 || coeffs.is_empty() {
        return Err(Error::AllCoefficientsZero);
    }
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.len() > 1 && c.last().unwrap().abs() <= 1e-13 * maxc {
        c.pop();
    }
    match c.len() {
        1 => Ok(vec![]), // nonzero constant
        2 => Ok(vec![-c[0] / c[1]]),
        3 => Ok(solve_quadratic(c[0], c[1], c[2])),
        4 => Ok(solve_cubic(c[0], c[1], c[2], c[3])),
        5 => Ok(solve_quartic(c[0], c[1], c[2], c[3], c[4])),
        _ => Err(Error::InvalidParameter),
    }
}

/// Brent's method on a bracketed root. Requires a sign change over
/// `[lo, hi]`; gives up after 200 iterations.
pub fn find_root_1d(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
        return Err(Error::NoSignChange);
    }
    let ftol = 1e-12 * fa.abs().max(fb.abs()).max(1.0);
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if fb.abs() <= ftol && (b - a).abs() < 1e-9 * (1.0 + b.abs()) {
            return Ok(b);
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 1e-15;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 && fb.abs() <= ftol {
            return Ok(b);
        }
        if xm.abs() <= tol1 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic / secant step
            let s = fb / fa;
            let (mut pp, mut qq) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if pp > 0.0 {
                qq = -qq;
            }
            pp = pp.abs();
            if 2.0 * pp < (3.0 * xm * qq - (tol1 * qq).abs()).min((e * qq).abs()) {
                e = d;
                d = pp / qq;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 {
            d
        } else {
            tol1 * xm.signum()
        };
        fb = f(b);
        if fb == 0.0 {
            return Ok(b);
        }
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    Err(Error::MaxIterationsExceeded(200))
}

/// Scans `[lo, hi]` in `n` steps and returns the first sub-interval where
/// `f` changes sign.
pub fn scan_bracket(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, n: usize) -> Option<(f64, f64)> {
    let mut prev_x = lo;
    let mut prev_f = f(lo);
    for k in 1..=n {
        let x = lo + (hi - lo) * k as f64 / n as f64;
        let fx = f(x);
        if prev_f.is_finite() && fx.is_finite() && prev_f != 0.0 && prev_f.signum() != fx.signum() {
            return Some((prev_x, x));
        }
        if fx == 0.0 {
            return Some((prev_x, x));
        }
        prev_x = x;
        prev_f = fx;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_roots(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len(), "root count {got:?} vs {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn quadratic_symmetric() {
        let r = solve_poly(&[-1.0, 0.0, 1.0]).unwrap();
        assert_roots(&r, &[-1.0, 1.0], 1e-12);
    }

    #[test]
    fn cubic_odd_symmetry() {
        let r = solve_poly(&[0.0, -1.0, 0.0, 1.0]).unwrap();
        assert_roots(&r, &[-1.0, 0.0, 1.0], 1e-12);
    }

    #[test]
    fn quartic_two_quadratic_factors() {
        // (x^2-1)(x^2-4) = x^4 - 5x^2 + 4, hand-checked factorisation
        let r = solve_poly(&[4.0, 0.0, -5.0, 0.0, 1.0]).unwrap();
        assert_roots(&r, &[-2.0, -1.0, 1.0, 2.0], 1e-10);
    }

    #[test]
    fn quartic_double_roots() {
        // (x+1)^2 (x-2)^2 = x^4 - 2x^3 - 3x^2 + 4x + 4
        let r = solve_poly(&[4.0, 4.0, -3.0, -2.0, 1.0]).unwrap();
        assert_roots(&r, &[-1.0, -1.0, 2.0, 2.0], 1e-6);
    }

    #[test]
    fn residual_bound_random_quartics() {
        let mut rng = RandomStream::new(7, 0);
        for _ in 0..500 {
            let coeffs: Vec<f64> = (0..5).map(|_| rng.range(-3.0, 3.0)).collect();
            let norm = coeffs.iter().map(|c| c * c).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue;
            }
            if let Ok(roots) = solve_poly(&coeffs) {
                for r in roots {
                    assert!(
                        poly_eval(&coeffs, r).abs() <= 1e-9 * norm.max(1.0),
                        "poly {coeffs:?} root {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn leading_trim() {
        let r = solve_poly(&[-2.0, 1.0, 1e-16]).unwrap();
        assert_roots(&r, &[2.0], 1e-12);
        assert_eq!(solve_poly(&[0.0, 0.0]), Err(Error::AllCoefficientsZero));
    }

    #[test]
    fn root_sqrt2() {
        let r = find_root_1d(|x| x * x - 2.0, 1.0, 2.0).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn root_cos() {
        let r = find_root_1d(f64::cos, 1.0, 2.0).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn root_cubic_vs_bisection_oracle() {
        let f = |x: f64| x * x * x - x - 2.0;
        // independent bisection oracle to 1e-12
        let (mut lo, mut hi) = (1.0f64, 2.0f64);
        for _ in 0..60 {
            let m = 0.5 * (lo + hi);
            if f(lo) * f(m) <= 0.0 {
                hi = m;
            } else {
                lo = m;
            }
        }
        let oracle = 0.5 * (lo + hi);
        let r = find_root_1d(f, 1.0, 2.0).unwrap();
        assert!((r - oracle).abs() < 1e-11);
        assert!((r - 1.5213797068045676).abs() < 1e-10);
    }

    #[test]
    fn root_invariant_under_bracket_refinement() {
        let f = |x: f64| (x - 0.7345).tanh() + 0.1 * (x - 0.7345);
        let r1 = find_root_1d(f, 0.0, 2.0).unwrap();
        let r2 = find_root_1d(f, 0.5, 1.0).unwrap();
        assert!((r1 - r2).abs() < 1e-10);
    }

    #[test]
    fn root_errors() {
        assert_eq!(
            find_root_1d(|x| x * x + 1.0, -1.0, 1.0),
            Err(Error::NoSignChange)
        );
    }

    #[test]
    fn stream_is_counter_based() {
        let mut a = RandomStream::new(42, 3);
        let seq: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let direct: Vec<u64> = (0..8).map(|d| RandomStream::value_at(42, 3, 0, d)).collect();
        assert_eq!(seq, direct);
        // identical (seed, trial) reproduce bit-for-bit
        let mut b = RandomStream::new(42, 3);
        let again: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_eq!(seq, again);
        // different trials decorrelate
        let mut c = RandomStream::new(42, 4);
        assert_ne!(seq[0], c.next_u64());
    }

    #[test]
    fn unit_draws_in_range() {
        let mut r = RandomStream::new(1, 1);
        for _ in 0..1000 {
            let u = r.unit();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn tolerance_invariant() {
        assert!(Tolerance::new(1e-8, 1e-4).is_ok());
        assert!(Tolerance::new(1e-4, 1e-8).is_err());
        assert!(Tolerance::new(0.0, 0.5).is_err());
    }
}
