use std::f64::consts::PI;

use crate::{Error, Result};

/// Monic cubic `λ³ + p2·λ² + p1·λ + p0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoeffs {
    pub p2: f64,
    pub p1: f64,
    pub p0: f64,
}

/// Roots this close to zero are snapped to exactly zero.
const ZERO_SNAP: f64 = 1e-9;

impl CubicCoeffs {
    pub const fn new(p2: f64, p1: f64, p0: f64) -> Self {
        CubicCoeffs { p2, p1, p0 }
    }

    /// Monic cubic with the given roots.
    pub fn from_roots(r: [f64; 3]) -> Self {
        CubicCoeffs {
            p2: -(r[0] + r[1] + r[2]),
            p1: r[0] * r[1] + r[0] * r[2] + r[1] * r[2],
            p0: -(r[0] * r[1] * r[2]),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.p2) * x + self.p1) * x + self.p0
    }

    fn derivative(&self, x: f64) -> f64 {
        (3.0 * x + 2.0 * self.p2) * x + self.p1
    }

    /// `18ABCD − 4B³D + B²C² − 4AC³ − 27A²D²` with `A = 1`.
    pub fn discriminant(&self) -> f64 {
        let (b, c, d) = (self.p2, self.p1, self.p0);
        18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * c * c * c - 27.0 * d * d
    }

    /// Slack on the discriminant: `1e-9 · max(1, ‖coeffs‖∞)³`.
    pub fn discriminant_tol(&self) -> f64 {
        let m = 1f64
            .max(self.p2.abs())
            .max(self.p1.abs())
            .max(self.p0.abs());
        1e-9 * m * m * m
    }
}

/// All three real roots, ascending, or `NoThreeRealRoots` when the
/// discriminant is below `-discriminant_tol()`.
pub fn solve_cubic_real(c: &CubicCoeffs) -> Result<[f64; 3]> {
    let discriminant = c.discriminant();
    if discriminant < -c.discriminant_tol() {
        return Err(Error::NoThreeRealRoots { discriminant });
    }
    Ok(real_roots_forced(c))
}

/// Three real roots assuming the discriminant is really nonnegative; a
/// slightly negative one is treated as a double root.
pub(crate) fn real_roots_forced(c: &CubicCoeffs) -> [f64; 3] {
    let shift = c.p2 / 3.0;
    // Depressed cubic t³ + p·t + q with λ = t − p2/3.
    let p = c.p1 - c.p2 * shift;
    let q = (2.0 * shift * shift - c.p1) * shift + c.p0;

    let depressed = if p < 0.0 {
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = ((3.0 * q) / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        [
            r * phi.cos(),
            r * (phi - 2.0 * PI / 3.0).cos(),
            r * (phi - 4.0 * PI / 3.0).cos(),
        ]
    } else {
        // p ≥ 0 with three real roots only happens near a triple root: take
        // the Cardano root and split the deflated quadratic at its vertex.
        let half_disc = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
        let u = (-q / 2.0 - q.signum() * half_disc).cbrt();
        let t0 = if u == 0.0 { 0.0 } else { u - p / (3.0 * u) };
        [t0, -t0 / 2.0, -t0 / 2.0]
    };

    let scale = depressed
        .iter()
        .map(|t| (t - shift).abs())
        .fold(1.0, f64::max);
    let mut roots = depressed.map(|t| polish(c, t - shift, scale));
    roots.sort_by(f64::total_cmp);
    resolve_cluster(c, &mut roots, scale);
    for r in &mut roots {
        if r.abs() <= ZERO_SNAP {
            *r = 0.0;
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Relative gap below which two roots are recomputed from the quadratic
/// left after dividing out the third.
const CLUSTER_GAP: f64 = 1e-4;

/// The trigonometric form loses about half the digits on a near-double root.
/// Dividing out the isolated root and solving the remaining quadratic
/// recovers exact double roots from exact coefficients.
fn resolve_cluster(c: &CubicCoeffs, roots: &mut [f64; 3], scale: f64) {
    let low_gap = roots[1] - roots[0];
    let high_gap = roots[2] - roots[1];
    if low_gap.min(high_gap) > CLUSTER_GAP * scale {
        return;
    }
    let isolated = if low_gap <= high_gap { 2 } else { 0 };
    let r = roots[isolated];
    let largest = roots.iter().all(|x| x.abs() <= r.abs());
    // Forward division is stable for the largest-magnitude root, backward
    // division for the others.
    let (b1, b0) = if largest || r == 0.0 {
        let b1 = c.p2 + r;
        (b1, c.p1 + r * b1)
    } else {
        let b0 = -c.p0 / r;
        ((b0 - c.p1) / r, b0)
    };
    let disc = (b1 * b1 - 4.0 * b0).max(0.0);
    let big = -0.5 * (b1 + b1.signum() * disc.sqrt());
    let (u, v) = if big == 0.0 {
        (0.0, 0.0)
    } else {
        (big, b0 / big)
    };
    let (u, v) = (polish(c, u, scale), polish(c, v, scale));
    let pair = if u <= v { [u, v] } else { [v, u] };
    if isolated == 2 {
        roots[0] = pair[0];
        roots[1] = pair[1];
    } else {
        roots[1] = pair[0];
        roots[2] = pair[1];
    }
    roots.sort_by(f64::total_cmp);
}

/// `|f| ≤ DOUBLE_ROOT_TOL · scale³` at a critical point counts as a double root.
const DOUBLE_ROOT_TOL: f64 = 1e-14;

/// Every real root, ascending: three when the discriminant allows it,
/// otherwise the single real one.
///
/// A negative discriminant normally means a complex pair, and forcing three
/// real roots would also drag the isolated real root. Roundoff can push the
/// discriminant of a cubic with a double root slightly negative, so a
/// critical point where the cubic vanishes is kept as a double root.
pub(crate) fn real_roots(c: &CubicCoeffs) -> Vec<f64> {
    if c.discriminant() >= 0.0 {
        return real_roots_forced(c).to_vec();
    }
    let scale =
        c.p2.abs()
            .max(c.p1.abs().sqrt())
            .max(c.p0.abs().cbrt())
            .max(f64::MIN_POSITIVE);
    let shift = c.p2 / 3.0;
    let p = c.p1 - c.p2 * shift;
    let q = (2.0 * shift * shift - c.p1) * shift + c.p0;
    let half_disc = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
    let u = (-q / 2.0 - q.signum() * half_disc).cbrt();
    let t0 = if u == 0.0 { 0.0 } else { u - p / (3.0 * u) };
    let single = polish(c, t0 - shift, scale);

    let mut roots = vec![single];
    let dd = c.p2 * c.p2 - 3.0 * c.p1;
    if dd > 0.0 {
        let rd = dd.sqrt();
        for crit in [(-c.p2 - rd) / 3.0, (-c.p2 + rd) / 3.0] {
            let distinct = (crit - single).abs() > 1e-9 * scale;
            if distinct && c.eval(crit).abs() <= DOUBLE_ROOT_TOL * scale.powi(3) {
                roots.extend([crit, crit]);
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// A couple of guarded Newton steps. Steps larger than a polishing
/// correction are refused so that clustered roots never jump onto each other.
fn polish(c: &CubicCoeffs, mut x: f64, scale: f64) -> f64 {
    let max_step = 1e-7 * scale;
    let mut fx = c.eval(x);
    for _ in 0..3 {
        if fx == 0.0 {
            break;
        }
        let d = c.derivative(x);
        if d == 0.0 {
            break;
        }
        let step = fx / d;
        if !step.is_finite() || step.abs() > max_step {
            break;
        }
        let next = x - step;
        let f_next = c.eval(next);
        if f_next.abs() >= fx.abs() {
            break;
        }
        x = next;
        fx = f_next;
    }
    x
}
