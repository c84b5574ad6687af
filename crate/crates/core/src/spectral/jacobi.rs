use super::{Spectrum, SymmetricMatrix};
use crate::{Error, Result};

pub const MAX_SWEEPS: usize = 100;

/// Relative off-diagonal threshold: converged once every `|a_pq|` is at most
/// this times the Frobenius norm of the input.
const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
pub fn spectrum_numeric(m: &SymmetricMatrix) -> Result<Spectrum> {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let threshold = OFF_DIAGONAL_TOL * m.frobenius_norm();

    let max_off = |a: &[f64]| {
        let mut worst = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                worst = worst.max(a[p * n + q].abs());
            }
        }
        worst
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if max_off(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    if !converged && max_off(&a) > threshold {
        return Err(Error::NonConvergence { sweeps: MAX_SWEEPS });
    }

    Ok(Spectrum::new((0..n).map(|i| a[i * n + i]).collect()))
}

/// One Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}
