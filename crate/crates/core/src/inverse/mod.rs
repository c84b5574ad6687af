//! Inverse problem: explicit nonnegative weights for a realizable target.
//!
//! Each constructor rejects targets that fail the matching criterion in
//! [`crate::realizability`], builds weights from the constructive argument for
//! that graph, and reports the residual of the forward spectrum against the
//! request.

mod complete;
mod cycle;
mod kite;
mod path;
mod star;

pub use complete::{invert_complete, suspend_spectrum};
pub use cycle::{cycle_params, invert_cycle, CycleParams};
pub use kite::{invert_kite, kite_params, KiteParams};
pub use path::invert_path;
pub use star::invert_star;

use crate::realizability::{SpectrumTarget, Verdict};
use crate::spectral::{build_laplacian, spectrum_numeric};
use crate::{Error, Result, Topology, WeightVector};

/// Relative slack for clamping roundoff in recovered quantities.
const RECOVERY_TOL: f64 = 1e-9;

/// Discriminants within this fraction of `sum²` are treated as zero.
const PAIR_SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct InverseSolution {
    pub topology: Topology,
    pub weights: WeightVector,
    /// Max absolute deviation between `{0} ∪ target` and the forward spectrum.
    pub residual: f64,
}

/// Dispatches to the constructor for `topology`.
pub fn invert(topology: Topology, target: &SpectrumTarget) -> Result<InverseSolution> {
    match topology {
        Topology::Star => invert_star(target),
        Topology::Cycle4 => invert_cycle(target),
        Topology::Path4 => invert_path(target),
        Topology::Kite => invert_kite(target),
        Topology::Complete(n) => {
            if target.len() + 1 != n {
                return Err(Error::Arity {
                    expected: n.saturating_sub(1),
                    found: target.len(),
                });
            }
            invert_complete(target)
        }
    }
}

fn reject_unless(topology: Topology, verdict: Verdict) -> Result<()> {
    match verdict.certificate {
        None => Ok(()),
        Some(certificate) => Err(Error::NotRealizable {
            topology,
            certificate,
        }),
    }
}

fn infeasible(topology: Topology, detail: impl Into<String>) -> Error {
    Error::InternalInfeasible {
        topology,
        detail: detail.into(),
    }
}

/// Roots of `u² − sum·u + product`, larger first. `None` when the
/// discriminant is negative beyond `tol`.
fn split_pair(sum: f64, product: f64, tol: f64) -> Option<(f64, f64)> {
    let mut disc = sum * sum - 4.0 * product;
    if disc < -tol {
        return None;
    }
    // Below roundoff level the pair is a double root.
    if disc.abs() <= PAIR_SNAP * sum * sum {
        disc = 0.0;
    }
    let big = 0.5 * (sum + disc.max(0.0).sqrt());
    // Vieta for the smaller root avoids cancellation.
    let small = if big > 0.0 { product / big } else { 0.0 };
    Some((big, small))
}

/// Clamps roundoff negatives to zero and rejects genuine ones.
fn clamp_weights(topology: Topology, raw: Vec<f64>, scale: f64) -> Result<WeightVector> {
    let floor = -RECOVERY_TOL * scale.max(1.0);
    let mut out = Vec::with_capacity(raw.len());
    for (i, w) in raw.into_iter().enumerate() {
        if !w.is_finite() || w < floor {
            return Err(infeasible(topology, format!("weight {i} = {w}")));
        }
        out.push(w.max(0.0));
    }
    WeightVector::new(out)
}

/// Attaches the forward residual to constructed weights.
fn finish(
    topology: Topology,
    weights: WeightVector,
    target: &SpectrumTarget,
) -> Result<InverseSolution> {
    let spectrum = spectrum_numeric(&build_laplacian(topology, &weights)?)?;
    let residual = spectrum.max_abs_diff(&target.full_spectrum());
    Ok(InverseSolution {
        topology,
        weights,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_pair_stable() {
        assert_eq!(split_pair(2.0, 1.0, 1e-9), Some((1.0, 1.0)));
        let (a, b) = split_pair(1.0, 1e-20, 1e-9).unwrap();
        assert_eq!(a, 1.0);
        assert!((b - 1e-20).abs() < 1e-35);
        assert_eq!(split_pair(1.0, 1.0, 1e-9), None);
        assert_eq!(split_pair(0.0, 0.0, 1e-9), Some((0.0, 0.0)));
    }

    #[test]
    fn clamp_weights_rules() {
        let w = clamp_weights(Topology::Star, vec![1.0, -1e-12, 2.0], 1.0).unwrap();
        assert_eq!(w.values(), &[1.0, 0.0, 2.0]);
        assert!(matches!(
            clamp_weights(Topology::Star, vec![1.0, -1e-3, 2.0], 1.0),
            Err(Error::InternalInfeasible { .. })
        ));
    }

    #[test]
    fn dispatcher_checks_complete_arity() {
        let t = SpectrumTarget::new(vec![1.0, 2.0]).unwrap();
        assert!(invert(Topology::Complete(4), &t).is_err());
        assert!(invert(Topology::Complete(3), &t).is_ok());
    }
}
