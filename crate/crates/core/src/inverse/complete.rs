use super::{finish, InverseSolution};
use crate::realizability::SpectrumTarget;
use crate::spectral::{Spectrum, EIGEN_TOL};
use crate::{Error, Result, Topology, WeightVector};

/// Spectrum of the suspension: a new vertex joined to all `n` old ones with
/// weight `c`.
///
/// Eigenvectors orthogonal to the constant vector keep their shape and shift
/// by `c`; the constant direction keeps its zero and the new direction
/// `(1, …, 1, −n)` contributes `c·(n + 1)`.
pub fn suspend_spectrum(spectrum: &Spectrum, c: f64) -> Result<Spectrum> {
    if !(c.is_finite() && c >= 0.0) {
        return Err(Error::NegativeSuspensionWeight(c));
    }
    let values = spectrum.values();
    let Some(&smallest) = values.first() else {
        return Err(Error::NotLaplacianSpectrum(f64::NAN));
    };
    if smallest.abs() > EIGEN_TOL {
        return Err(Error::NotLaplacianSpectrum(smallest));
    }
    let n = values.len();
    let mut out = Vec::with_capacity(n + 1);
    out.push(0.0);
    out.extend(values[1..].iter().map(|v| v + c));
    out.push(c * (n + 1) as f64);
    Ok(Spectrum::new(out))
}

/// Weights on `K_{n+1}` realizing any nonnegative `n`-tuple.
///
/// Sort descending. `K_2` carries `λ1/2` on its edge. Going from `K_k` to
/// `K_{k+1}`, the new vertex `k` is joined to all earlier vertices with weight
/// `c = λ_k/(k+1)` (zero when `λ_k = 0`) and the remaining targets are
/// lowered by `c` before the next step inward.
pub fn invert_complete(target: &SpectrumTarget) -> Result<InverseSolution> {
    let n = target.len();
    if n == 0 {
        return Err(Error::Arity {
            expected: 1,
            found: 0,
        });
    }
    let order = n + 1;
    let topology = Topology::Complete(order);
    let mut weights = vec![0.0; topology.edge_count()];
    let mut remaining = target.sorted_desc();

    for k in (2..=n).rev() {
        let smallest = remaining[k - 1];
        let c = if smallest == 0.0 {
            0.0
        } else {
            smallest / (k + 1) as f64
        };
        for i in 0..k {
            weights[Topology::complete_edge_index(order, i, k)] = c;
        }
        remaining.truncate(k - 1);
        for v in &mut remaining {
            *v -= c;
        }
    }
    weights[Topology::complete_edge_index(order, 0, 1)] = remaining[0] / 2.0;

    finish(topology, WeightVector::new(weights)?, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tgt(v: &[f64]) -> SpectrumTarget {
        SpectrumTarget::new(v.to_vec()).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn suspension_examples() {
        let s = suspend_spectrum(&Spectrum::new(vec![0.0, 2.0]), 1.0).unwrap();
        assert_eq!(s.values(), &[0.0, 3.0, 3.0]);
        let s = suspend_spectrum(&s, 1.0).unwrap();
        assert_eq!(s.values(), &[0.0, 4.0, 4.0, 4.0]);
    }

    #[test]
    fn suspension_with_zero_weight_appends_zero() {
        let base = Spectrum::new(vec![0.0, 1.5, 2.0, 7.0]);
        let s = suspend_spectrum(&base, 0.0).unwrap();
        assert_eq!(s.values(), &[0.0, 0.0, 1.5, 2.0, 7.0]);
    }

    #[test]
    fn suspension_rejects_bad_input() {
        assert!(matches!(
            suspend_spectrum(&Spectrum::new(vec![0.5, 1.0]), 1.0),
            Err(Error::NotLaplacianSpectrum(_))
        ));
        assert!(suspend_spectrum(&Spectrum::new(vec![0.0, 1.0]), -1.0).is_err());
        assert!(suspend_spectrum(&Spectrum::new(vec![]), 1.0).is_err());
    }

    #[test]
    fn golden_k4() {
        let sol = invert_complete(&tgt(&[6.0, 3.0, 2.0])).unwrap();
        assert_eq!(sol.topology, Topology::Complete(4));
        // edges (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
        let want = [7.0 / 3.0, 5.0 / 6.0, 0.5, 5.0 / 6.0, 0.5, 0.5];
        assert!(
            close(sol.weights.values(), &want, 1e-14),
            "{:?}",
            sol.weights
        );
        assert!(sol.residual < 1e-12);
    }

    #[test]
    fn k2_base_case() {
        let sol = invert_complete(&tgt(&[3.0])).unwrap();
        assert_eq!(sol.weights.values(), &[1.5]);
        assert!(sol.residual < 1e-15);
    }

    #[test]
    fn zeros_and_mixed_zeros() {
        let sol = invert_complete(&tgt(&[0.0, 0.0, 0.0])).unwrap();
        assert!(sol.weights.values().iter().all(|&w| w == 0.0));
        let sol = invert_complete(&tgt(&[5.0, 0.0, 2.0, 0.0])).unwrap();
        assert!(sol.residual < 1e-12, "{}", sol.residual);
    }

    #[test]
    fn empty_target_rejected() {
        assert!(invert_complete(&tgt(&[])).is_err());
    }
}
