use super::{
    clamp_weights, finish, infeasible, reject_unless, split_pair, InverseSolution, RECOVERY_TOL,
};
use crate::realizability::{check_path, SpectrumTarget};
use crate::spectral::{real_roots, CubicCoeffs};
use crate::{Result, Topology, WeightVector};

/// A smallest eigenvalue below this fraction of `f` is treated as zero.
const DEGENERATE_TOL: f64 = 1e-12;

/// Path weights via the cycle parametrization with one edge removed.
///
/// With sum `2f`, `Λ1 = f + s` the largest entry and `t = Λ3 − Λ2`, the
/// middle weight `a` solves
/// `12a³ − 12f·a² + (4(f²−s²) + (f−s)² − t²)·a − (f+s)((f−s)² − t²) = 0`
/// inside the window `f/4 ± ¼√(6s² + 4sf + 2t² − f²)`; then
/// `d = l_first·l_last = (f+s)((f−s)² − t²)/(16a)` and the end weights are the
/// roots of `u² − (f−a)u + d`. The largest admissible root is used.
pub fn invert_path(target: &SpectrumTarget) -> Result<InverseSolution> {
    let topology = Topology::Path4;
    target.triple()?;
    reject_unless(topology, check_path(target)?)?;

    let sum = target.sum();
    if sum == 0.0 {
        return finish(topology, WeightVector::zeros(3), target);
    }
    let f = 0.5 * sum;
    let v = target.sorted_desc();
    let (big, mid, small) = (v[0], v[1], v[2]);
    let s = (big - f).max(0.0);
    let t = mid - small;

    let (first, middle, last) = if small <= DEGENERATE_TOL * f {
        // Two decoupled edges: spectrum {0, 0, f+s, f−s}.
        (0.5 * (f + s), 0.0, 0.5 * (f - s).max(0.0))
    } else {
        // (f−s)² − t² = 4·Λ2·Λ3, written without the cancellation.
        let e2 = big * (mid + small) + mid * small;
        let e3 = big * mid * small;
        let cubic = CubicCoeffs::new(-f, e2 / 3.0, -e3 / 3.0);

        let w = 6.0 * s * s + 4.0 * s * f + 2.0 * t * t - f * f;
        if w < -RECOVERY_TOL * f * f {
            return Err(infeasible(
                topology,
                format!("empty window (radicand {w:e})"),
            ));
        }
        let half_width = 0.25 * w.max(0.0).sqrt();
        let slack = RECOVERY_TOL * f;
        let lo = 0.25 * f - half_width - slack;
        let hi = (0.25 * f + half_width).min(f) + slack;

        let a = real_roots(&cubic)
            .into_iter()
            .filter(|&a| a > 0.0 && a >= lo && a <= hi)
            .fold(None, |best: Option<f64>, a| {
                Some(best.map_or(a, |b| b.max(a)))
            })
            .ok_or_else(|| infeasible(topology, "no cubic root in the admissible window"))?;

        let d = e3 / (4.0 * a);
        let (l2, l4) = split_pair(f - a, d, RECOVERY_TOL * f * f)
            .ok_or_else(|| infeasible(topology, "end-weight quadratic"))?;
        (l2, a, l4)
    };

    let weights = clamp_weights(topology, vec![first, middle, last], sum)?;
    finish(topology, weights, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn tgt(v: &[f64]) -> SpectrumTarget {
        SpectrumTarget::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unit_path() {
        let r2 = std::f64::consts::SQRT_2;
        let sol = invert_path(&tgt(&[2.0 + r2, 2.0, 2.0 - r2])).unwrap();
        for w in sol.weights.values() {
            assert!((w - 1.0).abs() < 1e-9, "{:?}", sol.weights);
        }
        assert!(sol.residual < 1e-9);
    }

    #[test]
    fn decoupled_edges() {
        let sol = invert_path(&tgt(&[3.0, 0.0, 3.0])).unwrap();
        assert_eq!(sol.weights.values(), &[1.5, 0.0, 1.5]);
        assert!(sol.residual < 1e-12);
    }

    #[test]
    fn rejects_equal_triple() {
        assert!(matches!(
            invert_path(&tgt(&[1.0, 1.0, 1.0])),
            Err(Error::NotRealizable {
                topology: Topology::Path4,
                ..
            })
        ));
    }

    #[test]
    fn zero_target() {
        let sol = invert_path(&tgt(&[0.0, 0.0, 0.0])).unwrap();
        assert_eq!(sol.weights.values(), &[0.0; 3]);
    }

    #[test]
    fn forward_spectra_round_trip() {
        use crate::{build_laplacian, spectrum_numeric};
        for w in [
            [1.0, 2.0, 3.0],
            [0.1, 4.0, 0.2],
            [3.0, 0.01, 3.0],
            [2.0, 2.0, 0.0],
        ] {
            let w = WeightVector::new(w.to_vec()).unwrap();
            let s = spectrum_numeric(&build_laplacian(Topology::Path4, &w).unwrap()).unwrap();
            let sol = invert_path(&SpectrumTarget::from_forward(&s).unwrap()).unwrap();
            assert!(sol.residual < 1e-10, "{w:?}: {}", sol.residual);
        }
    }
}
