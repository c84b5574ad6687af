use super::{clamp_weights, finish, reject_unless, InverseSolution};
use crate::realizability::{check_star, SpectrumTarget};
use crate::spectral::{real_roots_forced, solve_cubic_real, CubicCoeffs};
use crate::{Result, Topology};

/// The star weights are the roots of
/// `L³ − ½e1·L² + ⅓e2·L − ¼e3 = 0`, with `e_k` the elementary symmetric
/// functions of the target.
pub fn invert_star(target: &SpectrumTarget) -> Result<InverseSolution> {
    let [x, y, z] = target.triple()?;
    reject_unless(Topology::Star, check_star(target)?)?;

    let cubic = CubicCoeffs::new(
        -0.5 * (x + y + z),
        (x * y + x * z + y * z) / 3.0,
        -0.25 * (x * y * z),
    );
    // Inside the boundary band the criterion accepts while the discriminant
    // test may not; the root there is double.
    let roots = solve_cubic_real(&cubic).unwrap_or_else(|_| real_roots_forced(&cubic));
    let weights = clamp_weights(Topology::Star, roots.to_vec(), x + y + z)?;
    finish(Topology::Star, weights, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn tgt(v: &[f64]) -> SpectrumTarget {
        SpectrumTarget::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inverts_unit_star() {
        // L³ − 3L² + 3L − 1 = (L − 1)³
        let sol = invert_star(&tgt(&[1.0, 1.0, 4.0])).unwrap();
        for w in sol.weights.values() {
            assert!((w - 1.0).abs() < 1e-9, "{:?}", sol.weights);
        }
        assert!(sol.residual < 1e-9);
    }

    #[test]
    fn zero_target() {
        let sol = invert_star(&tgt(&[0.0, 0.0, 0.0])).unwrap();
        assert_eq!(sol.weights.values(), &[0.0, 0.0, 0.0]);
        assert_eq!(sol.residual, 0.0);
    }

    #[test]
    fn equal_triple_rejected() {
        // L³ − 1.5L² + L − 0.25 has a complex pair.
        let c = CubicCoeffs::new(-1.5, 1.0, -0.25);
        assert!(c.discriminant() < 0.0);
        assert!(solve_cubic_real(&c).is_err());
        assert!(matches!(
            invert_star(&tgt(&[1.0, 1.0, 1.0])),
            Err(Error::NotRealizable {
                topology: Topology::Star,
                ..
            })
        ));
    }

    #[test]
    fn forward_spectrum_inverts() {
        use crate::{build_laplacian, spectrum_numeric, WeightVector};
        let w = WeightVector::new(vec![0.5, 1.0, 2.0]).unwrap();
        let s = spectrum_numeric(&build_laplacian(Topology::Star, &w).unwrap()).unwrap();
        let sol = invert_star(&SpectrumTarget::from_forward(&s).unwrap()).unwrap();
        assert!(sol.residual < 1e-12, "{}", sol.residual);
        // distinct weights are the roots of the length cubic, so they come back
        for (got, want) in sol.weights.values().iter().zip([0.5, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }
}
