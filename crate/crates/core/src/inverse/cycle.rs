use super::{
    clamp_weights, finish, infeasible, reject_unless, split_pair, InverseSolution, RECOVERY_TOL,
};
use crate::realizability::{check_cycle, normalize_target, SpectrumTarget};
use crate::{Result, Topology, WeightVector};

/// Symmetric parameters of a 4-cycle weighting: `a = l1 + l3`,
/// `b = l2 + l4`, `c = l1·l3`, `d = l2·l4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CycleParams {
    /// Real nonnegative weights exist iff `a,b,c,d ≥ 0`, `4c ≤ a²`, `4d ≤ b²`.
    pub fn is_admissible(&self, tol: f64) -> bool {
        let CycleParams { a, b, c, d } = *self;
        a >= -tol
            && b >= -tol
            && c >= -tol
            && d >= -tol
            && 4.0 * c <= a * a + tol
            && 4.0 * d <= b * b + tol
    }
}

/// Parameters for a target already normalized to sum 8 and accepted by the
/// cycle criterion.
///
/// With `Λ1 = 4 + s` the largest entry and `t` the smaller of the other two:
/// if `2t + s ≤ 4` take `a = 4 − t`, `4d = t²`,
/// `4c = −(2t+s−4)² − (8−3t)(2t+s−4) + t(4−t)`; otherwise `a = s + t`,
/// `4d = (s+t−4)²`, `4c = s² + 3st − 4s + t²`. Always `b = 4 − a`.
fn params_normalized(desc: [f64; 3]) -> CycleParams {
    let s = (desc[0] - 4.0).max(0.0);
    let t = desc[2];
    let (a, c4, d4) = if 2.0 * t + s <= 4.0 {
        let u = 2.0 * t + s - 4.0;
        (4.0 - t, -u * u - (8.0 - 3.0 * t) * u + t * (4.0 - t), t * t)
    } else {
        let v = s + t - 4.0;
        (s + t, s * s + 3.0 * s * t - 4.0 * s + t * t, v * v)
    };
    CycleParams {
        a,
        b: 4.0 - a,
        c: 0.25 * c4,
        d: 0.25 * d4,
    }
}

/// Cycle parameters for `target` scaled to sum 8, with the applied factor.
pub fn cycle_params(target: &SpectrumTarget) -> Result<(CycleParams, f64)> {
    target.triple()?;
    reject_unless(Topology::Cycle4, check_cycle(target)?)?;
    let norm = normalize_target(target, 8.0)?;
    let v = norm.target.sorted_desc();
    Ok((params_normalized([v[0], v[1], v[2]]), norm.factor))
}

pub fn invert_cycle(target: &SpectrumTarget) -> Result<InverseSolution> {
    let topology = Topology::Cycle4;
    let (params, factor) = cycle_params(target)?;
    if target.sum() == 0.0 {
        return finish(topology, WeightVector::zeros(4), target);
    }
    let tol = RECOVERY_TOL * 64.0;
    if !params.is_admissible(tol) {
        return Err(infeasible(topology, format!("{params:?}")));
    }
    let (l1, l3) = split_pair(params.a, params.c, tol)
        .ok_or_else(|| infeasible(topology, "l1/l3 quadratic"))?;
    let (l2, l4) = split_pair(params.b, params.d, tol)
        .ok_or_else(|| infeasible(topology, "l2/l4 quadratic"))?;
    let raw = [l1, l2, l3, l4].iter().map(|w| w / factor).collect();
    let weights = clamp_weights(topology, raw, target.sum())?;
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
    fn golden_five_two_one() {
        let (p, factor) = cycle_params(&tgt(&[5.0, 2.0, 1.0])).unwrap();
        assert_eq!(factor, 1.0);
        assert!((p.a - 3.0).abs() < 1e-15);
        assert!((p.c - 1.75).abs() < 1e-15);
        assert!((p.d - 0.25).abs() < 1e-15);

        let sol = invert_cycle(&tgt(&[5.0, 2.0, 1.0])).unwrap();
        let r2 = std::f64::consts::SQRT_2;
        let want = [(3.0 + r2) / 2.0, 0.5, (3.0 - r2) / 2.0, 0.5];
        for (g, w) in sol.weights.values().iter().zip(want) {
            assert!((g - w).abs() < 1e-9, "{:?}", sol.weights);
        }
        assert!(sol.residual < 1e-12);
    }

    #[test]
    fn unit_cycle() {
        let sol = invert_cycle(&tgt(&[4.0, 2.0, 2.0])).unwrap();
        for w in sol.weights.values() {
            assert!((w - 1.0).abs() < 1e-7, "{:?}", sol.weights);
        }
        assert!(sol.residual < 1e-9);
    }

    #[test]
    fn both_branches_agree_on_swapped_roles() {
        // t = 1 takes the first branch, t = 2 the second; they coincide.
        let first = params_normalized([5.0, 2.0, 1.0]);
        let s = 1.0;
        let t = 2.0;
        let second = CycleParams {
            a: s + t,
            b: 4.0 - s - t,
            c: 0.25 * (s * s + 3.0 * s * t - 4.0 * s + t * t),
            d: 0.25 * (s + t - 4.0) * (s + t - 4.0),
        };
        assert_eq!(first, second);
    }

    #[test]
    fn rejects_small_max() {
        assert!(matches!(
            invert_cycle(&tgt(&[3.0, 3.0, 2.0])),
            Err(Error::NotRealizable {
                topology: Topology::Cycle4,
                ..
            })
        ));
    }

    #[test]
    fn scale_is_restored() {
        let sol = invert_cycle(&tgt(&[10.0, 4.0, 2.0])).unwrap();
        let r2 = std::f64::consts::SQRT_2;
        assert!((sol.weights.values()[0] - (3.0 + r2)).abs() < 1e-9);
        assert!(sol.residual < 1e-11);
    }

    #[test]
    fn degenerate_targets() {
        for v in [
            [0.0, 0.0, 0.0],
            [8.0, 0.0, 0.0],
            [4.0, 4.0, 0.0],
            [6.0, 2.0, 0.0],
        ] {
            let sol = invert_cycle(&tgt(&v)).unwrap();
            assert!(sol.residual < 1e-9, "{v:?} residual {}", sol.residual);
        }
    }
}
