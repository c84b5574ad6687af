//! Closed-form realizability criteria for three target eigenvalues.
//!
//! Every criterion is homogeneous in the target, so predicates run on the raw
//! values and the boundary slack is scaled by the matching power of the sum.

use std::fmt;

use crate::format::sig9;
use crate::spectral::{Spectrum, EIGEN_TOL};
use crate::{Error, Result, Topology};

/// Relative slack that keeps closed regions closed under roundoff.
pub const BOUNDARY_TOL: f64 = 1e-9;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Multiset of nonnegative target eigenvalues, excluding the forced zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTarget(Vec<f64>);

impl SpectrumTarget {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
            if value < 0.0 {
                return Err(Error::NegativeEigenvalue { index, value });
            }
        }
        Ok(SpectrumTarget(values))
    }

    /// Drops the smallest eigenvalue of a computed spectrum and clamps
    /// roundoff negatives (down to `-1e-9`) to zero.
    pub fn from_forward(spectrum: &Spectrum) -> Result<Self> {
        let values = spectrum
            .nonzero_slots()
            .iter()
            .map(|&v| {
                if (-EIGEN_TOL..0.0).contains(&v) {
                    0.0
                } else {
                    v
                }
            })
            .collect();
        SpectrumTarget::new(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }

    /// Values sorted in descending order.
    pub fn sorted_desc(&self) -> Vec<f64> {
        let mut v = self.0.clone();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    /// The forced zero plus the target, ascending.
    pub fn full_spectrum(&self) -> Spectrum {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(0.0);
        v.extend_from_slice(&self.0);
        Spectrum::new(v)
    }

    pub(crate) fn scaled(&self, factor: f64) -> SpectrumTarget {
        SpectrumTarget(self.0.iter().map(|v| v * factor).collect())
    }

    pub(crate) fn triple(&self) -> Result<[f64; 3]> {
        match self.0.as_slice() {
            &[x, y, z] => Ok([x, y, z]),
            other => Err(Error::Arity {
                expected: 3,
                found: other.len(),
            }),
        }
    }
}

/// The inequality a target violates.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub name: &'static str,
    pub lhs: f64,
    pub relation: &'static str,
    pub rhs: f64,
}

impl Certificate {
    /// Signed amount by which the inequality fails.
    pub fn value(&self) -> f64 {
        match self.relation {
            "<" => self.rhs - self.lhs,
            _ => self.lhs - self.rhs,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} {} {})",
            self.name,
            sig9(self.lhs),
            self.relation,
            sig9(self.rhs)
        )
    }
}

/// A realizability decision; the certificate is present iff rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub realizable: bool,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn accept() -> Self {
        Verdict {
            realizable: true,
            certificate: None,
        }
    }

    pub fn reject(certificate: Certificate) -> Self {
        Verdict {
            realizable: false,
            certificate: Some(certificate),
        }
    }
}

/// `S = Σx²`, `P = Σxy`, `U = Σ x²(y+z)` of a triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSymmetrics {
    pub s: f64,
    pub p: f64,
    pub u: f64,
}

impl PathSymmetrics {
    pub fn of([x, y, z]: [f64; 3]) -> Self {
        PathSymmetrics {
            s: x * x + y * y + z * z,
            p: x * y + x * z + y * z,
            u: x * x * (y + z) + y * y * (x + z) + z * z * (x + y),
        }
    }
}

/// Star `K_{1,3}`: the triple product of the three quadratic factors is
/// nonpositive (the length cubic has a nonnegative discriminant).
pub fn check_star(target: &SpectrumTarget) -> Result<Verdict> {
    let [x, y, z] = target.triple()?;
    let factors = [
        6.0 * x * x - 2.0 * x * y - 2.0 * x * z + y * z,
        6.0 * y * y - 2.0 * x * y - 2.0 * y * z + x * z,
        6.0 * z * z - 2.0 * x * z - 2.0 * y * z + x * y,
    ];
    let product = factors[0] * factors[1] * factors[2];
    // The slack applies to each quadratic factor. On the product it would
    // widen to O(√tol) where two factors vanish together, e.g. near (1,1,4).
    let slack = BOUNDARY_TOL * (x + y + z).powi(2);
    if product <= 0.0 || factors.iter().any(|f| f.abs() <= slack) {
        Ok(Verdict::accept())
    } else {
        Ok(Verdict::reject(Certificate {
            name: "star factor product > 0",
            lhs: product,
            relation: ">",
            rhs: 0.0,
        }))
    }
}

fn cycle_condition([x, y, z]: [f64; 3]) -> Option<Certificate> {
    let sum = x + y + z;
    let max = x.max(y).max(z);
    if max >= 0.5 * sum - BOUNDARY_TOL * sum {
        None
    } else {
        Some(Certificate {
            name: "max < half-sum",
            lhs: max,
            relation: "<",
            rhs: 0.5 * sum,
        })
    }
}

/// 4-cycle: the largest eigenvalue is at least half the sum.
pub fn check_cycle(target: &SpectrumTarget) -> Result<Verdict> {
    let t = target.triple()?;
    Ok(match cycle_condition(t) {
        None => Verdict::accept(),
        Some(c) => Verdict::reject(c),
    })
}

/// 4-path: the cycle condition plus
/// `(9Σx³ − 13U + 62xyz)² ≤ (3S − 2P)²(9S − 14P)`.
pub fn check_path(target: &SpectrumTarget) -> Result<Verdict> {
    let t = target.triple()?;
    if let Some(c) = cycle_condition(t) {
        return Ok(Verdict::reject(c));
    }
    let [x, y, z] = t;
    let PathSymmetrics { s, p, u } = PathSymmetrics::of(t);
    let cubic = 9.0 * (x * x * x + y * y * y + z * z * z) - 13.0 * u + 62.0 * x * y * z;
    let lhs = cubic * cubic;
    let rhs = (3.0 * s - 2.0 * p).powi(2) * (9.0 * s - 14.0 * p);
    let slack = BOUNDARY_TOL * (x + y + z).powi(6);
    if lhs <= rhs + slack {
        Ok(Verdict::accept())
    } else {
        Ok(Verdict::reject(Certificate {
            name: "path cubic squared > (3S-2P)^2(9S-14P)",
            lhs,
            relation: ">",
            rhs,
        }))
    }
}

/// Kite (paw): `√3|a − b| ≥ a + b` for at least one pair.
pub fn check_kite(target: &SpectrumTarget) -> Result<Verdict> {
    let [x, y, z] = target.triple()?;
    let slack = BOUNDARY_TOL * (x + y + z);
    let holds = |a: f64, b: f64| SQRT_3 * (a - b).abs() >= a + b - slack;
    if holds(x, y) || holds(x, z) || holds(y, z) {
        return Ok(Verdict::accept());
    }
    // The (max, min) pair has the largest margin, so it is the one reported.
    let max = x.max(y).max(z);
    let min = x.min(y).min(z);
    Ok(Verdict::reject(Certificate {
        name: "sqrt3*(max-min) < max+min",
        lhs: SQRT_3 * (max - min),
        relation: "<",
        rhs: max + min,
    }))
}

/// `K_{n+1}`: every nonnegative `n`-tuple is realizable.
pub fn check_complete(target: &SpectrumTarget, order: usize) -> Result<Verdict> {
    if order < 2 {
        return Err(Error::InvalidOrder(order));
    }
    if target.len() != order - 1 {
        return Err(Error::Arity {
            expected: order - 1,
            found: target.len(),
        });
    }
    Ok(Verdict::accept())
}

/// Dispatches to the criterion for `topology`.
pub fn check(topology: Topology, target: &SpectrumTarget) -> Result<Verdict> {
    match topology {
        Topology::Star => check_star(target),
        Topology::Cycle4 => check_cycle(target),
        Topology::Path4 => check_path(target),
        Topology::Kite => check_kite(target),
        Topology::Complete(n) => check_complete(target, n),
    }
}

/// A target rescaled to a prescribed sum.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedTarget {
    pub target: SpectrumTarget,
    /// `normalized = factor · original`.
    pub factor: f64,
    /// Set when the input summed to zero and was returned unchanged.
    pub zero_sum: bool,
}

pub fn normalize_target(target: &SpectrumTarget, target_sum: f64) -> Result<NormalizedTarget> {
    if !(target_sum.is_finite() && target_sum > 0.0) {
        return Err(Error::NonPositiveScale(target_sum));
    }
    let sum = target.sum();
    if sum == 0.0 {
        return Ok(NormalizedTarget {
            target: target.clone(),
            factor: 1.0,
            zero_sum: true,
        });
    }
    let factor = target_sum / sum;
    Ok(NormalizedTarget {
        target: target.scaled(factor),
        factor,
        zero_sum: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tgt(v: &[f64]) -> SpectrumTarget {
        SpectrumTarget::new(v.to_vec()).unwrap()
    }

    fn ok(f: fn(&SpectrumTarget) -> Result<Verdict>, v: &[f64]) -> bool {
        f(&tgt(v)).unwrap().realizable
    }

    #[test]
    fn star_examples() {
        assert!(ok(check_star, &[1.0, 1.0, 4.0]));
        let v = check_star(&tgt(&[1.0, 1.0, 1.0])).unwrap();
        assert!(!v.realizable);
        assert_eq!(v.certificate.unwrap().lhs, 27.0);
        assert!(ok(check_star, &[0.0, 0.0, 0.0]));
    }

    #[test]
    fn cycle_examples() {
        assert!(ok(check_cycle, &[4.0, 2.0, 2.0]));
        let v = check_cycle(&tgt(&[3.0, 3.0, 2.0])).unwrap();
        assert!(!v.realizable);
        assert_eq!(v.certificate.unwrap().to_string(), "max < half-sum (3 < 4)");
        for x in [0.0, 0.5, 7.0] {
            assert!(ok(check_cycle, &[x, 0.0, 0.0]));
        }
    }

    #[test]
    fn path_examples() {
        let r2 = std::f64::consts::SQRT_2;
        assert!(ok(check_path, &[2.0 + r2, 2.0, 2.0 - r2]));
        assert!(!ok(check_path, &[1.0, 1.0, 1.0]));
        for x in [0.25, 1.0, 9.0] {
            assert!(ok(check_path, &[x, 0.0, x]));
        }
    }

    #[test]
    fn path_rejects_inside_cycle_region() {
        // max ≥ half-sum but the cubic inequality fails: (1, 0.5, 0.5)
        // S=1.5 P=1.25 → 9S−14P < 0.
        let v = check_path(&tgt(&[1.0, 0.5, 0.5])).unwrap();
        assert!(!v.realizable);
        assert!(v.certificate.unwrap().name.starts_with("path"));
    }

    #[test]
    fn kite_examples() {
        assert!(ok(check_kite, &[4.0, 3.0, 1.0]));
        assert!(ok(check_kite, &[1.0, 3.0, 4.0]));
        assert!(!ok(check_kite, &[2.0, 2.0, 2.0]));
    }

    #[test]
    fn complete_always_accepts() {
        for v in [[1.0, 1.0, 1.0], [0.0, 0.0, 0.0], [6.0, 3.0, 2.0]] {
            assert!(check_complete(&tgt(&v), 4).unwrap().realizable);
        }
        assert!(matches!(
            check_complete(&tgt(&[1.0, 2.0]), 4),
            Err(Error::Arity {
                expected: 3,
                found: 2
            })
        ));
        assert!(check_complete(&tgt(&[]), 1).is_err());
    }

    #[test]
    fn arity_and_sign_errors() {
        assert!(matches!(
            check_star(&tgt(&[1.0, 2.0])),
            Err(Error::Arity {
                expected: 3,
                found: 2
            })
        ));
        assert!(matches!(
            SpectrumTarget::new(vec![1.0, -2.0, 0.0]),
            Err(Error::NegativeEigenvalue { index: 1, .. })
        ));
    }

    #[test]
    fn from_forward_clamps_roundoff_only() {
        let s = Spectrum::new(vec![-1e-16, -1e-12, 2.0, 3.0]);
        assert_eq!(
            SpectrumTarget::from_forward(&s).unwrap().values(),
            &[0.0, 2.0, 3.0]
        );
        let bad = Spectrum::new(vec![-1e-3, -1e-4, 2.0, 3.0]);
        assert!(SpectrumTarget::from_forward(&bad).is_err());
    }

    #[test]
    fn normalization() {
        let n = normalize_target(&tgt(&[1.0, 1.0, 2.0]), 8.0).unwrap();
        assert_eq!(n.target.values(), &[2.0, 2.0, 4.0]);
        assert_eq!(n.factor, 2.0);
        assert!(!n.zero_sum);

        let z = normalize_target(&tgt(&[0.0, 0.0, 0.0]), 8.0).unwrap();
        assert_eq!(z.target.values(), &[0.0, 0.0, 0.0]);
        assert_eq!(z.factor, 1.0);
        assert!(z.zero_sum);

        let id = normalize_target(&tgt(&[4.0, 2.0, 2.0]), 8.0).unwrap();
        assert_eq!(id.target.values(), &[4.0, 2.0, 2.0]);
        assert_eq!(id.factor, 1.0);

        assert!(normalize_target(&tgt(&[1.0]), 0.0).is_err());
    }

    #[test]
    fn path_symmetrics_bounds() {
        let ps = PathSymmetrics::of([1.0, 2.0, 3.0]);
        assert_eq!((ps.s, ps.p), (14.0, 11.0));
        assert_eq!(ps.u, 1.0 * 5.0 + 4.0 * 4.0 + 9.0 * 3.0);
    }

    const CHECKS: [fn(&SpectrumTarget) -> Result<Verdict>; 4] =
        [check_star, check_cycle, check_path, check_kite];

    fn perms([x, y, z]: [f64; 3]) -> [[f64; 3]; 6] {
        [
            [x, y, z],
            [x, z, y],
            [y, x, z],
            [y, z, x],
            [z, x, y],
            [z, y, x],
        ]
    }

    proptest! {
        #[test]
        fn permutation_invariant(x in 0.0f64..10.0, y in 0.0f64..10.0, z in 0.0f64..10.0) {
            for f in CHECKS {
                let base = f(&tgt(&[x, y, z])).unwrap().realizable;
                for p in perms([x, y, z]) {
                    prop_assert_eq!(f(&tgt(&p)).unwrap().realizable, base);
                }
            }
        }

        #[test]
        fn scale_invariant(x in 0.0f64..10.0, y in 0.0f64..10.0, z in 0.0f64..10.0) {
            for f in CHECKS {
                let base = f(&tgt(&[x, y, z])).unwrap().realizable;
                for k in [0.1, 1.0, 7.0] {
                    prop_assert_eq!(f(&tgt(&[k * x, k * y, k * z])).unwrap().realizable, base);
                }
            }
        }

        #[test]
        fn path_symmetric_inequalities(x in 0.0f64..10.0, y in 0.0f64..10.0, z in 0.0f64..10.0) {
            let ps = PathSymmetrics::of([x, y, z]);
            prop_assert!(ps.s - ps.p >= -1e-12 * ps.s.max(1.0));
            prop_assert!(3.0 * ps.s - 2.0 * ps.p >= 0.0);
        }
    }
}
