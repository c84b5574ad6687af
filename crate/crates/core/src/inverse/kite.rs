use super::{
    clamp_weights, finish, infeasible, reject_unless, split_pair, InverseSolution, RECOVERY_TOL,
};
use crate::realizability::{check_kite, normalize_target, SpectrumTarget};
use crate::{Result, Topology, WeightVector};

/// `a = l1·l4`, `b = l2 + l3`, `c = l1l2 + l1l3 + l2l3`, `d = l4`, under the
/// normalization `Σl = 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KiteParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl KiteParams {
    /// `b, d ≥ 0`, `b + d ≤ 4`, `0 ≤ c ≤ 4b − bd − ¾b²`.
    pub fn is_admissible(&self, tol: f64) -> bool {
        let KiteParams { b, c, d, .. } = *self;
        b >= -tol
            && d >= -tol
            && b + d <= 4.0 + tol
            && c >= -tol
            && c <= 4.0 * b - b * d - 0.75 * b * b + tol
    }
}

/// Kite parameters for `target` scaled to sum 8, with the applied factor.
///
/// With `Λ1 ≥ Λ2 ≥ Λ3` and `R = √((Λ1−Λ3)² − 2Λ1Λ3)`:
/// `b = (Λ1 + Λ3 − R)/3`, `d = (Λ1 + Λ3 + R)/4`, `c = 4b − bd − ¾b²`.
pub fn kite_params(target: &SpectrumTarget) -> Result<(KiteParams, f64)> {
    let topology = Topology::Kite;
    target.triple()?;
    reject_unless(topology, check_kite(target)?)?;
    let norm = normalize_target(target, 8.0)?;
    let v = norm.target.sorted_desc();
    let (hi, lo) = (v[0], v[2]);
    let radicand = (hi - lo) * (hi - lo) - 2.0 * hi * lo;
    if radicand < -RECOVERY_TOL * 64.0 {
        return Err(infeasible(
            topology,
            format!("negative radicand {radicand:e}"),
        ));
    }
    let r = radicand.max(0.0).sqrt();
    let b = (hi + lo - r) / 3.0;
    let d = (hi + lo + r) / 4.0;
    let c = 4.0 * b - b * d - 0.75 * b * b;
    let params = KiteParams {
        a: (4.0 - b - d) * d,
        b,
        c,
        d,
    };
    Ok((params, norm.factor))
}

pub fn invert_kite(target: &SpectrumTarget) -> Result<InverseSolution> {
    let topology = Topology::Kite;
    let (params, factor) = kite_params(target)?;
    if target.sum() == 0.0 {
        return finish(topology, WeightVector::zeros(4), target);
    }
    let KiteParams { b, c, d, .. } = params;
    if b + d > 4.0 + RECOVERY_TOL {
        return Err(infeasible(topology, format!("b + d = {} > 4", b + d)));
    }
    let l1 = (4.0 - b - d).max(0.0);
    let l4 = d;
    let (l2, l3) = split_pair(b, c - b * l1, RECOVERY_TOL)
        .ok_or_else(|| infeasible(topology, "l2/l3 quadratic"))?;
    let raw = [l1, l2, l3, l4].iter().map(|w| w / factor).collect();
    let weights = clamp_weights(topology, raw, target.sum())?;
    finish(topology, weights, target)
}
