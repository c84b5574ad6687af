use rand::Rng;

use super::{par_blocks, Purpose, RngMeta, SamplerConfig};
use crate::format::Record;
use crate::inverse::suspend_spectrum;
use crate::spectral::{build_laplacian, spectrum_numeric, Spectrum};
use crate::{Error, Result, Topology, WeightVector};

/// Suspension weights are drawn from `[0, SUSPENSION_C_MAX]`.
pub const SUSPENSION_C_MAX: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuspensionReport {
    pub graphs: usize,
    pub max_order: usize,
    /// Largest gap between the explicit suspension spectrum and the predicted one.
    pub max_deviation: f64,
    /// Graphs where suspending with `c = 0` did not add exactly one zero.
    pub zero_c_violations: usize,
    pub rng: RngMeta,
}

impl SuspensionReport {
    pub fn record(&self) -> Record {
        let r = Record::kind("suspension")
            .field("graphs", self.graphs)
            .field("max_order", self.max_order)
            .num("max_deviation", self.max_deviation)
            .field("zero_c_violations", self.zero_c_violations);
        self.rng.annotate(r)
    }
}

/// Random graphs on `2..=max_order` vertices (complete graphs with each
/// weight zeroed with probability ½, otherwise uniform in `[0, w_max]`),
/// suspended with uniform `c ∈ [0, 5]` and compared with the predicted
/// spectrum. Each graph is also suspended with `c = 0`, both explicitly and
/// through the prediction.
pub fn suspension_suite(cfg: &SamplerConfig, max_order: usize) -> Result<SuspensionReport> {
    cfg.validate()?;
    if max_order < 2 {
        return Err(Error::InvalidOrder(max_order));
    }
    let parts = par_blocks(
        cfg.seed,
        cfg.samples,
        Purpose::Suspension,
        None,
        |_, n, rng| {
            let mut dev = 0.0f64;
            let mut zero_violations = 0;
            for _ in 0..n {
                let order = rng.random_range(2..=max_order);
                let m = order * (order - 1) / 2;
                let w: Vec<f64> = (0..m)
                    .map(|_| {
                        if rng.random::<bool>() {
                            0.0
                        } else {
                            rng.random::<f64>() * cfg.w_max
                        }
                    })
                    .collect();
                let c = rng.random::<f64>() * SUSPENSION_C_MAX;
                let base = spectrum_numeric(&build_laplacian(
                    Topology::Complete(order),
                    &WeightVector::new(w.clone())?,
                )?)?;
                dev = dev.max(deviation(&base, &w, order, c)?);
                dev = dev.max(deviation(&base, &w, order, 0.0)?);
                // The constant direction's eigenvalue is reported as an exact zero.
                let mut expected = base.values().to_vec();
                expected[0] = 0.0;
                expected.push(0.0);
                if suspend_spectrum(&base, 0.0)? != Spectrum::new(expected) {
                    zero_violations += 1;
                }
            }
            Ok::<(f64, usize), Error>((dev, zero_violations))
        },
    );
    let mut max_deviation = 0.0f64;
    let mut zero_c_violations = 0;
    for p in parts {
        let (d, z) = p?;
        max_deviation = max_deviation.max(d);
        zero_c_violations += z;
    }
    Ok(SuspensionReport {
        graphs: cfg.samples,
        max_order,
        max_deviation,
        zero_c_violations,
        rng: RngMeta::new(cfg.seed, Purpose::Suspension, None),
    })
}

/// Builds the suspension of the `order`-vertex graph explicitly and compares
/// its spectrum with [`suspend_spectrum`].
fn deviation(base: &Spectrum, w: &[f64], order: usize, c: f64) -> Result<f64> {
    let big = Topology::Complete(order + 1);
    let mut sw = Vec::with_capacity(big.edge_count());
    let mut k = 0;
    // Row i of K_{n+1} in lexicographic order: (i, j) for i < j < order,
    // then the new edge (i, order).
    for i in 0..order {
        let row = order - 1 - i;
        sw.extend_from_slice(&w[k..k + row]);
        k += row;
        sw.push(c);
    }
    let explicit = spectrum_numeric(&build_laplacian(big, &WeightVector::new(sw)?)?)?;
    Ok(explicit.max_abs_diff(&suspend_spectrum(base, c)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_agrees() {
        let cfg = SamplerConfig::default().with_samples(200).with_seed(4);
        let r = suspension_suite(&cfg, 8).unwrap();
        assert!(r.max_deviation < 1e-8, "{}", r.max_deviation);
        assert_eq!(r.zero_c_violations, 0);
    }

    #[test]
    fn explicit_suspension_of_single_edge() {
        // K2 with weight 1 suspended with c = 1 is the unit triangle.
        let base = Spectrum::new(vec![0.0, 2.0]);
        assert!(deviation(&base, &[1.0], 2, 1.0).unwrap() < 1e-12);
    }
}
