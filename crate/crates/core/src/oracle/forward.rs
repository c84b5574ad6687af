use rand::Rng;

use super::{par_blocks, require_four_vertex, Purpose, RngMeta, SamplerConfig};
use crate::format::Record;
use crate::realizability::{check, SpectrumTarget};
use crate::spectral::{build_laplacian, spectrum_closed_form, spectrum_numeric};
use crate::{Result, Topology, WeightVector};

/// A sampled weight vector whose spectrum the criterion rejected, or whose
/// spectrum could not be computed.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardFailure {
    pub index: usize,
    pub weights: Vec<f64>,
    pub spectrum: Vec<f64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForwardReport {
    pub topology: Topology,
    pub samples: usize,
    pub failures: Vec<ForwardFailure>,
    /// Largest gap between the closed-form and Jacobi spectra.
    pub max_route_diff: f64,
    pub rng: RngMeta,
}

impl ForwardReport {
    pub fn records(&self) -> Vec<Record> {
        let mut out: Vec<Record> = self
            .failures
            .iter()
            .map(|f| {
                Record::kind("forward_failure")
                    .field("topology", self.topology)
                    .field("index", f.index)
                    .nums("weights", &f.weights)
                    .nums("spectrum", &f.spectrum)
                    .field("reason", &f.reason)
            })
            .collect();
        let summary = Record::kind("forward_summary")
            .field("topology", self.topology)
            .field("samples", self.samples)
            .field("failures", self.failures.len())
            .num("max_route_diff", self.max_route_diff);
        out.push(self.rng.annotate(summary));
        out
    }
}

/// Samples weights uniformly from `[0, w_max]^edges`, computes spectra and
/// checks that the criterion for `t` accepts every one of them.
pub fn sample_forward(t: Topology, cfg: &SamplerConfig) -> Result<ForwardReport> {
    cfg.validate()?;
    require_four_vertex(t)?;
    let m = t.edge_count();
    let blocks = par_blocks(
        cfg.seed,
        cfg.samples,
        Purpose::Forward,
        Some(t),
        |b, n, rng| {
            let mut failures = Vec::new();
            let mut max_diff = 0.0f64;
            for s in 0..n {
                let index = b * super::BLOCK_SIZE + s;
                let w: Vec<f64> = (0..m).map(|_| rng.random::<f64>() * cfg.w_max).collect();
                match probe(t, &w) {
                    Ok((diff, None)) => max_diff = max_diff.max(diff),
                    Ok((diff, Some((spectrum, reason)))) => {
                        max_diff = max_diff.max(diff);
                        failures.push(ForwardFailure {
                            index,
                            weights: w,
                            spectrum,
                            reason,
                        });
                    }
                    Err(e) => failures.push(ForwardFailure {
                        index,
                        weights: w,
                        spectrum: Vec::new(),
                        reason: e.to_string(),
                    }),
                }
            }
            (failures, max_diff)
        },
    );
    let mut failures = Vec::new();
    let mut max_route_diff = 0.0f64;
    for (f, d) in blocks {
        failures.extend(f);
        max_route_diff = max_route_diff.max(d);
    }
    Ok(ForwardReport {
        topology: t,
        samples: cfg.samples,
        failures,
        max_route_diff,
        rng: RngMeta::new(cfg.seed, Purpose::Forward, Some(t)),
    })
}

type Probe = (f64, Option<(Vec<f64>, String)>);

fn probe(t: Topology, w: &[f64]) -> Result<Probe> {
    let weights = WeightVector::new(w.to_vec())?;
    let numeric = spectrum_numeric(&build_laplacian(t, &weights)?)?;
    let closed = spectrum_closed_form(t, &weights)?;
    let diff = closed.max_abs_diff(&numeric);
    let verdict = check(t, &SpectrumTarget::from_forward(&numeric)?)?;
    let failure = verdict
        .certificate
        .map(|c| (numeric.values().to_vec(), format!("rejected: {c}")));
    Ok((diff, failure))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_are_clean_and_deterministic() {
        let cfg = SamplerConfig::default().with_samples(3000).with_seed(11);
        for t in Topology::FOUR_VERTEX {
            let a = sample_forward(t, &cfg).unwrap();
            assert!(a.failures.is_empty(), "{t}: {:?}", a.failures.first());
            assert!(a.max_route_diff < 1e-8, "{t}: {}", a.max_route_diff);
            let b = sample_forward(t, &cfg).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_other_orders() {
        let cfg = SamplerConfig::default().with_samples(10);
        assert!(sample_forward(Topology::Complete(5), &cfg).is_err());
    }

    #[test]
    fn summary_record_carries_rng() {
        let cfg = SamplerConfig::default().with_samples(5).with_seed(42);
        let r = sample_forward(Topology::Star, &cfg).unwrap();
        let recs = r.records();
        let last = recs.last().unwrap();
        assert_eq!(last.get("record"), Some("forward_summary"));
        assert_eq!(last.get("rng"), Some("chacha8"));
        assert_eq!(last.get("seed"), Some("42"));
        assert_eq!(last.get("failures"), Some("0"));
    }
}
