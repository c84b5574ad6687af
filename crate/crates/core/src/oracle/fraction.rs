use super::{par_blocks, simplex_point, Purpose, RngMeta, SamplerConfig};
use crate::format::Record;
use crate::realizability::{check, SpectrumTarget};
use crate::{Error, Result, Topology};

/// Monte Carlo estimate of the realizable share of the eigenvalue simplex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionEstimate {
    pub fraction: f64,
    /// Normal-approximation 95% half-width `1.96·√(f(1−f)/n)`.
    pub half_width_95: f64,
    pub samples: usize,
}

impl FractionEstimate {
    pub fn from_counts(hits: usize, samples: usize) -> Self {
        let fraction = hits as f64 / samples as f64;
        FractionEstimate {
            fraction,
            half_width_95: 1.96 * (fraction * (1.0 - fraction) / samples as f64).sqrt(),
            samples,
        }
    }

    pub fn record(&self, t: Topology, cfg: &SamplerConfig) -> Record {
        let r = Record::kind("fraction")
            .field("topology", t)
            .num("fraction", self.fraction)
            .num("half_width_95", self.half_width_95)
            .field("samples", self.samples);
        RngMeta::new(cfg.seed, Purpose::Fraction, Some(t)).annotate(r)
    }
}

/// Share of uniform simplex points `Σλ = 1` accepted by the criterion for `t`.
///
/// `t` has `order − 1` free eigenvalues, so this covers the four-vertex graphs
/// and any `K_n`.
pub fn estimate_region_fraction(t: Topology, cfg: &SamplerConfig) -> Result<FractionEstimate> {
    cfg.validate()?;
    t.validate()?;
    let dim = t.order() - 1;
    let hits = par_blocks(
        cfg.seed,
        cfg.samples,
        Purpose::Fraction,
        Some(t),
        |_, n, rng| {
            let mut hits = 0usize;
            for _ in 0..n {
                let target = SpectrumTarget::new(simplex_point(rng, dim))?;
                if check(t, &target)?.realizable {
                    hits += 1;
                }
            }
            Ok::<usize, Error>(hits)
        },
    )
    .into_iter()
    .sum::<Result<usize>>()?;
    Ok(FractionEstimate::from_counts(hits, cfg.samples))
}

/// Violations of the region inclusions over uniform simplex samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusionReport {
    pub samples: usize,
    pub path_not_cycle: usize,
    pub path_not_kite: usize,
    pub star_not_kite: usize,
    pub not_k4: usize,
}

impl InclusionReport {
    pub fn violations(&self) -> usize {
        self.path_not_cycle + self.path_not_kite + self.star_not_kite + self.not_k4
    }

    pub fn record(&self, cfg: &SamplerConfig) -> Record {
        let r = Record::kind("inclusions")
            .field("samples", self.samples)
            .field("path_not_cycle", self.path_not_cycle)
            .field("path_not_kite", self.path_not_kite)
            .field("star_not_kite", self.star_not_kite)
            .field("not_k4", self.not_k4);
        RngMeta::new(cfg.seed, Purpose::Inclusion, None).annotate(r)
    }
}

/// Checks path ⊆ cycle, path ⊆ kite, star ⊆ kite and everything ⊆ K4.
pub fn inclusion_suite(cfg: &SamplerConfig) -> Result<InclusionReport> {
    cfg.validate()?;
    let parts = par_blocks(
        cfg.seed,
        cfg.samples,
        Purpose::Inclusion,
        None,
        |_, n, rng| {
            let mut r = InclusionReport {
                samples: n,
                path_not_cycle: 0,
                path_not_kite: 0,
                star_not_kite: 0,
                not_k4: 0,
            };
            for _ in 0..n {
                let target = SpectrumTarget::new(simplex_point(rng, 3))?;
                let star = check(Topology::Star, &target)?.realizable;
                let cycle = check(Topology::Cycle4, &target)?.realizable;
                let path = check(Topology::Path4, &target)?.realizable;
                let kite = check(Topology::Kite, &target)?.realizable;
                let k4 = check(Topology::Complete(4), &target)?.realizable;
                r.path_not_cycle += (path && !cycle) as usize;
                r.path_not_kite += (path && !kite) as usize;
                r.star_not_kite += (star && !kite) as usize;
                r.not_k4 += ((star || cycle || path || kite) && !k4) as usize;
            }
            Ok::<InclusionReport, Error>(r)
        },
    );
    let mut total = InclusionReport {
        samples: 0,
        path_not_cycle: 0,
        path_not_kite: 0,
        star_not_kite: 0,
        not_k4: 0,
    };
    for p in parts {
        let p = p?;
        total.samples += p.samples;
        total.path_not_cycle += p.path_not_cycle;
        total.path_not_kite += p.path_not_kite;
        total.star_not_kite += p.star_not_kite;
        total.not_k4 += p.not_k4;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_fill_the_simplex() {
        let cfg = SamplerConfig::default().with_samples(2000);
        for n in [2, 4, 6] {
            let est = estimate_region_fraction(Topology::Complete(n), &cfg).unwrap();
            assert_eq!(est.fraction, 1.0);
            assert_eq!(est.half_width_95, 0.0);
        }
    }

    #[test]
    fn cycle_fraction_near_three_quarters() {
        let cfg = SamplerConfig::default().with_samples(50_000).with_seed(5);
        let est = estimate_region_fraction(Topology::Cycle4, &cfg).unwrap();
        assert!((est.fraction - 0.75).abs() < 4.0 * est.half_width_95.max(1e-3));
    }

    #[test]
    fn half_width_formula() {
        let e = FractionEstimate::from_counts(25, 100);
        assert!((e.half_width_95 - 1.96 * (0.25f64 * 0.75 / 100.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn deterministic_across_runs() {
        let cfg = SamplerConfig::default().with_samples(5000).with_seed(9);
        let a = estimate_region_fraction(Topology::Kite, &cfg).unwrap();
        let b = estimate_region_fraction(Topology::Kite, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn small_inclusion_run_is_clean() {
        let cfg = SamplerConfig::default().with_samples(5000);
        let r = inclusion_suite(&cfg).unwrap();
        assert_eq!(r.samples, 5000);
        assert_eq!(r.violations(), 0);
    }
}
