use rayon::prelude::*;

use super::{par_blocks, simplex_point, Purpose, RngMeta, SamplerConfig};
use crate::format::Record;
use crate::inverse::invert;
use crate::realizability::{check, SpectrumTarget};
use crate::{Error, Result, Topology};

/// Draws per accepted target before a block gives up.
const MAX_DRAWS_PER_TARGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct RoundtripReport {
    pub topology: Topology,
    pub targets: usize,
    /// Targets the criterion rejected; these are not inverted for weights.
    pub predicate_rejected: usize,
    pub inverted: usize,
    pub max_residual: f64,
    pub worst_target: Vec<f64>,
    pub infeasible: usize,
    /// Accepted by the criterion but refused by the constructor.
    pub not_realizable: usize,
    /// Rejected by the criterion but inverted anyway.
    pub false_accepts: usize,
    pub negative_weights: usize,
    pub other_errors: usize,
    pub rng: Option<RngMeta>,
}

impl RoundtripReport {
    fn empty(topology: Topology) -> Self {
        RoundtripReport {
            topology,
            targets: 0,
            predicate_rejected: 0,
            inverted: 0,
            max_residual: 0.0,
            worst_target: Vec::new(),
            infeasible: 0,
            not_realizable: 0,
            false_accepts: 0,
            negative_weights: 0,
            other_errors: 0,
            rng: None,
        }
    }

    fn merge(&mut self, other: RoundtripReport) {
        self.targets += other.targets;
        self.predicate_rejected += other.predicate_rejected;
        self.inverted += other.inverted;
        if other.max_residual > self.max_residual {
            self.max_residual = other.max_residual;
            self.worst_target = other.worst_target;
        }
        self.infeasible += other.infeasible;
        self.not_realizable += other.not_realizable;
        self.false_accepts += other.false_accepts;
        self.negative_weights += other.negative_weights;
        self.other_errors += other.other_errors;
    }

    fn add(&mut self, t: Topology, target: &SpectrumTarget) {
        self.targets += 1;
        let accepted = match check(t, target) {
            Ok(v) => v.realizable,
            Err(_) => {
                self.other_errors += 1;
                return;
            }
        };
        if !accepted {
            self.predicate_rejected += 1;
        }
        match invert(t, target) {
            Ok(sol) => {
                if !accepted {
                    self.false_accepts += 1;
                }
                self.inverted += 1;
                if sol.weights.values().iter().any(|&w| w < 0.0) {
                    self.negative_weights += 1;
                }
                if sol.residual > self.max_residual || self.worst_target.is_empty() {
                    self.max_residual = self.max_residual.max(sol.residual);
                    self.worst_target = target.values().to_vec();
                }
            }
            Err(Error::NotRealizable { .. }) => {
                if accepted {
                    self.not_realizable += 1;
                }
            }
            Err(Error::InternalInfeasible { .. }) => self.infeasible += 1,
            Err(_) => self.other_errors += 1,
        }
    }

    pub fn record(&self) -> Record {
        let r = Record::kind("roundtrip")
            .field("topology", self.topology)
            .field("targets", self.targets)
            .field("predicate_rejected", self.predicate_rejected)
            .field("inverted", self.inverted)
            .num("max_residual", self.max_residual)
            .nums("worst_target", &self.worst_target)
            .field("infeasible", self.infeasible)
            .field("not_realizable", self.not_realizable)
            .field("false_accepts", self.false_accepts)
            .field("negative_weights", self.negative_weights)
            .field("other_errors", self.other_errors);
        match self.rng {
            Some(meta) => meta.annotate(r),
            None => r,
        }
    }
}

/// Inverts `cfg.samples` uniform simplex targets accepted by the criterion
/// for `t` and forward-checks the weights.
pub fn roundtrip_suite(t: Topology, cfg: &SamplerConfig) -> Result<RoundtripReport> {
    cfg.validate()?;
    t.validate()?;
    let dim = t.order() - 1;
    let parts = par_blocks(
        cfg.seed,
        cfg.samples,
        Purpose::Roundtrip,
        Some(t),
        |_, n, rng| {
            let mut part = RoundtripReport::empty(t);
            let mut draws = 0;
            while part.targets < n {
                draws += 1;
                if draws > n * MAX_DRAWS_PER_TARGET {
                    return Err(Error::InvalidConfig(
                        "criterion accepts too few simplex points",
                    ));
                }
                let target = SpectrumTarget::new(simplex_point(rng, dim))?;
                if check(t, &target)?.realizable {
                    part.add(t, &target);
                }
            }
            Ok(part)
        },
    );
    let mut report = RoundtripReport::empty(t);
    for p in parts {
        report.merge(p?);
    }
    report.rng = Some(RngMeta::new(cfg.seed, Purpose::Roundtrip, Some(t)));
    Ok(report)
}

/// Round trip over caller-chosen targets, including rejected ones.
pub fn roundtrip_targets(t: Topology, targets: &[SpectrumTarget]) -> RoundtripReport {
    let parts: Vec<RoundtripReport> = targets
        .par_chunks(super::BLOCK_SIZE)
        .map(|chunk| {
            let mut part = RoundtripReport::empty(t);
            for target in chunk {
                part.add(t, target);
            }
            part
        })
        .collect();
    let mut report = RoundtripReport::empty(t);
    for p in parts {
        report.merge(p);
    }
    report
}
