//! Brute-force cross checks for the closed-form criteria and constructions.
//!
//! Randomness comes from ChaCha8 seeded with [`SamplerConfig::seed`]. Work is
//! split into fixed blocks of [`BLOCK_SIZE`] samples and block `b` draws from
//! its own stream
//!
//! ```text
//! stream = purpose << 56 | topology_code << 48 | b
//! ```
//!
//! so parallel runs are bit-identical to sequential ones. Every report can be
//! rendered as `key=value` records carrying this metadata.

mod forward;
mod fraction;
mod grid;
mod roundtrip;
mod suspension;

pub use forward::{sample_forward, ForwardFailure, ForwardReport};
pub use fraction::{estimate_region_fraction, inclusion_suite, FractionEstimate, InclusionReport};
pub use grid::{negative_grid_search, GridSearchReport};
pub use roundtrip::{roundtrip_suite, roundtrip_targets, RoundtripReport};
pub use suspension::{suspension_suite, SuspensionReport, SUSPENSION_C_MAX};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::format::Record;
use crate::{Error, Result, Topology};

pub const RNG_ALGORITHM: &str = "chacha8";
pub const BLOCK_SIZE: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub samples: usize,
    /// Weights are drawn from `[0, w_max]`.
    pub w_max: f64,
    /// Subdivisions per weight axis in grid searches.
    pub grid_resolution: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 0,
            samples: 10_000,
            w_max: 4.0,
            grid_resolution: 25,
        }
    }
}

impl SamplerConfig {
    pub fn new(seed: u64, samples: usize, w_max: f64, grid_resolution: usize) -> Result<Self> {
        let cfg = SamplerConfig {
            seed,
            samples,
            w_max,
            grid_resolution,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1"));
        }
        if !(self.w_max.is_finite() && self.w_max > 0.0) {
            return Err(Error::InvalidConfig("w_max must be positive and finite"));
        }
        if self.grid_resolution < 2 {
            return Err(Error::InvalidConfig("grid_resolution must be at least 2"));
        }
        Ok(())
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SamplerConfig { seed, ..self }
    }

    pub fn with_samples(self, samples: usize) -> Self {
        SamplerConfig { samples, ..self }
    }
}

/// What a stream is used for; the high byte of the stream id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purpose {
    Forward = 1,
    Fraction = 2,
    Roundtrip = 3,
    Suspension = 4,
    Inclusion = 5,
}

impl Purpose {
    pub fn name(self) -> &'static str {
        match self {
            Purpose::Forward => "forward",
            Purpose::Fraction => "fraction",
            Purpose::Roundtrip => "roundtrip",
            Purpose::Suspension => "suspension",
            Purpose::Inclusion => "inclusion",
        }
    }
}

/// Second byte of the stream id. `0` means no particular topology.
pub fn topology_code(t: Option<Topology>) -> u8 {
    match t {
        None => 0,
        Some(Topology::Star) => 1,
        Some(Topology::Cycle4) => 2,
        Some(Topology::Path4) => 3,
        Some(Topology::Kite) => 4,
        Some(Topology::Complete(n)) => 16 + n.min(239) as u8,
    }
}

pub fn stream_id(purpose: Purpose, t: Option<Topology>, block: u64) -> u64 {
    debug_assert!(block < 1 << 48);
    (purpose as u64) << 56 | (topology_code(t) as u64) << 48 | block
}

/// Generator metadata sufficient to replay a report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RngMeta {
    pub seed: u64,
    pub purpose: Purpose,
    pub topology_code: u8,
}

impl RngMeta {
    pub(crate) fn new(seed: u64, purpose: Purpose, t: Option<Topology>) -> Self {
        RngMeta {
            seed,
            purpose,
            topology_code: topology_code(t),
        }
    }

    pub fn annotate(&self, record: Record) -> Record {
        record
            .field("rng", RNG_ALGORITHM)
            .field("seed", self.seed)
            .field("stream_layout", "purpose:8|topology:8|block:48")
            .field("purpose", self.purpose as u8)
            .field("topology_code", self.topology_code)
            .field("block_size", BLOCK_SIZE)
    }
}

pub(crate) fn block_rng(
    seed: u64,
    purpose: Purpose,
    t: Option<Topology>,
    block: usize,
) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id(purpose, t, block as u64));
    rng
}

/// Runs `f(block, count, rng)` over the fixed block decomposition of `samples`
/// in parallel and returns the results in block order.
pub(crate) fn par_blocks<T, F>(
    seed: u64,
    samples: usize,
    purpose: Purpose,
    t: Option<Topology>,
    f: F,
) -> Vec<T>
where
    T: Send,
    F: Fn(usize, usize, &mut ChaCha8Rng) -> T + Sync,
{
    let blocks = samples.div_ceil(BLOCK_SIZE);
    (0..blocks)
        .into_par_iter()
        .map(|b| {
            let count = BLOCK_SIZE.min(samples - b * BLOCK_SIZE);
            let mut rng = block_rng(seed, purpose, t, b);
            f(b, count, &mut rng)
        })
        .collect()
}

/// Uniform point of the simplex `{x ≥ 0, Σx = 1}` in `dim` coordinates, from
/// the spacings of `dim − 1` sorted uniforms.
pub(crate) fn simplex_point(rng: &mut impl Rng, dim: usize) -> Vec<f64> {
    let mut cuts: Vec<f64> = (1..dim).map(|_| rng.random::<f64>()).collect();
    cuts.sort_by(f64::total_cmp);
    let mut point = Vec::with_capacity(dim);
    let mut prev = 0.0;
    for c in cuts {
        point.push(c - prev);
        prev = c;
    }
    point.push(1.0 - prev);
    point
}

pub(crate) fn require_four_vertex(t: Topology) -> Result<()> {
    if t.order() == 4 {
        Ok(())
    } else {
        Err(Error::UnsupportedTopology(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(SamplerConfig::new(1, 0, 4.0, 25).is_err());
        assert!(SamplerConfig::new(1, 10, 0.0, 25).is_err());
        assert!(SamplerConfig::new(1, 10, f64::NAN, 25).is_err());
        assert!(SamplerConfig::new(1, 10, 4.0, 1).is_err());
        assert!(SamplerConfig::new(1, 10, 4.0, 2).is_ok());
    }

    #[test]
    fn streams_are_distinct() {
        let a = stream_id(Purpose::Forward, Some(Topology::Star), 0);
        let b = stream_id(Purpose::Forward, Some(Topology::Cycle4), 0);
        let c = stream_id(Purpose::Fraction, Some(Topology::Star), 0);
        let d = stream_id(Purpose::Forward, Some(Topology::Star), 1);
        let all = [a, b, c, d];
        for i in 0..4 {
            for j in i + 1..4 {
                assert_ne!(all[i], all[j]);
            }
        }
        assert_eq!(a, 1 << 56 | 1 << 48);
    }

    #[test]
    fn simplex_points_sum_to_one() {
        let mut rng = block_rng(3, Purpose::Fraction, None, 0);
        for dim in 1..6 {
            let p = simplex_point(&mut rng, dim);
            assert_eq!(p.len(), dim);
            assert!(p.iter().all(|&v| v >= 0.0));
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn blocks_cover_samples_in_order() {
        let counts = par_blocks(0, 2 * BLOCK_SIZE + 5, Purpose::Forward, None, |b, n, _| {
            (b, n)
        });
        assert_eq!(counts, vec![(0, BLOCK_SIZE), (1, BLOCK_SIZE), (2, 5)]);
    }
}
