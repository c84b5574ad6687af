use rayon::prelude::*;

use super::{require_four_vertex, SamplerConfig};
use crate::format::Record;
use crate::realizability::{check, SpectrumTarget};
use crate::spectral::{build_laplacian, spectrum_numeric};
use crate::{Error, Result, Topology, WeightVector};

#[derive(Debug, Clone, PartialEq)]
pub struct GridSearchReport {
    pub topology: Topology,
    pub target: Vec<f64>,
    pub resolution: usize,
    pub w_max: f64,
    /// Grid points with a nonzero spectrum.
    pub evaluated: usize,
    /// Smallest sorted ℓ∞ distance between a sum-normalized grid spectrum
    /// and the target.
    pub nearest_distance: f64,
    pub nearest_weights: Vec<f64>,
    pub nearest_spectrum: Vec<f64>,
}

impl GridSearchReport {
    pub fn record(&self) -> Record {
        Record::kind("grid_search")
            .field("topology", self.topology)
            .nums("target", &self.target)
            .field("resolution", self.resolution)
            .num("w_max", self.w_max)
            .field("evaluated", self.evaluated)
            .num("nearest_distance", self.nearest_distance)
            .nums("nearest_weights", &self.nearest_weights)
            .nums("nearest_spectrum", &self.nearest_spectrum)
    }
}

struct Best {
    distance: f64,
    index: usize,
    spectrum: Vec<f64>,
}

/// Scans `{0, h, …, w_max}^edges` with `h = w_max / grid_resolution` for the
/// spectrum closest to a target the criterion rejects.
///
/// Each grid spectrum is rescaled to the target's sum first, so the scan
/// effectively covers every scale at once.
pub fn negative_grid_search(
    t: Topology,
    target: &SpectrumTarget,
    cfg: &SamplerConfig,
) -> Result<GridSearchReport> {
    cfg.validate()?;
    require_four_vertex(t)?;
    if check(t, target)?.realizable {
        return Err(Error::RealizableTarget(t));
    }
    let mut goal = target.values().to_vec();
    goal.sort_by(f64::total_cmp);
    let goal_sum = target.sum();

    let m = t.edge_count();
    let side = cfg.grid_resolution + 1;
    let h = cfg.w_max / cfg.grid_resolution as f64;
    let inner = side.pow(m as u32 - 1);

    let per_slab: Vec<Result<(usize, Option<Best>)>> = (0..side)
        .into_par_iter()
        .map(|first| {
            let mut evaluated = 0;
            let mut best: Option<Best> = None;
            for rest in 0..inner {
                let index = first * inner + rest;
                let w = decode(index, side, m, h);
                let spec = spectrum_numeric(&build_laplacian(t, &WeightVector::new(w)?)?)?;
                let mut tail = spec.nonzero_slots().to_vec();
                let sum: f64 = tail.iter().sum();
                if sum <= 0.0 {
                    continue;
                }
                evaluated += 1;
                let factor = goal_sum / sum;
                for v in &mut tail {
                    *v *= factor;
                }
                let distance = tail
                    .iter()
                    .zip(&goal)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                if best.as_ref().is_none_or(|b| distance < b.distance) {
                    best = Some(Best {
                        distance,
                        index,
                        spectrum: tail,
                    });
                }
            }
            Ok((evaluated, best))
        })
        .collect();

    let mut evaluated = 0;
    let mut best: Option<Best> = None;
    for slab in per_slab {
        let (n, b) = slab?;
        evaluated += n;
        if let Some(b) = b {
            if best.as_ref().is_none_or(|cur| b.distance < cur.distance) {
                best = Some(b);
            }
        }
    }
    let best = best.ok_or(Error::InvalidConfig("grid contains no nonzero spectrum"))?;
    Ok(GridSearchReport {
        topology: t,
        target: target.values().to_vec(),
        resolution: cfg.grid_resolution,
        w_max: cfg.w_max,
        evaluated,
        nearest_distance: best.distance,
        nearest_weights: decode(best.index, side, m, h),
        nearest_spectrum: best.spectrum,
    })
}

/// Mixed-radix decoding, first edge most significant.
fn decode(mut index: usize, side: usize, m: usize, h: f64) -> Vec<f64> {
    let mut w = vec![0.0; m];
    for slot in w.iter_mut().rev() {
        *slot = (index % side) as f64 * h;
        index /= side;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn target(v: &[f64]) -> SpectrumTarget {
        SpectrumTarget::new(v.to_vec()).unwrap()
    }

    #[test]
    fn decode_is_mixed_radix() {
        assert_eq!(decode(0, 3, 3, 1.0), vec![0.0, 0.0, 0.0]);
        assert_eq!(decode(1, 3, 3, 1.0), vec![0.0, 0.0, 1.0]);
        assert_eq!(decode(3, 3, 3, 2.0), vec![0.0, 2.0, 0.0]);
        assert_eq!(decode(26, 3, 3, 1.0), vec![2.0, 2.0, 2.0]);
    }

    #[test]
    fn realizable_target_is_misuse() {
        let cfg = SamplerConfig::default();
        let err = negative_grid_search(Topology::Cycle4, &target(&[4.0, 2.0, 2.0]), &cfg);
        assert_eq!(err, Err(Error::RealizableTarget(Topology::Cycle4)));
    }

    #[test]
    fn coarse_star_search_stays_away_from_equal_triple() {
        let cfg = SamplerConfig {
            grid_resolution: 8,
            ..SamplerConfig::default()
        };
        let r = negative_grid_search(Topology::Star, &target(&[1.0, 1.0, 1.0]), &cfg).unwrap();
        assert!(r.nearest_distance >= 0.01);
        assert_eq!(r.evaluated, 9usize.pow(3) - 1);
        assert_eq!(r.nearest_weights.len(), 3);
    }
}
