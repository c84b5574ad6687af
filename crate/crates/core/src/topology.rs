use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Graph topologies with a fixed edge numbering.
///
/// Vertices are 0-based below (`v1` is index 0).
///
/// | topology | edges, in weight order |
/// |----------|------------------------|
/// | `Star`   | v1v4, v2v4, v3v4 (v4 is the centre) |
/// | `Cycle4` | v1v2, v2v3, v3v4, v4v1 |
/// | `Path4`  | v1v2, v2v3, v3v4 (a `Cycle4` with v4v1 removed) |
/// | `Kite`   | v1v2, v2v3, v1v3, v3v4 |
/// | `Complete(n)` | every pair (i, j), i < j, lexicographic |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Star,
    Cycle4,
    Path4,
    Kite,
    Complete(usize),
}

const STAR_EDGES: [(usize, usize); 3] = [(0, 3), (1, 3), (2, 3)];
const CYCLE_EDGES: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 3), (3, 0)];
const PATH_EDGES: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 3)];
const KITE_EDGES: [(usize, usize); 4] = [(0, 1), (1, 2), (0, 2), (2, 3)];

impl Topology {
    /// The four non-complete graphs plus `K4`, in figure order.
    pub const FOUR_VERTEX: [Topology; 5] = [
        Topology::Star,
        Topology::Cycle4,
        Topology::Path4,
        Topology::Kite,
        Topology::Complete(4),
    ];

    /// Checked constructor for `Complete(n)`.
    pub fn complete(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        Ok(Topology::Complete(order))
    }

    pub fn order(self) -> usize {
        match self {
            Topology::Complete(n) => n,
            _ => 4,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            Topology::Star | Topology::Path4 => 3,
            Topology::Cycle4 | Topology::Kite => 4,
            Topology::Complete(n) => n * n.saturating_sub(1) / 2,
        }
    }

    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            Topology::Star => STAR_EDGES.to_vec(),
            Topology::Cycle4 => CYCLE_EDGES.to_vec(),
            Topology::Path4 => PATH_EDGES.to_vec(),
            Topology::Kite => KITE_EDGES.to_vec(),
            Topology::Complete(n) => (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect(),
        }
    }

    /// Index of edge `(i, j)` in `Complete(n)` lexicographic order.
    pub(crate) fn complete_edge_index(n: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < n);
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    pub(crate) fn validate(self) -> Result<()> {
        match self {
            Topology::Complete(n) if n < 2 => Err(Error::InvalidOrder(n)),
            _ => Ok(()),
        }
    }

    /// Stable short name, used in records and CSV headers.
    pub fn name(self) -> String {
        match self {
            Topology::Star => "star".into(),
            Topology::Cycle4 => "cycle".into(),
            Topology::Path4 => "path".into(),
            Topology::Kite => "kite".into(),
            Topology::Complete(n) => format!("k{n}"),
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Topology {
    type Err = String;

    /// Accepts `star`, `cycle`, `path`, `kite` and `k<n>` (e.g. `k4`).
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "star" => Ok(Topology::Star),
            "cycle" | "cycle4" => Ok(Topology::Cycle4),
            "path" | "path4" => Ok(Topology::Path4),
            "kite" | "paw" => Ok(Topology::Kite),
            other => other
                .strip_prefix('k')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 2)
                .map(Topology::Complete)
                .ok_or_else(|| format!("unknown graph '{s}'")),
        }
    }
}

/// Nonnegative edge weights in a topology's edge order.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
            if value < 0.0 {
                return Err(Error::NegativeWeight { index, value });
            }
        }
        Ok(WeightVector(values))
    }

    pub fn zeros(len: usize) -> Self {
        WeightVector(vec![0.0; len])
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

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts_match_edge_lists() {
        for t in Topology::FOUR_VERTEX
            .into_iter()
            .chain([Topology::Complete(7)])
        {
            assert_eq!(t.edges().len(), t.edge_count(), "{t}");
        }
        assert_eq!(Topology::Complete(2).edge_count(), 1);
    }

    #[test]
    fn complete_edge_index_is_lexicographic() {
        let n = 6;
        for (k, (i, j)) in Topology::Complete(n).edges().into_iter().enumerate() {
            assert_eq!(Topology::complete_edge_index(n, i, j), k);
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("star".parse::<Topology>().unwrap(), Topology::Star);
        assert_eq!("K4".parse::<Topology>().unwrap(), Topology::Complete(4));
        assert_eq!("k11".parse::<Topology>().unwrap(), Topology::Complete(11));
        assert!("k1".parse::<Topology>().is_err());
        assert!("wheel".parse::<Topology>().is_err());
        for t in Topology::FOUR_VERTEX {
            assert_eq!(t.name().parse::<Topology>().unwrap(), t);
        }
    }

    #[test]
    fn complete_order_checked() {
        assert_eq!(Topology::complete(1), Err(Error::InvalidOrder(1)));
        assert_eq!(Topology::complete(2), Ok(Topology::Complete(2)));
    }

    #[test]
    fn weights_reject_negative_and_nan() {
        assert!(matches!(
            WeightVector::new(vec![1.0, -0.5]),
            Err(Error::NegativeWeight { index: 1, .. })
        ));
        assert!(matches!(
            WeightVector::new(vec![f64::NAN]),
            Err(Error::NonFinite { index: 0, .. })
        ));
        assert!(WeightVector::new(vec![0.0, 0.0, 0.0]).is_ok());
    }
}
