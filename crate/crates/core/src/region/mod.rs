//! Realizability regions on the barycentric lattice of the eigenvalue simplex.

mod svg;

use std::io::{self, Write};

use rayon::prelude::*;

use crate::format::sig9;
use crate::realizability::{check, SpectrumTarget};
use crate::{Error, Result, Topology};

/// Panel order, which is also the bit order of [`Cell::mask`].
pub const PANELS: [Topology; 5] = [
    Topology::Star,
    Topology::Cycle4,
    Topology::Path4,
    Topology::Kite,
    Topology::Complete(4),
];

pub const CSV_HEADER: &str = "x,y,z,star,cycle,path,kite,k4";

/// Bit of `t` in a cell mask.
pub fn bit(t: Topology) -> Result<u8> {
    PANELS
        .iter()
        .position(|&p| p == t)
        .map(|n| 1 << n)
        .ok_or(Error::UnsupportedTopology(t))
}

/// Lattice point `(i, j, k)`, `i + j + k = resolution`, with one bit per
/// panel topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub mask: u8,
}

impl Cell {
    pub fn contains(&self, t: Topology) -> bool {
        bit(t).is_ok_and(|b| self.mask & b != 0)
    }

    pub fn on_boundary(&self) -> bool {
        self.i == 0 || self.j == 0 || self.k == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid {
    pub resolution: usize,
    pub normalization: f64,
    /// Rows of increasing `i`, each of increasing `j`.
    pub cells: Vec<Cell>,
}

pub fn cell_count(resolution: usize) -> usize {
    (resolution + 1) * (resolution + 2) / 2
}

impl RegionGrid {
    /// Evaluates every panel criterion at `normalization · (i, j, k) / resolution`.
    pub fn compute(resolution: usize, normalization: f64) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::InvalidConfig("resolution must be at least 2"));
        }
        if !(normalization.is_finite() && normalization > 0.0) {
            return Err(Error::InvalidConfig(
                "normalization must be positive and finite",
            ));
        }
        let rows: Vec<Result<Vec<Cell>>> = (0..=resolution)
            .into_par_iter()
            .map(|i| {
                (0..=resolution - i)
                    .map(|j| {
                        let k = resolution - i - j;
                        let target = SpectrumTarget::new(
                            [i, j, k]
                                .map(|n| coordinate(n, resolution, normalization))
                                .to_vec(),
                        )?;
                        let mut mask = 0;
                        for (n, &t) in PANELS.iter().enumerate() {
                            if check(t, &target)?.realizable {
                                mask |= 1 << n;
                            }
                        }
                        Ok(Cell { i, j, k, mask })
                    })
                    .collect()
            })
            .collect();
        let mut cells = Vec::with_capacity(cell_count(resolution));
        for row in rows {
            cells.extend(row?);
        }
        Ok(RegionGrid {
            resolution,
            normalization,
            cells,
        })
    }

    pub fn coordinates(&self, cell: &Cell) -> [f64; 3] {
        [cell.i, cell.j, cell.k].map(|n| coordinate(n, self.resolution, self.normalization))
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.resolution + 1) - i * i.saturating_sub(1) / 2 + j
    }

    pub fn cell(&self, i: usize, j: usize) -> Option<&Cell> {
        if i + j > self.resolution {
            return None;
        }
        self.cells.get(self.index(i, j))
    }

    /// Gray cells over interior cells, i.e. the realizable share of the open
    /// triangle.
    pub fn gray_fraction(&self, t: Topology) -> Result<f64> {
        let b = bit(t)?;
        let interior: Vec<&Cell> = self.cells.iter().filter(|c| !c.on_boundary()).collect();
        if interior.is_empty() {
            return Ok(0.0);
        }
        let gray = interior.iter().filter(|c| c.mask & b != 0).count();
        Ok(gray as f64 / interior.len() as f64)
    }

    /// Cells breaking the K4 bit or the inclusions path ⊆ cycle, star ⊆ kite,
    /// path ⊆ kite.
    pub fn mask_violations(&self) -> usize {
        let [star, cycle, path, kite, k4] = [1u8, 2, 4, 8, 16];
        self.cells
            .iter()
            .filter(|c| {
                let m = c.mask;
                m & k4 == 0
                    || (m & path != 0 && m & cycle == 0)
                    || (m & star != 0 && m & kite == 0)
                    || (m & path != 0 && m & kite == 0)
            })
            .count()
    }

    /// Cells whose mask differs from that of some coordinate permutation.
    pub fn symmetry_violations(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| {
                let (i, j, k) = (c.i, c.j, c.k);
                [(i, k), (j, i), (j, k), (k, i), (k, j)]
                    .iter()
                    .any(|&(a, b)| self.cell(a, b).is_none_or(|o| o.mask != c.mask))
            })
            .count()
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for c in &self.cells {
            let [x, y, z] = self.coordinates(c);
            write!(out, "{},{},{}", sig9(x), sig9(y), sig9(z))?;
            for n in 0..PANELS.len() {
                write!(out, ",{}", (c.mask >> n) & 1)?;
            }
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn svg_string(&self) -> String {
        svg::render(self)
    }
}

fn coordinate(n: usize, resolution: usize, normalization: f64) -> f64 {
    normalization * n as f64 / resolution as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolution_two() {
        let g = RegionGrid::compute(2, 1.0).unwrap();
        assert_eq!(g.cells.len(), 6);
        assert!(g.cells.iter().all(|c| c.contains(Topology::Complete(4))));
        let csv = g.csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[1], "0,0,1,1,1,1,1,1");
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn lookup_matches_storage() {
        let g = RegionGrid::compute(7, 1.0).unwrap();
        for c in &g.cells {
            assert_eq!(g.cell(c.i, c.j), Some(c));
        }
        assert_eq!(g.cell(5, 3), None);
    }

    #[test]
    fn centroid_only_in_k4() {
        let g = RegionGrid::compute(30, 3.0).unwrap();
        assert_eq!(g.cell(10, 10).unwrap().mask, 16);
    }

    #[test]
    fn invariants_at_moderate_resolution() {
        let g = RegionGrid::compute(60, 1.0).unwrap();
        assert_eq!(g.cells.len(), cell_count(60));
        assert_eq!(g.mask_violations(), 0);
        assert_eq!(g.symmetry_violations(), 0);
        let f = g.gray_fraction(Topology::Cycle4).unwrap();
        assert!((f - 0.75).abs() < 0.02, "{f}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RegionGrid::compute(1, 1.0).is_err());
        assert!(RegionGrid::compute(4, 0.0).is_err());
        assert!(bit(Topology::Complete(5)).is_err());
    }
}
