//! Forward problem: weighted Laplacians and their spectra.
//!
//! Two routes are kept deliberately apart. [`reduced_cubic`] writes down the
//! characteristic cubic from symmetric functions of the weights, while
//! [`spectrum_numeric`] diagonalizes the assembled matrix. Neither calls the
//! other, so agreement between them checks both.

mod cubic;
mod jacobi;
mod laplacian;
mod matrix;

pub(crate) use cubic::{real_roots, real_roots_forced};
pub use cubic::{solve_cubic_real, CubicCoeffs};
pub use jacobi::{spectrum_numeric, MAX_SWEEPS};
pub use laplacian::{build_laplacian, reduced_cubic, scale_weights, spectrum_closed_form};
pub use matrix::SymmetricMatrix;

/// Eigenvalues sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

/// Lower bound below which an eigenvalue is treated as genuinely negative.
pub const EIGEN_TOL: f64 = 1e-9;

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum(values)
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

    /// Everything except the smallest entry (the forced zero).
    pub fn nonzero_slots(&self) -> &[f64] {
        self.0.get(1..).unwrap_or(&[])
    }

    /// Largest entrywise deviation from `other`; infinite on length mismatch.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}
