//! Weighted graph Laplacians on four vertices and on complete graphs.
//!
//! The crate covers three directions:
//!
//! * **forward**: edge weights to Laplacian spectrum, by two independent
//!   routes (closed-form characteristic cubic and cyclic Jacobi);
//! * **decision**: closed-form realizability criteria for the star, 4-cycle,
//!   4-path and kite (paw) graphs, plus the trivial criterion for `K_n`;
//! * **inverse**: explicit nonnegative weights for any realizable target.
//!
//! The [`oracle`] module holds brute-force cross checks and a Monte Carlo
//! estimator of the realizable fraction of the eigenvalue simplex, and
//! [`region`] rasterizes the realizability regions to CSV and SVG.
//!
//! ```
//! use lapspec::{build_laplacian, spectrum_numeric, Topology, WeightVector};
//!
//! let w = WeightVector::new(vec![1.0, 1.0, 1.0]).unwrap();
//! let spec = spectrum_numeric(&build_laplacian(Topology::Star, &w).unwrap()).unwrap();
//! assert!((spec.values()[3] - 4.0).abs() < 1e-12);
//! ```

mod error;
pub mod format;
pub mod inverse;
pub mod oracle;
pub mod realizability;
pub mod region;
pub mod spectral;
mod topology;

pub use error::{Error, Result};
pub use inverse::{
    invert, invert_complete, invert_cycle, invert_kite, invert_path, invert_star, suspend_spectrum,
    CycleParams, InverseSolution, KiteParams,
};
pub use realizability::{
    check, check_complete, check_cycle, check_kite, check_path, check_star, normalize_target,
    Certificate, NormalizedTarget, PathSymmetrics, SpectrumTarget, Verdict, BOUNDARY_TOL,
};
pub use spectral::{
    build_laplacian, reduced_cubic, scale_weights, solve_cubic_real, spectrum_closed_form,
    spectrum_numeric, CubicCoeffs, Spectrum, SymmetricMatrix,
};
pub use topology::{Topology, WeightVector};
