use thiserror::Error;

use crate::realizability::Certificate;
use crate::Topology;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{topology} has {expected} edges but {found} weights were given")]
    DimensionMismatch {
        topology: Topology,
        expected: usize,
        found: usize,
    },
    #[error("weight {index} is negative ({value})")]
    NegativeWeight { index: usize, value: f64 },
    #[error("value {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },
    #[error("expected {expected} eigenvalues, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("eigenvalue {index} is negative ({value})")]
    NegativeEigenvalue { index: usize, value: f64 },
    #[error("complete graph needs at least 2 vertices, got {0}")]
    InvalidOrder(usize),
    #[error("no closed-form cubic for {0}")]
    NoClosedForm(Topology),
    #[error("cubic has complex roots (discriminant {discriminant:e})")]
    NoThreeRealRoots { discriminant: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NonConvergence { sweeps: usize },
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("not realizable on {topology}: {certificate}")]
    NotRealizable {
        topology: Topology,
        certificate: Certificate,
    },
    #[error("construction for {topology} failed on a realizable target: {detail}")]
    InternalInfeasible { topology: Topology, detail: String },
    #[error("not a Laplacian spectrum: smallest eigenvalue is {0}")]
    NotLaplacianSpectrum(f64),
    #[error("suspension weight must be nonnegative, got {0}")]
    NegativeSuspensionWeight(f64),
    #[error("target is realizable on {0}; negative search needs an unrealizable target")]
    RealizableTarget(Topology),
    #[error("topology {0} is not supported here")]
    UnsupportedTopology(Topology),
    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(&'static str),
}
