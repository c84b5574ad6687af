use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lapspec::Topology;

#[derive(Debug, Parser)]
#[command(
    name = "lapspec",
    version,
    about = "Spectra, realizability and inverse weights for small weighted Laplacians"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// `star`, `cycle`, `path`, `kite`, `k<n>`, or `kn` to take the order from
/// the input length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Graph {
    Fixed(Topology),
    AnyComplete,
}

pub fn parse_graph(s: &str) -> Result<Graph, String> {
    if s.eq_ignore_ascii_case("kn") {
        return Ok(Graph::AnyComplete);
    }
    s.parse().map(Graph::Fixed)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Laplacian spectrum of a weighted graph.
    Eigs {
        #[arg(long, value_parser = parse_graph)]
        graph: Graph,
        /// Edge weights, comma separated, in the graph's edge order.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        weights: Vec<f64>,
    },
    /// Decide whether nonzero eigenvalues are realizable on a graph.
    Check {
        #[arg(long, value_parser = parse_graph)]
        graph: Graph,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        triple: Vec<f64>,
    },
    /// Nonnegative weights realizing the given nonzero eigenvalues.
    Invert {
        #[arg(long, value_parser = parse_graph)]
        graph: Graph,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        triple: Vec<f64>,
    },
    /// Rasterize the realizable regions of the five four-vertex graphs.
    Region {
        #[arg(long)]
        resolution: usize,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG output path.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Eigenvalue sum of the lattice.
        #[arg(long, default_value_t = 1.0)]
        normalization: f64,
    },
    /// Monte Carlo share of the eigenvalue simplex that is realizable.
    Frac {
        #[arg(long, value_parser = parse_graph)]
        graph: Graph,
        #[command(flatten)]
        sampling: Sampling,
        /// Order for `--graph kn`.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Spectrum after adding a vertex joined to all others with weight c.
    Suspend {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        spectrum: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
    },
    /// Sample random weights and confirm the criterion accepts every spectrum.
    Forward {
        #[arg(long, value_parser = parse_graph)]
        graph: Graph,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, default_value_t = 4.0)]
        w_max: f64,
    },
    /// Invert random realizable targets and report the worst residual.
    Roundtrip {
        #[arg(long, value_parser = parse_graph)]
        graph: Graph,
        #[command(flatten)]
        sampling: Sampling,
        /// Order for `--graph kn`.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Distance from an unrealizable target to the spectra of a weight grid.
    Grid {
        #[arg(long, value_parser = parse_graph)]
        graph: Graph,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        triple: Vec<f64>,
        #[arg(long, default_value_t = 25)]
        resolution: usize,
        #[arg(long, default_value_t = 4.0)]
        w_max: f64,
    },
}

#[derive(Debug, Args)]
pub struct Sampling {
    #[arg(long)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
