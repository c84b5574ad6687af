mod args;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use lapspec::format::Record;
use lapspec::oracle::{self, SamplerConfig};
use lapspec::region::{RegionGrid, PANELS};
use lapspec::{
    build_laplacian, check, invert, reduced_cubic, spectrum_closed_form, spectrum_numeric,
    suspend_spectrum, Error, Spectrum, SpectrumTarget, Topology, WeightVector,
};

use args::{Cli, Command, Graph, Sampling};

const THREADS_VAR: &str = "REGION_THREADS";

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Eigs { graph, weights } => eigs(graph, weights),
        Command::Check { graph, triple } => {
            let t = topology_for_target(graph, triple.len())?;
            let target = SpectrumTarget::new(triple)?;
            let verdict = check(t, &target)?;
            let mut r = Record::new()
                .field("graph", t)
                .nums("target", target.values())
                .field("realizable", verdict.realizable);
            if let Some(c) = verdict.certificate {
                r = r.field("certificate", c);
            }
            emit(&r)
        }
        Command::Invert { graph, triple } => {
            let t = topology_for_target(graph, triple.len())?;
            let target = SpectrumTarget::new(triple)?;
            match invert(t, &target) {
                Ok(sol) => emit(
                    &Record::new()
                        .field("graph", t)
                        .nums("weights", sol.weights.values())
                        .num("residual", sol.residual),
                ),
                Err(Error::NotRealizable { certificate, .. }) => {
                    emit(
                        &Record::new()
                            .field("graph", t)
                            .nums("target", target.values())
                            .field("realizable", false)
                            .field("certificate", &certificate),
                    )?;
                    eprintln!("error: target is not realizable on {t}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Region {
            resolution,
            out,
            svg,
            normalization,
        } => region(resolution, normalization, out.as_deref(), svg.as_deref()),
        Command::Frac {
            graph,
            sampling,
            order,
        } => {
            let t = topology_for_order(graph, order)?;
            let cfg = sampler(&sampling)?;
            let est = oracle::estimate_region_fraction(t, &cfg)?;
            emit(&est.record(t, &cfg))
        }
        Command::Suspend { spectrum, c } => {
            let s = suspend_spectrum(&Spectrum::new(spectrum), c)?;
            emit(&Record::new().nums("spectrum", &snap(s.values())))
        }
        Command::Forward {
            graph,
            sampling,
            w_max,
        } => {
            let t = topology_for_order(graph, Some(4))?;
            let cfg = SamplerConfig {
                w_max,
                ..sampler(&sampling)?
            };
            cfg.validate()?;
            let report = oracle::sample_forward(t, &cfg)?;
            for r in report.records() {
                emit(&r)?;
            }
            Ok(status(report.failures.is_empty()))
        }
        Command::Roundtrip {
            graph,
            sampling,
            order,
        } => {
            let t = topology_for_order(graph, order)?;
            let report = oracle::roundtrip_suite(t, &sampler(&sampling)?)?;
            emit(&report.record())?;
            Ok(status(report.infeasible == 0 && report.not_realizable == 0))
        }
        Command::Grid {
            graph,
            triple,
            resolution,
            w_max,
        } => {
            let t = topology_for_target(graph, triple.len())?;
            let cfg = SamplerConfig::new(0, 1, w_max, resolution)?;
            let report = oracle::negative_grid_search(t, &SpectrumTarget::new(triple)?, &cfg)?;
            emit(&report.record())
        }
    }
}

fn eigs(graph: Graph, weights: Vec<f64>) -> Outcome {
    let t = match graph {
        Graph::Fixed(t) => t,
        Graph::AnyComplete => order_from_edges(weights.len())
            .map(Topology::Complete)
            .ok_or_else(|| {
                Failure::usage(format!(
                    "{} weights do not fill a complete graph",
                    weights.len()
                ))
            })?,
    };
    let w = WeightVector::new(weights)?;
    let numeric = spectrum_numeric(&build_laplacian(t, &w)?)?;
    let mut r = Record::new()
        .field("graph", t)
        .nums("spectrum", &snap(numeric.values()));
    if reduced_cubic(t, &w).is_ok() {
        let closed = spectrum_closed_form(t, &w)?;
        r = r
            .nums("closed_form", &snap(closed.values()))
            .num("route_diff", closed.max_abs_diff(&numeric));
    }
    emit(&r)
}

fn region(
    resolution: usize,
    normalization: f64,
    csv: Option<&Path>,
    svg: Option<&Path>,
) -> Outcome {
    let threads = match std::env::var(THREADS_VAR) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| {
                    Failure::usage(format!("{THREADS_VAR} must be a positive integer"))
                })?,
        ),
        Err(_) => None,
    };
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            b = b.num_threads(n);
        }
        b.build().map_err(|e| Failure::usage(e.to_string()))?
    };
    let grid = pool.install(|| RegionGrid::compute(resolution, normalization))?;

    let mut r = Record::new()
        .field("resolution", resolution)
        .num("normalization", normalization)
        .field("cells", grid.cells.len())
        .field("mask_violations", grid.mask_violations());
    for t in PANELS {
        r = r.num(&format!("gray_{}", t.name()), grid.gray_fraction(t)?);
    }
    if let Some(path) = csv {
        let mut out = BufWriter::new(create(path)?);
        grid.write_csv(&mut out)?;
        out.flush()?;
        r = r.field("csv", path.display());
    }
    if let Some(path) = svg {
        let mut out = create(path)?;
        out.write_all(grid.svg_string().as_bytes())?;
        r = r.field("svg", path.display());
    }
    emit(&r)
}

fn create(path: &Path) -> Result<File, Failure> {
    File::create(path).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn sampler(s: &Sampling) -> Result<SamplerConfig, Failure> {
    let cfg = SamplerConfig::default()
        .with_samples(s.samples)
        .with_seed(s.seed);
    cfg.validate()?;
    Ok(cfg)
}

fn topology_for_target(graph: Graph, len: usize) -> Result<Topology, Failure> {
    match graph {
        Graph::Fixed(t) => Ok(t),
        Graph::AnyComplete => Ok(Topology::complete(len + 1)?),
    }
}

fn topology_for_order(graph: Graph, order: Option<usize>) -> Result<Topology, Failure> {
    match (graph, order) {
        (Graph::Fixed(t), _) => Ok(t),
        (Graph::AnyComplete, Some(n)) => Ok(Topology::complete(n)?),
        (Graph::AnyComplete, None) => Err(Failure::usage("--graph kn needs --order")),
    }
}

fn order_from_edges(m: usize) -> Option<usize> {
    (2..)
        .take_while(|n| n * (n - 1) / 2 <= m)
        .find(|n| n * (n - 1) / 2 == m)
}

/// Zeroes entries that are roundoff relative to the largest magnitude.
fn snap(values: &[f64]) -> Vec<f64> {
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    values
        .iter()
        .map(|&v| if v.abs() <= 1e-12 * scale { 0.0 } else { v })
        .collect()
}

fn emit(r: &Record) -> Outcome {
    let mut out = io::stdout().lock();
    writeln!(out, "{r}")?;
    Ok(ExitCode::SUCCESS)
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
