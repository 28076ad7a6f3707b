//! Batch front end: read a request document, run one command, write a
//! result document plus, for `hodge` and `ns`, CSV tables for plotting.
//!
//! Exit codes: 0 success, 1 internal failure, 2 unparsable input,
//! 3 precondition violation or I/O failure, 4 unsolvable Neumann data,
//! 5 failed verification.

mod documents;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use documents::*;

use crate::builders::first_betti;
use crate::cech::{correspondence_check_with, good_cover, h1_dimensions, nerve};
use crate::checks::run_checks;
use crate::error::Error;
use crate::forms::{codifferential, harmonic_basis, harmonic_dimension, hodge_decompose};
use crate::navier_stokes::{
    interior_edge_forms, solve_ns_boundary, solve_ns_free, time_grid, verify_weak_solution_with, NS_TOLERANCE,
};
use crate::neumann::{neumann_derivative, solve_neumann};
use crate::potential::{capacity, disconnecting_sets, equilibrium_potential, DEFAULT_SEPARATOR_SIZE};
use crate::sampling;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_SOLVABILITY: i32 = 4;
pub const EXIT_VERIFICATION: i32 = 5;

const DEFAULT_SEED: u64 = 0;
const DEFAULT_COVER_SET_SIZE: usize = 3;
const DEFAULT_SAMPLES_PER_FAMILY: usize = 20;
const HODGE_TOLERANCE: f64 = 1e-10;
const NEUMANN_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Build,
    Hodge,
    Cech,
    Capacity,
    Neumann,
    Ns,
    Verify,
}

impl Command {
    pub const ALL: [Command; 7] =
        [Command::Build, Command::Hodge, Command::Cech, Command::Capacity, Command::Neumann, Command::Ns, Command::Verify];

    pub fn name(self) -> &'static str {
        match self {
            Command::Build => "build",
            Command::Hodge => "hodge",
            Command::Cech => "cech",
            Command::Capacity => "capacity",
            Command::Neumann => "neumann",
            Command::Ns => "ns",
            Command::Verify => "verify",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::new(EXIT_PARSE, format!("unknown command `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub output: PathBuf,
    pub tolerance: Option<f64>,
    pub seed: Option<u64>,
}

/// A failure with its exit code and a one-line diagnostic.
#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Solvability { .. } => EXIT_SOLVABILITY,
            Error::Singular => EXIT_INTERNAL,
            _ => EXIT_PRECONDITION,
        };
        CliError::new(code, e.to_string())
    }
}

/// What a run produced: the exit code, the document (absent on errors) and
/// the diagnostic line for nonzero codes.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub document: Option<OutputDocument>,
    pub diagnostic: Option<String>,
}

pub fn parse_request(text: &str) -> Result<Request, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::new(EXIT_PARSE, format!("cannot parse request: {e}")))
}

pub fn parse_output(text: &str) -> Result<OutputDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::new(EXIT_PARSE, format!("cannot parse document: {e}")))
}

pub fn render(doc: &OutputDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents contain only finite numbers");
    s.push('\n');
    s
}

/// Reads the request, runs the command and writes every output file.
pub fn run(config: &RunConfig) -> RunOutcome {
    let result = fs::read_to_string(&config.input)
        .map_err(|e| CliError::new(EXIT_PRECONDITION, format!("cannot read {}: {e}", config.input.display())))
        .and_then(|text| parse_request(&text))
        .and_then(|request| execute(config.command, &request, config.tolerance, config.seed))
        .and_then(|doc| write_outputs(&config.output, &doc).map(|()| doc));
    match result {
        Ok(doc) if doc.result.passed() => RunOutcome { exit_code: EXIT_OK, document: Some(doc), diagnostic: None },
        Ok(doc) => RunOutcome {
            exit_code: EXIT_VERIFICATION,
            diagnostic: Some(format!("{} verification failed; see {}", config.command, config.output.display())),
            document: Some(doc),
        },
        Err(e) => RunOutcome { exit_code: e.code, document: None, diagnostic: Some(e.message) },
    }
}

/// Runs one command on an already parsed request.
pub fn execute(command: Command, request: &Request, tolerance: Option<f64>, seed: Option<u64>) -> Result<OutputDocument, CliError> {
    if let Some(t) = tolerance {
        if !(t.is_finite() && t >= 0.0) {
            return Err(CliError::new(EXIT_PRECONDITION, format!("tolerance must be finite and nonnegative, got {t}")));
        }
    }
    let result = match command {
        Command::Build => CommandResult::Build(run_build(request)?),
        Command::Hodge => CommandResult::Hodge(run_hodge(request, tolerance, seed)?),
        Command::Cech => CommandResult::Cech(run_cech(request)?),
        Command::Capacity => CommandResult::Capacity(run_capacity(request)?),
        Command::Neumann => CommandResult::Neumann(run_neumann(request, tolerance)?),
        Command::Ns => CommandResult::Ns(run_ns(request, tolerance)?),
        Command::Verify => CommandResult::Verify(run_checks(
            seed.unwrap_or(DEFAULT_SEED),
            request.samples_per_family.unwrap_or(DEFAULT_SAMPLES_PER_FAMILY),
            tolerance,
        )?),
    };
    Ok(OutputDocument { command, seed, tolerance, result })
}

fn run_build(request: &Request) -> Result<BuildResult, CliError> {
    let g = request.resolve_graph()?;
    Ok(BuildResult {
        graph: GraphDocument::from_graph(&g),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        first_betti: first_betti(&g),
    })
}

fn run_hodge(request: &Request, tolerance: Option<f64>, seed: Option<u64>) -> Result<HodgeResult, CliError> {
    let g = request.resolve_graph()?;
    let form = match &request.form {
        Some(f) => f.clone(),
        None => sampling::random_form(&g, &mut sampling::rng(seed.unwrap_or(DEFAULT_SEED))),
    };
    let split = hodge_decompose(&g, &form)?;
    let tol = tolerance.unwrap_or(HODGE_TOLERANCE);
    let reconstruction_residual = split.reconstruction_residual(&form);
    let orthogonality_residual = split.orthogonality_residual(&g);
    let harmonic_divergence = codifferential(&g, &split.harmonic).max_abs();
    let passed = reconstruction_residual < tol && orthogonality_residual < tol && harmonic_divergence < tol;
    Ok(HodgeResult {
        form,
        split,
        reconstruction_residual,
        orthogonality_residual,
        harmonic_divergence,
        harmonic_dimension: harmonic_dimension(&g),
        first_betti: first_betti(&g),
        passed,
    })
}

fn run_cech(request: &Request) -> Result<CechResult, CliError> {
    let g = request.resolve_graph()?;
    let (cover, constructed) = match &request.cover {
        Some(doc) => (doc.to_cover(&g)?, false),
        None => (good_cover(&g, request.max_set_size.unwrap_or(DEFAULT_COVER_SET_SIZE))?.cover, true),
    };
    let n = nerve(&g, &cover)?;
    let correspondence =
        correspondence_check_with(&g, &cover, request.max_separator_size.unwrap_or(DEFAULT_SEPARATOR_SIZE))?;
    Ok(CechResult { validity: cover.validity(&g), h1: h1_dimensions(&n), cover, constructed, nerve: n, correspondence })
}

fn run_capacity(request: &Request) -> Result<CapacityResult, CliError> {
    let g = request.resolve_graph()?;
    let target = request.target.clone().ok_or_else(|| CliError::new(EXIT_PRECONDITION, "capacity needs a `target`"))?;
    let disconnecting = match &request.region {
        Some(region) => disconnecting_sets(&g, region, request.max_separator_size.unwrap_or(DEFAULT_SEPARATOR_SIZE))?,
        None => Vec::new(),
    };
    Ok(CapacityResult {
        capacity: capacity(&g, &target)?,
        equilibrium_potential: equilibrium_potential(&g, &target)?,
        target,
        disconnecting_sets: disconnecting,
    })
}

fn run_neumann(request: &Request, tolerance: Option<f64>) -> Result<NeumannResult, CliError> {
    let g = request.resolve_graph()?;
    let data = request.neumann.clone().ok_or_else(|| CliError::new(EXIT_PRECONDITION, "neumann needs `neumann` data"))?;
    let solution = solve_neumann(&g, &data)?;
    let derivatives: Vec<f64> = data.boundary.iter().map(|&p| neumann_derivative(&g, &solution, p)).collect();
    let max_flux_error = derivatives.iter().zip(&data.fluxes).fold(0.0_f64, |m, (d, f)| m.max((d - f).abs()));
    let on_boundary = g.mask(&data.boundary);
    let interior_harmonicity = g
        .generator(&solution)
        .iter()
        .enumerate()
        .filter(|&(x, _)| !on_boundary[x])
        .fold(0.0_f64, |m, (_, a)| m.max(a.abs()));
    let tol = tolerance.unwrap_or(NEUMANN_TOLERANCE);
    Ok(NeumannResult {
        passed: max_flux_error < tol && interior_harmonicity < tol,
        data,
        solution,
        derivatives,
        max_flux_error,
        interior_harmonicity,
    })
}

fn run_ns(request: &Request, tolerance: Option<f64>) -> Result<NsResult, CliError> {
    let g = request.resolve_graph()?;
    let viscosity = request.viscosity.unwrap_or(1.0);
    let (solution, forms) = match (&request.neumann, &request.u0) {
        (Some(_), Some(_)) => return Err(CliError::new(EXIT_PRECONDITION, "give either `neumann` or `u0`, not both")),
        (Some(data), None) => (solve_ns_boundary(&g, data, viscosity)?, interior_edge_forms(&g, &data.boundary)),
        (None, Some(u0)) => (solve_ns_free(&g, u0, viscosity)?, harmonic_basis(&g)?),
        (None, None) => return Err(CliError::new(EXIT_PRECONDITION, "ns needs `u0` or `neumann` data")),
    };
    let times = request.times.clone().unwrap_or_else(|| time_grid(9.0, 10));
    let report = verify_weak_solution_with(&g, &solution, &forms, &times, tolerance.unwrap_or(NS_TOLERANCE))?;
    Ok(NsResult { first_betti: first_betti(&g), test_form_count: forms.len(), times, report, solution })
}

/// Paths of the CSV tables written next to `output`.
pub fn table_paths(output: &Path) -> (PathBuf, PathBuf) {
    let stem = output.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "output".into());
    let dir = output.parent().unwrap_or(Path::new(""));
    (dir.join(format!("{stem}.edges.csv")), dir.join(format!("{stem}.vertices.csv")))
}

fn write_outputs(output: &Path, doc: &OutputDocument) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::new(EXIT_PRECONDITION, format!("cannot write {}: {e}", output.display()));
    fs::write(output, render(doc)).map_err(io)?;
    if let Some((edges, vertices)) = tables(doc) {
        let (edge_path, vertex_path) = table_paths(output);
        fs::write(edge_path, edges).map_err(io)?;
        fs::write(vertex_path, vertices).map_err(io)?;
    }
    Ok(())
}

/// Edge and vertex tables for `hodge` and `ns` results.
pub fn tables(doc: &OutputDocument) -> Option<(String, String)> {
    match &doc.result {
        CommandResult::Hodge(r) => {
            let edges = csv_table(
                &["edge", "form", "exact", "harmonic"],
                (0..r.form.len()).map(|i| vec![i.to_string(), fmt(r.form[i]), fmt(r.split.exact[i]), fmt(r.split.harmonic[i])]),
            );
            let vertices =
                csv_table(&["vertex", "potential"], r.split.potential.iter().enumerate().map(|(x, p)| vec![x.to_string(), fmt(*p)]));
            Some((edges, vertices))
        }
        CommandResult::Ns(r) => {
            let edges = csv_table(
                &["edge", "velocity"],
                r.solution.velocity.iter().enumerate().map(|(i, v)| vec![i.to_string(), fmt(*v)]),
            );
            let vertices = csv_table(
                &["vertex", "pressure"],
                r.solution.pressure.iter().enumerate().map(|(x, p)| vec![x.to_string(), fmt(*p)]),
            );
            Some((edges, vertices))
        }
        _ => None,
    }
}

fn fmt(x: f64) -> String {
    // Rust's shortest round-trip formatting
    format!("{x:?}")
}

fn csv_table(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::BuilderSpec;
    use crate::neumann::NeumannData;

    fn c4_request() -> Request {
        Request { builder: Some(BuilderSpec::cycle(4)), ..Request::default() }
    }

    #[test]
    fn hodge_on_mixed_form() {
        let request = Request { form: Some(vec![0.0, 1.0, 1.0, 2.0].into()), ..c4_request() };
        let doc = execute(Command::Hodge, &request, None, None).unwrap();
        let CommandResult::Hodge(r) = &doc.result else { panic!("wrong result kind") };
        assert!(r.passed);
        for i in 0..4 {
            assert!((r.split.harmonic[i] - 1.0).abs() < 1e-10);
        }
        assert_eq!(parse_output(&render(&doc)).unwrap(), doc);
    }

    #[test]
    fn cech_on_four_arcs() {
        let request = Request {
            cover: Some(CoverDocument { labels: None, sets: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]] }),
            ..c4_request()
        };
        let doc = execute(Command::Cech, &request, None, None).unwrap();
        let CommandResult::Cech(r) = &doc.result else { panic!("wrong result kind") };
        assert_eq!(r.h1.h1, 1);
        assert!(r.correspondence.agree);
    }

    #[test]
    fn ns_with_unbalanced_fluxes_is_a_solvability_error() {
        let request = Request { neumann: Some(NeumannData { boundary: vec![0, 2], fluxes: vec![1.0, 1.0] }), ..c4_request() };
        assert_eq!(execute(Command::Ns, &request, None, None).unwrap_err().code, EXIT_SOLVABILITY);
    }

    #[test]
    fn missing_inputs_are_precondition_errors() {
        assert_eq!(execute(Command::Build, &Request::default(), None, None).unwrap_err().code, EXIT_PRECONDITION);
        assert_eq!(execute(Command::Capacity, &c4_request(), None, None).unwrap_err().code, EXIT_PRECONDITION);
        assert_eq!(parse_request("{\"graf\": 1}").unwrap_err().code, EXIT_PARSE);
        assert_eq!("hodgepodge".parse::<Command>().unwrap_err().code, EXIT_PARSE);
    }

    #[test]
    fn table_paths_sit_next_to_output() {
        let (e, v) = table_paths(Path::new("/tmp/run/out.json"));
        assert_eq!(e, Path::new("/tmp/run/out.edges.csv"));
        assert_eq!(v, Path::new("/tmp/run/out.vertices.csv"));
    }
}
