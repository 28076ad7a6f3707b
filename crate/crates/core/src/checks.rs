//! A seeded battery of identity checks over random graphs of every family.

use serde::{Deserialize, Serialize};

use crate::builders::{first_betti, Family};
use crate::error::Result;
use crate::forms::{
    codifferential, derivation, harmonic_basis, harmonic_dimension, hodge_decompose, hodge_laplacian, inner,
    norm_squared,
};
use crate::graph::WeightedGraph;
use crate::navier_stokes::{solve_ns_free, time_grid, verify_weak_solution_with};
use crate::neumann::{neumann_derivative, solve_neumann, NeumannData};
use crate::potential::{harmonic_extension, BoundaryData};
use crate::sampling::{self, random_form, random_function, random_graph, SampleRng};
use crate::vectors::OneForm;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckSuite {
    pub seed: u64,
    pub samples_per_family: usize,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

struct Tally {
    name: &'static str,
    tolerance: f64,
    cases: usize,
    max: f64,
}

impl Tally {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self { name, tolerance, cases: 0, max: 0.0 }
    }

    fn record(&mut self, residual: f64) {
        self.cases += 1;
        // NaN must fail, so compare through `!(a <= b)`
        if !(residual <= self.max) {
            self.max = residual;
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.into(),
            cases: self.cases,
            max_residual: self.max,
            tolerance: self.tolerance,
            passed: self.max < self.tolerance,
        }
    }
}

fn relative(residual: f64, scale: f64) -> f64 {
    residual / scale.max(f64::MIN_POSITIVE).max(1.0)
}

/// Runs every check on `samples_per_family` random graphs per builder
/// family. `tolerance` overrides every per-check threshold when given.
pub fn run_checks(seed: u64, samples_per_family: usize, tolerance: Option<f64>) -> Result<CheckSuite> {
    let tol = |default: f64| tolerance.unwrap_or(default);
    let mut energy = Tally::new("energy_identity", tol(1e-12));
    let mut adjoint = Tally::new("adjointness", tol(1e-12));
    let mut self_adjoint = Tally::new("hodge_laplacian_self_adjoint", tol(1e-12));
    let mut hodge = Tally::new("hodge_decomposition", tol(1e-10));
    let mut dims = Tally::new("harmonic_dimension_equals_betti", tol(0.5));
    let mut maximum = Tally::new("maximum_principle", tol(1e-12));
    let mut neumann = Tally::new("neumann_round_trip", tol(1e-10));
    let mut ns = Tally::new("ns_weak_residual", tol(1e-10));

    let mut rng = sampling::rng(seed);
    for family in Family::ALL {
        for _ in 0..samples_per_family {
            let g = random_graph(family, &mut rng)?;
            let f = random_function(&g, &mut rng);
            let h = random_function(&g, &mut rng);
            let (u, v) = (random_form(&g, &mut rng), random_form(&g, &mut rng));

            let e = g.energy(&f, &f)?;
            energy.record(relative((norm_squared(&g, &derivation(&g, &f)) - e).abs(), e));

            let lhs = g.l2_inner(&h, &codifferential(&g, &v));
            let rhs = inner(&g, &derivation(&g, &h), &v)?;
            adjoint.record(relative((lhs + rhs).abs(), lhs.abs().max(rhs.abs())));

            let a = inner(&g, &hodge_laplacian(&g, &u), &v)?;
            let b = inner(&g, &u, &hodge_laplacian(&g, &v))?;
            self_adjoint.record(relative((a - b).abs(), a.abs().max(b.abs())));

            let split = hodge_decompose(&g, &u)?;
            let scale = u.max_abs();
            hodge.record(relative(split.reconstruction_residual(&u), scale));
            hodge.record(relative(split.orthogonality_residual(&g), norm_squared(&g, &u)));
            hodge.record(relative(codifferential(&g, &split.harmonic).max_abs(), scale));

            dims.record(harmonic_dimension(&g).abs_diff(first_betti(&g)) as f64);

            check_maximum_principle(&g, &mut rng, &mut maximum)?;
            check_neumann(&g, &mut rng, &mut neumann)?;
            check_ns(&g, &mut rng, &mut ns, tol(1e-10))?;
        }
    }
    let checks: Vec<CheckResult> =
        [energy, adjoint, self_adjoint, hodge, dims, maximum, neumann, ns].into_iter().map(Tally::finish).collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok(CheckSuite { seed, samples_per_family, checks, passed })
}

fn random_subset(g: &WeightedGraph, rng: &mut SampleRng) -> Vec<usize> {
    use rand::seq::index::sample;
    use rand::Rng;
    let n = g.vertex_count();
    let k = rng.random_range(1..=n.min(4));
    let mut set = sample(rng, n, k).into_vec();
    set.sort_unstable();
    set
}

fn check_maximum_principle(g: &WeightedGraph, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    let boundary = random_subset(g, rng);
    let values: Vec<f64> = random_function(g, rng).iter().take(boundary.len()).copied().collect();
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &x| (l.min(x), h.max(x)));
    let ext = harmonic_extension(g, &BoundaryData::new(boundary, values)?)?;
    let excess = ext.iter().fold(0.0_f64, |m, &x| m.max(lo - x).max(x - hi));
    tally.record(excess);
    Ok(())
}

fn check_neumann(g: &WeightedGraph, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    let boundary = random_subset(g, rng);
    let mut fluxes: Vec<f64> = random_function(g, rng).iter().take(boundary.len()).copied().collect();
    let mean = fluxes.iter().sum::<f64>() / fluxes.len() as f64;
    fluxes.iter_mut().for_each(|x| *x -= mean);
    // exact cancellation so the solvability test sees a zero sum
    let last = fluxes.len() - 1;
    fluxes[last] = -fluxes[..last].iter().sum::<f64>();
    let data = NeumannData::new(boundary, fluxes)?;
    let h = solve_neumann(g, &data)?;
    let err = data
        .boundary
        .iter()
        .zip(&data.fluxes)
        .fold(0.0_f64, |m, (&p, &phi)| m.max((neumann_derivative(g, &h, p) - phi).abs()));
    tally.record(err);
    Ok(())
}

fn check_ns(g: &WeightedGraph, rng: &mut SampleRng, tally: &mut Tally, tolerance: f64) -> Result<()> {
    let basis = harmonic_basis(g)?;
    let u0 = basis
        .iter()
        .fold(OneForm::zeros(g.edge_count()), |acc, b| acc.axpy(rand::Rng::random_range(rng, -1.0..=1.0), b));
    let sol = solve_ns_free(g, &u0, 1.0)?;
    let report = verify_weak_solution_with(g, &sol, &basis, &time_grid(9.0, 10), tolerance)?;
    tally.record(report.max_residual.max(report.divergence_residual).max(report.pressure_residual));
    Ok(())
}
