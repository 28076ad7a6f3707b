//! Stationary Navier-Stokes flows on graphs.
//!
//! On a graph every weak solution is stationary and harmonic. Without a
//! boundary the solution is the initial condition itself, which must be
//! divergence free. With a boundary `B` the velocity is the gradient of a
//! Neumann solution. In both cases the pressure is the measure
//! `-½ Γ_ℋ(u)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{codifferential, d_gamma_h, derivation, gamma_h};
use crate::graph::WeightedGraph;
use crate::neumann::{solve_neumann, NeumannData};
use crate::potential::vertex_mask;
use crate::vectors::{OneForm, VertexMeasure};

/// Admissibility threshold for `∂*u₀` and pass threshold for residuals.
pub const NS_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NsSolution {
    pub velocity: OneForm,
    /// `-½ Γ_ℋ(velocity)`, a measure on the vertices.
    pub pressure: VertexMeasure,
    pub viscosity: f64,
    pub boundary: Option<NeumannData>,
}

fn check_viscosity(viscosity: f64) -> Result<()> {
    if !(viscosity.is_finite() && viscosity > 0.0) {
        return Err(Error::Precondition(format!("viscosity must be positive, got {viscosity}")));
    }
    Ok(())
}

/// `-½ Γ_ℋ(u)`.
pub fn pressure_of(g: &WeightedGraph, u: &[f64]) -> VertexMeasure {
    gamma_h(g, u).scaled(-0.5)
}

/// Boundary-free solution with initial condition `u0 ∈ ker ∂*`.
pub fn solve_ns_free(g: &WeightedGraph, u0: &OneForm, viscosity: f64) -> Result<NsSolution> {
    check_viscosity(viscosity)?;
    if u0.len() != g.edge_count() {
        return Err(Error::DimensionMismatch { expected: g.edge_count(), found: u0.len() });
    }
    let divergence = codifferential(g, u0).max_abs();
    if divergence > NS_TOLERANCE * u0.max_abs().max(1.0) {
        return Err(Error::InadmissibleInitialCondition { divergence });
    }
    Ok(NsSolution { velocity: u0.clone(), pressure: pressure_of(g, u0), viscosity, boundary: None })
}

/// Solution on `B^c`: `u = ∂h` for the Neumann solution `h` of `data`.
pub fn solve_ns_boundary(g: &WeightedGraph, data: &NeumannData, viscosity: f64) -> Result<NsSolution> {
    check_viscosity(viscosity)?;
    let h = solve_neumann(g, data)?;
    let velocity = derivation(g, &h);
    let pressure = pressure_of(g, &velocity);
    Ok(NsSolution { velocity, pressure, viscosity, boundary: Some(data.clone()) })
}

/// `count` equally spaced times in `[0, t_max]`.
pub fn time_grid(t_max: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..count).map(|k| t_max * k as f64 / (count - 1) as f64).collect(),
    }
}

/// Unit forms on the edges with both endpoints off `boundary`.
pub fn interior_edge_forms(g: &WeightedGraph, boundary: &[usize]) -> Vec<OneForm> {
    let on_boundary = g.mask(boundary);
    (0..g.edge_count())
        .filter(|&i| !on_boundary[g.edge(i).tail] && !on_boundary[g.edge(i).head])
        .map(|i| {
            let mut v = OneForm::zeros(g.edge_count());
            v[i] = 1.0;
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeakResidual {
    pub form: usize,
    pub time: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeakSolutionReport {
    pub residuals: Vec<WeakResidual>,
    pub max_residual: f64,
    /// `max |∂*u|`, taken over `B^c` when a boundary is present.
    pub divergence_residual: f64,
    /// `max |p + ½ Γ_ℋ(u)|`.
    pub pressure_residual: f64,
    /// Largest `|∂Γ_ℋ(u)(v)|` over the test forms, without pressure.
    pub convection_max: f64,
    /// Test forms outside the admissible class: not divergence free, or
    /// not supported inside `B^c`.
    pub inadmissible_forms: Vec<usize>,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn verify_weak_solution(g: &WeightedGraph, sol: &NsSolution, test_forms: &[OneForm], times: &[f64]) -> Result<WeakSolutionReport> {
    verify_weak_solution_with(g, sol, test_forms, times, NS_TOLERANCE)
}

/// Residuals of the weak formulation for a stationary velocity `u`:
/// `<u(t) - u(0), v> + t (½ ∂Γ_ℋ(u)(v) + ∂p(v) + ν <∂*u, ∂*v>)`, where
/// `∂μ(v) = -∫ ∂*v dμ` for a measure `μ`.
pub fn verify_weak_solution_with(
    g: &WeightedGraph,
    sol: &NsSolution,
    test_forms: &[OneForm],
    times: &[f64],
    tolerance: f64,
) -> Result<WeakSolutionReport> {
    let u = &sol.velocity;
    if u.len() != g.edge_count() {
        return Err(Error::DimensionMismatch { expected: g.edge_count(), found: u.len() });
    }
    if sol.pressure.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch { expected: g.vertex_count(), found: sol.pressure.len() });
    }
    let interior = match &sol.boundary {
        Some(data) => {
            let on_boundary = vertex_mask(g, &data.boundary, "boundary")?;
            on_boundary.iter().map(|b| !b).collect()
        }
        None => vec![true; g.vertex_count()],
    };

    let div_u = codifferential(g, u);
    let divergence_residual = div_u.iter().zip(&interior).filter(|(_, &i)| i).fold(0.0, |m: f64, (d, _)| m.max(d.abs()));
    let gamma = gamma_h(g, u);
    let pressure_residual = sol.pressure.iter().zip(gamma.iter()).fold(0.0, |m: f64, (p, w)| m.max((p + 0.5 * w).abs()));

    let mut residuals = Vec::with_capacity(test_forms.len() * times.len());
    let mut inadmissible_forms = Vec::new();
    let mut convection_max: f64 = 0.0;
    for (k, v) in test_forms.iter().enumerate() {
        if v.len() != g.edge_count() {
            return Err(Error::DimensionMismatch { expected: g.edge_count(), found: v.len() });
        }
        let div_v = codifferential(g, v);
        let admissible = match &sol.boundary {
            None => div_v.max_abs() <= tolerance * v.max_abs().max(1.0),
            Some(_) => g.edges().iter().zip(v.iter()).all(|(e, &x)| x == 0.0 || (interior[e.tail] && interior[e.head])),
        };
        if !admissible {
            inadmissible_forms.push(k);
        }
        let convection = d_gamma_h(g, u, v);
        convection_max = convection_max.max(convection.abs());
        let pressure_term = -sol.pressure.integrate(&div_v);
        let viscous = sol.viscosity * g.l2_inner(&div_u, &div_v);
        let rate = 0.5 * convection + pressure_term + viscous;
        // the velocity is time independent, so <u(t) - u(0), v> vanishes
        for &t in times {
            residuals.push(WeakResidual { form: k, time: t, residual: t * rate });
        }
    }
    let max_residual = residuals.iter().fold(0.0, |m: f64, r| m.max(r.residual.abs()));
    let passed = max_residual < tolerance
        && divergence_residual < tolerance
        && pressure_residual < tolerance
        && inadmissible_forms.is_empty();
    Ok(WeakSolutionReport {
        residuals,
        max_residual,
        divergence_residual,
        pressure_residual,
        convection_max,
        inadmissible_forms,
        tolerance,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, BuilderSpec};
    use crate::forms::harmonic_basis;
    use crate::vectors::GraphFunction;

    fn c4() -> WeightedGraph {
        build(&BuilderSpec::cycle(4)).unwrap()
    }

    #[test]
    fn free_examples() {
        let g = c4();
        let zero = solve_ns_free(&g, &OneForm::zeros(4), 1.0).unwrap();
        assert_eq!(zero.pressure.values(), &[0.0; 4]);

        let u0: OneForm = vec![1.0; 4].into();
        for nu in [0.1, 1.0, 10.0] {
            let sol = solve_ns_free(&g, &u0, nu).unwrap();
            assert_eq!(sol.velocity, u0);
            assert_eq!(sol.pressure.values(), &[-0.5; 4]);
        }

        let tree = build(&BuilderSpec::tree(2, 2)).unwrap();
        let mut u: OneForm = OneForm::zeros(tree.edge_count());
        u[0] = 1.0;
        assert!(matches!(solve_ns_free(&tree, &u, 1.0), Err(Error::InadmissibleInitialCondition { .. })));
        assert!(matches!(solve_ns_free(&g, &u0, 0.0), Err(Error::Precondition(_))));
    }

    #[test]
    fn verification_of_free_solutions() {
        let g = build(&BuilderSpec::sierpinski_gasket(1)).unwrap();
        let basis = harmonic_basis(&g).unwrap();
        let u0 = basis[0].axpy(-2.0, &basis[2]);
        let sol = solve_ns_free(&g, &u0, 1.0).unwrap();
        let report = verify_weak_solution(&g, &sol, &basis, &time_grid(9.0, 10)).unwrap();
        assert!(report.passed);
        assert!(report.max_residual < 1e-12);
        assert_eq!(report.residuals.len(), basis.len() * 10);

        let zero = solve_ns_free(&g, &OneForm::zeros(g.edge_count()), 3.0).unwrap();
        let report = verify_weak_solution(&g, &zero, &basis, &time_grid(1.0, 10)).unwrap();
        assert_eq!(report.max_residual, 0.0);
    }

    #[test]
    fn perturbed_velocity_is_flagged() {
        let g = c4();
        let df = derivation(&g, &GraphFunction::indicator(4, 0));
        let u = OneForm::from(vec![1.0; 4]).axpy(1e-3, &df);
        let bad = NsSolution { pressure: pressure_of(&g, &u), velocity: u, viscosity: 1.0, boundary: None };
        let report = verify_weak_solution(&g, &bad, &[df], &time_grid(1.0, 10)).unwrap();
        assert!(!report.passed);
        assert!(report.divergence_residual > 1e-4);
        assert_eq!(report.inadmissible_forms, vec![0]);
    }

    #[test]
    fn boundary_examples() {
        let p3 = build(&BuilderSpec::path(3)).unwrap();
        let sol = solve_ns_boundary(&p3, &NeumannData::new(vec![0, 2], vec![-1.0, 1.0]).unwrap(), 1.0).unwrap();
        assert!((sol.velocity[0] - 1.0).abs() < 1e-14 && (sol.velocity[1] - 1.0).abs() < 1e-14);

        let zero = solve_ns_boundary(&p3, &NeumannData::new(vec![0, 2], vec![0.0, 0.0]).unwrap(), 1.0).unwrap();
        assert_eq!(zero.velocity.max_abs(), 0.0);

        assert!(matches!(
            solve_ns_boundary(&p3, &NeumannData::new(vec![0, 2], vec![1.0, 1.0]).unwrap(), 1.0),
            Err(Error::Solvability { .. })
        ));
    }

    #[test]
    fn boundary_solution_verifies() {
        let g = build(&BuilderSpec::sierpinski_gasket(2)).unwrap();
        let data = NeumannData::new(vec![0, 7, 14], vec![1.0, -0.25, -0.75]).unwrap();
        let sol = solve_ns_boundary(&g, &data, 0.5).unwrap();
        let forms = interior_edge_forms(&g, &data.boundary);
        assert!(!forms.is_empty());
        let report = verify_weak_solution(&g, &sol, &forms, &time_grid(9.0, 10)).unwrap();
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn time_grid_examples() {
        assert_eq!(time_grid(9.0, 10), (0..10).map(f64::from).collect::<Vec<_>>());
        assert_eq!(time_grid(1.0, 1), vec![0.0]);
    }
}
