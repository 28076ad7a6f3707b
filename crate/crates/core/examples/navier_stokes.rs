//! Stationary Navier-Stokes flows: circulation around cycles without a
//! boundary, and Neumann-driven flow through a network with one.
//!
//! Run with `cargo run --example navier_stokes`.

use dirichlet_hodge::builders::{build, BuilderSpec};
use dirichlet_hodge::forms::harmonic_basis;
use dirichlet_hodge::navier_stokes::{
    interior_edge_forms, solve_ns_boundary, solve_ns_free, time_grid, verify_weak_solution,
};
use dirichlet_hodge::neumann::NeumannData;
use dirichlet_hodge::{OneForm, Result};

fn main() -> Result<()> {
    let g = build(&BuilderSpec::cycle(4))?;
    let u0: OneForm = vec![1.0; 4].into();
    for nu in [0.1, 1.0, 10.0] {
        let sol = solve_ns_free(&g, &u0, nu)?;
        let report = verify_weak_solution(&g, &sol, &harmonic_basis(&g)?, &time_grid(9.0, 10))?;
        println!("C4, ν = {nu:>4}: pressure {:?}, max residual {:.1e}", sol.pressure.values(), report.max_residual);
    }

    let tree = build(&BuilderSpec::tree(2, 2))?;
    let mut push: OneForm = OneForm::zeros(tree.edge_count());
    push[0] = 1.0;
    println!("tree with a nonzero initial flow: {}", solve_ns_free(&tree, &push, 1.0).unwrap_err());

    let ladder = build(&BuilderSpec::ladder(3))?;
    let data = NeumannData::new(vec![0, 5], vec![-1.0, 1.0])?;
    let sol = solve_ns_boundary(&ladder, &data, 1.0)?;
    let report = verify_weak_solution(&ladder, &sol, &interior_edge_forms(&ladder, &data.boundary), &time_grid(9.0, 10))?;
    println!("ladder, Neumann data -1 at vertex 0 and +1 at vertex 5:");
    for (e, u) in ladder.edges().iter().zip(sol.velocity.iter()) {
        println!("  {} -> {}: {u:+.6}", e.tail, e.head);
    }
    println!("  weak residual {:.1e}, interior divergence {:.1e}", report.max_residual, report.divergence_residual);
    Ok(())
}
