//! Neumann problems on the Sierpinski gasket: prescribed boundary currents,
//! the Dirichlet-to-Neumann matrix and the Gauss–Green identity.
//!
//! Run with `cargo run --example neumann_problem`.

use dirichlet_hodge::builders::{build, BuilderSpec, GasketLayout};
use dirichlet_hodge::neumann::{dirichlet_to_neumann, neumann_derivative, solve_neumann, NeumannData};
use dirichlet_hodge::{Error, Result};

fn main() -> Result<()> {
    let level = 3;
    let g = build(&BuilderSpec::sierpinski_gasket(level))?;
    let corners = GasketLayout::new(level).corners().to_vec();

    println!("Dirichlet-to-Neumann matrix at the corners:\n{:.6}", dirichlet_to_neumann(&g, &corners)?);

    let data = NeumannData::new(corners.clone(), vec![2.0, -0.5, -1.5])?;
    let h = solve_neumann(&g, &data)?;
    for (&p, &phi) in corners.iter().zip(&data.fluxes) {
        println!("corner {p:>2}: prescribed {phi:+.3}, recovered {:+.12}", neumann_derivative(&g, &h, p));
    }
    println!("m-mean of the solution: {:.2e}", g.mean(&h));

    match solve_neumann(&g, &NeumannData::new(corners, vec![1.0, 1.0, 0.0])?) {
        Err(Error::Solvability { sum }) => println!("unbalanced fluxes rejected (sum = {sum})"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
