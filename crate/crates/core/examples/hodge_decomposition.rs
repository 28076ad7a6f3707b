//! Splitting a 1-form into exact and harmonic parts, and the harmonic basis
//! of a ladder graph.
//!
//! Run with `cargo run --example hodge_decomposition`.

use dirichlet_hodge::builders::{build, first_betti, BuilderSpec};
use dirichlet_hodge::forms::{codifferential, harmonic_basis, hodge_decompose, inner};
use dirichlet_hodge::sampling::{random_form, rng};
use dirichlet_hodge::Result;

fn main() -> Result<()> {
    let g = build(&BuilderSpec::ladder(4))?;
    let v = random_form(&g, &mut rng(42));
    let split = hodge_decompose(&g, &v)?;

    println!("ladder with 4 rungs: {} vertices, {} edges, b1 = {}", g.vertex_count(), g.edge_count(), first_betti(&g));
    println!("reconstruction residual  {:.2e}", split.reconstruction_residual(&v));
    println!("orthogonality residual   {:.2e}", split.orthogonality_residual(&g));
    println!("max |∂* harmonic|        {:.2e}", codifferential(&g, &split.harmonic).max_abs());

    let basis = harmonic_basis(&g)?;
    println!("harmonic basis has {} forms", basis.len());
    for (i, b) in basis.iter().enumerate() {
        let coeff = inner(&g, &split.harmonic, b)?;
        println!("  coefficient of basis form {i}: {coeff:+.6}");
    }
    Ok(())
}
