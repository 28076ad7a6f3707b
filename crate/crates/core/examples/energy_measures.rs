//! Energy, energy measures and the generator on a weighted cycle.
//!
//! Run with `cargo run --example energy_measures`.

use dirichlet_hodge::builders::{build, BuilderSpec};
use dirichlet_hodge::forms::{derivation, norm_squared};
use dirichlet_hodge::{GraphFunction, Result};

fn main() -> Result<()> {
    let g = build(&BuilderSpec::cycle(6))?.with_conductances(&[1.0, 2.0, 0.5, 1.0, 3.0, 1.5])?;
    let f: GraphFunction = vec![0.0, 1.0, 0.5, -1.0, 2.0, 0.25].into();

    let energy = g.energy(&f, &f)?;
    let gamma = g.energy_measure(&f, &f)?;
    println!("E(f)              = {energy:.6}");
    println!("Γ(f) total mass   = {:.6}", gamma.total_mass());
    println!("‖∂f‖² in 1-forms  = {:.6}", norm_squared(&g, &derivation(&g, &f)));
    println!("Γ(f) per vertex   = {:?}", gamma.values());

    // E(f, h) = -<Af, h> for the generator A
    let h: GraphFunction = vec![1.0, -1.0, 0.0, 2.0, 0.5, 0.0].into();
    println!("E(f, h)           = {:.6}", g.energy(&f, &h)?);
    println!("-<Af, h>          = {:.6}", -g.l2_inner(&g.generator(&f), &h));
    println!("spectral gap      = {:.6}", g.spectral_gap());
    Ok(())
}
