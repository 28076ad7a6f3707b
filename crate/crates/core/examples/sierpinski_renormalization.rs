//! Tracing the level-(n+1) Sierpinski gasket network onto level n recovers
//! the level-n network once conductances are scaled by 5/3 per level.
//!
//! Run with `cargo run --example sierpinski_renormalization`.

use dirichlet_hodge::builders::{build, first_betti, BuilderSpec, GasketLayout};
use dirichlet_hodge::Result;

fn main() -> Result<()> {
    for level in 0..4 {
        let fine = build(&BuilderSpec::sierpinski_gasket(level + 1))?;
        let coarse = build(&BuilderSpec::sierpinski_gasket(level))?;
        let trace = fine.schur_trace(&GasketLayout::new(level + 1).coarse_vertices())?;

        let mut worst: f64 = 0.0;
        for e in coarse.edges() {
            let traced = trace.edge_between(e.tail, e.head).map_or(0.0, |i| trace.edge(i).conductance);
            worst = worst.max((traced - e.conductance).abs());
        }
        println!(
            "level {} -> {}: {} vertices, b1 = {}, trace edges = {}, max conductance error = {worst:.2e}",
            level + 1,
            level,
            fine.vertex_count(),
            first_betti(&fine),
            trace.edge_count(),
        );
    }
    Ok(())
}
