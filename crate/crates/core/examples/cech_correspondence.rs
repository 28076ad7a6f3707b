//! Čech cohomology of good covers against harmonic 1-forms.
//!
//! Run with `cargo run --example cech_correspondence`.

use dirichlet_hodge::builders::{build, BuilderSpec};
use dirichlet_hodge::cech::{correspondence_check, good_cover, induced_h1_map, refinement_map, Cover};
use dirichlet_hodge::Result;

fn main() -> Result<()> {
    let specs = [BuilderSpec::cycle(8), BuilderSpec::path(6), BuilderSpec::tree(2, 3), BuilderSpec::sierpinski_gasket(2)];
    for spec in &specs {
        let g = build(spec)?;
        let built = good_cover(&g, 3)?;
        let report = correspondence_check(&g, &built.cover)?;
        println!(
            "{:<18} sets = {:>2}  dim ker ∂* = {:>2}  dim Ȟ¹ = {:>2}  agree = {}",
            format!("{}({})", spec.family, spec.level_or_size),
            built.cover.len(),
            report.harmonic_dimension,
            report.cech_dimension,
            report.agree,
        );
    }

    // refining three arcs of C6 into six arcs keeps the cohomology class
    let g = build(&BuilderSpec::cycle(6))?;
    let coarse = Cover::new(&g, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]])?;
    let fine = Cover::new(&g, (0..6).map(|i| vec![i, (i + 1) % 6]).collect())?;
    let pi = refinement_map(&coarse, &fine)?;
    let map = induced_h1_map(&g, &coarse, &fine, &pi)?;
    println!("refinement map {pi:?}: rank {}, injective = {}", map.rank, map.is_injective());
    Ok(())
}
