//! Harmonic extension, capacity, disconnecting sets and reconstruction from
//! locally constant functions.
//!
//! Run with `cargo run --example potential_theory`.

use dirichlet_hodge::builders::{build, BuilderSpec};
use dirichlet_hodge::potential::{
    capacity, disconnecting_sets, harmonic_extension, reconstruction_check, BoundaryData,
};
use dirichlet_hodge::Result;

fn main() -> Result<()> {
    let g = build(&BuilderSpec::sierpinski_gasket(2))?;
    let data = BoundaryData::new(vec![0, 1], vec![-1.0, 3.0])?;
    let h = harmonic_extension(&g, &data)?;
    let (lo, hi) = h.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, u), &x| (l.min(x), u.max(x)));
    println!("harmonic extension on SG(2) ranges over [{lo:.4}, {hi:.4}]");

    let c4 = build(&BuilderSpec::cycle(4))?;
    println!("cap({{0}}) on C4     = {:.6} (15/7 = {:.6})", capacity(&c4, &[0])?, 15.0 / 7.0);
    println!("cap({{0, 2}}) on C4  = {:.6}", capacity(&c4, &[0, 2])?);
    for d in disconnecting_sets(&c4, &[0, 1, 2, 3], 3)? {
        println!("disconnecting set {:?} with capacity {:.4}", d.set, d.capacity);
    }

    let c9 = build(&BuilderSpec::cycle(9))?;
    let r = reconstruction_check(&c9, &[0], &[4], 1)?;
    println!("C9: dim S(F1) + S(F2) = {} of {} (full span: {})", r.dim_sum, r.vertex_count, r.full_span);
    Ok(())
}
