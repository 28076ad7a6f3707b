//! Green operators, Neumann derivatives and the Neumann problem.
//!
//! The Neumann derivative at `p` is the net current leaving `p`,
//! `(df)_p = Σ_{y ~ p} c_py (f(p) - f(y))`. With this sign the Gauss–Green
//! identity reads `Σ_{p ∈ B} (dh)_p = 0` for every `h` harmonic off `B`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::linalg;
use crate::potential::{harmonic_extension, vertex_mask, BoundaryData};
use crate::vectors::GraphFunction;

/// Relative tolerance for the flux balance `Σ φ(p) = 0`.
pub const SOLVABILITY_TOLERANCE: f64 = 1e-12;

/// Prescribed Neumann derivatives on a boundary set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NeumannData {
    pub boundary: Vec<usize>,
    pub fluxes: Vec<f64>,
}

impl NeumannData {
    pub fn new(boundary: Vec<usize>, fluxes: Vec<f64>) -> Result<Self> {
        if boundary.is_empty() {
            return Err(Error::EmptySet("boundary"));
        }
        if boundary.len() != fluxes.len() {
            return Err(Error::DimensionMismatch { expected: boundary.len(), found: fluxes.len() });
        }
        Ok(Self { boundary, fluxes })
    }

    pub fn flux_sum(&self) -> f64 {
        self.fluxes.iter().sum()
    }

    /// `|Σ φ| ≤ tol · Σ |φ|`.
    pub fn is_solvable(&self) -> bool {
        let scale: f64 = self.fluxes.iter().map(|f| f.abs()).sum();
        self.flux_sum().abs() <= SOLVABILITY_TOLERANCE * scale
    }

    fn validate(&self, g: &WeightedGraph) -> Result<Vec<bool>> {
        if self.boundary.len() != self.fluxes.len() {
            return Err(Error::DimensionMismatch { expected: self.boundary.len(), found: self.fluxes.len() });
        }
        vertex_mask(g, &self.boundary, "boundary")
    }
}

/// Solves `-A f = source` off `boundary` with `f = 0` on `boundary`.
/// Values of `source` on the boundary are ignored.
pub fn green_operator(g: &WeightedGraph, boundary: &[usize], source: &[f64]) -> Result<GraphFunction> {
    let mask = vertex_mask(g, boundary, "boundary")?;
    g.check_function(source)?;
    let interior: Vec<usize> = (0..g.vertex_count()).filter(|&x| !mask[x]).collect();
    let l = linalg::submatrix(&g.laplacian_matrix(), &interior, &interior);
    // -A = M⁻¹ L, so L_II f = M_I s
    let rhs = DVector::from_iterator(interior.len(), interior.iter().map(|&x| g.measure()[x] * source[x]));
    let sol = linalg::solve_spd(l, &rhs)?;
    let mut f = vec![0.0; g.vertex_count()];
    for (&x, v) in interior.iter().zip(sol.iter()) {
        f[x] = *v;
    }
    Ok(f.into())
}

/// `(df)_p = Σ_{y ~ p} c_py (f(p) - f(y))`.
pub fn neumann_derivative(g: &WeightedGraph, f: &[f64], p: usize) -> f64 {
    g.neighbors(p).iter().map(|&(y, e)| g.edge(e).conductance * (f[p] - f[y])).sum()
}

/// The Dirichlet-to-Neumann matrix: row `i`, column `j` holds the Neumann
/// derivative at `boundary[i]` of the harmonic extension of the indicator of
/// `boundary[j]`. It is the Schur complement of `L` onto the boundary.
pub fn dirichlet_to_neumann(g: &WeightedGraph, boundary: &[usize]) -> Result<DMatrix<f64>> {
    vertex_mask(g, boundary, "boundary")?;
    linalg::schur_complement(&g.laplacian_matrix(), boundary)
}

/// The `B`-harmonic function with Neumann derivatives `fluxes`, normalized
/// to `m`-mean zero.
pub fn solve_neumann(g: &WeightedGraph, data: &NeumannData) -> Result<GraphFunction> {
    data.validate(g)?;
    if !data.is_solvable() {
        return Err(Error::Solvability { sum: data.flux_sum() });
    }
    let k = data.boundary.len();
    let dtn = dirichlet_to_neumann(g, &data.boundary)?;
    // constants span the kernel, so fix the value at the first boundary point
    let mut values = vec![0.0; k];
    if k > 1 {
        let rest: Vec<usize> = (1..k).collect();
        let rhs = DVector::from_iterator(k - 1, rest.iter().map(|&i| data.fluxes[i]));
        let sol = linalg::solve_spd(linalg::submatrix(&dtn, &rest, &rest), &rhs)?;
        values[1..].copy_from_slice(sol.as_slice());
    }
    let mut h = harmonic_extension(g, &BoundaryData { boundary: data.boundary.clone(), values })?;
    let mean = g.mean(&h);
    h.iter_mut().for_each(|x| *x -= mean);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, BuilderSpec, GasketLayout};

    fn p3() -> WeightedGraph {
        build(&BuilderSpec::path(3)).unwrap()
    }

    #[test]
    fn green_operator_examples() {
        let g = p3();
        assert_eq!(green_operator(&g, &[0, 2], &[0.0; 3]).unwrap().values(), &[0.0; 3]);
        let f = green_operator(&g, &[0, 2], &[0.0, 1.0, 0.0]).unwrap();
        assert_eq!((f[0], f[2]), (0.0, 0.0));
        assert!((f[1] - 0.5).abs() < 1e-15);
        // -A f = source off the boundary
        assert!((-g.generator(&f)[1] - 1.0).abs() < 1e-15);
        assert_eq!(green_operator(&g, &[], &[0.0; 3]), Err(Error::EmptySet("boundary")));
    }

    #[test]
    fn neumann_derivative_examples() {
        let g = p3();
        let h = [0.0, 0.5, 1.0];
        assert_eq!(neumann_derivative(&g, &h, 0), -0.5);
        assert_eq!(neumann_derivative(&g, &h, 2), 0.5);
        assert_eq!(neumann_derivative(&g, &[3.0; 3], 1), 0.0);
    }

    #[test]
    fn gauss_green_on_gasket_corners() {
        let g = build(&BuilderSpec::sierpinski_gasket(1)).unwrap();
        let corners = GasketLayout::new(1).corners().to_vec();
        let h = harmonic_extension(&g, &BoundaryData::new(corners.clone(), vec![0.3, -1.7, 2.2]).unwrap()).unwrap();
        let sum: f64 = corners.iter().map(|&p| neumann_derivative(&g, &h, p)).sum();
        assert!(sum.abs() < 1e-12);
    }

    #[test]
    fn dirichlet_to_neumann_is_a_laplacian() {
        let g = build(&BuilderSpec::sierpinski_gasket(2)).unwrap();
        let corners = GasketLayout::new(2).corners();
        let dtn = dirichlet_to_neumann(&g, &corners).unwrap();
        for i in 0..3 {
            assert!(dtn.row(i).sum().abs() < 1e-12);
            for j in 0..3 {
                assert!((dtn[(i, j)] - dtn[(j, i)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn solve_neumann_examples() {
        let g = p3();
        let h = solve_neumann(&g, &NeumannData::new(vec![0, 2], vec![-1.0, 1.0]).unwrap()).unwrap();
        for (a, b) in h.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((a - b).abs() < 1e-14);
        }
        let h = solve_neumann(&g, &NeumannData::new(vec![0, 2], vec![0.0, 0.0]).unwrap()).unwrap();
        assert!(h.max_abs() == 0.0);
        assert_eq!(
            solve_neumann(&g, &NeumannData::new(vec![0, 2], vec![1.0, 1.0]).unwrap()),
            Err(Error::Solvability { sum: 2.0 })
        );
    }

    #[test]
    fn neumann_on_single_boundary_point() {
        let g = p3();
        let h = solve_neumann(&g, &NeumannData::new(vec![1], vec![0.0]).unwrap()).unwrap();
        assert_eq!(h.values(), &[0.0; 3]);
        assert!(matches!(solve_neumann(&g, &NeumannData::new(vec![1], vec![0.5]).unwrap()), Err(Error::Solvability { .. })));
    }
}
