//! Discrete Dirichlet forms on weighted graphs: energy measures, 1-forms
//! and their Hodge decomposition, Čech cohomology of vertex covers, capacities,
//! Neumann boundary problems and stationary Navier-Stokes flows.
//!
//! A graph carries edge conductances and a vertex measure `m`. Functions live
//! on vertices, 1-forms on oriented edges with the weighted inner product
//! `⟨u, v⟩ = Σ c_e u(e) v(e)`, and the derivation `∂` and codifferential `∂*`
//! are adjoint up to sign. Harmonic 1-forms are the divergence-free ones; their
//! dimension is the first Betti number of the graph, which every module ties
//! back to in its own way.
//!
//! ```
//! use dirichlet_hodge::builders::{build, BuilderSpec};
//! use dirichlet_hodge::forms::{harmonic_basis, hodge_decompose};
//!
//! let g = build(&BuilderSpec::sierpinski_gasket(1)).unwrap();
//! assert_eq!(harmonic_basis(&g).unwrap().len(), 4);
//! let split = hodge_decompose(&g, &vec![1.0; g.edge_count()]).unwrap();
//! assert!(split.orthogonality_residual(&g) < 1e-12);
//! ```
//!
//! The `examples/` directory has one runnable program per topic:
//!
//! | example | shows |
//! |---|---|
//! | `energy_measures` | energy, energy measures, the generator |
//! | `sierpinski_renormalization` | gasket levels and their Schur traces |
//! | `hodge_decomposition` | exact and harmonic parts, harmonic bases |
//! | `cech_correspondence` | covers, nerves, `Ȟ¹` and refinements |
//! | `potential_theory` | harmonic extension, capacity, reconstruction |
//! | `neumann_problem` | Dirichlet-to-Neumann maps and Neumann solves |
//! | `navier_stokes` | stationary flows with and without boundary |
//! | `command_line` | driving the `hodge1d` document interface |

pub mod builders;
pub mod cech;
pub mod checks;
pub mod cli;
pub mod error;
pub mod forms;
pub mod graph;
pub mod linalg;
pub mod navier_stokes;
pub mod neumann;
pub mod potential;
pub mod sampling;
pub mod vectors;

pub use error::{Error, Result};
pub use graph::{Edge, WeightedGraph};
pub use vectors::{GraphFunction, OneForm, VertexMeasure};
