//! Harmonic extension, capacity, disconnecting sets and locally constant
//! functions.

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::linalg;
use crate::vectors::GraphFunction;

/// Largest separator size enumerated by default.
pub const DEFAULT_SEPARATOR_SIZE: usize = 3;
/// Combinatorial radius used to thicken a vertex set into a neighborhood.
pub const DEFAULT_NEIGHBORHOOD_RADIUS: usize = 1;

/// Validates a vertex subset: in range and without repeats.
pub(crate) fn vertex_mask(g: &WeightedGraph, set: &[usize], what: &'static str) -> Result<Vec<bool>> {
    if set.is_empty() {
        return Err(Error::EmptySet(what));
    }
    g.check_vertices(set)?;
    let mut mask = vec![false; g.vertex_count()];
    for &x in set {
        if std::mem::replace(&mut mask[x], true) {
            return Err(Error::Precondition(format!("vertex {x} listed twice in {what}")));
        }
    }
    Ok(mask)
}

/// Dirichlet data: prescribed values on a boundary set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryData {
    pub boundary: Vec<usize>,
    pub values: Vec<f64>,
}

impl BoundaryData {
    pub fn new(boundary: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        if boundary.is_empty() {
            return Err(Error::EmptySet("boundary"));
        }
        if boundary.len() != values.len() {
            return Err(Error::DimensionMismatch { expected: boundary.len(), found: values.len() });
        }
        Ok(Self { boundary, values })
    }

    /// The trace of `f` on `boundary`.
    pub fn trace(boundary: Vec<usize>, f: &[f64]) -> Result<Self> {
        let values = boundary.iter().map(|&x| f[x]).collect();
        Self::new(boundary, values)
    }

    pub(crate) fn validate(&self, g: &WeightedGraph) -> Result<Vec<bool>> {
        if self.boundary.len() != self.values.len() {
            return Err(Error::DimensionMismatch { expected: self.boundary.len(), found: self.values.len() });
        }
        vertex_mask(g, &self.boundary, "boundary")
    }
}

/// Solves `L_II f_I = -L_IB f_B` for the interior `I = B^c`.
pub fn harmonic_extension(g: &WeightedGraph, data: &BoundaryData) -> Result<GraphFunction> {
    let mask = data.validate(g)?;
    let mut f = vec![0.0; g.vertex_count()];
    for (&x, &v) in data.boundary.iter().zip(&data.values) {
        f[x] = v;
    }
    let interior: Vec<usize> = (0..g.vertex_count()).filter(|&x| !mask[x]).collect();
    let l = g.laplacian_matrix();
    let rhs = DVector::from_iterator(
        interior.len(),
        interior.iter().map(|&i| -data.boundary.iter().zip(&data.values).map(|(&b, v)| l[(i, b)] * v).sum::<f64>()),
    );
    let sol = linalg::solve_spd(linalg::submatrix(&l, &interior, &interior), &rhs)?;
    for (&i, v) in interior.iter().zip(sol.iter()) {
        f[i] = *v;
    }
    Ok(f.into())
}

/// `E₁(f, h) = E(f, h) + <f, h>_{L²(m)}`.
pub fn energy1(g: &WeightedGraph, f: &[f64], h: &[f64]) -> f64 {
    g.energy(f, h).expect("function length mismatch") + g.l2_inner(f, h)
}

/// Minimizer of `E₁(u)` subject to `u = 1` on `target`.
pub fn equilibrium_potential(g: &WeightedGraph, target: &[usize]) -> Result<GraphFunction> {
    let mask = vertex_mask(g, target, "target")?;
    let mut a = g.laplacian_matrix();
    for (x, m) in g.measure().iter().enumerate() {
        a[(x, x)] += m;
    }
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&x| !mask[x]).collect();
    let rhs = DVector::from_iterator(rest.len(), rest.iter().map(|&i| -target.iter().map(|&t| a[(i, t)]).sum::<f64>()));
    let sol = linalg::solve_spd(linalg::submatrix(&a, &rest, &rest), &rhs)?;
    let mut u = vec![1.0; g.vertex_count()];
    for (&i, v) in rest.iter().zip(sol.iter()) {
        u[i] = *v;
    }
    Ok(u.into())
}

/// `cap(A) = min { E₁(u) : u = 1 on A }`.
pub fn capacity(g: &WeightedGraph, target: &[usize]) -> Result<f64> {
    let u = equilibrium_potential(g, target)?;
    Ok(energy1(g, &u, &u))
}

/// A minimal vertex separator of a region together with its capacity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DisconnectingSet {
    pub set: Vec<usize>,
    pub capacity: f64,
    /// Number of connected pieces of `region \ set`.
    pub pieces: usize,
}

/// Minimal vertex sets `D ⊂ region`, `|D| ≤ max_size`, such that the
/// subgraph induced by `region \ D` is disconnected.
pub fn disconnecting_sets(g: &WeightedGraph, region: &[usize], max_size: usize) -> Result<Vec<DisconnectingSet>> {
    let mask = vertex_mask(g, region, "region")?;
    if g.components_within(&mask).len() != 1 {
        return Err(Error::Precondition("region does not induce a connected subgraph".into()));
    }
    let mut members = region.to_vec();
    members.sort_unstable();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for size in 1..=max_size.min(members.len().saturating_sub(2)) {
        for combo in combinations(members.len(), size) {
            let set: Vec<usize> = combo.iter().map(|&i| members[i]).collect();
            if found.iter().any(|f| f.iter().all(|x| set.contains(x))) {
                continue;
            }
            let mut rest = mask.clone();
            for &x in &set {
                rest[x] = false;
            }
            let pieces = g.components_within(&rest).len();
            if pieces >= 2 {
                out.push(DisconnectingSet { capacity: capacity(g, &set)?, set: set.clone(), pieces });
                found.push(set);
            }
        }
    }
    Ok(out)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Vertices within graph distance `radius` of `set`, sorted.
pub fn neighborhood(g: &WeightedGraph, set: &[usize], radius: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &x in set {
        if dist[x] != 0 {
            dist[x] = 0;
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        if dist[x] == radius {
            continue;
        }
        for &(y, _) in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    (0..g.vertex_count()).filter(|&x| dist[x] != usize::MAX).collect()
}

/// `E₁`-orthonormal basis of the functions that are constant on every
/// connected component of the `radius`-neighborhood of `set`.
pub fn locally_constant_subspace(g: &WeightedGraph, set: &[usize], radius: usize) -> Result<Vec<GraphFunction>> {
    vertex_mask(g, set, "F")?;
    let n = g.vertex_count();
    let hood = g.mask(&neighborhood(g, set, radius));
    let mut spanning: Vec<Vec<f64>> = g
        .components_within(&hood)
        .into_iter()
        .map(|comp| {
            let mut v = vec![0.0; n];
            comp.iter().for_each(|&x| v[x] = 1.0);
            v
        })
        .collect();
    spanning.extend((0..n).filter(|&x| !hood[x]).map(|x| GraphFunction::indicator(n, x).into_vec()));

    // the spanning vectors have disjoint supports, so they are independent
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(spanning.len());
    for mut v in spanning {
        for _ in 0..2 {
            for q in &basis {
                let c = energy1(g, &v, q);
                v.iter_mut().zip(q).for_each(|(a, b)| *a -= c * b);
            }
        }
        let norm = energy1(g, &v, &v).sqrt();
        v.iter_mut().for_each(|a| *a /= norm);
        basis.push(v);
    }
    Ok(basis.into_iter().map(GraphFunction::from).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReconstructionReport {
    pub dim_first: usize,
    pub dim_second: usize,
    pub dim_sum: usize,
    pub vertex_count: usize,
    pub full_span: bool,
}

/// Whether the locally constant subspaces of two well-separated sets
/// together span every function on the graph.
pub fn reconstruction_check(
    g: &WeightedGraph,
    first: &[usize],
    second: &[usize],
    radius: usize,
) -> Result<ReconstructionReport> {
    vertex_mask(g, first, "F1")?;
    vertex_mask(g, second, "F2")?;
    let a = neighborhood(g, first, radius);
    let b = g.mask(&neighborhood(g, second, radius));
    if let Some(x) = a.iter().find(|&&x| b[x]) {
        return Err(Error::Precondition(format!("neighborhoods of F1 and F2 share vertex {x}")));
    }
    let s1 = locally_constant_subspace(g, first, radius)?;
    let s2 = locally_constant_subspace(g, second, radius)?;
    let n = g.vertex_count();
    let stacked = DMatrix::from_fn(n, s1.len() + s2.len(), |i, j| if j < s1.len() { s1[j][i] } else { s2[j - s1.len()][i] });
    let dim_sum = linalg::numeric_rank(&stacked);
    Ok(ReconstructionReport { dim_first: s1.len(), dim_second: s2.len(), dim_sum, vertex_count: n, full_span: dim_sum == n })
}
