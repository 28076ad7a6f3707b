//! Finite weighted graphs as discrete strongly local Dirichlet forms.
//!
//! A [`WeightedGraph`] carries positive edge conductances and a positive
//! vertex measure `m`. The energy is
//! `E(f, h) = Σ_e c_e (f(head) - f(tail)) (h(head) - h(tail))`,
//! and the generator `A` is normalized so that `<f, A h>_{L²(m)} = -E(f, h)`.

use std::collections::{HashSet, VecDeque};

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::vectors::{GraphFunction, VertexMeasure};

/// An oriented edge with its conductance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub conductance: f64,
}

impl Edge {
    pub fn new(tail: usize, head: usize, conductance: f64) -> Self {
        Self { tail, head, conductance }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.tail {
            self.head
        } else {
            self.tail
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.tail == v || self.head == v
    }
}

/// A connected, simple, oriented graph with conductances and a vertex measure.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    measure: Vec<f64>,
    edges: Vec<Edge>,
    // (neighbor, edge index), sorted by neighbor
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl WeightedGraph {
    /// Builds a graph with unit vertex measure.
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::with_measure(vec![1.0; vertex_count], edges)
    }

    pub fn with_measure(measure: Vec<f64>, edges: Vec<Edge>) -> Result<Self> {
        let n = measure.len();
        if n == 0 {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        if let Some((x, m)) = measure.iter().enumerate().find(|(_, m)| !(m.is_finite() && **m > 0.0)) {
            return Err(Error::InvalidGraph(format!("vertex {x} has non-positive measure {m}")));
        }
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, count: n });
                }
            }
            if e.tail == e.head {
                return Err(Error::InvalidGraph(format!("edge {i} is a self-loop at {}", e.tail)));
            }
            if !(e.conductance.is_finite() && e.conductance > 0.0) {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} has non-positive conductance {}",
                    e.conductance
                )));
            }
            if !seen.insert((e.tail.min(e.head), e.tail.max(e.head))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge between {} and {}",
                    e.tail, e.head
                )));
            }
            adjacency[e.tail].push((e.head, i));
            adjacency[e.head].push((e.tail, i));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let g = Self { measure, edges, adjacency };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Shorthand for unit-measure graphs given as `(tail, head, conductance)`.
    pub fn from_triples(vertex_count: usize, triples: &[(usize, usize, f64)]) -> Result<Self> {
        Self::new(vertex_count, triples.iter().map(|&(t, h, c)| Edge::new(t, h, c)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.measure.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn conductances(&self) -> impl Iterator<Item = f64> + '_ {
        self.edges.iter().map(|e| e.conductance)
    }

    pub fn measure(&self) -> &[f64] {
        &self.measure
    }

    pub fn total_measure(&self) -> f64 {
        self.measure.iter().sum()
    }

    /// Neighbors of `x` as `(neighbor, edge index)` pairs.
    pub fn neighbors(&self, x: usize) -> &[(usize, usize)] {
        &self.adjacency[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    /// Edge index joining `a` and `b`, if any.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.adjacency[a]
            .binary_search_by_key(&b, |&(y, _)| y)
            .ok()
            .map(|pos| self.adjacency[a][pos].1)
    }

    /// Same graph with a different vertex measure.
    pub fn with_vertex_measure(&self, measure: Vec<f64>) -> Result<Self> {
        if measure.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.vertex_count(), found: measure.len() });
        }
        Self::with_measure(measure, self.edges.clone())
    }

    /// Same graph with the conductances replaced (in edge order).
    pub fn with_conductances(&self, conductances: &[f64]) -> Result<Self> {
        if conductances.len() != self.edge_count() {
            return Err(Error::DimensionMismatch { expected: self.edge_count(), found: conductances.len() });
        }
        let edges = self
            .edges
            .iter()
            .zip(conductances)
            .map(|(e, &c)| Edge::new(e.tail, e.head, c))
            .collect();
        Self::with_measure(self.measure.clone(), edges)
    }

    fn is_connected(&self) -> bool {
        let all = vec![true; self.vertex_count()];
        self.components_within(&all).len() == 1
    }

    /// Connected components of the subgraph induced by the vertices with
    /// `mask[x] == true`. Components are listed by smallest vertex.
    pub fn components_within(&self, mask: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if !mask[start] || seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adjacency[x] {
                    if mask[y] && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether the vertex subset induces a connected subgraph.
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        self.components_within(&self.mask(set)).len() == 1
    }

    pub(crate) fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.vertex_count()];
        for &x in set {
            mask[x] = true;
        }
        mask
    }

    pub(crate) fn check_vertices(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&x| x >= self.vertex_count()) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, count: self.vertex_count() }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_function(&self, f: &[f64]) -> Result<()> {
        if f.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.vertex_count(), found: f.len() });
        }
        Ok(())
    }

    /// The combinatorial Laplacian `L`, `(Lf)(x) = Σ_y c_xy (f(x) - f(y))`.
    pub fn laplacian_matrix(&self) -> DMatrix<f64> {
        let n = self.vertex_count();
        let mut l = DMatrix::zeros(n, n);
        for e in &self.edges {
            let (a, b, c) = (e.tail, e.head, e.conductance);
            l[(a, a)] += c;
            l[(b, b)] += c;
            l[(a, b)] -= c;
            l[(b, a)] -= c;
        }
        l
    }

    /// Applies the combinatorial Laplacian without forming a matrix.
    pub(crate) fn apply_laplacian(&self, f: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.vertex_count()];
        for e in &self.edges {
            let flux = e.conductance * (f[e.tail] - f[e.head]);
            out[e.tail] += flux;
            out[e.head] -= flux;
        }
        out
    }

    /// The bilinear energy `E(f, h)`.
    pub fn energy(&self, f: &[f64], h: &[f64]) -> Result<f64> {
        self.check_function(f)?;
        self.check_function(h)?;
        Ok(self
            .edges
            .iter()
            .map(|e| e.conductance * (f[e.head] - f[e.tail]) * (h[e.head] - h[e.tail]))
            .sum())
    }

    /// Mutual energy measure `Γ(f, h)`: each edge's energy split half and
    /// half between its endpoints.
    pub fn energy_measure(&self, f: &[f64], h: &[f64]) -> Result<VertexMeasure> {
        self.check_function(f)?;
        self.check_function(h)?;
        let mut w = vec![0.0; self.vertex_count()];
        for e in &self.edges {
            let half = 0.5 * e.conductance * (f[e.head] - f[e.tail]) * (h[e.head] - h[e.tail]);
            w[e.tail] += half;
            w[e.head] += half;
        }
        Ok(w.into())
    }

    /// The generator `(Af)(x) = -(1/m(x)) Σ_y c_xy (f(x) - f(y))`.
    ///
    /// Panics if `f` has the wrong length.
    pub fn generator(&self, f: &[f64]) -> GraphFunction {
        assert_eq!(f.len(), self.vertex_count(), "function length mismatch");
        self.apply_laplacian(f)
            .into_iter()
            .zip(&self.measure)
            .map(|(lf, m)| -lf / m)
            .collect()
    }

    /// `<f, h>_{L²(m)}`.
    pub fn l2_inner(&self, f: &[f64], h: &[f64]) -> f64 {
        assert_eq!(f.len(), self.vertex_count(), "function length mismatch");
        assert_eq!(h.len(), self.vertex_count(), "function length mismatch");
        f.iter().zip(h).zip(&self.measure).map(|((a, b), m)| a * b * m).sum()
    }

    /// `m`-weighted mean of `f`.
    pub fn mean(&self, f: &[f64]) -> f64 {
        let total: f64 = f.iter().zip(&self.measure).map(|(v, m)| v * m).sum();
        total / self.total_measure()
    }

    /// Trace of the form onto `coarse`: the effective network obtained by
    /// eliminating every other vertex (Schur complement of the Laplacian).
    ///
    /// Vertex `i` of the result is `coarse[i]`, which keeps its measure.
    pub fn schur_trace(&self, coarse: &[usize]) -> Result<WeightedGraph> {
        if coarse.is_empty() {
            return Err(Error::EmptySet("coarse vertex set"));
        }
        self.check_vertices(coarse)?;
        let mut uniq = coarse.to_vec();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() != coarse.len() {
            return Err(Error::Precondition("coarse vertex set has repeated vertices".into()));
        }
        let reduced = linalg::schur_complement(&self.laplacian_matrix(), coarse)?;
        let scale = (0..reduced.nrows()).map(|i| reduced[(i, i)].abs()).fold(0.0, f64::max);
        let cutoff = TRACE_CUTOFF * scale;
        let mut edges = Vec::new();
        for i in 0..coarse.len() {
            for j in i + 1..coarse.len() {
                let c = -0.5 * (reduced[(i, j)] + reduced[(j, i)]);
                if c > cutoff {
                    edges.push(Edge::new(i, j, c));
                }
            }
        }
        let measure = coarse.iter().map(|&x| self.measure[x]).collect();
        WeightedGraph::with_measure(measure, edges)
    }

    /// Smallest nonzero eigenvalue of `-A` on `L²(m)`.
    pub fn spectral_gap(&self) -> f64 {
        let n = self.vertex_count();
        if n < 2 {
            return 0.0;
        }
        let l = self.laplacian_matrix();
        let s = DMatrix::from_fn(n, n, |i, j| l[(i, j)] / (self.measure[i] * self.measure[j]).sqrt());
        let mut eig: Vec<f64> = SymmetricEigen::new(s).eigenvalues.iter().cloned().collect();
        eig.sort_by(f64::total_cmp);
        eig[1]
    }
}

/// Effective conductances below this fraction of the largest diagonal entry
/// of the traced Laplacian are treated as absent edges.
pub const TRACE_CUTOFF: f64 = 1e-12;

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> WeightedGraph {
        WeightedGraph::from_triples(4, &[(0, 1, 1.), (1, 2, 1.), (2, 3, 1.), (3, 0, 1.)]).unwrap()
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(matches!(
            WeightedGraph::from_triples(2, &[(0, 0, 1.)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            WeightedGraph::from_triples(2, &[(0, 1, 0.)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            WeightedGraph::from_triples(2, &[(0, 1, 1.), (1, 0, 2.)]),
            Err(Error::InvalidGraph(_))
        ));
        assert_eq!(WeightedGraph::from_triples(3, &[(0, 1, 1.)]), Err(Error::Disconnected));
        assert!(matches!(
            WeightedGraph::from_triples(2, &[(0, 2, 1.)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(WeightedGraph::with_measure(vec![1.0, -1.0], vec![Edge::new(0, 1, 1.)]).is_err());
    }

    #[test]
    fn energy_of_indicator_on_c4() {
        let g = c4();
        let f = GraphFunction::indicator(4, 0);
        assert_eq!(g.energy(&f, &f).unwrap(), 2.0);
        let one = GraphFunction::constant(4, 3.0);
        assert_eq!(g.energy(&one, &one).unwrap(), 0.0);
        assert_eq!(
            g.energy(&f, &[1.0, 2.0]),
            Err(Error::DimensionMismatch { expected: 4, found: 2 })
        );
    }

    #[test]
    fn energy_measure_half_split() {
        let g = c4();
        let f = GraphFunction::indicator(4, 0);
        let gamma = g.energy_measure(&f, &f).unwrap();
        assert_eq!(gamma.values(), &[1.0, 0.5, 0.0, 0.5]);
        assert_eq!(gamma.total_mass(), g.energy(&f, &f).unwrap());
    }

    #[test]
    fn energy_measure_defining_identity_on_indicators() {
        // 2 ∫ φ dΓ(f,h) = E(φf, h) + E(φh, f) - E(fh, φ)
        let g = c4();
        let f: GraphFunction = vec![0.3, -1.2, 2.0, 0.7].into();
        let h: GraphFunction = vec![1.1, 0.4, -0.5, 2.5].into();
        let gamma = g.energy_measure(&f, &h).unwrap();
        for x in 0..4 {
            let phi = GraphFunction::indicator(4, x);
            let lhs = 2.0 * gamma.integrate(&phi);
            let rhs = g.energy(&phi.product(&f), &h).unwrap() + g.energy(&phi.product(&h), &f).unwrap()
                - g.energy(&f.product(&h), &phi).unwrap();
            assert!((lhs - rhs).abs() < 1e-14, "vertex {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn generator_on_c4() {
        let g = c4();
        let af = g.generator(&GraphFunction::indicator(4, 0));
        assert_eq!(af.values(), &[-2.0, 1.0, 0.0, 1.0]);
        assert!(g.generator(&GraphFunction::constant(4, 1.5)).iter().all(|&v| v == 0.0));
    }

    #[test]
    fn series_and_delta_wye_traces() {
        let path = WeightedGraph::from_triples(3, &[(0, 1, 1.), (1, 2, 1.)]).unwrap();
        let t = path.schur_trace(&[0, 2]).unwrap();
        assert_eq!(t.edge_count(), 1);
        assert!((t.edge(0).conductance - 0.5).abs() < 1e-15);

        let tri = WeightedGraph::from_triples(3, &[(0, 1, 1.), (1, 2, 1.), (0, 2, 1.)]).unwrap();
        let t = tri.schur_trace(&[0, 1]).unwrap();
        assert_eq!(t.edge_count(), 1);
        assert!((t.edge(0).conductance - 1.5).abs() < 1e-15);

        assert_eq!(tri.schur_trace(&[]), Err(Error::EmptySet("coarse vertex set")));
    }

    #[test]
    fn trace_to_single_vertex() {
        let t = c4().schur_trace(&[2]).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (1, 0));
    }

    #[test]
    fn spectral_gap_of_c4() {
        // eigenvalues of the C4 Laplacian: 0, 2, 2, 4
        assert!((c4().spectral_gap() - 2.0).abs() < 1e-12);
    }
}
