//! The Hilbert space of 1-forms on a weighted graph.
//!
//! A 1-form is an edge-indexed vector with inner product
//! `<u, v> = Σ_e c_e u(e) v(e)`. The derivation is `(∂f)(e) = f(head) - f(tail)`
//! and the codifferential `∂*` is fixed by `<f, ∂*v>_{L²(m)} = -<∂f, v>`.
//! Functions act on forms through edge midpoints, `(h·u)(e) = h̄(e) u(e)`,
//! which makes the Leibniz rule an exact identity.

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::cech::Cover;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::linalg::{self, RANK_TOLERANCE};
use crate::vectors::{GraphFunction, OneForm, VertexMeasure};

/// Residual threshold for per-patch exactness and harmonicity tests.
pub const LOCAL_EXACTNESS_TOLERANCE: f64 = 1e-10;

fn check_form(g: &WeightedGraph, u: &[f64]) -> Result<()> {
    if u.len() != g.edge_count() {
        return Err(Error::DimensionMismatch { expected: g.edge_count(), found: u.len() });
    }
    Ok(())
}

/// `(∂f)(e) = f(head) - f(tail)`.
pub fn derivation(g: &WeightedGraph, f: &[f64]) -> OneForm {
    assert_eq!(f.len(), g.vertex_count(), "function length mismatch");
    g.edges().iter().map(|e| f[e.head] - f[e.tail]).collect()
}

/// `<u, v>_ℋ`.
pub fn inner(g: &WeightedGraph, u: &[f64], v: &[f64]) -> Result<f64> {
    check_form(g, u)?;
    check_form(g, v)?;
    Ok(g.conductances().zip(u).zip(v).map(|((c, a), b)| c * a * b).sum())
}

pub fn norm_squared(g: &WeightedGraph, u: &[f64]) -> f64 {
    inner(g, u, u).expect("form length mismatch")
}

/// The simple tensor `a ⊗ b` as the edge form `b̄(e) (∂a)(e)`.
pub fn simple_tensor(g: &WeightedGraph, a: &[f64], b: &[f64]) -> OneForm {
    module_action(g, b, &derivation(g, a))
}

/// `(h·u)(e) = ½ (h(tail) + h(head)) u(e)`.
pub fn module_action(g: &WeightedGraph, h: &[f64], u: &[f64]) -> OneForm {
    assert_eq!(h.len(), g.vertex_count(), "function length mismatch");
    assert_eq!(u.len(), g.edge_count(), "form length mismatch");
    g.edges()
        .iter()
        .zip(u)
        .map(|(e, &ue)| 0.5 * (h[e.tail] + h[e.head]) * ue)
        .collect()
}

/// `(∂*v)(x) = (1/m(x)) (Σ_{tail = x} c_e v(e) - Σ_{head = x} c_e v(e))`.
pub fn codifferential(g: &WeightedGraph, v: &[f64]) -> GraphFunction {
    assert_eq!(v.len(), g.edge_count(), "form length mismatch");
    let mut out = vec![0.0; g.vertex_count()];
    for (e, &ve) in g.edges().iter().zip(v) {
        let flux = e.conductance * ve;
        out[e.tail] += flux;
        out[e.head] -= flux;
    }
    out.iter_mut().zip(g.measure()).for_each(|(o, m)| *o /= m);
    out.into()
}

/// `Δ₁ v = ∂ ∂* v`.
pub fn hodge_laplacian(g: &WeightedGraph, v: &[f64]) -> OneForm {
    derivation(g, &codifferential(g, v))
}

/// Matrix of `∂*` (vertices × edges).
pub fn codifferential_matrix(g: &WeightedGraph) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(g.vertex_count(), g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        m[(e.tail, i)] = e.conductance / g.measure()[e.tail];
        m[(e.head, i)] = -e.conductance / g.measure()[e.head];
    }
    m
}

/// Matrix of `∂` (edges × vertices).
pub fn derivation_matrix(g: &WeightedGraph) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(g.edge_count(), g.vertex_count());
    for (i, e) in g.edges().iter().enumerate() {
        m[(i, e.tail)] = -1.0;
        m[(i, e.head)] = 1.0;
    }
    m
}

/// Matrix of `Δ₁` (edges × edges).
pub fn hodge_laplacian_matrix(g: &WeightedGraph) -> DMatrix<f64> {
    derivation_matrix(g) * codifferential_matrix(g)
}

/// `dim ker ∂*`, by numerical rank.
pub fn harmonic_dimension(g: &WeightedGraph) -> usize {
    g.edge_count() - linalg::numeric_rank(&codifferential_matrix(g))
}

/// `dim ker Δ₁`, by numerical rank.
pub fn hodge_laplacian_kernel_dimension(g: &WeightedGraph) -> usize {
    g.edge_count() - linalg::numeric_rank(&hodge_laplacian_matrix(g))
}

/// Orthogonal splitting of a 1-form into exact and harmonic parts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HodgeSplit {
    pub exact: OneForm,
    pub harmonic: OneForm,
    /// `∂(potential) = exact`, normalized to `m`-mean zero.
    pub potential: GraphFunction,
}

impl HodgeSplit {
    /// `max_e |exact + harmonic - v|`.
    pub fn reconstruction_residual(&self, v: &[f64]) -> f64 {
        self.exact
            .iter()
            .zip(self.harmonic.iter())
            .zip(v)
            .fold(0.0, |m, ((a, b), c)| m.max((a + b - c).abs()))
    }

    pub fn orthogonality_residual(&self, g: &WeightedGraph) -> f64 {
        inner(g, &self.exact, &self.harmonic).expect("split matches graph").abs()
    }
}

/// Solves `∂*∂f = ∂*v` for a mean-zero potential; the harmonic part is the
/// remainder `v - ∂f`.
pub fn hodge_decompose(g: &WeightedGraph, v: &[f64]) -> Result<HodgeSplit> {
    check_form(g, v)?;
    let n = g.vertex_count();
    // L f = b with b = -M ∂*v
    let mut rhs = vec![0.0; n];
    for (e, &ve) in g.edges().iter().zip(v) {
        let flux = e.conductance * ve;
        rhs[e.tail] -= flux;
        rhs[e.head] += flux;
    }
    let mut f = vec![0.0; n];
    if n > 1 {
        // ground vertex 0; the system is consistent because Σ b = 0
        let rest: Vec<usize> = (1..n).collect();
        let l = linalg::submatrix(&g.laplacian_matrix(), &rest, &rest);
        let b = DVector::from_iterator(n - 1, rest.iter().map(|&i| rhs[i]));
        let sol = linalg::solve_spd(l, &b)?;
        f[1..].copy_from_slice(sol.as_slice());
    }
    let mean = g.mean(&f);
    f.iter_mut().for_each(|x| *x -= mean);
    let exact = derivation(g, &f);
    let harmonic = v.iter().zip(exact.iter()).map(|(a, b)| a - b).collect();
    Ok(HodgeSplit { exact, harmonic, potential: f.into() })
}

/// Breadth-first spanning tree from vertex 0: `parent[x] = (parent, edge)`.
fn bfs_tree(g: &WeightedGraph) -> (Vec<Option<(usize, usize)>>, Vec<bool>) {
    let mut parent = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut tree_edge = vec![false; g.edge_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, e));
                tree_edge[e] = true;
                queue.push_back(y);
            }
        }
    }
    (parent, tree_edge)
}

/// `ℋ`-orthonormal basis of `ker ∂*`, one element per independent cycle.
///
/// Each non-tree edge of a breadth-first spanning tree closes a fundamental
/// cycle; the cycle carries unit current, i.e. the form `±1/c_e` along it,
/// which is divergence free. The forms are projected onto `ker ∂*` and then
/// orthonormalized in order of their non-tree edge index.
pub fn harmonic_basis(g: &WeightedGraph) -> Result<Vec<OneForm>> {
    let (parent, tree_edge) = bfs_tree(g);
    let depth = {
        let mut d = vec![0usize; g.vertex_count()];
        // parents are discovered before children in BFS order, so walk up
        for x in 0..g.vertex_count() {
            let mut y = x;
            while let Some((p, _)) = parent[y] {
                d[x] += 1;
                y = p;
            }
        }
        d
    };
    let mut basis: Vec<OneForm> = Vec::new();
    for (idx, e) in g.edges().iter().enumerate() {
        if tree_edge[idx] {
            continue;
        }
        // z is the signed cycle indicator: head -> ... -> tail via the tree
        let mut z = vec![0.0; g.edge_count()];
        z[idx] = 1.0;
        let (mut a, mut b) = (e.head, e.tail);
        let mut from_a = Vec::new();
        let mut from_b = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                let (p, pe) = parent[a].expect("non-root has a parent");
                from_a.push((a, p, pe));
                a = p;
            } else {
                let (p, pe) = parent[b].expect("non-root has a parent");
                from_b.push((p, b, pe));
                b = p;
            }
        }
        // traverse head -> lca along from_a, then lca -> tail along from_b reversed
        for (x, y, pe) in from_a.into_iter().chain(from_b.into_iter().rev()) {
            let edge = g.edge(pe);
            z[pe] += if edge.tail == x && edge.head == y { 1.0 } else { -1.0 };
        }
        let w: OneForm = z.iter().zip(g.conductances()).map(|(zi, c)| zi / c).collect();
        let projected = hodge_decompose(g, &w)?.harmonic;
        basis.push(projected);
    }
    gram_schmidt(g, basis)
}

fn gram_schmidt(g: &WeightedGraph, forms: Vec<OneForm>) -> Result<Vec<OneForm>> {
    let mut out: Vec<OneForm> = Vec::with_capacity(forms.len());
    for mut w in forms {
        let original = norm_squared(g, &w).sqrt();
        // two passes for numerical orthogonality
        for _ in 0..2 {
            for q in &out {
                let coeff = inner(g, &w, q)?;
                w = w.axpy(-coeff, q);
            }
        }
        let norm = norm_squared(g, &w).sqrt();
        if norm <= RANK_TOLERANCE * original.max(f64::MIN_POSITIVE) {
            return Err(Error::Singular);
        }
        out.push(w.scaled(1.0 / norm));
    }
    Ok(out)
}

/// `Γ_ℋ(u)({x}) = ½ Σ_{e ∋ x} c_e u(e)²`.
pub fn gamma_h(g: &WeightedGraph, u: &[f64]) -> VertexMeasure {
    assert_eq!(u.len(), g.edge_count(), "form length mismatch");
    let mut w = vec![0.0; g.vertex_count()];
    for (e, &ue) in g.edges().iter().zip(u) {
        let half = 0.5 * e.conductance * ue * ue;
        w[e.tail] += half;
        w[e.head] += half;
    }
    w.into()
}

/// `∂Γ_ℋ(u)(v) = -Σ_x (∂*v)(x) Γ_ℋ(u)({x})`.
pub fn d_gamma_h(g: &WeightedGraph, u: &[f64], v: &[f64]) -> f64 {
    -gamma_h(g, u).integrate(&codifferential(g, v))
}

/// Patchwise potentials certifying that a form is locally exact.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalPatchWitness {
    pub cover: Cover,
    /// One potential per cover set; values outside the set are zero.
    pub potentials: Vec<GraphFunction>,
    /// Whether each potential is harmonic at the interior vertices of its set.
    pub harmonic_flags: Vec<bool>,
    pub residuals: Vec<f64>,
}

/// Tests whether `u` restricted to the edges inside each cover set is the
/// derivative of a function on that set.
pub fn test_local_exactness(g: &WeightedGraph, u: &[f64], cover: &Cover) -> Result<LocalPatchWitness> {
    check_form(g, u)?;
    let mut potentials = Vec::with_capacity(cover.len());
    let mut harmonic_flags = Vec::with_capacity(cover.len());
    let mut residuals = Vec::with_capacity(cover.len());
    for (patch, set) in cover.sets().iter().enumerate() {
        if !g.induces_connected(set) {
            return Err(Error::InvalidCover(format!("set {patch} does not induce a connected subgraph")));
        }
        let (potential, residual, scale) = patch_potential(g, u, set)?;
        if residual > LOCAL_EXACTNESS_TOLERANCE * scale.max(1.0) {
            return Err(Error::NotLocallyExact { patch, residual });
        }
        harmonic_flags.push(is_harmonic_inside(g, &potential, set));
        residuals.push(residual);
        potentials.push(potential);
    }
    Ok(LocalPatchWitness { cover: cover.clone(), potentials, harmonic_flags, residuals })
}

/// Least-squares potential on the induced subgraph of `set`; returns the
/// potential, the `ℋ`-norm of the misfit and the `ℋ`-norm of `u` on the patch.
fn patch_potential(g: &WeightedGraph, u: &[f64], set: &[usize]) -> Result<(GraphFunction, f64, f64)> {
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &x) in set.iter().enumerate() {
        local[x] = i;
    }
    let inside: Vec<usize> = (0..g.edge_count())
        .filter(|&i| local[g.edge(i).tail] != usize::MAX && local[g.edge(i).head] != usize::MAX)
        .collect();
    let k = set.len();
    let mut lap = DMatrix::zeros(k, k);
    let mut rhs = DVector::zeros(k);
    for &i in &inside {
        let e = g.edge(i);
        let (t, h, c) = (local[e.tail], local[e.head], e.conductance);
        lap[(t, t)] += c;
        lap[(h, h)] += c;
        lap[(t, h)] -= c;
        lap[(h, t)] -= c;
        rhs[h] += c * u[i];
        rhs[t] -= c * u[i];
    }
    let mut values = vec![0.0; k];
    if k > 1 {
        let rest: Vec<usize> = (1..k).collect();
        let b = DVector::from_iterator(k - 1, rest.iter().map(|&i| rhs[i]));
        let sol = linalg::solve_spd(linalg::submatrix(&lap, &rest, &rest), &b)?;
        values[1..].copy_from_slice(sol.as_slice());
    }
    let mass: f64 = set.iter().map(|&x| g.measure()[x]).sum();
    let mean = set.iter().zip(&values).map(|(&x, v)| g.measure()[x] * v).sum::<f64>() / mass;
    let mut potential = vec![0.0; g.vertex_count()];
    for (&x, v) in set.iter().zip(&values) {
        potential[x] = v - mean;
    }
    let (mut misfit, mut scale) = (0.0, 0.0);
    for &i in &inside {
        let e = g.edge(i);
        let d = potential[e.head] - potential[e.tail] - u[i];
        misfit += e.conductance * d * d;
        scale += e.conductance * u[i] * u[i];
    }
    Ok((potential.into(), misfit.sqrt(), scale.sqrt()))
}

/// `E(h, ψ) = 0` for every `ψ` supported on vertices whose whole
/// neighborhood lies in `set`.
fn is_harmonic_inside(g: &WeightedGraph, h: &[f64], set: &[usize]) -> bool {
    let mask = g.mask(set);
    let scale = set
        .iter()
        .flat_map(|&x| g.neighbors(x).iter().map(move |&(y, e)| (x, y, e)))
        .filter(|&(_, y, _)| mask[y])
        .map(|(x, y, e)| g.edge(e).conductance * (h[x] - h[y]).abs())
        .fold(0.0, f64::max);
    set.iter()
        .filter(|&&x| g.neighbors(x).iter().all(|&(y, _)| mask[y]))
        .all(|&x| {
            let flux: f64 = g.neighbors(x).iter().map(|&(y, e)| g.edge(e).conductance * (h[x] - h[y])).sum();
            flux.abs() <= LOCAL_EXACTNESS_TOLERANCE * scale.max(1.0)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, first_betti, BuilderSpec};

    fn c4() -> WeightedGraph {
        build(&BuilderSpec::cycle(4)).unwrap()
    }

    fn cycle_form() -> OneForm {
        vec![1.0; 4].into()
    }

    #[test]
    fn derivation_examples() {
        let g = c4();
        assert_eq!(derivation(&g, &GraphFunction::indicator(4, 0)).values(), &[-1.0, 0.0, 0.0, 1.0]);
        assert!(derivation(&g, &GraphFunction::constant(4, 2.0)).iter().all(|&x| x == 0.0));
    }

    #[test]
    fn inner_examples() {
        let g = build(&BuilderSpec::path(2)).unwrap();
        assert_eq!(inner(&g, &[1.0], &[1.0]).unwrap(), 1.0);
        assert_eq!(inner(&g, &[1.0], &[1.0, 2.0]), Err(Error::DimensionMismatch { expected: 1, found: 2 }));
    }

    #[test]
    fn simple_tensor_norm_matches_weighted_energy_measure() {
        // ||a ⊗ b||² computed edgewise and as Σ_e c_e b̄(e)² (∂a)(e)²
        let g = c4();
        let a: GraphFunction = vec![0.0, 1.0, 3.0, -1.0].into();
        let b: GraphFunction = vec![2.0, -1.0, 0.5, 1.0].into();
        let t = simple_tensor(&g, &a, &b);
        let direct = norm_squared(&g, &t);
        let by_edges: f64 = g
            .edges()
            .iter()
            .map(|e| {
                let bbar = 0.5 * (b[e.tail] + b[e.head]);
                e.conductance * bbar * bbar * (a[e.head] - a[e.tail]).powi(2)
            })
            .sum();
        assert!((direct - by_edges).abs() < 1e-13);
        // with b ≡ 1 this is ∫ dΓ(a) = E(a)
        let one = GraphFunction::constant(4, 1.0);
        let t1 = simple_tensor(&g, &a, &one);
        assert!((norm_squared(&g, &t1) - g.energy_measure(&a, &a).unwrap().total_mass()).abs() < 1e-13);
    }

    #[test]
    fn module_action_examples() {
        let g = c4();
        let hu = module_action(&g, &GraphFunction::indicator(4, 0), &cycle_form());
        assert_eq!(hu.values(), &[0.5, 0.0, 0.0, 0.5]);
        assert_eq!(module_action(&g, &GraphFunction::constant(4, 1.0), &cycle_form()), cycle_form());
    }

    #[test]
    fn codifferential_examples() {
        let g = c4();
        assert!(codifferential(&g, &cycle_form()).iter().all(|&x| x == 0.0));
        let f: GraphFunction = vec![0.2, -1.0, 0.7, 3.0].into();
        let lhs = codifferential(&g, &derivation(&g, &f));
        let rhs = g.generator(&f);
        for (a, b) in lhs.iter().zip(rhs.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn hodge_laplacian_examples() {
        let g = c4();
        assert!(hodge_laplacian(&g, &cycle_form()).iter().all(|&x| x == 0.0));
        let f = GraphFunction::indicator(4, 0);
        let lap = hodge_laplacian(&g, &derivation(&g, &f));
        assert_eq!(lap, derivation(&g, &g.generator(&f)));
        assert!(lap.max_abs() > 0.0);
    }

    #[test]
    fn hodge_decompose_examples() {
        let g = c4();
        let f = GraphFunction::indicator(4, 0);
        let df = derivation(&g, &f);
        let split = hodge_decompose(&g, &df).unwrap();
        assert!(split.harmonic.max_abs() < 1e-12);
        for (p, x) in split.potential.iter().zip(f.iter()) {
            assert!((p - (x - 0.25)).abs() < 1e-12);
        }

        let split = hodge_decompose(&g, &cycle_form()).unwrap();
        assert!(split.exact.max_abs() < 1e-12);

        let mixed = df.axpy(1.0, &cycle_form());
        let split = hodge_decompose(&g, &mixed).unwrap();
        for i in 0..4 {
            assert!((split.exact[i] - df[i]).abs() < 1e-10);
            assert!((split.harmonic[i] - 1.0).abs() < 1e-10);
        }
        assert!(split.orthogonality_residual(&g) < 1e-10);
        assert!(split.reconstruction_residual(&mixed) < 1e-10);
    }

    #[test]
    fn harmonic_basis_examples() {
        let tree = build(&BuilderSpec::tree(3, 2)).unwrap();
        assert!(harmonic_basis(&tree).unwrap().is_empty());

        let c6 = build(&BuilderSpec::cycle(6)).unwrap();
        let basis = harmonic_basis(&c6).unwrap();
        assert_eq!(basis.len(), 1);
        let v = basis[0][0];
        assert!(basis[0].iter().all(|&x| (x.abs() - v.abs()).abs() < 1e-12));
        assert!((norm_squared(&c6, &basis[0]) - 1.0).abs() < 1e-12);

        let sg = build(&BuilderSpec::sierpinski_gasket(1)).unwrap();
        let basis = harmonic_basis(&sg).unwrap();
        assert_eq!(basis.len(), first_betti(&sg));
        for (i, a) in basis.iter().enumerate() {
            assert!(codifferential(&sg, a).max_abs() < 1e-10);
            for (j, b) in basis.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((inner(&sg, a, b).unwrap() - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn harmonic_basis_with_nonuniform_conductances() {
        let g = c4().with_conductances(&[1.0, 2.0, 4.0, 0.5]).unwrap();
        let basis = harmonic_basis(&g).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(codifferential(&g, &basis[0]).max_abs() < 1e-12);
        // the current c_e u(e) is the same on every edge of the cycle
        let currents: Vec<f64> = basis[0].iter().zip(g.conductances()).map(|(u, c)| u * c).collect();
        assert!(currents.iter().all(|&i| (i - currents[0]).abs() < 1e-12));
    }

    #[test]
    fn gamma_h_examples() {
        let g = c4();
        assert_eq!(gamma_h(&g, &cycle_form()).values(), &[1.0; 4]);
        assert_eq!(gamma_h(&g, &OneForm::zeros(4)).values(), &[0.0; 4]);
        let f: GraphFunction = vec![0.2, -1.0, 0.7, 3.0].into();
        assert_eq!(gamma_h(&g, &derivation(&g, &f)), g.energy_measure(&f, &f).unwrap());
    }

    #[test]
    fn d_gamma_h_examples() {
        let g = c4();
        let u = cycle_form();
        let v = derivation(&g, &GraphFunction::indicator(4, 0));
        // ∂*v = A 1_0 = (-2, 1, 0, 1); Γ_ℋ(u) = 1 everywhere
        let by_vertex: f64 = -(0..4).map(|x| codifferential(&g, &v)[x] * gamma_h(&g, &u)[x]).sum::<f64>();
        let by_edge: f64 = {
            // Σ_x φ(x) Γ({x}) = Σ_e ½ c u(e)² (φ(tail) + φ(head))
            let phi = codifferential(&g, &v);
            -g.edges().iter().zip(u.iter()).map(|(e, ue)| 0.5 * e.conductance * ue * ue * (phi[e.tail] + phi[e.head])).sum::<f64>()
        };
        assert_eq!(d_gamma_h(&g, &u, &v), by_vertex);
        assert!((by_vertex - by_edge).abs() < 1e-15);
        assert_eq!(by_vertex, 0.0);
        assert_eq!(d_gamma_h(&g, &OneForm::zeros(4), &v), 0.0);
        assert_eq!(d_gamma_h(&g, &v, &cycle_form()), 0.0);
    }

    #[test]
    fn local_exactness_examples() {
        let g = c4();
        let f: GraphFunction = vec![0.5, 1.0, -2.0, 0.0].into();
        let arcs = Cover::new(&g, vec![vec![0, 1, 2], vec![2, 3, 0]]).unwrap();
        let w = test_local_exactness(&g, &derivation(&g, &f), &arcs).unwrap();
        for (set, p) in arcs.sets().iter().zip(&w.potentials) {
            for pair in set.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                assert!(((p[b] - p[a]) - (f[b] - f[a])).abs() < 1e-12);
            }
        }

        let w = test_local_exactness(&g, &cycle_form(), &arcs).unwrap();
        // the ramp 0,1,2 on {0,1,2} is harmonic at the interior vertex 1
        assert_eq!(w.harmonic_flags, vec![true, true]);
        let p = &w.potentials[0];
        assert!(((p[1] - p[0]) - 1.0).abs() < 1e-12 && ((p[2] - p[1]) - 1.0).abs() < 1e-12);

        let whole = Cover::new(&g, vec![vec![0, 1, 2, 3]]).unwrap();
        assert!(matches!(
            test_local_exactness(&g, &cycle_form(), &whole),
            Err(Error::NotLocallyExact { patch: 0, .. })
        ));
    }
}
