//! Finite covers by connected vertex sets, their nerves, Čech cochains in
//! degrees 0–2, first cohomology, refinement maps, and the comparison with
//! harmonic 1-forms.
//!
//! Simplices are stored in positive orientation, i.e. with labels in
//! increasing index order. A cochain value on any other ordering of the same
//! labels picks up the sign of the sorting permutation.

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms;
use crate::graph::WeightedGraph;
use crate::linalg::{self, RANK_TOLERANCE};
use crate::potential;

/// Nerves with fewer simplices than this get an exact rational rank check.
pub const EXACT_RANK_LIMIT: usize = 64;

/// A finite cover of the vertex set by connected subsets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cover {
    labels: Vec<String>,
    sets: Vec<Vec<usize>>,
}

impl Cover {
    /// Labels default to `U0, U1, ...`.
    pub fn new(g: &WeightedGraph, sets: Vec<Vec<usize>>) -> Result<Self> {
        let labels = (0..sets.len()).map(|i| format!("U{i}")).collect();
        Self::with_labels(g, labels, sets)
    }

    pub fn with_labels(g: &WeightedGraph, labels: Vec<String>, sets: Vec<Vec<usize>>) -> Result<Self> {
        if labels.len() != sets.len() {
            return Err(Error::InvalidCover(format!(
                "{} labels for {} sets",
                labels.len(),
                sets.len()
            )));
        }
        if sets.is_empty() {
            return Err(Error::InvalidCover("no sets".into()));
        }
        let mut distinct = BTreeSet::new();
        for l in &labels {
            if !distinct.insert(l) {
                return Err(Error::InvalidCover(format!("duplicate label `{l}`")));
            }
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for (i, mut set) in sets.into_iter().enumerate() {
            g.check_vertices(&set)?;
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::InvalidCover(format!("set {i} is empty")));
            }
            if !g.induces_connected(&set) {
                return Err(Error::InvalidCover(format!("set {i} does not induce a connected subgraph")));
            }
            normalized.push(set);
        }
        let mut hit = vec![false; g.vertex_count()];
        for set in &normalized {
            for &x in set {
                hit[x] = true;
            }
        }
        if let Some(x) = hit.iter().position(|h| !h) {
            return Err(Error::InvalidCover(format!("vertex {x} is not covered")));
        }
        Ok(Self { labels, sets: normalized })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn intersection(&self, ids: &[usize]) -> Vec<usize> {
        let mut out = self.sets[ids[0]].clone();
        for &i in &ids[1..] {
            out.retain(|x| self.sets[i].binary_search(x).is_ok());
        }
        out
    }

    /// Structural checks beyond the type invariants.
    pub fn validity(&self, g: &WeightedGraph) -> CoverValidity {
        let k = self.len();
        let mut multiplicity = vec![0usize; g.vertex_count()];
        for set in &self.sets {
            for &x in set {
                multiplicity[x] += 1;
            }
        }
        let triple_free = multiplicity.iter().all(|&m| m <= 2);
        let covers_edges = g.edges().iter().all(|e| {
            self.sets
                .iter()
                .any(|s| s.binary_search(&e.tail).is_ok() && s.binary_search(&e.head).is_ok())
        });
        let mut connected_intersections = true;
        for a in 0..k {
            for b in a + 1..k {
                let common = self.intersection(&[a, b]);
                if !common.is_empty() && !g.induces_connected(&common) {
                    connected_intersections = false;
                }
            }
        }
        CoverValidity { connected_sets: true, triple_free, covers_edges, connected_intersections }
    }
}

/// Flags describing how well a cover approximates a good open cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverValidity {
    pub connected_sets: bool,
    /// No three distinct sets share a vertex.
    pub triple_free: bool,
    /// Every edge has both endpoints in a common set.
    pub covers_edges: bool,
    /// Every nonempty pairwise intersection induces a connected subgraph.
    pub connected_intersections: bool,
}

impl CoverValidity {
    /// Connected sets with empty triple intersections.
    pub fn intersection_condition(&self) -> bool {
        self.connected_sets && self.triple_free
    }

    /// The intersection condition plus the graph conditions that make the
    /// vertex sets behave like open sets of the underlying 1-complex.
    pub fn is_good(&self) -> bool {
        self.intersection_condition() && self.covers_edges && self.connected_intersections
    }
}

/// The nerve of a cover, truncated at dimension 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nerve {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
}

impl Nerve {
    /// Builds an abstract nerve; simplices are sorted and deduplicated, and
    /// every face of a listed triangle must be a listed edge.
    pub fn from_simplices(
        vertex_count: usize,
        edges: impl IntoIterator<Item = [usize; 2]>,
        triangles: impl IntoIterator<Item = [usize; 3]>,
    ) -> Result<Self> {
        let mut es: Vec<[usize; 2]> = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] || e[1] >= vertex_count {
                return Err(Error::InvalidCover(format!("bad 1-simplex {e:?}")));
            }
            es.push(e);
        }
        es.sort_unstable();
        es.dedup();
        let mut ts: Vec<[usize; 3]> = Vec::new();
        for mut t in triangles {
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] || t[2] >= vertex_count {
                return Err(Error::InvalidCover(format!("bad 2-simplex {t:?}")));
            }
            for face in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                if es.binary_search(&face).is_err() {
                    return Err(Error::InvalidCover(format!("face {face:?} of {t:?} missing")));
                }
            }
            ts.push(t);
        }
        ts.sort_unstable();
        ts.dedup();
        Ok(Self { vertex_count, edges: es, triangles: ts })
    }

    pub fn simplex_count(&self) -> usize {
        self.vertex_count + self.edges.len() + self.triangles.len()
    }

    fn edge_index(&self, a: usize, b: usize) -> Option<(usize, f64)> {
        let (key, sign) = if a < b { ([a, b], 1.0) } else { ([b, a], -1.0) };
        self.edges.binary_search(&key).ok().map(|i| (i, sign))
    }

    /// Matrix of `d: C⁰ → C¹`.
    pub fn d0(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.edges.len(), self.vertex_count);
        for (i, &[a, b]) in self.edges.iter().enumerate() {
            m[(i, a)] = -1.0;
            m[(i, b)] = 1.0;
        }
        m
    }

    /// Matrix of `d: C¹ → C²`.
    pub fn d1(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.triangles.len(), self.edges.len());
        for (i, &[a, b, c]) in self.triangles.iter().enumerate() {
            for (face, coeff) in [([b, c], 1.0), ([a, c], -1.0), ([a, b], 1.0)] {
                let j = self.edges.binary_search(&face).expect("faces present");
                m[(i, j)] = coeff;
            }
        }
        m
    }

    /// Whether the 1-skeleton is a forest.
    pub fn one_skeleton_is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &[a, b] in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

/// Nerve of `cover`: all pairs and triples of sets with a common vertex.
pub fn nerve(g: &WeightedGraph, cover: &Cover) -> Result<Nerve> {
    // re-validate: the cover may have been deserialized
    let cover = Cover::with_labels(g, cover.labels.clone(), cover.sets.clone())?;
    let k = cover.len();
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if cover.intersection(&[a, b]).is_empty() {
                continue;
            }
            edges.push([a, b]);
            for c in b + 1..k {
                if !cover.intersection(&[a, b, c]).is_empty() {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    Nerve::from_simplices(k, edges, triangles)
}

/// An alternating cochain of degree 0, 1 or 2. Values are indexed like the
/// nerve's simplex lists.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<f64>,
}

impl Cochain {
    pub fn new(nerve: &Nerve, degree: usize, values: Vec<f64>) -> Result<Self> {
        let expected = match degree {
            0 => nerve.vertex_count,
            1 => nerve.edges.len(),
            2 => nerve.triangles.len(),
            d => return Err(Error::UnsupportedDegree(d)),
        };
        if values.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: values.len() });
        }
        Ok(Self { degree, values })
    }

    /// Value on an arbitrarily ordered simplex; zero if it is not in the nerve
    /// or has repeated labels.
    pub fn value(&self, nerve: &Nerve, simplex: &[usize]) -> f64 {
        assert_eq!(simplex.len(), self.degree + 1, "simplex dimension mismatch");
        let mut sorted = simplex.to_vec();
        let mut sign = 1.0;
        // bubble sort to track the permutation parity
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return 0.0;
        }
        let idx = match self.degree {
            0 => Some(sorted[0]),
            1 => nerve.edges.binary_search(&[sorted[0], sorted[1]]).ok(),
            _ => nerve.triangles.binary_search(&[sorted[0], sorted[1], sorted[2]]).ok(),
        };
        idx.map_or(0.0, |i| sign * self.values[i])
    }
}

/// The Čech coboundary on 0- and 1-cochains.
pub fn coboundary(nerve: &Nerve, c: &Cochain) -> Result<Cochain> {
    match c.degree {
        0 => {
            let values = nerve.edges.iter().map(|&[a, b]| c.values[b] - c.values[a]).collect();
            Ok(Cochain { degree: 1, values })
        }
        1 => {
            let values = nerve
                .triangles
                .iter()
                .map(|&[a, b, d]| c.value(nerve, &[b, d]) - c.value(nerve, &[a, d]) + c.value(nerve, &[a, b]))
                .collect();
            Ok(Cochain { degree: 2, values })
        }
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// Dimensions of cocycles, coboundaries and first cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Dimensions {
    pub cocycles: usize,
    pub coboundaries: usize,
    pub h1: usize,
    /// Whether the ranks were confirmed by exact rational elimination.
    pub exact: bool,
}

/// Ranks of both coboundary matrices; exact over the rationals for small
/// nerves, numerical otherwise.
pub fn h1_dimensions(nerve: &Nerve) -> H1Dimensions {
    let (d0, d1) = (nerve.d0(), nerve.d1());
    let (mut r0, mut r1) = (linalg::numeric_rank(&d0), linalg::numeric_rank(&d1));
    let mut exact = false;
    if nerve.simplex_count() < EXACT_RANK_LIMIT {
        if let (Some(i0), Some(i1)) = (linalg::to_integer_rows(&d0), linalg::to_integer_rows(&d1)) {
            // the exact ranks win if the two disagree
            r0 = linalg::exact_rank(&i0);
            r1 = linalg::exact_rank(&i1);
            exact = true;
        }
    }
    let cocycles = nerve.edges.len() - r1;
    H1Dimensions { cocycles, coboundaries: r0, h1: cocycles - r0, exact }
}

pub fn h1_dimension(nerve: &Nerve) -> usize {
    h1_dimensions(nerve).h1
}

/// A refining map `π`: for each fine set `β`, the smallest coarse index `α`
/// with `V_β ⊆ U_α`.
pub fn refinement_map(coarse: &Cover, fine: &Cover) -> Result<Vec<usize>> {
    fine.sets
        .iter()
        .enumerate()
        .map(|(beta, v)| {
            coarse
                .sets
                .iter()
                .position(|u| is_subset(v, u))
                .ok_or(Error::NotARefinement { fine_set: beta })
        })
        .collect()
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// The map `Ȟ¹(coarse) → Ȟ¹(fine)` induced by a refining map, written in
/// orthonormal bases of harmonic cochain representatives.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedMap {
    pub matrix: DMatrix<f64>,
    pub coarse_h1: usize,
    pub fine_h1: usize,
    pub rank: usize,
    /// Cocycles map to cocycles and coboundaries to coboundaries.
    pub well_defined: bool,
}

impl InducedMap {
    pub fn is_injective(&self) -> bool {
        self.rank == self.coarse_h1
    }
}

/// Harmonic cochains `ker d1 ∩ ker d0ᵀ`: one representative per class.
fn harmonic_cochains(nerve: &Nerve) -> DMatrix<f64> {
    let d1 = nerve.d1();
    let d0t = nerve.d0().transpose();
    let stacked = DMatrix::from_fn(d1.nrows() + d0t.nrows(), nerve.edges.len(), |i, j| {
        if i < d1.nrows() {
            d1[(i, j)]
        } else {
            d0t[(i - d1.nrows(), j)]
        }
    });
    linalg::null_space(&stacked)
}

pub fn induced_h1_map(
    g: &WeightedGraph,
    coarse: &Cover,
    fine: &Cover,
    pi: &[usize],
) -> Result<InducedMap> {
    if pi.len() != fine.len() {
        return Err(Error::InvalidRefinementMap(format!(
            "map has {} entries for {} fine sets",
            pi.len(),
            fine.len()
        )));
    }
    for (beta, &alpha) in pi.iter().enumerate() {
        if alpha >= coarse.len() || !is_subset(fine.set(beta), coarse.set(alpha)) {
            return Err(Error::InvalidRefinementMap(format!(
                "fine set {beta} is not contained in coarse set {alpha}"
            )));
        }
    }
    let (nc, nf) = (nerve(g, coarse)?, nerve(g, fine)?);
    // pullback of 1-cochains
    let mut pull = DMatrix::zeros(nf.edges.len(), nc.edges.len());
    for (row, &[b0, b1]) in nf.edges.iter().enumerate() {
        let (a0, a1) = (pi[b0], pi[b1]);
        if a0 == a1 {
            continue;
        }
        let (col, sign) = nc.edge_index(a0, a1).ok_or_else(|| {
            Error::InvalidRefinementMap(format!("image of 1-simplex ({b0},{b1}) is not a simplex"))
        })?;
        pull[(row, col)] = sign;
    }
    let hc = harmonic_cochains(&nc);
    let hf = harmonic_cochains(&nf);
    let matrix = hf.transpose() * &pull * &hc;

    let scale = 1.0 + pull.norm();
    let cocycles_kept = if nc.edges.is_empty() {
        true
    } else {
        let zc = linalg::null_space(&nc.d1());
        (nf.d1() * &pull * zc).norm() <= RANK_TOLERANCE * scale
    };
    let coboundaries_kept = if nc.edges.is_empty() || hf.ncols() == 0 {
        true
    } else {
        (hf.transpose() * &pull * nc.d0()).norm() <= RANK_TOLERANCE * scale
    };
    let rank = linalg::numeric_rank(&matrix);
    Ok(InducedMap {
        coarse_h1: hc.ncols(),
        fine_h1: hf.ncols(),
        rank,
        well_defined: cocycles_kept && coboundaries_kept,
        matrix,
    })
}

/// A cover produced by [`good_cover`] together with its re-checked flags.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructedCover {
    pub cover: Cover,
    pub validity: CoverValidity,
}

/// Greedy cover by small overlapping balls.
///
/// Edges are visited in order; an uncovered edge seeds a new set, which then
/// grows by adjacent vertices that cover further edges, up to
/// `max_set_size` vertices. No vertex is allowed in more than two sets and
/// pairwise intersections are kept connected. When an edge cannot seed a
/// set it is absorbed into a neighboring set, or two sets are merged.
/// Growth stops short of the whole vertex set, whose one-point nerve could
/// not see any cycle.
pub fn good_cover(g: &WeightedGraph, max_set_size: usize) -> Result<ConstructedCover> {
    if max_set_size < 2 {
        return Err(Error::Precondition(format!("max_set_size must be at least 2, got {max_set_size}")));
    }
    let cap = if g.vertex_count() > 2 { max_set_size.min(g.vertex_count() - 1) } else { max_set_size };
    let mut builder = GreedyCover { g, sets: Vec::new(), membership: vec![Vec::new(); g.vertex_count()] };
    if g.edge_count() == 0 {
        builder.sets.push((0..g.vertex_count()).collect());
    }
    for e in g.edges() {
        let (u, v) = (e.tail, e.head);
        if builder.covered(u, v) {
            continue;
        }
        if builder.membership[u].len() < 2 && builder.membership[v].len() < 2 {
            let id = builder.push(BTreeSet::from([u, v]));
            builder.grow(id, cap);
        } else if !builder.absorb(u, v) && !builder.merge(u, v) {
            return Err(Error::CoverConstruction(format!("edge ({u},{v}) cannot be covered")));
        }
    }
    let sets: Vec<Vec<usize>> = builder
        .sets
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.into_iter().collect())
        .collect();
    let cover = Cover::new(g, sets)?;
    let validity = cover.validity(g);
    Ok(ConstructedCover { cover, validity })
}

struct GreedyCover<'a> {
    g: &'a WeightedGraph,
    sets: Vec<BTreeSet<usize>>,
    membership: Vec<Vec<usize>>,
}

impl GreedyCover<'_> {
    fn covered(&self, u: usize, v: usize) -> bool {
        self.membership[u].iter().any(|s| self.sets[*s].contains(&v))
    }

    fn push(&mut self, set: BTreeSet<usize>) -> usize {
        let id = self.sets.len();
        for &x in &set {
            self.membership[x].push(id);
        }
        self.sets.push(set);
        id
    }

    fn add(&mut self, id: usize, x: usize) {
        self.sets[id].insert(x);
        self.membership[x].push(id);
    }

    /// Whether `candidate` keeps every intersection with the other sets
    /// connected.
    fn intersections_ok(&self, candidate: &BTreeSet<usize>, skip: &[usize]) -> bool {
        self.sets.iter().enumerate().all(|(j, other)| {
            if skip.contains(&j) {
                return true;
            }
            let common: Vec<usize> = candidate.intersection(other).copied().collect();
            common.is_empty() || self.g.induces_connected(&common)
        })
    }

    fn grow(&mut self, id: usize, max_size: usize) {
        while self.sets[id].len() < max_size {
            let mut best: Option<(usize, usize)> = None;
            for &x in &self.sets[id] {
                for &(w, _) in self.g.neighbors(x) {
                    if self.sets[id].contains(&w) || self.membership[w].len() >= 2 {
                        continue;
                    }
                    let gain = self
                        .g
                        .neighbors(w)
                        .iter()
                        .filter(|&&(y, _)| self.sets[id].contains(&y) && !self.covered(w, y))
                        .count();
                    if gain == 0 {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bw, bg)) => gain > bg || (gain == bg && w < bw),
                    };
                    if better {
                        let mut candidate = self.sets[id].clone();
                        candidate.insert(w);
                        if self.intersections_ok(&candidate, &[id]) {
                            best = Some((w, gain));
                        }
                    }
                }
            }
            match best {
                Some((w, _)) => self.add(id, w),
                None => break,
            }
        }
    }

    /// Adds one endpoint to a set already holding the other.
    fn absorb(&mut self, u: usize, v: usize) -> bool {
        for (inside, outside) in [(u, v), (v, u)] {
            if self.membership[outside].len() >= 2 {
                continue;
            }
            for &id in &self.membership[inside].clone() {
                let mut candidate = self.sets[id].clone();
                candidate.insert(outside);
                if self.intersections_ok(&candidate, &[id]) {
                    self.add(id, outside);
                    return true;
                }
            }
        }
        false
    }

    /// Merges a set holding `u` with one holding `v`.
    fn merge(&mut self, u: usize, v: usize) -> bool {
        for &a in &self.membership[u].clone() {
            for &b in &self.membership[v].clone() {
                if a == b {
                    continue;
                }
                let merged: BTreeSet<usize> = self.sets[a].union(&self.sets[b]).copied().collect();
                if !self.intersections_ok(&merged, &[a, b]) {
                    continue;
                }
                let moved = std::mem::take(&mut self.sets[b]);
                for x in moved {
                    self.membership[x].retain(|&s| s != b);
                    if !self.sets[a].contains(&x) {
                        self.add(a, x);
                    }
                }
                return true;
            }
        }
        false
    }
}

/// The capacity side condition as checked on the sets of one cover.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CapacityHypothesis {
    pub disconnecting_sets_checked: usize,
    pub min_capacity: Option<f64>,
    pub holds: bool,
    pub max_separator_size: usize,
}

/// Side-by-side comparison of harmonic 1-forms and the cover's cohomology.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub harmonic_dimension: usize,
    pub cech_dimension: usize,
    pub harmonic_nontrivial: bool,
    pub cech_nontrivial: bool,
    pub agree: bool,
    /// Observed only; nontriviality is what is being compared.
    pub dimensions_equal_empirical: bool,
    pub validity: CoverValidity,
    pub capacity_hypothesis: CapacityHypothesis,
    pub notes: Vec<String>,
}

pub fn correspondence_check(g: &WeightedGraph, cover: &Cover) -> Result<CorrespondenceReport> {
    correspondence_check_with(g, cover, potential::DEFAULT_SEPARATOR_SIZE)
}

pub fn correspondence_check_with(
    g: &WeightedGraph,
    cover: &Cover,
    max_separator_size: usize,
) -> Result<CorrespondenceReport> {
    let n = nerve(g, cover)?;
    let cech_dimension = h1_dimension(&n);
    let harmonic_dimension = forms::harmonic_dimension(g);
    let validity = cover.validity(g);

    let mut checked = 0;
    let mut min_capacity: Option<f64> = None;
    for set in cover.sets() {
        for d in potential::disconnecting_sets(g, set, max_separator_size)? {
            checked += 1;
            min_capacity = Some(min_capacity.map_or(d.capacity, |m| m.min(d.capacity)));
        }
    }
    let capacity_hypothesis = CapacityHypothesis {
        disconnecting_sets_checked: checked,
        min_capacity,
        holds: min_capacity.is_none_or(|c| c > 0.0),
        max_separator_size,
    };

    let (harmonic_nontrivial, cech_nontrivial) = (harmonic_dimension > 0, cech_dimension > 0);
    let agree = harmonic_nontrivial == cech_nontrivial;
    let mut notes = vec![
        "all conductances are positive, so every nonempty vertex set has positive capacity".to_string(),
    ];
    if !validity.intersection_condition() {
        notes.push("cover has a triple intersection; it is not in the cofinal family of good covers".into());
    }
    if harmonic_nontrivial && !cech_nontrivial {
        notes.push(
            "a single cover need not be cofinal: nontrivial cohomology of the space is only \
             certified by some refinement in the direct limit"
                .into(),
        );
    }
    if cech_nontrivial && !harmonic_nontrivial {
        notes.push("cover cohomology is nontrivial although no harmonic 1-form exists".into());
    }
    Ok(CorrespondenceReport {
        harmonic_dimension,
        cech_dimension,
        harmonic_nontrivial,
        cech_nontrivial,
        agree,
        dimensions_equal_empirical: harmonic_dimension == cech_dimension,
        validity,
        capacity_hypothesis,
        notes,
    })
}
