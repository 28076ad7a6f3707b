//! Seeded random graphs, functions and forms for randomized checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builders::{build, BuilderSpec, Family, MetricEdge};
use crate::error::Result;
use crate::graph::{Edge, WeightedGraph};
use crate::vectors::{GraphFunction, OneForm};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Range for random conductances and vertex weights.
pub const WEIGHT_RANGE: (f64, f64) = (0.5, 2.0);

fn weight(rng: &mut SampleRng) -> f64 {
    rng.random_range(WEIGHT_RANGE.0..=WEIGHT_RANGE.1)
}

/// A small member of `family` at a random size.
pub fn random_spec(family: Family, rng: &mut SampleRng) -> BuilderSpec {
    match family {
        Family::Cycle => BuilderSpec::cycle(rng.random_range(3..=12)),
        Family::Path => BuilderSpec::path(rng.random_range(2..=12)),
        Family::Tree => BuilderSpec::tree(rng.random_range(1..=3), rng.random_range(1..=3)),
        Family::SierpinskiGasket => BuilderSpec::sierpinski_gasket(rng.random_range(0..=2)),
        Family::Ladder => BuilderSpec::ladder(rng.random_range(2..=6)),
        Family::MetricGraph => {
            // a triangle with a pendant segment
            let edges = [(0, 1), (1, 2), (2, 0), (2, 3)]
                .map(|(tail, head)| MetricEdge { tail, head, resistance: weight(rng) })
                .to_vec();
            BuilderSpec::metric_graph(edges, rng.random_range(0..=2))
        }
    }
}

/// Replaces conductances and vertex weights by independent draws from
/// [`WEIGHT_RANGE`].
pub fn randomize_weights(g: &WeightedGraph, rng: &mut SampleRng) -> WeightedGraph {
    let c: Vec<f64> = (0..g.edge_count()).map(|_| weight(rng)).collect();
    let m: Vec<f64> = (0..g.vertex_count()).map(|_| weight(rng)).collect();
    g.with_conductances(&c)
        .and_then(|g| g.with_vertex_measure(m))
        .expect("positive weights keep the graph valid")
}

/// A random member of `family` with random weights.
pub fn random_graph(family: Family, rng: &mut SampleRng) -> Result<WeightedGraph> {
    let g = build(&random_spec(family, rng))?;
    Ok(randomize_weights(&g, rng))
}

/// A uniformly attached random tree: vertex `i` joins a random earlier vertex.
pub fn random_tree(vertex_count: usize, rng: &mut SampleRng) -> WeightedGraph {
    let edges = (1..vertex_count).map(|i| Edge::new(rng.random_range(0..i), i, weight(rng))).collect();
    let g = WeightedGraph::new(vertex_count, edges).expect("a tree is connected");
    randomize_weights(&g, rng)
}

/// A random tree on at least three vertices plus `extra >= 1` chords.
pub fn random_cyclic_graph(vertex_count: usize, extra: usize, rng: &mut SampleRng) -> WeightedGraph {
    assert!(vertex_count >= 3 && extra >= 1, "need room for a cycle");
    let tree = random_tree(vertex_count, rng);
    let mut edges = tree.edges().to_vec();
    let max_edges = vertex_count * (vertex_count - 1) / 2;
    let target = (edges.len() + extra).min(max_edges);
    while edges.len() < target {
        let a = rng.random_range(0..vertex_count);
        let b = rng.random_range(0..vertex_count);
        if a != b && !edges.iter().any(|e| e.touches(a) && e.touches(b)) {
            edges.push(Edge::new(a.min(b), a.max(b), weight(rng)));
        }
    }
    WeightedGraph::with_measure(tree.measure().to_vec(), edges).expect("adding edges keeps the graph valid")
}

/// Entries uniform in `[-1, 1]`.
pub fn random_function(g: &WeightedGraph, rng: &mut SampleRng) -> GraphFunction {
    (0..g.vertex_count()).map(|_| rng.random_range(-1.0..=1.0)).collect()
}

/// Entries uniform in `[-1, 1]`.
pub fn random_form(g: &WeightedGraph, rng: &mut SampleRng) -> OneForm {
    (0..g.edge_count()).map(|_| rng.random_range(-1.0..=1.0)).collect()
}
