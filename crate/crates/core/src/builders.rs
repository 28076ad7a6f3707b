//! Approximation graphs for the standard one-dimensional example spaces:
//! cycles, intervals, trees, ladders, metric graphs and Sierpinski gasket
//! approximations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, WeightedGraph};

/// Conductance renormalization factor of the standard gasket energy.
pub const GASKET_RENORMALIZATION: f64 = 5.0 / 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cycle,
    Path,
    Tree,
    SierpinskiGasket,
    MetricGraph,
    Ladder,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Cycle,
        Family::Path,
        Family::Tree,
        Family::SierpinskiGasket,
        Family::MetricGraph,
        Family::Ladder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Tree => "tree",
            Family::SierpinskiGasket => "sierpinski_gasket",
            Family::MetricGraph => "metric_graph",
            Family::Ladder => "ladder",
        }
    }

    fn default_renormalization(self) -> f64 {
        match self {
            Family::SierpinskiGasket => GASKET_RENORMALIZATION,
            _ => 1.0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamily(s.to_string()))
    }
}

/// A metric-graph edge given by its resistance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricEdge {
    pub tail: usize,
    pub head: usize,
    pub resistance: f64,
}

/// Parameters for [`build`].
///
/// `level_or_size` is the vertex count for cycles, paths and metric graphs,
/// the number of rungs for ladders, the depth for trees and the level for
/// the gasket. `renormalization` defaults to 5/3 for the gasket (conductance
/// `r^level`) and to 1 elsewhere (a uniform conductance scale).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuilderSpec {
    pub family: Family,
    pub level_or_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub renormalization: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree_arity: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub metric_graph_edges: Vec<MetricEdge>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub subdivisions: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl BuilderSpec {
    pub fn new(family: Family, level_or_size: usize) -> Self {
        Self {
            family,
            level_or_size,
            renormalization: None,
            tree_arity: None,
            metric_graph_edges: Vec::new(),
            subdivisions: 0,
        }
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(Family::Cycle, n)
    }

    pub fn path(n: usize) -> Self {
        Self::new(Family::Path, n)
    }

    pub fn tree(arity: usize, depth: usize) -> Self {
        Self { tree_arity: Some(arity), ..Self::new(Family::Tree, depth) }
    }

    pub fn sierpinski_gasket(level: usize) -> Self {
        Self::new(Family::SierpinskiGasket, level)
    }

    pub fn ladder(rungs: usize) -> Self {
        Self::new(Family::Ladder, rungs)
    }

    pub fn metric_graph(edges: Vec<MetricEdge>, subdivisions: usize) -> Self {
        Self { metric_graph_edges: edges, subdivisions, ..Self::new(Family::MetricGraph, 0) }
    }

    pub fn renormalization(&self) -> f64 {
        self.renormalization.unwrap_or_else(|| self.family.default_renormalization())
    }
}

/// Builds the graph described by `spec`.
pub fn build(spec: &BuilderSpec) -> Result<WeightedGraph> {
    let r = spec.renormalization();
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidSpec(format!("renormalization must be positive, got {r}")));
    }
    let n = spec.level_or_size;
    match spec.family {
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidSpec(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            let edges = (0..n).map(|i| Edge::new(i, (i + 1) % n, r)).collect();
            WeightedGraph::new(n, edges)
        }
        Family::Path => {
            if n == 0 {
                return Err(Error::InvalidSpec("a path needs at least one vertex".into()));
            }
            let edges = (0..n - 1).map(|i| Edge::new(i, i + 1, r)).collect();
            WeightedGraph::new(n, edges)
        }
        Family::Tree => {
            let arity = spec
                .tree_arity
                .ok_or_else(|| Error::InvalidSpec("tree_arity is required for trees".into()))?;
            if arity == 0 {
                return Err(Error::InvalidSpec("tree_arity must be positive".into()));
            }
            complete_tree(arity, n, r)
        }
        Family::SierpinskiGasket => sierpinski_gasket(n, r),
        Family::Ladder => {
            if n < 2 {
                return Err(Error::InvalidSpec(format!("a ladder needs at least 2 rungs, got {n}")));
            }
            let mut edges = Vec::with_capacity(3 * n - 2);
            for i in 0..n {
                if i + 1 < n {
                    edges.push(Edge::new(i, i + 1, r));
                    edges.push(Edge::new(n + i, n + i + 1, r));
                }
                edges.push(Edge::new(i, n + i, r));
            }
            edges.sort_by_key(|e| (e.tail, e.head));
            WeightedGraph::new(2 * n, edges)
        }
        Family::MetricGraph => metric_graph(spec, r),
    }
}

fn complete_tree(arity: usize, depth: usize, conductance: f64) -> Result<WeightedGraph> {
    let mut edges = Vec::new();
    let mut level_start = 0;
    let mut level_len = 1;
    let mut next = 1;
    for _ in 0..depth {
        for parent in level_start..level_start + level_len {
            for _ in 0..arity {
                edges.push(Edge::new(parent, next, conductance));
                next += 1;
            }
        }
        level_start += level_len;
        level_len *= arity;
    }
    WeightedGraph::new(next, edges)
}

fn metric_graph(spec: &BuilderSpec, scale: f64) -> Result<WeightedGraph> {
    let max_vertex = spec
        .metric_graph_edges
        .iter()
        .map(|e| e.tail.max(e.head) + 1)
        .max()
        .unwrap_or(1);
    let mut next = spec.level_or_size.max(max_vertex);
    let segments = spec.subdivisions + 1;
    let mut edges = Vec::new();
    for (i, me) in spec.metric_graph_edges.iter().enumerate() {
        if !(me.resistance.is_finite() && me.resistance > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "metric edge {i} has non-positive resistance {}",
                me.resistance
            )));
        }
        let c = scale * segments as f64 / me.resistance;
        let mut prev = me.tail;
        for _ in 1..segments {
            edges.push(Edge::new(prev, next, c));
            prev = next;
            next += 1;
        }
        edges.push(Edge::new(prev, me.head, c));
    }
    WeightedGraph::new(next, edges)
}

/// First Betti number `|E| - |V| + 1` of a connected graph.
pub fn first_betti(g: &WeightedGraph) -> usize {
    g.edge_count() + 1 - g.vertex_count()
}

/// Vertex coordinates and smallest cells of a level-`n` gasket graph.
///
/// Coordinates live on the integer lattice with corners `(0,0)`, `(2^n,0)`,
/// `(0,2^n)`. Vertices are numbered by first appearance when cells are
/// visited in lexicographic address order, corners 0, 1, 2 within a cell.
#[derive(Clone, Debug, PartialEq)]
pub struct GasketLayout {
    pub level: usize,
    pub coords: Vec<[u64; 2]>,
    /// Cells in address order, each as its three corner vertices.
    pub cells: Vec<[usize; 3]>,
}

impl GasketLayout {
    pub fn new(level: usize) -> Self {
        const UNIT: [[u64; 2]; 3] = [[0, 0], [1, 0], [0, 1]];
        let mut index: HashMap<[u64; 2], usize> = HashMap::new();
        let mut coords = Vec::new();
        let mut cells = Vec::with_capacity(3usize.pow(level as u32));
        for word in 0..3usize.pow(level as u32) {
            // digits of `word` in base 3, most significant first
            let mut origin = [0u64, 0];
            let mut rest = word;
            for i in (0..level).rev() {
                let digit = rest % 3;
                rest /= 3;
                let weight = 1u64 << (level - 1 - i);
                origin[0] += UNIT[digit][0] * weight;
                origin[1] += UNIT[digit][1] * weight;
            }
            let mut cell = [0; 3];
            for (j, corner) in UNIT.iter().enumerate() {
                let p = [origin[0] + corner[0], origin[1] + corner[1]];
                cell[j] = *index.entry(p).or_insert_with(|| {
                    coords.push(p);
                    coords.len() - 1
                });
            }
            cells.push(cell);
        }
        Self { level, coords, cells }
    }

    pub fn vertex_of(&self, coord: [u64; 2]) -> Option<usize> {
        self.coords.iter().position(|&c| c == coord)
    }

    /// Indices (in this layout) of the level-`(n-1)` vertices, listed in
    /// the level-`(n-1)` numbering.
    pub fn coarse_vertices(&self) -> Vec<usize> {
        assert!(self.level >= 1, "level 0 has no coarser level");
        let coarse = GasketLayout::new(self.level - 1);
        let lookup: HashMap<[u64; 2], usize> =
            self.coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        coarse.coords.iter().map(|c| lookup[&[2 * c[0], 2 * c[1]]]).collect()
    }

    /// The three outer corners.
    pub fn corners(&self) -> [usize; 3] {
        let s = 1u64 << self.level;
        [[0, 0], [s, 0], [0, s]].map(|c| self.vertex_of(c).expect("corner present"))
    }
}

/// Level-`n` gasket graph with every conductance equal to `renormalization^n`.
pub fn sierpinski_gasket(level: usize, renormalization: f64) -> Result<WeightedGraph> {
    let layout = GasketLayout::new(level);
    let c = renormalization.powi(level as i32);
    let mut edges: Vec<Edge> = layout
        .cells
        .iter()
        .flat_map(|&[a, b, d]| [(a, b), (b, d), (a, d)])
        .map(|(x, y)| Edge::new(x.min(y), x.max(y), c))
        .collect();
    edges.sort_by_key(|e| (e.tail, e.head));
    WeightedGraph::new(layout.coords.len(), edges)
}
