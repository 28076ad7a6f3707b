//! JSON document types read and written by the command-line front end.

use serde::{Deserialize, Serialize};

use crate::builders::{self, BuilderSpec};
use crate::cech::{CorrespondenceReport, Cover, CoverValidity, H1Dimensions, Nerve};
use crate::checks::CheckSuite;
use crate::error::{Error, Result};
use crate::forms::HodgeSplit;
use crate::graph::{Edge, WeightedGraph};
use crate::navier_stokes::{NsSolution, WeakSolutionReport};
use crate::neumann::NeumannData;
use crate::potential::DisconnectingSet;
use crate::vectors::{GraphFunction, OneForm};

/// A graph written out edge by edge. Without `vertex_measure` every vertex
/// has unit weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertex_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_measure: Option<Vec<f64>>,
    pub edges: Vec<Edge>,
}

impl GraphDocument {
    pub fn from_graph(g: &WeightedGraph) -> Self {
        Self { vertex_count: g.vertex_count(), vertex_measure: Some(g.measure().to_vec()), edges: g.edges().to_vec() }
    }

    pub fn to_graph(&self) -> Result<WeightedGraph> {
        match &self.vertex_measure {
            None => WeightedGraph::new(self.vertex_count, self.edges.clone()),
            Some(m) if m.len() != self.vertex_count => {
                Err(Error::DimensionMismatch { expected: self.vertex_count, found: m.len() })
            }
            Some(m) => WeightedGraph::with_measure(m.clone(), self.edges.clone()),
        }
    }
}

/// A cover given by its vertex sets, optionally labelled.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub sets: Vec<Vec<usize>>,
}

impl CoverDocument {
    pub fn to_cover(&self, g: &WeightedGraph) -> Result<Cover> {
        match &self.labels {
            Some(labels) => Cover::with_labels(g, labels.clone(), self.sets.clone()),
            None => Cover::new(g, self.sets.clone()),
        }
    }
}

/// Input to every command. Each command reads the fields it needs.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builder: Option<BuilderSpec>,
    /// 1-form for `hodge`; a seeded random form is used when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<OneForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverDocument>,
    /// Set-size bound for the constructed cover when `cover` is absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_set_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<usize>>,
    /// Region searched for disconnecting sets by `capacity`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_separator_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neumann: Option<NeumannData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u0: Option<OneForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub viscosity: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<Vec<f64>>,
    /// Random graphs per family for `verify`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples_per_family: Option<usize>,
}

impl Request {
    /// The graph from `graph`, else from `builder`.
    pub fn resolve_graph(&self) -> Result<WeightedGraph> {
        match (&self.graph, &self.builder) {
            (Some(_), Some(_)) => Err(Error::Precondition("give either `graph` or `builder`, not both".into())),
            (Some(doc), None) => doc.to_graph(),
            (None, Some(spec)) => builders::build(spec),
            (None, None) => Err(Error::Precondition("request needs a `graph` or a `builder`".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuildResult {
    pub graph: GraphDocument,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub first_betti: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HodgeResult {
    pub form: OneForm,
    pub split: HodgeSplit,
    pub reconstruction_residual: f64,
    pub orthogonality_residual: f64,
    /// `max |∂*(harmonic part)|`.
    pub harmonic_divergence: f64,
    pub harmonic_dimension: usize,
    pub first_betti: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CechResult {
    pub cover: Cover,
    /// Whether the cover was built by the greedy construction.
    pub constructed: bool,
    pub validity: CoverValidity,
    pub nerve: Nerve,
    pub h1: H1Dimensions,
    pub correspondence: CorrespondenceReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CapacityResult {
    pub target: Vec<usize>,
    pub capacity: f64,
    pub equilibrium_potential: GraphFunction,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub disconnecting_sets: Vec<DisconnectingSet>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NeumannResult {
    pub data: NeumannData,
    pub solution: GraphFunction,
    /// Neumann derivatives of `solution` at the boundary points.
    pub derivatives: Vec<f64>,
    pub max_flux_error: f64,
    /// `max |A h|` over vertices off the boundary.
    pub interior_harmonicity: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NsResult {
    pub solution: NsSolution,
    pub first_betti: usize,
    pub times: Vec<f64>,
    pub test_form_count: usize,
    pub report: WeakSolutionReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandResult {
    Build(BuildResult),
    Hodge(HodgeResult),
    Cech(CechResult),
    Capacity(CapacityResult),
    Neumann(NeumannResult),
    Ns(NsResult),
    Verify(CheckSuite),
}

impl CommandResult {
    /// Whether the command's own verification succeeded.
    pub fn passed(&self) -> bool {
        match self {
            CommandResult::Hodge(r) => r.passed,
            CommandResult::Neumann(r) => r.passed,
            CommandResult::Ns(r) => r.report.passed,
            CommandResult::Verify(r) => r.passed,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: super::Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub result: CommandResult,
}
