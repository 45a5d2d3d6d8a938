//! JSON instance files.
//!
//! ```json
//! {"n": 3,
//!  "metric": {"kind": "euclidean", "points": [[0.0], [1.0], [2.0]]},
//!  "edges": [[0, 2]]}
//! ```
//!
//! `kind` is `matrix` (full `matrix` rows), `euclidean` (`points`) or `host_graph`
//! (`edges` as `[i, j, w]`, metric is the shortest-path closure). Generated instances add
//! `labels` and `annotations`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{Edge, MetricGraph, MetricOrigin, MetricSpace};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MetricSpec {
    Matrix { matrix: Vec<Vec<f64>> },
    Euclidean { points: Vec<Vec<f64>> },
    HostGraph { edges: Vec<(usize, usize, f64)> },
}

/// Generator metadata carried alongside the instance.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Annotations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    /// Edge-count multiplier to use instead of the default schedule.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sparsity: Option<f64>,
    /// Known upper bound on the optimum dilation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_upper: Option<f64>,
    /// A `k`-edge augmentation achieving `t_upper`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_edges: Option<Vec<Edge>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_classes: Option<BTreeMap<String, Vec<Edge>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub metric: MetricSpec,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annotations: Option<Annotations>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub graph: MetricGraph,
    pub labels: Option<Vec<String>>,
    pub annotations: Option<Annotations>,
}

impl Instance {
    pub fn new(graph: MetricGraph) -> Self {
        Instance {
            graph,
            labels: None,
            annotations: None,
        }
    }

    pub fn from_file(file: InstanceFile) -> Result<Self> {
        let metric = match file.metric {
            MetricSpec::Matrix { matrix } => MetricSpace::from_matrix(matrix)?,
            MetricSpec::Euclidean { points } => MetricSpace::from_points(points)?,
            MetricSpec::HostGraph { edges } => MetricSpace::from_host_graph(file.n, edges)?,
        };
        if metric.n() != file.n {
            return Err(Error::Instance(format!(
                "\"n\" is {} but the metric has {} points",
                file.n,
                metric.n()
            )));
        }
        if let Some(labels) = &file.labels {
            if labels.len() != file.n {
                return Err(Error::Instance(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    file.n
                )));
            }
        }
        let graph = MetricGraph::new(Arc::new(metric), file.edges)?;
        Ok(Instance {
            graph,
            labels: file.labels,
            annotations: file.annotations,
        })
    }

    pub fn to_file(&self) -> InstanceFile {
        let metric = self.graph.metric();
        let spec = match metric.origin() {
            MetricOrigin::Matrix => MetricSpec::Matrix {
                matrix: metric.rows(),
            },
            MetricOrigin::Euclidean(points) => MetricSpec::Euclidean {
                points: points.clone(),
            },
            MetricOrigin::HostGraph(edges) => MetricSpec::HostGraph {
                edges: edges.clone(),
            },
        };
        InstanceFile {
            n: self.graph.n(),
            metric: spec,
            edges: self.graph.edges().iter().copied().collect(),
            labels: self.labels.clone(),
            annotations: self.annotations.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("instance serializes")
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    pub fn label(&self, v: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| v.to_string(), |l| l[v].clone())
    }
}
