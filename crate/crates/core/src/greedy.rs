//! Greedy t-spanner augmentation and the bicriteria search built on it.
//!
//! The greedy process adds, shortest first, every absent edge whose current graph
//! distance exceeds `t` times its metric length. Adding edges only shrinks distances,
//! so an edge rejected once stays rejected and a single pass over the sorted
//! candidates produces the full greedy sequence.

use log::debug;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::{approx_le, apsp, DistanceMatrix, Edge, MetricGraph, REL_TOL};

/// Largest dilation the search will try before giving up.
pub const DEFAULT_T_LIMIT: f64 = (1u64 << 60) as f64;

pub const DEFAULT_DELTA: f64 = 0.1;

/// Sparsity and dilation factors for a budget `k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BicriteriaParams {
    pub r: f64,
    pub k: usize,
    pub delta: f64,
    /// Sparsity factor; `2 · 2^(1/r) · k^(1/r)` unless overridden.
    pub f: f64,
    /// Dilation factor `2r`.
    pub g: f64,
    /// `floor(f · k)`.
    pub edge_cap: usize,
}

impl BicriteriaParams {
    pub fn new(r: f64, k: usize, delta: f64) -> Result<Self> {
        if !r.is_finite() || r < 1.0 {
            return Err(Error::InvalidParam(format!(
                "r must be at least 1, got {r}"
            )));
        }
        if k == 0 {
            return Err(Error::InvalidParam("k must be positive".into()));
        }
        if !delta.is_finite() || delta <= 0.0 {
            return Err(Error::InvalidParam(format!(
                "delta must be positive, got {delta}"
            )));
        }
        let kf = k as f64;
        let f = 2.0 * 2f64.powf(1.0 / r) * kf.powf(1.0 / r);
        Ok(BicriteriaParams {
            r,
            k,
            delta,
            f,
            g: 2.0 * r,
            edge_cap: floor_cap(f, k),
        })
    }

    /// The `r = log2(2k)` preset, where `f = 4`.
    pub fn log_preset(k: usize, delta: f64) -> Result<Self> {
        Self::new(((2 * k.max(1)) as f64).log2().max(1.0), k, delta)
    }

    /// Replace the sparsity factor, keeping `r`, `g` and `delta`.
    pub fn with_sparsity(mut self, f: f64) -> Result<Self> {
        if !f.is_finite() || f < 0.0 {
            return Err(Error::InvalidParam(format!(
                "sparsity must be nonnegative, got {f}"
            )));
        }
        self.f = f;
        self.edge_cap = floor_cap(f, self.k);
        Ok(self)
    }

    /// `(1 + δ) g`, the dilation factor the search guarantees.
    pub fn grid_g(&self) -> f64 {
        (1.0 + self.delta) * self.g
    }
}

// f·k is often an integer computed through pow(); nudge before flooring.
fn floor_cap(f: f64, k: usize) -> usize {
    let fk = f * k as f64;
    (fk + REL_TOL * fk.max(1.0)).floor() as usize
}

pub fn make_params(r: f64, k: usize, delta: f64) -> Result<BicriteriaParams> {
    BicriteriaParams::new(r, k, delta)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AddedEdge {
    pub edge: Edge,
    /// `d_M` of the edge.
    pub length: f64,
    /// Graph distance between the endpoints just before insertion.
    pub graph_dist: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Halt {
    /// No violating edge remains.
    Complete,
    /// Stopped after `cap + 1` insertions.
    Capped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GreedyTrace {
    pub t: f64,
    pub added: Vec<AddedEdge>,
    pub halted: Halt,
}

impl GreedyTrace {
    pub fn edges(&self) -> Vec<Edge> {
        self.added.iter().map(|a| a.edge).collect()
    }

    pub fn len(&self) -> usize {
        self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.added.is_empty()
    }
}

/// Precomputed state for running the greedy process at many values of `t`.
pub struct GreedySpanner<'a> {
    graph: &'a MetricGraph,
    base: DistanceMatrix,
    candidates: Vec<Edge>,
}

impl<'a> GreedySpanner<'a> {
    pub fn new(graph: &'a MetricGraph) -> Self {
        GreedySpanner {
            graph,
            base: apsp(graph),
            candidates: graph.candidates_by_length(),
        }
    }

    pub fn graph(&self) -> &MetricGraph {
        self.graph
    }

    pub fn base_distances(&self) -> &DistanceMatrix {
        &self.base
    }

    /// Run the greedy process at level `t`, stopping after `cap + 1` insertions if a cap is given.
    pub fn run(&self, t: f64, cap: Option<usize>) -> GreedyTrace {
        let mut d = self.base.clone();
        let mut added = Vec::new();
        for &e in &self.candidates {
            let length = self.graph.weight(e);
            let graph_dist = d.edge(e);
            if approx_le(graph_dist, t * length) {
                continue;
            }
            d.insert_edge(e, length);
            added.push(AddedEdge {
                edge: e,
                length,
                graph_dist,
            });
            if cap.is_some_and(|c| added.len() > c) {
                return GreedyTrace {
                    t,
                    added,
                    halted: Halt::Capped,
                };
            }
        }
        GreedyTrace {
            t,
            added,
            halted: Halt::Complete,
        }
    }

    pub fn decide(&self, t: f64, params: &BicriteriaParams) -> Decision {
        let trace = self.run(t, Some(params.edge_cap));
        if trace.len() > params.edge_cap {
            Decision::ExceedsCap
        } else {
            Decision::AtMostCap
        }
    }
}

pub fn greedy_t_spanner(g: &MetricGraph, t: f64, cap: Option<usize>) -> GreedyTrace {
    GreedySpanner::new(g).run(t, cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    AtMostCap,
    ExceedsCap,
}

pub fn decide(g: &MetricGraph, t: f64, params: &BicriteriaParams) -> Decision {
    GreedySpanner::new(g).decide(t, params)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Probe {
    pub t: f64,
    /// Insertions made, counting the one that tripped the cap.
    pub edges_added: usize,
    pub exceeds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AugmentationResult {
    pub added: Vec<Edge>,
    /// Recomputed dilation of `G ∪ added`.
    pub t_achieved: f64,
    /// Grid level whose greedy spanner produced `added`.
    pub t_level: f64,
    /// The level just below `t_level` where the cap was exceeded, if any.
    pub t_bracket: Option<f64>,
    pub params: BicriteriaParams,
    pub probes: Vec<Probe>,
}

/// Geometric grid `t_i = (1 + δ)^i` over `i ≥ 0`, probed and logged.
pub(crate) struct Grid {
    base: f64,
    limit: f64,
}

impl Grid {
    pub(crate) fn new(delta: f64, limit: f64) -> Self {
        Grid {
            base: 1.0 + delta,
            limit,
        }
    }

    pub(crate) fn level(&self, i: u64) -> f64 {
        self.base.powi(i as i32)
    }

    /// Find `(lo, hi)` with `accept(hi)` and `hi == lo + 1`, `!accept(lo)`, or `(None, 0)`
    /// when `accept(level 0)` already holds. Doubles the index to bracket, then bisects.
    pub(crate) fn bracket(
        &self,
        mut accept: impl FnMut(f64) -> bool,
    ) -> Result<(Option<u64>, u64)> {
        if accept(self.level(0)) {
            return Ok((None, 0));
        }
        let mut lo = 0u64;
        let mut hi = 1u64;
        loop {
            let t = self.level(hi);
            if t > self.limit || !t.is_finite() {
                return Err(Error::NoFeasibleT { limit: self.limit });
            }
            if accept(t) {
                break;
            }
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if accept(self.level(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok((Some(lo), hi))
    }
}

/// Search the `(1 + δ)` grid for `t` with the greedy `t`-spanner over the cap and the
/// greedy `(1 + δ)t`-spanner within it, and return the latter's edges.
pub fn search(g: &MetricGraph, params: &BicriteriaParams) -> Result<AugmentationResult> {
    search_with_limit(g, params, DEFAULT_T_LIMIT)
}

pub fn search_with_limit(
    g: &MetricGraph,
    params: &BicriteriaParams,
    limit: f64,
) -> Result<AugmentationResult> {
    let spanner = GreedySpanner::new(g);
    let grid = Grid::new(params.delta, limit);
    let mut probes = Vec::new();
    let (lo, hi) = grid.bracket(|t| {
        let trace = spanner.run(t, Some(params.edge_cap));
        let exceeds = trace.len() > params.edge_cap;
        debug!(
            "greedy probe t = {t}: {} edges, exceeds = {exceeds}",
            trace.len()
        );
        probes.push(Probe {
            t,
            edges_added: trace.len(),
            exceeds,
        });
        !exceeds
    })?;
    let t_level = grid.level(hi);
    let trace = spanner.run(t_level, Some(params.edge_cap));
    debug_assert_eq!(trace.halted, Halt::Complete);
    let added = trace.edges();
    let t_achieved = g.with_edges(&added).dilation().dilation;
    Ok(AugmentationResult {
        added,
        t_achieved,
        t_level,
        t_bracket: lo.map(|i| grid.level(i)),
        params: *params,
        probes,
    })
}
