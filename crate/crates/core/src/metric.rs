//! Metric spaces, metric graphs, shortest-path distances and dilation.
//!
//! Distances are `f64`. Disconnected pairs carry `f64::INFINITY`, which
//! propagates through `+` and `min` without special casing.

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance for every ratio and distance comparison.
pub const REL_TOL: f64 = 1e-9;

/// `a <= b` up to [`REL_TOL`] relative slack. Infinite `a` is only below infinite `b`.
pub fn approx_le(a: f64, b: f64) -> bool {
    if a.is_infinite() {
        return b.is_infinite();
    }
    a <= b + REL_TOL * b.abs()
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("self-loop")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Edge(a, b)),
            Ordering::Greater => Ok(Edge(b, a)),
            Ordering::Equal => Err(Error::InvalidGraph(format!("self-loop at vertex {a}"))),
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn has_endpoint(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: usize) -> usize {
        if self.0 == x {
            self.1
        } else {
            debug_assert_eq!(self.1, x);
            self.0
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        Edge::try_new(pair[0], pair[1])
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

/// How a [`MetricSpace`] was built. Kept so instances serialize back to their source form.
#[derive(Clone, Debug, PartialEq)]
pub enum MetricOrigin {
    Matrix,
    Euclidean(Vec<Vec<f64>>),
    HostGraph(Vec<(usize, usize, f64)>),
}

/// Whether to run the O(n³) triangle-inequality check on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    Full,
    SkipTriangle,
}

/// `n` points with a full symmetric distance matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricSpace {
    n: usize,
    dist: Vec<f64>,
    origin: MetricOrigin,
}

impl MetricSpace {
    pub fn from_matrix(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_matrix_with(rows, Validation::Full)
    }

    pub fn from_matrix_with(rows: Vec<Vec<f64>>, validation: Validation) -> Result<Self> {
        let n = rows.len();
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMetric(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            dist.extend_from_slice(row);
        }
        Self::build(n, dist, MetricOrigin::Matrix, validation)
    }

    /// Euclidean distances between coordinate tuples of equal dimension.
    pub fn from_points(points: Vec<Vec<f64>>) -> Result<Self> {
        let n = points.len();
        if let Some(dim) = points.first().map(Vec::len) {
            if let Some(i) = points.iter().position(|p| p.len() != dim) {
                return Err(Error::InvalidMetric(format!(
                    "point {i} has dimension {}, expected {dim}",
                    points[i].len()
                )));
            }
        }
        if points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidMetric("non-finite coordinate".into()));
        }
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = points[i]
                    .iter()
                    .zip(&points[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                if d == 0.0 {
                    return Err(Error::DuplicatePoint(i, j));
                }
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        Self::build(
            n,
            dist,
            MetricOrigin::Euclidean(points),
            Validation::SkipTriangle,
        )
    }

    /// Shortest-path closure of a connected, positively weighted host graph.
    pub fn from_host_graph(n: usize, host_edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v, w) in &host_edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "host edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("host self-loop at {u}")));
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::NonPositiveWeight { u, v, weight: w });
            }
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        let rows: Vec<Vec<f64>> = (0..n).into_par_iter().map(|s| dijkstra(&adj, s)).collect();
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|d| d.is_infinite()) {
                return Err(Error::DisconnectedHost(i, j));
            }
            dist.extend_from_slice(row);
        }
        // Dijkstra sums edges in path order from each side; force exact symmetry.
        for i in 0..n {
            for j in (i + 1)..n {
                let d = dist[i * n + j].min(dist[j * n + i]);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        Self::build(
            n,
            dist,
            MetricOrigin::HostGraph(host_edges),
            Validation::SkipTriangle,
        )
    }

    fn build(
        n: usize,
        dist: Vec<f64>,
        origin: MetricOrigin,
        validation: Validation,
    ) -> Result<Self> {
        for i in 0..n {
            if dist[i * n + i] != 0.0 {
                return Err(Error::InvalidMetric(format!("nonzero diagonal at {i}")));
            }
            for j in (i + 1)..n {
                let d = dist[i * n + j];
                if !d.is_finite() || d < 0.0 {
                    return Err(Error::InvalidMetric(format!("distance ({i}, {j}) = {d}")));
                }
                if d != dist[j * n + i] {
                    return Err(Error::InvalidMetric(format!("asymmetric at ({i}, {j})")));
                }
                if d == 0.0 {
                    return Err(Error::InvalidMetric(format!(
                        "distinct points {i} and {j} at distance zero"
                    )));
                }
            }
        }
        let space = MetricSpace { n, dist, origin };
        if validation == Validation::Full {
            space.check_triangle()?;
        }
        Ok(space)
    }

    pub fn check_triangle(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let dij = self.dist(i, j);
                for k in 0..n {
                    let dik = self.dist(i, k);
                    if !approx_le(dik, dij + self.dist(j, k)) {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    pub fn edge_len(&self, e: Edge) -> f64 {
        self.dist(e.u(), e.v())
    }

    pub fn origin(&self) -> &MetricOrigin {
        &self.origin
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.dist
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[f64]>::to_vec)
            .collect()
    }
}

/// A graph whose vertices are the points of a metric and whose edge weights are metric distances.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricGraph {
    metric: Arc<MetricSpace>,
    edges: BTreeSet<Edge>,
}

impl MetricGraph {
    pub fn new(metric: Arc<MetricSpace>, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let n = metric.n();
        let mut set = BTreeSet::new();
        for e in edges {
            if e.v() >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {e:?} out of range for {n} vertices"
                )));
            }
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e:?}")));
            }
        }
        Ok(MetricGraph { metric, edges: set })
    }

    pub fn empty(metric: Arc<MetricSpace>) -> Self {
        MetricGraph {
            metric,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(metric: Arc<MetricSpace>) -> Self {
        let n = metric.n();
        let edges = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| Edge(u, v)))
            .collect();
        MetricGraph { metric, edges }
    }

    /// `G ∪ extra`; edges already present are ignored.
    pub fn with_edges<'a>(&self, extra: impl IntoIterator<Item = &'a Edge>) -> Self {
        let mut edges = self.edges.clone();
        edges.extend(extra.into_iter().copied());
        MetricGraph {
            metric: Arc::clone(&self.metric),
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.metric.n()
    }

    pub fn metric(&self) -> &Arc<MetricSpace> {
        &self.metric
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn weight(&self, e: Edge) -> f64 {
        self.metric.edge_len(e)
    }

    /// All vertex pairs not in `E(G)`, lexicographically ordered.
    pub fn absent_edges(&self) -> Vec<Edge> {
        let n = self.n();
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| Edge(u, v)))
            .filter(|e| !self.edges.contains(e))
            .collect()
    }

    /// Absent edges ordered shortest first, ties broken lexicographically.
    pub fn candidates_by_length(&self) -> Vec<Edge> {
        let mut cands = self.absent_edges();
        cands.sort_by(|a, b| {
            self.weight(*a)
                .total_cmp(&self.weight(*b))
                .then_with(|| a.cmp(b))
        });
        cands
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.n()];
        for &e in &self.edges {
            let w = self.weight(e);
            adj[e.u()].push((e.v(), w));
            adj[e.v()].push((e.u(), w));
        }
        for list in &mut adj {
            list.sort_by_key(|&(v, _)| v);
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut count = n;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    /// Convenience: `dilation(self, apsp(self))`.
    pub fn dilation(&self) -> DilationReport {
        dilation(self, &apsp(self))
    }
}

/// Shortest-path distances of a [`MetricGraph`]; `INFINITY` for disconnected pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn edge(&self, e: Edge) -> f64 {
        self.get(e.u(), e.v())
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Relax every pair through a new edge `e` of weight `w`, in place.
    pub fn insert_edge(&mut self, e: Edge, w: f64) {
        let (u, v) = e.endpoints();
        if w >= self.get(u, v) {
            return;
        }
        let n = self.n;
        let du: Vec<f64> = self.row(u).to_vec();
        let dv: Vec<f64> = self.row(v).to_vec();
        for x in 0..n {
            let (xu, xv) = (du[x], dv[x]);
            if xu.is_infinite() && xv.is_infinite() {
                continue;
            }
            let row = &mut self.d[x * n..(x + 1) * n];
            for y in 0..n {
                let via = (xu + w + dv[y]).min(xv + w + du[y]);
                if via < row[y] {
                    row[y] = via;
                }
            }
        }
    }
}

/// All-pairs shortest paths by Dijkstra from every source.
pub fn apsp(g: &MetricGraph) -> DistanceMatrix {
    let n = g.n();
    let adj = g.adjacency();
    let rows: Vec<Vec<f64>> = (0..n).into_par_iter().map(|s| dijkstra(&adj, s)).collect();
    let mut d = Vec::with_capacity(n * n);
    for row in rows {
        d.extend(row);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let m = d[i * n + j].min(d[j * n + i]);
            d[i * n + j] = m;
            d[j * n + i] = m;
        }
    }
    DistanceMatrix { n, d }
}

/// Distances after adding edge `e` with weight `w` to the graph `d` was computed for.
pub fn incremental_update(d: &DistanceMatrix, e: Edge, w: f64) -> DistanceMatrix {
    let mut out = d.clone();
    out.insert_edge(e, w);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DilationReport {
    /// `INFINITY` when the graph is disconnected; `1.0` on fewer than two vertices.
    pub dilation: f64,
    pub witness: Option<Edge>,
}

impl DilationReport {
    pub fn is_finite(&self) -> bool {
        self.dilation.is_finite()
    }
}

/// Maximum of `d_G(u, v) / d_M(u, v)` over all pairs, with the first maximizing pair.
pub fn dilation(g: &MetricGraph, d: &DistanceMatrix) -> DilationReport {
    let metric = g.metric();
    let n = g.n();
    let mut best = DilationReport {
        dilation: 1.0,
        witness: None,
    };
    for u in 0..n {
        for v in (u + 1)..n {
            let ratio = d.get(u, v) / metric.dist(u, v);
            if best.witness.is_none() || ratio > best.dilation {
                best = DilationReport {
                    dilation: ratio,
                    witness: Some(Edge(u, v)),
                };
                if ratio.is_infinite() {
                    return best;
                }
            }
        }
    }
    best
}

#[derive(Clone, Copy, PartialEq)]
struct HeapEntry {
    dist: f64,
    vertex: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn dijkstra(adj: &[Vec<(usize, f64)>], source: usize) -> Vec<f64> {
    shortest_path_tree(adj, source).0
}

/// Dijkstra distances plus a predecessor array. Among tight predecessors the smallest
/// vertex index wins, so the tree does not depend on heap order.
pub(crate) fn shortest_path_tree(
    adj: &[Vec<(usize, f64)>],
    source: usize,
) -> (Vec<f64>, Vec<Option<usize>>) {
    let n = adj.len();
    let mut dist = vec![f64::INFINITY; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(HeapEntry {
        dist: 0.0,
        vertex: source,
    });
    while let Some(HeapEntry {
        dist: du,
        vertex: u,
    }) = heap.pop()
    {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, w) in &adj[u] {
            let nd = du + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(HeapEntry {
                    dist: nd,
                    vertex: v,
                });
            }
        }
    }
    let mut pred = vec![None; n];
    for v in 0..n {
        if v == source || dist[v].is_infinite() {
            continue;
        }
        pred[v] = adj[v]
            .iter()
            .filter(|&&(u, w)| dist[u] < dist[v] && approx_le(dist[u] + w, dist[v]))
            .map(|&(u, _)| u)
            .min();
    }
    (dist, pred)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_triangle() -> MetricSpace {
        MetricSpace::from_host_graph(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    #[test]
    fn host_graph_triangle_closure() {
        let m = unit_triangle();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.dist(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn host_graph_path_closure() {
        let m = MetricSpace::from_host_graph(3, vec![(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(m.dist(0, 2), 2.0);
        assert!(matches!(m.origin(), MetricOrigin::HostGraph(_)));
    }

    #[test]
    fn host_graph_errors() {
        assert!(matches!(
            MetricSpace::from_host_graph(3, vec![(0, 1, 1.0)]),
            Err(Error::DisconnectedHost(_, _))
        ));
        assert!(matches!(
            MetricSpace::from_host_graph(2, vec![(0, 1, 0.0)]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            MetricSpace::from_host_graph(2, vec![(0, 1, -2.0)]),
            Err(Error::NonPositiveWeight { .. })
        ));
    }

    #[test]
    fn points_metric() {
        let m = MetricSpace::from_points(vec![vec![0.0, 0.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(m.dist(0, 1), 5.0);
        let m =
            MetricSpace::from_points(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap();
        assert_eq!(m.dist(0, 2), 2.0);
        assert!(matches!(
            MetricSpace::from_points(vec![vec![1.0, 1.0], vec![0.0, 0.0], vec![1.0, 1.0]]),
            Err(Error::DuplicatePoint(0, 2))
        ));
    }

    #[test]
    fn matrix_validation() {
        let ok = vec![
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.0],
            vec![2.0, 1.0, 0.0],
        ];
        assert!(MetricSpace::from_matrix(ok).is_ok());
        let triangle = vec![
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ];
        assert!(MetricSpace::from_matrix(triangle.clone()).is_err());
        assert!(MetricSpace::from_matrix_with(triangle, Validation::SkipTriangle).is_ok());
        let zero = vec![vec![0.0, 0.0], vec![0.0, 0.0]];
        assert!(MetricSpace::from_matrix(zero).is_err());
        let asym = vec![vec![0.0, 1.0], vec![2.0, 0.0]];
        assert!(MetricSpace::from_matrix(asym).is_err());
        let ragged = vec![vec![0.0, 1.0], vec![1.0]];
        assert!(MetricSpace::from_matrix(ragged).is_err());
    }

    #[test]
    fn graph_rejects_duplicates_and_out_of_range() {
        let m = Arc::new(unit_triangle());
        assert!(MetricGraph::new(m.clone(), [Edge::new(0, 1), Edge::new(1, 0)]).is_err());
        assert!(MetricGraph::new(m.clone(), [Edge::new(0, 3)]).is_err());
        assert!(Edge::try_new(2, 2).is_err());
    }

    #[test]
    fn apsp_edgeless_and_complete() {
        let m = Arc::new(MetricSpace::from_points(vec![vec![0.0], vec![1.0], vec![3.0]]).unwrap());
        let d = apsp(&MetricGraph::empty(m.clone()));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j).is_infinite(), i != j);
            }
        }
        let d = apsp(&MetricGraph::complete(m.clone()));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j), m.dist(i, j));
            }
        }
    }

    #[test]
    fn insertion_implied_edge_is_noop() {
        let m = Arc::new(MetricSpace::from_points(vec![vec![0.0], vec![1.0], vec![2.0]]).unwrap());
        let g = MetricGraph::new(m.clone(), [Edge::new(0, 1), Edge::new(1, 2)]).unwrap();
        let d = apsp(&g);
        let e = Edge::new(0, 2);
        assert_eq!(incremental_update(&d, e, m.edge_len(e)), d);
    }

    #[test]
    fn insertion_joins_components() {
        let m = Arc::new(
            MetricSpace::from_points(vec![vec![0.0], vec![1.0], vec![5.0], vec![7.0]]).unwrap(),
        );
        let g = MetricGraph::new(m.clone(), [Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        let d = apsp(&g);
        assert!(d.get(0, 3).is_infinite());
        let e = Edge::new(1, 2);
        let d2 = incremental_update(&d, e, m.edge_len(e));
        for x in 0..2 {
            for y in 2..4 {
                assert!(d2.get(x, y).is_finite());
            }
        }
        assert_eq!(d2, apsp(&g.with_edges(&[e])));
    }

    #[test]
    fn dilation_cases() {
        let m = Arc::new(MetricSpace::from_points(vec![vec![0.0], vec![1.0], vec![2.0]]).unwrap());
        assert_eq!(MetricGraph::complete(m.clone()).dilation().dilation, 1.0);
        let r = MetricGraph::new(m.clone(), [Edge::new(0, 1)])
            .unwrap()
            .dilation();
        assert!(r.dilation.is_infinite());
        // path 0-2-1: d_G(0,1) = 2 + 1 = 3 over d_M = 1
        let r = MetricGraph::new(m.clone(), [Edge::new(0, 2), Edge::new(1, 2)])
            .unwrap()
            .dilation();
        assert_eq!(r.dilation, 3.0);
        assert_eq!(r.witness, Some(Edge::new(0, 1)));
    }

    #[test]
    fn approx_le_handles_infinity() {
        assert!(approx_le(1.0, 1.0));
        assert!(approx_le(1.0 + 1e-12, 1.0));
        assert!(!approx_le(1.0 + 1e-6, 1.0));
        assert!(approx_le(5.0, f64::INFINITY));
        assert!(!approx_le(f64::INFINITY, 5.0));
        assert!(approx_le(f64::INFINITY, f64::INFINITY));
    }

    #[test]
    fn candidates_sorted_by_length_then_index() {
        let m = Arc::new(
            MetricSpace::from_points(vec![vec![0.0], vec![1.0], vec![2.0], vec![4.0]]).unwrap(),
        );
        let g = MetricGraph::new(m, [Edge::new(0, 3)]).unwrap();
        let c = g.candidates_by_length();
        assert_eq!(
            c,
            vec![
                Edge::new(0, 1),
                Edge::new(1, 2),
                Edge::new(0, 2),
                Edge::new(2, 3),
                Edge::new(1, 3)
            ]
        );
    }
}
