//! Instance generators: the girth lower-bound family, the set-cover gadget, random instances.

pub mod cages;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{Annotations, Instance};
use crate::metric::{Edge, MetricGraph, MetricSpace};
use crate::oracle::{girth, UGraph};

/// Greedy sees far more cheap edges than it can afford, while `k` edges of a
/// spine give small dilation.
#[derive(Clone, Debug, PartialEq)]
pub struct GirthLowerBoundInstance {
    pub graph: MetricGraph,
    pub source: UGraph,
    pub r: u32,
    pub epsilon: f64,
    pub k: usize,
    /// `(m - 1) / (n - 1)`, so the edge budget is exactly `m - 1`.
    pub sparsity: f64,
    /// `(2 n ε + 2) / ε`, the dilation of `G` plus the spine.
    pub t_upper: f64,
    /// Star edges `u[i,0] u[i,j]`, length 1. These form `G`.
    pub star: Vec<Edge>,
    /// Spine `u[i,0] u[i+1,0]`, length `2ε`.
    pub spine: Vec<Edge>,
    /// One short edge `u[a,j] u[b,j]` per source edge `j = (a, b)`, length `ε`.
    pub rungs: Vec<Edge>,
    pub labels: Vec<String>,
}

impl GirthLowerBoundInstance {
    /// Vertex `u[i,j]`, `1 ≤ i ≤ n`, `0 ≤ j ≤ m`.
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        (i - 1) * (self.source.edge_count() + 1) + j
    }

    pub fn to_instance(&self) -> Instance {
        let classes = BTreeMap::from([
            ("M1".to_string(), self.star.clone()),
            ("M2".to_string(), self.spine.clone()),
            ("M3".to_string(), self.rungs.clone()),
        ]);
        Instance {
            graph: self.graph.clone(),
            labels: Some(self.labels.clone()),
            annotations: Some(Annotations {
                family: Some("girth-lb".into()),
                epsilon: Some(self.epsilon),
                k: Some(self.k),
                r: Some(self.r),
                sparsity: Some(self.sparsity),
                t_upper: Some(self.t_upper),
                reference_edges: Some(self.spine.clone()),
                edge_classes: Some(classes),
            }),
        }
    }
}

pub fn gen_girth_lowerbound(h: &UGraph, r: u32) -> Result<GirthLowerBoundInstance> {
    if r == 0 {
        return Err(Error::InvalidParam("r must be at least 1".into()));
    }
    if h.n < 2 {
        return Err(Error::Precondition(
            "source graph needs at least 2 vertices".into(),
        ));
    }
    if !h.is_simple() {
        return Err(Error::Precondition("source graph must be simple".into()));
    }
    if !h.is_connected() {
        return Err(Error::Precondition("source graph must be connected".into()));
    }
    let required = 2 * r as usize + 2;
    let hg = girth(h);
    if hg.is_some_and(|g| g < required) {
        return Err(Error::GirthTooSmall {
            girth: hg,
            required,
        });
    }

    let n = h.n;
    let m = h.edge_count();
    let epsilon = 1.0 / (4.0 * r as f64 * n as f64);
    let at = |i: usize, j: usize| (i - 1) * (m + 1) + j;
    let star: Vec<Edge> = (1..=n)
        .flat_map(|i| (1..=m).map(move |j| Edge::new(at(i, 0), at(i, j))))
        .collect();
    let spine: Vec<Edge> = (1..n).map(|i| Edge::new(at(i, 0), at(i + 1, 0))).collect();
    let rungs: Vec<Edge> = h
        .edges
        .iter()
        .enumerate()
        .map(|(idx, &(a, b))| Edge::new(at(a + 1, idx + 1), at(b + 1, idx + 1)))
        .collect();
    let host: Vec<(usize, usize, f64)> = star
        .iter()
        .map(|e| (e.u(), e.v(), 1.0))
        .chain(spine.iter().map(|e| (e.u(), e.v(), 2.0 * epsilon)))
        .chain(rungs.iter().map(|e| (e.u(), e.v(), epsilon)))
        .collect();
    let metric = Arc::new(MetricSpace::from_host_graph(n * (m + 1), host)?);
    let graph = MetricGraph::new(metric, star.iter().copied())?;
    let labels = (1..=n)
        .flat_map(|i| (0..=m).map(move |j| format!("u[{i},{j}]")))
        .collect();
    let sparsity = if n > 1 {
        (m as f64 - 1.0) / (n as f64 - 1.0)
    } else {
        0.0
    };
    Ok(GirthLowerBoundInstance {
        graph,
        source: h.clone(),
        r,
        epsilon,
        k: n - 1,
        sparsity: sparsity.max(0.0),
        t_upper: (2.0 * n as f64 * epsilon + 2.0) / epsilon,
        star,
        spine,
        rungs,
        labels,
    })
}

pub const DEFAULT_GADGET_EPSILON: f64 = 0.25;

/// Reduction from set cover: `k` sets cover the elements iff `k` edges give
/// dilation at most `4/ε + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SetCoverGadgetInstance {
    pub graph: MetricGraph,
    pub epsilon: f64,
    pub k: usize,
    pub element_count: usize,
    /// 0-based element indices per set.
    pub sets: Vec<Vec<usize>>,
    /// `u[i,j] u'[i,j]`, length 1.
    pub m1: Vec<Edge>,
    /// `v[l] v'[l]`, length 1. One per set; adding it "picks" the set.
    pub m2: Vec<Edge>,
    pub m3: Vec<Edge>,
    pub m4: Vec<Edge>,
    pub m5: Vec<Edge>,
    pub m6: Vec<Edge>,
    /// `w–w` edges of length `2/ε` joining otherwise disconnected pieces. Part of `G`.
    pub bridges: Vec<Edge>,
    pub labels: Vec<String>,
}

impl SetCoverGadgetInstance {
    fn block(&self) -> usize {
        2 * (self.k + 1)
    }

    /// `u[i,j]` for 1-based `i` and `j`.
    pub fn u(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.block() + 2 * (j - 1)
    }

    pub fn u_prime(&self, i: usize, j: usize) -> usize {
        self.u(i, j) + 1
    }

    fn set_base(&self, l: usize) -> usize {
        self.element_count * self.block() + 3 * (l - 1)
    }

    pub fn v(&self, l: usize) -> usize {
        self.set_base(l)
    }

    pub fn v_prime(&self, l: usize) -> usize {
        self.set_base(l) + 1
    }

    pub fn w(&self, l: usize) -> usize {
        self.set_base(l) + 2
    }

    /// The `v v'` edges for a choice of 0-based set indices.
    pub fn cover_edges(&self, chosen: &[usize]) -> Vec<Edge> {
        chosen.iter().map(|&l| self.m2[l]).collect()
    }

    /// `4/ε + 1`.
    pub fn yes_bound(&self) -> f64 {
        4.0 / self.epsilon + 1.0
    }

    pub fn to_instance(&self) -> Instance {
        let mut classes = BTreeMap::from([
            ("M1".to_string(), self.m1.clone()),
            ("M2".to_string(), self.m2.clone()),
            ("M3".to_string(), self.m3.clone()),
            ("M4".to_string(), self.m4.clone()),
            ("M5".to_string(), self.m5.clone()),
            ("M6".to_string(), self.m6.clone()),
        ]);
        if !self.bridges.is_empty() {
            classes.insert("bridges".into(), self.bridges.clone());
        }
        Instance {
            graph: self.graph.clone(),
            labels: Some(self.labels.clone()),
            annotations: Some(Annotations {
                family: Some("setcover-gadget".into()),
                epsilon: Some(self.epsilon),
                k: Some(self.k),
                edge_classes: Some(classes),
                ..Annotations::default()
            }),
        }
    }
}

pub fn gen_setcover_gadget(
    element_count: usize,
    sets: &[Vec<usize>],
    k: usize,
    epsilon: f64,
) -> Result<SetCoverGadgetInstance> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParam(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidParam("k must be positive".into()));
    }
    if element_count == 0 || sets.is_empty() {
        return Err(Error::InvalidParam(
            "need at least one element and one set".into(),
        ));
    }
    let mut sets: Vec<Vec<usize>> = sets.to_vec();
    for (l, s) in sets.iter_mut().enumerate() {
        if s.is_empty() {
            return Err(Error::EmptySet(l + 1));
        }
        if let Some(&e) = s.iter().find(|&&e| e >= element_count) {
            return Err(Error::InvalidParam(format!(
                "set {} names element {} but there are only {element_count}",
                l + 1,
                e + 1
            )));
        }
        s.sort_unstable();
        s.dedup();
    }
    if let Some(i) = (0..element_count).find(|i| !sets.iter().any(|s| s.contains(i))) {
        return Err(Error::UncoveredElement(i + 1));
    }

    let mut inst = SetCoverGadgetInstance {
        graph: MetricGraph::empty(Arc::new(MetricSpace::from_points(vec![vec![0.0]])?)),
        epsilon,
        k,
        element_count,
        sets,
        m1: Vec::new(),
        m2: Vec::new(),
        m3: Vec::new(),
        m4: Vec::new(),
        m5: Vec::new(),
        m6: Vec::new(),
        bridges: Vec::new(),
        labels: Vec::new(),
    };
    let big = 2.0 / epsilon;
    let sets_n = inst.sets.len();
    for i in 1..=element_count {
        for j in 1..=k + 1 {
            inst.m1.push(Edge::new(inst.u(i, j), inst.u_prime(i, j)));
            inst.labels.push(format!("u[{i},{j}]"));
            inst.labels.push(format!("u'[{i},{j}]"));
        }
    }
    for l in 1..=sets_n {
        inst.m2.push(Edge::new(inst.v(l), inst.v_prime(l)));
        inst.m5.push(Edge::new(inst.v(l), inst.w(l)));
        inst.m6.push(Edge::new(inst.v_prime(l), inst.w(l)));
        inst.labels
            .extend([format!("v[{l}]"), format!("v'[{l}]"), format!("w[{l}]")]);
        for &e in &inst.sets[l - 1].clone() {
            for j in 1..=k + 1 {
                inst.m3.push(Edge::new(inst.u(e + 1, j), inst.v(l)));
                inst.m4
                    .push(Edge::new(inst.u_prime(e + 1, j), inst.v_prime(l)));
            }
        }
    }

    // sets sharing no element leave the gadget in pieces; chain the pieces through w
    let mut piece: Vec<usize> = (0..sets_n).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = root(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in 0..element_count {
        let owners: Vec<usize> = (0..sets_n).filter(|&l| inst.sets[l].contains(&e)).collect();
        for w in owners.windows(2) {
            let (a, b) = (root(&mut piece, w[0]), root(&mut piece, w[1]));
            piece[a.max(b)] = a.min(b);
        }
    }
    let leaders: Vec<usize> = (0..sets_n).filter(|&l| root(&mut piece, l) == l).collect();
    for w in leaders.windows(2) {
        inst.bridges
            .push(Edge::new(inst.w(w[0] + 1), inst.w(w[1] + 1)));
    }

    let n = element_count * inst.block() + 3 * sets_n;
    let g_edges: Vec<Edge> = [&inst.m3, &inst.m4, &inst.m5, &inst.m6, &inst.bridges]
        .into_iter()
        .flatten()
        .copied()
        .collect();
    let host: Vec<(usize, usize, f64)> = inst
        .m1
        .iter()
        .chain(&inst.m2)
        .map(|e| (e.u(), e.v(), 1.0))
        .chain(g_edges.iter().map(|e| (e.u(), e.v(), big)))
        .collect();
    let metric = Arc::new(MetricSpace::from_host_graph(n, host)?);
    inst.graph = MetricGraph::new(metric, g_edges)?;
    Ok(inst)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RandomMetric {
    /// Uniform points in the unit square.
    Euclidean,
    /// Closure of a random connected host graph with weights in `[1, 10]`.
    HostGraph,
}

/// Extra host edges beyond the spanning tree, as a fraction of all pairs.
const HOST_EXTRA_DENSITY: f64 = 0.3;

/// Each pair becomes a graph edge independently with probability `edge_density`.
pub fn gen_random(
    n: usize,
    edge_density: f64,
    kind: RandomMetric,
    seed: u64,
) -> Result<MetricGraph> {
    if n < 2 {
        return Err(Error::InvalidParam(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&edge_density) {
        return Err(Error::InvalidParam(format!(
            "density must lie in [0, 1], got {edge_density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let metric = match kind {
        RandomMetric::Euclidean => loop {
            let points: Vec<Vec<f64>> = (0..n).map(|_| vec![rng.gen(), rng.gen()]).collect();
            match MetricSpace::from_points(points) {
                Err(Error::DuplicatePoint(..)) => continue,
                other => break other?,
            }
        },
        RandomMetric::HostGraph => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut host = Vec::new();
            let mut tree = std::collections::HashSet::new();
            for idx in 1..n {
                let parent = order[rng.gen_range(0..idx)];
                let e = Edge::new(order[idx], parent);
                tree.insert(e);
                host.push((e.u(), e.v(), rng.gen_range(1.0..=10.0)));
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    if !tree.contains(&Edge::new(u, v)) && rng.gen_bool(HOST_EXTRA_DENSITY) {
                        host.push((u, v, rng.gen_range(1.0..=10.0)));
                    }
                }
            }
            MetricSpace::from_host_graph(n, host)?
        }
    };
    let edges: Vec<Edge> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| Edge::new(u, v)))
        .filter(|_| rng.gen_bool(edge_density))
        .collect();
    MetricGraph::new(Arc::new(metric), edges)
}
