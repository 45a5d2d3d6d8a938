//! The girth graph of a greedy run against an optimal augmentation, and a mechanical
//! check of the bound `t ≤ |I| · t*` it yields.
//!
//! Each greedy edge `a_i` is routed along a fixed shortest path in `G* = G ∪ S*`. When
//! that path uses optimal edges, the first and last optimal-edge endpoints along it
//! become an edge of the girth graph `H`. A shortest cycle of `H` stitches the routed
//! paths into a walk between the endpoints of its latest greedy edge; the walk lives in
//! the graph the greedy process saw just before that edge, which pins `t` against `t*`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::greedy::{AddedEdge, GreedyTrace};
use crate::metric::{approx_le, apsp, shortest_path_tree, Edge, MetricGraph};
use crate::oracle::brute::OptimalSolution;
use crate::oracle::girth::{shortest_cycle, UGraph};

/// A greedy edge and its route through `G*`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoutedEdge {
    /// 1-based position in the greedy order.
    pub index: usize,
    pub edge: Edge,
    pub length: f64,
    /// `d_{G_{i-1}}` at insertion time.
    pub graph_dist: f64,
    /// Shortest path in `G*` from `edge.u()` to `edge.v()`.
    pub path: Vec<usize>,
    pub path_length: f64,
    /// Positions `p` with `(path[p], path[p + 1])` in `S*`.
    pub opt_steps: Vec<usize>,
    /// Total metric length of the optimal edges on the path.
    pub opt_length: f64,
}

impl RoutedEdge {
    /// Path positions of the first and last optimal-edge endpoints.
    pub fn span(&self) -> Option<(usize, usize)> {
        Some((*self.opt_steps.first()?, *self.opt_steps.last()? + 1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GirthEdge {
    pub greedy_index: usize,
    /// Labels of the first and last optimal-edge endpoints along the route.
    pub first: usize,
    pub last: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GirthGraph {
    /// Graph vertex for each label; labels `2i` and `2i + 1` are the endpoints of `S*[i]`.
    pub endpoints: Vec<usize>,
    pub routes: Vec<RoutedEdge>,
    pub edges: Vec<GirthEdge>,
    /// Greedy indices whose route avoids `S*`.
    pub missing: Vec<usize>,
    /// Positions in `edges` forming a shortest cycle, in traversal order.
    pub girth_cycle: Option<Vec<usize>>,
}

impl GirthGraph {
    pub fn vertex_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn ugraph(&self) -> UGraph {
        UGraph {
            n: self.endpoints.len(),
            edges: self.edges.iter().map(|e| (e.first, e.last)).collect(),
        }
    }

    pub fn girth(&self) -> Option<usize> {
        self.girth_cycle.as_ref().map(Vec::len)
    }

    /// Smallest label sitting on graph vertex `x`. Optimal edges that share an endpoint
    /// leave the duplicate labels isolated.
    pub fn label_of(&self, x: usize) -> Option<usize> {
        self.endpoints.iter().position(|&v| v == x)
    }

    fn route(&self, greedy_index: usize) -> &RoutedEdge {
        &self.routes[greedy_index - 1]
    }
}

pub fn build_girth_graph(
    g: &MetricGraph,
    opt: &OptimalSolution,
    trace: &GreedyTrace,
) -> GirthGraph {
    build_from_added(g, opt, &trace.added)
}

fn build_from_added(g: &MetricGraph, opt: &OptimalSolution, added: &[AddedEdge]) -> GirthGraph {
    let adj = opt.g_star.adjacency();
    let opt_set: HashSet<Edge> = opt.s_star.iter().copied().collect();
    let endpoints: Vec<usize> = opt.s_star.iter().flat_map(|s| [s.u(), s.v()]).collect();
    let label = |x: usize| {
        endpoints
            .iter()
            .position(|&v| v == x)
            .expect("optimal endpoint")
    };

    let mut trees: HashMap<usize, Vec<Option<usize>>> = HashMap::new();
    let mut routes = Vec::with_capacity(added.len());
    let mut edges = Vec::new();
    let mut missing = Vec::new();
    for (pos, a) in added.iter().enumerate() {
        let index = pos + 1;
        let (src, dst) = a.edge.endpoints();
        let pred = trees
            .entry(src)
            .or_insert_with(|| shortest_path_tree(&adj, src).1);
        let mut path = vec![dst];
        let mut x = dst;
        while let Some(p) = pred[x] {
            path.push(p);
            x = p;
        }
        debug_assert_eq!(x, src, "G* is connected whenever t* is finite");
        path.reverse();
        let mut path_length = 0.0;
        let mut opt_steps = Vec::new();
        let mut opt_length = 0.0;
        for (p, w) in path.windows(2).enumerate() {
            let e = Edge::new(w[0], w[1]);
            let len = g.weight(e);
            path_length += len;
            if opt_set.contains(&e) {
                opt_steps.push(p);
                opt_length += len;
            }
        }
        let routed = RoutedEdge {
            index,
            edge: a.edge,
            length: a.length,
            graph_dist: a.graph_dist,
            path,
            path_length,
            opt_steps,
            opt_length,
        };
        match routed.span() {
            Some((first, last)) => edges.push(GirthEdge {
                greedy_index: index,
                first: label(routed.path[first]),
                last: label(routed.path[last]),
            }),
            None => missing.push(index),
        }
        routes.push(routed);
    }
    let h = UGraph {
        n: endpoints.len(),
        edges: edges.iter().map(|e| (e.first, e.last)).collect(),
    };
    GirthGraph {
        girth_cycle: shortest_cycle(&h),
        endpoints,
        routes,
        edges,
        missing,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum CaseCheck {
    /// Some cycle route carries little optimal length; the greedy order forces `t < |I| t*`.
    ShortOptimal {
        greedy_index: usize,
        opt_length: f64,
        /// `d_{G*}(a_j) - total(S* ∩ route) + t · total(S* ∩ route)`, an upper bound on `d_{G_{j-1}}(a_j)`.
        detour_bound: f64,
    },
    /// Every cycle route carries at least `(1 - 1/|I|) d_M(a_j)` optimal length.
    LongOptimal {
        /// Sum of non-optimal route lengths plus the other greedy edges.
        walk_bound: f64,
        /// `|I| · t* · d_M(a_i)`.
        cycle_bound: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleCheck {
    /// Greedy indices on the shortest cycle of `H`.
    pub cycle: Vec<usize>,
    pub i_max: usize,
    /// Vertices of the stitched walk between the endpoints of `a_i`.
    pub walk: Vec<usize>,
    pub walk_length: f64,
    /// `t · d_M(a_i)`.
    pub walk_floor: f64,
    pub case: CaseCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaOutcome {
    /// Fewer than `edge_cap + 1` greedy edges.
    NotApplicable,
    /// `H` is a forest; possible only when the cap is below `2k`.
    NoCycle,
    Verified,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub outcome: LemmaOutcome,
    pub t: f64,
    pub t_star: f64,
    pub edge_cap: usize,
    pub greedy_edges: usize,
    pub girth_edges: usize,
    pub girth: Option<usize>,
    /// Greedy indices whose route avoids `S*`; each one certifies `t < t*`.
    pub missing: Vec<usize>,
    pub cycle: Option<CycleCheck>,
}

fn fail(msg: String) -> Error {
    Error::VerificationFailure(msg)
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// Check the girth-graph argument on the first `edge_cap + 1` edges of `trace`.
///
/// Every inequality is evaluated numerically; a failure means a bug in the greedy
/// process, the oracle, or this check, and is returned as `VerificationFailure`.
pub fn verify_main_lemma(
    g: &MetricGraph,
    opt: &OptimalSolution,
    trace: &GreedyTrace,
    edge_cap: usize,
) -> Result<(GirthGraph, LemmaReport)> {
    let t = trace.t;
    let t_star = opt.t_star;
    let mut report = LemmaReport {
        outcome: LemmaOutcome::NotApplicable,
        t,
        t_star,
        edge_cap,
        greedy_edges: trace.len(),
        girth_edges: 0,
        girth: None,
        missing: Vec::new(),
        cycle: None,
    };
    let used = edge_cap + 1;
    if trace.len() < used {
        let h = build_from_added(g, opt, &[]);
        return Ok((h, report));
    }
    let h = build_from_added(g, opt, &trace.added[..used]);
    report.girth_edges = h.edges.len();
    report.girth = h.girth();
    report.missing = h.missing.clone();

    for route in &h.routes {
        require(approx_le(route.path_length, t_star * route.length), || {
            format!("route of a_{} longer than t* d_M", route.index)
        })?;
        require(route.graph_dist > t * route.length, || {
            format!("a_{} was not violating at insertion", route.index)
        })?;
    }

    // routes avoiding S* are paths of G, so t d_M(a) < d_{G_{i-1}}(a) <= d_G(a) <= t* d_M(a)
    for &i in &h.missing {
        let route = h.route(i);
        require(approx_le(route.graph_dist, route.path_length), || {
            format!("a_{i}: G-route shorter than the greedy distance")
        })?;
        require(approx_le(t, t_star), || {
            format!("a_{i} avoids S* but t > t*")
        })?;
    }

    let Some(cycle_pos) = h.girth_cycle.clone() else {
        report.outcome = LemmaOutcome::NoCycle;
        return Ok((h, report));
    };

    let cycle_idx: Vec<usize> = cycle_pos.iter().map(|&p| h.edges[p].greedy_index).collect();
    let size = cycle_idx.len() as f64;
    let i_max = *cycle_idx.iter().max().expect("nonempty cycle");
    let start = cycle_pos
        .iter()
        .position(|&p| h.edges[p].greedy_index == i_max)
        .expect("i_max on cycle");
    let e_i = h.edges[cycle_pos[start]];
    let a_i = h.route(i_max);

    // J minus e_i, ordered to leave e_i's first endpoint
    let rest: Vec<usize> = (1..cycle_pos.len())
        .map(|s| cycle_pos[(start + s) % cycle_pos.len()])
        .collect();
    let touches = |p: usize, label: usize| h.edges[p].first == label || h.edges[p].last == label;
    let ordered: Vec<usize> = if touches(rest[0], e_i.first) {
        rest
    } else {
        rest.into_iter().rev().collect()
    };

    let (first, last) = a_i.span().expect("cycle edge has optimal steps");
    let mut walk: Vec<usize> = a_i.path[..=first].to_vec();
    let mut at = e_i.first;
    for &p in &ordered {
        let e_j = h.edges[p];
        let route = h.route(e_j.greedy_index);
        let (f, l) = route.span().expect("cycle edge has optimal steps");
        let end = route.path.len() - 1;
        if at == e_j.first {
            walk.extend(route.path[..=f].iter().rev());
            walk.extend(route.path[l..=end].iter().rev());
            at = e_j.last;
        } else {
            require(at == e_j.last, || {
                format!("cycle broken at e_{}", e_j.greedy_index)
            })?;
            walk.extend(&route.path[l..=end]);
            walk.extend(&route.path[..=f]);
            at = e_j.first;
        }
    }
    require(at == e_i.last, || {
        "cycle walk does not return to e_i".into()
    })?;
    walk.extend(&a_i.path[last..]);
    walk.dedup();

    let allowed: HashSet<Edge> = cycle_idx
        .iter()
        .filter(|&&j| j != i_max)
        .map(|&j| h.route(j).edge)
        .collect();
    let mut walk_length = 0.0;
    for w in walk.windows(2) {
        let e = Edge::new(w[0], w[1]);
        require(g.contains(e) || allowed.contains(&e), || {
            format!("walk step {e:?} is neither in G nor a cycle greedy edge")
        })?;
        walk_length += g.weight(e);
    }
    require(
        walk.first() == Some(&a_i.edge.u()) && walk.last() == Some(&a_i.edge.v()),
        || "walk does not join the endpoints of a_i".into(),
    )?;
    let walk_floor = t * a_i.length;
    require(approx_le(a_i.graph_dist, walk_length), || {
        format!(
            "walk of length {walk_length} beats d_G_(i-1)(a_i) = {}",
            a_i.graph_dist
        )
    })?;
    require(approx_le(walk_floor, walk_length), || {
        format!("walk length {walk_length} below t d_M(a_i) = {walk_floor}")
    })?;

    let short = cycle_idx
        .iter()
        .copied()
        .find(|&j| h.route(j).opt_length < (1.0 - 1.0 / size) * h.route(j).length);
    let case = match short {
        Some(j) => {
            let route = h.route(j);
            // every optimal edge on the route is shorter than a_j, so G_{j-1} already spans it within t
            let prefix = GreedyTrace {
                t,
                added: trace.added[..j - 1].to_vec(),
                halted: trace.halted,
            };
            let d_prev = apsp(&g.with_edges(&prefix.edges()));
            for &p in &route.opt_steps {
                let s = Edge::new(route.path[p], route.path[p + 1]);
                require(g.weight(s) < route.length, || {
                    format!("optimal edge {s:?} on route of a_{j} is not shorter than it")
                })?;
                require(approx_le(d_prev.edge(s), t * g.weight(s)), || {
                    format!("optimal edge {s:?} violates t in G_(j-1) though shorter than a_{j}")
                })?;
            }
            let detour_bound = route.path_length - route.opt_length + t * route.opt_length;
            require(approx_le(route.graph_dist, detour_bound), || {
                format!(
                    "a_{j}: d_G_(j-1) = {} exceeds detour bound {detour_bound}",
                    route.graph_dist
                )
            })?;
            CaseCheck::ShortOptimal {
                greedy_index: j,
                opt_length: route.opt_length,
                detour_bound,
            }
        }
        None => {
            let walk_bound: f64 = cycle_idx
                .iter()
                .map(|&j| h.route(j).path_length - h.route(j).opt_length)
                .sum::<f64>()
                + cycle_idx
                    .iter()
                    .filter(|&&j| j != i_max)
                    .map(|&j| h.route(j).length)
                    .sum::<f64>();
            let cycle_bound = size * t_star * a_i.length;
            require(approx_le(walk_length, walk_bound), || {
                format!("walk length {walk_length} exceeds route bound {walk_bound}")
            })?;
            require(approx_le(walk_bound, cycle_bound), || {
                format!("route bound {walk_bound} exceeds |I| t* d_M(a_i) = {cycle_bound}")
            })?;
            CaseCheck::LongOptimal {
                walk_bound,
                cycle_bound,
            }
        }
    };
    require(approx_le(t, size * t_star), || {
        format!("t = {t} exceeds |I| t* = {}", size * t_star)
    })?;

    report.outcome = LemmaOutcome::Verified;
    report.cycle = Some(CycleCheck {
        cycle: cycle_idx,
        i_max,
        walk,
        walk_length,
        walk_floor,
        case,
    });
    Ok((h, report))
}
