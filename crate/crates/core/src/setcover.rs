//! The `(f, 1)` augmentation via set cover.
//!
//! For a level `t`, every absent edge `e` defines the set of vertex pairs whose
//! dilation is at most `t` once `e` alone is added. Greedy set cover over those sets
//! picks the edges; a grid search over `t` keeps the smallest level whose cover fits
//! the size threshold.

use fixedbitset::FixedBitSet;
use log::debug;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::greedy::{Grid, Probe, DEFAULT_T_LIMIT};
use crate::metric::{approx_le, apsp, DistanceMatrix, Edge, MetricGraph};

#[derive(Clone, Debug)]
pub struct SetCoverInstance {
    pub t: f64,
    /// Universe elements, `(u, v)` with `u < v`, in lexicographic order.
    pub pairs: Vec<Edge>,
    /// Pairs already within dilation `t` before any addition.
    pub baseline: FixedBitSet,
    /// One set per absent edge, in lexicographic edge order. Each contains `baseline`.
    pub sets: Vec<(Edge, FixedBitSet)>,
}

impl SetCoverInstance {
    pub fn universe_len(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        u * n - u * (u + 1) / 2 + (v - u - 1)
    }
}

fn covered_pairs(g: &MetricGraph, d: &DistanceMatrix, t: f64) -> FixedBitSet {
    let n = g.n();
    let metric = g.metric();
    let mut bits = FixedBitSet::with_capacity(n * n.saturating_sub(1) / 2);
    let mut idx = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if approx_le(d.get(u, v), t * metric.dist(u, v)) {
                bits.insert(idx);
            }
            idx += 1;
        }
    }
    bits
}

pub fn build_instance(g: &MetricGraph, t: f64) -> SetCoverInstance {
    build_instance_from(g, &apsp(g), t)
}

pub fn build_instance_from(g: &MetricGraph, base: &DistanceMatrix, t: f64) -> SetCoverInstance {
    let n = g.n();
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| Edge::new(u, v)))
        .collect();
    let baseline = covered_pairs(g, base, t);
    let sets = g
        .absent_edges()
        .into_par_iter()
        .map(|e| {
            let mut d = base.clone();
            d.insert_edge(e, g.weight(e));
            (e, covered_pairs(g, &d, t))
        })
        .collect();
    SetCoverInstance {
        t,
        pairs,
        baseline,
        sets,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverResult {
    pub chosen: Vec<Edge>,
    pub covered_all: bool,
    /// Acceptance bound `T(k, n)`, filled in by the search.
    pub threshold: Option<f64>,
}

/// Chvátal's greedy cover starting from `initial`: repeatedly take the set adding the most
/// uncovered elements, lowest index on ties, until everything is covered or nothing helps.
/// Returns the chosen set indices and whether the universe was covered.
pub fn greedy_cover(
    universe_len: usize,
    initial: &FixedBitSet,
    sets: &[FixedBitSet],
) -> (Vec<usize>, bool) {
    let mut covered = initial.clone();
    covered.grow(universe_len);
    let mut chosen = Vec::new();
    let mut used = vec![false; sets.len()];
    loop {
        let remaining = universe_len - covered.count_ones(..);
        if remaining == 0 {
            return (chosen, true);
        }
        let mut best: Option<(usize, usize)> = None;
        for (i, s) in sets.iter().enumerate() {
            if used[i] {
                continue;
            }
            let gain = s.difference(&covered).count();
            if gain > 0 && best.is_none_or(|(_, g)| gain > g) {
                best = Some((i, gain));
            }
        }
        match best {
            Some((i, _)) => {
                used[i] = true;
                covered.union_with(&sets[i]);
                chosen.push(i);
            }
            None => return (chosen, false),
        }
    }
}

pub fn greedy_set_cover(inst: &SetCoverInstance) -> CoverResult {
    let sets: Vec<FixedBitSet> = inst.sets.iter().map(|(_, s)| s.clone()).collect();
    let (chosen, covered_all) = greedy_cover(inst.universe_len(), &inst.baseline, &sets);
    CoverResult {
        chosen: chosen.into_iter().map(|i| inst.sets[i].0).collect(),
        covered_all,
        threshold: None,
    }
}

/// `T(k, n) = 2k² (2 ln n + 1)`: at most `2k²` clique edges cover everything once `t ≥ t*`,
/// and greedy cover is within `ln |U| + 1 < 2 ln n + 1` of optimal.
pub fn cover_threshold(k: usize, n: usize) -> f64 {
    let k = k as f64;
    2.0 * k * k * (2.0 * (n.max(1) as f64).ln() + 1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SetCoverSearchResult {
    pub added: Vec<Edge>,
    pub t_achieved: f64,
    pub t_level: f64,
    pub t_bracket: Option<f64>,
    pub k: usize,
    pub delta: f64,
    pub threshold: f64,
    pub cover_size: usize,
    pub probes: Vec<Probe>,
}

pub fn setcover_search(g: &MetricGraph, k: usize, delta: f64) -> Result<SetCoverSearchResult> {
    setcover_search_with_limit(g, k, delta, DEFAULT_T_LIMIT)
}

pub fn setcover_search_with_limit(
    g: &MetricGraph,
    k: usize,
    delta: f64,
    limit: f64,
) -> Result<SetCoverSearchResult> {
    if k == 0 {
        return Err(Error::InvalidParam("k must be positive".into()));
    }
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::InvalidParam(format!(
            "delta must be positive, got {delta}"
        )));
    }
    let threshold = cover_threshold(k, g.n());
    let base = apsp(g);
    let grid = Grid::new(delta, limit);
    let mut probes = Vec::new();
    let mut accepted: Option<(f64, CoverResult)> = None;
    let (lo, hi) = grid.bracket(|t| {
        let cover = greedy_set_cover(&build_instance_from(g, &base, t));
        let ok = cover.covered_all && cover.chosen.len() as f64 <= threshold;
        debug!(
            "set cover probe t = {t}: {} sets, covered = {}, ok = {ok}",
            cover.chosen.len(),
            cover.covered_all
        );
        probes.push(Probe {
            t,
            edges_added: cover.chosen.len(),
            exceeds: !ok,
        });
        if ok && accepted.as_ref().is_none_or(|(at, _)| t < *at) {
            accepted = Some((t, cover));
        }
        ok
    })?;
    let t_level = grid.level(hi);
    let (at, cover) = accepted.expect("bracket ends on an accepted level");
    debug_assert_eq!(at, t_level);
    let added = cover.chosen;
    let t_achieved = g.with_edges(&added).dilation().dilation;
    Ok(SetCoverSearchResult {
        cover_size: added.len(),
        added,
        t_achieved,
        t_level,
        t_bracket: lo.map(|i| grid.level(i)),
        k,
        delta,
        threshold,
        probes,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::metric::MetricSpace;

    fn bits(len: usize, items: &[usize]) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(len);
        for &i in items {
            b.insert(i);
        }
        b
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 5;
        let mut idx = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                assert_eq!(SetCoverInstance::pair_index(n, u, v), idx);
                assert_eq!(SetCoverInstance::pair_index(n, v, u), idx);
                idx += 1;
            }
        }
    }

    #[test]
    fn single_set_cover() {
        let sets = vec![bits(4, &[0, 1]), bits(4, &[0, 1, 2, 3]), bits(4, &[3])];
        let (chosen, ok) = greedy_cover(4, &FixedBitSet::with_capacity(4), &sets);
        assert!(ok);
        assert_eq!(chosen, vec![1]);
    }

    #[test]
    fn dominant_first_pick() {
        // elements 1..6 mapped to 0..5
        let sets = vec![
            bits(6, &[0, 1, 2, 3]),
            bits(6, &[0, 1]),
            bits(6, &[2, 3]),
            bits(6, &[4, 5]),
        ];
        let (chosen, ok) = greedy_cover(6, &FixedBitSet::with_capacity(6), &sets);
        assert!(ok);
        assert_eq!(chosen, vec![0, 3]);
    }

    #[test]
    fn uncoverable_reported() {
        let sets = vec![bits(3, &[0]), bits(3, &[1])];
        let (chosen, ok) = greedy_cover(3, &FixedBitSet::with_capacity(3), &sets);
        assert!(!ok);
        assert_eq!(chosen.len(), 2);
    }

    fn line(xs: &[f64]) -> Arc<MetricSpace> {
        Arc::new(MetricSpace::from_points(xs.iter().map(|&x| vec![x]).collect()).unwrap())
    }

    #[test]
    fn instance_pre_covered_when_t_large() {
        let m = line(&[0.0, 1.0, 3.0, 7.0]);
        let g = MetricGraph::new(m, [Edge::new(0, 3), Edge::new(1, 2), Edge::new(0, 1)]).unwrap();
        let t = g.dilation().dilation;
        let inst = build_instance(&g, t);
        assert_eq!(inst.baseline.count_ones(..), 6);
        for (_, s) in &inst.sets {
            assert_eq!(s.count_ones(..), 6);
        }
        let cover = greedy_set_cover(&inst);
        assert!(cover.covered_all);
        assert!(cover.chosen.is_empty());
    }

    #[test]
    fn two_vertex_edgeless() {
        let g = MetricGraph::empty(line(&[0.0, 2.0]));
        let inst = build_instance(&g, 1.0);
        assert_eq!(inst.sets.len(), 1);
        assert_eq!(inst.sets[0].0, Edge::new(0, 1));
        assert_eq!(inst.sets[0].1.count_ones(..), 1);
        assert_eq!(inst.baseline.count_ones(..), 0);
    }

    #[test]
    fn membership_rechecks_exactly() {
        let m = line(&[0.0, 1.0, 2.0, 4.0, 5.5]);
        let g = MetricGraph::new(m.clone(), [Edge::new(0, 4), Edge::new(1, 3)]).unwrap();
        let t = 1.5;
        let inst = build_instance(&g, t);
        for (e, set) in &inst.sets {
            let d = apsp(&g.with_edges(&[*e]));
            for (i, p) in inst.pairs.iter().enumerate() {
                let ok = d.edge(*p) <= t * m.edge_len(*p) * (1.0 + 1e-9);
                assert_eq!(set.contains(i), ok, "edge {e:?} pair {p:?}");
                if inst.baseline.contains(i) {
                    assert!(set.contains(i));
                }
            }
        }
    }

    #[test]
    fn threshold_formula() {
        let t = cover_threshold(2, 8);
        assert!((t - 8.0 * (2.0 * 8f64.ln() + 1.0)).abs() < 1e-12);
    }

    #[test]
    fn search_complete_graph() {
        let g = MetricGraph::complete(line(&[0.0, 1.0, 3.0]));
        let res = setcover_search(&g, 1, 0.1).unwrap();
        assert!(res.added.is_empty());
        assert_eq!(res.t_achieved, 1.0);
        assert_eq!(res.t_level, 1.0);
    }

    #[test]
    fn search_covers_at_level() {
        let m = line(&[0.0, 1.0, 1.7, 4.0, 4.5, 8.0]);
        let g = MetricGraph::new(m, [Edge::new(0, 5), Edge::new(1, 4), Edge::new(2, 3)]).unwrap();
        let res = setcover_search(&g, 1, 0.1).unwrap();
        assert!(approx_le(res.t_achieved, res.t_level));
        assert!(res.cover_size as f64 <= res.threshold);
    }
}
