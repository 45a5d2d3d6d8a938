use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::{apsp, DistanceMatrix, Edge, MetricGraph};

/// Subsets the exhaustive search will evaluate before refusing.
pub const COMBINATION_LIMIT: u128 = 10_000_000;

/// The optimum `t*` over `k`-edge augmentations, or a supplied reference solution.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimalSolution {
    pub t_star: f64,
    pub s_star: Vec<Edge>,
    pub g_star: MetricGraph,
    /// `false` when built from a supplied edge set rather than exhaustive search.
    pub exhaustive: bool,
}

#[derive(Serialize)]
pub struct OptimalSummary {
    pub t_star: f64,
    pub s_star: Vec<Edge>,
    pub exhaustive: bool,
}

impl OptimalSolution {
    /// Use `edges` in place of an optimal set. Every bound proved against `t*` also holds
    /// against the dilation of any `k`-edge augmentation, so a known good set can stand in
    /// when enumeration is out of reach.
    pub fn from_reference(g: &MetricGraph, edges: Vec<Edge>) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| g.contains(**e) || e.v() >= g.n()) {
            return Err(Error::InvalidGraph(format!(
                "reference edge {e:?} is present or out of range"
            )));
        }
        let mut s_star = edges;
        s_star.sort_unstable();
        s_star.dedup();
        let g_star = g.with_edges(&s_star);
        Ok(OptimalSolution {
            t_star: g_star.dilation().dilation,
            s_star,
            g_star,
            exhaustive: false,
        })
    }

    pub fn summary(&self) -> OptimalSummary {
        OptimalSummary {
            t_star: self.t_star,
            s_star: self.s_star.clone(),
            exhaustive: self.exhaustive,
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

struct Best {
    t: f64,
    set: Vec<usize>,
}

fn max_ratio_below(d: &DistanceMatrix, dm: &[f64], n: usize, ceiling: f64) -> Option<f64> {
    let mut worst = 1.0f64;
    for u in 0..n {
        let row = d.row(u);
        for v in (u + 1)..n {
            let ratio = row[v] / dm[u * n + v];
            if ratio > worst {
                if ratio > ceiling {
                    return None;
                }
                worst = ratio;
            }
        }
    }
    Some(worst)
}

fn descend(
    g: &MetricGraph,
    cands: &[Edge],
    dm: &[f64],
    d: &DistanceMatrix,
    chosen: &mut Vec<usize>,
    remaining: usize,
    best: &mut Option<Best>,
) {
    let n = g.n();
    if remaining == 0 {
        let ceiling = best.as_ref().map_or(f64::INFINITY, |b| b.t);
        if let Some(t) = max_ratio_below(d, dm, n, ceiling) {
            if best.as_ref().is_none_or(|b| t < b.t) {
                *best = Some(Best {
                    t,
                    set: chosen.clone(),
                });
            }
        }
        return;
    }
    let start = chosen.last().map_or(0, |&i| i + 1);
    for i in start..=(cands.len() - remaining) {
        let mut next = d.clone();
        next.insert_edge(cands[i], g.weight(cands[i]));
        chosen.push(i);
        descend(g, cands, dm, &next, chosen, remaining - 1, best);
        chosen.pop();
    }
}

/// Exhaustive minimum dilation over all `min(k, #absent)`-subsets of absent edges.
/// Adding edges never raises dilation, so subsets of exactly that size suffice.
/// Ties go to the lexicographically smallest edge set.
pub fn brute_force_optimum(g: &MetricGraph, k: usize) -> Result<OptimalSolution> {
    brute_force_with_limit(g, k, COMBINATION_LIMIT)
}

pub fn brute_force_with_limit(g: &MetricGraph, k: usize, limit: u128) -> Result<OptimalSolution> {
    let cands = g.absent_edges();
    let size = k.min(cands.len());
    let combinations = binomial(cands.len(), size);
    if combinations > limit {
        return Err(Error::TooLarge {
            combinations,
            limit,
        });
    }
    let base = apsp(g);
    let n = g.n();
    let dm: Vec<f64> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .map(|(u, v)| if u == v { 1.0 } else { g.metric().dist(u, v) })
        .collect();

    let best = if size == 0 {
        Best {
            t: g.dilation().dilation,
            set: Vec::new(),
        }
    } else {
        let per_first: Vec<Option<Best>> = (0..=(cands.len() - size))
            .into_par_iter()
            .map(|first| {
                let mut d = base.clone();
                d.insert_edge(cands[first], g.weight(cands[first]));
                let mut chosen = vec![first];
                let mut best = None;
                descend(g, &cands, &dm, &d, &mut chosen, size - 1, &mut best);
                best
            })
            .collect();
        // in order of first index, so strict improvement keeps the lexicographic minimum
        per_first
            .into_iter()
            .flatten()
            .fold(None::<Best>, |acc, b| match acc {
                Some(a) if a.t <= b.t => Some(a),
                _ => Some(b),
            })
            .expect("at least one subset")
    };
    let s_star: Vec<Edge> = best.set.iter().map(|&i| cands[i]).collect();
    let g_star = g.with_edges(&s_star);
    Ok(OptimalSolution {
        t_star: best.t,
        s_star,
        g_star,
        exhaustive: true,
    })
}
