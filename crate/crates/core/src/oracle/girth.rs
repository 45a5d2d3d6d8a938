use std::collections::VecDeque;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Unweighted undirected multigraph. Parallel edges are distinct entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl UGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::InvalidGraph(format!(
                "edge ({a}, {b}) out of range for {n} vertices"
            )));
        }
        Ok(UGraph { n, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// No self-loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, id));
            if a != b {
                adj[b].push((a, id));
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Length of the shortest cycle, `None` for a forest.
pub fn girth(h: &UGraph) -> Option<usize> {
    shortest_cycle(h).map(|c| c.len())
}

/// Edge indices of a shortest cycle, in traversal order.
///
/// Self-loops are 1-cycles and parallel edges 2-cycles; otherwise BFS from every root,
/// closing a cycle at each non-tree edge. The minimum over all roots is a simple cycle.
pub fn shortest_cycle(h: &UGraph) -> Option<Vec<usize>> {
    if let Some(id) = h.edges.iter().position(|&(a, b)| a == b) {
        return Some(vec![id]);
    }
    let mut first_seen = std::collections::HashMap::new();
    let mut parallel: Option<(usize, usize)> = None;
    for (id, &(a, b)) in h.edges.iter().enumerate() {
        let key = (a.min(b), a.max(b));
        if let Some(&prev) = first_seen.get(&key) {
            if parallel.is_none_or(|p| (prev, id) < p) {
                parallel = Some((prev, id));
            }
        } else {
            first_seen.insert(key, id);
        }
    }
    if let Some((a, b)) = parallel {
        return Some(vec![a, b]);
    }

    let adj = h.adjacency();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; h.n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; h.n];
    for root in 0..h.n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = None);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut best_here: Option<(usize, usize, usize, usize)> = None;
        while let Some(x) = queue.pop_front() {
            // any cycle closed from x has length at least 2 * dist[x]
            let bound = best_here
                .map(|b| b.3)
                .or(best.as_ref().map(Vec::len))
                .unwrap_or(usize::MAX);
            if 2 * dist[x] >= bound {
                break;
            }
            for &(y, id) in &adj[x] {
                if parent[x].is_some_and(|(_, pid)| pid == id) {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = Some((x, id));
                    queue.push_back(y);
                } else if parent[y].is_none_or(|(_, pid)| pid != id) {
                    let len = dist[x] + dist[y] + 1;
                    let current = best_here
                        .map(|b| b.3)
                        .or(best.as_ref().map(Vec::len))
                        .unwrap_or(usize::MAX);
                    if len < current {
                        best_here = Some((x, y, id, len));
                    }
                }
            }
        }
        if let Some((x, y, id, _)) = best_here {
            let mut left = Vec::new();
            let mut v = x;
            while let Some((p, pid)) = parent[v] {
                left.push(pid);
                v = p;
            }
            left.reverse();
            left.push(id);
            let mut v = y;
            while let Some((p, pid)) = parent[v] {
                left.push(pid);
                v = p;
            }
            best = Some(left);
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GirthLemmaReport {
    pub n: usize,
    pub r: u32,
    pub edges: usize,
    pub trials: usize,
    pub seed: u64,
    /// Largest girth seen; `None` only if every sample was acyclic, which the lemma forbids.
    pub max_girth: Option<usize>,
    pub bound: usize,
}

/// `ceil(n^(1 + 1/r)) + 1`.
pub fn lemma_edge_count(n: usize, r: u32) -> usize {
    let x = (n as f64).powf(1.0 + 1.0 / r as f64);
    let rounded = x.round();
    let c = if (x - rounded).abs() < 1e-9 * x.max(1.0) {
        rounded
    } else {
        x.ceil()
    };
    c as usize + 1
}

/// Sample random simple graphs with `ceil(n^(1+1/r)) + 1` edges and check girth `≤ 2r`.
pub fn check_girth_lemma(n: usize, r: u32, trials: usize, seed: u64) -> Result<GirthLemmaReport> {
    if r == 0 {
        return Err(Error::InvalidParam("r must be at least 1".into()));
    }
    let m = lemma_edge_count(n, r);
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::Precondition(format!(
            "{m} edges requested but a simple graph on {n} vertices has at most {total}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 2 * r as usize;
    let mut max_girth = None;
    for _ in 0..trials {
        let edges = sample(&mut rng, total, m)
            .into_iter()
            .map(|i| pairs[i])
            .collect();
        let h = UGraph { n, edges };
        let g = girth(&h);
        if g.is_none_or(|g| g > bound) {
            return Err(Error::LemmaViolation {
                vertices: n,
                edges: m,
                girth: g,
            });
        }
        max_girth = max_girth.max(g);
    }
    Ok(GirthLemmaReport {
        n,
        r,
        edges: m,
        trials,
        seed,
        max_girth,
        bound,
    })
}
