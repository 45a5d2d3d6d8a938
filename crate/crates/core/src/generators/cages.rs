//! Small cubic cages used as high-girth source graphs.

use crate::oracle::UGraph;

/// Hamiltonian cubic graph from LCF notation: a cycle on `n` vertices plus chords `i → i + shift[i mod len]`.
pub fn lcf(n: usize, shifts: &[i64]) -> UGraph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as i64 + shifts[i % shifts.len()]).rem_euclid(n as i64) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    UGraph { n, edges }
}

/// K₃,₃: girth 4.
pub fn k33() -> UGraph {
    let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    UGraph { n: 6, edges }
}

pub fn petersen() -> UGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    UGraph { n: 10, edges }
}

/// Heawood graph, LCF `[5, -5]^7`: 14 vertices, 21 edges, girth 6.
pub fn heawood() -> UGraph {
    lcf(14, &[5, -5])
}

/// Tutte–Coxeter graph, LCF `[-13, -9, 7, -7, 9, 13]^5`: 30 vertices, 45 edges, girth 8.
pub fn tutte_coxeter() -> UGraph {
    lcf(30, &[-13, -9, 7, -7, 9, 13])
}

pub fn by_name(name: &str) -> Option<UGraph> {
    match name {
        "k33" => Some(k33()),
        "heawood" => Some(heawood()),
        "tutte-coxeter" => Some(tutte_coxeter()),
        "petersen" => Some(petersen()),
        _ => None,
    }
}
