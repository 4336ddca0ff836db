//! Test-only oracles, independent of the library's search paths.
#![allow(dead_code)]

use multisat::{Edge, Host, Subgraph, VertexId};
use rand::Rng;

/// Every `s`-subset of `0..n`, lexicographic.
pub fn combinations(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn rec(start: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, s, cur, out);
            cur.pop();
        }
    }
    rec(0, n, s, &mut cur, &mut out);
    out
}

/// Naive K_t detection: test every t-subset for pairwise adjacency.
pub fn has_kt_naive(g: &Subgraph, t: usize) -> bool {
    combinations(g.vertex_count(), t).iter().any(|c| {
        c.iter()
            .enumerate()
            .all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(VertexId(a), VertexId(b))))
    })
}

/// Saturation by definition: K_t-free, and every missing host edge creates a K_t.
pub fn is_saturated_naive(g: &Subgraph, t: usize) -> bool {
    if has_kt_naive(g, t) {
        return false;
    }
    g.missing_edges().into_iter().all(|e| {
        let mut h = g.clone();
        h.add_edge(e).unwrap();
        has_kt_naive(&h, t)
    })
}

/// Each host edge kept independently with probability `p`.
pub fn random_subgraph<R: Rng>(host: Host, p: f64, rng: &mut R) -> Subgraph {
    let edges: Vec<Edge> = host.edges().filter(|_| rng.gen_bool(p)).collect();
    Subgraph::from_edges(host, edges).unwrap()
}

/// Adds random host edges that keep the graph K_t-free (naive check).
pub fn random_kt_free<R: Rng>(host: Host, t: usize, tries: usize, rng: &mut R) -> Subgraph {
    let all: Vec<Edge> = host.edges().collect();
    let mut g = Subgraph::empty(host);
    for _ in 0..tries {
        let e = all[rng.gen_range(0..all.len())];
        if g.has_edge(e.u(), e.v()) {
            continue;
        }
        g.add_edge(e).unwrap();
        if has_kt_naive(&g, t) {
            g.remove_edge(e).unwrap();
        }
    }
    g
}

pub fn edge(h: &Host, a: (usize, usize), b: (usize, usize)) -> Edge {
    Edge::new(h.v(a.0, a.1), h.v(b.0, b.1))
}
