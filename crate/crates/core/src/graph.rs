//! Host graphs K_k^n and bitset subgraphs of them.
//!
//! Vertices are laid out part-major: part `i` (1-based) occupies flat ids
//! `(i-1)*n .. i*n`, and the vertex `v_i^j` has flat id `(i-1)*n + (j-1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// The complete balanced multipartite host K_k^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Host {
    k: usize,
    n: usize,
}

impl Host {
    /// Requires `k >= 3` and `n >= 2`.
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::domain("k", k, "k >= 3"));
        }
        if n < 2 {
            return Err(Error::domain("n", n, "n >= 2"));
        }
        Ok(Host { k, n })
    }

    #[inline]
    pub fn parts(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn part_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.k * self.n
    }

    pub fn host_edge_count(&self) -> usize {
        self.k * (self.k - 1) / 2 * self.n * self.n
    }

    /// Flat id of `v_part^index` (both 1-based).
    pub fn locate(&self, part: usize, index: usize) -> Result<VertexId> {
        if part == 0 || part > self.k {
            return Err(Error::IndexDomain(format!("part {part} not in [1, {}]", self.k)));
        }
        if index == 0 || index > self.n {
            return Err(Error::IndexDomain(format!("index {index} not in [1, {}]", self.n)));
        }
        Ok(VertexId((part - 1) * self.n + (index - 1)))
    }

    /// Inverse of [`Host::locate`].
    pub fn unlocate(&self, flat: usize) -> Result<(usize, usize)> {
        self.check_vertex(VertexId(flat))?;
        Ok((flat / self.n + 1, flat % self.n + 1))
    }

    /// Shorthand for `locate` when the coordinates are known to be valid.
    #[inline]
    pub fn v(&self, part: usize, index: usize) -> VertexId {
        self.locate(part, index).expect("vertex coordinates in range")
    }

    /// 1-based part of a vertex.
    #[inline]
    pub fn part_of(&self, v: VertexId) -> usize {
        v.0 / self.n + 1
    }

    #[inline]
    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 >= self.vertex_count() {
            return Err(Error::IndexDomain(format!(
                "vertex {} not in [0, {})",
                v.0,
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Validates a pair as a host edge and returns it in canonical form.
    pub fn edge(&self, a: VertexId, b: VertexId) -> Result<Edge> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if self.part_of(a) == self.part_of(b) {
            return Err(Error::MultipartiteViolation(a, b));
        }
        Ok(Edge::new(a, b))
    }

    /// Vertices of part `part` (1-based).
    pub fn part_mask(&self, part: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.vertex_count());
        s.insert_range((part - 1) * self.n, part * self.n);
        s
    }

    /// All host edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let vc = self.vertex_count();
        (0..vc).flat_map(move |u| {
            let first = (u / self.n + 1) * self.n;
            (first..vc).map(move |v| Edge(VertexId(u), VertexId(v)))
        })
    }

    /// Writes `v_i^j` for a vertex.
    pub fn label(&self, v: VertexId) -> String {
        let (i, j) = (v.0 / self.n + 1, v.0 % self.n + 1);
        format!("v{i}^{j}")
    }
}

/// Flat vertex id in `[0, k*n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn flat(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An unordered vertex pair stored with the smaller flat id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    #[inline]
    pub fn u(&self) -> VertexId {
        self.0
    }

    #[inline]
    pub fn v(&self) -> VertexId {
        self.1
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0 .0, e.1 .0]
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Self {
        Edge::new(VertexId(p[0]), VertexId(p[1]))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// An edge subset of a host, stored as symmetric adjacency bitsets.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgraph {
    host: Host,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl fmt::Debug for Subgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgraph")
            .field("host", &self.host)
            .field("edge_count", &self.edge_count)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Subgraph {
    pub fn empty(host: Host) -> Self {
        let vc = host.vertex_count();
        Subgraph {
            host,
            adj: vec![VertexSet::empty(vc); vc],
            edge_count: 0,
        }
    }

    /// The host itself as a subgraph.
    pub fn complete(host: Host) -> Self {
        let vc = host.vertex_count();
        let adj = (0..vc)
            .map(|v| {
                let mut row = VertexSet::full(vc);
                let p = host.part_of(VertexId(v));
                for w in (p - 1) * host.n..p * host.n {
                    row.remove(w);
                }
                row
            })
            .collect();
        Subgraph {
            host,
            adj,
            edge_count: host.host_edge_count(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(host: Host, edges: I) -> Result<Self> {
        let mut g = Subgraph::empty(host);
        for e in edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn host(&self) -> &Host {
        &self.host
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v.0]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].count()
    }

    /// Adds a host edge. Returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, e: Edge) -> Result<bool> {
        let e = self.host.edge(e.u(), e.v())?;
        if self.adj[e.u().0].insert(e.v().0) {
            self.adj[e.v().0].insert(e.u().0);
            self.edge_count += 1;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    /// Removes an edge. Returns `Ok(false)` if it was absent.
    pub fn remove_edge(&mut self, e: Edge) -> Result<bool> {
        let e = self.host.edge(e.u(), e.v())?;
        if self.adj[e.u().0].remove(e.v().0) {
            self.adj[e.v().0].remove(e.u().0);
            self.edge_count -= 1;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a.0 < self.adj.len() && self.adj[a.0].contains(b.0)
    }

    /// Present edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge(VertexId(u), VertexId(v)))
        })
    }

    /// Host edges absent from the subgraph, in canonical order.
    pub fn missing_edges(&self) -> Vec<Edge> {
        self.host
            .edges()
            .filter(|e| !self.adj[e.u().0].contains(e.v().0))
            .collect()
    }

    /// Number of edges joining parts `i` and `j` (1-based, `i < j`).
    pub fn part_pair_edge_count(&self, i: usize, j: usize) -> Result<usize> {
        let k = self.host.k;
        if i == 0 || j > k || i >= j {
            return Err(Error::IndexDomain(format!(
                "part pair ({i}, {j}) needs 1 <= i < j <= {k}"
            )));
        }
        let n = self.host.n;
        let target = self.host.part_mask(j);
        Ok(((i - 1) * n..i * n)
            .map(|u| self.adj[u].intersection(&target).count())
            .sum())
    }

    /// Full rescan of the structural invariants; returns a description of
    /// the first violation found.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut half = 0;
        for (u, row) in self.adj.iter().enumerate() {
            for v in row.iter() {
                if u == v {
                    return Err(format!("self-loop at {u}"));
                }
                if self.host.part_of(VertexId(u)) == self.host.part_of(VertexId(v)) {
                    return Err(format!("intra-part edge ({u}, {v})"));
                }
                if !self.adj[v].contains(u) {
                    return Err(format!("asymmetric edge ({u}, {v})"));
                }
            }
            half += row.count();
        }
        if half != 2 * self.edge_count {
            return Err(format!(
                "edge_count {} but adjacency holds {} endpoints",
                self.edge_count, half
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn host_counts() {
        let h = Host::new(3, 2).unwrap();
        assert_eq!((h.vertex_count(), h.host_edge_count()), (6, 12));
        let h = Host::new(5, 4).unwrap();
        assert_eq!((h.vertex_count(), h.host_edge_count()), (20, 160));
        assert_eq!(h.edges().count(), 160);
    }

    #[test]
    fn host_rejects_small_parameters() {
        assert!(matches!(
            Host::new(2, 5),
            Err(Error::ParameterDomain { name: "k", .. })
        ));
        assert!(matches!(
            Host::new(3, 1),
            Err(Error::ParameterDomain { name: "n", .. })
        ));
    }

    #[test]
    fn locate_examples() {
        let h = Host::new(3, 2).unwrap();
        assert_eq!(h.locate(1, 1).unwrap(), VertexId(0));
        assert_eq!(h.locate(3, 2).unwrap(), VertexId(5));
        assert_eq!(h.unlocate(3).unwrap(), (2, 2));
        assert!(matches!(h.locate(4, 1), Err(Error::IndexDomain(_))));
        assert!(matches!(h.locate(1, 0), Err(Error::IndexDomain(_))));
        assert!(matches!(h.unlocate(6), Err(Error::IndexDomain(_))));
    }

    #[test]
    fn locate_round_trip() {
        let h = Host::new(7, 5).unwrap();
        for flat in 0..h.vertex_count() {
            let (p, i) = h.unlocate(flat).unwrap();
            assert_eq!(h.locate(p, i).unwrap(), VertexId(flat));
        }
    }

    #[test]
    fn add_edge_idempotent_and_guarded() {
        let h = Host::new(3, 2).unwrap();
        let mut g = Subgraph::empty(h);
        let e = Edge::new(h.v(1, 1), h.v(2, 1));
        assert!(g.add_edge(e).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert!(!g.add_edge(e).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            g.add_edge(Edge::new(h.v(1, 1), h.v(1, 2))),
            Err(Error::MultipartiteViolation(..))
        ));
        assert!(matches!(
            g.add_edge(Edge::new(VertexId(0), VertexId(6))),
            Err(Error::IndexDomain(_))
        ));
        assert!(g.has_edge(h.v(2, 1), h.v(1, 1)));
        assert!(g.remove_edge(e).unwrap());
        assert!(!g.remove_edge(e).unwrap());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn missing_edges_of_extremes() {
        let h = Host::new(3, 2).unwrap();
        assert!(Subgraph::complete(h).missing_edges().is_empty());
        let m = Subgraph::empty(h).missing_edges();
        assert_eq!(m.len(), 12);
        assert!(m.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn part_pair_counts() {
        let h = Host::new(4, 3).unwrap();
        let full = Subgraph::complete(h);
        assert_eq!(full.part_pair_edge_count(1, 4).unwrap(), 9);
        assert_eq!(Subgraph::empty(h).part_pair_edge_count(2, 3).unwrap(), 0);
        assert!(full.part_pair_edge_count(2, 2).is_err());
        assert!(full.part_pair_edge_count(3, 2).is_err());
        assert!(full.part_pair_edge_count(1, 5).is_err());
        full.check_invariants().unwrap();
    }
}
