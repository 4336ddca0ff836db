//! Fixed-size clique existence search inside candidate vertex sets.
//!
//! A clique in a multipartite subgraph takes at most one vertex per part,
//! so every branch whose candidates touch fewer parts than the remaining
//! demand is cut. Candidates are explored in ascending flat-id order with
//! the include branch first, which makes the returned witness the
//! lexicographically least clique of the requested size.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Subgraph, VertexId};

/// Vertices of a clique found in a subgraph, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CliqueWitness {
    pub vertices: Vec<VertexId>,
}

impl CliqueWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks pairwise adjacency by direct probes.
    pub fn is_clique_in(&self, sub: &Subgraph) -> bool {
        self.vertices.iter().enumerate().all(|(i, &a)| {
            self.vertices[i + 1..]
                .iter()
                .all(|&b| sub.has_edge(a, b))
        })
    }
}

/// {w : w ~ u and w ~ v}.
pub fn common_neighborhood(sub: &Subgraph, u: VertexId, v: VertexId) -> VertexSet {
    sub.neighbors(u).intersection(sub.neighbors(v))
}

/// Returns an `s`-clique of the subgraph induced on `candidates`, if any.
pub fn contains_clique(sub: &Subgraph, candidates: &VertexSet, s: usize) -> Option<CliqueWitness> {
    let mut acc = Vec::with_capacity(s);
    if extend(sub, candidates.clone(), s, &mut acc) {
        Some(CliqueWitness { vertices: acc })
    } else {
        None
    }
}

/// If adding `e` creates a K_t, returns the (t-2)-clique in the common
/// neighborhood of its endpoints that closes it.
pub fn completes_kt(sub: &Subgraph, e: Edge, t: usize) -> Result<Option<CliqueWitness>> {
    if t < 3 {
        return Err(Error::domain("t", t, "t >= 3"));
    }
    let e = sub.host().edge(e.u(), e.v())?;
    if sub.has_edge(e.u(), e.v()) {
        return Err(Error::EdgePresent(e));
    }
    Ok(completes_unchecked(sub, e, t))
}

pub(crate) fn completes_unchecked(sub: &Subgraph, e: Edge, t: usize) -> Option<CliqueWitness> {
    let common = common_neighborhood(sub, e.u(), e.v());
    if t == 3 {
        return common.first().map(|w| CliqueWitness {
            vertices: vec![VertexId(w)],
        });
    }
    contains_clique(sub, &common, t - 2)
}

fn extend(sub: &Subgraph, mut cand: VertexSet, s: usize, acc: &mut Vec<VertexId>) -> bool {
    if s == 0 {
        return true;
    }
    loop {
        if !touches_parts(sub, &cand, s) {
            return false;
        }
        let v = cand.first().expect("nonempty after part check");
        if s == 1 {
            acc.push(VertexId(v));
            return true;
        }
        let next = cand.intersection(sub.neighbors(VertexId(v)));
        acc.push(VertexId(v));
        if extend(sub, next, s - 1, acc) {
            return true;
        }
        acc.pop();
        cand.remove(v);
    }
}

/// True when `set` meets at least `need` distinct parts.
fn touches_parts(sub: &Subgraph, set: &VertexSet, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    let n = sub.host().part_size();
    let mut seen = 0;
    let mut last = usize::MAX;
    for v in set.iter() {
        let p = v / n;
        if p != last {
            last = p;
            seen += 1;
            if seen >= need {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Host;

    fn g2_3_2() -> Subgraph {
        let h = Host::new(3, 2).unwrap();
        let v = |p, i| h.v(p, i);
        Subgraph::from_edges(
            h,
            [
                (v(1, 1), v(2, 2)),
                (v(1, 1), v(3, 2)),
                (v(2, 1), v(1, 2)),
                (v(2, 1), v(3, 2)),
                (v(3, 1), v(1, 2)),
                (v(3, 1), v(2, 2)),
            ]
            .map(|(a, b)| Edge::new(a, b)),
        )
        .unwrap()
    }

    #[test]
    fn common_neighborhood_examples() {
        let g = g2_3_2();
        let h = *g.host();
        assert!(common_neighborhood(&g, h.v(3, 2), h.v(1, 1)).is_empty());
        let e = Subgraph::empty(h);
        assert!(common_neighborhood(&e, h.v(1, 1), h.v(2, 1)).is_empty());
        let full = Subgraph::complete(h);
        let c = common_neighborhood(&full, h.v(1, 1), h.v(2, 1));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![4, 5]);
    }

    #[test]
    fn trivial_sizes() {
        let h = Host::new(3, 2).unwrap();
        let g = Subgraph::empty(h);
        let none = VertexSet::empty(6);
        assert_eq!(contains_clique(&g, &none, 0).unwrap().len(), 0);
        assert!(contains_clique(&g, &none, 1).is_none());
        let one = VertexSet::from_ids(6, [3]);
        assert_eq!(contains_clique(&g, &one, 1).unwrap().vertices, vec![VertexId(3)]);
        assert!(contains_clique(&g, &VertexSet::full(6), 2).is_none());
    }

    #[test]
    fn lexicographically_least_witness() {
        let h = Host::new(4, 2).unwrap();
        let full = Subgraph::complete(h);
        let w = contains_clique(&full, &VertexSet::full(8), 4).unwrap();
        assert_eq!(w.vertices, vec![VertexId(0), VertexId(2), VertexId(4), VertexId(6)]);
        assert!(w.is_clique_in(&full));
        // K_5 needs five parts.
        assert!(contains_clique(&full, &VertexSet::full(8), 5).is_none());
    }

    #[test]
    fn completes_kt_contract() {
        let g = g2_3_2();
        let h = *g.host();
        let present = Edge::new(h.v(1, 1), h.v(2, 2));
        assert!(matches!(completes_kt(&g, present, 3), Err(Error::EdgePresent(_))));
        assert!(completes_kt(&g, Edge::new(h.v(1, 1), h.v(2, 1)), 2).is_err());
        let empty = Subgraph::empty(h);
        for e in empty.missing_edges() {
            assert!(completes_kt(&empty, e, 3).unwrap().is_none());
        }
    }
}
