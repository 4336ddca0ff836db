//! K_t-saturation checks with witnesses, and part-pair density profiles.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::clique::{completes_unchecked, contains_clique, CliqueWitness};
use crate::error::{Error, Result};
use crate::graph::{Edge, Subgraph};

/// Outcome of [`verify_saturated`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub t: usize,
    pub kt_free: bool,
    /// A K_t of the subgraph when `kt_free` is false.
    pub witness: Option<CliqueWitness>,
    /// Missing edges whose insertion creates no K_t, in canonical order.
    pub non_completing: Vec<Edge>,
    pub missing_checked: usize,
    pub is_saturated: bool,
}

fn check_t(t: usize) -> Result<()> {
    if t < 3 {
        return Err(Error::domain("t", t, "t >= 3"));
    }
    Ok(())
}

/// Returns `(true, None)` if the subgraph has no K_t, otherwise `(false, Some(witness))`.
pub fn is_kt_free(sub: &Subgraph, t: usize) -> Result<(bool, Option<CliqueWitness>)> {
    check_t(t)?;
    let all = VertexSet::full(sub.vertex_count());
    Ok(match contains_clique(sub, &all, t) {
        Some(w) => (false, Some(w)),
        None => (true, None),
    })
}

/// Decides K_t-saturation. Freeness is checked first; when it fails the
/// missing-edge scan is skipped.
pub fn verify_saturated(sub: &Subgraph, t: usize) -> Result<SaturationReport> {
    let (kt_free, witness) = is_kt_free(sub, t)?;
    if !kt_free {
        return Ok(SaturationReport {
            t,
            kt_free,
            witness,
            non_completing: Vec::new(),
            missing_checked: 0,
            is_saturated: false,
        });
    }
    let missing = sub.missing_edges();
    // par_iter + collect keeps the canonical order.
    let flags: Vec<bool> = missing
        .par_iter()
        .with_min_len(256)
        .map(|&e| completes_unchecked(sub, e, t).is_none())
        .collect();
    let non_completing: Vec<Edge> = missing
        .iter()
        .zip(flags)
        .filter_map(|(&e, bad)| bad.then_some(e))
        .collect();
    Ok(SaturationReport {
        t,
        kt_free,
        witness: None,
        is_saturated: non_completing.is_empty(),
        non_completing,
        missing_checked: missing.len(),
    })
}

/// Boolean saturation test that stops at the first non-completing edge.
pub fn is_saturated(sub: &Subgraph, t: usize) -> Result<bool> {
    let (free, _) = is_kt_free(sub, t)?;
    if !free {
        return Ok(false);
    }
    let h = *sub.host();
    let saturated = h
        .edges()
        .filter(|e| !sub.has_edge(e.u(), e.v()))
        .all(|e| completes_unchecked(sub, e, t).is_some());
    Ok(saturated)
}

/// Edge count and density of one part pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDensity {
    pub i: usize,
    pub j: usize,
    pub edges: usize,
    /// `edges / n^2`.
    pub density: f64,
}

/// One row per unordered part pair `(i, j)`, `i < j`, in lexicographic order.
pub fn density_profile(sub: &Subgraph) -> Vec<PairDensity> {
    let h = sub.host();
    let (k, n) = (h.parts(), h.part_size());
    let denom = (n * n) as f64;
    let mut rows = Vec::with_capacity(k * (k - 1) / 2);
    for i in 1..=k {
        for j in i + 1..=k {
            let edges = sub.part_pair_edge_count(i, j).expect("valid pair");
            rows.push(PairDensity {
                i,
                j,
                edges,
                density: edges as f64 / denom,
            });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Host, VertexId};

    #[test]
    fn edgeless_is_free() {
        let h = Host::new(4, 3).unwrap();
        for t in 3..6 {
            assert_eq!(is_kt_free(&Subgraph::empty(h), t).unwrap(), (true, None));
        }
        assert!(is_kt_free(&Subgraph::empty(h), 2).is_err());
    }

    #[test]
    fn complete_host_contains_kt() {
        let h = Host::new(4, 2).unwrap();
        let full = Subgraph::complete(h);
        let (free, w) = is_kt_free(&full, 4).unwrap();
        assert!(!free);
        let w = w.unwrap();
        let parts: Vec<_> = w.vertices.iter().map(|&v| h.part_of(v)).collect();
        assert_eq!(parts, vec![1, 2, 3, 4]);

        let r = verify_saturated(&Subgraph::complete(Host::new(3, 2).unwrap()), 3).unwrap();
        assert!(!r.kt_free && !r.is_saturated);
        assert_eq!(r.missing_checked, 0);
        assert!(r.non_completing.is_empty());
        assert_eq!(r.witness.unwrap().vertices, vec![VertexId(0), VertexId(2), VertexId(4)]);
    }

    #[test]
    fn empty_graph_report() {
        let h = Host::new(3, 2).unwrap();
        let r = verify_saturated(&Subgraph::empty(h), 3).unwrap();
        assert!(r.kt_free);
        assert_eq!(r.missing_checked, 12);
        assert_eq!(r.non_completing.len(), 12);
        assert!(!r.is_saturated);
        assert!(!is_saturated(&Subgraph::empty(h), 3).unwrap());
    }

    #[test]
    fn density_extremes() {
        let h = Host::new(4, 3).unwrap();
        assert!(density_profile(&Subgraph::complete(h))
            .iter()
            .all(|r| r.density == 1.0 && r.edges == 9));
        let rows = density_profile(&Subgraph::empty(h));
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.density == 0.0));
        assert_eq!((rows[0].i, rows[0].j, rows[5].i, rows[5].j), (1, 2, 3, 4));
    }
}
