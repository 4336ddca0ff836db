//! The six K_t-saturated constructions and their size formulas.
//!
//! Every builder starts from a hub set `S`, places a gadget on `S`, and then
//! adds every host edge between `S` and its complement.

mod builders;
mod formulas;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use builders::{
    build_fknt, build_g1, build_g2, build_gknt, build_hknt, build_iknt, fknt_hub_count,
    iknt_triangles,
};
pub use formulas::{general_bound_formula, sat_k3_formula, size_formula, K3Argmin};

use crate::error::{Error, Result};
use crate::graph::{Edge, Host, Subgraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionKind {
    G1,
    G2,
    Gknt,
    Hknt,
    Fknt,
    Iknt,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 6] = [
        ConstructionKind::G1,
        ConstructionKind::G2,
        ConstructionKind::Gknt,
        ConstructionKind::Hknt,
        ConstructionKind::Fknt,
        ConstructionKind::Iknt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::G1 => "g1",
            ConstructionKind::G2 => "g2",
            ConstructionKind::Gknt => "gknt",
            ConstructionKind::Hknt => "hknt",
            ConstructionKind::Fknt => "fknt",
            ConstructionKind::Iknt => "iknt",
        }
    }

    pub fn has_closed_form(self) -> bool {
        !matches!(self, ConstructionKind::Fknt | ConstructionKind::Iknt)
    }

    /// G1 and G2 only exist for triangles.
    pub fn fixed_t(self) -> Option<usize> {
        match self {
            ConstructionKind::G1 | ConstructionKind::G2 => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Inadmissible(format!("unknown construction kind `{s}`")))
    }
}

/// Which construction to build, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub k: usize,
    pub n: usize,
    pub t: usize,
}

impl ConstructionSpec {
    /// Validates admissibility.
    pub fn new(kind: ConstructionKind, k: usize, n: usize, t: usize) -> Result<Self> {
        let spec = ConstructionSpec { kind, k, n, t };
        spec.check()?;
        Ok(spec)
    }

    pub fn g1(k: usize, n: usize) -> Result<Self> {
        Self::new(ConstructionKind::G1, k, n, 3)
    }

    pub fn g2(k: usize, n: usize) -> Result<Self> {
        Self::new(ConstructionKind::G2, k, n, 3)
    }

    pub fn host(&self) -> Result<Host> {
        Host::new(self.k, self.n)
    }

    pub fn check(&self) -> Result<()> {
        let Self { kind, k, n, t } = *self;
        let fail = |why: String| Err(Error::Inadmissible(format!("{kind}: {why}")));
        if k < 3 || n < 2 {
            return fail(format!("needs k >= 3 and n >= 2, got k = {k}, n = {n}"));
        }
        if let Some(ft) = kind.fixed_t() {
            if t != ft {
                return fail(format!("defined only for t = {ft}, got t = {t}"));
            }
            return Ok(());
        }
        match kind {
            ConstructionKind::Gknt => {
                if t < 3 || k < 2 * t - 4 {
                    return fail(format!("needs t >= 3 and k >= 2t-4, got k = {k}, t = {t}"));
                }
            }
            ConstructionKind::Hknt => {
                if t < 3 || k < 2 * t - 3 {
                    return fail(format!("needs t >= 3 and k >= 2t-3, got k = {k}, t = {t}"));
                }
            }
            ConstructionKind::Fknt => {
                if t < 4 || k < t {
                    return fail(format!("needs t >= 4 and k >= t, got k = {k}, t = {t}"));
                }
                let supply = (t - 1) * (t - 2) / 2;
                if n < supply {
                    return fail(format!(
                        "needs n >= C(t-1, 2) = {supply} distinct vertices in part t, got n = {n}"
                    ));
                }
            }
            ConstructionKind::Iknt => {
                if t < 6 || t % 2 != 0 {
                    return fail(format!("needs even t >= 6, got t = {t}"));
                }
                if 2 * k < 3 * (t - 2) {
                    return fail(format!("needs k >= 3(t-2)/2 = {}, got k = {k}", 3 * (t - 2) / 2));
                }
            }
            ConstructionKind::G1 | ConstructionKind::G2 => unreachable!(),
        }
        Ok(())
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(k={}, n={}, t={})", self.kind, self.k, self.n, self.t)
    }
}

/// A built construction together with the bookkeeping that produced it.
#[derive(Debug, Clone)]
pub struct ConstructionArtifacts {
    pub spec: ConstructionSpec,
    pub graph: Subgraph,
    /// Hub set S, ascending.
    pub hubs: Vec<VertexId>,
    /// Edges deleted from the starting gadget on S (matching, cycle or triangles).
    pub removed: Vec<Edge>,
    /// Edges added by greedy completion inside S (F_{k,n,t} only).
    pub completion_edges: Vec<Edge>,
    /// Interpretation choices applied while building.
    pub notes: Vec<String>,
}

impl ConstructionArtifacts {
    /// The graph before greedy completion.
    pub fn pre_completion(&self) -> Subgraph {
        let mut g = self.graph.clone();
        for &e in &self.completion_edges {
            g.remove_edge(e).expect("completion edge is a host edge");
        }
        g
    }
}

/// Dispatches to the builder for `spec.kind`.
pub fn build(spec: &ConstructionSpec) -> Result<ConstructionArtifacts> {
    let ConstructionSpec { k, n, t, .. } = *spec;
    match spec.kind {
        ConstructionKind::G1 => build_g1(k, n),
        ConstructionKind::G2 => build_g2(k, n),
        ConstructionKind::Gknt => build_gknt(k, n, t),
        ConstructionKind::Hknt => build_hknt(k, n, t),
        ConstructionKind::Fknt => build_fknt(k, n, t),
        ConstructionKind::Iknt => build_iknt(k, n, t),
    }
}
