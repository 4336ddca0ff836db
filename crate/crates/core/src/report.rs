//! JSON forms of saturation reports and edge lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Host, Subgraph, VertexId};
use crate::verify::SaturationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostParams {
    pub k: usize,
    pub n: usize,
}

impl From<&Host> for HostParams {
    fn from(h: &Host) -> Self {
        HostParams {
            k: h.parts(),
            n: h.part_size(),
        }
    }
}

/// Stable JSON schema of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub t: usize,
    pub kt_free: bool,
    pub witness: Option<Vec<VertexId>>,
    pub non_completing: Vec<Edge>,
    pub missing_checked: usize,
    pub is_saturated: bool,
    pub edge_count: usize,
    pub host: HostParams,
}

impl ReportJson {
    pub fn new(sub: &Subgraph, report: &SaturationReport) -> Self {
        ReportJson {
            t: report.t,
            kt_free: report.kt_free,
            witness: report.witness.as_ref().map(|w| w.vertices.clone()),
            non_completing: report.non_completing.clone(),
            missing_checked: report.missing_checked,
            is_saturated: report.is_saturated,
            edge_count: sub.edge_count(),
            host: sub.host().into(),
        }
    }
}

pub fn report_to_json(sub: &Subgraph, report: &SaturationReport) -> String {
    serde_json::to_string_pretty(&ReportJson::new(sub, report)).expect("report serializes")
}

/// Edge-list document: `{"host": {"k", "n"}, "edges": [[u, v], ...]}` with
/// flat vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub host: HostParams,
    pub edges: Vec<Edge>,
}

pub fn graph_to_json(sub: &Subgraph) -> EdgeListJson {
    EdgeListJson {
        host: sub.host().into(),
        edges: sub.edges().collect(),
    }
}

/// Parses an edge-list document. When `host` is given it must agree with
/// the document's host parameters.
pub fn graph_from_json(text: &str, host: Option<Host>) -> Result<Subgraph> {
    let doc: EdgeListJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: byte_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    let declared = Host::new(doc.host.k, doc.host.n)?;
    if let Some(h) = host {
        if h != declared {
            return Err(Error::Parse {
                offset: 0,
                message: format!(
                    "document host K_{}^{} differs from requested K_{}^{}",
                    doc.host.k,
                    doc.host.n,
                    h.parts(),
                    h.part_size()
                ),
            });
        }
    }
    Subgraph::from_edges(declared, doc.edges)
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let before: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    before + column.saturating_sub(1)
}
