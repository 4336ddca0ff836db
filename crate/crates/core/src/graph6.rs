//! graph6 encoding of subgraphs.
//!
//! Part structure is not stored; decoding needs the host out of band.

use crate::error::{Error, Result};
use crate::graph::{Edge, Host, Subgraph, VertexId};

const BIAS: u8 = 63;

fn encode_count(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encodes the upper-triangle adjacency bits of an `n`-vertex graph given by
/// an adjacency predicate: pairs (i, j), i < j, ordered by j then i.
pub fn encode_with(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> String {
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_count(n, &mut out);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn encode_graph6(sub: &Subgraph) -> String {
    encode_with(sub.vertex_count(), |i, j| {
        sub.has_edge(VertexId(i), VertexId(j))
    })
}

fn byte_at(bytes: &[u8], pos: usize) -> Result<u8> {
    match bytes.get(pos) {
        None => Err(Error::Parse {
            offset: pos,
            message: "unexpected end of input".into(),
        }),
        Some(&b) if !(63..=126).contains(&b) => Err(Error::Parse {
            offset: pos,
            message: format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
        }),
        Some(&b) => Ok(b - BIAS),
    }
}

/// Decodes a graph6 line into a vertex count and its edge list (canonical
/// order). A leading `>>graph6<<` header and trailing newline are accepted.
pub fn decode_edges(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    let offset = |e: Error| match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + base,
            message,
        },
        other => other,
    };

    let (n, mut pos) = if bytes.first() == Some(&126) {
        if bytes.get(1) == Some(&126) {
            let mut n = 0usize;
            for p in 2..8 {
                n = n << 6 | byte_at(bytes, p).map_err(offset)? as usize;
            }
            (n, 8)
        } else {
            let mut n = 0usize;
            for p in 1..4 {
                n = n << 6 | byte_at(bytes, p).map_err(offset)? as usize;
            }
            (n, 4)
        }
    } else {
        (byte_at(bytes, 0).map_err(offset)? as usize, 1)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let body = bits.div_ceil(6);
    if bytes.len() != pos + body {
        return Err(Error::Parse {
            offset: base + bytes.len().min(pos + body),
            message: format!(
                "expected {} data bytes for {n} vertices, found {}",
                body,
                bytes.len().saturating_sub(pos)
            ),
        });
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut seen = 0;
    while seen < bits {
        let group = byte_at(bytes, pos).map_err(offset)?;
        for b in (0..6).rev() {
            if seen == bits {
                if group & ((1 << (b + 1)) - 1) != 0 {
                    return Err(Error::Parse {
                        offset: base + pos,
                        message: "nonzero padding bits".into(),
                    });
                }
                break;
            }
            if group >> b & 1 == 1 {
                edges.push((i, j));
            }
            seen += 1;
            i += 1;
            if i == j {
                j += 1;
                i = 0;
            }
        }
        pos += 1;
    }
    edges.sort_unstable();
    Ok((n, edges))
}

/// Decodes against a host; every edge must be a host edge.
pub fn decode_graph6(text: &str, host: Host) -> Result<Subgraph> {
    let (n, edges) = decode_edges(text)?;
    if n != host.vertex_count() {
        return Err(Error::Parse {
            offset: 0,
            message: format!(
                "graph has {n} vertices but host K_{}^{} has {}",
                host.parts(),
                host.part_size(),
                host.vertex_count()
            ),
        });
    }
    Subgraph::from_edges(
        host,
        edges
            .into_iter()
            .map(|(a, b)| Edge::new(VertexId(a), VertexId(b))),
    )
}
