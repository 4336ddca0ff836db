use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::clique::completes_unchecked;
use crate::error::{Error, Result};
use crate::graph::{Edge, Host, Subgraph, VertexId};

use super::{ConstructionArtifacts, ConstructionKind, ConstructionSpec};

/// Adds every host edge between the hub set and its complement.
fn join_hubs_to_rest(g: &mut Subgraph, hubs: &[VertexId]) {
    let h = *g.host();
    let in_s = VertexSet::from_ids(h.vertex_count(), hubs.iter().map(|v| v.flat()));
    for &s in hubs {
        let ps = h.part_of(s);
        for w in 0..h.vertex_count() {
            let w = VertexId(w);
            if !in_s.contains(w.flat()) && h.part_of(w) != ps {
                g.add_edge(Edge::new(s, w)).expect("cross-part edge");
            }
        }
    }
}

/// Complete multipartite graph on `vs` (pairs in the same part are skipped).
fn join_all(g: &mut Subgraph, vs: &[VertexId]) {
    let h = *g.host();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if h.part_of(a) != h.part_of(b) {
                g.add_edge(Edge::new(a, b)).expect("cross-part edge");
            }
        }
    }
}

fn artifacts(
    spec: ConstructionSpec,
    graph: Subgraph,
    mut hubs: Vec<VertexId>,
    mut removed: Vec<Edge>,
) -> ConstructionArtifacts {
    hubs.sort_unstable();
    removed.sort_unstable();
    ConstructionArtifacts {
        spec,
        graph,
        hubs,
        removed,
        completion_edges: Vec::new(),
        notes: Vec::new(),
    }
}

/// G1: complete V1-V2 join minus v1^1 v2^1, with V3..Vk joined to both
/// v1^1 and v2^1.
pub fn build_g1(k: usize, n: usize) -> Result<ConstructionArtifacts> {
    let spec = ConstructionSpec::g1(k, n)?;
    let h = spec.host()?;
    let (a, b) = (h.v(1, 1), h.v(2, 1));
    let mut g = Subgraph::empty(h);
    for i in 1..=n {
        for j in 1..=n {
            if i + j >= 3 {
                g.add_edge(Edge::new(h.v(1, i), h.v(2, j)))?;
            }
        }
    }
    for part in 3..=k {
        for j in 1..=n {
            g.add_edge(Edge::new(a, h.v(part, j)))?;
            g.add_edge(Edge::new(b, h.v(part, j)))?;
        }
    }
    let mut art = artifacts(spec, g, vec![a, b], vec![Edge::new(a, b)]);
    art.notes
        .push("removed edge of the V1-V2 join read as v1^1 v2^1".into());
    Ok(art)
}

/// G2: three pairwise non-adjacent hubs v1^1, v2^1, v3^1; the rest of
/// V1, V2, V3 joined to the two hubs outside their part, and V4..Vk joined
/// to all three hubs.
pub fn build_g2(k: usize, n: usize) -> Result<ConstructionArtifacts> {
    let spec = ConstructionSpec::g2(k, n)?;
    let h = spec.host()?;
    let hubs = [h.v(1, 1), h.v(2, 1), h.v(3, 1)];
    let mut g = Subgraph::empty(h);
    for (p, _) in hubs.iter().enumerate() {
        for j in 2..=n {
            let w = h.v(p + 1, j);
            for (q, &hub) in hubs.iter().enumerate() {
                if q != p {
                    g.add_edge(Edge::new(w, hub))?;
                }
            }
        }
    }
    for part in 4..=k {
        for j in 1..=n {
            for &hub in &hubs {
                g.add_edge(Edge::new(hub, h.v(part, j)))?;
            }
        }
    }
    let removed = vec![
        Edge::new(hubs[0], hubs[1]),
        Edge::new(hubs[0], hubs[2]),
        Edge::new(hubs[1], hubs[2]),
    ];
    Ok(artifacts(spec, g, hubs.to_vec(), removed))
}

/// G_{k,n,t}: hubs v_r^1 for r <= 2t-4 form a clique minus the matching
/// {v_1^1 v_2^1, v_3^1 v_4^1, ...}; the non-hub parts of each matched pair of
/// parts are completely joined; then S is joined to its complement.
pub fn build_gknt(k: usize, n: usize, t: usize) -> Result<ConstructionArtifacts> {
    let spec = ConstructionSpec::new(ConstructionKind::Gknt, k, n, t)?;
    let h = spec.host()?;
    let m = 2 * t - 4;
    let hubs: Vec<VertexId> = (1..=m).map(|r| h.v(r, 1)).collect();
    let mut g = Subgraph::empty(h);
    join_all(&mut g, &hubs);
    let mut removed = Vec::with_capacity(t - 2);
    for r in (1..m).step_by(2) {
        let e = Edge::new(h.v(r, 1), h.v(r + 1, 1));
        g.remove_edge(e)?;
        removed.push(e);
        for i in 2..=n {
            for j in 2..=n {
                g.add_edge(Edge::new(h.v(r, i), h.v(r + 1, j)))?;
            }
        }
    }
    join_hubs_to_rest(&mut g, &hubs);
    Ok(artifacts(spec, g, hubs, removed))
}

/// Pairs `(r, s)`, `1 <= r < s <= 2t-3`, with `s - r` in `{t-2, t-1}`.
fn circulant_pairs(t: usize) -> Vec<(usize, usize)> {
    let m = 2 * t - 3;
    let mut pairs = Vec::with_capacity(m);
    for r in 1..=m {
        for s in r + 1..=m {
            if s - r == t - 2 || s - r == t - 1 {
                pairs.push((r, s));
            }
        }
    }
    pairs
}

/// True if `pairs` on `1..=m` form one cycle through every index.
fn is_hamiltonian_cycle(m: usize, pairs: &[(usize, usize)]) -> bool {
    if pairs.len() != m || m < 3 {
        return false;
    }
    let mut nbrs = vec![Vec::new(); m + 1];
    for &(a, b) in pairs {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    if nbrs[1..].iter().any(|v| v.len() != 2) {
        return false;
    }
    let (mut prev, mut cur, mut steps) = (1, nbrs[1][0], 1);
    while cur != 1 {
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        prev = cur;
        cur = next;
        steps += 1;
    }
    steps == m
}

/// H_{k,n,t}: one hub v_s^1 in each of the first 2t-3 parts, forming a
/// clique minus the cycle of pairs at index distance t-2 or t-1; then S is
/// joined to its complement.
pub fn build_hknt(k: usize, n: usize, t: usize) -> Result<ConstructionArtifacts> {
    let spec = ConstructionSpec::new(ConstructionKind::Hknt, k, n, t)?;
    let h = spec.host()?;
    let m = 2 * t - 3;
    let pairs = circulant_pairs(t);
    if !is_hamiltonian_cycle(m, &pairs) {
        return Err(Error::Contract(format!(
            "removed pairs for t = {t} do not form a single {m}-cycle"
        )));
    }
    let hubs: Vec<VertexId> = (1..=m).map(|s| h.v(s, 1)).collect();
    let mut g = Subgraph::empty(h);
    join_all(&mut g, &hubs);
    let mut removed = Vec::with_capacity(m);
    for (r, s) in pairs {
        let e = Edge::new(h.v(r, 1), h.v(s, 1));
        g.remove_edge(e)?;
        removed.push(e);
    }
    join_hubs_to_rest(&mut g, &hubs);
    let mut art = artifacts(spec, g, hubs, removed);
    art.notes
        .push("hub set read as one hub per part, v_s^1 for s <= 2t-3".into());
    Ok(art)
}

/// |S| for F_{k,n,t}: (t-2) + C(t,2) - 1.
pub fn fknt_hub_count(t: usize) -> usize {
    (t - 2) + t * (t - 1) / 2 - 1
}

/// (t-2)-subsets of {1..t} in lexicographic order.
fn lex_subsets(t: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, t: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..=t {
            cur.push(x);
            rec(x + 1, t, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, t, size, &mut Vec::with_capacity(size), &mut out);
    out
}

/// F_{k,n,t}: one designated (t-2)-clique per (t-2)-subset R of the first t
/// parts, built in lexicographic order of R; each new clique reuses the
/// t-3 vertices of the latest preceding clique on parts R \ max(R) and adds
/// a fresh vertex of V_max(R). S is then joined to its complement, and
/// S-internal host pairs are added greedily in canonical order whenever
/// they complete no K_t.
pub fn build_fknt(k: usize, n: usize, t: usize) -> Result<ConstructionArtifacts> {
    let spec = ConstructionSpec::new(ConstructionKind::Fknt, k, n, t)?;
    let h = spec.host()?;
    let mut g = Subgraph::empty(h);
    // next unused 1-based index per part
    let mut next_index = vec![1usize; t + 1];
    let mut fresh = |part: usize| {
        let v = h.v(part, next_index[part]);
        next_index[part] += 1;
        v
    };

    let mut cliques: BTreeMap<Vec<usize>, Vec<VertexId>> = BTreeMap::new();
    let mut hubs = Vec::new();
    for r in lex_subsets(t, t - 2) {
        let clique: Vec<VertexId> = if cliques.is_empty() {
            r.iter().map(|&p| fresh(p)).collect()
        } else {
            let (&top, low) = r.split_last().expect("t - 2 >= 2");
            let x = (1..top)
                .rev()
                .find(|x| !low.contains(x))
                .expect("a predecessor exists for every non-initial subset");
            let mut pred_key = low.to_vec();
            pred_key.push(x);
            pred_key.sort_unstable();
            let pred = &cliques[&pred_key];
            let mut c: Vec<VertexId> = pred_key
                .iter()
                .zip(pred)
                .filter(|(p, _)| low.contains(p))
                .map(|(_, &v)| v)
                .collect();
            c.push(fresh(top));
            c
        };
        for &v in &clique {
            if !hubs.contains(&v) {
                hubs.push(v);
            }
        }
        join_all(&mut g, &clique);
        cliques.insert(r, clique);
    }
    for (r, c) in &cliques {
        let complete = c
            .iter()
            .enumerate()
            .all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if !complete {
            return Err(Error::Contract(format!(
                "designated clique for parts {r:?} is not complete after the hub phase"
            )));
        }
    }
    debug_assert_eq!(hubs.len(), fknt_hub_count(t));

    join_hubs_to_rest(&mut g, &hubs);

    hubs.sort_unstable();
    let mut completion = Vec::new();
    for (i, &a) in hubs.iter().enumerate() {
        for &b in &hubs[i + 1..] {
            if h.part_of(a) == h.part_of(b) || g.has_edge(a, b) {
                continue;
            }
            let e = Edge::new(a, b);
            if completes_unchecked(&g, e, t).is_none() {
                g.add_edge(e)?;
                completion.push(e);
            }
        }
    }

    let mut art = artifacts(spec, g, hubs, Vec::new());
    art.completion_edges = completion;
    art.notes.extend([
        "fresh hub vertices take the lowest unused index in their part".to_string(),
        "each clique reuses the latest preceding clique containing R minus max(R)".to_string(),
        "greedy completion scans S-internal pairs in canonical order".to_string(),
    ]);
    Ok(art)
}

/// Triangles deleted from the hub graph of I_{k,n,t}, as (part, index)
/// coordinates. For t = 0 (mod 4) the regular six-part blocks cover the
/// first 3(t-2)/2 - 9 parts and the nine-part pattern covers the rest.
pub fn iknt_triangles(t: usize) -> Vec<[(usize, usize); 3]> {
    let block = |b: usize| {
        [
            [(b + 1, 1), (b + 2, 1), (b + 3, 1)],
            [(b + 4, 1), (b + 5, 1), (b + 6, 1)],
            [(b + 1, 2), (b + 3, 2), (b + 5, 2)],
            [(b + 2, 2), (b + 4, 2), (b + 6, 2)],
        ]
    };
    let p = 3 * (t - 2) / 2;
    let mut out = Vec::new();
    if t % 4 == 2 {
        for i in 0..(t - 2) / 4 {
            out.extend(block(6 * i));
        }
    } else {
        for i in 0..(t - 8) / 4 {
            out.extend(block(6 * i));
        }
        let b = p - 9;
        out.extend([
            [(b + 1, 1), (b + 2, 1), (b + 3, 1)],
            [(b + 4, 1), (b + 5, 1), (b + 6, 1)],
            [(b + 7, 1), (b + 8, 1), (b + 9, 1)],
            [(b + 1, 2), (b + 4, 2), (b + 7, 2)],
            [(b + 2, 2), (b + 5, 2), (b + 8, 2)],
            [(b + 3, 2), (b + 6, 2), (b + 9, 2)],
        ]);
    }
    out
}

/// I_{k,n,t}: S = {v_p^1, v_p^2 : p <= 3(t-2)/2} with the host's induced
/// graph on S, minus a fixed family of triangles; then S is joined to its
/// complement.
pub fn build_iknt(k: usize, n: usize, t: usize) -> Result<ConstructionArtifacts> {
    let spec = ConstructionSpec::new(ConstructionKind::Iknt, k, n, t)?;
    let h: Host = spec.host()?;
    let p = 3 * (t - 2) / 2;
    let hubs: Vec<VertexId> = (1..=p).flat_map(|q| [h.v(q, 1), h.v(q, 2)]).collect();
    let mut g = Subgraph::empty(h);
    join_all(&mut g, &hubs);
    let mut removed = Vec::new();
    for tri in iknt_triangles(t) {
        let [a, b, c] = tri.map(|(q, i)| h.v(q, i));
        for e in [Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)] {
            if !g.remove_edge(e)? {
                return Err(Error::Contract(format!("triangle edge {e} deleted twice")));
            }
            removed.push(e);
        }
    }
    join_hubs_to_rest(&mut g, &hubs);
    let mut art = artifacts(spec, g, hubs, removed);
    art.notes.push("triangle pattern selected by t mod 4".into());
    if t % 4 == 0 {
        art.notes.push(
            "regular blocks run over i < (t-8)/4 so they tile the parts with the nine-part pattern"
                .into(),
        );
    }
    Ok(art)
}
