mod common;

use multisat::{Edge, Host, Subgraph, VertexId};
use multisat::constructions::build_g1;
use proptest::prelude::*;

fn host_strategy() -> impl Strategy<Value = Host> {
    (3usize..=6, 2usize..=4).prop_map(|(k, n)| Host::new(k, n).unwrap())
}

proptest! {
    #[test]
    fn edits_preserve_invariants(
        host in host_strategy(),
        ops in prop::collection::vec((any::<bool>(), 0usize..64, 0usize..64), 0..120),
    ) {
        let mut g = Subgraph::empty(host);
        let vc = host.vertex_count();
        for (add, a, b) in ops {
            let (a, b) = (VertexId(a % vc), VertexId(b % vc));
            let e = Edge::new(a, b);
            let r = if add { g.add_edge(e) } else { g.remove_edge(e) };
            prop_assert_eq!(r.is_ok(), host.part_of(a) != host.part_of(b));
        }
        prop_assert!(g.check_invariants().is_ok());
        prop_assert_eq!(g.missing_edges().len() + g.edge_count(), host.host_edge_count());
        let k = host.parts();
        let mut pair_sum = 0;
        for i in 1..=k {
            for j in i + 1..=k {
                pair_sum += g.part_pair_edge_count(i, j).unwrap();
            }
        }
        prop_assert_eq!(pair_sum, g.edge_count());
        prop_assert_eq!(g.edges().count(), g.edge_count());
    }

    #[test]
    fn locate_unlocate_bijection(host in host_strategy()) {
        for p in 1..=host.parts() {
            for i in 1..=host.part_size() {
                let v = host.locate(p, i).unwrap();
                prop_assert_eq!(host.unlocate(v.flat()).unwrap(), (p, i));
                prop_assert_eq!(host.part_of(v), p);
            }
        }
    }
}

#[test]
fn g1_missing_edges_on_smallest_host() {
    let a = build_g1(3, 2).unwrap();
    assert_eq!(a.graph.edge_count(), 7);
    let missing: Vec<[usize; 2]> = a.graph.missing_edges().into_iter().map(Into::into).collect();
    // Oracle: host edges of K_3^2 minus the hand-listed G1 edge set.
    let h = Host::new(3, 2).unwrap();
    let g1_edges = [[0, 3], [1, 2], [1, 3], [0, 4], [0, 5], [2, 4], [2, 5]];
    let expect: Vec<[usize; 2]> = h
        .edges()
        .map(Into::into)
        .filter(|e: &[usize; 2]| !g1_edges.contains(e))
        .collect();
    assert_eq!(missing, expect);
    assert_eq!(missing, vec![[0, 2], [1, 4], [1, 5], [3, 4], [3, 5]]);
}

#[test]
fn g1_part_pair_counts() {
    let a = build_g1(3, 2).unwrap();
    assert_eq!(a.graph.part_pair_edge_count(1, 2).unwrap(), 3);
    assert_eq!(a.graph.part_pair_edge_count(1, 3).unwrap(), 2);
    assert_eq!(a.graph.part_pair_edge_count(2, 3).unwrap(), 2);
    for n in 2..8 {
        let a = build_g1(5, n).unwrap();
        assert_eq!(a.graph.part_pair_edge_count(1, 2).unwrap(), n * n - 1);
    }
}
