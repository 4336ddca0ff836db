mod common;

use common::{is_saturated_naive, random_kt_free};
use multisat::constructions::{build_g1, build_g2};
use multisat::search::trial_order;
use multisat::{
    brute_force_sat, build, greedy_saturate, random_greedy_upper_bound, verify_saturated,
    ConstructionKind, ConstructionSpec, Edge, Host, SearchBudget, Subgraph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn greedy_random_orders_always_saturate() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..150 {
        let host = Host::new(rng.gen_range(3..=5), rng.gen_range(2..=3)).unwrap();
        let t = rng.gen_range(3..=4);
        let seed = random_kt_free(host, t, rng.gen_range(0..10), &mut rng);
        let mut order = seed.missing_edges();
        order.shuffle(&mut rng);
        let g = greedy_saturate(&seed, t, Some(&order)).unwrap();
        assert!(verify_saturated(&g, t).unwrap().is_saturated);
        assert!(seed.edges().all(|e| g.has_edge(e.u(), e.v())));
    }
}

#[test]
fn greedy_fixed_point_on_saturated_input() {
    let g1 = build_g1(3, 3).unwrap().graph;
    assert_eq!(greedy_saturate(&g1, 3, None).unwrap(), g1);
    let g2 = build_g2(5, 2).unwrap().graph;
    assert_eq!(greedy_saturate(&g2, 3, None).unwrap(), g2);
}

#[test]
fn upper_bound_on_smallest_host() {
    let h = Host::new(3, 2).unwrap();
    let a = random_greedy_upper_bound(&h, 3, 64, 11).unwrap();
    assert!((6..=12).contains(&a.best_size));
    assert_eq!(a.per_trial_sizes.len(), 64);
    assert_eq!(a.best_graph.edge_count(), a.best_size);
    assert!(verify_saturated(&a.best_graph, 3).unwrap().is_saturated);
    let b = random_greedy_upper_bound(&h, 3, 64, 11).unwrap();
    assert_eq!(a.per_trial_sizes, b.per_trial_sizes);
}

#[test]
fn single_trial_equals_greedy_under_its_order() {
    let h = Host::new(4, 2).unwrap();
    for seed in 0..5 {
        let r = random_greedy_upper_bound(&h, 3, 1, seed).unwrap();
        let order = trial_order(&h, seed, 0);
        let g = greedy_saturate(&Subgraph::empty(h), 3, Some(&order)).unwrap();
        assert_eq!(r.best_graph, g);
        assert_eq!(r.per_trial_sizes, vec![g.edge_count()]);
    }
}

#[test]
fn brute_force_examples() {
    let b = SearchBudget::default();
    let r = brute_force_sat(&Host::new(3, 2).unwrap(), 3, &b).unwrap();
    assert_eq!(r.min_size, Some(6));
    let w = r.witness.unwrap();
    assert!(is_saturated_naive(&w, 3));
    let r = brute_force_sat(&Host::new(3, 2).unwrap(), 4, &b).unwrap();
    assert_eq!(r.min_size, Some(12));
}

/// Independent oracle: scan every subset of the 12 host edges of K_3^2 by
/// bitmask and test saturation by definition.
#[test]
fn brute_force_matches_mask_scan_on_k3_2() {
    let h = Host::new(3, 2).unwrap();
    let all: Vec<Edge> = h.edges().collect();
    for t in [3, 4] {
        let mut best: Option<(u32, Vec<Edge>)> = None;
        for mask in 0u32..1 << all.len() {
            let edges: Vec<Edge> = (0..all.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| all[i])
                .collect();
            let g = Subgraph::from_edges(h, edges.clone()).unwrap();
            if is_saturated_naive(&g, t) {
                let c = mask.count_ones();
                let better = match &best {
                    None => true,
                    Some((bc, be)) => c < *bc || (c == *bc && edges < *be),
                };
                if better {
                    best = Some((c, edges));
                }
            }
        }
        let (size, edges) = best.unwrap();
        let r = brute_force_sat(&h, t, &SearchBudget::default()).unwrap();
        assert_eq!(r.min_size, Some(size as usize));
        assert_eq!(r.witness.unwrap().edges().collect::<Vec<_>>(), edges);
    }
}

#[test]
fn pruning_does_not_change_the_answer() {
    let h = Host::new(3, 2).unwrap();
    let pruned = brute_force_sat(&h, 3, &SearchBudget::default()).unwrap();
    let plain = brute_force_sat(
        &h,
        3,
        &SearchBudget {
            prune: false,
            ..SearchBudget::default()
        },
    )
    .unwrap();
    assert_eq!(pruned.min_size, plain.min_size);
    assert_eq!(pruned.witness, plain.witness);
    assert!(plain.subsets_examined >= pruned.subsets_examined);
}

#[test]
fn exact_below_every_construction() {
    let b = SearchBudget::default();
    for (k, n) in [(3, 2), (4, 2), (3, 3)] {
        let host = Host::new(k, n).unwrap();
        for t in 3..=4 {
            let exact = brute_force_sat(&host, t, &b).unwrap().min_size.unwrap();
            for kind in ConstructionKind::ALL {
                let tt = kind.fixed_t().unwrap_or(t);
                if tt != t {
                    continue;
                }
                if let Ok(spec) = ConstructionSpec::new(kind, k, n, t) {
                    let a = build(&spec).unwrap();
                    assert!(exact <= a.graph.edge_count(), "{spec}");
                }
            }
        }
    }
}

#[test]
fn statistics_independent_of_thread_count() {
    let h = Host::new(4, 2).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| brute_force_sat(&h, 3, &SearchBudget::default()).unwrap())
    };
    let a = run(1);
    let b = run(4);
    assert_eq!(a.min_size, b.min_size);
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.subsets_examined, b.subsets_examined);
    assert_eq!(a.sizes_exhausted, b.sizes_exhausted);
}

#[test]
fn time_budget_trips() {
    let h = Host::new(3, 3).unwrap();
    let r = brute_force_sat(
        &h,
        3,
        &SearchBudget {
            max_seconds: Some(0.0),
            ..SearchBudget::default()
        },
    )
    .unwrap();
    assert!(r.wall_budget_hit);
}
