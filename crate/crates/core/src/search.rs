//! Greedy saturation, randomized upper bounds, and exact brute-force
//! computation of sat(K_t, K_k^n) on tiny hosts.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::clique::completes_unchecked;
use crate::error::{Error, Result};
use crate::graph::{Edge, Host, Subgraph, VertexId};
use crate::verify::{is_kt_free, verify_saturated};

/// Adds host edges that complete no K_t, scanning `order` repeatedly until
/// a full pass adds nothing. `order` defaults to the canonical order of the
/// missing edges and must otherwise be a permutation of them.
pub fn greedy_saturate(sub: &Subgraph, t: usize, order: Option<&[Edge]>) -> Result<Subgraph> {
    let (free, witness) = is_kt_free(sub, t)?;
    if !free {
        return Err(Error::ContainsClique {
            t,
            witness: witness.map(|w| w.vertices).unwrap_or_default(),
        });
    }
    let missing = sub.missing_edges();
    let order: Vec<Edge> = match order {
        None => missing,
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != missing {
                return Err(Error::Contract(
                    "edge order is not a permutation of the missing edges".into(),
                ));
            }
            o.to_vec()
        }
    };
    let mut g = sub.clone();
    loop {
        let mut added = false;
        for &e in &order {
            if !g.has_edge(e.u(), e.v()) && completes_unchecked(&g, e, t).is_none() {
                g.add_edge(e)?;
                added = true;
            }
        }
        if !added {
            return Ok(g);
        }
    }
}

/// Edge order used by trial `trial` of [`random_greedy_upper_bound`].
pub fn trial_order(host: &Host, seed: u64, trial: usize) -> Vec<Edge> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let mut order: Vec<Edge> = host.edges().collect();
    order.shuffle(&mut rng);
    order
}

#[derive(Debug, Clone)]
pub struct HeuristicResult {
    pub best_size: usize,
    /// First trial attaining `best_size`.
    pub best_trial: usize,
    pub best_graph: Subgraph,
    pub per_trial_sizes: Vec<usize>,
}

/// Runs greedy saturation from the empty graph under `trials` seeded random
/// edge orders and keeps the smallest result.
pub fn random_greedy_upper_bound(
    host: &Host,
    t: usize,
    trials: usize,
    seed: u64,
) -> Result<HeuristicResult> {
    if trials == 0 {
        return Err(Error::domain("trials", 0, "trials >= 1"));
    }
    let empty = Subgraph::empty(*host);
    let graphs: Vec<Subgraph> = (0..trials)
        .into_par_iter()
        .map(|i| greedy_saturate(&empty, t, Some(&trial_order(host, seed, i))))
        .collect::<Result<_>>()?;
    let per_trial_sizes: Vec<usize> = graphs.iter().map(Subgraph::edge_count).collect();
    let (best_trial, &best_size) = per_trial_sizes
        .iter()
        .enumerate()
        .min_by_key(|&(i, &s)| (s, i))
        .expect("trials >= 1");
    Ok(HeuristicResult {
        best_size,
        best_trial,
        best_graph: graphs.into_iter().nth(best_trial).expect("index in range"),
        per_trial_sizes,
    })
}

/// Limits for [`brute_force_sat`].
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Refuse hosts with more edges than this.
    pub edge_cap: usize,
    pub max_subsets: Option<u64>,
    pub max_seconds: Option<f64>,
    /// Cut every partial subset that already contains a K_t.
    pub prune: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            edge_cap: 30,
            max_subsets: None,
            max_seconds: None,
            prune: true,
        }
    }
}

/// Outcome of [`brute_force_sat`].
#[derive(Debug, Clone)]
pub struct ExactResult {
    /// Smallest saturated size found; exact unless `wall_budget_hit`.
    pub min_size: Option<usize>,
    pub witness: Option<Subgraph>,
    /// Complete edge subsets whose saturation was tested.
    pub subsets_examined: u64,
    /// Largest cardinality enumerated in full without success.
    pub sizes_exhausted: Option<usize>,
    pub wall_budget_hit: bool,
}

/// Exact sat(K_t, host) by enumerating edge subsets in increasing size,
/// lexicographically over canonical edge indices within each size. The
/// result is the lexicographically least saturated subset of minimum size.
pub fn brute_force_sat(host: &Host, t: usize, budget: &SearchBudget) -> Result<ExactResult> {
    if t < 3 {
        return Err(Error::domain("t", t, "t >= 3"));
    }
    let edges = host.host_edge_count();
    if edges > budget.edge_cap {
        return Err(Error::EnumerationCap {
            edges,
            cap: budget.edge_cap,
        });
    }
    if host.vertex_count() > 64 {
        return Err(Error::domain("vertex_count", host.vertex_count(), "<= 64"));
    }
    let kernel = Kernel::new(host, t, budget.prune);
    let ctl = Control {
        start: Instant::now(),
        max_time: budget.max_seconds.map(Duration::from_secs_f64),
        max_subsets: budget.max_subsets,
        examined: AtomicU64::new(0),
        stop: AtomicBool::new(false),
    };

    let mut total = 0u64;
    let mut sizes_exhausted = None;
    for s in 0..=edges {
        let level = kernel.run_level(s, &ctl);
        total += level.examined;
        if let Some(chosen) = level.found {
            let witness = Subgraph::from_edges(*host, chosen.iter().map(|&i| kernel.edge(i)))?;
            let report = verify_saturated(&witness, t)?;
            if !report.is_saturated {
                return Err(Error::Contract(format!(
                    "search kernel accepted a non-saturated subset of size {s}"
                )));
            }
            return Ok(ExactResult {
                min_size: Some(s),
                witness: Some(witness),
                subsets_examined: total,
                sizes_exhausted,
                wall_budget_hit: level.budget_hit,
            });
        }
        if level.budget_hit {
            return Ok(ExactResult {
                min_size: None,
                witness: None,
                subsets_examined: total,
                sizes_exhausted,
                wall_budget_hit: true,
            });
        }
        sizes_exhausted = Some(s);
    }
    Err(Error::Contract("no saturated subgraph found".into()))
}

struct Control {
    start: Instant,
    max_time: Option<Duration>,
    max_subsets: Option<u64>,
    examined: AtomicU64,
    stop: AtomicBool,
}

impl Control {
    /// Publishes `local` leaf counts and reports whether the search must stop.
    fn flush(&self, local: u64) -> bool {
        let total = self.examined.fetch_add(local, Ordering::Relaxed) + local;
        if self.max_subsets.is_some_and(|m| total >= m)
            || self.max_time.is_some_and(|d| self.start.elapsed() >= d)
        {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }
}

struct LevelOutcome {
    found: Option<Vec<usize>>,
    examined: u64,
    budget_hit: bool,
}

struct ShardOutcome {
    found: Option<Vec<usize>>,
    examined: u64,
    aborted: bool,
}

/// Host of at most 64 vertices with `u64` neighborhoods.
struct Kernel {
    t: usize,
    prune: bool,
    edges: Vec<(usize, usize)>,
    part_masks: Vec<u64>,
    vertices: usize,
}

const FLUSH_EVERY: u64 = 1 << 12;
const NODE_CHECK_EVERY: u64 = 1 << 16;

struct Walk<'a> {
    kernel: &'a Kernel,
    ctl: &'a Control,
    shard: usize,
    best: &'a AtomicUsize,
    adj: Vec<u64>,
    chosen: Vec<usize>,
    leaves: u64,
    pending: u64,
    nodes: u64,
    /// Budget tripped.
    aborted: bool,
    /// Budget tripped, or a lower shard already won.
    halted: bool,
}

impl Kernel {
    fn new(host: &Host, t: usize, prune: bool) -> Self {
        let edges = host.edges().map(|e| (e.u().flat(), e.v().flat())).collect();
        let n = host.part_size();
        let part_masks = (0..host.parts())
            .map(|p| ((1u64 << n) - 1) << (p * n))
            .collect();
        Kernel {
            t,
            prune,
            edges,
            part_masks,
            vertices: host.vertex_count(),
        }
    }

    fn edge(&self, i: usize) -> Edge {
        let (u, v) = self.edges[i];
        Edge::new(VertexId(u), VertexId(v))
    }

    fn parts_hit(&self, mask: u64, need: usize) -> bool {
        let mut seen = 0;
        for &pm in &self.part_masks {
            if mask & pm != 0 {
                seen += 1;
                if seen >= need {
                    return true;
                }
            }
        }
        false
    }

    fn has_clique(&self, adj: &[u64], mut cand: u64, s: usize) -> bool {
        if s == 0 {
            return true;
        }
        loop {
            if !self.parts_hit(cand, s) {
                return false;
            }
            if s == 1 {
                return true;
            }
            let v = cand.trailing_zeros() as usize;
            if self.has_clique(adj, cand & adj[v], s - 1) {
                return true;
            }
            cand &= !(1u64 << v);
        }
    }

    /// Would adding (u, v) to `adj` create a K_t?
    #[inline]
    fn completes(&self, adj: &[u64], u: usize, v: usize) -> bool {
        let common = adj[u] & adj[v];
        if self.t == 3 {
            common != 0
        } else {
            self.has_clique(adj, common, self.t - 2)
        }
    }

    fn is_saturated(&self, adj: &[u64]) -> bool {
        if !self.prune {
            let all = if self.vertices == 64 {
                u64::MAX
            } else {
                (1u64 << self.vertices) - 1
            };
            if self.has_clique(adj, all, self.t) {
                return false;
            }
        }
        self.edges
            .iter()
            .all(|&(u, v)| adj[u] >> v & 1 == 1 || self.completes(adj, u, v))
    }

    fn run_level(&self, s: usize, ctl: &Control) -> LevelOutcome {
        let m = self.edges.len();
        // Shards are the length-min(s,2) prefixes, in lexicographic order.
        let shards: Vec<Vec<usize>> = match s {
            0 => vec![vec![]],
            1 => (0..m).map(|i| vec![i]).collect(),
            _ => (0..=m - s)
                .flat_map(|i| (i + 1..=m - s + 1).map(move |j| vec![i, j]))
                .collect(),
        };
        let best = AtomicUsize::new(usize::MAX);
        let outcomes: Vec<ShardOutcome> = shards
            .par_iter()
            .enumerate()
            .map(|(idx, prefix)| self.run_shard(idx, prefix, s, ctl, &best))
            .collect();

        let winner = outcomes.iter().position(|o| o.found.is_some());
        let upto = winner.map_or(outcomes.len(), |w| w + 1);
        let examined = outcomes[..upto].iter().map(|o| o.examined).sum();
        let budget_hit = outcomes[..upto].iter().any(|o| o.aborted);
        LevelOutcome {
            found: winner.and_then(|w| outcomes.into_iter().nth(w).and_then(|o| o.found)),
            examined,
            budget_hit,
        }
    }

    fn run_shard(
        &self,
        idx: usize,
        prefix: &[usize],
        s: usize,
        ctl: &Control,
        best: &AtomicUsize,
    ) -> ShardOutcome {
        if ctl.stop.load(Ordering::Relaxed) {
            return ShardOutcome {
                found: None,
                examined: 0,
                aborted: true,
            };
        }
        let mut w = Walk {
            kernel: self,
            ctl,
            shard: idx,
            best,
            adj: vec![0; self.vertices],
            chosen: Vec::with_capacity(s),
            leaves: 0,
            pending: 0,
            nodes: 0,
            aborted: false,
            halted: false,
        };
        let mut viable = true;
        for &i in prefix {
            let (u, v) = self.edges[i];
            if self.prune && self.completes(&w.adj, u, v) {
                viable = false;
                break;
            }
            w.push(i);
        }
        let found = if viable {
            let start = prefix.last().map_or(0, |&i| i + 1);
            w.dfs(start, s - prefix.len())
        } else {
            false
        };
        if w.pending > 0 {
            ctl.flush(w.pending);
        }
        if found {
            best.fetch_min(idx, Ordering::Relaxed);
        }
        ShardOutcome {
            found: found.then(|| w.chosen.clone()),
            examined: w.leaves,
            aborted: w.aborted,
        }
    }
}

impl Walk<'_> {
    #[inline]
    fn push(&mut self, i: usize) {
        let (u, v) = self.kernel.edges[i];
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.chosen.push(i);
    }

    #[inline]
    fn pop(&mut self) {
        let i = self.chosen.pop().expect("nonempty");
        let (u, v) = self.kernel.edges[i];
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Interrupted by the budget, or by an earlier shard that already won.
    fn should_stop(&mut self) -> bool {
        if self.ctl.stop.load(Ordering::Relaxed) {
            self.aborted = true;
        }
        if self.aborted || self.best.load(Ordering::Relaxed) < self.shard {
            self.halted = true;
        }
        self.halted
    }

    fn dfs(&mut self, start: usize, remaining: usize) -> bool {
        if self.halted {
            return false;
        }
        if remaining == 0 {
            self.leaves += 1;
            self.pending += 1;
            if self.pending >= FLUSH_EVERY {
                let p = std::mem::take(&mut self.pending);
                if self.ctl.flush(p) {
                    self.aborted = true;
                    self.halted = true;
                }
            }
            return self.kernel.is_saturated(&self.adj);
        }
        self.nodes += 1;
        if self.nodes % NODE_CHECK_EVERY == 0 {
            if self.pending > 0 {
                let p = std::mem::take(&mut self.pending);
                self.ctl.flush(p);
            } else if self.ctl.max_time.is_some_and(|d| self.ctl.start.elapsed() >= d) {
                self.ctl.stop.store(true, Ordering::Relaxed);
            }
            if self.should_stop() {
                return false;
            }
        }
        let m = self.kernel.edges.len();
        for i in start..=m - remaining {
            let (u, v) = self.kernel.edges[i];
            if self.kernel.prune && self.kernel.completes(&self.adj, u, v) {
                continue;
            }
            self.push(i);
            if self.dfs(i + 1, remaining - 1) {
                return true;
            }
            self.pop();
            if self.halted {
                return false;
            }
        }
        false
    }
}
