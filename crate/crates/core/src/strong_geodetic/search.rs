//! Exact search for strong geodetic sets.
//!
//! For a fixed set `S` the search backtracks over the pairs of `S` (fewest geodesics first),
//! choosing one geodesic per pair. A branch is cut when the still-uncovered vertices are not
//! inside the union of intervals of the unassigned pairs, or when even the best single path of
//! each unassigned pair could not jointly reach enough uncovered vertices. Candidate paths of a
//! pair that hit the uncovered set identically are tried once.
//!
//! Subsets are swept in rounds with a growing per-subset node limit; a subset that runs out of
//! nodes is retried in the next round, and the last round has no limit. A size is reported
//! absent only after every subset got a definitive answer.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;

use super::{bounds::covering_lower_bound, Certificate, GeodesicRecord, SolverConfig};
use crate::bitset::VertexSet;
use crate::error::{invalid, Error, Result};
use crate::geodesics::{build_dag, enumerate_geodesics};
use crate::graph::{distance_matrix, Graph, VertexId, VertexPath};

const BLOCK: usize = 2048;
const DEADLINE_POLL: u64 = 512;
const FIRST_NODE_LIMIT: u64 = 1 << 12;
const LAST_NODE_LIMIT: u64 = 1 << 28;

struct PairGeodesics {
    paths: Vec<VertexPath>,
    sets: Vec<VertexSet>,
    count: BigUint,
    truncated: bool,
}

enum Outcome {
    Found(Certificate),
    Absent,
    Truncated,
}

enum Stop {
    Timeout,
    NodeLimit,
}

/// Per-graph caches shared by every subset the solver looks at.
pub(crate) struct SearchContext<'g> {
    graph: &'g Graph,
    dist: Vec<Vec<usize>>,
    all: VertexSet,
    cap: usize,
    intervals: Vec<OnceLock<VertexSet>>,
    geodesics: Vec<OnceLock<Arc<PairGeodesics>>>,
}

impl<'g> SearchContext<'g> {
    pub(crate) fn new(graph: &'g Graph, cap: usize) -> Result<Self> {
        graph.ensure_connected()?;
        let n = graph.vertex_count();
        Ok(Self {
            graph,
            dist: distance_matrix(graph)?,
            all: VertexSet::full(n),
            cap,
            intervals: (0..n * n).map(|_| OnceLock::new()).collect(),
            geodesics: (0..n * n).map(|_| OnceLock::new()).collect(),
        })
    }

    fn n(&self) -> usize {
        self.dist.len()
    }

    fn interval(&self, u: VertexId, v: VertexId) -> &VertexSet {
        let (u, v) = (u.min(v), u.max(v));
        self.intervals[u * self.n() + v].get_or_init(|| {
            let d = self.dist[u][v];
            VertexSet::from_iter_with_capacity(
                self.n(),
                (0..self.n()).filter(|&w| self.dist[u][w] + self.dist[w][v] == d),
            )
        })
    }

    fn pair_geodesics(&self, u: VertexId, v: VertexId) -> &Arc<PairGeodesics> {
        debug_assert!(u < v);
        self.geodesics[u * self.n() + v].get_or_init(|| {
            let dag = build_dag(self.graph, u).expect("graph checked connected");
            let mut it = enumerate_geodesics(&dag, v, self.cap).expect("cap validated");
            let paths: Vec<VertexPath> = it.by_ref().collect();
            let sets = paths
                .iter()
                .map(|p| VertexSet::from_iter_with_capacity(self.n(), p.vertices().iter().copied()))
                .collect();
            Arc::new(PairGeodesics {
                paths,
                sets,
                count: dag.sigma(v).clone(),
                truncated: it.truncated(),
            })
        })
    }

    /// Cheap necessary conditions: interval cover and path-interior capacity.
    fn passes_precheck(&self, set: &[VertexId]) -> bool {
        let n = self.n();
        if set.len() == 1 {
            return n == 1;
        }
        let capacity: usize = set
            .iter()
            .tuple_combinations()
            .map(|(&u, &v)| self.dist[u][v] - 1)
            .sum();
        if capacity + set.len() < n {
            return false;
        }
        let mut reach = VertexSet::from_iter_with_capacity(n, set.iter().copied());
        for (&u, &v) in set.iter().tuple_combinations() {
            reach.union_with(self.interval(u, v));
        }
        reach == self.all
    }

    /// Decides whether `set` (sorted, distinct) admits a covering geodesic selection.
    fn search(
        &self,
        set: &[VertexId],
        deadline: Option<Instant>,
        node_limit: Option<u64>,
    ) -> Result<Outcome, Stop> {
        let n = self.n();
        if set.len() == 1 {
            return Ok(if n == 1 {
                Outcome::Found(Certificate {
                    vertices: set.to_vec(),
                    geodesics: Vec::new(),
                })
            } else {
                Outcome::Absent
            });
        }
        if !self.passes_precheck(set) {
            return Ok(Outcome::Absent);
        }
        let mut pairs: Vec<(VertexId, VertexId, Arc<PairGeodesics>)> = set
            .iter()
            .tuple_combinations()
            .map(|(&u, &v)| (u, v, Arc::clone(self.pair_geodesics(u, v))))
            .collect();
        pairs.sort_by(|a, b| a.2.count.cmp(&b.2.count).then((a.0, a.1).cmp(&(b.0, b.1))));
        let truncated = pairs.iter().any(|p| p.2.truncated);

        let mut suffix_reach = vec![VertexSet::new(n); pairs.len() + 1];
        for i in (0..pairs.len()).rev() {
            let mut acc = suffix_reach[i + 1].clone();
            acc.union_with(self.interval(pairs[i].0, pairs[i].1));
            suffix_reach[i] = acc;
        }

        let mut state = Backtrack {
            ctx: self,
            pairs: &pairs,
            suffix_reach: &suffix_reach,
            choice: vec![0; pairs.len()],
            deadline,
            node_limit: node_limit.unwrap_or(u64::MAX),
            nodes: 0,
        };
        let covered = VertexSet::from_iter_with_capacity(n, set.iter().copied());
        if state.descend(0, &covered)? {
            let mut geodesics: Vec<GeodesicRecord> = pairs
                .iter()
                .zip(&state.choice)
                .map(|((u, v, pg), &idx)| GeodesicRecord {
                    u: *u,
                    v: *v,
                    path: pg.paths[idx].clone(),
                })
                .collect();
            geodesics.sort_by_key(|r| (r.u, r.v));
            return Ok(Outcome::Found(Certificate {
                vertices: set.to_vec(),
                geodesics,
            }));
        }
        Ok(if truncated {
            Outcome::Truncated
        } else {
            Outcome::Absent
        })
    }
}

struct Backtrack<'a, 'g> {
    ctx: &'a SearchContext<'g>,
    pairs: &'a [(VertexId, VertexId, Arc<PairGeodesics>)],
    suffix_reach: &'a [VertexSet],
    choice: Vec<usize>,
    deadline: Option<Instant>,
    node_limit: u64,
    nodes: u64,
}

impl Backtrack<'_, '_> {
    fn descend(&mut self, level: usize, covered: &VertexSet) -> Result<bool, Stop> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Stop::NodeLimit);
        }
        if self.nodes.is_multiple_of(DEADLINE_POLL) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Stop::Timeout);
                }
            }
        }
        if *covered == self.ctx.all {
            // remaining pairs keep their lexicographically first geodesic
            for c in &mut self.choice[level..] {
                *c = 0;
            }
            return Ok(true);
        }
        if level == self.pairs.len() {
            return Ok(false);
        }
        let uncovered = self.ctx.all.difference(covered);
        if !uncovered.is_subset(&self.suffix_reach[level]) {
            return Ok(false);
        }
        let need = uncovered.len();
        let mut reachable = 0;
        for (_, _, pg) in &self.pairs[level..] {
            reachable += pg
                .sets
                .iter()
                .map(|s| s.intersection_len(&uncovered))
                .max()
                .unwrap_or(0);
            if reachable >= need {
                break;
            }
        }
        if reachable < need {
            return Ok(false);
        }

        let pg = Arc::clone(&self.pairs[level].2);
        let mut tried: HashSet<VertexSet> = HashSet::new();
        for (idx, path_set) in pg.sets.iter().enumerate() {
            let hit = path_set.intersection(&uncovered);
            if !tried.insert(hit) {
                continue;
            }
            let mut next = covered.clone();
            next.union_with(path_set);
            self.choice[level] = idx;
            if self.descend(level + 1, &next)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn deadline_of(cfg: &SolverConfig) -> Option<Instant> {
    cfg.budget.map(|b| Instant::now() + b)
}

fn normalize_set(g: &Graph, set: &[VertexId]) -> Result<Vec<VertexId>> {
    if set.is_empty() {
        return Err(invalid("vertex set must be nonempty"));
    }
    for &v in set {
        g.check_vertex(v)?;
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(sorted)
}

/// Searches for one geodesic per pair of `set` that together cover every vertex.
///
/// `Ok(None)` means no such selection exists. If some pair's enumeration was truncated by
/// `cfg.cap` and nothing was found, the result is [`Error::TruncationInconclusive`].
pub fn has_assignment(
    g: &Graph,
    set: &[VertexId],
    cfg: &SolverConfig,
) -> Result<Option<Certificate>> {
    cfg.validate()?;
    let set = normalize_set(g, set)?;
    let ctx = SearchContext::new(g, cfg.cap)?;
    match ctx.search(&set, deadline_of(cfg), None) {
        Ok(Outcome::Found(c)) => Ok(Some(c)),
        Ok(Outcome::Absent) => Ok(None),
        Ok(Outcome::Truncated) => Err(Error::TruncationInconclusive { size: set.len() }),
        Err(_) => Err(Error::BudgetExhausted { size: set.len() }),
    }
}

enum Verdict {
    Found(Certificate),
    Deferred,
    Settled,
}

fn search_level(
    ctx: &SearchContext<'_>,
    size: usize,
    cfg: &SolverConfig,
    deadline: Option<Instant>,
    pool: Option<&rayon::ThreadPool>,
) -> Result<Option<Certificate>> {
    let n = ctx.n();
    let mut inconclusive = false;

    for hint in &cfg.hints {
        let Ok(hint) = normalize_set(ctx.graph, hint) else {
            continue;
        };
        if hint.len() != size {
            continue;
        }
        match ctx.search(&hint, deadline, None) {
            Ok(Outcome::Found(c)) => return Ok(Some(c)),
            Ok(Outcome::Absent) => {}
            Ok(Outcome::Truncated) => inconclusive = true,
            Err(_) => return Err(Error::BudgetExhausted { size }),
        }
    }

    let saw_truncation = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let evaluate = |set: &Vec<VertexId>, limit: Option<u64>| -> Verdict {
        match ctx.search(set, deadline, limit) {
            Ok(Outcome::Found(c)) => Verdict::Found(c),
            Ok(Outcome::Absent) => Verdict::Settled,
            Ok(Outcome::Truncated) => {
                saw_truncation.store(true, Ordering::Relaxed);
                Verdict::Settled
            }
            Err(Stop::NodeLimit) => Verdict::Deferred,
            Err(Stop::Timeout) => {
                timed_out.store(true, Ordering::Relaxed);
                Verdict::Settled
            }
        }
    };
    // Runs one block; returns the first certificate in block order and appends deferred sets.
    let run_block = |block: Vec<Vec<VertexId>>,
                     limit: Option<u64>,
                     deferred: &mut Vec<Vec<VertexId>>|
     -> Result<Option<Certificate>> {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Error::BudgetExhausted { size });
        }
        let verdicts: Vec<Verdict> = match pool {
            None => {
                let mut out = Vec::with_capacity(block.len());
                for set in &block {
                    let v = evaluate(set, limit);
                    let stop = matches!(v, Verdict::Found(_));
                    out.push(v);
                    if stop {
                        break;
                    }
                }
                out
            }
            Some(pool) => pool.install(|| block.par_iter().map(|s| evaluate(s, limit)).collect()),
        };
        if timed_out.load(Ordering::Relaxed) && !cfg.deterministic {
            return Err(Error::BudgetExhausted { size });
        }
        for (set, verdict) in block.into_iter().zip(verdicts) {
            match verdict {
                Verdict::Found(c) => return Ok(Some(c)),
                Verdict::Deferred => deferred.push(set),
                Verdict::Settled => {}
            }
        }
        if timed_out.load(Ordering::Relaxed) {
            return Err(Error::BudgetExhausted { size });
        }
        Ok(None)
    };

    let mut limit = FIRST_NODE_LIMIT;
    let mut pending = Vec::new();
    for block in &(0..n).combinations(size).chunks(BLOCK) {
        if let Some(c) = run_block(block.collect(), Some(limit), &mut pending)? {
            return Ok(Some(c));
        }
    }
    while !pending.is_empty() {
        limit = limit.saturating_mul(16);
        let round_limit = (limit <= LAST_NODE_LIMIT).then_some(limit);
        let mut next = Vec::new();
        let mut sets = pending.into_iter();
        loop {
            let block: Vec<Vec<VertexId>> = sets.by_ref().take(BLOCK).collect();
            if block.is_empty() {
                break;
            }
            if let Some(c) = run_block(block, round_limit, &mut next)? {
                return Ok(Some(c));
            }
        }
        pending = next;
    }

    if inconclusive || saw_truncation.load(Ordering::Relaxed) {
        return Err(Error::TruncationInconclusive { size });
    }
    Ok(None)
}

fn thread_pool(cfg: &SolverConfig) -> Result<Option<rayon::ThreadPool>> {
    if cfg.workers <= 1 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map(Some)
        .map_err(|e| invalid(format!("cannot start worker pool: {e}")))
}

/// Searches every set of exactly `size` vertices (hints first, then lexicographic order).
///
/// `Ok(None)` is a proof that no strong geodetic set of that size exists.
pub fn find_strong_geodetic_set(
    g: &Graph,
    size: usize,
    cfg: &SolverConfig,
) -> Result<Option<Certificate>> {
    cfg.validate()?;
    if size == 0 || size > g.vertex_count() {
        return Err(invalid(format!(
            "set size {size} outside [1, {}]",
            g.vertex_count()
        )));
    }
    let ctx = SearchContext::new(g, cfg.cap)?;
    let pool = thread_pool(cfg)?;
    search_level(&ctx, size, cfg, deadline_of(cfg), pool.as_ref())
}

/// Exact strong geodetic number with a witness certificate.
///
/// Sizes are tried upward from the covering lower bound; a size is only skipped after its
/// search finished with a definitive absence.
pub fn strong_geodetic_number(g: &Graph, cfg: &SolverConfig) -> Result<(usize, Certificate)> {
    cfg.validate()?;
    g.ensure_connected()?;
    let n = g.vertex_count();
    if n == 1 {
        return Ok((
            1,
            Certificate {
                vertices: vec![0],
                geodesics: Vec::new(),
            },
        ));
    }
    let ctx = SearchContext::new(g, cfg.cap)?;
    let pool = thread_pool(cfg)?;
    let deadline = deadline_of(cfg);
    let start = covering_lower_bound(g)?.max(2);
    for size in start..=n {
        if let Some(cert) = search_level(&ctx, size, cfg, deadline, pool.as_ref())? {
            return Ok((size, cert));
        }
    }
    unreachable!("the whole vertex set is always strong geodetic")
}

/// Classical geodetic number: smallest `S` whose pairwise intervals cover every vertex.
pub fn geodetic_number(g: &Graph) -> Result<(usize, Vec<VertexId>)> {
    let ctx = SearchContext::new(g, 1)?;
    let n = ctx.n();
    if n == 1 {
        return Ok((1, vec![0]));
    }
    for size in 2..=n {
        for set in (0..n).combinations(size) {
            let mut reach = VertexSet::from_iter_with_capacity(n, set.iter().copied());
            for (&u, &v) in set.iter().tuple_combinations() {
                reach.union_with(ctx.interval(u, v));
            }
            if reach == ctx.all {
                return Ok((size, set));
            }
        }
    }
    unreachable!("the whole vertex set covers itself")
}
