//! Shortest-path DAGs, geodesic counting and lexicographic enumeration, and intervals.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::graph::{bfs_distances, Graph, VertexId, VertexPath};

/// Default per-pair enumeration cap.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// BFS layering from a single source: distances, geodesic predecessors/successors, and
/// per-vertex geodesic counts.
#[derive(Debug, Clone)]
pub struct ShortestPathDag {
    source: VertexId,
    dist: Vec<usize>,
    preds: Vec<Vec<VertexId>>,
    succs: Vec<Vec<VertexId>>,
    sigma: Vec<BigUint>,
}

impl ShortestPathDag {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn dist(&self) -> &[usize] {
        &self.dist
    }

    pub fn distance(&self, v: VertexId) -> usize {
        self.dist[v]
    }

    /// Sorted predecessors of `v` on geodesics from the source.
    pub fn preds(&self, v: VertexId) -> &[VertexId] {
        &self.preds[v]
    }

    /// Sorted successors of `v` on geodesics from the source.
    pub fn succs(&self, v: VertexId) -> &[VertexId] {
        &self.succs[v]
    }

    pub fn sigma(&self, v: VertexId) -> &BigUint {
        &self.sigma[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    /// Vertices lying on at least one source→target geodesic, as a membership mask.
    fn ancestors_mask(&self, target: VertexId) -> Vec<bool> {
        let mut mask = vec![false; self.vertex_count()];
        let mut stack = vec![target];
        mask[target] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.preds[v] {
                if !mask[u] {
                    mask[u] = true;
                    stack.push(u);
                }
            }
        }
        mask
    }
}

pub fn build_dag(g: &Graph, source: VertexId) -> Result<ShortestPathDag> {
    let dist = bfs_distances(g, source)?;
    let n = g.vertex_count();
    let mut preds = vec![Vec::new(); n];
    let mut succs = vec![Vec::new(); n];
    for v in 0..n {
        for &w in g.neighbors(v) {
            if dist[w] == dist[v] + 1 {
                succs[v].push(w);
                preds[w].push(v);
            }
        }
    }
    // neighbors are sorted and v ascends, so preds are already sorted
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut sigma = vec![BigUint::zero(); n];
    sigma[source] = BigUint::one();
    for &v in order.iter().skip(1) {
        let mut total = BigUint::zero();
        for &u in &preds[v] {
            total += &sigma[u];
        }
        sigma[v] = total;
    }
    Ok(ShortestPathDag {
        source,
        dist,
        preds,
        succs,
        sigma,
    })
}

/// Number of distinct source→target geodesics.
pub fn count_geodesics(dag: &ShortestPathDag, target: VertexId) -> BigUint {
    dag.sigma(target).clone()
}

/// Lazy, lexicographic enumeration of source→target geodesics, capped.
///
/// After the iterator returns `None`, [`GeodesicEnumeration::truncated`] reports whether
/// geodesics beyond the cap were skipped.
pub struct GeodesicEnumeration<'a> {
    dag: &'a ShortestPathDag,
    target: VertexId,
    on_geodesic: Vec<bool>,
    // (vertex, index of the next successor to try)
    stack: Vec<(VertexId, usize)>,
    emitted: usize,
    cap: usize,
    primed: bool,
    done: bool,
    truncated: bool,
}

impl GeodesicEnumeration<'_> {
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Runs the DFS until the stack spells a complete source→target path.
    fn seek_target(&mut self) -> bool {
        while let Some(top) = self.stack.last_mut() {
            let v = top.0;
            if v == self.target {
                return true;
            }
            let succs = self.dag.succs(v);
            let mut pushed = None;
            while top.1 < succs.len() {
                let w = succs[top.1];
                top.1 += 1;
                if self.on_geodesic[w] {
                    pushed = Some(w);
                    break;
                }
            }
            match pushed {
                Some(w) => self.stack.push((w, 0)),
                None => {
                    self.stack.pop();
                }
            }
        }
        false
    }
}

impl Iterator for GeodesicEnumeration<'_> {
    type Item = VertexPath;

    fn next(&mut self) -> Option<VertexPath> {
        if self.done {
            return None;
        }
        if self.primed {
            // backtrack from the previously emitted path
            self.stack.pop();
        }
        self.primed = true;
        if !self.seek_target() {
            self.done = true;
            return None;
        }
        if self.emitted == self.cap {
            self.truncated = true;
            self.done = true;
            return None;
        }
        self.emitted += 1;
        Some(VertexPath(self.stack.iter().map(|&(v, _)| v).collect()))
    }
}

pub fn enumerate_geodesics(
    dag: &ShortestPathDag,
    target: VertexId,
    cap: usize,
) -> Result<GeodesicEnumeration<'_>> {
    if cap == 0 {
        return Err(invalid("enumeration cap must be at least 1"));
    }
    if target >= dag.vertex_count() {
        return Err(invalid(format!("target {target} out of range")));
    }
    Ok(GeodesicEnumeration {
        dag,
        target,
        on_geodesic: dag.ancestors_mask(target),
        stack: vec![(dag.source(), 0)],
        emitted: 0,
        cap,
        primed: false,
        done: false,
        truncated: false,
    })
}

/// `{ v : d(x,v) + d(v,y) = d(x,y) }`, ascending.
pub fn interval(g: &Graph, x: VertexId, y: VertexId) -> Result<Vec<VertexId>> {
    g.check_vertex(y)?;
    let dx = bfs_distances(g, x)?;
    let dy = bfs_distances(g, y)?;
    let d = dx[y];
    Ok((0..g.vertex_count())
        .filter(|&v| dx[v] + dy[v] == d)
        .collect())
}

/// True iff consecutive vertices are adjacent and the path length equals the endpoint distance.
pub fn is_geodesic(g: &Graph, path: &VertexPath) -> Result<bool> {
    let verts = path.vertices();
    let Some(&first) = verts.first() else {
        return Err(invalid("path is empty"));
    };
    for &v in verts {
        g.check_vertex(v)?;
    }
    if !verts.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return Ok(false);
    }
    let dist = g.raw_bfs(first);
    Ok(dist[*verts.last().unwrap()] == Some(path.length()))
}
