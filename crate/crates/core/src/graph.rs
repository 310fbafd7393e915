//! Simple undirected graphs, path/cycle/product builders, and BFS metric queries.
//!
//! Vertex ids are contiguous `0..vertex_count`. Neighbor lists are kept sorted so
//! every traversal order in the crate is deterministic.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{invalid, Error, Result};

pub type VertexId = usize;

/// A simple, undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicates, and out-of-range ids.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(invalid(format!(
                    "edge {u}-{v} out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(invalid(format!("duplicate edge {v}-{}", w[0])));
            }
        }
        Ok(Self { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(invalid(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.vertex_count()
            )))
        }
    }

    /// Parses the edge-list text format.
    ///
    /// An optional `p <num_vertices>` header fixes the vertex count; otherwise it is one more
    /// than the largest id seen. Blank lines and lines starting with `#` are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut max_id: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "p" {
                if declared.is_some() || !edges.is_empty() {
                    return Err(err("header must appear once, before any edge".into()));
                }
                let [_, count] = tokens[..] else {
                    return Err(err(format!("malformed header {line:?}")));
                };
                declared = Some(
                    count
                        .parse()
                        .map_err(|_| err(format!("invalid vertex count {count:?}")))?,
                );
                continue;
            }
            let [a, b] = tokens[..] else {
                return Err(err(format!("expected two vertex ids, found {line:?}")));
            };
            let parse_id = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("invalid vertex id {t:?}")))
            };
            let (u, v) = (parse_id(a)?, parse_id(b)?);
            if u == v {
                return Err(err(format!("self-loop at vertex {u}")));
            }
            if let Some(n) = declared {
                if u >= n || v >= n {
                    return Err(err(format!(
                        "edge {u}-{v} exceeds declared vertex count {n}"
                    )));
                }
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(err(format!("duplicate edge {u}-{v}")));
            }
            max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
            edges.push((u, v));
        }
        let vertex_count = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
        Self::from_edges(vertex_count, edges)
    }

    /// Serializes to the edge-list format with a `p` header, edges ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.first_unreached(0).is_none()
    }

    fn first_unreached(&self, source: VertexId) -> Option<VertexId> {
        self.raw_bfs(source).iter().position(|d| d.is_none())
    }

    /// Fails with [`Error::NotConnected`] naming the smallest vertex unreachable from 0.
    pub fn ensure_connected(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            return Err(invalid("graph has no vertices"));
        }
        match self.first_unreached(0) {
            None => Ok(()),
            Some(unreached) => Err(Error::NotConnected { from: 0, unreached }),
        }
    }

    pub(crate) fn raw_bfs(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].unwrap() + 1;
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Path graph on `n` vertices with edges `{t, t+1}`.
pub fn build_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|t| (t - 1, t)))
}

/// Cycle on `n >= 3` vertices with edges `{t, (t+1) mod n}`.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|t| (t, (t + 1) % n)))
}

/// Hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: VertexId) -> Result<Vec<usize>> {
    g.check_vertex(source)?;
    g.raw_bfs(source)
        .into_iter()
        .enumerate()
        .map(|(v, d)| {
            d.ok_or(Error::NotConnected {
                from: source,
                unreached: v,
            })
        })
        .collect()
}

/// All-pairs distance matrix by repeated BFS.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.vertex_count()).map(|s| bfs_distances(g, s)).collect()
}

pub fn diameter(g: &Graph) -> Result<usize> {
    g.ensure_connected()?;
    let mut best = 0;
    for s in 0..g.vertex_count() {
        best = best.max(*bfs_distances(g, s)?.iter().max().unwrap());
    }
    Ok(best)
}

/// Structural kind of a product factor, detected from its canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Path,
    Cycle,
    General,
}

impl FactorKind {
    /// `Path` when edges are exactly `{t, t+1}`; `Cycle` when they also close `{n-1, 0}`.
    pub fn detect(g: &Graph) -> Self {
        let n = g.vertex_count();
        let chain = (1..n).all(|t| g.has_edge(t - 1, t));
        if chain && g.edge_count() == n.saturating_sub(1) {
            FactorKind::Path
        } else if n >= 3 && chain && g.edge_count() == n && g.has_edge(n - 1, 0) {
            FactorKind::Cycle
        } else {
            FactorKind::General
        }
    }
}

/// Which factor of a two-factor product to project onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Bijection between product vertex ids and 1-based factor coordinates `(i, j)`.
///
/// The left factor indexes layers: layer `h` is the copy of the right factor with `i = h`.
/// Ids follow `id = (i - 1) * right_size + (j - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LayerLabeling {
    left_size: usize,
    right_size: usize,
    right_kind: FactorKind,
}

impl LayerLabeling {
    pub fn new(left_size: usize, right_size: usize, right_kind: FactorKind) -> Result<Self> {
        if left_size == 0 || right_size == 0 {
            return Err(invalid("product factors must be nonempty"));
        }
        Ok(Self {
            left_size,
            right_size,
            right_kind,
        })
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn right_kind(&self) -> FactorKind {
        self.right_kind
    }

    pub fn vertex_count(&self) -> usize {
        self.left_size * self.right_size
    }

    pub fn encode(&self, i: usize, j: usize) -> Result<VertexId> {
        if !(1..=self.left_size).contains(&i) || !(1..=self.right_size).contains(&j) {
            return Err(invalid(format!(
                "coordinate ({i},{j}) outside [{}]x[{}]",
                self.left_size, self.right_size
            )));
        }
        Ok((i - 1) * self.right_size + (j - 1))
    }

    pub fn decode(&self, id: VertexId) -> Result<(usize, usize)> {
        if id >= self.vertex_count() {
            return Err(invalid(format!(
                "vertex {id} outside product on {} vertices",
                self.vertex_count()
            )));
        }
        Ok((id / self.right_size + 1, id % self.right_size + 1))
    }

    /// Ids of the vertices in layer `h` (1-based), ascending.
    pub fn layer(&self, h: usize) -> std::ops::Range<VertexId> {
        debug_assert!((1..=self.left_size).contains(&h));
        (h - 1) * self.right_size..h * self.right_size
    }
}

/// An ordered vertex sequence; adjacency and geodesic status are checked separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPath(pub Vec<VertexId>);

impl VertexPath {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<VertexId> {
        self.0.last().copied()
    }
}

impl From<Vec<VertexId>> for VertexPath {
    fn from(v: Vec<VertexId>) -> Self {
        VertexPath(v)
    }
}

/// `G □ H` with the layer labeling `id = g * |V(H)| + h` (0-based factor ids).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, LayerLabeling)> {
    let labeling = LayerLabeling::new(g.vertex_count(), h.vertex_count(), FactorKind::detect(h))?;
    let m = h.vertex_count();
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + m * g.edge_count());
    for a in 0..g.vertex_count() {
        for (x, y) in h.edges() {
            edges.push((a * m + x, a * m + y));
        }
    }
    for (a, b) in g.edges() {
        for x in 0..m {
            edges.push((a * m + x, b * m + x));
        }
    }
    Ok((Graph::from_edges(labeling.vertex_count(), edges)?, labeling))
}

/// Projects a product path onto one factor, collapsing consecutive repeats.
///
/// Returned ids are 0-based vertices of the chosen factor.
pub fn project(path: &VertexPath, labeling: &LayerLabeling, side: Side) -> Result<VertexPath> {
    let mut out: Vec<VertexId> = Vec::with_capacity(path.len());
    for &v in path.vertices() {
        let (i, j) = labeling.decode(v)?;
        let coord = match side {
            Side::Left => i - 1,
            Side::Right => j - 1,
        };
        if out.last() != Some(&coord) {
            out.push(coord);
        }
    }
    Ok(VertexPath(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_builder() {
        let p1 = build_path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        let p4 = build_path(4).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let p2 = build_path(2).unwrap();
        assert_eq!(p2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(matches!(build_path(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn cycle_builder() {
        assert_eq!(build_cycle(3).unwrap().edge_count(), 3);
        assert_eq!(diameter(&build_cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(diameter(&build_cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(diameter(&build_cycle(7).unwrap()).unwrap(), 3);
        assert!(build_cycle(2).is_err());
    }

    #[test]
    fn product_sizes() {
        let p2 = build_path(2).unwrap();
        let p3 = build_path(3).unwrap();
        let (sq, _) = cartesian_product(&p2, &p2).unwrap();
        assert_eq!((sq.vertex_count(), sq.edge_count()), (4, 4));
        assert!((0..4).all(|v| sq.degree(v) == 2));
        let (g33, lab) = cartesian_product(&p3, &p3).unwrap();
        assert_eq!((g33.vertex_count(), g33.edge_count()), (9, 12));
        assert_eq!(lab.right_kind(), FactorKind::Path);
        let (prism, lab) = cartesian_product(&p2, &build_cycle(3).unwrap()).unwrap();
        assert_eq!((prism.vertex_count(), prism.edge_count()), (6, 9));
        assert_eq!(lab.right_kind(), FactorKind::Cycle);
        let empty = Graph::from_edges(0, []).unwrap();
        assert!(cartesian_product(&empty, &p2).is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::from_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g, build_path(3).unwrap());
        assert!(matches!(
            Graph::from_edge_list("0 0"),
            Err(Error::Parse { line: 1, .. })
        ));
        let k4 = Graph::from_edge_list("# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        assert!(matches!(
            Graph::from_edge_list("p 3\n0 1\n1 0"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("p 3\n0 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("0 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("0 x"),
            Err(Error::Parse { line: 1, .. })
        ));
        let g = Graph::from_edge_list("p 4\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(matches!(
            g.ensure_connected(),
            Err(Error::NotConnected { unreached: 2, .. })
        ));
    }

    #[test]
    fn distances() {
        assert_eq!(
            bfs_distances(&build_path(5).unwrap(), 0).unwrap(),
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(
            bfs_distances(&build_cycle(6).unwrap(), 0).unwrap(),
            vec![0, 1, 2, 3, 2, 1]
        );
        let p3 = build_path(3).unwrap();
        let (g, lab) = cartesian_product(&p3, &p3).unwrap();
        let d = bfs_distances(&g, lab.encode(1, 1).unwrap()).unwrap();
        assert_eq!(d[lab.encode(3, 3).unwrap()], 4);
        let p7 = build_path(7).unwrap();
        assert_eq!(diameter(&p7).unwrap(), 6);
        assert_eq!(
            diameter(&cartesian_product(&p7, &p7).unwrap().0).unwrap(),
            12
        );
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            bfs_distances(&split, 0),
            Err(Error::NotConnected { unreached: 2, .. })
        ));
        assert!(diameter(&split).is_err());
    }

    #[test]
    fn labeling_round_trip() {
        let lab = LayerLabeling::new(3, 5, FactorKind::Path).unwrap();
        for id in 0..15 {
            let (i, j) = lab.decode(id).unwrap();
            assert_eq!(lab.encode(i, j).unwrap(), id);
        }
        assert!(lab.encode(0, 1).is_err());
        assert!(lab.encode(1, 6).is_err());
        assert!(lab.decode(15).is_err());
        assert_eq!(lab.layer(2), 5..10);
    }

    #[test]
    fn projections_collapse_repeats() {
        let p2 = build_path(2).unwrap();
        let (_, lab) = cartesian_product(&p2, &p2).unwrap();
        let path = VertexPath(vec![
            lab.encode(1, 1).unwrap(),
            lab.encode(1, 2).unwrap(),
            lab.encode(2, 2).unwrap(),
        ]);
        assert_eq!(project(&path, &lab, Side::Left).unwrap().0, vec![0, 1]);
        assert_eq!(project(&path, &lab, Side::Right).unwrap().0, vec![0, 1]);
        assert!(project(&VertexPath(vec![4]), &lab, Side::Left).is_err());
    }

    #[test]
    fn factor_kind_detection() {
        assert_eq!(
            FactorKind::detect(&build_path(1).unwrap()),
            FactorKind::Path
        );
        assert_eq!(
            FactorKind::detect(&build_path(6).unwrap()),
            FactorKind::Path
        );
        assert_eq!(
            FactorKind::detect(&build_cycle(6).unwrap()),
            FactorKind::Cycle
        );
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(FactorKind::detect(&star), FactorKind::General);
    }
}
