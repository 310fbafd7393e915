//! Brute-force reference implementations sharing no code with the library.

#![allow(dead_code)]

use rand::Rng;

pub const INF: usize = usize::MAX / 4;

pub type Edges = Vec<(usize, usize)>;

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every shortest `u`-`v` path, by plain depth-first search.
pub fn all_geodesics(
    adj: &[Vec<bool>],
    dist: &[Vec<usize>],
    u: usize,
    v: usize,
) -> Vec<Vec<usize>> {
    fn walk(
        adj: &[Vec<bool>],
        dist: &[Vec<usize>],
        v: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let at = *path.last().unwrap();
        if at == v {
            out.push(path.clone());
            return;
        }
        for w in 0..adj.len() {
            if adj[at][w] && dist[w][v] + 1 == dist[at][v] {
                path.push(w);
                walk(adj, dist, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(adj, dist, v, &mut vec![u], &mut out);
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Tries every geodesic selection for the pairs of `set`.
fn is_strong_geodetic(n: usize, adj: &[Vec<bool>], dist: &[Vec<usize>], set: &[usize]) -> bool {
    let full = (1u64 << n) - 1;
    let base = mask(set);
    let mut choices: Vec<Vec<u64>> = Vec::new();
    for (a, &u) in set.iter().enumerate() {
        for &v in &set[a + 1..] {
            let mut masks: Vec<u64> = all_geodesics(adj, dist, u, v)
                .iter()
                .map(|p| mask(p))
                .collect();
            masks.sort_unstable();
            masks.dedup();
            choices.push(masks);
        }
    }
    let reach = choices.iter().flatten().fold(base, |m, &p| m | p);
    if reach != full {
        return false;
    }
    let mut idx = vec![0; choices.len()];
    loop {
        let cover = choices.iter().zip(&idx).fold(base, |m, (c, &i)| m | c[i]);
        if cover == full {
            return true;
        }
        let mut level = 0;
        loop {
            if level == idx.len() {
                return false;
            }
            idx[level] += 1;
            if idx[level] < choices[level].len() {
                break;
            }
            idx[level] = 0;
            level += 1;
        }
    }
}

pub fn naive_strong_geodetic_number(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(n, edges);
    let dist = floyd_warshall(n, edges);
    (1..=n)
        .find(|&k| {
            combinations(n, k)
                .iter()
                .any(|s| is_strong_geodetic(n, &adj, &dist, s))
        })
        .unwrap()
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    floyd_warshall(n, edges)[0].iter().all(|&d| d < INF)
}

/// All labeled connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Edges> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << slots.len())
        .map(|bits| {
            slots
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Edges>()
        })
        .filter(|e| is_connected(n, e))
        .collect()
}

/// Erdős–Rényi draws with edge probability `p`, redrawn until connected.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Edges {
    loop {
        let edges: Edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if is_connected(n, &edges) {
            return edges;
        }
    }
}
