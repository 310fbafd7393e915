//! Lower bounds and the uncrossed-layer witness for products `P_r □ G`.

use super::Certificate;
use crate::error::{invalid, Result};
use crate::graph::{diameter, Graph, LayerLabeling};
use crate::{ceil_two_sqrt, pairs};

/// Smallest `k >= 2` with `C(k,2) * (diam + 1) >= |V|`; 1 for the singleton graph.
///
/// Each geodesic visits at most `diam + 1` vertices, so fewer pairs cannot cover the graph.
pub fn covering_lower_bound(g: &Graph) -> Result<usize> {
    let diam = diameter(g)?;
    let n = g.vertex_count();
    if n == 1 {
        return Ok(1);
    }
    Ok((2..).find(|&k| pairs(k) * (diam + 1) >= n).unwrap())
}

/// `⌈2√|V(G)|⌉` as a lower bound on `sg(P_r □ G)` when `r > diam(G)·C(u,2) + u`.
///
/// `upper` must be an upper bound on the strong geodetic number of the product (for example
/// the size of a constructed certificate). The right-hand side grows with its argument, so
/// checking the condition at `upper` implies it at the true optimum.
pub fn product_lower_bound(r: usize, g: &Graph, upper: usize) -> Result<Option<usize>> {
    if upper < 2 {
        return Err(invalid(format!(
            "upper bound must be at least 2, got {upper}"
        )));
    }
    if r < 2 {
        return Err(invalid(format!("path length must be at least 2, got {r}")));
    }
    let diam = diameter(g)?;
    let threshold = diam * pairs(upper) + upper;
    Ok((r > threshold).then(|| ceil_two_sqrt(g.vertex_count())))
}

/// Smallest layer index `h` (1-based, along the left factor) such that no certificate path uses
/// an edge inside layer `h` and no certificate vertex lies in it.
pub fn find_uncrossed_layer(
    product: &Graph,
    labeling: &LayerLabeling,
    cert: &Certificate,
) -> Option<usize> {
    debug_assert_eq!(product.vertex_count(), labeling.vertex_count());
    let m = labeling.right_size();
    let layer_of = |v: usize| v / m + 1;
    let mut touched = vec![false; labeling.left_size() + 1];
    for &v in &cert.vertices {
        touched[layer_of(v)] = true;
    }
    for rec in &cert.geodesics {
        for w in rec.path.vertices().windows(2) {
            let (a, b) = (layer_of(w[0]), layer_of(w[1]));
            if a == b {
                touched[a] = true;
            }
        }
    }
    (1..=labeling.left_size()).find(|&h| !touched[h])
}
