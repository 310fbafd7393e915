//! Explicit strong geodetic sets of size `⌈2√n⌉` for `P_r □ P_n` and `P_r □ C_n`, `n <= r`.
//!
//! Anchors sit in the two end layers (`i = 1` and `i = r`). Coordinates along the short factor
//! are called rows: row `j` is the copy of `P_r` with second coordinate `j`. Routing works in
//! three parts:
//!
//! 1. an anchor pair `(1,c)`, `(r,c)` takes the straight geodesic along row `c`;
//! 2. anchor pairs inside one end layer take a shortest walk within that layer;
//! 3. a cross pair `(1,c)`, `(r,c')` with `c != c'` is matched to a distinct not-yet-covered
//!    row `s` between `c` and `c'` in the short factor and runs `(1,c) ⇝ (1,s)`, along row `s`,
//!    then `(r,s) ⇝ (r,c')`.
//!
//! Every row then holds a full path, which covers the whole product. The matching is computed
//! greedily (rows ascending, earliest-ending pair first) and completed with augmenting paths;
//! the finished certificate is verified before it is returned.

use crate::error::{invalid, Error, Result};
use crate::graph::{
    build_cycle, build_path, cartesian_product, FactorKind, Graph, LayerLabeling, VertexPath,
};
use crate::strong_geodetic::{verify_certificate, Certificate, GeodesicRecord};
use crate::{ceil_two_sqrt, pairs};

/// A construction vertex `(layer, coord)` with `layer ∈ {1, r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnchorPoint {
    pub layer: usize,
    pub coord: usize,
}

/// Anchor layout for a thin grid or thin cylinder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorSet {
    pub factor_kind: FactorKind,
    /// Order of the short factor.
    pub n: usize,
    /// Order of the long path factor.
    pub r: usize,
    /// `⌊√n⌋`
    pub k: usize,
    /// `n - k²`
    pub ell: usize,
    /// Row coordinates `c_1 < … < c_k` of the paired anchors `(1, c_i)` and `(r, c_i)`.
    pub positions: Vec<usize>,
    /// Additional anchors used when `n` is not a perfect square.
    pub extras: Vec<AnchorPoint>,
}

impl AnchorSet {
    pub fn top_extras(&self) -> impl Iterator<Item = &AnchorPoint> {
        self.extras.iter().filter(|p| p.layer == 1)
    }

    pub fn bottom_extras(&self) -> impl Iterator<Item = &AnchorPoint> {
        let r = self.r;
        self.extras.iter().filter(move |p| p.layer == r)
    }

    /// All anchors, sorted by `(layer, coord)`, which is also product-id order.
    pub fn points(&self) -> Vec<AnchorPoint> {
        let mut pts: Vec<AnchorPoint> = self
            .positions
            .iter()
            .flat_map(|&c| {
                [
                    AnchorPoint { layer: 1, coord: c },
                    AnchorPoint {
                        layer: self.r,
                        coord: c,
                    },
                ]
            })
            .chain(self.extras.iter().copied())
            .collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    pub fn size(&self) -> usize {
        self.points().len()
    }

    /// `P_r □ P_n` or `P_r □ C_n` with its layer labeling.
    pub fn product(&self) -> Result<(Graph, LayerLabeling)> {
        let long = build_path(self.r)?;
        let short = match self.factor_kind {
            FactorKind::Path => build_path(self.n)?,
            FactorKind::Cycle => build_cycle(self.n)?,
            FactorKind::General => return Err(invalid("anchor sets need a path or cycle factor")),
        };
        cartesian_product(&long, &short)
    }

    fn metric(&self) -> ShortFactor {
        ShortFactor {
            kind: self.factor_kind,
            n: self.n,
        }
    }
}

fn isqrt(n: usize) -> usize {
    let mut k = (n as f64).sqrt() as usize;
    while k * k > n {
        k -= 1;
    }
    while (k + 1) * (k + 1) <= n {
        k += 1;
    }
    k
}

/// Anchors for `P_r □ P_n`: `c_i = (i-1)k + i`, plus `(1,n)` when `1 <= ℓ <= k` or
/// `(1,n), (r,n)` when `k < ℓ <= 2k`.
pub fn grid_anchors(r: usize, n: usize) -> Result<AnchorSet> {
    if n < 2 || n > r {
        return Err(invalid(format!(
            "grid anchors need 2 <= n <= r, got r={r}, n={n}"
        )));
    }
    let k = isqrt(n);
    let ell = n - k * k;
    let positions = (1..=k).map(|i| (i - 1) * k + i).collect();
    let extras = match ell {
        0 => vec![],
        l if l <= k => vec![AnchorPoint { layer: 1, coord: n }],
        _ => vec![
            AnchorPoint { layer: 1, coord: n },
            AnchorPoint { layer: r, coord: n },
        ],
    };
    Ok(AnchorSet {
        factor_kind: FactorKind::Path,
        n,
        r,
        k,
        ell,
        positions,
        extras,
    })
}

/// Anchors for `P_r □ C_n`: `c_i = (i-1)k + 1` plus one (`1 <= ℓ <= k`) or two
/// (`k < ℓ <= 2k`) extra anchors.
///
/// Extras go to row `n` when that placement routes; otherwise the first placement (one extra
/// in layer 1, or one per end layer) in lexicographic row order for which every row can be
/// matched is used. When no placement routes with spacing `k` (this happens for `ℓ = k` and
/// `ℓ = 2k`), the positions are spread evenly as `c_i = ⌊(i-1)n/k⌋ + 1` and the placement
/// search is repeated.
pub fn cylinder_anchors(r: usize, n: usize) -> Result<AnchorSet> {
    if n < 3 || n > r {
        return Err(invalid(format!(
            "cylinder anchors need 3 <= n <= r, got r={r}, n={n}"
        )));
    }
    let k = isqrt(n);
    let ell = n - k * k;
    let regular: Vec<usize> = (1..=k).map(|i| (i - 1) * k + 1).collect();
    if ell == 0 {
        return Ok(AnchorSet {
            factor_kind: FactorKind::Cycle,
            n,
            r,
            k,
            ell,
            positions: regular,
            extras: vec![],
        });
    }
    let spread: Vec<usize> = (1..=k).map(|i| (i - 1) * n / k + 1).collect();
    for positions in [regular, spread] {
        let mut set = AnchorSet {
            factor_kind: FactorKind::Cycle,
            n,
            r,
            k,
            ell,
            positions,
            extras: vec![],
        };
        for extras in extra_placements(&set) {
            set.extras = extras;
            if plan_rows(&set).is_ok() {
                return Ok(set);
            }
        }
    }
    Err(Error::MatchingInfeasible(format!(
        "no extra-anchor placement routes P_{r} □ C_{n}"
    )))
}

fn extra_placements(set: &AnchorSet) -> Vec<Vec<AnchorPoint>> {
    let (n, r) = (set.n, set.r);
    let free: Vec<usize> = (1..=n).filter(|c| !set.positions.contains(c)).collect();
    let top = |coord| AnchorPoint { layer: 1, coord };
    let bottom = |coord| AnchorPoint { layer: r, coord };
    if set.ell <= set.k {
        std::iter::once(n)
            .chain(free.iter().copied())
            .filter(|c| !set.positions.contains(c))
            .map(|c| vec![top(c)])
            .collect()
    } else {
        let mut all = Vec::new();
        if !set.positions.contains(&n) {
            all.push(vec![top(n), bottom(n)]);
        }
        for &t in &free {
            for &b in &free {
                all.push(vec![top(t), bottom(b)]);
            }
        }
        all
    }
}

/// `C(⌈2√n⌉, 2)·(n − 1) + ⌈2√n⌉`; grids with `r` above it have `sg = ⌈2√n⌉`.
pub fn grid_threshold(n: usize) -> usize {
    let t = ceil_two_sqrt(n);
    pairs(t) * (n - 1) + t
}

/// `C(⌈2√n⌉, 2)·⌊n/2⌋ + ⌈2√n⌉`; cylinders with `r` above it have `sg = ⌈2√n⌉`.
pub fn cylinder_threshold(n: usize) -> usize {
    let t = ceil_two_sqrt(n);
    pairs(t) * (n / 2) + t
}

#[derive(Debug, Clone, Copy)]
struct ShortFactor {
    kind: FactorKind,
    n: usize,
}

impl ShortFactor {
    fn dist(&self, a: usize, b: usize) -> usize {
        let d = a.abs_diff(b);
        match self.kind {
            FactorKind::Cycle => d.min(self.n - d),
            _ => d,
        }
    }

    fn between(&self, a: usize, s: usize, b: usize) -> bool {
        self.dist(a, s) + self.dist(s, b) == self.dist(a, b)
    }

    /// Coordinates of a shortest walk from `a` to `b`; on a cycle, ties go forward.
    fn walk(&self, a: usize, b: usize) -> Vec<usize> {
        match self.kind {
            FactorKind::Cycle => {
                let n = self.n;
                let forward = (b + n - a) % n;
                let step_forward = forward <= n - forward;
                let steps = if step_forward { forward } else { n - forward };
                (0..=steps)
                    .map(|t| {
                        let zero_based = a - 1;
                        let moved = if step_forward {
                            (zero_based + t) % n
                        } else {
                            (zero_based + n - t % n) % n
                        };
                        moved + 1
                    })
                    .collect()
            }
            _ => {
                if a <= b {
                    (a..=b).collect()
                } else {
                    (b..=a).rev().collect()
                }
            }
        }
    }
}

/// A cross pair `(1, top)`–`(r, bottom)` with `top != bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct CrossPair {
    top: usize,
    bottom: usize,
}

/// Crossing row for each cross pair (`None` = any geodesic will do).
struct RowPlan {
    cross: Vec<CrossPair>,
    crossing: Vec<Option<usize>>,
}

fn plan_rows(anchors: &AnchorSet) -> Result<RowPlan> {
    let metric = anchors.metric();
    let points = anchors.points();
    let top: Vec<usize> = points
        .iter()
        .filter(|p| p.layer == 1)
        .map(|p| p.coord)
        .collect();
    let bottom: Vec<usize> = points
        .iter()
        .filter(|p| p.layer == anchors.r)
        .map(|p| p.coord)
        .collect();
    let rows: Vec<usize> = (1..=anchors.n)
        .filter(|c| !(top.contains(c) && bottom.contains(c)))
        .collect();
    let cross: Vec<CrossPair> = top
        .iter()
        .flat_map(|&t| bottom.iter().map(move |&b| CrossPair { top: t, bottom: b }))
        .filter(|p| p.top != p.bottom)
        .collect();

    if cross.len() < rows.len() {
        return Err(Error::MatchingInfeasible(format!(
            "{} cross pairs cannot cover {} rows",
            cross.len(),
            rows.len()
        )));
    }
    if anchors.ell == 0 && anchors.extras.is_empty() && cross.len() != rows.len() {
        return Err(Error::MatchingInfeasible(format!(
            "perfect-square layout has {} cross pairs but {} open rows",
            cross.len(),
            rows.len()
        )));
    }

    let feasible: Vec<Vec<usize>> = rows
        .iter()
        .map(|&s| {
            let mut opts: Vec<usize> = (0..cross.len())
                .filter(|&p| metric.between(cross[p].top, s, cross[p].bottom))
                .collect();
            opts.sort_by_key(|&p| {
                let c = cross[p];
                (c.top.max(c.bottom), c.top.min(c.bottom), p)
            });
            opts
        })
        .collect();

    let row_of_pair = match_rows(&feasible, cross.len()).map_err(|row| {
        Error::MatchingInfeasible(format!("row {} has no available cross pair", rows[row]))
    })?;
    Ok(RowPlan {
        crossing: row_of_pair.iter().map(|m| m.map(|row| rows[row])).collect(),
        cross,
    })
}

/// Saturates every row with a distinct pair. Returns the matched row index per pair, or the
/// first row left unmatched.
fn match_rows(feasible: &[Vec<usize>], pair_count: usize) -> Result<Vec<Option<usize>>, usize> {
    let mut row_of_pair: Vec<Option<usize>> = vec![None; pair_count];
    let mut unmatched = Vec::new();
    for (row, opts) in feasible.iter().enumerate() {
        match opts.iter().find(|&&p| row_of_pair[p].is_none()) {
            Some(&p) => row_of_pair[p] = Some(row),
            None => unmatched.push(row),
        }
    }
    for row in unmatched {
        let mut visited = vec![false; pair_count];
        if !augment(row, feasible, &mut row_of_pair, &mut visited) {
            return Err(row);
        }
    }
    Ok(row_of_pair)
}

fn augment(
    row: usize,
    feasible: &[Vec<usize>],
    row_of_pair: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &p in &feasible[row] {
        if visited[p] {
            continue;
        }
        visited[p] = true;
        let free = match row_of_pair[p] {
            None => true,
            Some(other) => augment(other, feasible, row_of_pair, visited),
        };
        if free {
            row_of_pair[p] = Some(row);
            return true;
        }
    }
    false
}

fn check_layout(anchors: &AnchorSet) -> Result<()> {
    if matches!(anchors.factor_kind, FactorKind::General) {
        return Err(invalid("anchor sets need a path or cycle factor"));
    }
    if anchors.k * anchors.k + anchors.ell != anchors.n
        || anchors.positions.len() != anchors.k
        || anchors.positions.windows(2).any(|w| w[0] >= w[1])
        || anchors
            .positions
            .iter()
            .any(|c| !(1..=anchors.n).contains(c))
    {
        return Err(invalid(
            "anchor positions must be k increasing rows in [1, n]",
        ));
    }
    if anchors
        .extras
        .iter()
        .any(|p| (p.layer != 1 && p.layer != anchors.r) || !(1..=anchors.n).contains(&p.coord))
    {
        return Err(invalid("extra anchors must lie in an end layer"));
    }
    if anchors.size() != ceil_two_sqrt(anchors.n) {
        return Err(invalid(format!(
            "{} anchors, expected {}",
            anchors.size(),
            ceil_two_sqrt(anchors.n)
        )));
    }
    Ok(())
}

/// Routes every anchor pair and returns the verified certificate on [`AnchorSet::product`].
pub fn build_certificate(anchors: &AnchorSet) -> Result<Certificate> {
    check_layout(anchors)?;
    let (graph, labeling) = anchors.product()?;
    let plan = plan_rows(anchors)?;
    let metric = anchors.metric();
    let r = anchors.r;
    let id = |layer: usize, coord: usize| labeling.encode(layer, coord);

    let points = anchors.points();
    let mut geodesics = Vec::with_capacity(pairs(points.len()));
    for (a, &p) in points.iter().enumerate() {
        for &q in &points[a + 1..] {
            // points are sorted by (layer, coord), so p has the smaller id
            let mut path = Vec::new();
            if p.layer == q.layer {
                for c in metric.walk(p.coord, q.coord) {
                    path.push(id(p.layer, c)?);
                }
            } else {
                let pair = CrossPair {
                    top: p.coord,
                    bottom: q.coord,
                };
                let row = plan
                    .cross
                    .iter()
                    .position(|&c| c == pair)
                    .and_then(|i| plan.crossing[i])
                    .unwrap_or(p.coord);
                for c in metric.walk(p.coord, row) {
                    path.push(id(1, c)?);
                }
                for layer in 2..r {
                    path.push(id(layer, row)?);
                }
                for c in metric.walk(row, q.coord) {
                    path.push(id(r, c)?);
                }
            }
            geodesics.push(GeodesicRecord {
                u: id(p.layer, p.coord)?,
                v: id(q.layer, q.coord)?,
                path: VertexPath(path),
            });
        }
    }
    let cert = Certificate {
        vertices: points
            .iter()
            .map(|p| id(p.layer, p.coord))
            .collect::<Result<_>>()?,
        geodesics,
    };
    let report = verify_certificate(&graph, &cert);
    if !report.valid {
        return Err(Error::VerificationFailed(format!(
            "uncovered {:?}; violations {:?}",
            report.uncovered, report.violations
        )));
    }
    Ok(cert)
}
