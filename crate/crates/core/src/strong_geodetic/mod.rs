//! Strong geodetic sets: certificates, verification, exact search, and lower bounds.

mod bounds;
mod search;

use std::collections::BTreeSet;
use std::time::Duration;

use crate::error::{invalid, Result};
use crate::geodesics::DEFAULT_ENUMERATION_CAP;
use crate::graph::{Graph, VertexId, VertexPath};

pub use bounds::{covering_lower_bound, find_uncrossed_layer, product_lower_bound};
pub use search::{
    find_strong_geodetic_set, geodetic_number, has_assignment, strong_geodetic_number,
};

/// One fixed geodesic for the unordered pair `{u, v}`, running from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeodesicRecord {
    pub u: VertexId,
    pub v: VertexId,
    pub path: VertexPath,
}

/// A vertex set together with one chosen geodesic per unordered pair of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Certificate {
    pub vertices: Vec<VertexId>,
    pub geodesics: Vec<GeodesicRecord>,
}

impl Certificate {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Sorts vertices ascending and records by `(u, v)`, orienting each record so `u < v`.
    pub fn canonicalize(&mut self) {
        self.vertices.sort_unstable();
        for rec in &mut self.geodesics {
            if rec.u > rec.v {
                std::mem::swap(&mut rec.u, &mut rec.v);
                rec.path.0.reverse();
            }
        }
        self.geodesics.sort_by_key(|r| (r.u, r.v));
    }

    /// Union of `S` and every vertex on a recorded path.
    pub fn covered_vertices(&self) -> BTreeSet<VertexId> {
        self.vertices
            .iter()
            .copied()
            .chain(
                self.geodesics
                    .iter()
                    .flat_map(|r| r.path.vertices().iter().copied()),
            )
            .collect()
    }
}

/// Outcome of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoverageReport {
    pub valid: bool,
    pub uncovered: Vec<VertexId>,
    pub violations: Vec<String>,
}

/// Checks structure (all pairs present once, each path a geodesic between its endpoints) and
/// coverage. Every defect is collected in the report rather than returned as an error.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> CoverageReport {
    let n = g.vertex_count();
    let mut violations = Vec::new();

    let mut members = BTreeSet::new();
    for &v in &cert.vertices {
        if v >= n {
            violations.push(format!(
                "vertex {v} is out of range (graph has {n} vertices)"
            ));
        } else if !members.insert(v) {
            violations.push(format!("vertex {v} is listed more than once"));
        }
    }
    if cert.vertices.is_empty() {
        violations.push("certificate has no vertices".to_string());
    }

    let mut seen_pairs = BTreeSet::new();
    for (idx, rec) in cert.geodesics.iter().enumerate() {
        let key = (rec.u.min(rec.v), rec.u.max(rec.v));
        if rec.u == rec.v {
            violations.push(format!(
                "record {idx}: pair ({}, {}) is not a pair of distinct vertices",
                rec.u, rec.v
            ));
        } else if !members.contains(&rec.u) || !members.contains(&rec.v) {
            violations.push(format!(
                "record {idx}: pair ({}, {}) is not a pair of the set",
                rec.u, rec.v
            ));
        } else if !seen_pairs.insert(key) {
            violations.push(format!(
                "record {idx}: pair ({}, {}) appears more than once",
                rec.u, rec.v
            ));
        }
        let path = rec.path.vertices();
        if path.first() != Some(&rec.u) || path.last() != Some(&rec.v) {
            violations.push(format!(
                "record {idx}: path does not run from {} to {}",
                rec.u, rec.v
            ));
        }
        match crate::geodesics::is_geodesic(g, &rec.path) {
            Ok(true) => {}
            Ok(false) => violations.push(format!(
                "record {idx}: path between {} and {} is not a geodesic",
                rec.u, rec.v
            )),
            Err(e) => violations.push(format!("record {idx}: {e}")),
        }
    }
    let member_list: Vec<_> = members.iter().copied().collect();
    for (i, &u) in member_list.iter().enumerate() {
        for &v in &member_list[i + 1..] {
            if !seen_pairs.contains(&(u, v)) {
                violations.push(format!("pair ({u}, {v}) has no geodesic"));
            }
        }
    }

    let covered = cert.covered_vertices();
    let uncovered: Vec<_> = (0..n).filter(|v| !covered.contains(v)).collect();
    CoverageReport {
        valid: uncovered.is_empty() && violations.is_empty(),
        uncovered,
        violations,
    }
}

/// Knobs for the exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of geodesics enumerated per vertex pair.
    pub cap: usize,
    /// Wall-clock budget for a whole search call; `None` is unlimited.
    pub budget: Option<Duration>,
    pub workers: usize,
    /// Return the lexicographically first witness regardless of `workers`.
    pub deterministic: bool,
    /// Vertex sets tried first at their cardinality.
    pub hints: Vec<Vec<VertexId>>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ENUMERATION_CAP,
            budget: None,
            workers: 1,
            deterministic: true,
            hints: Vec::new(),
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cap == 0 {
            return Err(invalid("enumeration cap must be at least 1"));
        }
        if self.workers == 0 {
            return Err(invalid("worker count must be at least 1"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path};

    fn rec(u: usize, v: usize, path: &[usize]) -> GeodesicRecord {
        GeodesicRecord {
            u,
            v,
            path: VertexPath(path.to_vec()),
        }
    }

    #[test]
    fn verify_examples() {
        let p5 = build_path(5).unwrap();
        let cert = Certificate {
            vertices: vec![0, 4],
            geodesics: vec![rec(0, 4, &[0, 1, 2, 3, 4])],
        };
        assert!(verify_certificate(&p5, &cert).valid);

        let c4 = build_cycle(4).unwrap();
        let cert = Certificate {
            vertices: vec![0, 2],
            geodesics: vec![rec(0, 2, &[0, 1, 2])],
        };
        let report = verify_certificate(&c4, &cert);
        assert!(!report.valid);
        assert_eq!(report.uncovered, vec![3]);
        assert!(report.violations.is_empty());

        let cert = Certificate {
            vertices: vec![0, 1, 2],
            geodesics: vec![
                rec(0, 1, &[0, 1]),
                rec(0, 2, &[0, 3, 2]),
                rec(1, 2, &[1, 2]),
            ],
        };
        assert!(verify_certificate(&c4, &cert).valid);
        // the other arc for (0,2) leaves 3 uncovered
        let cert = Certificate {
            vertices: vec![0, 1, 2],
            geodesics: vec![
                rec(0, 1, &[0, 1]),
                rec(0, 2, &[0, 1, 2]),
                rec(1, 2, &[1, 2]),
            ],
        };
        assert_eq!(verify_certificate(&c4, &cert).uncovered, vec![3]);
    }

    #[test]
    fn verify_reports_structural_defects() {
        let c4 = build_cycle(4).unwrap();
        let cert = Certificate {
            vertices: vec![0, 1, 2, 2],
            geodesics: vec![
                rec(0, 1, &[0, 1]),
                rec(1, 0, &[1, 0]),
                rec(0, 2, &[0, 1, 2, 3]),
                rec(1, 3, &[1, 2, 3]),
            ],
        };
        let report = verify_certificate(&c4, &cert);
        assert!(!report.valid);
        let joined = report.violations.join("\n");
        assert!(joined.contains("listed more than once"));
        assert!(joined.contains("appears more than once"));
        assert!(joined.contains("does not run from 0 to 2"));
        assert!(joined.contains("not a pair of the set"));
        assert!(joined.contains("pair (1, 2) has no geodesic"));
    }

    #[test]
    fn singleton_graph_certificate() {
        let p1 = build_path(1).unwrap();
        let cert = Certificate {
            vertices: vec![0],
            geodesics: vec![],
        };
        assert!(verify_certificate(&p1, &cert).valid);
        assert!(!verify_certificate(&p1, &Certificate::default()).valid);
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let bad = SolverConfig {
            workers: 0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = SolverConfig {
            cap: 0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
