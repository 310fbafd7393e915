//! Strong geodetic sets of graphs.
//!
//! A set `S` of vertices is *strong geodetic* when one shortest path can be fixed for every
//! unordered pair of `S` so that the chosen paths together visit every vertex. This crate
//! provides:
//!
//! - graph builders for paths, cycles, and two-factor Cartesian products ([`graph`]);
//! - shortest-path DAGs with geodesic counting and lexicographic enumeration ([`geodesics`]);
//! - certificate verification, an exact branch-and-bound solver, and lower bounds
//!   ([`strong_geodetic`]);
//! - explicit optimal certificates for thin grids `P_r □ P_n` and thin cylinders
//!   `P_r □ C_n` ([`constructions`]).

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod geodesics;
pub mod graph;
pub mod strong_geodetic;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use geodesics::{
    build_dag, count_geodesics, enumerate_geodesics, interval, is_geodesic, ShortestPathDag,
};
pub use graph::{
    bfs_distances, build_cycle, build_path, cartesian_product, diameter, project, FactorKind,
    Graph, LayerLabeling, Side, VertexId, VertexPath,
};
pub use strong_geodetic::{
    covering_lower_bound, find_strong_geodetic_set, find_uncrossed_layer, geodetic_number,
    has_assignment, product_lower_bound, strong_geodetic_number, verify_certificate, Certificate,
    CoverageReport, GeodesicRecord, SolverConfig,
};

/// `⌈2√n⌉`, computed exactly in integers.
pub fn ceil_two_sqrt(n: usize) -> usize {
    // smallest t with t^2 >= 4n
    let target = 4 * n as u128;
    let mut t = ((target as f64).sqrt()) as u128;
    while t * t < target {
        t += 1;
    }
    while t > 0 && (t - 1) * (t - 1) >= target {
        t -= 1;
    }
    t as usize
}

/// `C(k, 2)`.
pub fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_two_sqrt_values() {
        let expected = [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 4),
            (5, 5),
            (7, 6),
            (9, 6),
            (16, 8),
            (25, 10),
            (12, 7),
        ];
        for (n, t) in expected {
            assert_eq!(ceil_two_sqrt(n), t, "n={n}");
        }
        for n in 1..5000usize {
            let t = ceil_two_sqrt(n);
            assert!(t * t >= 4 * n && (t - 1) * (t - 1) < 4 * n);
        }
    }
}
