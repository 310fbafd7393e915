//! Fixtures shared by the benchmarks.

use sgeo_core::{build_cycle, build_path, cartesian_product, Graph};

pub fn grid(r: usize, n: usize) -> Graph {
    cartesian_product(&build_path(r).unwrap(), &build_path(n).unwrap())
        .unwrap()
        .0
}

pub fn cylinder(r: usize, n: usize) -> Graph {
    cartesian_product(&build_path(r).unwrap(), &build_cycle(n).unwrap())
        .unwrap()
        .0
}
