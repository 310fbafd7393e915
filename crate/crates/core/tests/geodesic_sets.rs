mod common;

use std::collections::BTreeSet;

use common::connected_graph;
use num_bigint::BigUint;
use proptest::prelude::*;
use sgeo_core::{
    build_dag, count_geodesics, enumerate_geodesics, has_assignment, interval, is_geodesic,
    strong_geodetic_number, verify_certificate, SolverConfig,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_match_enumeration(g in connected_graph(8)) {
        for s in 0..g.vertex_count() {
            let dag = build_dag(&g, s).unwrap();
            for t in 0..g.vertex_count() {
                let mut it = enumerate_geodesics(&dag, t, 100_000).unwrap();
                let paths: Vec<_> = it.by_ref().collect();
                prop_assert!(!it.truncated());
                prop_assert_eq!(count_geodesics(&dag, t), BigUint::from(paths.len()));
                let mut sorted = paths.clone();
                sorted.sort();
                sorted.dedup();
                prop_assert_eq!(&sorted, &paths);
                for p in &paths {
                    prop_assert!(is_geodesic(&g, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn interval_is_union_of_geodesics(g in connected_graph(8)) {
        for x in 0..g.vertex_count() {
            let dag = build_dag(&g, x).unwrap();
            for y in 0..g.vertex_count() {
                let union: BTreeSet<usize> = enumerate_geodesics(&dag, y, 100_000)
                    .unwrap()
                    .flat_map(|p| p.0)
                    .collect();
                let iv = interval(&g, x, y).unwrap();
                prop_assert_eq!(&iv, &union.into_iter().collect::<Vec<_>>());
                prop_assert_eq!(iv, interval(&g, y, x).unwrap());
            }
        }
    }

    #[test]
    fn solver_certificates_verify_and_are_minimal(g in connected_graph(6)) {
        let cfg = SolverConfig::default();
        let (k, cert) = strong_geodetic_number(&g, &cfg).unwrap();
        prop_assert_eq!(cert.size(), k);
        prop_assert!(verify_certificate(&g, &cert).valid);
        // adding any vertex keeps a set strong geodetic
        if k < g.vertex_count() {
            let extra = (0..g.vertex_count()).find(|v| !cert.vertices.contains(v)).unwrap();
            let mut bigger = cert.vertices.clone();
            bigger.push(extra);
            prop_assert!(has_assignment(&g, &bigger, &cfg).unwrap().is_some());
        }
    }
}
