//! Laws for arbitrary valid index triples, not only admissible ones.

use levi_core::cases::coordinate_support;
use levi_core::diagram::{diagram_automorphisms, node_orbits};
use levi_core::index::{refines, RationalMethod};
use levi_core::rootsys::{RootSystem, Series};
use levi_core::weyl::{generate_group, DEFAULT_ORDER_BOUND};
use levi_core::{DiagramAutomorphism, TitsIndex};
use proptest::prelude::*;

fn systems() -> Vec<RootSystem> {
    let s = |x, n| RootSystem::new(x, n).unwrap();
    vec![
        s(Series::A, 2),
        s(Series::A, 3),
        s(Series::A, 4),
        s(Series::A, 5),
        s(Series::B, 3),
        s(Series::C, 4),
        s(Series::D, 4),
        s(Series::D, 5),
        s(Series::F, 4),
        s(Series::G, 2),
        s(Series::BC, 3),
        RootSystem::product(&[s(Series::A, 2), s(Series::A, 2)]).unwrap(),
        RootSystem::product(&[s(Series::A, 1), s(Series::A, 1), s(Series::A, 1)]).unwrap(),
        RootSystem::product(&[s(Series::A, 3), s(Series::A, 1)]).unwrap(),
    ]
}

fn build(sys: usize, gamma_pick: usize, kernel_mask: u32) -> TitsIndex {
    let rs = systems().swap_remove(sys);
    let autos = diagram_automorphisms(&rs);
    let gens: Vec<DiagramAutomorphism> = vec![autos[gamma_pick % autos.len()].clone()];
    let orbits = node_orbits(rs.rank(), &gens);
    let delta0: Vec<usize> = orbits
        .iter()
        .enumerate()
        .filter(|(k, _)| kernel_mask & (1 << k) != 0)
        .flat_map(|(_, o)| o.clone())
        .collect();
    TitsIndex::from_automorphisms(rs, &delta0, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classification_laws(sys in 0usize..14, g in 0usize..64, k in any::<u32>()) {
        let ix = build(sys, g, k);
        let report = ix.classify(DEFAULT_ORDER_BOUND).unwrap();
        prop_assert!(refines(&report.rational_classes, &report.geometric_classes));
        ix.check_witnesses(&report).unwrap();

        let oracle = ix.classify_with(DEFAULT_ORDER_BOUND, RationalMethod::Enumeration).unwrap();
        prop_assert_eq!(&oracle.rational_classes, &report.rational_classes);
        prop_assert_eq!(&oracle.geometric_classes, &report.geometric_classes);

        if ix.is_quasi_split() {
            prop_assert_eq!(ix.partition_by_fixed_subgroup().unwrap(), report.rational_classes.clone());
        }
    }

    #[test]
    fn split_space_laws(sys in 0usize..14, g in 0usize..64, k in any::<u32>()) {
        let ix = build(sys, g, k);
        let split = ix.split_space();
        prop_assert_eq!(split.dim(), ix.relative_nodes().len());
        let rs = ix.root_system();
        for gamma in ix.gamma() {
            for v in split.basis() {
                // γ acts linearly; compare on the simple-root expansion.
                let image = levi_core::linalg::combination(
                    &coefficients_of(rs, v),
                    &(0..rs.rank()).map(|i| rs.simple_root(gamma.apply(i)).clone()).collect::<Vec<_>>(),
                    rs.ambient_dim(),
                );
                prop_assert_eq!(&image, v);
            }
        }
        for &i in ix.delta0() {
            for v in split.basis() {
                prop_assert_eq!(levi_core::linalg::dot(v, rs.simple_root(i)), 0.into());
            }
        }
        let kernel = rs.parabolic_closure(ix.delta0());
        prop_assert!(ix.relative_roots(&kernel).is_empty());
    }
}

/// Coordinates of `v` in the basis of simple roots.
fn coefficients_of(rs: &RootSystem, v: &[levi_core::linalg::Q]) -> Vec<levi_core::linalg::Q> {
    let simple: Vec<_> = rs.simple_roots().cloned().collect();
    let gram = levi_core::linalg::gram(&simple);
    let rhs: Vec<_> = simple.iter().map(|a| levi_core::linalg::dot(a, v)).collect();
    levi_core::linalg::mat_vec(&levi_core::linalg::inverse(&gram).unwrap(), &rhs)
}

#[test]
fn relative_generators_match_the_filter_on_random_triples() {
    for sys in 0..14 {
        for g in 0..6 {
            for k in 0..8u32 {
                let ix = build(sys, g, k);
                let filtered = ix.relative_weyl(DEFAULT_ORDER_BOUND).unwrap();
                if let Some(generated) = ix.relative_weyl_from_generators(DEFAULT_ORDER_BOUND).unwrap() {
                    assert_eq!(generated.len(), filtered.order(), "system {sys}, γ {g}, kernel {k}");
                }
            }
        }
    }
}

#[test]
fn weyl_group_of_d_preserves_coordinate_support() {
    for n in 4..=6 {
        let rs = RootSystem::new(Series::D, n).unwrap();
        let group = generate_group(&rs, DEFAULT_ORDER_BOUND).unwrap();
        for mask in 0..(1u32 << n) {
            let nodes: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let set = rs.parabolic_closure(&nodes);
            let support = coordinate_support(&rs, &set);
            for w in &group.elements {
                assert_eq!(coordinate_support(&rs, &w.apply_set(&set)), support, "D{n} {nodes:?}");
            }
        }
    }
}
