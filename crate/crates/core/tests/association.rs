//! Association laws, witness soundness, and BFS orbits against orbits
//! computed by applying every group element.

use std::collections::BTreeSet;

use levi_core::diagram::diagram_automorphisms;
use levi_core::rootsys::{RootSet, RootSystem, Series};
use levi_core::weyl::{
    are_associate, associate_in_weyl_group, close_perms, fixed_subgroup, fixed_subgroup_generators, generate_group,
    simple_reflections, subset_orbit, DEFAULT_ORDER_BOUND,
};
use proptest::prelude::*;

/// Systems with Weyl group of order at most 10^4.
fn small_systems() -> Vec<RootSystem> {
    let s = |x, n| RootSystem::new(x, n).unwrap();
    vec![
        s(Series::A, 1),
        s(Series::A, 2),
        s(Series::A, 3),
        s(Series::A, 4),
        s(Series::A, 5),
        s(Series::B, 2),
        s(Series::B, 3),
        s(Series::B, 4),
        s(Series::C, 3),
        s(Series::D, 4),
        s(Series::D, 5),
        s(Series::F, 4),
        s(Series::G, 2),
        s(Series::BC, 2),
        s(Series::BC, 3),
        RootSystem::product(&[s(Series::A, 2), s(Series::A, 2)]).unwrap(),
        RootSystem::product(&[s(Series::B, 2), s(Series::A, 1)]).unwrap(),
    ]
}

fn subset(rank: usize, mask: u32) -> Vec<usize> {
    (0..rank).filter(|i| mask & (1 << i) != 0).collect()
}

fn simple_set(rs: &RootSystem, nodes: &[usize]) -> RootSet {
    RootSet::from_indices(nodes.iter().map(|&i| rs.simple_indices()[i]).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn association_is_an_equivalence(sys in 0usize..17, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let rs = &small_systems()[sys];
        let gens = simple_reflections(rs);
        let n = rs.rank();
        let (i, j, k) = (subset(n, a), subset(n, b), subset(n, c));

        let id = are_associate(rs, &gens, &i, &i).unwrap().expect("reflexive");
        prop_assert_eq!(id.apply_simple_subset(rs, &i), simple_set(rs, &i));

        let ij = are_associate(rs, &gens, &i, &j).unwrap();
        let ji = are_associate(rs, &gens, &j, &i).unwrap();
        prop_assert_eq!(ij.is_some(), ji.is_some());
        if let Some(w) = &ij {
            prop_assert_eq!(w.apply_simple_subset(rs, &i), simple_set(rs, &j));
            prop_assert_eq!(w.inverse().apply_simple_subset(rs, &j), simple_set(rs, &i));
        }

        let jk = are_associate(rs, &gens, &j, &k).unwrap();
        let ik = are_associate(rs, &gens, &i, &k).unwrap();
        if let (Some(u), Some(v)) = (&ij, &jk) {
            prop_assert!(ik.is_some());
            prop_assert_eq!(v.compose(u).apply_simple_subset(rs, &i), simple_set(rs, &k));
        }
    }

    #[test]
    fn closure_orbits_agree_with_subset_orbits(sys in 0usize..17, a in any::<u32>(), b in any::<u32>()) {
        let rs = &small_systems()[sys];
        let gens = simple_reflections(rs);
        let n = rs.rank();
        let (i, j) = (subset(n, a), subset(n, b));
        let direct = are_associate(rs, &gens, &i, &j).unwrap();
        let via_closures = associate_in_weyl_group(rs, &i, &j, DEFAULT_ORDER_BOUND).unwrap();
        prop_assert_eq!(direct.is_some(), via_closures.is_some());
        if let Some(w) = via_closures {
            prop_assert_eq!(w.apply_simple_subset(rs, &i), simple_set(rs, &j));
        }
    }
}

#[test]
fn bfs_orbits_match_the_full_group_action() {
    for rs in small_systems() {
        let group = generate_group(&rs, DEFAULT_ORDER_BOUND).unwrap();
        assert!(group.order() <= 10_000);
        let gens = simple_reflections(&rs);
        for mask in 0..(1u32 << rs.rank()) {
            let i = subset(rs.rank(), mask);
            let start = simple_set(&rs, &i);
            let oracle: BTreeSet<Vec<usize>> =
                group.elements.iter().map(|w| w.apply_set(&start).indices().to_vec()).collect();
            let bfs: BTreeSet<Vec<usize>> =
                subset_orbit(&rs, &gens, &i).unwrap().members().iter().map(|s| s.indices().to_vec()).collect();
            assert_eq!(bfs, oracle);
        }
    }
}

#[test]
fn fixed_subgroups_are_groups_commuting_with_the_automorphism() {
    for rs in small_systems() {
        let group = generate_group(&rs, DEFAULT_ORDER_BOUND).unwrap();
        for auto in diagram_automorphisms(&rs).into_iter().filter(|g| !g.is_identity()) {
            let fixed = fixed_subgroup(&rs, &group, std::slice::from_ref(&auto));
            let gamma = auto.root_perm(&rs);
            let members: BTreeSet<_> = fixed.elements.iter().map(|w| w.perm().clone()).collect();
            for w in &fixed.elements {
                assert_eq!(gamma.compose(w.perm()), w.perm().compose(&gamma));
                assert!(members.contains(&w.perm().inverse()));
                for v in fixed.elements.iter().take(8) {
                    assert!(members.contains(&w.perm().compose(v.perm())));
                }
            }
            // The longest elements of the Γ-orbits generate the same group.
            let gens: Vec<_> = fixed_subgroup_generators(&rs, std::slice::from_ref(&auto))
                .into_iter()
                .map(|w| w.perm().clone())
                .collect();
            let generated: BTreeSet<_> = close_perms(&gens, DEFAULT_ORDER_BOUND).unwrap().into_iter().collect();
            assert_eq!(generated, members);
        }
    }
}
