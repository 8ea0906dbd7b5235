//! Root systems and Weyl groups against closed-form counts and a naive
//! reflection-closure construction.

use levi_core::linalg::{self, Vector};
use levi_core::rootsys::{identify_type, CartanType, RootSystem, Series};
use levi_core::weyl::{generate_group, DEFAULT_ORDER_BOUND};

fn test_matrix() -> Vec<(Series, usize)> {
    let mut out = Vec::new();
    out.extend((1..=6).map(|n| (Series::A, n)));
    out.extend((2..=6).map(|n| (Series::B, n)));
    out.extend((3..=6).map(|n| (Series::C, n)));
    out.extend((4..=6).map(|n| (Series::D, n)));
    out.extend([(Series::E, 6), (Series::F, 4), (Series::G, 2)]);
    out.extend((1..=3).map(|n| (Series::BC, n)));
    out
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn weyl_order_formula(s: Series, n: usize) -> u128 {
    let n = n as u128;
    match s {
        Series::A => factorial(n + 1),
        Series::B | Series::C | Series::BC => (1 << n) * factorial(n),
        Series::D => (1 << (n - 1)) * factorial(n),
        Series::E => [51_840, 2_903_040, 696_729_600][n as usize - 6],
        Series::F => 1152,
        Series::G => 12,
    }
}

fn root_count_formula(s: Series, n: usize) -> usize {
    match s {
        Series::A => n * (n + 1),
        Series::B | Series::C => 2 * n * n,
        Series::BC => 2 * n * n + 2 * n,
        Series::D => 2 * n * (n - 1),
        Series::E => [72, 126, 240][n - 6],
        Series::F => 48,
        Series::G => 12,
    }
}

/// All vectors reachable from the simple roots by reflections.
fn reflection_closure(simple: &[Vector]) -> Vec<Vector> {
    let mut roots: Vec<Vector> = simple.to_vec();
    let mut k = 0;
    while k < roots.len() {
        for s in simple {
            let v = RootSystem::reflect(&roots[k], s);
            if !roots.contains(&v) {
                roots.push(v);
            }
        }
        k += 1;
    }
    roots.sort();
    roots
}

#[test]
fn weyl_orders_match_formulas() {
    for (s, n) in test_matrix() {
        let rs = RootSystem::new(s, n).unwrap();
        let group = generate_group(&rs, DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(group.order() as u128, weyl_order_formula(s, n), "{s}{n}");
        assert_eq!(rs.weyl_order(), weyl_order_formula(s, n), "{s}{n}");
    }
}

#[test]
fn roots_are_the_reflection_closure_of_the_simple_roots() {
    for (s, n) in test_matrix() {
        let rs = RootSystem::new(s, n).unwrap();
        let simple: Vec<Vector> = rs.simple_roots().cloned().collect();
        let mut closure = reflection_closure(&simple);
        if s == Series::BC {
            // The closure of the simple roots misses the doubled short roots.
            let doubled: Vec<Vector> = closure
                .iter()
                .filter(|v| linalg::dot(v, v) == linalg::q(1))
                .map(|v| linalg::scale(linalg::q(2), v))
                .collect();
            closure.extend(doubled);
            closure.sort();
        }
        assert_eq!(closure, rs.roots(), "{s}{n}");
        assert_eq!(rs.num_roots(), root_count_formula(s, n), "{s}{n}");
    }
}

#[test]
fn every_root_is_a_one_signed_combination_of_simple_roots() {
    for (s, n) in test_matrix() {
        let rs = RootSystem::new(s, n).unwrap();
        let simple: Vec<Vector> = rs.simple_roots().cloned().collect();
        for i in 0..rs.num_roots() {
            let c = rs.coefficients(i);
            assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0), "{s}{n}");
            let q: Vec<_> = c.iter().map(|&x| linalg::q(x)).collect();
            assert_eq!(&linalg::combination(&q, &simple, rs.ambient_dim()), rs.root(i));
        }
    }
}

#[test]
fn type_detection_recovers_each_type() {
    for (s, n) in test_matrix() {
        let rs = RootSystem::new(s, n).unwrap();
        let mut want = CartanType::new(s, n);
        if s == Series::C && n == 2 {
            want = CartanType::new(Series::B, 2);
        }
        assert_eq!(identify_type(rs.roots()), vec![want], "{s}{n}");
    }
}
