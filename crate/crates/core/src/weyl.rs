//! Weyl group elements as permutations of the root list.
//!
//! An element is determined by where it sends the simple roots, so storing
//! the full root permutation makes composition an array lookup and equality
//! an array comparison. Elements built from simple reflections also carry a
//! word: `[i1, ..., ik]` stands for `s_i1 ∘ ... ∘ s_ik` (0-based positions in
//! the simple-root list, rightmost applied first).

use std::collections::{HashMap, HashSet, VecDeque};

use crate::diagram::{node_orbits, DiagramAutomorphism};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector, Q};
use crate::orbit::SetOrbit;
use crate::perm::Perm;
use crate::rootsys::{RootSet, RootSystem};

/// Default ceiling on enumerated group and orbit sizes.
pub const DEFAULT_ORDER_BOUND: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    perm: Perm,
    word: Option<Vec<usize>>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            perm: Perm::identity(rs.num_roots()),
            word: Some(Vec::new()),
        }
    }

    pub fn from_perm(perm: Perm, word: Option<Vec<usize>>) -> Self {
        WeylElement { perm, word }
    }

    /// Element given by a word in simple reflections.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(rs);
        for &i in word.iter().rev() {
            w = simple_reflection(rs, i).compose(&w);
        }
        w
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &WeylElement) -> WeylElement {
        let word = match (&self.word, &first.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        WeylElement {
            perm: self.perm.compose(&first.perm),
            word,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            perm: self.perm.inverse(),
            word: self.word.as_ref().map(|w| w.iter().rev().copied().collect()),
        }
    }

    pub fn apply_root(&self, root: usize) -> usize {
        self.perm.apply(root)
    }

    pub fn apply_set(&self, set: &RootSet) -> RootSet {
        RootSet::from_indices(set.indices().iter().map(|&i| self.perm.apply(i)).collect())
    }

    /// Image of a set of simple roots (positions into the simple-root list)
    /// as a set of root indices.
    pub fn apply_simple_subset(&self, rs: &RootSystem, subset: &[usize]) -> RootSet {
        RootSet::from_indices(
            subset
                .iter()
                .map(|&i| self.perm.apply(rs.simple_indices()[i]))
                .collect(),
        )
    }

    /// Linear action on a vector in the span of the roots.
    pub fn apply_vector(&self, rs: &RootSystem, v: &[Q]) -> Vector {
        let simple: Vec<Vector> = rs.simple_roots().cloned().collect();
        let gram_inv = linalg::inverse(&linalg::gram(&simple)).expect("simple roots independent");
        let rhs: Vec<Q> = simple.iter().map(|a| linalg::dot(a, v)).collect();
        let c = linalg::mat_vec(&gram_inv, &rhs);
        let images: Vec<Vector> = rs
            .simple_indices()
            .iter()
            .map(|&i| rs.root(self.perm.apply(i)).clone())
            .collect();
        linalg::combination(&c, &images, rs.ambient_dim())
    }
}

/// Permutation of the roots induced by the reflection through root `alpha`.
pub fn reflection_perm(rs: &RootSystem, alpha: usize) -> Perm {
    let a = rs.root(alpha);
    let images = rs
        .roots()
        .iter()
        .map(|v| {
            let img = RootSystem::reflect(v, a);
            rs.index_of(&img).expect("reflection permutes the roots") as u16
        })
        .collect();
    Perm::from_vec(images)
}

/// Reflection through the `i`-th simple root.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> WeylElement {
    WeylElement {
        perm: reflection_perm(rs, rs.simple_indices()[i]),
        word: Some(vec![i]),
    }
}

pub fn simple_reflections(rs: &RootSystem) -> Vec<WeylElement> {
    (0..rs.rank()).map(|i| simple_reflection(rs, i)).collect()
}

/// A finite group of Weyl elements in deterministic BFS order.
#[derive(Debug, Clone)]
pub struct GroupEnumeration {
    pub elements: Vec<WeylElement>,
    /// Positions of the designated generators in `elements`.
    pub generator_indices: Vec<usize>,
}

impl GroupEnumeration {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.iter().any(|x| x.perm == w.perm)
    }

    pub fn generators(&self) -> Vec<&WeylElement> {
        self.generator_indices.iter().map(|&i| &self.elements[i]).collect()
    }
}

/// Closure of `generators` under composition, starting from the identity on
/// `points` points. New elements are `g ∘ x` for `x` in BFS order and `g` in
/// generator order.
pub fn generate_from(points: usize, generators: &[WeylElement], bound: usize) -> Result<GroupEnumeration> {
    let identity = WeylElement {
        perm: Perm::identity(points),
        word: Some(Vec::new()),
    };
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(identity.perm.clone(), 0);
    let mut elements = vec![identity];
    let mut head = 0;
    while head < elements.len() {
        for g in generators {
            let y = g.compose(&elements[head]);
            if index.contains_key(&y.perm) {
                continue;
            }
            if elements.len() >= bound {
                return Err(Error::OrderBoundExceeded {
                    what: "group",
                    bound,
                    reached: elements.len(),
                });
            }
            index.insert(y.perm.clone(), elements.len());
            elements.push(y);
        }
        head += 1;
    }
    let generator_indices = generators.iter().map(|g| index[&g.perm]).collect();
    Ok(GroupEnumeration {
        elements,
        generator_indices,
    })
}

/// The full Weyl group, generated by the simple reflections.
pub fn generate_group(rs: &RootSystem, order_bound: usize) -> Result<GroupEnumeration> {
    generate_from(rs.num_roots(), &simple_reflections(rs), order_bound)
}

fn as_points(set: &RootSet) -> Vec<u16> {
    set.indices().iter().map(|&i| i as u16).collect()
}

fn from_points(points: &[u16]) -> RootSet {
    RootSet::from_indices(points.iter().map(|&i| i as usize).collect())
}

/// Orbit of a set of root indices under the group generated by `generators`.
#[derive(Debug, Clone)]
pub struct RootSetOrbit {
    points: usize,
    inner: SetOrbit,
}

impl RootSetOrbit {
    /// `points` is the number of roots the generators act on.
    pub fn explore(points: usize, generators: &[WeylElement], start: &RootSet, bound: usize) -> Result<Self> {
        let perms: Vec<&Perm> = generators.iter().map(|g| &g.perm).collect();
        Ok(RootSetOrbit {
            points,
            inner: SetOrbit::explore(&perms, &as_points(start), bound)?,
        })
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn members(&self) -> Vec<RootSet> {
        self.inner.members().iter().map(|m| from_points(m)).collect()
    }

    pub fn contains(&self, set: &RootSet) -> bool {
        self.inner.position(&as_points(set)).is_some()
    }

    /// Element of the generated group carrying the start set to `target`.
    pub fn witness(&self, generators: &[WeylElement], target: &RootSet) -> Option<WeylElement> {
        let pos = self.inner.position(&as_points(target))?;
        let word = self.inner.word_to(pos);
        let mut w = WeylElement {
            perm: Perm::identity(self.points),
            word: Some(Vec::new()),
        };
        for &g in word.iter().rev() {
            w = generators[g].compose(&w);
        }
        Some(w)
    }
}

/// Orbit of the simple roots `subset` (as a set of root vectors, identified
/// with root indices) under the group generated by `generators`.
pub fn subset_orbit(rs: &RootSystem, generators: &[WeylElement], subset: &[usize]) -> Result<RootSetOrbit> {
    let start = RootSet::from_indices(subset.iter().map(|&i| rs.simple_indices()[i]).collect());
    RootSetOrbit::explore(rs.num_roots(), generators, &start, DEFAULT_ORDER_BOUND)
}

/// Searches the group generated by `generators` for `w` with `w(I) = J` as
/// sets of root vectors. The witness is re-verified before it is returned.
pub fn are_associate(
    rs: &RootSystem,
    generators: &[WeylElement],
    i_subset: &[usize],
    j_subset: &[usize],
) -> Result<Option<WeylElement>> {
    let target = RootSet::from_indices(j_subset.iter().map(|&j| rs.simple_indices()[j]).collect());
    if i_subset.len() != j_subset.len() {
        return Ok(None);
    }
    let orbit = subset_orbit(rs, generators, i_subset)?;
    let Some(w) = orbit.witness(generators, &target) else {
        return Ok(None);
    };
    if w.apply_simple_subset(rs, i_subset) != target {
        return Err(Error::Internal("association witness failed re-verification".into()));
    }
    Ok(Some(w))
}

/// Association inside the full Weyl group of `rs`.
///
/// Works on parabolic closures: `I` and `J` are associate iff their closures
/// are conjugate, and a conjugating element is corrected by an element of
/// `W_J` until it sends the base `I` onto `J`. Orbits of closures are much
/// smaller than orbits of the subsets themselves.
pub fn associate_in_weyl_group(
    rs: &RootSystem,
    i_subset: &[usize],
    j_subset: &[usize],
    bound: usize,
) -> Result<Option<WeylElement>> {
    let closure_orbit = ClosureOrbit::explore(rs, i_subset, bound)?;
    closure_orbit.witness(rs, j_subset)
}

/// Orbit of the parabolic closure of a subset under the full Weyl group.
#[derive(Debug, Clone)]
pub struct ClosureOrbit {
    source: Vec<usize>,
    generators: Vec<WeylElement>,
    orbit: RootSetOrbit,
}

impl ClosureOrbit {
    pub fn explore(rs: &RootSystem, subset: &[usize], bound: usize) -> Result<Self> {
        let generators = simple_reflections(rs);
        let orbit = RootSetOrbit::explore(rs.num_roots(), &generators, &rs.parabolic_closure(subset), bound)?;
        Ok(ClosureOrbit {
            source: subset.to_vec(),
            generators,
            orbit,
        })
    }

    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.is_empty()
    }

    /// Element `w` with `w(source) = target`, if the closures are conjugate.
    pub fn witness(&self, rs: &RootSystem, target: &[usize]) -> Result<Option<WeylElement>> {
        if target.len() != self.source.len() {
            return Ok(None);
        }
        let Some(mut w) = self.orbit.witness(&self.generators, &rs.parabolic_closure(target)) else {
            return Ok(None);
        };
        let goal = RootSet::from_indices(target.iter().map(|&j| rs.simple_indices()[j]).collect());
        // w maps the positive system of the source closure to some positive
        // system of the target closure; walk it to the standard one.
        let mut positive = w.apply_set(&rs.positive_closure(&self.source));
        while w.apply_simple_subset(rs, &self.source) != goal {
            let Some(&j) = target
                .iter()
                .find(|&&j| !positive.contains(rs.simple_indices()[j]))
            else {
                return Err(Error::Internal("base correction stalled".into()));
            };
            let s = simple_reflection(rs, j);
            positive = s.apply_set(&positive);
            w = s.compose(&w);
        }
        Ok(Some(w))
    }
}

/// Longest element of the parabolic subgroup `W_subset`.
pub fn longest_element(rs: &RootSystem, subset: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    let reflections: Vec<(usize, WeylElement)> = subset.iter().map(|&i| (i, simple_reflection(rs, i))).collect();
    loop {
        let next = reflections
            .iter()
            .find(|(i, _)| rs.is_positive(w.apply_root(rs.simple_indices()[*i])));
        match next {
            Some((_, s)) => w = w.compose(s),
            None => return w,
        }
    }
}

/// Elements of `group` commuting with every automorphism in `gamma`, acting
/// on the roots.
pub fn fixed_subgroup(
    rs: &RootSystem,
    group: &GroupEnumeration,
    gamma: &[DiagramAutomorphism],
) -> GroupEnumeration {
    let autos: Vec<Perm> = gamma.iter().map(|g| g.root_perm(rs)).collect();
    let elements: Vec<WeylElement> = group
        .elements
        .iter()
        .filter(|w| autos.iter().all(|g| g.compose(&w.perm) == w.perm.compose(g)))
        .cloned()
        .collect();
    let generator_indices = if elements.is_empty() { Vec::new() } else { vec![0] };
    GroupEnumeration {
        elements,
        generator_indices,
    }
}

/// Generators of the fixed subgroup: the longest elements of the parabolic
/// subgroups attached to the orbits of `gamma` on the simple roots.
pub fn fixed_subgroup_generators(rs: &RootSystem, gamma: &[DiagramAutomorphism]) -> Vec<WeylElement> {
    node_orbits(rs.rank(), gamma)
        .iter()
        .map(|orbit| longest_element(rs, orbit))
        .collect()
}

/// Breadth-first closure helper for element lists given by perms only.
pub fn close_perms(generators: &[Perm], bound: usize) -> Result<Vec<Perm>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let id = Perm::identity(first.len());
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.contains(&y) {
                continue;
            }
            if out.len() >= bound {
                return Err(Error::OrderBoundExceeded {
                    what: "group",
                    bound,
                    reached: out.len(),
                });
            }
            seen.insert(y.clone());
            out.push(y.clone());
            queue.push_back(y);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::new(s, n).unwrap()
    }

    #[test]
    fn a1_reflection_swaps_roots() {
        let a1 = rs(Series::A, 1);
        let s = simple_reflection(&a1, 0);
        assert_eq!(s.apply_root(0), 1);
        assert_eq!(s.apply_root(1), 0);
    }

    #[test]
    fn a2_reflection_on_alpha2() {
        let a2 = rs(Series::A, 2);
        let s1 = simple_reflection(&a2, 0);
        let img = a2.root(s1.apply_root(a2.simple_indices()[1]));
        let expected = linalg::add(a2.simple_root(0), a2.simple_root(1));
        assert_eq!(img, &expected);
    }

    #[test]
    fn reflections_are_involutions() {
        for (s, n) in [(Series::A, 4), (Series::B, 3), (Series::C, 3), (Series::D, 4), (Series::G, 2), (Series::F, 4), (Series::BC, 2), (Series::E, 6)] {
            let r = rs(s, n);
            for i in 0..n {
                let x = simple_reflection(&r, i);
                assert!(x.compose(&x).is_identity(), "{s}{n} s{i}");
            }
        }
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(generate_group(&rs(Series::B, 2), 100).unwrap().order(), 8);
        assert_eq!(generate_group(&rs(Series::D, 4), 1000).unwrap().order(), 192);
    }

    #[test]
    fn bound_failure_reports_partial_count() {
        let err = generate_group(&rs(Series::A, 3), 10).unwrap_err();
        match err {
            Error::OrderBoundExceeded { bound, reached, .. } => {
                assert_eq!(bound, 10);
                assert_eq!(reached, 10);
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs(Series::A, 2);
        let gens = simple_reflections(&a2);
        let orbit = subset_orbit(&a2, &gens, &[0]).unwrap();
        assert_eq!(orbit.len(), 6);
        assert!(orbit.members().iter().all(|m| m.len() == 1));
        assert_eq!(subset_orbit(&a2, &[], &[0, 1]).unwrap().len(), 1);
        let d4 = rs(Series::D, 4);
        assert_eq!(subset_orbit(&d4, &simple_reflections(&d4), &[1]).unwrap().len(), 24);
    }

    #[test]
    fn association_examples() {
        let b2 = rs(Series::B, 2);
        let gens = simple_reflections(&b2);
        assert!(are_associate(&b2, &gens, &[0], &[1]).unwrap().is_none());
        assert!(are_associate(&b2, &gens, &[1], &[1]).unwrap().unwrap().is_identity());
        let e6 = rs(Series::E, 6);
        let gens = simple_reflections(&e6);
        let w = are_associate(&e6, &gens, &[1], &[3]).unwrap().unwrap();
        assert_eq!(w.apply_root(e6.simple_indices()[1]), e6.simple_indices()[3]);
        let w = associate_in_weyl_group(&e6, &[1], &[3], 1000).unwrap().unwrap();
        assert_eq!(w.apply_root(e6.simple_indices()[1]), e6.simple_indices()[3]);
        assert_eq!(WeylElement::from_word(&e6, w.word().unwrap()), w);
    }

    #[test]
    fn longest_element_negates_positive_roots() {
        let a3 = rs(Series::A, 3);
        let w0 = longest_element(&a3, &[0, 1, 2]);
        assert_eq!(w0.word().unwrap().len(), 6);
        for i in 0..a3.num_roots() {
            assert_ne!(a3.is_positive(i), a3.is_positive(w0.apply_root(i)));
        }
        let w = longest_element(&a3, &[0, 2]);
        assert_eq!(w.word().unwrap().len(), 2);
    }

    #[test]
    fn fixed_subgroup_of_d4_swap() {
        let d4 = rs(Series::D, 4);
        let group = generate_group(&d4, 1000).unwrap();
        let swap = DiagramAutomorphism::parse_cycles(&d4, "(3 4)").unwrap();
        // W(D4)^σ ≅ W(B3), of order 2^3 * 3! = 48.
        assert_eq!(fixed_subgroup(&d4, &group, &[swap.clone()]).order(), 48);
        let id = DiagramAutomorphism::identity(4);
        assert_eq!(fixed_subgroup(&d4, &group, &[id]).order(), 192);
        let fast = generate_from(d4.num_roots(), &fixed_subgroup_generators(&d4, &[swap]), 1000).unwrap();
        assert_eq!(fast.order(), 48);
    }

    #[test]
    fn apply_vector_agrees_with_root_perm() {
        let b3 = rs(Series::B, 3);
        let w = WeylElement::from_word(&b3, &[0, 2, 1, 2]);
        for i in 0..b3.num_roots() {
            assert_eq!(&w.apply_vector(&b3, b3.root(i)), b3.root(w.apply_root(i)));
        }
    }
}
