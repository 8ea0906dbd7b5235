//! Tits indices and the two classifications of their standard Levi subsets.
//!
//! A [`TitsIndex`] is a root system with a distinguished set of simple roots
//! Δ₀ (the anisotropic kernel) and a finite group Γ of diagram automorphisms
//! stabilizing Δ₀. Standard Levi subsets are the Γ-stable `I` with
//! `Δ₀ ⊆ I ⊆ Δ`.
//!
//! Two subsets are *geometrically* associate when some element of the full
//! Weyl group carries one onto the other. They are *rationally* associate when
//! some element of the relative Weyl group (Weyl elements stabilizing the
//! split space, restricted to it) carries the relative roots of one Levi onto
//! those of the other. Relative roots are the nonzero orthogonal projections
//! of roots onto the split space.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::{close_group, node_orbits, DiagramAutomorphism};
use crate::error::{Error, Result};
use crate::linalg::{self, Projector, Vector, Q};
use crate::orbit::SetOrbit;
use crate::perm::Perm;
use crate::rootsys::{self, RootSet, RootSystem};
use crate::weyl::{self, ClosureOrbit, WeylElement};

#[derive(Debug, Clone)]
pub struct TitsIndex {
    rs: RootSystem,
    delta0: Vec<usize>,
    generators: Vec<DiagramAutomorphism>,
    gamma: Vec<DiagramAutomorphism>,
}

impl TitsIndex {
    /// Validates a triple (Δ, Δ₀, Γ). `delta0` holds 0-based simple-root
    /// positions and `automorphisms` 0-based node images generating Γ.
    pub fn new(rs: RootSystem, delta0: &[usize], automorphisms: &[Vec<usize>]) -> Result<TitsIndex> {
        let generators = automorphisms
            .iter()
            .map(|p| DiagramAutomorphism::new(&rs, p.clone()))
            .collect::<Result<Vec<_>>>()?;
        TitsIndex::from_automorphisms(rs, delta0, generators)
    }

    pub fn from_automorphisms(
        rs: RootSystem,
        delta0: &[usize],
        generators: Vec<DiagramAutomorphism>,
    ) -> Result<TitsIndex> {
        let n = rs.rank();
        let mut kernel = delta0.to_vec();
        kernel.sort_unstable();
        kernel.dedup();
        if let Some(&bad) = kernel.iter().find(|&&i| i >= n) {
            return Err(Error::NodeOutOfRange { index: bad + 1, rank: n });
        }
        for g in &generators {
            // Re-validate: the automorphism may have been built for another system.
            DiagramAutomorphism::new(&rs, g.node_perm().to_vec())?;
            for &i in &kernel {
                let j = g.apply(i);
                if kernel.binary_search(&j).is_err() {
                    return Err(Error::KernelNotStable { from: i + 1, to: j + 1 });
                }
            }
        }
        let generators: Vec<DiagramAutomorphism> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let gamma = close_group(n, &generators);
        Ok(TitsIndex {
            rs,
            delta0: kernel,
            generators,
            gamma,
        })
    }

    /// Split index: Δ₀ empty and Γ trivial.
    pub fn split(rs: RootSystem) -> TitsIndex {
        TitsIndex::from_automorphisms(rs, &[], Vec::new()).expect("split index is valid")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn delta0(&self) -> &[usize] {
        &self.delta0
    }

    /// Non-identity generators of Γ as supplied.
    pub fn generators(&self) -> &[DiagramAutomorphism] {
        &self.generators
    }

    /// All of Γ, including the identity.
    pub fn gamma(&self) -> &[DiagramAutomorphism] {
        &self.gamma
    }

    pub fn is_quasi_split(&self) -> bool {
        self.delta0.is_empty()
    }

    pub fn is_split(&self) -> bool {
        self.delta0.is_empty() && self.generators.is_empty()
    }

    /// Γ-orbits on Δ∖Δ₀, each sorted, ordered by smallest member.
    pub fn relative_nodes(&self) -> Vec<Vec<usize>> {
        node_orbits(self.rs.rank(), &self.generators)
            .into_iter()
            .filter(|o| self.delta0.binary_search(&o[0]).is_err())
            .collect()
    }

    /// All Γ-stable subsets containing Δ₀, ordered by size and then
    /// lexicographically.
    pub fn stable_levi_subsets(&self) -> Vec<LeviSubset> {
        let orbits = self.relative_nodes();
        let mut out: Vec<LeviSubset> = (0u64..(1u64 << orbits.len()))
            .map(|mask| {
                let mut members = self.delta0.clone();
                for (k, o) in orbits.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        members.extend(o);
                    }
                }
                members.sort_unstable();
                LeviSubset { members }
            })
            .collect();
        out.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members.cmp(&b.members)));
        out
    }

    /// The split space: vectors in the span of the roots fixed by Γ and
    /// orthogonal to Δ₀.
    pub fn split_space(&self) -> SplitSpace {
        let n = self.rs.rank();
        let mut equations: Vec<Vec<Q>> = Vec::new();
        for g in &self.generators {
            for i in 0..n {
                let j = g.apply(i);
                if i != j {
                    let mut row = vec![Q::zero(); n];
                    row[i] += linalg::q(1);
                    row[j] -= linalg::q(1);
                    equations.push(row);
                }
            }
        }
        let simple: Vec<Vector> = self.rs.simple_roots().cloned().collect();
        for &k in &self.delta0 {
            equations.push(simple.iter().map(|a| linalg::dot(a, &simple[k])).collect());
        }
        let basis: Vec<Vector> = linalg::kernel(&equations, n)
            .iter()
            .map(|c| linalg::combination(c, &simple, self.rs.ambient_dim()))
            .collect();
        SplitSpace::new(basis, self.rs.ambient_dim())
    }

    pub fn relative_system(&self) -> RelativeSystem {
        RelativeSystem::new(self)
    }

    /// Nonzero projections of the roots in `set` onto the split space.
    pub fn relative_roots(&self, set: &RootSet) -> Vec<Vector> {
        let split = self.split_space();
        let mut out: Vec<Vector> = set
            .indices()
            .iter()
            .map(|&i| split.project(self.rs.root(i)))
            .filter(|v| !linalg::is_zero(v))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Relative Weyl group by exhaustive filtering: enumerate W, keep the
    /// elements stabilizing the split space, restrict, and deduplicate.
    pub fn relative_weyl(&self, order_bound: usize) -> Result<RelativeWeylGroup> {
        let rel = self.relative_system();
        let group = weyl::generate_group(&self.rs, order_bound)?;
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let mut elements = Vec::new();
        for w in group.elements {
            if let Some(p) = rel.restrict(&w) {
                if seen.insert(p.clone(), ()).is_none() {
                    elements.push(RelativeElement { perm: p, lift: w });
                }
            }
        }
        Ok(RelativeWeylGroup { elements })
    }

    /// Generators of the relative Weyl group, one per Γ-orbit `O` on Δ∖Δ₀:
    /// `w₀(Δ₀ ∪ O) ∘ w₀(Δ₀)`. Returns `None` when one of them fails to
    /// stabilize the split space (which does not happen for admissible
    /// indices).
    pub fn relative_generators(&self) -> Option<Vec<RelativeElement>> {
        let rel = self.relative_system();
        let w_kernel = weyl::longest_element(&self.rs, &self.delta0);
        self.relative_nodes()
            .iter()
            .map(|orbit| {
                let mut nodes = self.delta0.clone();
                nodes.extend(orbit);
                nodes.sort_unstable();
                let lift = weyl::longest_element(&self.rs, &nodes).compose(&w_kernel);
                rel.restrict(&lift).map(|perm| RelativeElement { perm, lift })
            })
            .collect()
    }

    /// Relative Weyl group as the closure of [`Self::relative_generators`].
    pub fn relative_weyl_from_generators(&self, order_bound: usize) -> Result<Option<Vec<Perm>>> {
        let Some(gens) = self.relative_generators() else {
            return Ok(None);
        };
        let rel_count = self.relative_system().len();
        if gens.is_empty() {
            return Ok(Some(vec![Perm::identity(rel_count)]));
        }
        let perms: Vec<Perm> = gens.into_iter().map(|g| g.perm).collect();
        weyl::close_perms(&perms, order_bound).map(Some)
    }

    /// Geometric and rational partitions of the standard Levi subsets.
    pub fn classify(&self, order_bound: usize) -> Result<ClassificationReport> {
        self.classify_with(order_bound, RationalMethod::RelativeGenerators)
    }

    /// As [`Self::classify`], choosing how the relative Weyl group is
    /// obtained. The generator route falls back to enumeration when a
    /// generator does not stabilize the split space.
    pub fn classify_with(&self, order_bound: usize, method: RationalMethod) -> Result<ClassificationReport> {
        let subsets = self.stable_levi_subsets();
        let mut witnesses = Vec::new();
        let geometric = self.geometric_partition(&subsets, order_bound, &mut witnesses)?;
        let (rational, method) = self.rational_partition(&subsets, order_bound, method, &mut witnesses)?;
        let agreement = geometric == rational;
        let rs = &self.rs;
        Ok(ClassificationReport {
            index: IndexSummary::of(self),
            subsets: subsets
                .iter()
                .map(|s| SubsetEntry {
                    members: s.labels(),
                    rank: s.len(),
                    kind: rootsys::format_types(&rootsys::subsystem_type(rs, &s.members)),
                })
                .collect(),
            geometric_classes: geometric,
            rational_classes: rational,
            witnesses,
            agreement,
            rational_method: method,
        })
    }

    fn geometric_partition(
        &self,
        subsets: &[LeviSubset],
        order_bound: usize,
        witnesses: &mut Vec<Witness>,
    ) -> Result<Vec<Vec<usize>>> {
        // Non-reduced systems are compared through their non-multipliable
        // roots; the simple roots keep their positions and the reflections
        // are the same transformations.
        let reduced;
        let work = if self.rs.is_reduced() {
            &self.rs
        } else {
            reduced = self.rs.non_multipliable()?.system;
            &reduced
        };
        let mut class_of = vec![usize::MAX; subsets.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subsets.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            class_of[i] = classes.len();
            let mut members = vec![i];
            let closure_size = work.parabolic_closure(&subsets[i].members).len();
            let orbit = ClosureOrbit::explore(work, &subsets[i].members, order_bound)?;
            for j in (i + 1)..subsets.len() {
                if class_of[j] != usize::MAX
                    || subsets[j].len() != subsets[i].len()
                    || work.parabolic_closure(&subsets[j].members).len() != closure_size
                {
                    continue;
                }
                if let Some(w) = orbit.witness(work, &subsets[j].members)? {
                    class_of[j] = class_of[i];
                    members.push(j);
                    witnesses.push(Witness {
                        relation: Relation::Geometric,
                        from: i,
                        to: j,
                        word: labels_of_word(&w),
                    });
                }
            }
            classes.push(members);
        }
        Ok(classes)
    }

    fn rational_partition(
        &self,
        subsets: &[LeviSubset],
        order_bound: usize,
        method: RationalMethod,
        witnesses: &mut Vec<Witness>,
    ) -> Result<(Vec<Vec<usize>>, RationalMethod)> {
        let rel = self.relative_system();
        let fast = match method {
            RationalMethod::RelativeGenerators => self.relative_generators(),
            RationalMethod::Enumeration => None,
        };
        let (gens, method) = match fast {
            Some(g) => (g, RationalMethod::RelativeGenerators),
            None => (self.relative_weyl(order_bound)?.elements, RationalMethod::Enumeration),
        };
        let perms: Vec<&Perm> = gens.iter().map(|g| &g.perm).collect();
        let sets: Vec<Vec<u16>> = subsets
            .iter()
            .map(|s| rel.relative_set(&self.rs.parabolic_closure(&s.members)))
            .collect();
        let mut class_of = vec![usize::MAX; subsets.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subsets.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            class_of[i] = classes.len();
            let mut members = vec![i];
            let orbit = SetOrbit::explore(&perms, &sets[i], order_bound)?;
            for j in (i + 1)..subsets.len() {
                if class_of[j] != usize::MAX || sets[j].len() != sets[i].len() {
                    continue;
                }
                let Some(pos) = orbit.position(&sets[j]) else {
                    continue;
                };
                let mut lift = WeylElement::identity(&self.rs);
                for &g in orbit.word_to(pos).iter().rev() {
                    lift = gens[g].lift.compose(&lift);
                }
                if rel.relative_set(&lift.apply_set(&self.rs.parabolic_closure(&subsets[i].members))) != sets[j] {
                    return Err(Error::Internal("rational witness failed re-verification".into()));
                }
                class_of[j] = class_of[i];
                members.push(j);
                witnesses.push(Witness {
                    relation: Relation::Rational,
                    from: i,
                    to: j,
                    word: labels_of_word(&lift),
                });
            }
            classes.push(members);
        }
        Ok((classes, method))
    }

    /// Partition of the standard Levi subsets by association of the subsets
    /// themselves under `W^Γ`. For quasi-split indices this is a second,
    /// independent route to the rational partition.
    pub fn partition_by_fixed_subgroup(&self) -> Result<Vec<Vec<usize>>> {
        let subsets = self.stable_levi_subsets();
        let gens = weyl::fixed_subgroup_generators(&self.rs, &self.generators);
        let mut class_of = vec![usize::MAX; subsets.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subsets.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            class_of[i] = classes.len();
            let mut members = vec![i];
            let orbit = weyl::subset_orbit(&self.rs, &gens, &subsets[i].members)?;
            for j in (i + 1)..subsets.len() {
                if class_of[j] != usize::MAX {
                    continue;
                }
                let target = RootSet::from_indices(
                    subsets[j].members.iter().map(|&k| self.rs.simple_indices()[k]).collect(),
                );
                if orbit.contains(&target) {
                    class_of[j] = class_of[i];
                    members.push(j);
                }
            }
            classes.push(members);
        }
        Ok(classes)
    }

    /// Runs [`Self::classify`] and reports whether the two partitions agree.
    pub fn verify_theorem(&self, order_bound: usize) -> Result<(bool, ClassificationReport)> {
        let report = self.classify(order_bound)?;
        Ok((report.agreement, report))
    }

    /// Replays every witness in `report` against this index.
    pub fn check_witnesses(&self, report: &ClassificationReport) -> Result<()> {
        let rel = self.relative_system();
        let subsets = self.stable_levi_subsets();
        for wit in &report.witnesses {
            let word: Vec<usize> = wit.word.iter().map(|&l| l - 1).collect();
            let w = WeylElement::from_word(&self.rs, &word);
            let (from, to) = (&subsets[wit.from].members, &subsets[wit.to].members);
            let ok = match wit.relation {
                Relation::Geometric => {
                    let target = RootSet::from_indices(to.iter().map(|&k| self.rs.simple_indices()[k]).collect());
                    w.apply_simple_subset(&self.rs, from) == target
                }
                Relation::Rational => {
                    rel.relative_set(&w.apply_set(&self.rs.parabolic_closure(from)))
                        == rel.relative_set(&self.rs.parabolic_closure(to))
                }
            };
            if !ok {
                return Err(Error::Internal(format!(
                    "{:?} witness {} -> {} does not replay",
                    wit.relation, wit.from, wit.to
                )));
            }
        }
        Ok(())
    }
}

fn labels_of_word(w: &WeylElement) -> Vec<usize> {
    w.word().map(|ws| ws.iter().map(|&i| i + 1).collect()).unwrap_or_default()
}

/// A Γ-stable set of simple roots containing Δ₀ (0-based positions).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviSubset {
    pub members: Vec<usize>,
}

impl LeviSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        LeviSubset { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        self.members.iter().map(|&i| i + 1).collect()
    }
}

impl fmt::Display for LeviSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// Basis of the split space with the orthogonal projection onto it.
#[derive(Debug, Clone)]
pub struct SplitSpace {
    projector: Projector,
}

impl SplitSpace {
    fn new(basis: Vec<Vector>, dim: usize) -> Self {
        SplitSpace {
            projector: Projector::new(basis, dim),
        }
    }

    pub fn basis(&self) -> &[Vector] {
        self.projector.basis()
    }

    pub fn dim(&self) -> usize {
        self.projector.basis().len()
    }

    pub fn project(&self, v: &[Q]) -> Vector {
        self.projector.project(v)
    }
}

/// The relative roots of an index, with the projection class of every root.
#[derive(Debug, Clone)]
pub struct RelativeSystem {
    split: SplitSpace,
    vectors: Vec<Vector>,
    class_of_root: Vec<Option<usize>>,
}

impl RelativeSystem {
    pub fn new(ix: &TitsIndex) -> Self {
        let split = ix.split_space();
        let projections: Vec<Vector> = ix.rs.roots().iter().map(|r| split.project(r)).collect();
        let mut vectors: Vec<Vector> = projections.iter().filter(|v| !linalg::is_zero(v)).cloned().collect();
        vectors.sort();
        vectors.dedup();
        let class_of_root = projections
            .iter()
            .map(|p| vectors.binary_search(p).ok())
            .collect();
        RelativeSystem {
            split,
            vectors,
            class_of_root,
        }
    }

    pub fn split_space(&self) -> &SplitSpace {
        &self.split
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn class_of_root(&self, root: usize) -> Option<usize> {
        self.class_of_root[root]
    }

    /// Sorted indices of the relative roots coming from `set`.
    pub fn relative_set(&self, set: &RootSet) -> Vec<u16> {
        let mut out: Vec<u16> = set
            .indices()
            .iter()
            .filter_map(|&i| self.class_of_root[i].map(|c| c as u16))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Restriction of `w` to the split space as a permutation of the relative
    /// roots, or `None` if `w` does not stabilize the split space.
    ///
    /// `w` stabilizes the split space exactly when it respects the partition
    /// of the roots by projection: the differences of roots with equal
    /// projection, together with the roots projecting to zero, span the
    /// orthogonal complement.
    pub fn restrict(&self, w: &WeylElement) -> Option<Perm> {
        const UNSET: u32 = u32::MAX;
        const ZERO: u32 = u32::MAX - 1;
        let mut map = vec![UNSET; self.vectors.len()];
        for (root, class) in self.class_of_root.iter().enumerate() {
            let image = self.class_of_root[w.apply_root(root)];
            match (class, image) {
                (None, None) => {}
                (None, Some(_)) | (Some(_), None) => return None,
                (Some(c), Some(d)) => {
                    if map[*c] == UNSET {
                        map[*c] = d as u32;
                    } else if map[*c] != d as u32 {
                        return None;
                    }
                }
            }
        }
        debug_assert!(!map.contains(&ZERO));
        Some(Perm::from_vec(map.into_iter().map(|x| x as u16).collect()))
    }
}

/// An element of the relative Weyl group with an absolute lift.
#[derive(Debug, Clone)]
pub struct RelativeElement {
    pub perm: Perm,
    pub lift: WeylElement,
}

#[derive(Debug, Clone)]
pub struct RelativeWeylGroup {
    pub elements: Vec<RelativeElement>,
}

impl RelativeWeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Geometric,
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RationalMethod {
    /// Orbits under the generators `w₀(Δ₀ ∪ O) ∘ w₀(Δ₀)`.
    RelativeGenerators,
    /// Orbits under the exhaustively filtered relative Weyl group.
    Enumeration,
}

/// `w` carries subset `from` to subset `to`; `word` lists 1-based simple
/// reflection labels, leftmost applied last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub relation: Relation,
    pub from: usize,
    pub to: usize,
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSummary {
    /// Irreducible factor types, e.g. `["E6"]` or `["A3", "A3"]`.
    pub types: Vec<String>,
    pub rank: usize,
    /// 1-based labels.
    pub delta0: Vec<usize>,
    /// Generators of Γ in cycle notation.
    pub automorphisms: Vec<String>,
    pub gamma_order: usize,
}

impl IndexSummary {
    fn of(ix: &TitsIndex) -> Self {
        IndexSummary {
            types: ix.rs.factor_types().iter().map(ToString::to_string).collect(),
            rank: ix.rs.rank(),
            delta0: ix.delta0.iter().map(|&i| i + 1).collect(),
            automorphisms: ix.generators.iter().map(DiagramAutomorphism::to_cycles).collect(),
            gamma_order: ix.gamma.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetEntry {
    /// 1-based labels.
    pub members: Vec<usize>,
    pub rank: usize,
    /// Type of the Levi root subsystem, e.g. `A2xA1`.
    pub kind: String,
}

/// Both partitions of the standard Levi subsets of an index. Classes are
/// lists of positions into `subsets`, each sorted, ordered by first member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub index: IndexSummary,
    pub subsets: Vec<SubsetEntry>,
    pub geometric_classes: Vec<Vec<usize>>,
    pub rational_classes: Vec<Vec<usize>>,
    pub witnesses: Vec<Witness>,
    pub agreement: bool,
    pub rational_method: RationalMethod,
}

impl ClassificationReport {
    /// Number of classes per subset rank, for ranks `0..=max`.
    pub fn classes_per_rank(classes: &[Vec<usize>], subsets: &[SubsetEntry]) -> Vec<usize> {
        let max = subsets.iter().map(|s| s.rank).max().unwrap_or(0);
        let mut counts = vec![0; max + 1];
        for c in classes {
            counts[subsets[c[0]].rank] += 1;
        }
        counts
    }

    /// Classes as sets of 1-based label lists.
    pub fn labelled(&self, classes: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
        classes
            .iter()
            .map(|c| c.iter().map(|&i| self.subsets[i].members.clone()).collect())
            .collect()
    }
}

/// True when every class of `fine` lies inside a class of `coarse`.
pub fn refines(fine: &[Vec<usize>], coarse: &[Vec<usize>]) -> bool {
    let mut owner = HashMap::new();
    for (k, c) in coarse.iter().enumerate() {
        for &i in c {
            owner.insert(i, k);
        }
    }
    fine.iter().all(|c| {
        let first = owner.get(&c[0]);
        first.is_some() && c.iter().all(|i| owner.get(i) == first)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_cycle_notation;
    use crate::rootsys::{CartanType, Series};
    use crate::weyl::DEFAULT_ORDER_BOUND;

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::new(s, n).unwrap()
    }

    fn index(s: Series, n: usize, delta0: &[usize], cycles: &[&str]) -> Result<TitsIndex> {
        let autos: Vec<Vec<usize>> = cycles.iter().map(|c| parse_cycle_notation(c, n).unwrap()).collect();
        TitsIndex::new(rs(s, n), delta0, &autos)
    }

    #[test]
    fn validation_examples() {
        let e6 = index(Series::E, 6, &[], &["(1 6)(3 5)"]).unwrap();
        assert_eq!(e6.gamma().len(), 2);
        assert!(index(Series::A, 3, &[], &["(1 3)"]).is_ok());
        let err = index(Series::A, 3, &[0], &["(1 3)"]).unwrap_err();
        assert_eq!(err, Error::KernelNotStable { from: 1, to: 3 });
        let err = index(Series::B, 3, &[], &["(1 3)"]).unwrap_err();
        assert!(matches!(err, Error::CartanViolated { .. }));
    }

    #[test]
    fn stable_subset_examples() {
        let e6 = index(Series::E, 6, &[], &["(1 6)(3 5)"]).unwrap();
        assert_eq!(e6.stable_levi_subsets().len(), 16);
        let d4 = index(Series::D, 4, &[], &["(1 3 4)"]).unwrap();
        let subs: Vec<Vec<usize>> = d4.stable_levi_subsets().into_iter().map(|s| s.labels()).collect();
        assert_eq!(subs, vec![vec![], vec![2], vec![1, 3, 4], vec![1, 2, 3, 4]]);
        assert_eq!(TitsIndex::split(rs(Series::A, 2)).stable_levi_subsets().len(), 4);
    }

    #[test]
    fn split_space_dimensions() {
        assert_eq!(TitsIndex::split(rs(Series::A, 2)).split_space().dim(), 2);
        let e6 = index(Series::E, 6, &[], &["(1 6)(3 5)"]).unwrap();
        assert_eq!(e6.split_space().dim(), 4);
        let aniso = index(Series::A, 3, &[0, 1, 2], &[]).unwrap();
        assert_eq!(aniso.split_space().dim(), 0);
    }

    #[test]
    fn relative_root_examples() {
        let a2 = rs(Series::A, 2);
        let split = TitsIndex::split(a2.clone());
        let all = RootSet::from_indices((0..6).collect());
        assert_eq!(split.relative_roots(&all), a2.roots().to_vec());

        let a3 = index(Series::A, 3, &[], &["(1 3)"]).unwrap();
        let all = RootSet::from_indices((0..12).collect());
        let rel = a3.relative_roots(&all);
        assert_eq!(rel.len(), 8);
        assert_eq!(rootsys::identify_type(&rel), vec![CartanType::new(Series::B, 2)]);

        let kernel = index(Series::E, 6, &[1, 3], &[]).unwrap();
        let closure = kernel.root_system().parabolic_closure(&[1, 3]);
        assert!(kernel.relative_roots(&closure).is_empty());
    }

    #[test]
    fn relative_weyl_examples() {
        let b3 = TitsIndex::split(rs(Series::B, 3));
        assert_eq!(b3.relative_weyl(DEFAULT_ORDER_BOUND).unwrap().order(), 48);
        let gl = index(Series::A, 5, &[0, 1, 3, 4], &[]).unwrap();
        assert_eq!(gl.relative_weyl(DEFAULT_ORDER_BOUND).unwrap().order(), 2);
        let fast = gl.relative_weyl_from_generators(DEFAULT_ORDER_BOUND).unwrap().unwrap();
        assert_eq!(fast.len(), 2);
    }

    #[test]
    fn classify_split_a2() {
        let r = TitsIndex::split(rs(Series::A, 2)).classify(DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(r.geometric_classes, vec![vec![0], vec![1, 2], vec![3]]);
        assert_eq!(r.rational_classes, r.geometric_classes);
        assert!(r.agreement);
    }

    #[test]
    fn classify_anisotropic() {
        let ix = index(Series::A, 3, &[0, 1, 2], &[]).unwrap();
        let r = ix.classify(DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(r.subsets.len(), 1);
        assert_eq!(r.geometric_classes, vec![vec![0]]);
        assert!(r.agreement);
    }

    #[test]
    fn refines_checks_containment() {
        assert!(refines(&[vec![0], vec![1], vec![2]], &[vec![0, 1], vec![2]]));
        assert!(!refines(&[vec![0, 2], vec![1]], &[vec![0, 1], vec![2]]));
    }
}

#[cfg(test)]
mod e6_tests {
    use super::*;
    use crate::diagram::parse_cycle_notation;
    use crate::rootsys::Series;
    use crate::weyl::DEFAULT_ORDER_BOUND;

    fn two_e6() -> TitsIndex {
        let rs = RootSystem::new(Series::E, 6).unwrap();
        TitsIndex::new(rs, &[], &[parse_cycle_notation("(1 6)(3 5)", 6).unwrap()]).unwrap()
    }

    #[test]
    fn relative_weyl_of_quasi_split_e6() {
        let ix = two_e6();
        assert_eq!(ix.relative_weyl(DEFAULT_ORDER_BOUND).unwrap().order(), 1152);
        let fast = ix.relative_weyl_from_generators(DEFAULT_ORDER_BOUND).unwrap().unwrap();
        assert_eq!(fast.len(), 1152);
        assert_eq!(ix.relative_system().len(), 48);
    }

    #[test]
    fn classify_quasi_split_e6() {
        let ix = two_e6();
        let r = ix.classify(DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(r.geometric_classes.len(), 12);
        assert_eq!(ClassificationReport::classes_per_rank(&r.rational_classes, &r.subsets), vec![1, 1, 2, 2, 3, 2, 1]);
        assert!(r.agreement);
        assert_eq!(r.rational_method, RationalMethod::RelativeGenerators);
        ix.check_witnesses(&r).unwrap();
        assert_eq!(ix.partition_by_fixed_subgroup().unwrap(), r.rational_classes);
    }
}
