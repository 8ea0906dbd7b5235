//! Diagram automorphisms: permutations of the simple roots preserving the
//! Cartan matrix.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::perm::Perm;
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramAutomorphism {
    node_perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism {
            node_perm: (0..rank).collect(),
        }
    }

    /// Validates that `node_perm` (0-based images of the simple roots) is a
    /// permutation preserving the Cartan matrix of `rs`.
    pub fn new(rs: &RootSystem, node_perm: Vec<usize>) -> Result<Self> {
        let n = rs.rank();
        if node_perm.len() != n {
            return Err(Error::NotAPermutation {
                rank: n,
                detail: format!("{} images given", node_perm.len()),
            });
        }
        let mut seen = vec![false; n];
        for &x in &node_perm {
            if x >= n {
                return Err(Error::NodeOutOfRange { index: x + 1, rank: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation {
                    rank: n,
                    detail: format!("node {} is hit twice", x + 1),
                });
            }
        }
        let a = rs.cartan_matrix();
        for i in 0..n {
            for j in 0..n {
                let (si, sj) = (node_perm[i], node_perm[j]);
                if a[si][sj] != a[i][j] {
                    return Err(Error::CartanViolated {
                        i: i + 1,
                        j: j + 1,
                        si: si + 1,
                        sj: sj + 1,
                        before: a[i][j],
                        after: a[si][sj],
                    });
                }
            }
        }
        Ok(DiagramAutomorphism { node_perm })
    }

    /// Parses cycle notation with 1-based node labels, e.g. `(1 6)(3 5)`.
    /// The empty string and `()` denote the identity.
    pub fn parse_cycles(rs: &RootSystem, text: &str) -> Result<Self> {
        let perm = parse_cycle_notation(text, rs.rank())?;
        DiagramAutomorphism::new(rs, perm)
    }

    pub fn node_perm(&self) -> &[usize] {
        &self.node_perm
    }

    pub fn apply(&self, node: usize) -> usize {
        self.node_perm[node]
    }

    pub fn is_identity(&self) -> bool {
        self.node_perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &DiagramAutomorphism) -> DiagramAutomorphism {
        DiagramAutomorphism {
            node_perm: first.node_perm.iter().map(|&i| self.node_perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> DiagramAutomorphism {
        let mut inv = vec![0; self.node_perm.len()];
        for (i, &x) in self.node_perm.iter().enumerate() {
            inv[x] = i;
        }
        DiagramAutomorphism { node_perm: inv }
    }

    /// Extension to the span of the simple roots, αi ↦ α_σ(i), as a
    /// permutation of the root list.
    pub fn root_perm(&self, rs: &RootSystem) -> Perm {
        let simple: Vec<_> = (0..rs.rank()).map(|i| rs.simple_root(self.node_perm[i]).clone()).collect();
        let images = (0..rs.num_roots())
            .map(|r| {
                let c: Vec<Q> = rs.coefficients(r).iter().map(|&x| linalg::q(x)).collect();
                let v = linalg::combination(&c, &simple, rs.ambient_dim());
                rs.index_of(&v).expect("diagram automorphism maps roots to roots") as u16
            })
            .collect();
        Perm::from_vec(images)
    }

    /// Cycle notation with 1-based labels; `()` for the identity.
    pub fn to_cycles(&self) -> String {
        let n = self.node_perm.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for s in 0..n {
            if seen[s] || self.node_perm[s] == s {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.node_perm[x];
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Parses 1-based cycle notation into 0-based images.
pub fn parse_cycle_notation(text: &str, rank: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..rank).collect();
    let mut used = vec![false; rank];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Format(format!("expected `(` at `{rest}`")));
        };
        let Some(end) = body.find(')') else {
            return Err(Error::Format("unclosed cycle".to_string()));
        };
        let mut cycle = Vec::new();
        for tok in body[..end].split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let label: usize = tok
                .parse()
                .map_err(|_| Error::Format(format!("`{tok}` is not a node label")))?;
            if label == 0 || label > rank {
                return Err(Error::NodeOutOfRange { index: label, rank });
            }
            if std::mem::replace(&mut used[label - 1], true) {
                return Err(Error::NotAPermutation {
                    rank,
                    detail: format!("node {label} appears in more than one place"),
                });
            }
            cycle.push(label - 1);
        }
        for k in 0..cycle.len() {
            perm[cycle[k]] = cycle[(k + 1) % cycle.len()];
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(perm)
}

/// Closure of a set of automorphisms under composition (includes the
/// identity), sorted.
pub fn close_group(rank: usize, generators: &[DiagramAutomorphism]) -> Vec<DiagramAutomorphism> {
    let id = DiagramAutomorphism::identity(rank);
    let mut seen: BTreeSet<DiagramAutomorphism> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Orbits of the group generated by `generators` on the nodes, each sorted,
/// ordered by smallest member.
pub fn node_orbits(rank: usize, generators: &[DiagramAutomorphism]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![usize::MAX; rank];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for s in 0..rank {
        if orbit_of[s] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![s];
        orbit_of[s] = id;
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for g in generators {
                let y = g.apply(x);
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

/// All diagram automorphisms of `rs`, found by backtracking over node
/// assignments that preserve the Cartan matrix. Sorted.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<DiagramAutomorphism> {
    let a = rs.cartan_matrix();
    let n = rs.rank();
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        k: usize,
        a: &[Vec<i64>],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<DiagramAutomorphism>,
    ) {
        let n = a.len();
        if k == n {
            out.push(DiagramAutomorphism {
                node_perm: assign.clone(),
            });
            return;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let ok = (0..k).all(|j| a[cand][assign[j]] == a[k][j] && a[assign[j]][cand] == a[j][k]);
            if ok {
                assign[k] = cand;
                used[cand] = true;
                extend(k + 1, a, assign, used, out);
                used[cand] = false;
                assign[k] = usize::MAX;
            }
        }
    }
    extend(0, &a, &mut assign, &mut used, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::new(s, n).unwrap()
    }

    #[test]
    fn parses_and_prints_cycles() {
        let e6 = rs(Series::E, 6);
        let g = DiagramAutomorphism::parse_cycles(&e6, "(1 6)(3 5)").unwrap();
        assert_eq!(g.node_perm(), &[5, 1, 4, 3, 2, 0]);
        assert_eq!(g.to_cycles(), "(1 6)(3 5)");
        assert!(DiagramAutomorphism::parse_cycles(&e6, "()").unwrap().is_identity());
        assert!(DiagramAutomorphism::parse_cycles(&e6, "").unwrap().is_identity());
    }

    #[test]
    fn out_of_range_node() {
        let err = DiagramAutomorphism::parse_cycles(&rs(Series::E, 6), "(1 9)").unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
    }

    #[test]
    fn cartan_violation_names_pair() {
        let err = DiagramAutomorphism::parse_cycles(&rs(Series::E, 6), "(1 2)").unwrap_err();
        assert!(matches!(err, Error::CartanViolated { .. }), "{err}");
        let err = DiagramAutomorphism::parse_cycles(&rs(Series::B, 3), "(1 3)").unwrap_err();
        assert!(matches!(err, Error::CartanViolated { .. }));
    }

    #[test]
    fn automorphism_group_sizes() {
        let sizes = [
            (Series::A, 1, 1),
            (Series::A, 4, 2),
            (Series::B, 3, 1),
            (Series::D, 4, 6),
            (Series::D, 5, 2),
            (Series::E, 6, 2),
            (Series::E, 7, 1),
            (Series::F, 4, 1),
            (Series::G, 2, 1),
        ];
        for (s, n, k) in sizes {
            assert_eq!(diagram_automorphisms(&rs(s, n)).len(), k, "{s}{n}");
        }
        let a2a2 = RootSystem::product(&[rs(Series::A, 2), rs(Series::A, 2)]).unwrap();
        assert_eq!(diagram_automorphisms(&a2a2).len(), 8);
    }

    #[test]
    fn root_perm_preserves_negation_and_simple_roots() {
        let d4 = rs(Series::D, 4);
        let g = DiagramAutomorphism::parse_cycles(&d4, "(1 3 4)").unwrap();
        let p = g.root_perm(&d4);
        for i in 0..d4.num_roots() {
            assert_eq!(p.apply(d4.negation(i)), d4.negation(p.apply(i)));
        }
        for i in 0..4 {
            assert_eq!(p.apply(d4.simple_indices()[i]), d4.simple_indices()[g.apply(i)]);
        }
        assert_eq!(close_group(4, &[g]).len(), 3);
        assert_eq!(node_orbits(4, &[DiagramAutomorphism::parse_cycles(&d4, "(1 3 4)").unwrap()]), vec![vec![0, 2, 3], vec![1]]);
    }
}
