//! Breadth-first orbits of point sets under a list of permutations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Orbit of a sorted point set, with BFS parent pointers.
///
/// Members are explored in BFS order, generators in index order, so both the
/// member order and the recovered words are deterministic.
#[derive(Debug, Clone)]
pub struct SetOrbit {
    members: Vec<Vec<u16>>,
    /// `(parent member, generator)` that first reached each member.
    parent: Vec<Option<(usize, usize)>>,
    lookup: HashMap<Vec<u16>, usize>,
}

impl SetOrbit {
    /// Orbit of `start` under `generators`; fails when more than `bound`
    /// members are reached.
    pub fn explore(generators: &[&Perm], start: &[u16], bound: usize) -> Result<SetOrbit> {
        let mut start = start.to_vec();
        start.sort_unstable();
        let mut members = vec![start.clone()];
        let mut parent = vec![None];
        let mut lookup = HashMap::new();
        lookup.insert(start, 0);
        let mut head = 0;
        while head < members.len() {
            for (g, gen) in generators.iter().enumerate() {
                let image = gen.image_of_set(&members[head]);
                if lookup.contains_key(&image) {
                    continue;
                }
                if members.len() >= bound {
                    return Err(Error::OrderBoundExceeded {
                        what: "orbit",
                        bound,
                        reached: members.len(),
                    });
                }
                lookup.insert(image.clone(), members.len());
                members.push(image);
                parent.push(Some((head, g)));
            }
            head += 1;
        }
        Ok(SetOrbit {
            members,
            parent,
            lookup,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vec<u16>] {
        &self.members
    }

    /// Position of a (sorted) set in the orbit.
    pub fn position(&self, set: &[u16]) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    /// Generator indices `[g_k, ..., g_1]` such that applying `g_1` first and
    /// `g_k` last carries the start set to member `target`.
    pub fn word_to(&self, target: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = target;
        while let Some((p, g)) = self.parent[cur] {
            word.push(g);
            cur = p;
        }
        word
    }
}
