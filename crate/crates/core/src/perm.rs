use std::fmt;

/// A permutation of `0..n` stored as its image array.
///
/// Composition follows function notation: `a.compose(&b)` applies `b` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u16]>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= u16::MAX as usize + 1);
        Perm((0..n).map(|i| i as u16).collect())
    }

    /// Panics if `images` is not a permutation.
    pub fn from_vec(images: Vec<u16>) -> Perm {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!std::mem::replace(&mut seen[i as usize], true), "not a permutation");
        }
        Perm(images.into_boxed_slice())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, first: &Perm) -> Perm {
        Perm(first.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm(inv.into_boxed_slice())
    }

    /// Sorted image of a point set.
    pub fn image_of_set(&self, set: &[u16]) -> Vec<u16> {
        let mut out: Vec<u16> = set.iter().map(|&i| self.0[i as usize]).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::from_vec(vec![1, 0, 2]);
        let b = Perm::from_vec(vec![0, 2, 1]);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), a.apply(b.apply(1)));
        assert!(ab.compose(&ab.inverse()).is_identity());
    }

    #[test]
    #[should_panic]
    fn rejects_repeats() {
        Perm::from_vec(vec![0, 0]);
    }
}
