//! Conjugacy classes of standard Levi subgroups at the level of root systems
//! and Tits indices.
//!
//! The crate builds root systems exactly, enumerates Weyl group orbits as
//! permutations of root lists, and compares two partitions of the Galois-stable
//! subsets of simple roots containing the anisotropic kernel: association
//! under the absolute Weyl group (geometric) and under the relative Weyl group
//! acting on the split part (rational).

pub mod cases;
pub mod diagram;
pub mod error;
pub mod format;
pub mod index;
pub mod linalg;
pub mod orbit;
pub mod perm;
pub mod rootsys;
pub mod weyl;

pub use diagram::DiagramAutomorphism;
pub use error::{Error, Result};
pub use index::{ClassificationReport, LeviSubset, RationalMethod, TitsIndex};
pub use perm::Perm;
pub use rootsys::{CartanType, RootSet, RootSystem, Series};
pub use weyl::{GroupEnumeration, WeylElement};
