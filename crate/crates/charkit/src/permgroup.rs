//! Permutation arithmetic, group enumeration, conjugacy classes,
//! centralizer orders, power maps, and rationality detection.

mod classes;
mod group;
mod perm;

pub use classes::{conjugacy_classes, ClassSet, ConjugacyClass};
pub use group::{enumerate, PermGroup, DEFAULT_ENUMERATION_CAP};
pub use perm::{parse_cycles, Permutation};
