//! Permutation groups: BSGS, element tables, classes, subgroups and quotients.

pub mod bsgs;
pub mod catalog;
pub mod handle;
pub mod perm;
pub mod quotient;
pub mod subgroup;

pub use handle::{build_group, conjugacy_classes, ConjClass, GroupHandle};
pub use perm::Perm;
pub use quotient::{quotient_group, Quotient};
pub use subgroup::Subgroup;
