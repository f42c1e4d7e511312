//! Brute-force ground truth over finite abelian groups: enumeration of
//! groups, homomorphisms and extensions, and the tower of extension
//! closures of a kernel/cokernel-closed class.

mod closure;
mod group;
mod hom;
mod subgroups;

pub use closure::{ClosureReport, ExtensionWitness, Oracle, SnakeReport, SnakeViolation};
pub use group::{enumerate_groups, FinAbGroup};
pub(crate) use group::factorize;
pub use hom::{all_homs, cokernel_of, kernel_of, Hom};
pub use subgroups::{subgroup_profile, subgroups_of};

#[cfg(test)]
mod tests;
