//! Exact arithmetic for finite abelian groups realized inside (Q/Z)^n.

pub mod character;
pub mod element;
pub mod group;
pub mod pairing;
pub mod qz;
pub mod smith;

pub use character::{character_group, Character};
pub use element::GroupElement;
pub use group::{basis_decomposition, minimal_generators, AmbientGroup, Subgroup};
pub use pairing::PairedGroups;
pub use qz::QZ;
pub use smith::{smith_decomposition, IntMat, Smith};
