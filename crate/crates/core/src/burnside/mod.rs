//! The enhanced Burnside ring of a finite abelian group.

pub mod concrete;
pub mod duality;
pub mod element;
pub mod irreducible;

pub use concrete::ConcreteEnhancedSet;
pub use duality::{
    filtration_level, fixed_point_data, fixed_point_data_concrete, reduce, reduce_general,
    reduce_generator_fast, saito_dual, FixedPointData, FixedTerm,
};
pub use element::BurnsideElement;
pub use irreducible::{all_irreducibles, b1_generators, Irreducible};
