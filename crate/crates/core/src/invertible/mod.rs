//! Invertible polynomials: Berglund–Hübsch transposition, diagonal symmetry
//! groups, Milnor-fibre Euler characteristics in the enhanced Burnside ring,
//! reduced orbifold zeta functions, and theorem verification.

mod parse;
mod symmetry;
mod verify;

pub use parse::{
    parse_generator_list, parse_poly_file, parse_polynomial, parse_polynomial_with_vars,
    InvertiblePolynomial, PolyFile,
};
pub use symmetry::{
    build_dual_pair, enhanced_euler, geometric_lefschetz, reduced_enhanced_euler,
    reduced_orbifold_zeta, symmetry_data, DualPair, SymmetryData,
};
pub use verify::{verify_all, verify_duality, Theorem};
