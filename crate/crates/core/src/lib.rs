//! Exact computational algebra for enhanced Burnside rings, orbifold
//! monodromy zeta functions, and the Berglund–Hübsch duality of invertible
//! polynomials.
//!
//! Everything is computed over Q/Z and Z — no floating point, no truncated
//! series. Groups are small ("desk scale") by construction, so brute-force
//! enumeration backed by Smith normal form keeps every answer exact and
//! every claimed identity checkable.

pub mod abelian;
pub mod burnside;
mod error;
pub mod fuzz;
pub mod invertible;
pub mod report;
pub mod zeta;

pub use error::{Error, Result};

/// Default guard on group orders; constructors reject anything larger.
pub const DEFAULT_MAX_ORDER: u64 = 5000;
