//! Combinatorial machinery for bicolored (plabic) graphs on a disk: zig-zag
//! strand diagrams, positroid cyclic rank matrices and their grid fronts,
//! cluster seeds with signed and ordinary X-transformations, square moves
//! with exact coordinate transport, boundary measurement via flows, and a
//! floating-point check of the conjugate-Lagrangian local model.
//!
//! All combinatorial and algebraic computations are exact over arbitrary
//! precision rationals; only the `numerics` module works in `f64`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cluster;
pub mod error;
pub mod generators;
pub mod graph;
pub mod positroid;
pub mod square;
pub mod strands;




pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact scalar used throughout the crate.
pub type Rat = BigRational;

/// Build a rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}
