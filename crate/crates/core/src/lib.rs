//! Multi-quasisymmetric functions over semigroup exponents.
//!
//! The crate computes exactly, over the rationals, in the quasi-shuffle
//! Hopf algebra of tensor words on exponent vectors, its monomial and
//! fundamental bases, its truncated power-series realization, and the free
//! commutative Rota-Baxter algebra of weight 1 on finitely many generators.
//!
//! ```
//! use mqsym::bases::f_to_m;
//! use mqsym::compositions::NatComposition;
//!
//! let c: NatComposition = "[[1],[2]]".parse().unwrap();
//! assert_eq!(f_to_m(&c).terms().len(), 4);
//! ```

pub mod algebra;
pub mod bases;
pub mod cli;
pub mod compositions;
pub mod error;
pub mod exponents;
pub mod hopf;
pub mod quasi_shuffle;
pub mod realization;
pub mod rota_baxter;

pub use algebra::{LinComb, Rational};
pub use error::{Error, Result};
pub use exponents::{ExponentMonoid, ExponentVector, ExtNat, Nat};
