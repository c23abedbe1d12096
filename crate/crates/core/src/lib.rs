//! Finite-model verification for monads equipped with strength.
//!
//! The crate enumerates bounded carriers of a catalog of monads (lists, trees,
//! exceptions, reader, writer, state, finite powerset, free polynomial
//! monads), builds pre-strengths and Kleisli strengths over them, derives
//! distributive laws over free monads from strength families, constructs the
//! resulting composite monads, and brute-force checks every relevant law over
//! the bounded universes, reporting minimal counterexamples.
//!
//! Everything is pure, deterministic, and safe to run in parallel: values are
//! immutable, enumeration order is fixed by a global total order, and sampled
//! function spaces are a pure function of the seed.

pub mod compose;
pub mod error;
pub mod lawcheck;
pub mod monad;
pub mod signature;
pub mod strength;
pub mod value;

pub use error::Error;
pub use value::{Bounds, Universe, Val};
