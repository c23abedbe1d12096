//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no total functions from a nonempty domain into an empty codomain")]
    NoTotalFunctions,

    #[error("partial function application: {0} is not in the table domain")]
    PartialApplication(String),

    #[error("nesting bound exceeded: {0}")]
    NestingBound(String),

    #[error("invalid universe: {0}")]
    Universe(String),

    #[error("invalid bounds: {0}")]
    Bounds(String),

    #[error("monoid law violation in {monoid}: {law} fails at {witness}")]
    MonoidLaw { monoid: String, law: String, witness: String },

    #[error("arity mismatch for {name}: expected {expected} arguments, got {got}")]
    Arity { name: String, expected: usize, got: usize },

    #[error("strength {strength} is not applicable to monad {monad}")]
    StrengthMonad { strength: String, monad: String },

    #[error("unknown builtin strength: {0}")]
    UnknownStrength(String),

    #[error("invalid signature {0}: {1}")]
    Signature(String, String),

    #[error("malformed term: {0}")]
    MalformedTerm(String),

    #[error("distributive-law family error: {0}")]
    DistLawFamily(String),

    #[error("unverified input: {0}")]
    Unverified(String),

    #[error("composite bind paths disagree at {input}: {lhs} vs {rhs}")]
    CompositePathMismatch { input: String, lhs: String, rhs: String },

    #[error("{0}")]
    Invalid(String),
}
