//! Lehmer-code lattices of weak-order intervals and their join-irreducible posets.
//!
//! For a permutation `ω` in one-line notation, the interval `[e, ω]` in the weak
//! order (all `σ` whose inversion set is contained in `Inv(ω)`) maps under the
//! Lehmer code to a distributive lattice in the product order on ℕⁿ. This crate
//! builds that lattice, constructs its poset of join-irreducibles `M_ω` by an
//! explicit coordinate formula, detects order patterns (B₂, parallelogram,
//! C₄-parallelogram) and permutation patterns, and exhaustively verifies the
//! structural claims relating the two worlds over small symmetric groups.
//!
//! ```
//! use mposet::perm::Permutation;
//! use mposet::join_irr::build_m;
//!
//! let w = Permutation::parse("3412").unwrap();
//! let m = build_m(&w);
//! assert_eq!(m.elements.len(), 4);
//! ```

pub mod export;
pub mod join_irr;
pub mod patterns;
pub mod perm;
pub mod verify;
pub mod weak_order;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid Lehmer code: {0}")]
    InvalidCode(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

// Book chapters double as doc-tests so the guide cannot drift from the API.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(permutations, "../../../book/src/permutations-and-lehmer-codes.md");
    chapter!(weak_order, "../../../book/src/weak-order-lattice.md");
    chapter!(join_irreducibles, "../../../book/src/join-irreducibles.md");
    chapter!(poset_patterns, "../../../book/src/poset-patterns.md");
    chapter!(verification, "../../../book/src/verification.md");
}
