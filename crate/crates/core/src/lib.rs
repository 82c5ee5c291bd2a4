//! Propositional logics from intuitionistic affine logic up to continuous
//! logic with halving: formulas, a sequent-derivation checker, finite
//! pocrim/hoop/coop semantics, exact dyadic truth values, a finite model
//! finder, and a bank of algebraic problems with brute-force oracles.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod corpus;
pub mod formula;
pub mod horn;
pub mod kernel;
pub mod search;
pub mod semantics;

pub use algebra::{classify, validate_pocrim, ClassFilter, ClassFlags, Dyadic, FiniteAlgebra};
pub use formula::{parse, Formula, Pattern};
pub use kernel::{check_derivation, AxiomId, Derivation, Logic, Rule, Sequent};
