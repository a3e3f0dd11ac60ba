//! Exact computational machinery for regular subalgebras of simple Lie algebras.
//!
//! The crate constructs irreducible root systems, enumerates and classifies
//! closed subsets of roots, builds simple highest-weight modules over exact
//! rationals, and decides whether a regular subalgebra is wide (every simple
//! module restricts indecomposably) or narrow (every non-trivial simple module
//! restricts decomposably), producing machine-checkable witness certificates.
//!
//! The crate is `no_std` (with `alloc`); all state is immutable after
//! construction and every operation is a pure function of its inputs, so the
//! types can be shared freely across worker threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chevmod;
pub mod classifier;
pub mod closed_sets;
pub mod dynkin;
pub mod error;
pub mod linalg;
pub mod literal;
pub mod rootsys;

pub use error::{Error, Result};
pub use rootsys::{Family, LieType, Root, RootSystem, Weight};
