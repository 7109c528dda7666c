//! Exact Chevalley-Weil multiplicities for finite group actions on curves.
//!
//! The pipeline: build a [`group::FiniteGroup`], compute its
//! [`chartab::CharacterTable`] over a prime field, enumerate
//! [`hurwitz::HurwitzVector`]s for a genus, evaluate multiplicity vectors
//! with [`cw`], and partition the vectors by representation type with
//! [`decomposition`]. [`metacyclic`] covers the Schur-multiplier bound.

pub mod chartab;
pub mod cli;
pub mod cw;
pub mod decomposition;
pub mod error;
pub mod group;
pub mod hurwitz;
pub mod metacyclic;
pub mod modular;

pub use error::Error;
