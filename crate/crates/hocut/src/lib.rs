//! Proof kernel, derivation checker and derivation transformers for
//! classical simple type theory with Leibniz equality.
//!
//! The calculi are one-sided sequent calculi over sets of β-normal
//! sentences. Besides checking, the crate builds the derivations that make
//! a formula *cut-strong* (it simulates cut at a fixed extra cost), turns
//! cut derivations into cut-free ones with them, and searches for small
//! proofs.

pub mod bench;
pub mod calculus;
pub mod cli;
pub mod kernel;
pub mod prover;
pub mod schemas;
pub mod syntax;
pub mod transform;
