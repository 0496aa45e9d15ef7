//! Exact cycle structure of the power map x ↦ x^a on finite groups.
//!
//! Raising to the a-th power is a self-map of any finite group; iterating it
//! turns the group into a functional graph in which every component carries
//! exactly one cycle with rooted trees hanging off the cycle nodes. This crate
//! computes the number of cycles exactly — from element-order spectra and from
//! per-family closed forms — builds and decomposes the graphs explicitly, and
//! ships a verification harness that cross-checks every formula against brute
//! force and hunts for counterexamples to the cyclic-minimality conjecture.

pub mod arith;
pub mod formulas;
pub mod graph;
pub mod groups;
pub mod harness;
pub mod spectrum;
