//! Exhaustive catalog of the groups of order ≤ 64.
//!
//! Builds every isomorphism class bottom-up by cyclic extensions (plus A₅
//! from explicit generators), validates the per-order class counts against
//! the classical table, and exports each class as the left-regular
//! permutation images of a small generating set — the catalog format the
//! power-map toolkit consumes.

pub mod enumerate;
pub mod morph;
pub mod table;

pub use enumerate::{enumerate_up_to, enumerate_up_to_with, export_catalog, CLASS_COUNTS};
pub use table::{Table, MAX_ORDER};
