//! Numerical semigroups generated by Lucas numbers shifted by a Lucas number.
//!
//! For `a >= 0` the families are
//!
//! * `S(a) = ⟨l_a, l_a + l_0, l_a + l_1, ...⟩`
//! * `T(a) = ⟨l_a + l_0, l_a + l_1, ...⟩`
//!
//! where `l` is the Lucas sequence `2, 1, 3, 4, 7, 11, ...`. The crate
//! evaluates closed forms for their minimal generators, Apéry sets,
//! Frobenius numbers and genus, and checks every one of them against a
//! generic semigroup engine that knows nothing about Lucas numbers.

pub mod cli;
pub mod error;
pub mod lucas_family;
pub mod semigroup;
pub mod sequences;
pub mod zeckendorf;

pub use error::{Error, Result};
pub use lucas_family::{Family, FamilyReport, Mismatch, ReportMode};
pub use semigroup::{AperyTable, NumericalSemigroup, DEFAULT_TABLE_BOUND};
pub use sequences::{fibonacci, lucas, lucas_tilde, SequenceCache};
pub use zeckendorf::{SparseSubset, ZeckendorfDecomposition};
