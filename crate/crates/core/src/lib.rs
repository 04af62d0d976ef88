//! Cycle sets and their structure groups in the monomial representation.
//!
//! A cycle set on `{1..n}` is stored as the table of left translations
//! `ψ(s_i)`. The structure group embeds into monomial matrices over `ℤ[q^±1]`
//! and every element is carried as an exponent vector plus a permutation.

mod error;

pub mod bounds;
pub mod calculus;
pub mod census;
pub mod cycle_set;
pub mod examples;
pub mod format;
pub mod garside;
pub mod germ;
pub mod monomial;
pub mod perm;
pub mod zappa;

pub use calculus::PiTuple;
pub use cycle_set::{CycleSet, PermGroupInfo, PermTable, Validation, Witness};
pub use error::{Error, Result};

pub use germ::{ClassReport, Germ, GermElement};
pub use monomial::MonomialElement;
pub use perm::Permutation;
