//! Intuitionistic fuzzy parametrized soft sets (IFPS sets).
//!
//! An IFPS set attaches to every parameter `x` of a parameter set `E` an
//! intuitionistic degree pair `(alpha, beta)` (importance / unimportance)
//! and a support `f(x)`, a subset of a finite universe `U` of alternatives.
//!
//! The crate provides:
//!
//! * [`DegreePair`], [`IntuitionisticFuzzySet`] and [`FuzzySet`], the
//!   underlying fuzzy structures with their pointwise operations;
//! * [`IfpsSet`] and its algebra (subset, equality, complement, union,
//!   intersection, OR/AND sums and products);
//! * the two-stage [`reduction`] of an IFPS set to a fuzzy score over `U`;
//! * [`decision`]: ranking, argmax selection and group aggregation;
//! * [`lawcheck`]: seeded generators and an executable law suite;
//! * [`io`]: the canonical JSON document format.

pub mod decision;
mod degree;
mod error;
mod ifps;
mod ifs;
pub mod io;
pub mod lawcheck;
pub mod reduction;

pub use decision::{aggregate_group, decide, rank, GroupOperator, RankedDecision};
pub use degree::{DegreePair, TOLERANCE};
pub use error::{Error, Result};
pub use ifps::{Entry, IfpsSet};
pub use ifs::{FuzzySet, IntuitionisticFuzzySet};
pub use reduction::{reduce_fuzzy, reduce_intuitionistic, RangeWarning, Reduction};
