//! Finite-instance constructions for categories of elements, right fractions,
//! and pseudocolimits of cofiltered diagrams of finite categories.
//!
//! Every construction is checked by brute force: categories carry full
//! composition tables, and universal properties are verified by enumerating
//! functors and natural transformations into small test categories.
//!
//! Composition is written diagrammatically throughout: `compose(f, g)` is
//! "`f` followed by `g`".

pub mod ambient;
pub mod catalog;
pub mod diagram;
pub mod elements;
pub mod error;
pub mod fincat;
pub mod fractions;
pub mod report;
mod union_find;

pub use error::{Error, Result};
pub use fincat::{ArrowId, CategoryBuilder, FinCategory, Functor, IsoWitness, NatTrans, ObjectId};
pub use report::{Check, ValidationReport, VerifierReport, Violation, ViolationKind};
