//! Pseudofunctors from a finite index category into finite categories, and
//! the lax transformations and modifications into a constant diagram.
//!
//! Covariant: `D(φ): D(A) → D(B)` for `φ: A → B` and
//! `δ_{φ;ψ}: D(φψ) ⇒ D(φ);D(ψ)`. Contravariant: `D(φ): D(B) → D(A)` and
//! `δ_{φ;ψ}: D(φψ) ⇒ D(ψ);D(φ)`. In both cases `δ_A: D(1_A) ⇒ id`.

mod modification;
mod pseudofunctor;
mod transformation;

pub use modification::{enumerate_modifications, Modification};
pub use pseudofunctor::{Pseudofunctor, Variance};
pub use transformation::{enumerate_transformations, LaxTransformation, TransformationKind};
