//! The calculus of right fractions on a finite category: spans `x ← e → y`
//! with left leg in `W`, the sailboat relation identifying them, the four
//! fractions axioms, and the localization `C[W⁻¹]`.
//!
//! `W` is taken as given. It need not contain identities or be closed
//! under composition.

mod axioms;
mod localize;
mod shapes;
mod spans;
mod verify;

use std::sync::Arc;

pub use axioms::{check_axioms, Axiom, AxiomOutcome, AxiomReport, FillerWitness};
pub use localize::{
    induced_functor, inverts, localize, localize_with, Exhaustiveness, Inversion, LocalizedCategory,
    EXHAUSTIVE_SPAN_LIMIT,
};
pub use shapes::{shape_instances, ShapeInstance, ShapeKind};
pub use spans::{sailboat_quotient, span_compose, span_compose_all, Span, SpanQuotient};
pub use verify::{verify_localization_up, verify_localization_up_candidate, verify_pseudocolimit};

use crate::error::{Error, Result};
use crate::fincat::{ArrowId, FinCategory, ObjectId};

/// A category with a chosen set `W` of arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionsInput {
    category: Arc<FinCategory>,
    /// Members of `W` in canonical arrow order, without repeats.
    weq: Vec<ArrowId>,
    in_w: Vec<bool>,
}

impl FractionsInput {
    pub fn new(category: Arc<FinCategory>, weq: impl IntoIterator<Item = ArrowId>) -> Result<Self> {
        let mut in_w = vec![false; category.arrow_count()];
        for w in weq {
            if w.0 >= category.arrow_count() {
                return Err(Error::input(format!("W refers to missing arrow #{}", w.0)));
            }
            in_w[w.0] = true;
        }
        let weq = category.arrows().filter(|w| in_w[w.0]).collect();
        Ok(FractionsInput { category, weq, in_w })
    }

    pub fn from_names(category: Arc<FinCategory>, names: &[&str]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| category.arrow_named(n))
            .collect::<Result<Vec<_>>>()?;
        FractionsInput::new(category, ids)
    }

    /// `W` = all identities.
    pub fn identities(category: Arc<FinCategory>) -> Self {
        let ids: Vec<ArrowId> = category.objects().map(|x| category.identity(x)).collect();
        FractionsInput::new(category, ids).expect("identities are arrows")
    }

    /// `W` = every arrow.
    pub fn all(category: Arc<FinCategory>) -> Self {
        let ids: Vec<ArrowId> = category.arrows().collect();
        FractionsInput::new(category, ids).expect("arrows are arrows")
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.category
    }

    pub fn weq(&self) -> &[ArrowId] {
        &self.weq
    }

    pub fn contains(&self, f: ArrowId) -> bool {
        self.in_w[f.0]
    }

    /// Members of `W` with target `x`, in canonical order.
    pub fn weq_into(&self, x: ObjectId) -> impl Iterator<Item = ArrowId> + '_ {
        self.weq.iter().copied().filter(move |&w| self.category.tgt(w) == x)
    }

    /// The first section of the target map restricted to `W`, if any.
    pub fn first_section(&self) -> Option<Vec<ArrowId>> {
        self.category.objects().map(|x| self.weq_into(x).next()).collect()
    }
}
