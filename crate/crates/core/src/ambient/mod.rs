//! Finite sets as an ambient category: pullbacks, coproducts, reflexive
//! coequalizers and surjective covers, with category objects and the
//! internal elements and fractions constructions built from them.

mod constructions;
mod finset;
mod internal;

pub use constructions::{
    internal_cleavage, internal_elements, internal_localize, InternalElements, InternalLocalization,
};
pub use finset::{
    all_maps, coequalize, coequalize_reflexive, coproduct, factor_through_cover, is_cover, pullback,
    verify_cover_class, Coequalizer, Coproduct, FinMap, FinSet, Pullback,
};
pub use internal::{internalize, InternalCategory, InternalFunctor, InternalNatTrans};
