//! Exact computations around fairly invariant measures on semigroups.
//!
//! The crate revolves around three layers:
//!
//! * families: a fixed roster of semigroups with canonical element forms,
//!   finite windows and closed-form ideal membership;
//! * actions and windows: injectivity of translations, fiber partitions,
//!   symmetric-difference ratio sweeps;
//! * measures: exact rational weight vectors, fairness checks, transfer
//!   arguments and paradox certificates.
//!
//! Everything numeric is exact: window counts are u64, masses are
//! `num::BigRational`, and reports never round.

pub mod actions;
pub mod catalog;
pub mod convolution;
pub mod element;
pub mod error;
pub(crate) mod families;
pub mod folner;
pub mod greens;
pub mod literal;
pub mod measures;
pub mod paradox;
pub mod semigroup;
pub mod subset;
pub mod symbolic;

pub use actions::{acts_injectively, fibers, injective_partition, FiberPartition, Injectivity};
pub use convolution::{
    ast_invariance_check, bounded_indicator_verdict, convolve, partial_action,
    partial_action_indicator, AstInvariance, BoundednessVerdict, FinFunc, IndicatorVerdict,
    PartialActionResult,
};
pub use element::{Element, Payload, PolyElt};
pub use error::{Error, Result};
pub use families::finite::CayleyTable;
pub use folner::{
    empirical_measure, folner_sweep, symdiff_count, translate_count_in_window,
    translated_intersection, RatioRecord, RatioSeries, Variant,
};
pub use greens::{green_classes, GreenClasses, GreenRelation};
pub use literal::parse_family;
pub use measures::{
    fair_check_finite, measure_series, quotient_pushforward, solve_fair_classes, transfer_check,
    FairnessVerdict, FairnessWitness, Transfer, WeightVector,
};
pub use paradox::{Builtin, ImageClaim, ParadoxCertificate};
pub use semigroup::{Semigroup, Side};
pub use subset::FiniteSubset;
pub use symbolic::{SetKind, SymbolicSet};

// Every code block in the README and the guide compiles and runs as a
// doctest, so neither can drift from the library.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/actions.md")]
    mod actions {}
    #[doc = include_str!("../../../book/src/greens.md")]
    mod greens {}
    #[doc = include_str!("../../../book/src/folner.md")]
    mod folner {}
    #[doc = include_str!("../../../book/src/measures.md")]
    mod measures {}
    #[doc = include_str!("../../../book/src/paradox.md")]
    mod paradox {}
    #[doc = include_str!("../../../book/src/convolution.md")]
    mod convolution {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
