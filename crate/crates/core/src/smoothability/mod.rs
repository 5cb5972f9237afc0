//! Smoothability of boundary stable maps: generic criteria, instance
//! documents, the degree-four deciders and their intersection catalog.

pub mod catalog;
pub mod criteria;
pub mod decide;
pub mod instance;

pub use catalog::{
    intersection_catalog, intersection_dimension_from_strata, CatalogRecord, MarkedModuli, Relation,
};
pub use criteria::{
    cross_ratio_match, cross_ratio_match_any_bijection, genus1_tails_condition,
    ribbon_descent_condition, section_descent_codim, unobstructed_isolated, CriteriaError,
    RibbonMode, TangentConfiguration,
};
pub use decide::{decide, replay, DecideError, Outcome, TraceEntry, Verdict};
pub use instance::{InstanceError, SmoothabilityInstance};
