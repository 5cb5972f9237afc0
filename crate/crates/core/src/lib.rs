//! Exact tools for the boundary of the moduli space of genus-two stable maps
//! to projective space: Gorenstein singularity catalogs, component families,
//! hyperelliptic curve arithmetic, quartic strata and smoothability deciders.

pub mod components;
pub mod exact;
pub mod hyperelliptic;
pub mod singularities;
pub mod smoothability;
pub mod strata;
