//! Independent re-derivations shared by the test targets.
#![allow(dead_code)]

pub mod clutching;
pub mod germs;
pub mod instances;
pub mod presentations;
pub mod quartics;
pub mod ribbons;
