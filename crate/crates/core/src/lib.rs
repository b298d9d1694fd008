//! Finite-field verification of explicitly equationed extended mid points,
//! their rank-locus singularities, incidence resolutions and class identities.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod incidence;
pub mod invariants;
pub mod numerology;
pub mod sections;

pub use error::{Error, Result};
