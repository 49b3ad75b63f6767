//! Computational support for classifying irreducible representations of
//! abstract copolarity 7, 8 and 9: weight diagrams, fixed-space dimensions,
//! and an exhaustive re-run of the case analysis with auditable reports.

pub mod axioms;
pub mod cases;
pub mod certificate;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod fixed_space;
pub mod irrep;
pub mod laurent;
pub mod report;
pub mod weight;

pub use error::{Error, Result};
