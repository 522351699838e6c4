//! Exact computations with finite-dimensional anti-pre-Lie algebras.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod corpus;
pub mod deformation;
pub mod dendriform;
pub mod error;
pub mod extension;
pub mod io;
pub mod linalg;
pub mod report;
pub mod representation;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
