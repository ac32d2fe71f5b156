//! Exact structure-constant computations for finite-dimensional Hopf
//! algebras: axiom verification, integral spaces, distinguished
//! group-like elements, comodule categories, and the explicit
//! isomorphisms relating them. All arithmetic is exact (arbitrary
//! precision rationals or prime fields); there is no floating point.

pub mod catalog;
pub mod comodule;
pub mod convolution;
pub mod error;
pub mod functors;
pub mod integrals;
pub mod hopf;
pub mod matrix;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, FieldScalar};
