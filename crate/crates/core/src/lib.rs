//! Exact oriented matroid circuit polytopes.
//!
//! Circuits and cocircuits of oriented matroids given by rational matrices or
//! directed graphs, the polytopes spanned by their signed incidence vectors,
//! and exact face, lattice-point and Ehrhart computations on them. The
//! [`family`] and [`equivariant`] modules give closed forms for the
//! cocircuit polytopes of complete graphs and the symmetric-group action on
//! them, each checked against the generic [`polytope`] engine.

pub mod equivariant;
pub mod error;
pub mod exact;
pub mod family;
pub mod matroid;
pub mod poly;
pub mod polytope;

pub use error::{Error, Result};
pub use exact::{RatMatrix, Rational};
pub use poly::{IntPolynomial, RatPolynomial};
