//! Signed sets, circuit families of representable and graphic oriented
//! matroids, and the circuit-axiom validator.

mod axioms;
mod graph;
mod representable;
mod signed;

pub use axioms::{validate_circuit_axioms, AxiomViolation};
pub use graph::{circuits_from_digraph, cocircuits_from_digraph, Digraph};
pub use representable::{circuits_from_matrix, cocircuits_from_matrix};
pub use signed::{CircuitSet, SignedSet};

