pub mod circuits;
pub mod equivariant;
pub mod family;
pub mod polytope;
pub mod reproduce;
