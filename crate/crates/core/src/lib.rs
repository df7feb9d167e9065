//! Exact computations in quantum generalized Weyl algebras `A(D, q, a)`.

pub mod algebra;
pub mod classify;
pub mod derivations;
pub mod field;
pub mod linalg;
pub mod morphisms;
pub mod poly;
