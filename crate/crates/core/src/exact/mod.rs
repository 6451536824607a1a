//! Exact arithmetic: rationals, Gaussian rationals, real quadratic extensions,
//! dense univariate and sparse trivariate polynomials, resultants.

pub mod gaussian;
pub mod quadext;
pub mod rational;
pub mod resultant;
pub mod tripoly;
pub mod unipoly;

pub use gaussian::GaussianRational;
pub use quadext::QuadExtValue;
pub use rational::{q, Rational};
pub use resultant::{discriminant, resultant};
pub use tripoly::{Monomial, TriPoly, DIHEDRAL_VARS};
pub use unipoly::UniPoly;
