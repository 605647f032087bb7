//! Exact polynomial arithmetic: sparse multivariate polynomials over Q in
//! x, y, z, and dense univariate integer polynomials in t.

mod monomial;
mod multipoly;
mod unipoly;

pub use monomial::{monomials_of_degree, Monomial, MonomialOrder, Var};
pub use multipoly::{rat, MultiPoly, Rational};
pub use unipoly::UniPolyZ;
