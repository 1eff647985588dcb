//! Exact quotient-algebra engine for quantum cohomology and quantum sheaf
//! cohomology rings.
//!
//! Rings are presented as generators and graded relations over exact
//! rationals. A Gröbner basis under a block order (cohomology generators
//! first, instanton variables after) realizes each quotient as a free module
//! over the instanton polynomial ring, with the staircase monomials as basis.
//! On top of that sit the Frobenius structure (trace, pairing, quantum
//! product, three-point correlators) and the toric side (Euler-sequence
//! deformations, Chern-class checks, bundle regularity).
//!
//! The crate is organized bottom-up:
//!
//! - [`poly`]: rationals, variable tables, monomial orders, polynomials and
//!   the expression parser.
//! - [`groebner`]: S-polynomials, normal forms, Buchberger, ideal and radical
//!   membership.
//! - [`rings`]: ring presentations and their quotient algebras.
//! - [`frobenius`]: trace functionals and everything built from them.
//! - [`toric`]: toric data, deformation matrices, omalous and regularity
//!   checks.
//! - [`cli`]: the batch front-end behind the `qsheaf` binary.

pub mod cli;
pub mod error;
pub mod frobenius;
pub mod groebner;
mod linalg;
pub mod poly;
pub mod rings;
pub mod toric;

pub use error::{Error, Result};
pub use frobenius::{CorrelatorResult, FrobeniusAlgebra, FrobeniusReport, GramMatrix, TraceFunctional};
pub use groebner::{GroebnerBasis, IdealPresentation};
pub use poly::{
    parse_poly, parse_rational, BaseOrder, Block, Monomial, MonomialOrder, ParseError, Polynomial, Rational, Variable,
    VariableTable,
};
pub use rings::{QuotientAlgebra, RingPresentation};
pub use toric::{ChernData, DeformationMatrix, OmalousReport, ToricData, Violation};
