//! Exact multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod rational;
mod table;

pub use monomial::Monomial;
pub use order::{BaseOrder, MonomialOrder};
pub use parse::{parse_poly, ParseError, ParseErrorKind};
pub use polynomial::{Polynomial, Term};
pub use rational::{parse_rational, render_rational, Rational};
pub use table::{Block, Variable, VariableTable};
