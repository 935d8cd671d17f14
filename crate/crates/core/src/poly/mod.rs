//! Exact polynomial arithmetic over the rationals, term orders, Gröbner
//! bases and the ideal operations built on them.

mod groebner;
mod ideal;
mod monomial;
mod order;
mod polynomial;
mod vars;

pub use groebner::{
    buchberger, is_groebner_basis, leading_term, normal_form, GbBudget, GbStats, GroebnerBasis,
};
pub use ideal::{
    difference_witness, ideal_equals, ideal_intersection, initial_form, initial_ideal, Ideal,
};
pub use monomial::Monomial;
pub use order::{CompiledOrder, TermOrder};
pub use polynomial::{PolyDisplay, Polynomial};
pub use vars::VariableSet;

pub type Rational = num_rational::BigRational;

/// Integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
