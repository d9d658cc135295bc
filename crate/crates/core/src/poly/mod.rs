//! Polynomials over the rationals, the reversed lexicographic term order,
//! binomials of kernel vectors and subduction.

mod binomial;
mod monomial;
mod polynomial;
mod subduction;

pub use binomial::{
    binomial_of, expand_trace, telescope_reduce, telescope_reduce_capped, Binomial, Sign,
    Telescope, TraceStep, TELESCOPE_STATE_CAP,
};
pub use monomial::{Monomial, TermOrder};
pub use polynomial::Polynomial;
pub use subduction::{
    basis_power, subduct, ConeOracle, ExhaustiveOracle, Subduction, SUBDUCTION_STEP_CAP,
};
