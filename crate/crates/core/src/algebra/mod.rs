//! Exact arithmetic over Q and Q(t), divisors on P^1.

pub mod divisor;
pub(crate) mod modular;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod squarefree;
pub(crate) mod subresultant;
pub(crate) mod zpoly;

pub use divisor::{
    common_basis, coprime_refine, divisor_degree, divisor_le, divisor_min, divisor_of, divisor_sup,
    DivisorP1, Place, RefinedFamily,
};
pub use poly::{poly_gcd, poly_gcd_modular, poly_gcd_subresultant, Poly, RationalPolynomial};
pub use ratfunc::RationalFunction;
pub use rational::{format_rational, parse_rational, rat, int, weil_height_q, Rational};
pub use squarefree::{gcd_free_basis, squarefree_decompose, squarefree_part};
