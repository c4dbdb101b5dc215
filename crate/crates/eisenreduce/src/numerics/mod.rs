//! Arbitrary-precision numerics: an oracle that is *independent* of the
//! symbolic reduction.
//!
//! Everything here evaluates the defining objects directly — Eisenstein
//! series through their q-expansions, the multiple series through the
//! iterated lattice sum (with the inner one-dimensional sums in exact
//! cotangent closed form), hyperbolic kernels through exponentials — so
//! that agreement with the symbolic pipeline is a genuine two-sided check
//! and not a tautology.
//!
//! Built on [`astro_float`] for the floating-point work; the default
//! working precision is 128 bits, comfortably below every tolerance used
//! in the test suite.

mod complex;
mod consts;
mod eval;
mod oracle;

pub use complex::ComplexValue;
pub use consts::{bigfloat_decimal, lemniscate_constant, lemniscate_integral, to_f64, Precision};
pub use eval::{
    divisor_sigma, eval_G, eval_closed_form, eval_ring_element, inner_sum,
};
pub use oracle::{oracle_coth, oracle_gtilde, OracleReport};
