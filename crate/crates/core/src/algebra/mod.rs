//! Exact multivariate polynomial arithmetic over F_p and Q.
//!
//! This is the algebraic substrate for the cohomology rings H*(BG): for
//! `G = (Z_2)^k` the full ring `F_2[t_1..t_k]`, for `G = (Z_p)^k` with odd p
//! the polynomial part `F_p[t_1..t_k]`, and for `G = (S^1)^k` the ring
//! `Q[t_1..t_k]`. Principal-ideal membership is decided by exact division;
//! there is no floating point and no tolerance anywhere.

pub mod field;
pub mod poly;

pub use field::{Field, PrimeField, Rationals};
pub use poly::{
    factor_into_lines, linear_product, LineFactorization, LinearForm, Monomial, Polynomial,
};
