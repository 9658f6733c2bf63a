//! Executable forms of the proven closed formulas: the determinant
//! evaluation `r_k`, the operator numerators `G_{a,b}`, the polynomials
//! `A_m` and `B_{2k+1}`, tableau descents, and the series identities.

mod bpolys;
mod gf;
mod operator;
mod rpoly;
mod syt;

pub use bpolys::{b_polys, listed_b_polys, theorem6_check, BPolys};
pub use gf::{
    catalan_check, eq6_audit, eq6_printed, eq8_series, eq8_series_check, eq9_audit, fib_relation_check,
    fibonacci_polys,
};
pub use operator::{
    a_degree, a_denominator_exponent, a_extract, a_polys_check, f_ab_series, g_extract, listed_a_polys,
    listed_gamma_vectors, prop3_check, theorem4_check, v_ab,
};
pub use rpoly::{
    binom_poly, binomial_det, box_product, prop2_checks, r_poly, r_value, r_via_v_check, s_poly,
    theorem1_check, v_poly,
};
pub use syt::{syt_check, syt_descent_poly};
