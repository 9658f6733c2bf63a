//! The numerators A_m(x) of the determinant generating functions, their
//! gamma vectors, and the B polynomials of the odd shifts.

use midbinom::arith::{gamma_decompose, render_in};
use midbinom::closed_forms::{a_extract, b_polys};

fn main() {
    for m in 0..=7 {
        let a = a_extract(m, 60).unwrap();
        let gamma = a
            .deg()
            .and_then(|d| gamma_decompose(&a, d).ok())
            .map(|g| g.gammas.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
        let gamma = gamma.unwrap_or_else(|| "-".into());
        println!("A_{m}(x) = {}   gamma: {gamma}", render_in(&a, "x"));
    }
    for k in 1..=2 {
        let b = b_polys(k, 60).unwrap();
        println!("B_{}(x) = {}", 2 * k + 1, render_in(&b.b, "x"));
    }
}
