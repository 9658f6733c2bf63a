//! G_{a,b}(x) from the operator series against descents of standard Young
//! tableaux of rectangular shape.

use midbinom::arith::render_in;
use midbinom::closed_forms::{g_extract, syt_descent_poly};

fn main() {
    for (a, b) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let g = g_extract(a, b, 60).unwrap();
        let syt = syt_descent_poly(a, b).unwrap();
        let transposed = syt_descent_poly(b, a).unwrap();
        println!(
            "G_{{{a},{b}}}(x) = {}   descents: {}   transposed: {}",
            render_in(&g, "x"),
            render_in(&syt, "x"),
            render_in(&transposed, "x")
        );
    }
}
