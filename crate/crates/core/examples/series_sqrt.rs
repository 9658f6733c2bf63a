//! The algebraic generating function F(z) of c_n(t) via a truncated square
//! root, compared with the path recurrence.

use midbinom::closed_forms::eq8_series;
use midbinom::sequences::c_poly;

fn main() {
    let f = eq8_series(10).unwrap();
    for (n, c) in f.coeffs().iter().enumerate().take(10) {
        assert_eq!(*c, c_poly(n as u64));
        println!("c_{n}(t) = {c}");
    }
}
