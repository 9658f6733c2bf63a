//! `(-1)^{k C(n,2)} D_k(n) = r_k(n)` with `r_k` a product of linear factors.

use midbinom::arith::{render_in, Rat};
use midbinom::closed_forms::{r_poly, r_value};
use midbinom::hankel::{hankel_det_int, theorem_sign};
use midbinom::sequences::Family;

fn main() {
    for k in 0..=6 {
        println!("r_{k}(x) = {}", render_in(&r_poly(k), "x"));
        for n in 0..=8 {
            let d = hankel_det_int(Family::Mid, k, n).unwrap() * theorem_sign(k, n);
            assert_eq!(Rat::from_integer(d), r_value(k, n as i64), "k={k} n={n}");
        }
    }
    println!("signed determinants equal r_k(n) for k <= 6, n <= 8");
}
