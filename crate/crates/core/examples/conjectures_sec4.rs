//! The polynomials r_k(n,t) built from d_k(n,t), their palindromic shape for
//! even k, and the block split of r_5(2,t) (1-t)^6.

use midbinom::arith::{is_palindromic, is_unimodal, TPoly};
use midbinom::conjectures::{block_decompose, conj8_9_check, r_family_poly, Blocks};

fn main() {
    for k in [2, 4, 6] {
        let r = r_family_poly(k, 3);
        let d = r.deg().unwrap();
        println!(
            "r_{k}(3,t) = {r}  palindromic {}  unimodal {}",
            is_palindromic(&r, d),
            is_unimodal(r.coeffs())
        );
    }
    let r5 = r_family_poly(5, 2);
    println!("r_5(2,t) = {r5}");
    let one_minus_t = TPoly::from_i64s(&[1, -1]);
    match block_decompose(&r5, &[(one_minus_t, 6)], &[0, 4, 10], &[2, 3, 0]) {
        Blocks::Split(blocks) => {
            for (j, b) in blocks.iter().enumerate() {
                println!("  block {j}: {b}");
            }
        }
        other => println!("  no split: {other:?}"),
    }
    let rep = conj8_9_check(2, 6);
    println!("conj8-9 at k <= 2, n <= 6: {:?}", rep.status);
}
