//! Hankel determinants over the integers and over Q[t], and the normalized
//! ratios d_k, delta_k, bold d_k.

use midbinom::hankel::{hankel_det, hankel_det_int, normalized_ratio};
use midbinom::sequences::Family;

fn main() {
    for k in 0..5 {
        let row: Vec<String> = (0..8).map(|n| hankel_det_int(Family::Mid, k, n).unwrap().to_string()).collect();
        println!("D_{k}(n): {}", row.join(", "));
    }
    println!("D_2(3,t) for family b: {}", hankel_det(Family::B, 2, 3).unwrap());
    for (family, name) in [(Family::B, "d"), (Family::A, "delta"), (Family::C, "bold d")] {
        let r: Vec<String> = (0..5).map(|n| normalized_ratio(family, 2, n).unwrap().to_string()).collect();
        println!("{name}_2(n,t): {}", r.join("; "));
    }
}
