//! Hankel determinants of the shifted sequences b^(r)(n) = C(n, floor((n-r)/2))
//! repeat with period 4r+2 up to sign and scale.

use midbinom::conjectures::{d4_formula, shifted_det};

fn main() {
    for r in 1..=3 {
        let period = 4 * r + 2;
        for k in 0..=2 {
            let row: Vec<String> = (0..2 * period).map(|m| shifted_det(r, k, m).to_string()).collect();
            println!("r={r} k={k}: {}", row.join(" "));
        }
    }
    for r in 1..=3 {
        for n in 0..3i64 {
            let m = (4 * r + 2) * n as usize + 1;
            let printed = d4_formula(r, n).map_or("-".into(), |v| v.to_string());
            println!("D_4^({r})({m}) = {}  printed formula: {printed}", shifted_det(r, 4, m));
        }
    }
}
