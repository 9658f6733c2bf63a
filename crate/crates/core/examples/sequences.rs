//! The middle binomial coefficients, their three weighted extensions, and the
//! path-count oracle that cross-checks the moment recurrence.

use midbinom::sequences::{a_poly, b_poly, brute_paths, c_poly, middle_binom, moment_table, WeightSpec};

fn main() {
    let mid: Vec<String> = (0..12).map(|n| middle_binom(n).to_string()).collect();
    println!("middle binomials: {}", mid.join(", "));
    for n in 0..6 {
        println!("n={n}  a={}  b={}  c={}", a_poly(n), b_poly(n), c_poly(n));
    }

    let w = WeightSpec::family_c();
    let table = moment_table(&w, 8);
    for n in 0..=8 {
        let paths = brute_paths(&w, n).unwrap();
        assert_eq!(paths, table.get(n, 0));
    }
    println!("moment recurrence agrees with path enumeration for family {} up to n=8", w.name);
}
