//! Modular patterns of the Hankel determinants `D_k^(r)(n)` of the shifted
//! middle binomials `b^(r)(n) = C(n, floor((n-r)/2))`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arith::{binom_general, choose2, int, sign_pow, Int};
use crate::hankel::hankel_dets_int;
use crate::report::{CheckReport, Recorder};
use crate::sequences::shifted_middle;

/// Report ids produced by [`sec7_checks`], in order.
pub const SEC7_IDS: [&str; 6] = [
    "sec7/zero-patterns",
    "sec7/evaluations",
    "sec7/sequences",
    "sec7/d4-formulas",
    "sec7/power-values",
    "sec7/identities",
];

/// `D_k^(r)(m)` for `m <= m_max`.
fn shifted_dets(r: usize, k: usize, m_max: usize) -> Vec<Int> {
    let seq: Vec<Int> = (0..(k + 2 * m_max + 1) as u64).map(|n| shifted_middle(r as u64, n)).collect();
    hankel_dets_int(&seq, k, m_max).expect("sequence long enough")
}

pub fn shifted_det(r: usize, k: usize, m: usize) -> Int {
    shifted_dets(r, k, m).pop().unwrap()
}

fn sg(e: i64) -> Int {
    int(sign_pow(e))
}

/// Determinants of one `(r, k)` cell over `periods + 1` periods of `4r+2`.
struct Cell {
    r: i64,
    k: i64,
    periods: i64,
    vals: Vec<Int>,
}

impl Cell {
    fn new(r: usize, k: usize, periods: usize) -> Self {
        let p = 4 * r + 2;
        Cell {
            r: r as i64,
            k: k as i64,
            periods: periods as i64,
            vals: shifted_dets(r, k, p * (periods + 1)),
        }
    }

    fn p(&self) -> i64 {
        4 * self.r + 2
    }

    /// `D((4r+2)n + i)`.
    fn at(&self, n: i64, i: i64) -> Int {
        self.vals[(self.p() * n + i) as usize].clone()
    }

    fn ns(&self) -> std::ops::Range<i64> {
        0..self.periods
    }
}

fn cells(r_max: usize, k_max: usize, periods: usize) -> Vec<Cell> {
    let keys: Vec<(usize, usize)> = (1..=r_max).flat_map(|r| (0..=k_max).map(move |k| (r, k))).collect();
    keys.into_par_iter().map(|(r, k)| Cell::new(r, k, periods)).collect()
}

/// Record `lhs == rhs` for every `n` of the cell.
fn claim(rec: &mut Recorder, label: &str, cell: &Cell, f: impl Fn(i64) -> (Int, Int)) -> bool {
    let mut ok = true;
    for n in cell.ns() {
        let (lhs, rhs) = f(n);
        ok &= rec.expect_eq(format!("{label}, r={}, k={}, n={n}", cell.r, cell.k), &rhs, &lhs);
    }
    ok
}

/// Whether `lhs == rhs` for every `n`, without recording.
fn holds(cell: &Cell, f: impl Fn(i64) -> (Int, Int)) -> bool {
    cell.ns().all(|n| {
        let (l, r) = f(n);
        l == r
    })
}

/// Residues `i` mod the period where the claim says `D` is nonzero.
fn nonzero_residues(r: i64, k: i64) -> Option<(i64, BTreeSet<i64>)> {
    let p = 4 * r + 2;
    let set: Vec<i64> = match k {
        0 => return Some((2 * r + 1, [0, r + 1].into_iter().collect())),
        1 => vec![0, 2 * r + 1, r, 3 * r + 1, r + 1, 2 * r],
        2 => vec![0, 2 * r + 1, r - 1, 3 * r, r, 2 * r, r + 1, 2 * r - 1, 3 * r + 1, 4 * r + 1],
        _ if r > k => {
            let mut v: Vec<i64> = (0..k).map(|i| -i).collect();
            v.extend((0..=k).map(|i| r + 1 - i));
            v.extend((0..=k).map(|i| 2 * r + 1 - i));
            v.extend((0..k).map(|i| 3 * r + 1 - i));
            v
        }
        _ => return None,
    };
    Some((p, set.into_iter().map(|i| i.rem_euclid(p)).collect()))
}

fn zero_patterns(cells: &[Cell]) -> CheckReport {
    let mut rec = Recorder::new(SEC7_IDS[0]);
    for cell in cells {
        let Some((p, allowed)) = nonzero_residues(cell.r, cell.k) else {
            continue;
        };
        let span = (cell.periods * cell.p()) as usize;
        let found: BTreeSet<i64> = (0..span)
            .filter(|&m| cell.vals[m] != int(0))
            .map(|m| m as i64 % p)
            .collect();
        let zero_in_allowed: Vec<usize> =
            (0..span).filter(|&m| cell.vals[m] == int(0) && allowed.contains(&(m as i64 % p))).collect();
        let show = |s: &BTreeSet<i64>| format!("{s:?}");
        rec.expect_eq(
            format!("nonzero residues mod {p}, r={}, k={}", cell.r, cell.k),
            &show(&allowed),
            &show(&found),
        );
        if !zero_in_allowed.is_empty() {
            rec.fail(
                format!("r={}, k={}", cell.r, cell.k),
                "nonzero at every listed residue",
                format!("zero at {zero_in_allowed:?}"),
            );
        }
    }
    rec.finish()
}

fn evaluations(cells: &[Cell]) -> CheckReport {
    let mut rec = Recorder::new(SEC7_IDS[1]);
    let (mut sign_middle, mut sign_right) = (true, true);
    for cell in cells {
        let (r, k) = (cell.r, cell.k);
        match k {
            0 => {
                let q = 2 * r + 1;
                claim(&mut rec, "D_0((2r+1)n)", cell, |n| (cell.vals[(q * n) as usize].clone(), int(1)));
                claim(&mut rec, "D_0((2r+1)n+r+1)", cell, |n| {
                    (cell.vals[(q * n + r + 1) as usize].clone(), sg(choose2(r + 1)))
                });
            }
            1 => {
                claim(&mut rec, "D_1(Pn)", cell, |n| (cell.at(n, 0), sg(n)));
                claim(&mut rec, "D_1(Pn+2r+1)", cell, |n| (cell.at(n, 2 * r + 1), sg(n)));
                claim(&mut rec, "D_1(Pn+r)", cell, |n| (cell.at(n, r), sg(n + choose2(r))));
                claim(&mut rec, "D_1(Pn+3r+1)", cell, |n| (cell.at(n, 3 * r + 1), sg(n + choose2(r))));
                sign_middle &= holds(cell, |n| (cell.at(n, r + 1), int(2) * sg(n)))
                    && holds(cell, |n| (sg(choose2(r)) * cell.at(n, 2 * r), int(2) * sg(n)));
                sign_right &= holds(cell, |n| (cell.at(n, r + 1), int(2) * sg(n + choose2(r))))
                    && holds(cell, |n| (cell.at(n, 2 * r), int(2) * sg(n)));
            }
            2 if r >= 2 => {
                let pn1 = |n: i64| int((4 * r + 2) * (n + 1));
                let f = 2 * ((r + 1) / 2);
                let s = sg(choose2(r + 1));
                claim(&mut rec, "D_2(Pn)", cell, |n| (cell.at(n, 0), int(1)));
                claim(&mut rec, "D_2(Pn+2r+1)", cell, |n| (cell.at(n, 2 * r + 1), int(1)));
                claim(&mut rec, "D_2(Pn+r-1)", cell, |n| (cell.at(n, r - 1), sg(choose2(r - 1))));
                claim(&mut rec, "D_2(Pn+3r)", cell, |n| (cell.at(n, 3 * r), sg(choose2(r - 1))));
                claim(&mut rec, "D_2(Pn+r)", cell, |n| (cell.at(n, r), int((2 * r + 1) * (2 * n + 1) - f)));
                claim(&mut rec, "D_2(Pn+2r)", cell, |n| {
                    (cell.at(n, 2 * r), s.clone() * int((2 * r + 1) * (2 * n + 1) + f))
                });
                claim(&mut rec, "D_2(Pn+r+1)", cell, |n| (cell.at(n, r + 1), int(4) * s.clone()));
                claim(&mut rec, "D_2(Pn+2r-1)", cell, |n| (cell.at(n, 2 * r - 1), int(-4)));
                claim(&mut rec, "D_2(Pn+3r+1)", cell, |n| (cell.at(n, 3 * r + 1), pn1(n)));
                claim(&mut rec, "D_2(Pn+4r+1)", cell, |n| (cell.at(n, 4 * r + 1), s.clone() * pn1(n)));
            }
            2 => {
                claim(&mut rec, "D_2(6n)", cell, |n| (cell.at(n, 0), int(1)));
                claim(&mut rec, "D_2(6n+3)", cell, |n| (cell.at(n, 3), int(1)));
                claim(&mut rec, "D_2(6n+1)", cell, |n| (cell.at(n, 1), int(6 * n + 1)));
                claim(&mut rec, "D_2(6n+2)", cell, |n| (cell.at(n, 2), int(-(6 * n + 5))));
                claim(&mut rec, "D_2(6n+4)", cell, |n| (cell.at(n, 4), int(6 * (n + 1))));
                claim(&mut rec, "D_2(6n+5)", cell, |n| (cell.at(n, 5), int(-6 * (n + 1))));
            }
            _ => {}
        }
        if k >= 1 && r >= k - 1 {
            claim(&mut rec, "D_k(Pn)", cell, |n| (cell.at(n, 0), sg(k * n)));
            claim(&mut rec, "D_k(Pn+r-k+1)", cell, |n| {
                (cell.at(n, r - k + 1) * sg(choose2(r - k + 1)), sg(k * n))
            });
        }
    }
    let verdict = |b: bool| if b { "holds" } else { "fails" };
    rec.note(format!(
        "D_1(Pn+r+1) = (-1)^C(r,2) D_1(Pn+2r) = 2(-1)^n: with the sign bound to D_1(Pn+2r) the chain {}; \
         bound to the right side, D_1(Pn+2r) = 2(-1)^n and D_1(Pn+r+1) = (-1)^C(r,2) 2(-1)^n, it {}",
        verdict(sign_middle),
        verdict(sign_right)
    ));
    if !sign_middle && !sign_right {
        rec.fail("D_1(Pn+r+1), D_1(Pn+2r)", "one consistent reading", "neither reading holds");
    } else {
        rec.pass();
    }
    rec.finish()
}

fn listed_sequences() -> Vec<(usize, usize, Vec<i64>)> {
    vec![
        (1, 1, vec![1, 1, 2, 1, 1, 0, -1, -1, -2, -1, -1, 0, 1, 1, 2, 1, 1, 0]),
        (2, 1, vec![1, 0, -1, 2, -2, 1, 0, -1, 0, 0, -1, 0, 1, -2, 2, -1, 0, 1, 0, 0]),
        (2, 2, vec![1, 1, 3, -4, -7, 1, 1, 10, 0, -10, 1, 1, 13, -4, -17, 1, 1, 20, 0, -20]),
        (
            3,
            2,
            vec![
                1, 0, -1, 3, 4, -4, 11, 1, 0, -1, 14, 0, 0, 14, 1, 0, -1, 17, 4, -4, 25, 1, 0, -1, 28, 0, 0, 28,
            ],
        ),
    ]
}

fn sequences() -> CheckReport {
    let mut rec = Recorder::new(SEC7_IDS[2]);
    for (r, k, want) in listed_sequences() {
        let got = shifted_dets(r, k, want.len() - 1);
        for (m, w) in want.iter().enumerate() {
            rec.expect_eq(format!("D_{k}^({r})({m})"), &int(*w), &got[m]);
        }
    }
    let listed = [1, 1, -5, 1, 6, -6, 1, 7, 11, 1, 12, -12];
    let got = shifted_dets(1, 2, listed.len() - 1);
    let off: Vec<usize> = (0..listed.len()).filter(|&m| got[m] != int(listed[m])).collect();
    for &m in &off {
        let n = (m / 6) as i64;
        let rule = match m % 6 {
            0 | 3 => 1,
            1 => 6 * n + 1,
            2 => -(6 * n + 5),
            4 => 6 * (n + 1),
            _ => -6 * (n + 1),
        };
        rec.note(format!(
            "listed D_2^(1)({m}) = {} but the determinant is {}, and the period-6 formula gives {rule}",
            listed[m], got[m]
        ));
    }
    rec.finish()
}

/// The printed polynomial for `D_4^(r)((4r+2)n+1)`, `r = 1, 2, 3`.
pub fn d4_formula(r: usize, n: i64) -> Option<Int> {
    let v = match r {
        1 => (2 * n + 1) * (2 * n + 3) * (18 * n * n + 21 * n + 2),
        2 => (5 * n + 2) * (500 * n * n * n + 700 * n * n + 165 * n - 6) / 3,
        3 => (14 * n + 3) * (196 * n * n + 63 * n - 1) / 3,
        _ => return None,
    };
    Some(int(v))
}

fn d4_fitted(r: usize, n: i64) -> Int {
    match r {
        1 => int((2 * n + 1) * (3 * n + 2) * (18 * n * n + 21 * n + 2)),
        _ => -d4_formula(r, n).unwrap(),
    }
}

fn d4_formulas() -> CheckReport {
    let mut rec = Recorder::new(SEC7_IDS[3]);
    let mut fits = true;
    for r in 1..=3usize {
        let p = 4 * r + 2;
        let vals = shifted_dets(r, 4, 2 * p + 1);
        for n in 0..=2i64 {
            let got = &vals[p * n as usize + 1];
            rec.expect_eq(format!("D_4^({r})({p}n+1), n={n}"), &d4_formula(r, n).unwrap(), got);
            fits &= d4_fitted(r, n) == *got;
        }
    }
    if fits {
        rec.note(
            "for r = 1 the values fit (2n+1)(3n+2)(18n^2+21n+2), which meets the printed form only at n = 1; \
             for r = 2 and r = 3 the values are the negatives of the printed forms",
        );
    }
    rec.finish()
}

fn power_values(cells: &[Cell]) -> CheckReport {
    let mut rec = Recorder::new(SEC7_IDS[4]);
    let (mut fit97a, mut fit97b, mut fit98a, mut fit98b) = (true, true, true, true);
    let mut mag98 = Vec::new();
    for cell in cells.iter().filter(|c| c.k >= 1) {
        let (r, k) = (cell.r, cell.k);
        let two_k = int(1 << k);
        if r >= k {
            let s = choose2(k + 1) * choose2(r + 1);
            claim(&mut rec, "(-1)^(kn+C(k+1,2)C(r+1,2)) D(Pn+r+1) = 2^k", cell, |n| {
                (sg(k * n + s) * cell.at(n, r + 1), two_k.clone())
            });
            claim(&mut rec, "-D(Pn+2r-k+1) = 2^k", cell, |n| (-cell.at(n, 2 * r - k + 1), two_k.clone()));
            let e = (k + 1) * choose2(r + 1);
            fit97a &= holds(cell, |n| (sg(k * n + e) * cell.at(n, r + 1), two_k.clone()));
            let e2 = choose2(r - k + 1) + e;
            fit97b &= holds(cell, |n| (sg(k * n + e2) * cell.at(n, 2 * r - k + 1), two_k.clone()));
        }
        claim(&mut rec, "D(Pn+2r+1) = 1", cell, |n| (cell.at(n, 2 * r + 1), int(1)));
        claim(&mut rec, "(-1)^C(r-1,2) D(Pn+3r-k+2) = 1", cell, |n| {
            (sg(choose2(r - 1)) * cell.at(n, 3 * r - k + 2), int(1))
        });
        if r >= k - 1 {
            fit98a &= holds(cell, |n| (cell.at(n, 2 * r + 1), sg(k * n)));
            fit98b &= holds(cell, |n| (sg(choose2(r - k + 1)) * cell.at(n, 3 * r - k + 2), sg(k * n)));
        } else {
            mag98.push(format!("({r},{k})"));
        }
    }
    let verdict = |b: bool| if b { "holds" } else { "fails" };
    rec.note(format!(
        "fitted: (-1)^(kn+(k+1)C(r+1,2)) D(Pn+r+1) = 2^k {}; \
         (-1)^(kn+C(r-k+1,2)+(k+1)C(r+1,2)) D(Pn+2r-k+1) = 2^k {}",
        verdict(fit97a),
        verdict(fit97b)
    ));
    rec.note(format!(
        "fitted for r >= k-1: D(Pn+2r+1) = (-1)^(kn) {}; (-1)^C(r-k+1,2) D(Pn+3r-k+2) = (-1)^(kn) {}; \
         |D| = 1 fails outside that range at (r,k) in [{}]",
        verdict(fit98a),
        verdict(fit98b),
        mag98.join(", ")
    ));
    rec.finish()
}

/// `c(k, n) = sum_{j<=n} c(k-1, j)`, `c(2, n) = 2n+1`; `k >= 2`.
fn c_rec(k: i64, n: i64) -> Int {
    if k == 2 {
        return int(2 * n + 1);
    }
    (0..=n).map(|j| c_rec(k - 1, j)).sum()
}

fn identities(cells: &[Cell]) -> CheckReport {
    let mut rec = Recorder::new(SEC7_IDS[5]);
    let (mut lit99, mut alt99, mut lit102, mut alt102) = (true, true, true, true);
    let mut k1_102 = true;
    for cell in cells.iter().filter(|c| c.k >= 1) {
        let (r, k) = (cell.r, cell.k);
        let pn1 = |n: i64| Int::from((4 * r + 2) * (n + 1)).pow((k - 1) as u32);
        if r >= k - 2 {
            lit99 &= holds(cell, |n| (cell.at(n, 3 * r + 1), sg(k * choose2(n + choose2(r))) * pn1(n)));
            alt99 &= holds(cell, |n| (cell.at(n, 3 * r + 1), sg(k * (n + choose2(r))) * pn1(n)));
            let e = |n: i64| k * n + (k + 1) * choose2(r + k - 1) + (k % 4 == 1) as i64;
            claim(&mut rec, "D(Pn+4r-k+3)", cell, |n| (cell.at(n, 4 * r - k + 3), sg(e(n)) * pn1(n)));
            let b = binom_general((r + k - 1) / 2, k - 1) * int(1 << k);
            claim(&mut rec, "D(Pn+r) (-1)^C(r+1-k,2) + D(Pn+2r+2-k)", cell, |n| {
                (
                    cell.at(n, r) * sg(choose2(r + 1 - k)) + cell.at(n, 2 * r + 2 - k),
                    sg(k * n + (k + 1) * choose2(r + 1)) * b.clone(),
                )
            });
        }
        if r >= k - 3 && k >= 2 {
            let c = c_rec(k, (r + 2 - k).div_euclid(2));
            claim(&mut rec, "D(Pn+2r) (-1)^C(r+1-k,2) + D(Pn+3r+3-k)", cell, |n| {
                (
                    cell.at(n, 2 * r) * sg(choose2(r + 1 - k)) + cell.at(n, 3 * r + 3 - k),
                    sg(k * n) * c.clone(),
                )
            });
        }
        if r >= k - 3 {
            let b = binom_general((r + k - 3).div_euclid(2), k - 3);
            let lhs = |n: i64| cell.at(n, 4 * (r + 1) - k) - cell.at(n, 3 * r) * sg(choose2(r + 1 - k));
            let lit = holds(cell, |n| (lhs(n), sg(k * choose2(n + choose2(r))) * b.clone() * pn1(n)));
            let alt = holds(cell, |n| (lhs(n), sg(k * (n + choose2(r))) * b.clone() * pn1(n)));
            if k >= 2 {
                lit102 &= lit;
                alt102 &= alt;
            } else {
                k1_102 &= lit || alt;
            }
        }
    }
    let verdict = |b: bool| if b { "consistent" } else { "inconsistent" };
    rec.note(format!(
        "sign of D(Pn+3r+1): exponent k C(n+C(r,2),2) {}, exponent k (n+C(r,2)) {}",
        verdict(lit99),
        verdict(alt99)
    ));
    rec.note(format!(
        "difference identity for k >= 2: exponent k C(n+C(r,2),2) {}, exponent k (n+C(r,2)) {}; at k = 1 the \
         right side vanishes and the identity is {}",
        verdict(lit102),
        verdict(alt102),
        if k1_102 { "satisfied" } else { "not satisfied" }
    ));
    rec.note("the factor (floor((r+k-1)/2), k-1) is read as a binomial coefficient; c(k,n) is used for k >= 2");
    for (name, lit, alt) in [("D(Pn+3r+1)", lit99, alt99), ("difference identity", lit102, alt102)] {
        if lit || alt {
            rec.pass();
        } else {
            rec.fail(name, "a consistent reading of the sign exponent", "none");
        }
    }
    rec.finish()
}

/// All modular-pattern reports for `r <= r_max`, `k <= k_max` over
/// `periods` periods, in the order of [`SEC7_IDS`].
pub fn sec7_checks(r_max: usize, k_max: usize, periods: usize) -> Vec<CheckReport> {
    let cells = cells(r_max, k_max, periods);
    let params = |rep: CheckReport| -> CheckReport {
        let mut rep = rep;
        rep.params.insert("r_max".into(), r_max.into());
        rep.params.insert("k_max".into(), k_max.into());
        rep.params.insert("periods".into(), periods.into());
        rep
    };
    vec![
        params(zero_patterns(&cells)),
        params(evaluations(&cells)),
        sequences(),
        d4_formulas(),
        params(power_values(&cells)),
        params(identities(&cells)),
    ]
}

/// The report with id `id` from [`SEC7_IDS`].
pub fn sec7_check(id: &str, r_max: usize, k_max: usize, periods: usize) -> Option<CheckReport> {
    let cells = || cells(r_max, k_max, periods);
    let mut rep = match SEC7_IDS.iter().position(|s| *s == id)? {
        0 => zero_patterns(&cells()),
        1 => evaluations(&cells()),
        2 => return Some(sequences()),
        3 => return Some(d4_formulas()),
        4 => power_values(&cells()),
        _ => identities(&cells()),
    };
    rep.params.insert("r_max".into(), r_max.into());
    rep.params.insert("k_max".into(), k_max.into());
    rep.params.insert("periods".into(), periods.into());
    Some(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn listed_values() {
        assert_eq!(shifted_det(1, 4, 7), int(615));
        assert_eq!(d4_formula(1, 1), Some(int(615)));
        assert_eq!(shifted_det(2, 2, 7), int(10));
        assert_eq!(c_rec(3, 2), int(9));
        let mut seen = BTreeSet::new();
        seen.extend(nonzero_residues(4, 3).unwrap().1);
        assert_eq!(seen.len(), 14);
    }

    #[test]
    fn small_reports() {
        let reps = sec7_checks(3, 3, 2);
        let by_id = |id: &str| reps.iter().find(|r| r.id == id).unwrap();
        for id in ["sec7/zero-patterns", "sec7/evaluations", "sec7/sequences", "sec7/identities"] {
            assert_eq!(by_id(id).status, Status::Pass, "{id}: {:?}", by_id(id).witnesses);
        }
        assert_eq!(by_id("sec7/d4-formulas").status, Status::Fail);
        assert_eq!(by_id("sec7/power-values").status, Status::Fail);
        assert!(by_id("sec7/power-values").notes[0].contains("2^k holds;"));
    }
}
