//! Hankel determinants of `a_n(t)`: the normalized form `rho_k(n,t)` and
//! the generating functions of `delta_k(n,t)`.

use crate::arith::{choose2, int, rat, reverse_both, sign_pow, Rat, Ring, TPoly, XPoly};
use crate::hankel::hankel_det_z;
use crate::report::{CheckReport, Recorder};
use crate::sequences::Family;

use super::{ratio_terms, record_structure, terms_needed, tmono, tx_factor, DenomSpec, GENFUN_MARGIN};

/// `floor((k(n-1)+1)/2)`, negative only at `n = 0`.
fn rho_shift(k: usize, n: usize) -> i64 {
    (k as i64 * (n as i64 - 1) + 1).div_euclid(2)
}

/// Strip the sign and the power of `t` from `delta_k(n,t)`.
fn rho_from_delta(k: usize, n: usize, delta: &TPoly) -> Option<TPoly> {
    let sign = sign_pow(k as i64 * choose2(n as i64));
    let signed = if sign < 0 { delta.neg() } else { delta.clone() };
    let e = rho_shift(k, n);
    if e >= 0 {
        signed.unshift(e as usize).ok()
    } else {
        Some(signed.shift((-e) as usize))
    }
}

/// `rho_k(n,t)`, or `None` if `delta_k(n,t)` lacks the expected power of `t`.
pub fn rho_poly(k: usize, n: usize) -> Option<TPoly> {
    let delta = ratio_terms(Family::A, k, n + 1).pop()?;
    rho_from_delta(k, n, &delta)
}

/// The listed `rho_1 .. rho_4` at `n`.
pub fn listed_rho(k: usize, n: usize) -> Option<TPoly> {
    let n = n as i64;
    let lin = |a: i64, b: i64| TPoly::from_i64s(&[a, b]);
    match k {
        1 => Some(TPoly::one()),
        2 => Some(lin((n + 1) / 2, (n + 2) / 2)),
        3 => Some(lin((n + 1) * (n + 1) / 4, (n + 2) * (n + 2) / 4)),
        4 if n % 2 == 1 => {
            let m = (n - 1) / 2;
            let c = rat((m + 1) * (m + 2) * (2 * m + 3), 6);
            Some(lin(1, 1).mul(&lin(m + 1, m + 2)).scale(&c))
        }
        4 => {
            let m = n / 2;
            let c = rat((m + 1) * (m + 1), 6);
            let q = TPoly::from_i64s(&[m * (2 * m + 1), 4 * m * (m + 2), (m + 2) * (2 * m + 3)]);
            Some(q.scale(&c))
        }
        _ => None,
    }
}

fn even_denominator(k: usize) -> DenomSpec {
    DenomSpec(vec![(tx_factor(-1, k, 1), 1), (tx_factor(-1, 2 * k, 2), (k * k) as u32)])
}

fn odd_denominator(k: usize) -> DenomSpec {
    DenomSpec(vec![(tx_factor(1, 2 * k + 1, 2), (k * k + k + 1) as u32)])
}

/// Numerator of `sum_n delta_m(n,t) x^n`; `m >= 1`.
fn numerator(rec: &mut Recorder, m: usize, order: usize) -> XPoly {
    let k = m / 2;
    let (denom, deg) = if m.is_multiple_of(2) {
        (even_denominator(k), 2 * k * (k - 1) + 1)
    } else {
        (odd_denominator(k), 2 * k * k + 1)
    };
    let count = order.max(terms_needed(&denom, deg, GENFUN_MARGIN));
    let terms = ratio_terms(Family::A, m, count);
    record_structure(rec, &format!("A_{m}(x,t)"), &terms, &denom, deg)
}

fn listed_numerators() -> Vec<(usize, XPoly)> {
    let tp = |cs: &[i64], e: usize| TPoly::from_i64s(cs).shift(e);
    let one_x = XPoly::new(vec![TPoly::one(), TPoly::one()]);
    vec![
        (1, one_x.clone()),
        (2, one_x),
        (
            3,
            XPoly::new(vec![TPoly::one(), tp(&[1, 2], 0), tp(&[-2, -1], 2), tp(&[-1], 3)]),
        ),
        (
            4,
            XPoly::new(vec![
                TPoly::one(),
                tp(&[1, 3, 1], 0),
                tp(&[1, 5, 4], 2),
                tp(&[4, 5, 1], 4),
                tp(&[1, 3, 1], 6),
                tp(&[1], 8),
            ]),
        ),
    ]
}

/// Base determinants, `rho_k` extraction and the listed `rho`, generating
/// function structure with listed numerators, and the numerator symmetry.
pub fn sec5_check(k_max: usize, n_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::new("sec5").param("k_max", k_max).param("n_max", n_max).param("N", order);
    for n in 0..=n_max {
        let d0 = TPoly::from_zpoly(&hankel_det_z(Family::A, 0, n).unwrap());
        rec.expect_eq(format!("Delta_0({n},t)"), &tmono(1, choose2(n as i64) as usize), &d0);
    }
    let kk = (2 * k_max + 1).max(4);
    let deltas: Vec<Vec<TPoly>> = (0..=kk).map(|k| ratio_terms(Family::A, k, n_max + 1)).collect();
    for n in 0..=n_max {
        let want = tmono(sign_pow(choose2(n as i64)), n / 2);
        rec.expect_eq(format!("delta_1({n},t)"), &want, &deltas[1][n]);
    }
    for k in 1..=kk {
        for n in 0..=n_max {
            let delta = &deltas[k][n];
            let label = format!("delta_{k}({n},t)");
            rec.expect_eq(format!("{label} degree"), &(k * n / 2).to_string(), &delta.degree().to_string());
            let Some(rho) = rho_from_delta(k, n, delta) else {
                rec.fail(&label, format!("divisible by t^{}", rho_shift(k, n)), delta);
                continue;
            };
            rec.expect_eq(format!("rho_{k}({n},t) degree"), &(k / 2).to_string(), &rho.degree().to_string());
            if n >= 1 {
                rec.expect(format!("rho_{k}({n},t) positive"), rho.has_positive_coeffs(), "positive coefficients", &rho);
            } else if !rho.has_positive_coeffs() {
                rec.note(format!("rho_{k}(0,t) = {rho} has zero coefficients"));
            }
            if let Some(want) = listed_rho(k, n) {
                rec.expect_eq(format!("listed rho_{k}({n},t)"), &want, &rho);
            }
        }
    }
    rec.note("rho_k(n,t) is taken as a Laurent shift at n = 0, where floor((k(n-1)+1)/2) is negative");

    let t1 = Rat::from_integer(int(1));
    for m in 1..=2 * k_max + 1 {
        let a = numerator(&mut rec, m, order);
        let k = m / 2;
        let label = format!("A_{m}(x,t) symmetry");
        if m % 2 == 0 {
            let floor_form = 2 * k * ((2 * k - 1) * (2 * k - 1) / 4);
            rec.expect_eq(format!("{label}: t-degree forms"), &(2 * k * k * (k - 1)), &floor_form);
            match reverse_both(&a, 2 * k * (k - 1) + 1, 2 * k * k * (k - 1)) {
                Ok(rev) => {
                    rec.expect_eq(label, &a, &rev);
                }
                Err(e) => rec.fail(label, "defined", e),
            }
        } else {
            match reverse_both(&a, 2 * k * k + 1, (2 * k + 1) * k * k) {
                Ok(rev) => {
                    let rev = if k % 2 == 1 { rev.neg() } else { rev };
                    rec.expect_eq(label, &a, &rev);
                }
                Err(e) => rec.fail(label, "defined", e),
            }
        }
        let at1 = a.map(|c| c.eval(&t1));
        rec.expect(
            format!("A_{m}(x,1) integral"),
            at1.coeffs().iter().all(|c| c.is_integer()),
            "integer coefficients",
            &at1,
        );
    }
    for (m, want) in listed_numerators() {
        let got = numerator(&mut rec, m, order);
        rec.expect_eq(format!("listed A_{m}(x,t)"), &want, &got);
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn rho_examples() {
        assert_eq!(rho_poly(2, 3).unwrap(), TPoly::from_i64s(&[2, 2]));
        assert_eq!(ratio_terms(Family::A, 1, 4)[3], TPoly::from_i64s(&[0, -1]));
        assert_eq!(rho_poly(2, 0).unwrap(), TPoly::from_i64s(&[0, 1]));
        assert_eq!(rho_poly(4, 0).unwrap(), TPoly::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn small_run_passes() {
        let rep = sec5_check(2, 8, 30);
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witnesses);
    }
}
