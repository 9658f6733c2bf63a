//! The operator powers `F_a^b = (x^{a-1} D^a)^b 1/(1-x)`, the numerators
//! `G_{a,b}` they produce, and the generating-function numerators `A_m`.

use crate::arith::{gamma_decompose, int, is_palindromic, rat, QXPoly, Rat, Ring};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Recorder};
use crate::series::XSeries;

use super::rpoly::{r_poly, v_poly};

/// Extra valid terms demanded beyond `a*b` after applying the operator.
pub const OPERATOR_MARGIN: usize = 5;

pub fn v_ab(a: usize, b: usize) -> QXPoly {
    v_poly(a, b)
}

/// `F_a^b` to the order that survives `b` applications.
///
/// Each pass differentiates `a` times and multiplies by `x^{a-1}`, so the
/// valid order drops by exactly one per pass.
pub fn f_ab_series(a: usize, b: usize, order: usize) -> Result<XSeries<Rat>> {
    let mut f = XSeries::<Rat>::geometric(order);
    for _ in 0..b {
        for _ in 0..a {
            f = f.derivative();
        }
        f = f.shift(a - 1);
    }
    let needed = a * b + OPERATOR_MARGIN;
    if f.order() < needed {
        return Err(Error::OrderExhausted { needed, have: f.order() });
    }
    Ok(f)
}

/// Coefficient of `x^m` in `sum_n v_{a,b}(n) x^{n+a-b-1}`.
fn v_series_coeff(v: &QXPoly, a: usize, b: usize, m: usize) -> Rat {
    let n = m as i64 - a as i64 + b as i64 + 1;
    if n < 0 {
        rat(0, 1)
    } else {
        v.eval(&rat(n, 1))
    }
}

pub fn prop3_check(a_max: usize, b_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::new("prop3")
        .param("a_max", a_max)
        .param("b_max", b_max)
        .param("N", order);
    for a in 1..=a_max {
        for b in 1..=b_max {
            let v = v_ab(a, b);
            match f_ab_series(a, b, order) {
                Ok(f) => {
                    let bad = (0..f.order()).find(|&m| f.coeffs()[m] != v_series_coeff(&v, a, b, m));
                    match bad {
                        None => rec.pass(),
                        Some(m) => rec.fail(
                            format!("a={a}, b={b}, [x^{m}]"),
                            crate::arith::format_rat(&v_series_coeff(&v, a, b, m)),
                            crate::arith::format_rat(&f.coeffs()[m]),
                        ),
                    }
                }
                Err(e) => rec.fail(format!("a={a}, b={b}"), "enough valid terms", e),
            }
        }
    }
    rec.finish()
}

/// Truncated series to polynomial, insisting the tail past `deg` vanishes
/// and the degree is exactly `deg`.
fn series_to_poly(s: &XSeries<Rat>, deg: usize) -> Result<QXPoly> {
    if s.order() <= deg + 1 {
        return Err(Error::OrderExhausted { needed: deg + 2, have: s.order() });
    }
    if let Some(i) = (deg + 1..s.order()).find(|&i| !s.coeffs()[i].is_zero()) {
        return Err(Error::NotPolynomial(format!("nonzero coefficient at x^{i}")));
    }
    let p = s.to_poly();
    if p.deg() != Some(deg) {
        return Err(Error::DegreeMismatch {
            expected: deg.to_string(),
            actual: p.degree().to_string(),
        });
    }
    Ok(p)
}

/// `G_{a,b} = F_a^b (1-x)^{ab+1} / (v_{a,b}(b) x^{a-1})`, of degree `(a-1)(b-1)`.
pub fn g_extract(a: usize, b: usize, order: usize) -> Result<QXPoly> {
    let f = f_ab_series(a, b, order)?;
    let one_minus_x = QXPoly::from_i64s(&[1, -1]);
    let cleared = f.mul_poly(&one_minus_x.pow((a * b + 1) as u32));
    if cleared.coeffs().iter().take(a - 1).any(|c| !c.is_zero()) {
        return Err(Error::NotPolynomial(format!("low terms below x^{}", a - 1)));
    }
    let shifted = XSeries::new(cleared.coeffs()[a - 1..].to_vec(), cleared.order() - (a - 1));
    let scale = v_ab(a, b).eval(&rat(b as i64, 1)).recip();
    series_to_poly(&shifted.scale(&scale), (a - 1) * (b - 1))
}

/// Exponent of `1-x` in the denominator of `sum_n r_m(n) x^n`.
pub fn a_denominator_exponent(m: usize) -> usize {
    let k = m / 2;
    if m.is_multiple_of(2) {
        k * k + 1
    } else {
        k * k + k + 1
    }
}

/// Claimed degree of `A_m`.
pub fn a_degree(m: usize) -> usize {
    let k = m / 2;
    if m.is_multiple_of(2) {
        if k == 0 {
            0
        } else {
            (k - 1) * (k - 1)
        }
    } else {
        k * k - k
    }
}

/// `A_m = (1-x)^e sum_{n<N} r_m(n) x^n`, required to be a polynomial of
/// the claimed degree.
pub fn a_extract(m: usize, order: usize) -> Result<QXPoly> {
    let r = r_poly(m);
    let terms = (0..order).map(|n| r.eval(&rat(n as i64, 1))).collect();
    let s = XSeries::new(terms, order);
    let one_minus_x = QXPoly::from_i64s(&[1, -1]);
    let cleared = s.mul_poly(&one_minus_x.pow(a_denominator_exponent(m) as u32));
    series_to_poly(&cleared, a_degree(m))
}

/// Degree, gamma-nonnegativity and the closed value of `v_{a,b}(b)`.
pub fn theorem4_check(a_max: usize, b_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::new("theorem4")
        .param("a_max", a_max)
        .param("b_max", b_max)
        .param("N", order);
    for a in 1..=a_max {
        for b in 1..=b_max {
            let input = format!("a={a}, b={b}");
            match g_extract(a, b, order) {
                Ok(g) => {
                    let d = (a - 1) * (b - 1);
                    match gamma_decompose(&g, d) {
                        Ok(gv) => {
                            rec.expect(&input, gv.nonnegative, "nonnegative gamma vector", fmt_rats(&gv.gammas));
                        }
                        Err(e) => rec.fail(&input, "palindromic", e),
                    }
                }
                Err(e) => rec.fail(&input, "polynomial of degree (a-1)(b-1)", e),
            }
            let closed: crate::arith::Int = (0..b as u64)
                .map(|j| crate::arith::factorial(a as u64 + j) / crate::arith::factorial(j))
                .product();
            let v = v_ab(a, b).eval(&rat(b as i64, 1));
            rec.expect_eq(format!("v_(a,b)(b), {input}"), &Rat::from_integer(closed), &v);
        }
    }
    rec.finish()
}

pub(crate) fn fmt_rats(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(crate::arith::format_rat).collect();
    format!("({})", parts.join(","))
}

/// Listed `A_0..A_7` and their gamma vectors.
pub fn listed_a_polys() -> Vec<(usize, QXPoly)> {
    let p = QXPoly::from_i64s;
    vec![
        (0, p(&[1])),
        (1, p(&[1])),
        (2, p(&[1])),
        (3, p(&[1])),
        (4, p(&[1, 1])),
        (5, p(&[1, 3, 1])),
        (6, p(&[1, 10, 20, 10, 1])),
        (7, p(&[1, 22, 113, 190, 113, 22, 1])),
    ]
}

pub fn listed_gamma_vectors() -> Vec<(usize, Vec<i64>)> {
    vec![(4, vec![1]), (5, vec![1, 1]), (6, vec![1, 6, 2]), (7, vec![1, 16, 34, 6])]
}

/// `A_m` for `m <= m_max` against the listed data, with palindromicity,
/// unimodality, gamma vectors, and agreement with `G_{k,k}` / `G_{k,k+1}`.
pub fn a_polys_check(m_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::new("a-polys").param("m_max", m_max).param("N", order);
    let listed = listed_a_polys();
    let gammas = listed_gamma_vectors();
    for m in 0..=m_max {
        let a = match a_extract(m, order) {
            Ok(a) => a,
            Err(e) => {
                rec.fail(format!("A_{m}"), "polynomial of claimed degree", e);
                continue;
            }
        };
        if let Some((_, want)) = listed.iter().find(|(i, _)| *i == m) {
            rec.expect_eq(format!("A_{m} listed"), want, &a);
        }
        let d = a_degree(m);
        rec.expect(format!("A_{m} palindromic"), is_palindromic(&a, d), "palindromic", &a);
        rec.expect(
            format!("A_{m} unimodal"),
            crate::arith::is_unimodal(a.coeffs()),
            "unimodal",
            &a,
        );
        match gamma_decompose(&a, d) {
            Ok(gv) => {
                rec.expect(format!("A_{m} gamma"), gv.nonnegative, "nonnegative", fmt_rats(&gv.gammas));
                if let Some((_, want)) = gammas.iter().find(|(i, _)| *i == m) {
                    let want: Vec<Rat> = want.iter().map(|&v| Rat::from_integer(int(v))).collect();
                    rec.expect_eq(format!("A_{m} gamma vector"), &fmt_rats(&want), &fmt_rats(&gv.gammas));
                }
            }
            Err(e) => rec.fail(format!("A_{m} gamma"), "palindromic", e),
        }
        let k = m / 2;
        if k >= 1 {
            let b = if m % 2 == 0 { k } else { k + 1 };
            match g_extract(k, b, order) {
                Ok(g) => {
                    rec.expect_eq(format!("A_{m} = G_({k},{b})"), &a, &g);
                }
                Err(e) => rec.fail(format!("G_({k},{b})"), "polynomial", e),
            }
        }
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn operator_examples() {
        let f = f_ab_series(1, 1, 12).unwrap();
        assert_eq!(f.coeffs()[..4], [rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)]);
        assert_eq!(f.order(), 11);
        assert!(matches!(f_ab_series(3, 3, 10), Err(Error::OrderExhausted { .. })));
        assert_eq!(prop3_check(2, 2, 30).status, Status::Pass);
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_extract(1, 1, 30).unwrap(), QXPoly::from_i64s(&[1]));
        assert_eq!(g_extract(2, 2, 30).unwrap(), QXPoly::from_i64s(&[1, 1]));
        assert_eq!(g_extract(2, 3, 40).unwrap(), QXPoly::from_i64s(&[1, 3, 1]));
    }

    #[test]
    fn a_examples() {
        for m in 0..4 {
            assert_eq!(a_extract(m, 30).unwrap(), QXPoly::from_i64s(&[1]));
        }
        let rep = a_polys_check(7, 60);
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witnesses);
    }
}
