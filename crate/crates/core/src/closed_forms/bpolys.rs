//! Numerators `B_{2k+1}` of the generating functions of the odd-index
//! middle-binomial Hankel determinants.

use crate::arith::{rat, sign_twist_even, Int, QXPoly, Rat, Ring};
use crate::error::Result;
use crate::hankel::hankel_det_of;
use crate::report::{CheckReport, Recorder};
use crate::sequences::Family;
use crate::series::XSeries;

use super::operator::{a_extract, a_denominator_exponent};

/// The even and odd parts of `B_{2k+1}` before and after `x -> ix`.
#[derive(Debug, Clone, PartialEq)]
pub struct BPolys {
    /// `B^0(x)`, even in `x`.
    pub b0: QXPoly,
    /// `B^1(x)`, even in `x`.
    pub b1: QXPoly,
    /// `B^0(ix)`.
    pub b0_twisted: QXPoly,
    /// `B^1(ix)`.
    pub b1_twisted: QXPoly,
    /// `B^0(ix) + x B^1(ix)`.
    pub b: QXPoly,
}

/// Build `B^0, B^1, B` for `D_{2k+1}` from `A_{2k+1}`.
pub fn b_polys(k: usize, order: usize) -> Result<BPolys> {
    let a = a_extract(2 * k + 1, order)?;
    let e = a_denominator_exponent(2 * k + 1) as u32;
    let plus = a.mul(&QXPoly::from_i64s(&[1, 1]).pow(e));
    let minus = a.negate_var().mul(&QXPoly::from_i64s(&[1, -1]).pow(e));
    let half = rat(1, 2);
    let b0 = plus.add(&minus).scale(&half);
    let b1 = plus.sub(&minus).scale(&half).unshift(1)?;
    let b0_twisted = sign_twist_even(&b0)?;
    let b1_twisted = sign_twist_even(&b1)?;
    let b = b0_twisted.add(&b1_twisted.shift(1));
    Ok(BPolys { b0, b1, b0_twisted, b1_twisted, b })
}

pub fn listed_b_polys() -> Vec<(usize, QXPoly)> {
    vec![
        (1, QXPoly::from_i64s(&[1, 3, -3, -1])),
        (2, QXPoly::from_i64s(&[1, 10, -43, -105, 161, 161, -105, -43, 10, 1])),
    ]
}

/// `D_{2k+1}(n)` for `n < order`.
fn odd_dets(k: usize, order: usize) -> Vec<Int> {
    let m = 2 * k + 1;
    let seq = Family::Mid.terms_int(m + 2 * order).unwrap();
    (0..order).map(|n| hankel_det_of(&seq, m, n).unwrap()).collect()
}

/// Listed values, reversal, symmetry, degrees, and the generating-function
/// identity with the actual determinants.
pub fn theorem6_check(k_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::new("theorem6").param("k_max", k_max).param("N", order);
    let listed = listed_b_polys();
    for k in 0..=k_max {
        let bp = match b_polys(k, order) {
            Ok(bp) => bp,
            Err(e) => {
                rec.fail(format!("k={k}"), "B polynomials", e);
                continue;
            }
        };
        let d = 2 * k * k;
        if let Some((_, want)) = listed.iter().find(|(i, _)| *i == k) {
            rec.expect_eq(format!("B_{} listed", 2 * k + 1), want, &bp.b);
        }
        if k == 0 {
            rec.expect_eq("B_1".to_string(), &QXPoly::from_i64s(&[1, 1]), &bp.b);
            rec.note("B_1 = 1+x: the listed value 1 omits the odd part x*B^1(ix) = x");
        }
        match bp.b0.reversed(d) {
            Ok(rev) => {
                rec.expect_eq(format!("B^1 = x^(2k^2) B^0(1/x), k={k}"), &bp.b1, &rev);
            }
            Err(e) => rec.fail(format!("reversal k={k}"), format!("degree <= {d}"), e),
        }
        rec.expect_eq(format!("deg B^0(ix), k={k}"), &d.to_string(), &bp.b0_twisted.degree().to_string());
        rec.expect_eq(format!("deg B^1(ix), k={k}"), &d.to_string(), &bp.b1_twisted.degree().to_string());
        match bp.b.reversed(d + 1) {
            Ok(rev) => {
                let want = if k % 2 == 1 { bp.b.neg() } else { bp.b.clone() };
                rec.expect_eq(format!("x^(2k^2+1) B(1/x) = (-1)^k B, k={k}"), &want, &rev);
            }
            Err(e) => rec.fail(format!("symmetry k={k}"), format!("degree <= {}", d + 1), e),
        }

        let dets = odd_dets(k, order);
        let e = a_denominator_exponent(2 * k + 1) as u32;
        let denom = QXPoly::from_i64s(&[1, 0, 1]).pow(e);
        let gf = XSeries::new(dets.iter().map(|v| Rat::from_integer(v.clone())).collect(), order);
        let lhs = gf.mul_poly(&denom);
        let rhs = XSeries::from_poly(&bp.b, order);
        match (0..order).find(|&i| lhs.coeffs()[i] != rhs.coeffs()[i]) {
            None => rec.pass(),
            Some(i) => rec.fail(
                format!("generating function k={k}, [x^{i}]"),
                crate::arith::format_rat(&rhs.coeffs()[i]),
                crate::arith::format_rat(&lhs.coeffs()[i]),
            ),
        }
        let even = XSeries::new(
            dets.iter()
                .enumerate()
                .map(|(n, v)| if n % 2 == 0 { Rat::from_integer(v.clone()) } else { rat(0, 1) })
                .collect(),
            order,
        )
        .mul_poly(&denom);
        rec.expect_eq(
            format!("even part k={k}"),
            &bp.b0_twisted,
            &even.to_poly(),
        );
        let odd = XSeries::new(
            dets.iter()
                .enumerate()
                .map(|(n, v)| if n % 2 == 1 { Rat::from_integer(v.clone()) } else { rat(0, 1) })
                .collect(),
            order,
        )
        .mul_poly(&denom);
        rec.expect_eq(format!("odd part k={k}"), &bp.b1_twisted.shift(1), &odd.to_poly());
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn b3_pieces() {
        let bp = b_polys(1, 40).unwrap();
        assert_eq!(bp.b0, QXPoly::from_i64s(&[1, 0, 3]));
        assert_eq!(bp.b1, QXPoly::from_i64s(&[3, 0, 1]));
        assert_eq!(bp.b, QXPoly::from_i64s(&[1, 3, -3, -1]));
    }

    #[test]
    fn theorem6_small() {
        let rep = theorem6_check(2, 40);
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witnesses);
    }
}
