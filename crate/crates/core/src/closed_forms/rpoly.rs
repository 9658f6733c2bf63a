//! The polynomials `r_k(x)` that evaluate the middle-binomial Hankel
//! determinants, and the identities relating their product forms.

use crate::arith::{factorial, rat, QXPoly, Rat, Ring};
use crate::hankel::{det_bareiss, hankel_det_of, theorem_sign, Mat};
use crate::report::{CheckReport, Recorder};
use crate::sequences::Family;

/// `x + c`.
pub fn lin(c: i64) -> QXPoly {
    QXPoly::from_i64s(&[c, 1])
}

/// `C(x + c, m) = prod_{l<m} (x + c - l) / m!` as a polynomial in `x`.
pub fn binom_poly(c: i64, m: usize) -> QXPoly {
    let num = (0..m as i64).fold(QXPoly::one(), |acc, l| acc.mul(&lin(c - l)));
    num.scale(&Rat::from_integer(factorial(m as u64)).recip())
}

/// `prod_{j=1}^{k} ((j + x)/j)^{min(j, k-j)}`.
pub fn r_poly(k: usize) -> QXPoly {
    let mut acc = QXPoly::one();
    for j in 1..=k {
        let e = j.min(k - j) as u32;
        let f = lin(j as i64).scale(&rat(1, j as i64));
        acc = acc.mul(&f.pow(e));
    }
    acc
}

/// Double-product form over a `rows x cols` box:
/// `prod_{i<=rows} prod_{j<=cols} (i + j + x - 1)/(i + j - 1)`.
pub fn box_product(rows: usize, cols: usize) -> QXPoly {
    let mut acc = QXPoly::one();
    for i in 1..=rows as i64 {
        for j in 1..=cols as i64 {
            acc = acc.mul(&lin(i + j - 1).scale(&rat(1, i + j - 1)));
        }
    }
    acc
}

/// `s_k(x)` over the `floor(k/2) x ceil(k/2)` box.
pub fn s_poly(k: usize) -> QXPoly {
    box_product(k / 2, k.div_ceil(2))
}

/// `r_k(n)` evaluated at an integer.
pub fn r_value(k: usize, n: i64) -> Rat {
    r_poly(k).eval(&rat(n, 1))
}

/// `det(C(x + floor(k/2) + i + j, floor(k/2) + j))_{i,j=0}^{floor((k-1)/2)}`.
pub fn binomial_det(k: usize) -> QXPoly {
    let h = k / 2;
    let size = (k - 1) / 2 + 1;
    let m = Mat::from_fn(size, |i, j| binom_poly((h + i + j) as i64, h + j));
    det_bareiss(&m)
}

/// `v_{a,b}(x) = prod_{j<=a} prod_{i<=b} (x + j - i)`.
pub fn v_poly(a: usize, b: usize) -> QXPoly {
    let mut acc = QXPoly::one();
    for j in 1..=a as i64 {
        for i in 1..=b as i64 {
            acc = acc.mul(&lin(j - i));
        }
    }
    acc
}

/// The product form, the ratio recurrence, the binomial determinant and
/// the condensation identity, all as polynomial identities in `x`.
pub fn prop2_checks(k_max: usize) -> CheckReport {
    let mut rec = Recorder::new("prop2").param("k_max", k_max);
    let r: Vec<QXPoly> = (0..=k_max).map(r_poly).collect();
    for k in 2..=k_max {
        rec.expect_eq(format!("s_k = r_k, k={k}"), &r[k], &s_poly(k));

        let lo = k.div_ceil(2);
        let step = (lo..k).fold(QXPoly::one(), |acc, j| {
            acc.mul(&lin(j as i64).scale(&rat(1, j as i64)))
        });
        rec.expect_eq(format!("ratio recurrence, k={k}"), &r[k], &r[k - 1].mul(&step));

        rec.expect_eq(format!("binomial determinant, k={k}"), &r[k], &binomial_det(k));

        let one = rat(1, 1);
        let lhs = r[k].mul(&r[k - 2]);
        let mut cross = r[k - 2].taylor_shift(&one).mul(&r[k].taylor_shift(&one.clone().neg()));
        if k % 2 == 1 {
            cross = cross.neg();
        }
        let rhs = cross.add(&r[k - 1].pow(2));
        rec.expect_eq(format!("condensation in x, k={k}"), &lhs, &rhs);
    }
    let floors_only: Vec<usize> = (2..=k_max)
        .filter(|&k| box_product(k / 2, k / 2) != r[k])
        .collect();
    if !floors_only.is_empty() {
        rec.note(format!(
            "the floor(k/2) x floor(k/2) box differs from r_k for k in {floors_only:?}; \
             the floor(k/2) x ceil(k/2) box matches for every k"
        ));
    }
    rec.finish()
}

/// Signed middle-binomial Hankel determinants equal `r_k(n)`.
pub fn theorem1_check(k_max: usize, n_max: usize) -> CheckReport {
    let mut rec = Recorder::new("theorem1").param("k_max", k_max).param("n_max", n_max);
    let seq = Family::Mid.terms_int(k_max + 2 * n_max).unwrap();
    for k in 0..=k_max {
        let r = r_poly(k);
        for n in 0..=n_max {
            let d = hankel_det_of(&seq, k, n).unwrap();
            let signed = Rat::from_integer(d * theorem_sign(k, n));
            let want = r.eval(&rat(n as i64, 1));
            rec.expect_eq(format!("k={k}, n={n}"), &want, &signed);
            rec.expect(
                format!("r_{k}({n}) integral"),
                want.is_integer() && want >= rat(0, 1),
                "nonnegative integer",
                &want,
            );
        }
    }
    rec.finish()
}

/// `r_k(n) = v_{a,b}(n + b) / v_{a,b}(b)` with `a = floor(k/2)`, `b = floor((k+1)/2)`.
pub fn r_via_v_check(k_max: usize, n_max: usize) -> CheckReport {
    let mut rec = Recorder::new("r-via-v").param("k_max", k_max).param("n_max", n_max);
    for k in 0..=k_max {
        let (a, b) = (k / 2, k.div_ceil(2));
        let v = v_poly(a, b);
        let den = v.eval(&rat(b as i64, 1));
        for n in 0..=n_max {
            let want = r_value(k, n as i64);
            let got = v.eval(&rat((n + b) as i64, 1)) / &den;
            rec.expect_eq(format!("k={k}, n={n}"), &want, &got);
        }
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn q(cs: &[i64]) -> QXPoly {
        QXPoly::from_i64s(cs)
    }

    #[test]
    fn first_r_polys() {
        assert_eq!(r_poly(0), q(&[1]));
        assert_eq!(r_poly(1), q(&[1]));
        assert_eq!(r_poly(2), q(&[1, 1]));
        let r4 = lin(1).mul(&lin(2).pow(2)).mul(&lin(3)).scale(&rat(1, 12));
        assert_eq!(r_poly(4), r4);
        assert_eq!(r_value(3, 2), rat(6, 1));
    }

    #[test]
    fn small_identities() {
        assert_eq!(binomial_det(2), q(&[1, 1]));
        assert_eq!(r_poly(3), r_poly(2).mul(&lin(2)).scale(&rat(1, 2)));
        assert_eq!(v_poly(1, 1), q(&[0, 1]));
        assert_eq!(prop2_checks(8).status, Status::Pass);
    }

    #[test]
    fn theorem1_small() {
        let rep = theorem1_check(4, 6);
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witnesses);
        assert_eq!(r_via_v_check(6, 8).status, Status::Pass);
    }
}
