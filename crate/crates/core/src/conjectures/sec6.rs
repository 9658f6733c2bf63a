//! Hankel determinants of `c_n(t)`: stabilization, block structure and
//! generating functions of `bold d_k(n,t)`, and the checkerboard identities
//! at `t = -1`.

use std::collections::BTreeSet;

use crate::arith::{choose2, int, is_palindromic, rat, sign_pow, twisted_reverse, Int, Rat, Ring, TPoly, XPoly};
use crate::hankel::{hankel_det_of, hankel_det_z};
use crate::report::{CheckReport, Recorder};
use crate::sequences::{c_polys, catalan, Family};
use crate::series::XSeries;

use super::{
    checked_blocks, observed_numerator, ratio_terms, t_denominator, tmono, tx_factor,
    BlockLayout, DenomSpec, GENFUN_MARGIN,
};

const T_READING: &str = "stabilization series are read in t: the displays write the series in x, \
                         but only the t reading matches the listed d_4 and d_5 data";

fn tp(cs: &[i64]) -> TPoly {
    TPoly::from_i64s(cs)
}

fn sign_normalized(k: usize, n: usize, d: &TPoly) -> TPoly {
    if k % 2 == 1 && sign_pow(choose2(n as i64)) < 0 {
        d.neg()
    } else {
        d.clone()
    }
}

/// `(1-t)^a (1-t^2)^b` for the shift `k`: `a = k/2`, `b = a^2 - a` for
/// even `k` and `a^2` for odd `k`.
fn stable_exponents(k: usize) -> (usize, usize) {
    let a = k / 2;
    if k.is_multiple_of(2) {
        (a, a * a - a)
    } else {
        (a, a * a)
    }
}

/// Coefficients of `1/((1-t)^a (1-t^2)^b)` below `t^len`.
fn stable_series(a: usize, b: usize, len: usize) -> Vec<Rat> {
    let den = tp(&[1, -1]).pow(a as u32).mul(&tp(&[1, 0, -1]).pow(b as u32));
    let s = XSeries::one(len).div_exact(&XSeries::from_poly(&den, len)).expect("unit constant term");
    s.coeffs().to_vec()
}

fn c2(m: i64) -> i64 {
    choose2(m)
}

/// Listed blocks `c_{k,j}(n,t)`, with the explicit polynomials for `c_{6,3}` and `c_{6,4}`.
fn listed_blocks(k: usize, n: usize) -> Vec<(usize, TPoly)> {
    let n = n as i64;
    match k {
        2 => vec![(0, tp(&[1])), (1, tp(&[1]))],
        3 => vec![(0, tp(&[1])), (1, tp(&[1, 1])), (2, tp(&[1]))],
        4 => vec![
            (0, tp(&[1])),
            (1, tp(&[n + 2, 1, -(n + 2)])),
            (2, tp(&[n + 2, -1, -(n + 2)])),
            (3, tp(&[-1])),
        ],
        5 => vec![
            (1, tp(&[1, 0, -1]).mul(&tp(&[n + 2, n + 3]))),
            (2, {
                let p = (n + 2) * (n + 3);
                tp(&[p, -1, -2 * p, -1, p])
            }),
        ],
        6 => {
            let (a, b) = (c2(n + 3), c2(n + 4));
            vec![
                (0, tp(&[1])),
                (1, tp(&[a, n + 3, -(n + 2) * (n + 4), -(n + 3), b])),
                (
                    2,
                    tp(&[
                        a * (n + 3),
                        -b,
                        -a * (3 * n + 11),
                        (n + 3) * (n + 3) - 2,
                        b * (3 * n + 7),
                        -a,
                        -b * (n + 3),
                    ]),
                ),
                (
                    3,
                    tp(&[
                        b * (n + 3),
                        -a,
                        -b * (3 * n + 7),
                        (n + 3) * (n + 3) - 2,
                        a * (3 * n + 11),
                        -b,
                        -a * (n + 3),
                    ]),
                ),
                (4, tp(&[b, -(n + 3), -(n + 2) * (n + 4), n + 3, b])),
                (5, tp(&[1])),
            ]
        }
        _ => Vec::new(),
    }
}

fn block_layout(k: usize, n: usize) -> BlockLayout {
    BlockLayout {
        offsets: (0..k).map(|j| j * n + j * (j + 1) / 2).collect(),
        widths: (0..k).map(|j| j * (k - 1 - j)).collect(),
        negate_odd: true,
    }
}

/// Even shift `2k`: `prod_{j<2k} (1 - t^j x)^{kj - (j-1)(j+2)/2}`; odd shift
/// `2k-1`: `prod_{j<2k-1} (1 + t^{2j} x^2)^{kj - (j-1)(j+2)/2 - floor((j+1)/2)}`.
fn genfun_denominator(m: usize) -> DenomSpec {
    let k = (m as i64 + 1) / 2;
    let base = |j: i64| k * j - (j - 1) * (j + 2) / 2;
    if m.is_multiple_of(2) {
        DenomSpec((0..2 * k).map(|j| (tx_factor(-1, j as usize, 1), base(j) as u32)).collect())
    } else {
        DenomSpec(
            (0..2 * k - 1)
                .map(|j| (tx_factor(1, 2 * j as usize, 2), (base(j) - (j + 1) / 2) as u32))
                .collect(),
        )
    }
}

/// The four listed generating-function numerators.
fn listed_numerators() -> Vec<(usize, XPoly)> {
    let x = |cs: Vec<TPoly>| XPoly::new(cs);
    vec![
        (1, x(vec![tp(&[1]), tp(&[1])])),
        (2, XPoly::one()),
        (3, x(vec![tp(&[1]), tp(&[1, 2, 1]), tmono(1, 2)])),
        (4, x(vec![tp(&[1]), TPoly::zero(), tmono(-1, 3)])),
    ]
}

/// Numerator over the conjectured denominator; no degree is claimed, so the
/// cleared series must end in at least `GENFUN_MARGIN` zeros.
fn numerator(rec: &mut Recorder, m: usize, order: usize) -> Option<XPoly> {
    let denom = genfun_denominator(m);
    let terms = ratio_terms(Family::C, m, order);
    let got = observed_numerator(&terms, &denom, GENFUN_MARGIN);
    match &got {
        Some(_) => rec.pass(),
        None => rec.fail(
            format!("bold A_{m}(x,t)"),
            format!("polynomial with {GENFUN_MARGIN} vanishing trailing terms"),
            format!("no such tail in {order} terms"),
        ),
    }
    got
}

/// Base determinants, degree, sign, palindromicity and stabilization of
/// `bold d_k(n,t)`, the block decomposition with listed blocks, and the
/// generating functions in `x`.
pub fn sec6_check(k_max: usize, n_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::new("sec6").param("k_max", k_max).param("n_max", n_max).param("N", order);
    rec.note(T_READING);
    for n in 0..=n_max {
        let d0 = TPoly::from_zpoly(&hankel_det_z(Family::C, 0, n).unwrap());
        rec.expect_eq(format!("bold D_0({n},t)"), &tmono(1, choose2(n as i64) as usize), &d0);
    }
    let kk = (2 * k_max + 1).max(6);
    let d: Vec<Vec<TPoly>> = (0..=kk).map(|k| ratio_terms(Family::C, k, n_max + 1)).collect();
    for k in 1..=kk {
        let (a, b) = stable_exponents(k);
        let series = stable_series(a, b, n_max + 1);
        for n in 0..=n_max {
            let p = sign_normalized(k, n, &d[k][n]);
            let label = format!("bold d_{k}({n},t)");
            rec.expect_eq(format!("{label} degree"), &((k - 1) * n).to_string(), &p.degree().to_string());
            rec.expect(
                format!("{label} palindromic, positive"),
                is_palindromic(&p, (k - 1) * n) && p.has_positive_coeffs(),
                "palindromic with positive coefficients",
                &p,
            );
            let head: Vec<Rat> = (0..=n).map(|j| p.coeff(j)).collect();
            if head != series[..=n] {
                rec.fail(
                    format!("{label} stabilization"),
                    TPoly::new(series[..=n].to_vec()),
                    TPoly::new(head),
                );
            } else {
                rec.pass();
            }
        }
    }
    rec.note("positivity is asserted for bold d_2k and for (-1)^C(n,2) bold d_(2k+1)");
    let listed_series = [(4, vec![1, 2, 5, 8, 14]), (5, vec![1, 2, 7, 12, 27])];
    for (k, want) in listed_series {
        let (a, b) = stable_exponents(k);
        let got = TPoly::new(stable_series(a, b, want.len()));
        rec.expect_eq(format!("series for shift {k}"), &tp(&want), &got);
    }
    listed_polys(&mut rec, &d, n_max);
    blocks(&mut rec, &d, n_max);

    for m in 1..=2 * k_max {
        if let Some(a) = numerator(&mut rec, m, order) {
            rec.note(format!("bold A_{m}(x,t) has degree {}", a.degree()));
        }
    }
    let one_minus_tx = tx_factor(-1, 1, 1);
    for (m, want) in listed_numerators() {
        let Some(got) = numerator(&mut rec, m, order) else { continue };
        if !rec.expect_eq(format!("listed bold A_{m}(x,t)"), &want, &got) && got == want.mul(&one_minus_tx) {
            rec.note(format!("bold A_{m}(x,t) = (1-tx) times the listed numerator"));
        }
    }
    rec.finish()
}

fn listed_polys(rec: &mut Recorder, d: &[Vec<TPoly>], n_max: usize) {
    for n in 0..=n_max {
        rec.expect_eq(format!("sign-normalized bold d_1({n},t)"), &tp(&[1]), &sign_normalized(1, n, &d[1][n]));
        let ones = TPoly::new(vec![rat(1, 1); n + 1]);
        rec.expect_eq(format!("bold d_2({n},t)"), &ones, &d[2][n]);
        let q = |m: usize| tp(&[1]).sub(&tmono(1, m));
        let gauss = q(n + 1).mul(&q(n + 2)).div_exact(&tp(&[1, -1]).mul(&tp(&[1, 0, -1]))).unwrap();
        rec.expect_eq(format!("sign-normalized bold d_3({n},t)"), &gauss, &sign_normalized(3, n, &d[3][n]));
    }
    let d4 = [
        tp(&[1]),
        tp(&[1, 2, 2, 1]),
        tp(&[1, 2, 5, 4, 5, 2, 1]),
        tp(&[1, 2, 5, 8, 9, 9, 8, 5, 2, 1]),
    ];
    let d5 = [
        tp(&[1]),
        tp(&[1, 2, 4, 2, 1]),
        tp(&[1, 2, 7, 8, 14, 8, 7, 2, 1]).neg(),
        tp(&[1, 2, 7, 12, 22, 26, 35, 26, 22, 12, 7, 2, 1]).neg(),
    ];
    for n in 0..=n_max.min(3) {
        rec.expect_eq(format!("listed bold d_4({n},t)"), &d4[n], &d[4][n]);
        rec.expect_eq(format!("listed bold d_5({n},t)"), &d5[n], &d[5][n]);
    }
}

fn blocks(rec: &mut Recorder, d: &[Vec<TPoly>], n_max: usize) {
    let mut explicit_off = BTreeSet::new();
    let mut observed = Vec::new();
    for k in 2..d.len() {
        let mut signs = BTreeSet::new();
        let (a, b) = stable_exponents(k);
        let den = t_denominator(a, b);
        let sym_sign = sign_pow((k / 2) as i64 - 1);
        for n in 0..=n_max {
            let p = sign_normalized(k, n, &d[k][n]);
            let label = format!("bold d_{k}({n},t)");
            let layout = block_layout(k, n);
            let Some(c) = checked_blocks(rec, &label, &p, &den, &layout) else {
                continue;
            };
            for j in 0..k {
                let w = j * (k - 1 - j);
                match c[j].reversed(w) {
                    Ok(rev) => {
                        let mirror = &c[k - 1 - j];
                        if *mirror == rev {
                            signs.insert(1);
                        } else if *mirror == rev.neg() {
                            signs.insert(-1);
                        } else {
                            signs.insert(0);
                        }
                        let want = if sym_sign < 0 { rev.neg() } else { rev };
                        rec.expect_eq(format!("{label}: c_({k},{}) from c_({k},{j})", k - 1 - j), &want, mirror);
                    }
                    Err(e) => rec.fail(format!("{label}: c_({k},{j})"), format!("degree <= {w}"), e),
                }
            }
            for (j, want) in listed_blocks(k, n) {
                if !rec.expect_eq(format!("{label}: listed c_({k},{j})"), &want, &c[j]) && k == 6 && j >= 3 {
                    explicit_off.insert(j);
                }
            }
        }
        if signs.len() == 1 && !signs.contains(&sym_sign) {
            observed.push(format!("k={k}: {}", signs.iter().next().unwrap()));
        }
    }
    if !observed.is_empty() {
        rec.note(format!(
            "block reflection sign differs from (-1)^(floor(k/2)-1) with a sign constant in n: {}",
            observed.join(", ")
        ));
    }
    rec.note("blocks for shift 3 as listed name c_(3,1) twice; the blocks found are c_(3,0) = c_(3,2) = 1, c_(3,1) = 1+t");
    if explicit_off.contains(&3) {
        rec.note("the explicit polynomial listed for c_(6,3) is -t^6 c_(6,2)(n,1/t); the blocks satisfy c_(6,3) = t^6 c_(6,2)(n,1/t) as also listed");
    }
    if explicit_off.contains(&4) {
        rec.note("the explicit polynomial listed for c_(6,4) ends in C(n+4,2) t^4; the blocks satisfy c_(6,4) = t^4 c_(6,1)(n,1/t), which ends in C(n+3,2) t^4");
    }
}

fn reversal_sign(a: &XPoly, rev: Option<XPoly>) -> Option<i64> {
    match rev {
        Some(r) if r == *a => Some(1),
        Some(r) if r == a.neg() => Some(-1),
        _ => None,
    }
}

/// The printed reversal identities for `bold A_2k` and `bold A_(2k+1)`
/// against the numerators found; recorded, not enforced.
pub fn sec6_symmetry_audit(k_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::audit("sec6-symmetry-audit").param("k_max", k_max).param("N", order);
    let mut even_signs = Vec::new();
    for k in 1..=k_max {
        let m = 2 * k;
        let Some(a) = numerator(&mut rec, m, order) else { continue };
        let xdeg = (k - 1) * k * (2 * k - 1) / 3;
        let tpow = ((k - 1) * k * (2 * k - 1) * (2 * k - 1) / 6) as i64;
        let sign = reversal_sign(&a, twisted_reverse(&a, xdeg, tpow, 2 * k as i64 - 1).ok());
        match sign {
            Some(1) => rec.pass(),
            _ => rec.fail(format!("bold A_{m} reversal"), "+bold A", format!("{sign:?}")),
        }
        even_signs.push(format!("k={k}: {}", sign.map_or("none".into(), |s| s.to_string())));
    }
    rec.note(format!("reversal sign of bold A_2k with the printed exponents: {}", even_signs.join(", ")));
    for k in 1..k_max {
        let m = 2 * k + 1;
        let Some(a) = numerator(&mut rec, m, order) else { continue };
        let printed = (2 * k * (k - 1) * (2 * k - 1) + 1) as i64 - (2 * (k - 1) * (k - 1)) as i64;
        if printed % 3 != 0 {
            rec.fail(format!("bold A_{m} printed x-exponent"), "integer", format!("{printed}/3"));
        }
        let xdeg = a.deg().unwrap_or(0);
        let sign = reversal_sign(&a, twisted_reverse(&a, xdeg, (k * xdeg) as i64, 2 * k as i64).ok());
        let holds = sign == Some(sign_pow(k as i64));
        rec.note(format!(
            "bold A_{m}: with x-exponent {xdeg} = deg and t-exponent {} the identity with sign (-1)^{k} {}",
            k * xdeg,
            if holds { "holds" } else { "fails" }
        ));
    }
    rec.finish()
}

/// `c(n,-1)` for `n < count`.
fn c_at_minus_one(count: usize) -> Vec<Int> {
    let m1 = rat(-1, 1);
    c_polys(count - 1)
        .iter()
        .map(|p| p.eval(&m1).to_integer())
        .collect()
}

/// The four checkerboard reductions to Catalan Hankel determinants.
pub fn checkerboard_check(k_max: usize, n_max: usize) -> CheckReport {
    let mut rec = Recorder::new("checkerboard").param("k_max", k_max).param("n_max", n_max);
    let len = 2 * k_max + 4 * n_max + 8;
    let c = c_at_minus_one(len);
    let cat: Vec<Int> = (0..len as u64).map(catalan).collect();
    let cdet = |shift: usize, size: usize| hankel_det_of(&c, shift, size).unwrap();
    let catdet = |shift: usize, size: usize| hankel_det_of(&cat, shift, size).unwrap();
    let mut fitted = [true; 3];
    for k in 0..=k_max {
        for n in 0..=n_max {
            let sq = catdet(k, n) * catdet(k, n);
            let want = if n % 2 == 1 { -sq } else { sq };
            rec.expect_eq(format!("shift 2k, size 2n, k={k}, n={n}"), &want, &cdet(2 * k, 2 * n));
            if k > 0 {
                rec.expect_eq(format!("shift 2k+1, size 2n, k={k}, n={n}"), &int(0), &cdet(2 * k + 1, 2 * n));
                let want = catdet(k, n) * catdet(k + 1, n);
                rec.expect_eq(format!("shift 2k-1, size 2n, k={k}, n={n}"), &want, &cdet(2 * k - 1, 2 * n));
                let want = catdet(k, n) * catdet(k + 1, n + 1);
                rec.expect_eq(format!("shift 2k-1, size 2n+1, k={k}, n={n}"), &want, &cdet(2 * k - 1, 2 * n + 1));
                fitted[0] &= cdet(2 * k, 2 * n + 1) == int(0);
            }
            fitted[1] &= cdet(2 * k + 1, 2 * n) == catdet(k, n) * catdet(k + 1, n);
            fitted[2] &= cdet(2 * k + 1, 2 * n + 1) == catdet(k, n + 1) * catdet(k + 1, n);
        }
    }
    let verdict = |b: bool| if b { "holds" } else { "fails" };
    rec.note(format!(
        "by parity of i+j: det(c(2k+i+j,-1)) of size 2n+1 = 0 for k > 0 {}; det(c(2k+1+i+j,-1)) of size 2n = \
         det(C_(k+i+j))_n det(C_(k+1+i+j))_n {}; of size 2n+1 = det(C_(k+i+j))_(n+1) det(C_(k+1+i+j))_n {}",
        verdict(fitted[0]),
        verdict(fitted[1]),
        verdict(fitted[2])
    ));
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn examples() {
        let d4 = ratio_terms(Family::C, 4, 4);
        assert_eq!(d4[3].coeffs()[..4], tp(&[1, 2, 5, 8]).coeffs()[..]);
        assert_eq!(stable_series(2, 2, 5), tp(&[1, 2, 5, 8, 14]).coeffs());
        let c = c_at_minus_one(11);
        assert_eq!(c, [1, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0].map(int));
        assert_eq!(hankel_det_of(&c, 0, 2).unwrap(), int(-1));
    }

    #[test]
    fn checkerboard_records_fitted_forms() {
        let rep = checkerboard_check(2, 3);
        assert_eq!(rep.status, Status::Fail);
        assert!(rep.witnesses.iter().all(|w| !w.input.starts_with("shift 2k, size 2n")));
        assert_eq!(rep.notes[0].matches("holds").count(), 3);
    }

    #[test]
    fn small_run_findings() {
        let rep = sec6_check(2, 6, 30);
        assert_eq!(rep.status, Status::Fail);
        assert!(rep.witnesses.iter().all(|w| !w.input.contains("c_(4,") && !w.input.contains("stabilization")));
        for needle in ["k=5: 1", "(1-tx) times the listed", "c_(6,3) is -t^6"] {
            assert!(rep.notes.iter().any(|n| n.contains(needle)), "{needle}: {:?}", rep.notes);
        }
    }

    #[test]
    fn reversal_audit() {
        let rep = sec6_symmetry_audit(2, 30);
        assert!(rep.notes[0].contains("k=1: 1, k=2: -1"));
        assert!(rep.notes[1].starts_with("bold A_3") && rep.notes[1].ends_with("holds"));
    }
}
