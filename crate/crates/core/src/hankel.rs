//! Hankel matrices, exact determinants and orthogonal polynomials.

use crate::arith::{choose2, sign_pow, Int, Poly, Ring, TPoly, XPoly, ZPoly};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Recorder};
use crate::sequences::{moments_z, Family, WeightSpec};

/// Largest order accepted by [`naive_det`].
pub const NAIVE_DET_CAP: usize = 6;

/// Square matrix stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Mat<R> {
    /// Panics if the rows do not form a square.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
        Mat { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> R) -> Self {
        Mat { n, entries: (0..n * n).map(|i| f(i / n, i % n)).collect() }
    }

    pub fn empty() -> Self {
        Mat { n: 0, entries: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.entries.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat { n: self.n, entries: self.entries.iter().map(f).collect() }
    }
}

/// Fraction-free elimination with first-nonzero row pivoting.
///
/// Each update `(a_ij a_kk - a_ik a_kj) / prev` is exact in an integral
/// domain; a failed division panics because it can only come from a bug.
pub fn det_bareiss<R: Ring>(m: &Mat<R>) -> R {
    let n = m.n;
    if n == 0 {
        return R::one();
    }
    let mut a: Vec<Vec<R>> = (0..n).map(|i| m.entries[i * n..(i + 1) * n].to_vec()).collect();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&p| !a[p][k].is_zero()) else {
            return R::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let num = row[j].mul(&pivot_row[k]).sub(&row[k].mul(&pivot_row[j]));
                row[j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly in an integral domain");
            }
            row[k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Cofactor expansion along the first row; the oracle for [`det_bareiss`].
pub fn naive_det<R: Ring>(m: &Mat<R>) -> Result<R> {
    if m.n > NAIVE_DET_CAP {
        return Err(Error::TooLarge(format!("naive_det order {} > {NAIVE_DET_CAP}", m.n)));
    }
    fn expand<R: Ring>(m: &Mat<R>, rows: &[usize], cols: &[usize]) -> R {
        if rows.is_empty() {
            return R::one();
        }
        let mut acc = R::zero();
        for (ci, &c) in cols.iter().enumerate() {
            let e = m.get(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e.mul(&expand(m, &rows[1..], &sub_cols));
            acc = if ci % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    let idx: Vec<usize> = (0..m.n).collect();
    Ok(expand(m, &idx, &idx))
}

/// `(seq[k+i+j])_{i,j<n}`.
pub fn hankel_matrix<R: Ring>(seq: &[R], k: usize, n: usize) -> Result<Mat<R>> {
    if n == 0 {
        return Ok(Mat::empty());
    }
    let needed = k + 2 * n - 1;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms { needed, have: seq.len() });
    }
    Ok(Mat::from_fn(n, |i, j| seq[k + i + j].clone()))
}

/// `det(seq[k+i+j])_{i,j<n}` over any exact ring.
pub fn hankel_det_of<R: Ring>(seq: &[R], k: usize, n: usize) -> Result<R> {
    Ok(det_bareiss(&hankel_matrix(seq, k, n)?))
}

/// `D_k(n)` of a family over `Z[t]` (constant polynomials for integer families).
pub fn hankel_det_z(family: Family, k: usize, n: usize) -> Result<ZPoly> {
    if let Some(ints) = family.terms_int(k + 2 * n) {
        return Ok(ZPoly::constant(hankel_det_of(&ints, k, n)?));
    }
    hankel_det_of(&family.terms_z(k + 2 * n), k, n)
}

pub fn hankel_det(family: Family, k: usize, n: usize) -> Result<TPoly> {
    Ok(TPoly::from_zpoly(&hankel_det_z(family, k, n)?))
}

/// `D_k(n)` for an integer family.
pub fn hankel_det_int(family: Family, k: usize, n: usize) -> Result<Int> {
    let ints = family
        .terms_int(k + 2 * n)
        .ok_or_else(|| Error::Parse(format!("family {family} is not integer valued")))?;
    hankel_det_of(&ints, k, n)
}

/// `D_k(n)` for `n` in `0..=n_max`, sharing one term list.
pub fn hankel_dets_int(seq: &[Int], k: usize, n_max: usize) -> Result<Vec<Int>> {
    (0..=n_max).map(|n| hankel_det_of(seq, k, n)).collect()
}

pub fn hankel_dets_z(seq: &[ZPoly], k: usize, n_max: usize) -> Result<Vec<ZPoly>> {
    (0..=n_max).map(|n| hankel_det_of(seq, k, n)).collect()
}

/// Monic orthogonal polynomials `p_0..=p_n_max` in `x` over `Z[t]`.
pub fn orthopolys_z(w: &WeightSpec, n_max: usize) -> Vec<Poly<ZPoly>> {
    let x = Poly::<ZPoly>::var();
    let mut ps = vec![Poly::<ZPoly>::one()];
    for n in 1..=n_max {
        let lin = x.sub(&Poly::constant(w.s(n - 1)));
        let mut p = lin.mul(&ps[n - 1]);
        if n >= 2 {
            p = p.sub(&ps[n - 2].scale(&w.t(n - 2)));
        }
        ps.push(p);
    }
    ps
}

/// `p_n(x)` with `p_n = (x - s_{n-1}) p_{n-1} - t_{n-2} p_{n-2}`.
pub fn orthopoly(w: &WeightSpec, n: usize) -> XPoly {
    let p = orthopolys_z(w, n).pop().unwrap();
    p.map(TPoly::from_zpoly)
}

/// `prod_{i=1}^{n-1} prod_{j<i} t_j`.
pub fn eq18_product(w: &WeightSpec, n: usize) -> ZPoly {
    let mut acc = ZPoly::one();
    for i in 1..n {
        for j in 0..i {
            acc = acc.mul(&w.t(j));
        }
    }
    acc
}

/// `D_k(n) / D_0(n)` from the orthogonal polynomials:
/// `(-1)^{nk} det([x^j] p_{n+i})_{i,j<k}`.
///
/// `ps` must hold `p_0..=p_{n+k-1}`.
pub fn christoffel_ratio(ps: &[Poly<ZPoly>], k: usize, n: usize) -> Result<ZPoly> {
    if k == 0 {
        return Ok(ZPoly::one());
    }
    if ps.len() < n + k {
        return Err(Error::InsufficientTerms { needed: n + k, have: ps.len() });
    }
    let m = Mat::from_fn(k, |i, j| ps[n + i].coeff(j));
    let d = det_bareiss(&m);
    Ok(if (n * k) % 2 == 1 { d.neg() } else { d })
}

/// Up to this size, normalized ratios come from two Bareiss determinants.
pub const DIRECT_RATIO_CAP: usize = 10;

/// `D_k(n) / D_0(n)` for a weighted family.
///
/// Small `n` divides two determinants exactly; larger `n` uses
/// [`christoffel_ratio`]. The `ratio-routes` check cross-validates both.
pub fn normalized_ratio(family: Family, k: usize, n: usize) -> Result<TPoly> {
    Ok(TPoly::from_zpoly(&normalized_ratio_z(family, k, n)?))
}

pub fn normalized_ratio_z(family: Family, k: usize, n: usize) -> Result<ZPoly> {
    let w = family
        .weights()
        .ok_or_else(|| Error::Parse(format!("family {family} has no weight rules")))?;
    if n <= DIRECT_RATIO_CAP {
        let seq = family.terms_z(k + 2 * n);
        let dk = hankel_det_of(&seq, k, n)?;
        let d0 = hankel_det_of(&seq, 0, n)?;
        return dk.div_exact(&d0);
    }
    christoffel_ratio(&orthopolys_z(&w, n + k), k, n)
}

/// `D_k(n)/D_0(n)` for every `n` in `0..=n_max`.
pub fn normalized_ratios_z(family: Family, k: usize, n_max: usize) -> Result<Vec<ZPoly>> {
    let w = family
        .weights()
        .ok_or_else(|| Error::Parse(format!("family {family} has no weight rules")))?;
    let seq = family.terms_z(k + 2 * n_max.min(DIRECT_RATIO_CAP) + 1);
    let ps = orthopolys_z(&w, n_max + k);
    (0..=n_max)
        .map(|n| {
            if n <= DIRECT_RATIO_CAP {
                hankel_det_of(&seq, k, n)?.div_exact(&hankel_det_of(&seq, 0, n)?)
            } else {
                christoffel_ratio(&ps, k, n)
            }
        })
        .collect()
}

/// Both determinant formulas obtained from the orthogonal polynomials.
pub fn eq18_check(w: &WeightSpec, n_max: usize) -> CheckReport {
    let mut rec = Recorder::new(format!("eq18/{}", w.name)).param("n_max", n_max);
    let seq = moments_z(w, 2 * n_max + 1);
    let ps = orthopolys_z(w, n_max);
    for n in 0..=n_max {
        let prod = eq18_product(w, n);
        let d0 = hankel_det_of(&seq, 0, n).unwrap();
        rec.expect_eq(format!("det M(i+j), n={n}"), &prod, &d0);
        let p0 = ps[n].coeff(0);
        let want = p0.mul(&prod).mul(&ZPoly::from_i64(sign_pow(n as i64)));
        let d1 = hankel_det_of(&seq, 1, n).unwrap();
        rec.expect_eq(format!("det M(i+j+1), n={n}"), &want, &d1);
    }
    rec.finish()
}

/// `D_k(n) D_{k+2}(n-2) - D_{k+2}(n-1) D_k(n-1) + D_{k+1}(n-1)^2 = 0`.
pub fn condensation_check(family: Family, k: usize, n_max: usize) -> CheckReport {
    let mut rec = Recorder::new(format!("condensation/{family}"))
        .param("k", k)
        .param("n_max", n_max);
    let seq = family.terms_z(k + 2 + 2 * n_max);
    let d = |kk: usize, n: usize| hankel_det_of(&seq, kk, n).unwrap();
    for n in 2..=n_max {
        let lhs = d(k, n)
            .mul(&d(k + 2, n - 2))
            .sub(&d(k + 2, n - 1).mul(&d(k, n - 1)))
            .add(&d(k + 1, n - 1).pow(2));
        rec.expect(format!("k={k}, n={n}"), lhs.is_zero(), "0", &lhs);
    }
    rec.finish()
}

/// The two specializations of condensation to the normalized family-B
/// ratios, at even and odd sizes.
pub fn condensation_b_ratios(k: usize, n_max: usize) -> CheckReport {
    let mut rec = Recorder::new("condensation/b-ratios").param("k", k).param("n_max", n_max);
    let rat: Vec<Vec<ZPoly>> = (0..=k + 2)
        .map(|kk| normalized_ratios_z(Family::B, kk, 2 * n_max + 1).unwrap())
        .collect();
    let d = |kk: usize, n: usize| &rat[kk][n];
    let t = ZPoly::var();
    for n in 1..=n_max {
        let even = t
            .mul(d(k + 2, 2 * n - 2))
            .mul(d(k, 2 * n))
            .sub(&d(k + 2, 2 * n - 1).mul(d(k, 2 * n - 1)))
            .add(&d(k + 1, 2 * n - 1).pow(2));
        rec.expect(format!("even form, k={k}, n={n}"), even.is_zero(), "0", &even);
        let odd = d(k + 2, 2 * n - 1)
            .mul(d(k, 2 * n + 1))
            .sub(&d(k + 2, 2 * n).mul(d(k, 2 * n)))
            .add(&d(k + 1, 2 * n).pow(2));
        rec.expect(format!("odd form, k={k}, n={n}"), odd.is_zero(), "0", &odd);
    }
    rec.finish()
}

/// The closed forms of the first two determinants of each family, `n <= n_max`.
pub fn base_determinants_check(n_max: usize) -> CheckReport {
    let mut rec = Recorder::new("base-determinants").param("n_max", n_max);
    let mono = |c: i64, e: usize| ZPoly::monomial(Int::from(c), e);
    let mid = Family::Mid.terms_z(2 * n_max + 2);
    for n in 0..=n_max {
        let c2 = choose2(n as i64);
        let d0 = hankel_det_of(&mid, 0, n).unwrap();
        rec.expect_eq(format!("D_0({n})"), &mono(1, 0), &d0);
        let d1 = hankel_det_of(&mid, 1, n).unwrap();
        rec.expect_eq(format!("D_1({n})"), &mono(sign_pow(c2), 0), &d1);
        let b0 = hankel_det_z(Family::B, 0, n).unwrap();
        rec.expect_eq(format!("D_0({n},t)"), &mono(1, n * n / 4), &b0);
        let a0 = hankel_det_z(Family::A, 0, n).unwrap();
        rec.expect_eq(format!("Delta_0({n},t)"), &mono(1, c2 as usize), &a0);
        let c0 = hankel_det_z(Family::C, 0, n).unwrap();
        rec.expect_eq(format!("bold D_0({n},t)"), &mono(1, c2 as usize), &c0);
        let m = n / 2;
        let d1b = if n % 2 == 0 { mono(sign_pow(m as i64), m) } else { mono(sign_pow(m as i64), 0) };
        rec.expect_eq(format!("d_1({n},t)"), &d1b, &normalized_ratio_z(Family::B, 1, n).unwrap());
        let delta1 = mono(sign_pow(c2), m);
        rec.expect_eq(format!("delta_1({n},t)"), &delta1, &normalized_ratio_z(Family::A, 1, n).unwrap());
    }
    rec.finish()
}

/// [`det_bareiss`] against [`naive_det`] on seeded random 5x5 matrices over
/// `Z[t]`, plus the sign change under a row swap.
pub fn det_oracle_check(cases: usize, seed: u64) -> CheckReport {
    use rand::{Rng, SeedableRng};
    let mut rec = Recorder::new("oracles/det").param("cases", cases).param("seed", seed);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let rows = (0..5)
            .map(|_| {
                (0..5)
                    .map(|_| ZPoly::from_i64s(&[(); 3].map(|_| rng.gen_range(-5..=5))))
                    .collect()
            })
            .collect();
        let m = Mat::from_rows(rows);
        let fast = det_bareiss(&m);
        rec.expect_eq(format!("case {case}"), &naive_det(&m).unwrap(), &fast);
        let mut swapped = m.clone();
        let i = case % 5;
        swapped.swap_rows(i, (i + 1 + case / 5 % 4) % 5);
        if case < 20 {
            rec.expect_eq(format!("case {case} row swap"), &fast.neg(), &det_bareiss(&swapped));
        }
    }
    rec.finish()
}

/// Sign `(-1)^{k C(n,2)}` used throughout.
pub fn theorem_sign(k: usize, n: usize) -> i64 {
    sign_pow(k as i64 * choose2(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn zm(rows: &[&[i64]]) -> Mat<Int> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_bareiss(&zm(&[&[1, 2], &[2, 3]])), int(-1));
        assert_eq!(det_bareiss(&Mat::<Int>::empty()), int(1));
        let m = Mat::from_rows(vec![
            vec![TPoly::one(), TPoly::one()],
            vec![TPoly::one(), TPoly::from_i64s(&[1, 1])],
        ]);
        assert_eq!(det_bareiss(&m), TPoly::var());
        assert_eq!(det_bareiss(&zm(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(det_bareiss(&zm(&[&[0, 0], &[1, 0]])), int(0));
    }

    #[test]
    fn naive_examples() {
        assert_eq!(naive_det(&zm(&[&[1, 2], &[2, 3]])).unwrap(), int(-1));
        assert_eq!(naive_det(&zm(&[&[7]])).unwrap(), int(7));
        assert_eq!(naive_det(&zm(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        let big = Mat::from_fn(7, |i, j| int((i == j) as i64));
        assert!(matches!(naive_det(&big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn hankel_examples() {
        let b: Vec<Int> = Family::Mid.terms_int(6).unwrap();
        assert_eq!(hankel_matrix(&b, 1, 2).unwrap(), zm(&[&[1, 2], &[2, 3]]));
        assert_eq!(hankel_matrix(&b, 0, 0).unwrap().order(), 0);
        assert!(hankel_matrix(&b, 3, 2).is_ok());
        assert!(matches!(hankel_matrix(&b, 4, 2), Err(Error::InsufficientTerms { .. })));
        assert_eq!(hankel_det_int(Family::Mid, 2, 2).unwrap(), int(3));
        assert_eq!(hankel_det_int(Family::Mid, 3, 2).unwrap(), int(-6));
        let d: Vec<Int> = (0..6).map(|n| hankel_det_int(Family::Shifted(1), 1, n).unwrap()).collect();
        assert_eq!(d, [1, 1, 2, 1, 1, 0].map(int).to_vec());
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(normalized_ratio(Family::B, 2, 2).unwrap(), TPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(normalized_ratio(Family::A, 1, 2).unwrap(), TPoly::from_i64s(&[0, -1]));
        assert_eq!(normalized_ratio(Family::C, 2, 1).unwrap(), TPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn orthopoly_examples() {
        let w = WeightSpec::middle();
        assert_eq!(orthopoly(&w, 1), XPoly::new(vec![TPoly::from_i64s(&[-1]), TPoly::one()]));
        let at0: Vec<TPoly> = (1..=4).map(|n| orthopoly(&w, n).coeff(0)).collect();
        assert_eq!(at0, [-1, -1, 1, 1].map(|v| TPoly::from_i64s(&[v])).to_vec());
        let b = WeightSpec::family_b();
        assert_eq!(orthopoly(&b, 2).coeff(0), TPoly::from_i64s(&[0, -1]));
        assert_eq!(orthopoly(&b, 4).coeff(0), TPoly::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn christoffel_matches_bareiss() {
        for fam in [Family::Mid, Family::A, Family::B, Family::C] {
            let w = fam.weights().unwrap();
            let ps = orthopolys_z(&w, 12);
            let seq = fam.terms_z(20);
            for k in 0..=4 {
                for n in 0..=7 {
                    let direct = hankel_det_of(&seq, k, n).unwrap().div_exact(&hankel_det_of(&seq, 0, n).unwrap()).unwrap();
                    assert_eq!(christoffel_ratio(&ps, k, n).unwrap(), direct, "{fam} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn eq18_and_condensation() {
        for w in WeightSpec::all() {
            assert_eq!(eq18_check(&w, 8).status, crate::report::Status::Pass, "{}", w.name);
        }
        assert_eq!(condensation_check(Family::Mid, 0, 10).status, crate::report::Status::Pass);
        assert_eq!(condensation_check(Family::B, 0, 8).status, crate::report::Status::Pass);
        assert_eq!(condensation_b_ratios(0, 4).status, crate::report::Status::Pass);
    }
}
