use midbinom::arith::{gamma_decompose, gamma_expand, parse_poly, twisted_reverse, Int, Rat, Ring, TPoly, XPoly};
use midbinom::conjectures::{genfun_structure_check, reassemble, split_blocks, tx_factor, Blocks, DenomSpec};
use midbinom::hankel::{det_bareiss, naive_det, Mat};
use midbinom::series::XSeries;
use proptest::prelude::*;

fn tpoly(max_deg: usize, bound: i64) -> impl Strategy<Value = TPoly> {
    prop::collection::vec(-bound..=bound, 0..=max_deg + 1).prop_map(|cs| TPoly::from_i64s(&cs))
}

fn nonzero_tpoly(max_deg: usize, bound: i64) -> impl Strategy<Value = TPoly> {
    tpoly(max_deg, bound).prop_filter("nonzero", |p| !p.is_zero())
}

fn rat_tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec((-50i64..=50, 1i64..=12), 0..=6).prop_map(|cs| {
        TPoly::new(cs.into_iter().map(|(n, d)| Rat::new(Int::from(n), Int::from(d))).collect())
    })
}

fn xpoly(max_xdeg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(tpoly(3, 6), 1..=max_xdeg + 1).prop_map(XPoly::new)
}

/// A rational series with constant term 1.
fn unit_series(order: usize) -> impl Strategy<Value = XSeries<Rat>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), order - 1).prop_map(move |cs| {
        let mut coeffs = vec![Rat::from_integer(Int::from(1))];
        coeffs.extend(cs.into_iter().map(|(n, d)| Rat::new(Int::from(n), Int::from(d))));
        XSeries::new(coeffs, order)
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Mat<TPoly>> {
    prop::collection::vec(prop::collection::vec(tpoly(2, 5), n), n).prop_map(Mat::from_rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in tpoly(8, 9), b in tpoly(8, 9), c in tpoly(8, 9)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.sub(&a), TPoly::zero());
    }

    #[test]
    fn exact_division_inverts_product(a in tpoly(8, 9), b in nonzero_tpoly(8, 9)) {
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn gamma_round_trip(gs in prop::collection::vec(-20i64..=20, 1..=5), extra in 0usize..=1) {
        let d = 2 * (gs.len() - 1) + extra;
        let gammas: Vec<Rat> = gs.iter().map(|&g| Rat::from_integer(Int::from(g))).collect();
        let p = gamma_expand(&gammas, d);
        let back = gamma_decompose(&p, d).unwrap();
        prop_assert_eq!(&back.gammas, &gammas);
        prop_assert_eq!(gamma_expand(&back.gammas, d), p);
        prop_assert_eq!(back.nonnegative, gs.iter().all(|&g| g >= 0));
    }

    #[test]
    fn twisted_reverse_is_an_involution(p in xpoly(4), pad in 0usize..=2, w in 0i64..=3) {
        let xdeg = p.deg().unwrap_or(0) + pad;
        let xdeg = xdeg + (w as usize * xdeg) % 2;
        let tpow = w * xdeg as i64 / 2;
        let p = XPoly::new(p.coeffs().iter().enumerate().map(|(i, c)| c.shift(w as usize * i)).collect());
        let once = twisted_reverse(&p, xdeg, tpow, w).unwrap();
        prop_assert_eq!(twisted_reverse(&once, xdeg, tpow, w).unwrap(), p);
    }

    #[test]
    fn rendering_round_trips(p in rat_tpoly()) {
        prop_assert_eq!(parse_poly(&p.to_string(), 't').unwrap(), p);
    }

    #[test]
    fn series_sqrt_squares_back(a in unit_series(12)) {
        let s = a.sqrt().unwrap();
        let sq = s.mul(&s);
        prop_assert_eq!(sq.coeffs(), a.coeffs());
    }

    #[test]
    fn series_division_inverts_product(a in unit_series(10), b in unit_series(10)) {
        let q = a.mul(&b).div_exact(&b).unwrap();
        prop_assert_eq!(q.coeffs(), a.coeffs());
    }

    #[test]
    fn rational_series_clears_denominator(n in xpoly(3), j in 0usize..=3, e in 1u32..=3) {
        let f = tx_factor(-1, j, 1);
        let order = 10;
        let s = XSeries::from_rational(&n, &[(f.clone(), e)], order).unwrap();
        let cleared = s.mul_poly(&f.pow(e));
        let want = XSeries::from_poly(&n, order);
        prop_assert_eq!(cleared.coeffs(), want.coeffs());
    }

    #[test]
    fn genfun_numerator_reexpands(n in xpoly(3), j in 0usize..=2, e in 1u32..=2, sign in prop::bool::ANY) {
        prop_assume!(!n.is_zero());
        let denom = DenomSpec(vec![(tx_factor(if sign { 1 } else { -1 }, j, 1), e)]);
        let deg = n.deg().unwrap();
        let count = deg + 5 + denom.degree() + 1;
        let terms = XSeries::from_rational(&n, &denom.0, count).unwrap();
        let (numer, rep) = genfun_structure_check("prop", terms.coeffs(), &denom, deg, 5).unwrap();
        prop_assert_eq!(rep.status, midbinom::report::Status::Pass);
        let again = XSeries::from_rational(&numer, &denom.0, count).unwrap();
        prop_assert_eq!(again.coeffs(), terms.coeffs());
    }

    #[test]
    fn blocks_reassemble(blocks in prop::collection::vec(tpoly(3, 9), 1..=4), gaps in prop::collection::vec(0usize..=3, 4)) {
        let widths = vec![3; blocks.len()];
        let mut offsets = Vec::new();
        let mut at = 0;
        for g in gaps.iter().take(blocks.len()) {
            at += g;
            offsets.push(at);
            at += 4;
        }
        let p = reassemble(&blocks, &offsets);
        prop_assert_eq!(split_blocks(&p, &offsets, &widths), Blocks::Split(blocks));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bareiss_matches_cofactor_expansion(m in matrix(5)) {
        prop_assert_eq!(det_bareiss(&m), naive_det(&m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn row_swap_flips_sign(m in matrix(4), i in 0usize..4, step in 1usize..4) {
        let mut s = m.clone();
        s.swap_rows(i, (i + step) % 4);
        prop_assert_eq!(det_bareiss(&s), det_bareiss(&m).neg());
    }
}
