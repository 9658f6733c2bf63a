//! Structural checks for the conjectured generating functions and block
//! decompositions of the weighted Hankel determinants, plus the modular
//! patterns of the shifted middle binomials.

mod sec4;
mod sec5;
mod sec6;
mod sec7;

pub use sec4::{
    conj10_12_check, conj8_9_check, cor12_audit, d3_closed_audit, listed_b0_polys, listed_even_a_polys,
    r_family_poly, sec4_closedforms,
};
pub use sec5::{listed_rho, rho_poly, sec5_check};
pub use sec6::{checkerboard_check, sec6_check, sec6_symmetry_audit};
pub use sec7::{d4_formula, sec7_check, sec7_checks, shifted_det, SEC7_IDS};

use crate::arith::{Int, Rat, Ring, TPoly, XPoly};
use crate::error::{Error, Result};
use crate::hankel::normalized_ratios_z;
use crate::report::{CheckReport, Recorder};
use crate::sequences::Family;
use crate::series::XSeries;

/// Extra vanishing coefficients demanded beyond the claimed numerator degree.
pub const GENFUN_MARGIN: usize = 5;

/// A product of powers of polynomials in `x`, each with constant term 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DenomSpec(pub Vec<(XPoly, u32)>);

impl DenomSpec {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|(f, e)| f.deg().unwrap_or(0) * *e as usize).sum()
    }

    pub fn expand(&self) -> XPoly {
        self.0.iter().fold(XPoly::one(), |acc, (f, e)| acc.mul(&f.pow(*e)))
    }
}

/// `1 + sign * t^j * x^m`.
pub fn tx_factor(sign: i64, j: usize, m: usize) -> XPoly {
    let mut c = vec![TPoly::zero(); m + 1];
    c[0] = TPoly::one();
    c[m] = TPoly::monomial(Rat::from_integer(Int::from(sign)), j);
    XPoly::new(c)
}

/// How many terms a structure check needs.
pub fn terms_needed(denom: &DenomSpec, claimed_deg: usize, margin: usize) -> usize {
    claimed_deg + margin + denom.degree() + 1
}

/// Clear the denominator from `sum terms[n] x^n` and check that the result
/// is a polynomial of exactly the claimed degree.
pub fn genfun_structure_check(
    id: &str,
    terms: &[TPoly],
    denom: &DenomSpec,
    claimed_deg: usize,
    margin: usize,
) -> Result<(XPoly, CheckReport)> {
    let needed = terms_needed(denom, claimed_deg, margin);
    if terms.len() < needed {
        return Err(Error::InsufficientTerms { needed, have: terms.len() });
    }
    let mut rec = Recorder::new(id)
        .param("claimed_degree", claimed_deg)
        .param("terms", terms.len());
    let numer = record_structure(&mut rec, "", terms, denom, claimed_deg);
    Ok((numer, rec.finish()))
}

/// Record the tail and exact-degree claims into `rec`; returns the
/// numerator truncated at the claimed degree.
pub(crate) fn record_structure(
    rec: &mut Recorder,
    label: &str,
    terms: &[TPoly],
    denom: &DenomSpec,
    claimed_deg: usize,
) -> XPoly {
    let cleared = cleared_series(terms, denom);
    let tail = (claimed_deg + 1..cleared.order()).find(|&i| !cleared.coeffs()[i].is_zero());
    let numer = XPoly::new(cleared.coeffs().iter().take(claimed_deg + 1).cloned().collect());
    let sep = if label.is_empty() { "" } else { ": " };
    match tail {
        None => {
            rec.expect_eq(
                format!("{label}{sep}numerator degree"),
                &claimed_deg.to_string(),
                &numer.degree().to_string(),
            );
        }
        Some(i) => rec.fail(
            format!("{label}{sep}numerator tail"),
            format!("zero beyond x^{claimed_deg}"),
            format!("nonzero at x^{i} with {} terms", terms.len()),
        ),
    }
    numer
}

fn cleared_series(terms: &[TPoly], denom: &DenomSpec) -> XSeries<TPoly> {
    XSeries::new(terms.to_vec(), terms.len()).mul_poly(&denom.expand())
}

/// Numerator when no degree is claimed: the cleared series must end with
/// at least `margin` vanishing coefficients.
pub fn observed_numerator(terms: &[TPoly], denom: &DenomSpec, margin: usize) -> Option<XPoly> {
    let cleared = cleared_series(terms, denom);
    let last = (0..cleared.order()).rev().find(|&i| !cleared.coeffs()[i].is_zero())?;
    (cleared.order() - 1 - last >= margin).then(|| cleared.to_poly())
}

/// Outcome of splitting a polynomial into shifted blocks.
#[derive(Debug, Clone, PartialEq)]
pub enum Blocks {
    /// Block `j` as a polynomial, its window shifted back to `t^0`.
    Split(Vec<TPoly>),
    /// Windows `first` and `second` intersect.
    Overlap { first: usize, second: usize },
    /// A nonzero coefficient lies outside every window.
    Stray { exponent: usize },
}

/// Split `p * prod denom_t` into blocks with supports in
/// `[offsets[j], offsets[j] + widths[j]]`.
pub fn block_decompose(p: &TPoly, denom_t: &[(TPoly, u32)], offsets: &[usize], widths: &[usize]) -> Blocks {
    let cleared = denom_t.iter().fold(p.clone(), |acc, (f, e)| acc.mul(&f.pow(*e)));
    split_blocks(&cleared, offsets, widths)
}

pub fn split_blocks(cleared: &TPoly, offsets: &[usize], widths: &[usize]) -> Blocks {
    let windows: Vec<(usize, usize)> = offsets.iter().zip(widths).map(|(&o, &w)| (o, o + w)).collect();
    for a in 0..windows.len() {
        for b in a + 1..windows.len() {
            let (lo_a, hi_a) = windows[a];
            let (lo_b, hi_b) = windows[b];
            if lo_a <= hi_b && lo_b <= hi_a {
                return Blocks::Overlap { first: a, second: b };
            }
        }
    }
    if let Some(exponent) = (0..cleared.coeffs().len())
        .filter(|&e| !cleared.coeffs()[e].is_zero())
        .find(|&e| !windows.iter().any(|&(lo, hi)| lo <= e && e <= hi))
    {
        return Blocks::Stray { exponent };
    }
    Blocks::Split(
        windows
            .iter()
            .map(|&(lo, hi)| TPoly::new((lo..=hi).map(|e| cleared.coeff(e)).collect()))
            .collect(),
    )
}

/// `sum_j blocks[j] * t^{offsets[j]}`.
pub fn reassemble(blocks: &[TPoly], offsets: &[usize]) -> TPoly {
    blocks
        .iter()
        .zip(offsets)
        .fold(TPoly::zero(), |acc, (b, &o)| acc.add(&b.shift(o)))
}

/// Block windows and signs for one polynomial.
pub(crate) struct BlockLayout {
    pub offsets: Vec<usize>,
    pub widths: Vec<usize>,
    pub negate_odd: bool,
}

/// Split and check exact block degrees; returns the signed blocks.
pub(crate) fn checked_blocks(
    rec: &mut Recorder,
    label: &str,
    r: &TPoly,
    den: &[(TPoly, u32)],
    layout: &BlockLayout,
) -> Option<Vec<TPoly>> {
    match block_decompose(r, den, &layout.offsets, &layout.widths) {
        Blocks::Split(blocks) => {
            let signed: Vec<TPoly> = blocks
                .into_iter()
                .enumerate()
                .map(|(j, b)| if layout.negate_odd && j % 2 == 1 { b.neg() } else { b })
                .collect();
            for (j, c) in signed.iter().enumerate() {
                rec.expect_eq(
                    format!("{label}: deg c_{j}"),
                    &layout.widths[j].to_string(),
                    &c.degree().to_string(),
                );
            }
            Some(signed)
        }
        Blocks::Overlap { first, second } => {
            rec.skip(format!(
                "{label}: block windows {first} and {second} overlap; decomposition not unique"
            ));
            None
        }
        Blocks::Stray { exponent } => {
            rec.fail(format!("{label}: support"), "inside the block windows", format!("t^{exponent}"));
            None
        }
    }
}

/// Normalized ratios `D_k(n)/D_0(n)` for `n < count` as rational polynomials.
pub(crate) fn ratio_terms(family: Family, k: usize, count: usize) -> Vec<TPoly> {
    if count == 0 {
        return Vec::new();
    }
    normalized_ratios_z(family, k, count - 1)
        .expect("weighted family")
        .iter()
        .map(TPoly::from_zpoly)
        .collect()
}

/// `c * t^e` with an integer coefficient.
pub(crate) fn tmono(c: i64, e: usize) -> TPoly {
    TPoly::monomial(Rat::from_integer(Int::from(c)), e)
}

/// Signed power of `t`, `(+-1) t^e`.
pub(crate) fn signed_tpow(negative: bool, e: usize) -> TPoly {
    tmono(if negative { -1 } else { 1 }, e)
}

/// `(1 - t)^a (1 - t^2)^b` as a factor list.
pub(crate) fn t_denominator(a: usize, b: usize) -> Vec<(TPoly, u32)> {
    vec![(TPoly::from_i64s(&[1, -1]), a as u32), (TPoly::from_i64s(&[1, 0, -1]), b as u32)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn x_of(cs: &[TPoly]) -> XPoly {
        XPoly::new(cs.to_vec())
    }

    #[test]
    fn structure_of_d2_and_d4() {
        let denom = DenomSpec(vec![(tx_factor(-1, 0, 1), 1), (tx_factor(-1, 1, 1), 1)]);
        let terms = ratio_terms(Family::B, 2, terms_needed(&denom, 0, 5));
        let (num, rep) = genfun_structure_check("d2", &terms, &denom, 0, 5).unwrap();
        assert_eq!(num, XPoly::one());
        assert_eq!(rep.status, Status::Pass);

        let denom = DenomSpec(vec![
            (tx_factor(-1, 0, 1), 1),
            (tx_factor(-1, 1, 1), 3),
            (tx_factor(-1, 2, 1), 1),
        ]);
        let terms = ratio_terms(Family::B, 4, terms_needed(&denom, 1, 5));
        let (num, rep) = genfun_structure_check("d4", &terms, &denom, 1, 5).unwrap();
        assert_eq!(num, x_of(&[TPoly::one(), tmono(1, 1)]));
        assert_eq!(rep.status, Status::Pass);
    }

    #[test]
    fn structure_of_mid_d1() {
        let denom = DenomSpec(vec![(tx_factor(1, 0, 2), 1)]);
        let terms: Vec<TPoly> = Family::Mid
            .terms_int(2 * 20)
            .map(|s| {
                (0..12)
                    .map(|n| {
                        let d = crate::hankel::hankel_det_of(&s, 1, n).unwrap();
                        TPoly::constant(Rat::from_integer(d))
                    })
                    .collect()
            })
            .unwrap();
        let (num, rep) = genfun_structure_check("mid-d1", &terms, &denom, 1, 5).unwrap();
        assert_eq!(num, x_of(&[TPoly::one(), TPoly::one()]));
        assert_eq!(rep.status, Status::Pass);
    }

    #[test]
    fn structure_failures() {
        let denom = DenomSpec(vec![(tx_factor(-1, 0, 1), 1)]);
        let short = vec![TPoly::one(); 3];
        assert!(matches!(
            genfun_structure_check("x", &short, &denom, 0, 5),
            Err(Error::InsufficientTerms { .. })
        ));
        // 1/(1-x)^2 over a single (1-x) leaves a geometric tail.
        let terms: Vec<TPoly> = (1..=10).map(|n| tmono(n, 0)).collect();
        let (_, rep) = genfun_structure_check("x", &terms, &denom, 0, 5).unwrap();
        assert_eq!(rep.status, Status::Fail);
    }

    #[test]
    fn blocks_split_and_overlap() {
        // r_5(2,t) (1-t)^6 with windows from n = 1.
        let r = TPoly::from_i64s(&[6, 16, 21, 6, 1]);
        let den = vec![(TPoly::from_i64s(&[1, -1]), 6)];
        match block_decompose(&r, &den, &[0, 4, 10], &[2, 3, 0]) {
            Blocks::Split(b) => {
                assert_eq!(b[0], TPoly::from_i64s(&[6, -20, 15]));
                assert_eq!(b[1], TPoly::from_i64s(&[50, -132, 120, -40]));
                assert_eq!(b[2], TPoly::one());
                let cleared = r.mul(&TPoly::from_i64s(&[1, -1]).pow(6));
                assert_eq!(reassemble(&b, &[0, 4, 10]), cleared);
            }
            other => panic!("{other:?}"),
        }
        let one = TPoly::one();
        assert_eq!(
            block_decompose(&one, &den, &[0, 2, 6], &[2, 3, 0]),
            Blocks::Overlap { first: 0, second: 1 }
        );
        assert_eq!(
            split_blocks(&TPoly::from_i64s(&[1, 0, 0, 1]), &[0], &[1]),
            Blocks::Stray { exponent: 3 }
        );
    }
}
