//! The middle binomial coefficients, their weighted Motzkin-path
//! extensions, and the shifted families `b^(r)(n)`.

use std::fmt;
use std::str::FromStr;

use crate::arith::{binom_u, Int, Ring, TPoly, ZPoly};
use crate::error::{Error, Result};

/// Largest path length accepted by [`brute_paths`].
pub const BRUTE_PATHS_CAP: usize = 14;

/// Horizontal and down-step weights of a family of Motzkin paths.
///
/// `s(k)` weighs a horizontal step at height `k`; `t(k)` weighs a down-step
/// that ends at height `k`. Up-steps have weight 1.
#[derive(Clone, Copy)]
pub struct WeightSpec {
    pub name: &'static str,
    s_rule: fn(usize) -> ZPoly,
    t_rule: fn(usize) -> ZPoly,
}

fn one(_: usize) -> ZPoly {
    ZPoly::one()
}

fn t_all(_: usize) -> ZPoly {
    ZPoly::var()
}

fn ground_only(k: usize) -> ZPoly {
    if k == 0 {
        ZPoly::one()
    } else {
        ZPoly::zero()
    }
}

fn t_even(k: usize) -> ZPoly {
    if k.is_multiple_of(2) {
        ZPoly::var()
    } else {
        ZPoly::one()
    }
}

fn alternating_level(k: usize) -> ZPoly {
    match k {
        0 => ZPoly::one(),
        k if k % 2 == 0 => ZPoly::from_i64s(&[1, -1]),
        _ => ZPoly::from_i64s(&[-1, 1]),
    }
}

impl WeightSpec {
    pub fn middle() -> Self {
        WeightSpec { name: "mid", s_rule: ground_only, t_rule: one }
    }

    /// Every down-step weighted `t`.
    pub fn family_a() -> Self {
        WeightSpec { name: "a", s_rule: ground_only, t_rule: t_all }
    }

    /// Down-steps ending at even height weighted `t`.
    pub fn family_b() -> Self {
        WeightSpec { name: "b", s_rule: ground_only, t_rule: t_even }
    }

    /// All Motzkin paths; level steps weighted `1`, `1-t`, `t-1` by height.
    pub fn family_c() -> Self {
        WeightSpec { name: "c", s_rule: alternating_level, t_rule: t_all }
    }

    pub fn all() -> [WeightSpec; 4] {
        [Self::middle(), Self::family_a(), Self::family_b(), Self::family_c()]
    }

    pub fn s(&self, k: usize) -> ZPoly {
        (self.s_rule)(k)
    }

    pub fn t(&self, k: usize) -> ZPoly {
        (self.t_rule)(k)
    }
}

impl fmt::Debug for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightSpec({})", self.name)
    }
}

/// Weighted path counts `c(n, k)` from `(0,0)` to `(n,k)`, `k <= n <= n_max`.
#[derive(Clone, Debug)]
pub struct MomentTable {
    rows: Vec<Vec<ZPoly>>,
}

impl MomentTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> TPoly {
        TPoly::from_zpoly(&self.get_z(n, k))
    }

    pub fn get_z(&self, n: usize, k: usize) -> ZPoly {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(ZPoly::zero)
    }

    /// `M(n) = c(n, 0)` for `n <= n_max`.
    pub fn moments_z(&self) -> Vec<ZPoly> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    pub fn moments(&self) -> Vec<TPoly> {
        self.rows.iter().map(|r| TPoly::from_zpoly(&r[0])).collect()
    }
}

/// Build `c(n, k)` row by row from `c(n-1, *)`.
pub fn moment_table(w: &WeightSpec, n_max: usize) -> MomentTable {
    let s: Vec<ZPoly> = (0..=n_max).map(|k| w.s(k)).collect();
    let t: Vec<ZPoly> = (0..=n_max).map(|k| w.t(k)).collect();
    let mut rows = vec![vec![ZPoly::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k);
        let row = (0..=n)
            .map(|k| {
                let mut acc = ZPoly::zero();
                if k > 0 {
                    if let Some(c) = at(k - 1) {
                        acc = acc.add(c);
                    }
                }
                if let Some(c) = at(k) {
                    acc = acc.add(&s[k].mul(c));
                }
                if let Some(c) = at(k + 1) {
                    acc = acc.add(&t[k].mul(c));
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    MomentTable { rows }
}

/// `M(0..=n_max)` as integer polynomials.
pub fn moments_z(w: &WeightSpec, n_max: usize) -> Vec<ZPoly> {
    moment_table(w, n_max).moments_z()
}

pub fn moments(w: &WeightSpec, n_max: usize) -> Vec<TPoly> {
    moment_table(w, n_max).moments()
}

/// Total weight of Motzkin paths of length `n` by explicit enumeration.
pub fn brute_paths(w: &WeightSpec, n: usize) -> Result<TPoly> {
    if n > BRUTE_PATHS_CAP {
        return Err(Error::TooLarge(format!("brute_paths length {n} > {BRUTE_PATHS_CAP}")));
    }
    fn walk(w: &WeightSpec, left: usize, h: usize, weight: ZPoly, acc: &mut ZPoly) {
        if weight.is_zero() || h > left {
            return;
        }
        if left == 0 {
            *acc = acc.add(&weight);
            return;
        }
        walk(w, left - 1, h + 1, weight.clone(), acc);
        walk(w, left - 1, h, weight.mul(&w.s(h)), acc);
        if h > 0 {
            walk(w, left - 1, h - 1, weight.mul(&w.t(h - 1)), acc);
        }
    }
    let mut acc = ZPoly::zero();
    walk(w, n, 0, ZPoly::one(), &mut acc);
    Ok(TPoly::from_zpoly(&acc))
}


/// [`moment_table`] against [`brute_paths`] for the four weighted families.
pub fn paths_oracle_check(n_max: usize) -> crate::report::CheckReport {
    let mut rec = crate::report::Recorder::new("oracles/paths").param("n_max", n_max);
    for w in WeightSpec::all() {
        let table = moment_table(&w, n_max);
        for n in 0..=n_max {
            match brute_paths(&w, n) {
                Ok(p) => {
                    rec.expect_eq(format!("{} n={n}", w.name), &p, &table.get(n, 0));
                }
                Err(e) => rec.skip(e.to_string()),
            }
        }
    }
    rec.finish()
}
/// `b(n) = C(n, floor(n/2))`.
pub fn middle_binom(n: u64) -> Int {
    binom_u(n, (n / 2) as i64)
}

/// `b^(r)(n) = C(n, floor((n-r)/2))`, zero when the lower index is negative.
pub fn shifted_middle(r: u64, n: u64) -> Int {
    binom_u(n, (n as i64 - r as i64).div_euclid(2))
}

pub fn catalan(n: u64) -> Int {
    binom_u(2 * n, n as i64) / Int::from(n + 1)
}

/// Weight of the paths when every down-step carries `t`.
pub fn a_poly(n: u64) -> TPoly {
    let v = (0..=n / 2)
        .map(|j| binom_u(n, j as i64) - binom_u(n, j as i64 - 1))
        .collect();
    TPoly::from_zpoly(&ZPoly::new(v))
}

/// Weight of the paths when down-steps ending at even height carry `t`.
pub fn b_poly(n: u64) -> TPoly {
    let (lo, hi) = (n / 2, n.div_ceil(2));
    let v = (0..=lo)
        .map(|j| binom_u(lo, j as i64) * binom_u(hi, j as i64))
        .collect();
    TPoly::from_zpoly(&ZPoly::new(v))
}

/// Weight of all Motzkin paths under the alternating level-step weights.
pub fn c_poly(n: u64) -> TPoly {
    moments(&WeightSpec::family_c(), n as usize).pop().unwrap()
}

pub fn c_polys(n_max: usize) -> Vec<TPoly> {
    moments(&WeightSpec::family_c(), n_max)
}

/// Sequence families addressable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Middle binomial coefficients.
    Mid,
    /// Weighted extension with every down-step weighted `t`.
    A,
    /// Weighted extension with down-steps at even heights weighted `t`.
    B,
    /// Alternating level-step weights.
    C,
    /// `b^(r)(n)`.
    Shifted(u64),
    Catalan,
}

impl Family {
    pub fn weights(self) -> Option<WeightSpec> {
        match self {
            Family::Mid => Some(WeightSpec::middle()),
            Family::A => Some(WeightSpec::family_a()),
            Family::B => Some(WeightSpec::family_b()),
            Family::C => Some(WeightSpec::family_c()),
            Family::Shifted(_) | Family::Catalan => None,
        }
    }

    /// Whether the terms are plain integers rather than polynomials in `t`.
    pub fn is_integral(self) -> bool {
        matches!(self, Family::Mid | Family::Shifted(_) | Family::Catalan)
    }

    /// Terms `0..count` as integer polynomials (constants for integer families).
    pub fn terms_z(self, count: usize) -> Vec<ZPoly> {
        match self {
            Family::Mid | Family::Shifted(_) | Family::Catalan => self
                .terms_int(count)
                .unwrap()
                .into_iter()
                .map(ZPoly::constant)
                .collect(),
            Family::A => (0..count as u64).map(|n| a_poly(n).to_zpoly().unwrap()).collect(),
            Family::B => (0..count as u64).map(|n| b_poly(n).to_zpoly().unwrap()).collect(),
            Family::C => {
                if count == 0 {
                    Vec::new()
                } else {
                    moments_z(&WeightSpec::family_c(), count - 1)
                }
            }
        }
    }

    pub fn terms(self, count: usize) -> Vec<TPoly> {
        self.terms_z(count).iter().map(TPoly::from_zpoly).collect()
    }

    /// Integer terms, `None` for the polynomial families.
    pub fn terms_int(self, count: usize) -> Option<Vec<Int>> {
        let n = count as u64;
        match self {
            Family::Mid => Some((0..n).map(middle_binom).collect()),
            Family::Shifted(r) => Some((0..n).map(|i| shifted_middle(r, i)).collect()),
            Family::Catalan => Some((0..n).map(catalan).collect()),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Mid => f.write_str("mid"),
            Family::A => f.write_str("a"),
            Family::B => f.write_str("b"),
            Family::C => f.write_str("c"),
            Family::Shifted(r) => write!(f, "shift{r}"),
            Family::Catalan => f.write_str("catalan"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `mid`, `a`, `b`, `c`, `catalan` and `shift<r>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mid" => Ok(Family::Mid),
            "a" => Ok(Family::A),
            "b" => Ok(Family::B),
            "c" => Ok(Family::C),
            "catalan" => Ok(Family::Catalan),
            _ => s
                .strip_prefix("shift")
                .and_then(|r| r.parse().ok())
                .map(Family::Shifted)
                .ok_or_else(|| Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Rat};

    fn tp(cs: &[i64]) -> TPoly {
        TPoly::from_i64s(cs)
    }

    #[test]
    fn middle_binomial_values() {
        let got: Vec<Int> = [0, 1, 2, 4, 5].iter().map(|&n| middle_binom(n)).collect();
        assert_eq!(got, vec![int(1), int(1), int(2), int(6), int(10)]);
    }

    #[test]
    fn shifted_values() {
        assert_eq!(shifted_middle(1, 0), int(0));
        assert_eq!(shifted_middle(1, 3), int(3));
        assert_eq!(shifted_middle(0, 4), int(6));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(5), int(42));
    }

    #[test]
    fn middle_table_is_ballot_numbers() {
        let tab = moment_table(&WeightSpec::middle(), 5);
        for n in 0..=5u64 {
            for k in 0..=n {
                let want = binom_u(n, (n as i64 - k as i64).div_euclid(2));
                assert_eq!(tab.get_z(n as usize, k as usize), ZPoly::constant(want), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn small_moments() {
        let a = moments(&WeightSpec::family_a(), 3);
        assert_eq!(a, vec![tp(&[1]), tp(&[1]), tp(&[1, 1]), tp(&[1, 2])]);
        let c = moments(&WeightSpec::family_c(), 3);
        assert_eq!(c, vec![tp(&[1]), tp(&[1]), tp(&[1, 1]), tp(&[1, 1, 1])]);
    }

    #[test]
    fn brute_paths_examples() {
        for w in WeightSpec::all() {
            assert_eq!(brute_paths(&w, 0).unwrap(), tp(&[1]));
        }
        assert_eq!(brute_paths(&WeightSpec::family_a(), 3).unwrap(), tp(&[1, 2]));
        assert_eq!(brute_paths(&WeightSpec::family_c(), 3).unwrap(), tp(&[1, 1, 1]));
        assert!(matches!(brute_paths(&WeightSpec::middle(), 15), Err(Error::TooLarge(_))));
    }

    #[test]
    fn closed_sums() {
        assert_eq!(a_poly(2), tp(&[1, 1]));
        assert_eq!(b_poly(4), tp(&[1, 4, 1]));
        let odd: Vec<Rat> = [1, 3, 5, 7, 9].iter().map(|&n| c_poly(n).eval(&rat(-1, 1))).collect();
        assert_eq!(odd, [1, 1, 2, 5, 14].iter().map(|&v| rat(v, 1)).collect::<Vec<_>>());
    }

    #[test]
    fn family_parsing() {
        assert_eq!("shift3".parse::<Family>().unwrap(), Family::Shifted(3));
        assert_eq!("b".parse::<Family>().unwrap(), Family::B);
        assert!("z".parse::<Family>().is_err());
        assert_eq!(Family::Shifted(2).to_string(), "shift2");
    }
}
