use std::fmt;
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Int, Rat, Ring, Scalar};
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial, coefficients in ascending degree.
/// No trailing zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial in the weight variable `t` with rational coefficients.
pub type TPoly = Poly<Rat>;
/// Polynomial with integer coefficients; the fast path for integral data.
pub type ZPoly = Poly<Int>;
/// Polynomial in `x` with rational coefficients.
pub type QXPoly = Poly<Rat>;
/// Polynomial in `x` whose coefficients are polynomials in `t`.
pub type XPoly = Poly<TPoly>;

impl<C: Ring> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^e`.
    pub fn monomial(c: C, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); e + 1];
        v[e] = c;
        Poly { coeffs: v }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| C::from_i64(c)).collect())
    }

    /// `1 + c * var^e` style binomials: `a + b * var^e`.
    pub fn binomial(a: C, b: C, e: usize) -> Self {
        Self::constant(a).add(&Self::monomial(b, e))
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_ref(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    /// Finite degree, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Divide by `var^k`, failing if a low coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(format!("polynomial by var^{k}")));
        }
        Ok(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul(at).add(c))
    }

    /// `p(-var)`.
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// `p(var + c)` by Horner's scheme.
    pub fn taylor_shift(&self, c: &C) -> Self {
        let lin = Self::new(vec![c.clone(), C::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| acc.mul(&lin).add(&Self::constant(a.clone())))
    }

    /// `p(var^m)`.
    pub fn inflate(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * m] = c.clone();
        }
        Self::new(v)
    }

    /// Inverse of [`Poly::inflate`]: requires all powers to be multiples of `m`.
    pub fn deflate(&self, m: usize) -> Result<Self> {
        let mut v = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % m == 0 {
                v.push(c.clone());
            } else if !c.is_zero() {
                return Err(Error::OddTermInEvenPoly);
            }
        }
        Ok(Self::new(v))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&C::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Coefficients reversed relative to the nominal degree `d`
    /// (`var^d * p(1/var)`); fails if the degree exceeds `d`.
    pub fn reversed(&self, d: usize) -> Result<Self> {
        if self.coeffs.len() > d + 1 {
            return Err(Error::DegreeMismatch {
                expected: format!("<= {d}"),
                actual: self.degree().to_string(),
            });
        }
        let mut v = vec![C::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[d - i] = c.clone();
        }
        Ok(Self::new(v))
    }

    /// Truncate modulo `var^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&C) -> Option<D>) -> Option<Poly<D>> {
        self.coeffs.iter().map(f).collect::<Option<Vec<_>>>().map(Poly::new)
    }

    pub fn pow_u(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }
}

impl<C: Scalar> Poly<C> {
    /// All coefficients in `0..=deg` strictly positive.
    pub fn has_positive_coeffs(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs.iter().all(|c| c.signum() > 0)
    }

    /// All coefficients nonnegative and at least one nonzero.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs.iter().all(|c| c.signum() >= 0)
    }
}

impl TPoly {
    /// Integer-coefficient view, if every coefficient is integral.
    pub fn to_zpoly(&self) -> Option<ZPoly> {
        self.try_map(|c| c.is_integer().then(|| c.to_integer()))
    }

    pub fn from_zpoly(p: &ZPoly) -> Self {
        p.map(|c| Rat::from_integer(c.clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl From<&ZPoly> for TPoly {
    fn from(p: &ZPoly) -> Self {
        TPoly::from_zpoly(p)
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn from_i64(v: i64) -> Self {
        Poly::constant(C::from_i64(v))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v)
    }

    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Exact polynomial division. Fails with `NotDivisible` when the
    /// remainder is nonzero or a leading-coefficient division is inexact.
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return Err(Error::NotDivisible("dividend degree below divisor degree".into()));
        }
        // Strip common low-order zeros so divisions by t^k stay cheap.
        let (num, den) = match (self.valuation(), divisor.valuation()) {
            (Some(a), Some(b)) if b > 0 && a >= b => (self.unshift(b)?, divisor.unshift(b)?),
            _ => (self.clone(), divisor.clone()),
        };
        if den.coeffs.len() == 1 {
            let c = &den.coeffs[0];
            let q = num
                .coeffs
                .iter()
                .map(|a| a.div_exact(c))
                .collect::<Result<Vec<_>>>()
                .map_err(|_| Error::NotDivisible("coefficient division".into()))?;
            return Ok(Poly::new(q));
        }
        let dn = den.coeffs.len();
        let mut rem = num.coeffs.clone();
        if rem.len() < dn {
            return Err(Error::NotDivisible("nonzero remainder".into()));
        }
        let qn = rem.len() - dn + 1;
        let mut q = vec![C::zero(); qn];
        let dlead = den.coeffs[dn - 1].clone();
        for k in (0..qn).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            let c = top
                .div_exact(&dlead)
                .map_err(|_| Error::NotDivisible("leading coefficient".into()))?;
            for (j, dc) in den.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] = rem[k + j].sub(&c.mul(dc));
                }
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible("nonzero remainder".into()));
        }
        Ok(Poly::new(q))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<'a, C: Ring> $tr<&'a Poly<C>> for &'a Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &'a Poly<C>) -> Poly<C> {
                Ring::$m(self, rhs)
            }
        }
        impl<C: Ring> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                Ring::$m(&self, &rhs)
            }
        }
        impl<'a, C: Ring> $tr<&'a Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &'a Poly<C>) -> Poly<C> {
                Ring::$m(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Ring::neg(&self)
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Ring::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn tp(cs: &[i64]) -> TPoly {
        TPoly::from_i64s(cs)
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(TPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(tp(&[0, 0, 0]).degree(), Degree::NegInfinity);
        assert_eq!(tp(&[1, 2, 0]).degree(), Degree::Finite(1));
    }

    #[test]
    fn exact_div_examples() {
        // (1 - t^2) / (1 - t) = 1 + t
        assert_eq!(tp(&[1, 0, -1]).div_exact(&tp(&[1, -1])).unwrap(), tp(&[1, 1]));
        // (1 + t) / t is not exact
        assert!(matches!(tp(&[1, 1]).div_exact(&tp(&[0, 1])), Err(Error::NotDivisible(_))));
        // t^3 / t = t^2
        assert_eq!(tp(&[0, 0, 0, 1]).div_exact(&tp(&[0, 1])).unwrap(), tp(&[0, 0, 1]));
    }

    #[test]
    fn rational_division_and_eval() {
        let p = tp(&[1, 3, 2]); // (1+t)(1+2t)
        let q = p.div_exact(&tp(&[1, 2])).unwrap();
        assert_eq!(q, tp(&[1, 1]));
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 1));
        let half = TPoly::new(vec![rat(1, 2)]);
        assert_eq!(tp(&[1]).div_exact(&tp(&[2])).unwrap(), half);
    }

    #[test]
    fn integer_division_detects_inexact_lead() {
        let p = ZPoly::from_i64s(&[1, 1]);
        let q = ZPoly::from_i64s(&[0, 2]);
        assert!(p.div_exact(&q).is_err());
        let p = ZPoly::from_i64s(&[2, 4, 2]);
        assert_eq!(p.div_exact(&ZPoly::from_i64s(&[1, 1])).unwrap(), ZPoly::from_i64s(&[2, 2]));
    }

    #[test]
    fn taylor_shift_and_negation() {
        let p = tp(&[0, 0, 1]); // t^2
        assert_eq!(p.taylor_shift(&rat(1, 1)), tp(&[1, 2, 1]));
        assert_eq!(tp(&[1, 2, 3]).negate_var(), tp(&[1, -2, 3]));
        assert_eq!(tp(&[1, 2]).inflate(2), tp(&[1, 0, 2]));
        assert_eq!(tp(&[1, 0, 2]).deflate(2).unwrap(), tp(&[1, 2]));
        assert!(tp(&[1, 1]).deflate(2).is_err());
    }
}
