//! Truncated formal power series with explicit valid-order bookkeeping.
//!
//! An [`XSeries`] of order `N` knows its coefficients at indices `0..N`
//! and nothing beyond; every operation derives the order of its result
//! from the orders of its inputs.

use crate::arith::{Poly, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct XSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> XSeries<R> {
    /// Series with the given coefficients, truncated or zero-padded to `order`.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        XSeries { coeffs }
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order).cloned().collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    /// `1/(1 - x)` to the given order.
    pub fn geometric(order: usize) -> Self {
        XSeries { coeffs: vec![R::one(); order] }
    }

    /// Number of valid coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Result<&R> {
        self.coeffs.get(i).ok_or(Error::OrderExhausted {
            needed: i + 1,
            have: self.order(),
        })
    }

    /// Index of the first nonzero coefficient, or the order if there is none.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.order())
    }

    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.coeffs.clone())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        XSeries {
            coeffs: (0..n).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        XSeries {
            coeffs: (0..n).map(|i| self.coeffs[i].sub(&other.coeffs[i])).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        XSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Cauchy product to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        XSeries { coeffs: out }
    }

    /// Product with a polynomial; the order is unchanged.
    pub fn mul_poly(&self, p: &Poly<R>) -> Self {
        self.mul(&Self::from_poly(p, self.order()))
    }

    /// Multiply by `x^m`; the valid order grows by `m`.
    pub fn shift(&self, m: usize) -> Self {
        let mut v = vec![R::zero(); m];
        v.extend(self.coeffs.iter().cloned());
        XSeries { coeffs: v }
    }

    /// Formal derivative; the valid order drops by one.
    pub fn derivative(&self) -> Self {
        XSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
                .collect(),
        }
    }

    /// `q` with `q * divisor = self` to the valid order.
    ///
    /// Both valuations are stripped first; each step divides by the
    /// lowest nonzero coefficient of the divisor in the coefficient ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let vb = divisor.valuation();
        if vb >= divisor.order() {
            return Err(Error::DivisionByZero);
        }
        let va = self.valuation();
        if va < vb {
            return Err(Error::ValuationError);
        }
        let n = (self.order() - vb).min(divisor.order() - vb);
        let b = &divisor.coeffs[vb..];
        let lead = &b[0];
        let mut q: Vec<R> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k + vb].clone();
            for i in 1..=k {
                if !b[i].is_zero() && !q[k - i].is_zero() {
                    acc = acc.sub(&b[i].mul(&q[k - i]));
                }
            }
            q.push(acc.div_exact(lead)?);
        }
        Ok(XSeries { coeffs: q })
    }

    /// Square root with constant term 1, by the coefficient recurrence
    /// `2 s_n = a_n - sum_{0<i<n} s_i s_{n-i}`.
    pub fn sqrt(&self) -> Result<Self> {
        if self.order() == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm);
        }
        let two = R::from_i64(2);
        let mut s = vec![R::one()];
        for k in 1..self.order() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc.sub(&s[i].mul(&s[k - i]));
            }
            s.push(acc.div_exact(&two)?);
        }
        Ok(XSeries { coeffs: s })
    }

    /// `numer / prod factor^e` expanded to `order` terms.
    pub fn from_rational(numer: &Poly<R>, factors: &[(Poly<R>, u32)], order: usize) -> Result<Self> {
        let mut denom = Poly::<R>::one();
        for (f, e) in factors {
            let c0 = f.coeff(0);
            if c0.is_zero() || R::one().div_exact(&c0).is_err() {
                return Err(Error::NonUnitConstant);
            }
            denom = Ring::mul(&denom, &f.pow_u(*e));
        }
        Self::from_poly(numer, order).div_exact(&Self::from_poly(&denom, order))
    }
}

impl<R: Ring + std::fmt::Debug> std::fmt::Debug for XSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "XSeries{:?} + O(x^{})", self.coeffs, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{TPoly, XPoly};

    type S = XSeries<TPoly>;

    fn c(cs: &[i64]) -> TPoly {
        TPoly::from_i64s(cs)
    }

    fn s(cs: &[&[i64]], n: usize) -> S {
        S::new(cs.iter().map(|v| c(v)).collect(), n)
    }

    #[test]
    fn mul_examples() {
        let a = s(&[&[1], &[1]], 5);
        let b = s(&[&[1], &[-1]], 5);
        assert_eq!(a.mul(&b), s(&[&[1], &[0], &[-1]], 5));
        assert_eq!(S::geometric(6).mul(&b), S::one(5).mul(&S::one(6)));
        let u = s(&[&[1], &[0, 1]], 4);
        assert_eq!(u.mul(&u), s(&[&[1], &[0, 2], &[0, 0, 1]], 4));
    }

    #[test]
    fn div_examples() {
        let a = s(&[&[], &[1], &[1]], 6);
        let x = s(&[&[], &[1]], 6);
        assert_eq!(a.div_exact(&x).unwrap(), s(&[&[1], &[1]], 5));

        let a = s(&[&[], &[0, 2], &[0, 0, 2]], 6);
        let b = s(&[&[], &[0, 2]], 6);
        assert_eq!(a.div_exact(&b).unwrap(), s(&[&[1], &[0, 1]], 5));

        assert_eq!(S::one(4).div_exact(&x), Err(Error::ValuationError));
    }

    #[test]
    fn div_inexact_coefficient() {
        let a = s(&[&[1]], 3);
        let b = s(&[&[0, 1]], 3);
        assert!(matches!(a.div_exact(&b), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn sqrt_examples() {
        let sq = s(&[&[1], &[-2], &[1]], 6);
        assert_eq!(sq.sqrt().unwrap(), s(&[&[1], &[-1]], 6));
        let r = s(&[&[1], &[-4]], 6).sqrt().unwrap();
        assert_eq!(r, s(&[&[1], &[-2], &[-2], &[-4], &[-10], &[-28]], 6));
        assert_eq!(S::one(3).sqrt().unwrap(), S::one(3));
        assert_eq!(s(&[&[2]], 3).sqrt(), Err(Error::BadConstantTerm));
    }

    #[test]
    fn from_rational_examples() {
        let one = XPoly::one();
        let f = |cs: Vec<TPoly>| XPoly::new(cs);
        let g = S::from_rational(&one, &[(f(vec![c(&[1]), c(&[-1])]), 1)], 5).unwrap();
        assert_eq!(g, S::geometric(5));

        let g = S::from_rational(
            &one,
            &[(f(vec![c(&[1]), c(&[-1])]), 1), (f(vec![c(&[1]), c(&[0, -1])]), 1)],
            4,
        )
        .unwrap();
        assert_eq!(g, s(&[&[1], &[1, 1], &[1, 1, 1], &[1, 1, 1, 1]], 4));

        let g = S::from_rational(
            &f(vec![c(&[1]), c(&[1])]),
            &[(f(vec![c(&[1]), c(&[]), c(&[1])]), 1)],
            6,
        )
        .unwrap();
        assert_eq!(g, s(&[&[1], &[1], &[-1], &[-1], &[1], &[1]], 6));

        let bad = S::from_rational(&one, &[(f(vec![c(&[0, 1]), c(&[1])]), 1)], 3);
        assert_eq!(bad, Err(Error::NonUnitConstant));
    }

    #[test]
    fn derivative_and_shift_orders() {
        let g = S::geometric(10);
        let d = g.derivative();
        assert_eq!(d.order(), 9);
        assert_eq!(d.coeffs()[2], c(&[3]));
        assert_eq!(d.shift(2).order(), 11);
    }
}
