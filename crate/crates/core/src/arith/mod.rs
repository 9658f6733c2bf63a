//! Exact scalar and polynomial arithmetic.
//!
//! Every numeric value in the crate is exact: integers are arbitrary
//! precision, rationals are kept in lowest terms with a positive
//! denominator, and polynomials store dense coefficient vectors without
//! trailing zeros.

mod format;
mod poly;
mod transform;



use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

pub use format::{format_rat, parse_poly, parse_rat, render_in};
pub use poly::{Degree, Poly, QXPoly, TPoly, XPoly, ZPoly};
pub use transform::{
    gamma_decompose, gamma_expand, is_palindromic, is_unimodal, reverse_both, sign_twist_even, twisted_reverse,
    GammaVector,
};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Reduced rational with positive denominator.
pub type Rat = BigRational;

/// A commutative ring with exact division where the quotient exists.
pub trait Ring: Clone + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Returns `q` with `q * divisor == self`, or `NotDivisible`.
    fn div_exact(&self, divisor: &Self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for Int {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if num_traits::Zero::is_zero(divisor) {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(divisor);
        if num_traits::Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::NotDivisible(format!("{self} / {divisor}")))
        }
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if num_traits::Zero::is_zero(divisor) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / divisor)
    }
}

/// Coefficient rings that embed the integers and can be ordered by sign.
pub trait Scalar: Ring {
    fn from_int(v: &Int) -> Self;
    /// Sign of the value: -1, 0 or 1.
    fn signum(&self) -> i32;
}

impl Scalar for Int {
    fn from_int(v: &Int) -> Self {
        v.clone()
    }
    fn signum(&self) -> i32 {
        if Signed::is_positive(self) {
            1
        } else if Signed::is_negative(self) {
            -1
        } else {
            0
        }
    }
}

impl Scalar for Rat {
    fn from_int(v: &Int) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn signum(&self) -> i32 {
        if Signed::is_positive(self) {
            1
        } else if Signed::is_negative(self) {
            -1
        } else {
            0
        }
    }
}

/// Binomial coefficient `C(n, k)` with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> Result<Int> {
    if n < 0 {
        return Err(Error::NegativeArgument(format!("binom upper index {n}")));
    }
    Ok(binom_u(n as u64, k))
}

pub(crate) fn binom_u(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `C(m, k)` for any integer `m` and `k >= 0`
/// (falling factorial over `k!`); zero for `k < 0`.
pub fn binom_general(m: i64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..k {
        num *= Int::from(m - i);
        den *= Int::from(i + 1);
    }
    num / den
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * i)
}

/// `(-1)^e` as an `i64`, for any integer exponent.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `C(m, 2) = m(m-1)/2` as a plain integer, valid for negative `m` too.
pub fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(v: i64) -> Int {
    Int::from(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(4, 2).unwrap(), int(6));
        assert_eq!(binom(0, -1).unwrap(), int(0));
        assert_eq!(binom(5, 2).unwrap(), int(10));
        assert_eq!(binom(3, 4).unwrap(), int(0));
        assert!(matches!(binom(-1, 0), Err(Error::NegativeArgument(_))));
    }

    #[test]
    fn binom_general_negative_upper() {
        assert_eq!(binom_general(-1, 2), int(1));
        assert_eq!(binom_general(-2, 2), int(3));
        assert_eq!(binom_general(5, 2), int(10));
        assert_eq!(binom_general(5, -1), int(0));
    }

    #[test]
    fn int_exact_division() {
        assert_eq!(int(12).div_exact(&int(4)).unwrap(), int(3));
        assert!(int(13).div_exact(&int(4)).is_err());
    }

    #[test]
    fn ring_pow() {
        assert_eq!(int(3).pow(5), int(243));
        assert_eq!(rat(1, 2).pow(3), rat(1, 8));
    }
}
