//! Reversal, symmetry and gamma-vector utilities on polynomials.

use super::{binom_u, Poly, Ring, Scalar};
use crate::error::{Error, Result};

/// `x^xdeg * t^tpow * p(1/(t^tweight * x), t)` for a polynomial in `x`
/// whose coefficients are polynomials in `t`.
///
/// The term `c(t) x^i` maps to `c(t) t^(tpow - tweight*i) x^(xdeg - i)`;
/// a negative power of `t` is only allowed when `c` absorbs it.
pub fn twisted_reverse<C: Ring>(
    p: &Poly<Poly<C>>,
    xdeg: usize,
    tpow: i64,
    tweight: i64,
) -> Result<Poly<Poly<C>>> {
    if let Some(d) = p.deg() {
        if d > xdeg {
            return Err(Error::DegreeMismatch {
                expected: format!("<= {xdeg}"),
                actual: d.to_string(),
            });
        }
    }
    let mut out = vec![Poly::<C>::zero(); xdeg + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = tpow - tweight * i as i64;
        out[xdeg - i] = if e >= 0 {
            c.shift(e as usize)
        } else {
            c.unshift((-e) as usize)
                .map_err(|_| Error::NegativeExponent(format!("t^{e} at x^{i}")))?
        };
    }
    Ok(Poly::new(out))
}

/// `x^xdeg * t^tdeg * p(1/x, 1/t)`.
pub fn reverse_both<C: Ring>(p: &Poly<Poly<C>>, xdeg: usize, tdeg: usize) -> Result<Poly<Poly<C>>> {
    let r = p.reversed(xdeg)?;
    let coeffs = r
        .coeffs()
        .iter()
        .map(|c| c.reversed(tdeg).map_err(|_| Error::NegativeExponent(format!("t-degree above {tdeg}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// `x^d p(1/x) == p(x)`.
pub fn is_palindromic<C: Ring>(p: &Poly<C>, d: usize) -> bool {
    match p.deg() {
        None => true,
        Some(deg) if deg > d => false,
        Some(_) => (0..=d).all(|i| p.coeff(i) == p.coeff(d - i)),
    }
}

/// Coefficients weakly increase then weakly decrease.
pub fn is_unimodal<C: Scalar>(coeffs: &[C]) -> bool {
    let mut descending = false;
    for w in coeffs.windows(2) {
        let diff = w[1].sub(&w[0]).signum();
        if diff > 0 && descending {
            return false;
        }
        if diff < 0 {
            descending = true;
        }
    }
    true
}

/// Result of writing a palindromic polynomial as
/// `sum_j gamma_j x^j (1+x)^(d-2j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaVector<C> {
    pub gammas: Vec<C>,
    pub nonnegative: bool,
}

/// Unique gamma expansion of a palindromic polynomial of nominal degree `d`.
pub fn gamma_decompose<C: Scalar>(p: &Poly<C>, d: usize) -> Result<GammaVector<C>> {
    if !is_palindromic(p, d) {
        return Err(Error::NotPalindromic(d));
    }
    let mut a: Vec<C> = (0..=d).map(|i| p.coeff(i)).collect();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for j in 0..=d / 2 {
        let g = a[j].clone();
        let m = d - 2 * j;
        if !g.is_zero() {
            for i in 0..=m {
                let b = C::from_int(&binom_u(m as u64, i as i64));
                a[j + i] = a[j + i].sub(&g.mul(&b));
            }
        }
        gammas.push(g);
    }
    debug_assert!(a.iter().all(|c| c.is_zero()));
    let nonnegative = gammas.iter().all(|g| g.signum() >= 0);
    Ok(GammaVector { gammas, nonnegative })
}

/// Re-expand a gamma vector into the polynomial it encodes.
pub fn gamma_expand<C: Scalar>(gammas: &[C], d: usize) -> Poly<C> {
    let one_plus_x = Poly::<C>::from_i64s(&[1, 1]);
    gammas.iter().enumerate().fold(Poly::zero(), |acc, (j, g)| {
        let term = one_plus_x.pow_u((d - 2 * j) as u32).shift(j).scale(g);
        Ring::add(&acc, &term)
    })
}

/// Realize `x -> i x` on an even polynomial: `c_l x^(2l) -> (-1)^l c_l x^(2l)`.
pub fn sign_twist_even<C: Ring>(p: &Poly<C>) -> Result<Poly<C>> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % 2 == 1 {
            if !c.is_zero() {
                return Err(Error::OddTermInEvenPoly);
            }
            out.push(C::zero());
        } else if (i / 2) % 2 == 1 {
            out.push(c.neg());
        } else {
            out.push(c.clone());
        }
    }
    Ok(Poly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, QXPoly, Rat, TPoly, XPoly};

    fn q(cs: &[i64]) -> QXPoly {
        QXPoly::from_i64s(cs)
    }

    fn xp(cs: Vec<TPoly>) -> XPoly {
        XPoly::new(cs)
    }

    #[test]
    fn twisted_reverse_examples() {
        let one = TPoly::one();
        let t = TPoly::var();
        // 1 + x, xdeg 1, no twist
        let p = xp(vec![one.clone(), one.clone()]);
        assert_eq!(twisted_reverse(&p, 1, 0, 0).unwrap(), p);
        // 1 + t x, xdeg 1, tpow 1, tweight 2
        let p = xp(vec![one.clone(), t.clone()]);
        assert_eq!(twisted_reverse(&p, 1, 1, 2).unwrap(), p);
        // constant
        let p = xp(vec![one.clone()]);
        assert_eq!(twisted_reverse(&p, 0, 0, 5).unwrap(), p);
        // x with tweight 1 and tpow 0 needs t^-1
        let p = xp(vec![TPoly::zero(), one]);
        assert!(matches!(twisted_reverse(&p, 1, 0, 1), Err(Error::NegativeExponent(_))));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_decompose(&q(&[1, 3, 1]), 2).unwrap();
        assert_eq!(g.gammas, vec![rat(1, 1), rat(1, 1)]);
        assert!(g.nonnegative);

        let g = gamma_decompose(&q(&[1, 10, 20, 10, 1]), 4).unwrap();
        assert_eq!(g.gammas, vec![rat(1, 1), rat(6, 1), rat(2, 1)]);
        assert!(g.nonnegative);

        let g = gamma_decompose(&q(&[1, -1, 1]), 2).unwrap();
        assert_eq!(g.gammas, vec![rat(1, 1), rat(-3, 1)]);
        assert!(!g.nonnegative);

        assert!(matches!(gamma_decompose(&q(&[1, 2]), 2), Err(Error::NotPalindromic(2))));
    }

    #[test]
    fn gamma_roundtrip() {
        let p = q(&[1, 22, 113, 190, 113, 22, 1]);
        let g = gamma_decompose(&p, 6).unwrap();
        assert_eq!(g.gammas, [1, 16, 34, 6].iter().map(|&v| rat(v, 1)).collect::<Vec<Rat>>());
        assert_eq!(gamma_expand(&g.gammas, 6), p);
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&q(&[1, 4, 10, 4, 1]).into_coeffs()));
        assert!(!is_unimodal(&q(&[1, 4, 2, 4, 1]).into_coeffs()));
        assert!(is_unimodal(&q(&[1, 1, 1]).into_coeffs()));
    }

    #[test]
    fn twist_even() {
        // 1 + 3x^2 -> 1 - 3x^2
        assert_eq!(sign_twist_even(&q(&[1, 0, 3])).unwrap(), q(&[1, 0, -3]));
        assert_eq!(sign_twist_even(&q(&[1, 1])), Err(Error::OddTermInEvenPoly));
    }
}
