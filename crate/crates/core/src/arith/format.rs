//! Canonical text rendering of exact values: `1+2*t-3*t^2`, `-1/2`, `(1+t)*x^2`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Int, Poly, Rat, Ring, TPoly};
use crate::error::{Error, Result};

/// Coefficient types that know how to print themselves inside a polynomial.
pub trait FormatCoeff: Ring {
    /// Nesting level: 0 for scalars, 1 for polynomials over scalars.
    const DEPTH: usize;
    /// Plain rendering of the value.
    fn render(&self) -> String;
    /// `Some(negative)` for scalars, `None` for compound values.
    fn scalar_sign(&self) -> Option<bool>;
    /// Rendering of the absolute value (scalars only).
    fn render_abs(&self) -> String {
        self.render()
    }
}

impl FormatCoeff for Int {
    const DEPTH: usize = 0;
    fn render(&self) -> String {
        self.to_string()
    }
    fn scalar_sign(&self) -> Option<bool> {
        Some(self.is_negative())
    }
    fn render_abs(&self) -> String {
        self.abs().to_string()
    }
}

impl FormatCoeff for Rat {
    const DEPTH: usize = 0;
    fn render(&self) -> String {
        format_rat(self)
    }
    fn scalar_sign(&self) -> Option<bool> {
        Some(self.is_negative())
    }
    fn render_abs(&self) -> String {
        format_rat(&self.abs())
    }
}

impl<C: FormatCoeff> FormatCoeff for Poly<C> {
    const DEPTH: usize = C::DEPTH + 1;
    fn render(&self) -> String {
        render_poly(self)
    }
    fn scalar_sign(&self) -> Option<bool> {
        None
    }
}

/// `p` or `p/q` in lowest terms with positive denominator.
pub fn format_rat(r: &Rat) -> String {
    if One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|_| bad())?;
            let d: Int = d.trim().parse().map_err(|_| bad())?;
            if Zero::is_zero(&d) {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn var_name(depth: usize) -> &'static str {
    match depth {
        0 => "t",
        1 => "x",
        _ => "y",
    }
}

fn render_poly<C: FormatCoeff>(p: &Poly<C>) -> String {
    render_in(p, var_name(C::DEPTH))
}

/// Canonical rendering with an explicit outer variable, e.g. `x` for the
/// univariate polynomials that live in `x` rather than `t`.
pub fn render_in<C: FormatCoeff>(p: &Poly<C>, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (e, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        let power = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        match c.scalar_sign() {
            Some(neg) => {
                if neg {
                    out.push('-');
                } else if !first {
                    out.push('+');
                }
                let abs = c.render_abs();
                if e == 0 {
                    out.push_str(&abs);
                } else if abs == "1" {
                    out.push_str(&power);
                } else {
                    out.push_str(&format!("{abs}*{power}"));
                }
            }
            None => {
                let body = c.render();
                let atomic = !body[1..].contains(['+', '-']);
                if !first && !body.starts_with('-') || !first && !atomic {
                    out.push('+');
                }
                let body = if atomic { body } else { format!("({body})") };
                if e == 0 {
                    out.push_str(&body);
                } else if c.is_one() {
                    out.push_str(&power);
                } else {
                    out.push_str(&format!("{body}*{power}"));
                }
            }
        }
    }
    out
}

impl<C: FormatCoeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self))
    }
}

impl<C: FormatCoeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self))
    }
}

/// Parse the canonical rendering of a polynomial in `var` with rational
/// coefficients. Whitespace is ignored.
pub fn parse_poly(s: &str, var: char) -> Result<TPoly> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > start && !s[..i].ends_with('^') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);

    let mut acc = TPoly::zero();
    for term in terms {
        let (neg, body) = match term.as_bytes().first() {
            Some(b'+') => (false, &term[1..]),
            Some(b'-') => (true, &term[1..]),
            _ => (false, term),
        };
        let (coeff, exp) = parse_term(body, var)?;
        let coeff = if neg { -coeff } else { coeff };
        acc = Ring::add(&acc, &TPoly::monomial(coeff, exp));
    }
    Ok(acc)
}

fn parse_term(body: &str, var: char) -> Result<(Rat, usize)> {
    let bad = || Error::Parse(format!("bad term {body:?}"));
    if body.is_empty() {
        return Err(bad());
    }
    let (coeff_part, var_part) = match body.find(var) {
        None => (body, None),
        Some(i) => {
            let c = &body[..i];
            let c = c.strip_suffix('*').unwrap_or(c);
            (c, Some(&body[i + var.len_utf8()..]))
        }
    };
    let coeff = if coeff_part.is_empty() {
        if var_part.is_none() {
            return Err(bad());
        }
        <Rat as One>::one()
    } else {
        parse_rat(coeff_part)?
    };
    let exp = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => rest
            .strip_prefix('^')
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(bad)?,
    };
    Ok((coeff, exp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, XPoly, ZPoly};

    #[test]
    fn render_examples() {
        assert_eq!(TPoly::from_i64s(&[1, 2, -3]).to_string(), "1+2*t-3*t^2");
        assert_eq!(TPoly::zero().to_string(), "0");
        assert_eq!(TPoly::from_i64s(&[0, 1]).to_string(), "t");
        assert_eq!(TPoly::from_i64s(&[0, -1, 0, 5]).to_string(), "-t+5*t^3");
        assert_eq!(ZPoly::from_i64s(&[-7]).to_string(), "-7");
        assert_eq!(TPoly::constant(rat(-1, 2)).to_string(), "-1/2");
        let x = XPoly::new(vec![TPoly::one(), TPoly::from_i64s(&[1, 1]), TPoly::one()]);
        assert_eq!(x.to_string(), "1+(1+t)*x+x^2");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_poly("1+2*t-3*t^2", 't').unwrap(), TPoly::from_i64s(&[1, 2, -3]));
        assert_eq!(parse_poly("-t + 5*t^3", 't').unwrap(), TPoly::from_i64s(&[0, -1, 0, 5]));
        assert_eq!(parse_poly("1/2*t", 't').unwrap(), TPoly::monomial(rat(1, 2), 1));
        assert_eq!(parse_poly("0", 't').unwrap(), TPoly::zero());
        assert!(parse_poly("1+", 't').is_err());
        assert!(parse_poly("2*t^x", 't').is_err());
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
    }
}
