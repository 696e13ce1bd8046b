//! Text format: terms `c`, `x`, `x^k`, `c*x^k` or `cx^k` joined by `+` (and `-`
//! for signed polynomials), in any order. Printing is descending with no zero
//! terms, e.g. `x^5+x^4+x^3+x^2+x+1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{NNPoly, ZPoly};
use crate::error::Error;

/// One parsed monomial `coeff * x^i * z^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub coeff: BigInt,
    pub x_exp: usize,
    pub z_exp: usize,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<usize, Error> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let d = self
            .digits()
            .ok_or_else(|| Error::Parse(format!("expected exponent at offset {}", self.pos)))?;
        d.parse()
            .map_err(|_| Error::Parse(format!("exponent {d} out of range")))
    }
}

/// Parses a sum of terms. The variable `z` is only accepted when `allow_z` is set
/// (Weyl-algebra operators).
pub(crate) fn parse_terms(input: &str, allow_z: bool) -> Result<Vec<Term>, Error> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut cur = Cursor {
        bytes: compact.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat(b'-') {
            true
        } else {
            if !cur.eat(b'+') && !first {
                return Err(Error::Parse(format!(
                    "expected '+' or '-' at offset {} in {input:?}",
                    cur.pos
                )));
            }
            false
        };
        first = false;

        let coeff = cur.digits().map(|d| d.parse::<BigInt>().unwrap());
        let star_after_coeff = coeff.is_some() && cur.eat(b'*');
        let mut x_exp = 0;
        let mut z_exp = 0;
        let mut saw_var = false;
        if cur.eat(b'x') {
            x_exp = cur.exponent()?;
            saw_var = true;
        }
        if allow_z {
            if saw_var {
                cur.eat(b'*');
            }
            if cur.eat(b'z') {
                z_exp = cur.exponent()?;
                saw_var = true;
            }
        }
        if coeff.is_none() && !saw_var {
            return Err(Error::Parse(format!(
                "expected a term at offset {} in {input:?}",
                cur.pos
            )));
        }
        if star_after_coeff && !saw_var {
            return Err(Error::Parse(format!("dangling '*' in {input:?}")));
        }
        let mut coeff = coeff.unwrap_or_else(BigInt::one);
        if negative {
            coeff = -coeff;
        }
        terms.push(Term {
            coeff,
            x_exp,
            z_exp,
        });
    }
    Ok(terms)
}

impl FromStr for ZPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let terms = parse_terms(s, false)?;
        let deg = terms.iter().map(|t| t.x_exp).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for t in terms {
            coeffs[t.x_exp] += t.coeff;
        }
        Ok(ZPoly::new(coeffs))
    }
}

impl FromStr for NNPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let z: ZPoly = s.parse()?;
        if z.is_zero() {
            return Err(Error::Parse(format!("{s:?} is the zero polynomial")));
        }
        z.to_nn()
            .ok_or_else(|| Error::Parse(format!("{s:?} has a negative coefficient")))
    }
}

/// Writes `c * var^k` with the sign handled by the caller-visible `first` flag.
pub(crate) fn write_monomial(
    out: &mut fmt::Formatter<'_>,
    coeff: &BigInt,
    vars: &[(&str, usize)],
    first: bool,
) -> fmt::Result {
    let mag = coeff.abs();
    if coeff.is_negative() {
        out.write_str("-")?;
    } else if !first {
        out.write_str("+")?;
    }
    let has_var = vars.iter().any(|&(_, e)| e > 0);
    if !mag.is_one() || !has_var {
        write!(out, "{mag}")?;
    }
    let mut wrote_var = false;
    for &(name, e) in vars {
        if e == 0 {
            continue;
        }
        if wrote_var {
            out.write_str("*")?;
        }
        out.write_str(name)?;
        if e > 1 {
            write!(out, "^{e}")?;
        }
        wrote_var = true;
    }
    Ok(())
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_monomial(f, c, &[("x", k)], first)?;
            first = false;
        }
        Ok(())
    }
}
