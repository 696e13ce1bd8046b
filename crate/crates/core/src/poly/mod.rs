//! Exact univariate polynomial arithmetic.
//!
//! [`ZPoly`] is an element of `Z[x]` (the zero polynomial included), [`NNPoly`] a
//! non-zero polynomial with non-negative coefficients, i.e. an element of the
//! multiplicative monoid under study. Coefficients are stored in ascending order,
//! index = exponent, with no trailing zeros.

mod base;
pub(crate) mod parse;

pub use base::{decode_base, embed_pair, encode_base, eta, sim_equiv, BaseAPair, EmbedMode};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn convolve<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let p = ai * bj;
            out[i + j] = out[i + j].clone() + p;
        }
    }
    out
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// A polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        ZPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - t`.
    pub fn linear_root(t: &BigInt) -> Self {
        Self::new(vec![-t, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * t + BigRational::from_integer(c.clone())
            })
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// True iff every coefficient is non-negative. The zero polynomial is rejected.
    pub fn is_nonneg(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.coeffs.iter().all(|c| !c.is_negative()))
    }

    /// The polynomial as an element of the monoid, if it belongs to it.
    pub fn to_nn(&self) -> Option<NNPoly> {
        if self.is_zero() || self.coeffs.iter().any(Signed::is_negative) {
            return None;
        }
        Some(NNPoly {
            coeffs: self.coeffs.iter().map(|c| c.magnitude().clone()).collect(),
        })
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigUint {
        self.coeffs
            .iter()
            .fold(BigUint::zero(), |g, c| g.gcd(c.magnitude()))
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = BigInt::from_biguint(Sign::Plus, self.content());
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        ZPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn scale(&self, s: &BigInt) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, k: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder when the division stays inside `Z[x]`, i.e. every
    /// step's leading-coefficient quotient is exact. `None` if some step is not.
    pub fn div_rem(&self, divisor: &ZPoly) -> Option<(ZPoly, ZPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((ZPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        Some((ZPoly::new(quot), ZPoly::new(rem)))
    }

    /// Exact quotient `self / divisor` in `Z[x]`, if it exists.
    pub fn div_exact(&self, divisor: &ZPoly) -> Option<ZPoly> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        ZPoly::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}

forward_owned!(ZPoly, Add::add, Sub::sub, Mul::mul);

impl From<&NNPoly> for ZPoly {
    fn from(f: &NNPoly) -> Self {
        f.to_z()
    }
}

/// A non-zero polynomial with non-negative integer coefficients.
///
/// Ordering is lexicographic on the ascending coefficient list; it is the
/// canonical order used for sorting factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NNPoly {
    coeffs: Vec<BigUint>,
}

impl NNPoly {
    pub fn new(mut coeffs: Vec<BigUint>) -> Result<Self> {
        trim(&mut coeffs);
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(NNPoly { coeffs })
    }

    pub fn from_u64s(coeffs: &[u64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn one() -> Self {
        NNPoly {
            coeffs: vec![BigUint::one()],
        }
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        NNPoly { coeffs }
    }

    pub fn constant(c: BigUint) -> Result<Self> {
        Self::new(vec![c])
    }

    /// `x + c`.
    pub fn x_plus(c: u64) -> Self {
        NNPoly {
            coeffs: vec![BigUint::from(c), BigUint::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigUint {
        self.coeffs.last().expect("non-zero polynomial")
    }

    pub fn constant_term(&self) -> &BigUint {
        &self.coeffs[0]
    }

    /// The largest coefficient.
    pub fn alpha(&self) -> &BigUint {
        self.coeffs.iter().max().expect("non-zero polynomial")
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_x(&self) -> bool {
        self.coeffs.len() == 2 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    pub fn eval(&self, t: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.to_z().eval(t)
    }

    pub fn to_z(&self) -> ZPoly {
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigInt::from(c.clone()))
                .collect(),
        }
    }

    pub fn content(&self) -> BigUint {
        self.coeffs.iter().fold(BigUint::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Largest `e` with `x^e` dividing `self`.
    pub fn x_exponent(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Membership in `P0`: primitive with non-zero constant term.
    pub fn in_p0(&self) -> bool {
        !self.coeffs[0].is_zero() && self.is_primitive()
    }

    /// Splits `self` as `content * x^e * core` with `core` in `P0`.
    pub fn canonical_decompose(&self) -> CanonicalDecomposition {
        let content = self.content();
        let e = self.x_exponent();
        let core = NNPoly {
            coeffs: self.coeffs[e..].iter().map(|c| c / &content).collect(),
        };
        CanonicalDecomposition {
            content,
            x_exponent: e,
            core,
        }
    }

    /// Coefficient reversal on `P0`.
    pub fn involution(&self) -> Result<NNPoly> {
        if !self.in_p0() {
            return Err(Error::domain(format!(
                "involution is defined on primitive polynomials with non-zero constant term, got {self}"
            )));
        }
        Ok(NNPoly {
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        })
    }

    pub fn pow(&self, k: u32) -> NNPoly {
        let mut acc = NNPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `content * self`.
    pub fn scale(&self, s: &BigUint) -> Result<NNPoly> {
        NNPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `self * x^k`.
    pub fn shift(&self, k: usize) -> NNPoly {
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        NNPoly { coeffs }
    }
}

impl Mul for &NNPoly {
    type Output = NNPoly;
    fn mul(self, rhs: &NNPoly) -> NNPoly {
        NNPoly {
            coeffs: convolve(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Mul for NNPoly {
    type Output = NNPoly;
    fn mul(self, rhs: NNPoly) -> NNPoly {
        &self * &rhs
    }
}

impl<'a> std::iter::Product<&'a NNPoly> for NNPoly {
    fn product<I: Iterator<Item = &'a NNPoly>>(iter: I) -> Self {
        iter.fold(NNPoly::one(), |acc, f| &acc * f)
    }
}

impl Serialize for NNPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NNPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for ZPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ZPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `f = content * x^x_exponent * core`, with `core` in `P0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub content: BigUint,
    pub x_exponent: usize,
    pub core: NNPoly,
}

impl CanonicalDecomposition {
    pub fn reconstruct(&self) -> NNPoly {
        self.core
            .scale(&self.content)
            .expect("content is positive")
            .shift(self.x_exponent)
    }
}

/// Ascending coefficient list as decimal strings, the JSON coefficient form.
pub fn coefficient_strings(f: &ZPoly) -> Vec<String> {
    f.coeffs().iter().map(ToString::to_string).collect()
}

impl fmt::Display for NNPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_z(), f)
    }
}
