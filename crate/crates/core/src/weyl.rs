//! The first Weyl algebra over `Z`, generated by `x` and `z` with `zx - xz = 1`,
//! acting on `Z[x]` by multiplication and differentiation; and the description of
//! `N0[x]` through the values at 0 of all derivatives.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::parse::{parse_terms, write_monomial};
use crate::poly::ZPoly;

/// `sum c_ij x^i z^j` with every `x` to the left of every `z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylOp {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl WeylOp {
    pub fn zero() -> Self {
        WeylOp::default()
    }

    pub fn one() -> Self {
        WeylOp::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        WeylOp::monomial(BigInt::one(), 1, 0)
    }

    pub fn z() -> Self {
        WeylOp::monomial(BigInt::one(), 0, 1)
    }

    /// `c x^i z^j`.
    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut op = WeylOp::zero();
        op.add_term((i, j), c);
        op
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), BigInt)>) -> Self {
        let mut op = WeylOp::zero();
        for (k, c) in terms {
            op.add_term(k, c);
        }
        op
    }

    fn add_term(&mut self, key: (usize, usize), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `i + j` over the terms.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn pow(&self, k: u32) -> WeylOp {
        (0..k).fold(WeylOp::one(), |acc, _| weyl_mul(&acc, self))
    }
}

/// Normal form of `z^b x^c`, from `z^b x = x z^b + b z^(b-1)`.
fn z_pow_x_pow(b: usize, c: usize, memo: &mut HashMap<(usize, usize), WeylOp>) -> WeylOp {
    if b == 0 || c == 0 {
        return WeylOp::monomial(BigInt::one(), c, b);
    }
    if let Some(v) = memo.get(&(b, c)) {
        return v.clone();
    }
    // z^b x^c = x (z^b x^(c-1)) + b (z^(b-1) x^(c-1))
    let mut out = WeylOp::zero();
    for ((i, j), v) in z_pow_x_pow(b, c - 1, memo).terms {
        out.add_term((i + 1, j), v);
    }
    let bb = BigInt::from(b);
    for ((i, j), v) in z_pow_x_pow(b - 1, c - 1, memo).terms {
        out.add_term((i, j), v * &bb);
    }
    memo.insert((b, c), out.clone());
    out
}

pub fn weyl_mul(u: &WeylOp, v: &WeylOp) -> WeylOp {
    let mut memo = HashMap::new();
    let mut out = WeylOp::zero();
    for (&(a, b), cu) in &u.terms {
        for (&(c, d), cv) in &v.terms {
            let coeff = cu * cv;
            for ((i, j), w) in z_pow_x_pow(b, c, &mut memo).terms {
                out.add_term((a + i, j + d), &coeff * w);
            }
        }
    }
    out
}

/// `x` multiplies, `z` differentiates.
pub fn weyl_apply(u: &WeylOp, f: &ZPoly) -> ZPoly {
    let mut out = ZPoly::zero();
    let mut derivs = vec![f.clone()];
    for (&(i, j), c) in &u.terms {
        while derivs.len() <= j {
            let next = derivs.last().unwrap().derivative();
            derivs.push(next);
        }
        out = out + &ZPoly::monomial(c.clone(), i) * &derivs[j];
    }
    out
}

/// `f(0)`.
pub fn v0(f: &ZPoly) -> BigInt {
    f.constant_term()
}

/// `n -> v0(d^n f)`, which is `n!` times the `n`-th coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVector {
    entries: Vec<BigInt>,
}

impl DeltaVector {
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, n: usize) -> BigInt {
        self.entries.get(n).cloned().unwrap_or_default()
    }

    pub fn is_nonneg(&self) -> bool {
        self.entries.iter().all(|v| !v.is_negative())
    }
}

impl Serialize for DeltaVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(ToString::to_string))
    }
}

pub fn delta_map(f: &ZPoly) -> DeltaVector {
    let mut entries = Vec::with_capacity(f.coeffs().len());
    let mut fact = BigInt::one();
    for (n, c) in f.coeffs().iter().enumerate() {
        if n > 0 {
            fact *= n;
        }
        entries.push(c * &fact);
    }
    DeltaVector { entries }
}

/// `v0(d^n f) >= 0` for every `n`; derivatives past the degree vanish.
pub fn prop_m_membership(f: &ZPoly) -> bool {
    let mut g = f.clone();
    while !g.is_zero() {
        if v0(&g).is_negative() {
            return false;
        }
        g = g.derivative();
    }
    true
}

impl Add for &WeylOp {
    type Output = WeylOp;

    fn add(self, rhs: &WeylOp) -> WeylOp {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;

    fn neg(self) -> WeylOp {
        WeylOp {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;

    fn sub(self, rhs: &WeylOp) -> WeylOp {
        self + &(-rhs)
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;

    fn mul(self, rhs: &WeylOp) -> WeylOp {
        weyl_mul(self, rhs)
    }
}

impl FromStr for WeylOp {
    type Err = Error;

    /// Terms such as `3x^2*z`, `-xz^3` or `5`, written with `x` before `z`.
    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s, true)?;
        Ok(WeylOp::from_terms(
            terms.into_iter().map(|t| ((t.x_exp, t.z_exp), t.coeff)),
        ))
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by_key(|(a, _)| std::cmp::Reverse((a.0 + a.1, a.0)));
        for (n, (&(i, j), c)) in order.into_iter().enumerate() {
            write_monomial(f, c, &[("x", i), ("z", j)], n == 0)?;
        }
        Ok(())
    }
}

impl Serialize for WeylOp {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
