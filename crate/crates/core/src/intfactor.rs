//! Prime factorization of integers: trial division, then Brent's variant of
//! Pollard rho with Miller-Rabin certification of the pieces.
//!
//! Everything runs in `u128`; inputs above [`MAX_FACTOR_INPUT`] are refused with a
//! resource error.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// 10^30.
pub const MAX_FACTOR_INPUT: u128 = 1_000_000_000_000_000_000_000_000_000_000;

const TRIAL_BOUND: u32 = 1_000_000;

/// Below this bound Miller-Rabin on the first 13 prime bases is deterministic.
const MR13_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

const MR_BASES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// `sign * prod p^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntFactorization {
    pub sign: i8,
    #[serde(serialize_with = "crate::json::ser_string_keyed")]
    pub prime_powers: BTreeMap<BigUint, u32>,
}

impl IntFactorization {
    pub fn value(&self) -> BigInt {
        let mag = self
            .prime_powers
            .iter()
            .fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e));
        let v = BigInt::from(mag);
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

fn to_u128(n: &BigUint) -> Result<u128> {
    match n.to_u128() {
        Some(v) if v <= MAX_FACTOR_INPUT => Ok(v),
        _ => Err(Error::resource(format!(
            "integer {n} exceeds the factorization bound 10^30"
        ))),
    }
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        (a * b) % m
    } else {
        let r = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(m);
        r.to_u128().expect("reduced below modulus")
    }
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn miller_rabin(n: u128, bases: &[u64]) -> bool {
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &b in bases {
        let b = b as u128 % n;
        if b == 0 {
            continue;
        }
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        let p = p as u128;
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 71 * 71 {
        return true;
    }
    if n < MR13_BOUND {
        miller_rabin(n, &MR_BASES[..13])
    } else {
        // FIXME: not proven deterministic between 3.3e24 and 1e30; a strong Lucas
        // round would make this BPSW.
        miller_rabin(n, &MR_BASES)
    }
}

/// Primality of `n`, for `n <= 10^30`.
pub fn is_prime(n: &BigUint) -> Result<bool> {
    Ok(is_prime_u128(to_u128(n)?))
}

/// Smallest prime `>= n`.
pub fn next_prime(n: &BigUint) -> Result<BigUint> {
    let mut c = to_u128(n)?.max(2);
    while !is_prime_u128(c) {
        c += 1;
        if c > MAX_FACTOR_INPUT {
            return Err(Error::resource("prime search ran past 10^30"));
        }
    }
    Ok(BigUint::from(c))
}

/// A non-trivial factor of the odd composite `n` (Brent's cycle detection).
fn pollard_brent(n: u128) -> u128 {
    let mut c = 1u128;
    loop {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let (mut y, m) = (2u128, 128u64);
        let (mut g, mut r, mut q) = (1u128, 1u64, 1u128);
        let (mut x, mut ys) = (0u128, 0u128);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_large(n: u128, out: &mut BTreeMap<u128, u32>) {
    if n == 1 {
        return;
    }
    if is_prime_u128(n) {
        *out.entry(n).or_default() += 1;
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

fn factor_u128(mut n: u128) -> BTreeMap<u128, u32> {
    let mut out = BTreeMap::new();
    for &p in small_primes() {
        let p = p as u128;
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            *out.entry(p).or_default() += 1;
            n /= p;
        }
    }
    if n > 1 {
        let bound = TRIAL_BOUND as u128;
        if n <= bound * bound {
            *out.entry(n).or_default() += 1;
        } else {
            split_large(n, &mut out);
        }
    }
    out
}

/// Prime factorization of a positive integer.
pub fn factor_nat(n: &BigUint) -> Result<BTreeMap<BigUint, u32>> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor 0"));
    }
    let v = to_u128(n)?;
    Ok(factor_u128(v)
        .into_iter()
        .map(|(p, e)| (BigUint::from(p), e))
        .collect())
}

/// Certified prime factorization of a non-zero integer.
pub fn factor_int(n: &BigInt) -> Result<IntFactorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor 0"));
    }
    Ok(IntFactorization {
        sign: if n.sign() == Sign::Minus { -1 } else { 1 },
        prime_powers: factor_nat(n.magnitude())?,
    })
}

/// All positive divisors of the number with the given factorization, ascending.
pub fn divisors(prime_powers: &BTreeMap<BigUint, u32>) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, &e) in prime_powers {
        let len = out.len();
        let mut pk = BigUint::one();
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(&out[i] * &pk);
            }
        }
    }
    out.sort();
    out
}

/// Same as [`divisors`] for values that fit `u128`; used on hot paths.
pub(crate) fn divisors_u128(n: u128) -> Result<Vec<u128>> {
    if n == 0 {
        return Err(Error::domain("0 has no finite divisor list"));
    }
    if n > MAX_FACTOR_INPUT {
        return Err(Error::resource(format!(
            "integer {n} exceeds the factorization bound 10^30"
        )));
    }
    let mut out = vec![1u128];
    for (p, e) in factor_u128(n) {
        let len = out.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
