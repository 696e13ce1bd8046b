//! Unique factorization in `Z[x]` by Kronecker's interpolation method, and the
//! coordinates it induces on the monoid (the embedding into the free abelian
//! group on prime integers and irreducible polynomials).

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intfactor::{self, divisors_u128, factor_nat, MAX_FACTOR_INPUT};
use crate::poly::{NNPoly, ZPoly};

/// Size caps for [`kronecker_factor_with`]; beyond them a resource error is raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerLimits {
    pub max_degree: usize,
    pub max_coeff: BigUint,
}

impl Default for KroneckerLimits {
    fn default() -> Self {
        KroneckerLimits {
            max_degree: 16,
            max_coeff: BigUint::from(10u8).pow(18),
        }
    }
}

/// `sign * prod p^e * prod factor^m` with every factor irreducible, primitive and
/// with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZFactorization {
    pub sign: i8,
    #[serde(serialize_with = "crate::json::ser_string_keyed")]
    pub content_primes: BTreeMap<BigUint, u32>,
    #[serde(serialize_with = "crate::json::ser_string_keyed")]
    pub factors: BTreeMap<ZPoly, u32>,
}

impl ZFactorization {
    pub fn reconstruct(&self) -> ZPoly {
        let c = self
            .content_primes
            .iter()
            .fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e));
        let mut c = BigInt::from(c);
        if self.sign < 0 {
            c = -c;
        }
        self.factors
            .iter()
            .fold(ZPoly::constant(c), |acc, (g, &m)| &acc * &g.pow(m))
    }

    /// Number of irreducible polynomial factors counted with multiplicity.
    pub fn polynomial_factor_count(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn multiplicity(&self, g: &ZPoly) -> u32 {
        self.factors.get(g).copied().unwrap_or(0)
    }
}

/// Integer evaluation points `0, 1, -1, 2, -2, ...`.
fn point_sequence() -> impl Iterator<Item = i128> {
    (0i128..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

struct Point {
    t: i128,
    value: i128,
    divisors: Vec<u128>,
}

/// Enumerates candidate divisors of `q` of degree exactly `d` from their values at
/// interpolation points. Returns the first true divisor found.
struct DivisorSearch<'a> {
    q: &'a ZPoly,
    lead_divisors: Vec<u128>,
    enumerated: Vec<Point>,
    closing: Point,
    filters: Vec<Point>,
    newton: Vec<i128>,
}

impl DivisorSearch<'_> {
    /// Value at `t` of the Newton form with the first `len` coefficients.
    fn newton_eval(&self, len: usize, t: i128) -> Option<i128> {
        let mut acc = 0i128;
        for j in (0..len).rev() {
            acc = acc
                .checked_mul(t - self.enumerated_or_closing(j).t)?
                .checked_add(self.newton[j])?;
        }
        Some(acc)
    }

    fn enumerated_or_closing(&self, j: usize) -> &Point {
        self.enumerated.get(j).unwrap_or(&self.closing)
    }

    /// `prod_{i<j} (t - t_i)`
    fn basis_at(&self, j: usize, t: i128) -> Option<i128> {
        (0..j).try_fold(1i128, |acc, i| acc.checked_mul(t - self.enumerated[i].t))
    }

    fn run(&mut self, level: usize) -> Option<ZPoly> {
        let d = self.enumerated.len();
        if level == d {
            return self.close();
        }
        let point_t = self.enumerated[level].t;
        let point_divs = std::mem::take(&mut self.enumerated[level].divisors);
        let base = self.newton_eval(level, point_t);
        let w = self.basis_at(level, point_t);
        let mut found = None;
        if let (Some(base), Some(w)) = (base, w) {
            'values: for &dv in &point_divs {
                let dv = dv as i128;
                let signs: &[i128] = if level == 0 { &[1] } else { &[1, -1] };
                for &s in signs {
                    let diff = s * dv - base;
                    if diff % w != 0 {
                        continue;
                    }
                    self.newton.push(diff / w);
                    let hit = self.run(level + 1);
                    self.newton.pop();
                    if hit.is_some() {
                        found = hit;
                        break 'values;
                    }
                }
            }
        }
        self.enumerated[level].divisors = point_divs;
        found
    }

    fn close(&mut self) -> Option<ZPoly> {
        let d = self.enumerated.len();
        let t = self.closing.t;
        let base = self.newton_eval(d, t)?;
        let w = self.basis_at(d, t)?;
        for &ld in &self.lead_divisors {
            for s in [1i128, -1] {
                let lead = s * ld as i128;
                let Some(v) = w.checked_mul(lead).and_then(|x| x.checked_add(base)) else {
                    continue;
                };
                if v == 0 || self.closing.value % v != 0 {
                    continue;
                }
                self.newton.push(lead);
                let cand = self.candidate();
                self.newton.pop();
                if let Some(g) = cand {
                    return Some(g);
                }
            }
        }
        None
    }

    /// Converts the current Newton coefficients to a polynomial and tests it.
    fn candidate(&self) -> Option<ZPoly> {
        let d = self.enumerated.len();
        for f in &self.filters {
            let v = self.newton_eval(d + 1, f.t)?;
            if v == 0 || f.value % v != 0 {
                return None;
            }
        }
        // monomial form: start from the top coefficient and fold in (x - t_j)
        let mut coeffs: Vec<i128> = vec![self.newton[d]];
        for j in (0..d).rev() {
            let t = self.enumerated[j].t;
            let mut next = vec![0i128; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].checked_add(c)?;
                next[i] = next[i].checked_sub(c.checked_mul(t)?)?;
            }
            next[0] = next[0].checked_add(self.newton[j])?;
            coeffs = next;
        }
        let g = ZPoly::new(coeffs.into_iter().map(BigInt::from).collect());
        if g.degree() != Some(d) {
            return None;
        }
        self.q.div_exact(&g).map(|_| g.primitive_part())
    }
}

fn value_to_i128(v: &BigInt) -> Option<i128> {
    v.to_i128().filter(|x| x.unsigned_abs() <= MAX_FACTOR_INPUT)
}

/// Outcome of scanning for a small divisor.
enum Split {
    Root(ZPoly),
    Divisor(ZPoly),
    Irreducible,
}

/// Searches for an irreducible divisor of the primitive `q` of the smallest
/// possible degree in `min_deg..=deg/2`.
fn find_divisor(q: &ZPoly, min_deg: usize) -> Result<Split> {
    let n = q.degree().expect("non-zero");
    let max_d = n / 2;
    if min_deg > max_d {
        return Ok(Split::Irreducible);
    }
    let pool_size = 2 * max_d + 4;
    let mut pool = Vec::with_capacity(pool_size);
    for t in point_sequence() {
        let value = q.eval(&BigInt::from(t));
        if value.is_zero() {
            return Ok(Split::Root(ZPoly::linear_root(&BigInt::from(t))));
        }
        let Some(value) = value_to_i128(&value) else {
            if pool.len() >= max_d + 2 {
                break;
            }
            return Err(Error::resource(format!(
                "values of {q} at the interpolation points exceed 10^30"
            )));
        };
        pool.push((t, value));
        if pool.len() == pool_size {
            break;
        }
    }
    let lead = q
        .leading()
        .and_then(|l| l.magnitude().to_u128())
        .ok_or_else(|| Error::resource("leading coefficient out of range"))?;
    let lead_divisors = divisors_u128(lead)?;

    let mut counted = Vec::with_capacity(pool.len());
    for (idx, &(t, value)) in pool.iter().enumerate() {
        let divisors = divisors_u128(value.unsigned_abs())?;
        counted.push((divisors.len(), idx, Point { t, value, divisors }));
    }

    for d in min_deg..=max_d {
        // enumerate the d points with the fewest divisors, close on the next one
        let mut order: Vec<usize> = (0..counted.len()).collect();
        order.sort_by_key(|&i| (counted[i].0, counted[i].1));
        let clone_point = |i: usize| Point {
            t: counted[i].2.t,
            value: counted[i].2.value,
            divisors: counted[i].2.divisors.clone(),
        };
        let enumerated: Vec<Point> = order[..d].iter().map(|&i| clone_point(i)).collect();
        let mut rest: Vec<usize> = order[d..].to_vec();
        rest.sort_by_key(|&i| counted[i].1);
        let closing = clone_point(rest[0]);
        let filters = rest[1..].iter().map(|&i| clone_point(i)).collect();
        let mut search = DivisorSearch {
            q,
            lead_divisors: lead_divisors.clone(),
            enumerated,
            closing,
            filters,
            newton: Vec::with_capacity(d + 1),
        };
        if let Some(g) = search.run(0) {
            return Ok(Split::Divisor(g));
        }
    }
    Ok(Split::Irreducible)
}

/// Irreducible factors of a primitive polynomial with positive leading coefficient.
fn factor_primitive(p: ZPoly) -> Result<BTreeMap<ZPoly, u32>> {
    let mut out = BTreeMap::new();
    let mut work = vec![(p, 1usize)];
    while let Some((q, min_deg)) = work.pop() {
        match q.degree() {
            None | Some(0) => continue,
            Some(1) => {
                *out.entry(q).or_default() += 1;
                continue;
            }
            _ => {}
        }
        match find_divisor(&q, min_deg)? {
            Split::Root(g) => {
                let rest = q.div_exact(&g).expect("root gives a linear factor");
                *out.entry(g).or_default() += 1;
                work.push((rest, 1));
            }
            Split::Divisor(g) => {
                let d = g.degree().unwrap();
                let rest = q.div_exact(&g).expect("verified divisor");
                *out.entry(g).or_default() += 1;
                work.push((rest, d));
            }
            Split::Irreducible => {
                *out.entry(q).or_default() += 1;
            }
        }
    }
    Ok(out)
}

/// Factorization in `Z[x]` with the default [`KroneckerLimits`].
pub fn kronecker_factor(f: &ZPoly) -> Result<ZFactorization> {
    kronecker_factor_with(f, &KroneckerLimits::default())
}

pub fn kronecker_factor_with(f: &ZPoly, limits: &KroneckerLimits) -> Result<ZFactorization> {
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if deg > limits.max_degree {
        return Err(Error::resource(format!(
            "degree {deg} exceeds the Kronecker cap {}",
            limits.max_degree
        )));
    }
    if f.coeffs().iter().any(|c| c.magnitude() > &limits.max_coeff) {
        return Err(Error::resource(format!(
            "a coefficient of {f} exceeds the Kronecker cap {}",
            limits.max_coeff
        )));
    }
    let negative = f.leading().is_some_and(Signed::is_negative);
    let content_primes = factor_nat(&f.content())?;
    let factors = factor_primitive(f.primitive_part())?;
    Ok(ZFactorization {
        sign: if negative { -1 } else { 1 },
        content_primes,
        factors,
    })
}

/// Eisenstein's criterion at some prime dividing every non-leading coefficient.
/// Returns the certifying prime.
pub fn eisenstein_prime(f: &ZPoly) -> Option<BigUint> {
    let n = f.degree()?;
    if n == 0 {
        return None;
    }
    let lower = f.coeffs()[..n]
        .iter()
        .fold(BigUint::zero(), |g, c| g.gcd(c.magnitude()));
    if lower.is_zero() {
        return None;
    }
    let primes = factor_nat(&lower).ok()?;
    let lead = f.leading()?.magnitude();
    let a0 = f.coeffs()[0].magnitude();
    primes
        .into_keys()
        .find(|p| !(lead % p).is_zero() && !(a0 % (p * p)).is_zero())
}

/// Irreducibility in `Z[x]` of the primitive part of `f`.
pub fn is_irreducible_z(f: &ZPoly) -> Result<bool> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::domain("irreducibility test needs degree >= 1")),
        _ => {}
    }
    let p = f.primitive_part();
    if eisenstein_prime(&p).is_some() {
        return Ok(true);
    }
    Ok(kronecker_factor(&p)?.polynomial_factor_count() == 1)
}

/// Coordinates in the free abelian group on prime integers and irreducible
/// polynomials (primitive, positive leading coefficient).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QuotientCoords {
    #[serde(serialize_with = "crate::json::ser_string_keyed")]
    pub prime_exponents: BTreeMap<BigUint, i64>,
    #[serde(serialize_with = "crate::json::ser_string_keyed")]
    pub irreducible_exponents: BTreeMap<ZPoly, i64>,
}

fn merge<K: Ord + Clone>(
    a: &BTreeMap<K, i64>,
    b: &BTreeMap<K, i64>,
    sign: i64,
) -> BTreeMap<K, i64> {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(k.clone()).or_default() += sign * v;
    }
    out.retain(|_, v| *v != 0);
    out
}

impl Add for &QuotientCoords {
    type Output = QuotientCoords;
    fn add(self, rhs: &QuotientCoords) -> QuotientCoords {
        QuotientCoords {
            prime_exponents: merge(&self.prime_exponents, &rhs.prime_exponents, 1),
            irreducible_exponents: merge(
                &self.irreducible_exponents,
                &rhs.irreducible_exponents,
                1,
            ),
        }
    }
}

impl Sub for &QuotientCoords {
    type Output = QuotientCoords;
    fn sub(self, rhs: &QuotientCoords) -> QuotientCoords {
        QuotientCoords {
            prime_exponents: merge(&self.prime_exponents, &rhs.prime_exponents, -1),
            irreducible_exponents: merge(
                &self.irreducible_exponents,
                &rhs.irreducible_exponents,
                -1,
            ),
        }
    }
}

impl QuotientCoords {
    pub fn is_zero(&self) -> bool {
        self.prime_exponents.is_empty() && self.irreducible_exponents.is_empty()
    }

    /// The element these coordinates describe, when they lie in `Z[x]`.
    pub fn to_zpoly(&self) -> Option<ZPoly> {
        let mut acc = ZPoly::one();
        for (p, &e) in &self.prime_exponents {
            acc = acc.scale(&BigInt::from(p.pow(u32::try_from(e).ok()?)));
        }
        for (g, &e) in &self.irreducible_exponents {
            acc = &acc * &g.pow(u32::try_from(e).ok()?);
        }
        Some(acc)
    }
}

/// The embedding `psi` of the monoid into its quotient group's coordinates.
pub fn psi_coords(f: &NNPoly) -> Result<QuotientCoords> {
    psi_coords_with(f, &KroneckerLimits::default())
}

pub fn psi_coords_with(f: &NNPoly, limits: &KroneckerLimits) -> Result<QuotientCoords> {
    let z = kronecker_factor_with(&f.to_z(), limits)?;
    Ok(QuotientCoords {
        prime_exponents: z
            .content_primes
            .into_iter()
            .map(|(p, e)| (p, i64::from(e)))
            .collect(),
        irreducible_exponents: z
            .factors
            .into_iter()
            .map(|(g, e)| (g, i64::from(e)))
            .collect(),
    })
}

/// Exponent of the irreducible `lambda` in the `Z[x]` factorization of `f`.
pub fn v_lambda(f: &NNPoly, lambda: &ZPoly) -> Result<u32> {
    check_canonical_irreducible(lambda)?;
    let mut q = f.to_z();
    let mut k = 0;
    while let Some(next) = q.div_exact(lambda) {
        q = next;
        k += 1;
    }
    Ok(k)
}

pub(crate) fn check_canonical_irreducible(lambda: &ZPoly) -> Result<()> {
    let ok = lambda.degree().is_some_and(|d| d >= 1)
        && lambda.leading().is_some_and(Signed::is_positive)
        && lambda.content().is_one()
        && is_irreducible_z(lambda)?;
    if ok {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{lambda} is not a primitive irreducible polynomial with positive leading coefficient"
        )))
    }
}

/// Re-exported for callers that only need integer factorization.
pub use intfactor::factor_int;
