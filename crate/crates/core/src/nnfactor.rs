//! Divisibility and factorization inside the monoid.
//!
//! For `f` in `P0` (primitive, non-zero constant term) every divisor `g` has all
//! coefficients bounded by the largest coefficient of `f`, so with
//! `a = alpha(f) + 1` the divisor is recovered from the base-`a` digits of
//! `g(a)`, which divides `b = f(a)`. Scanning the divisors of the integer `b`
//! therefore finds every polynomial divisor of `f`. Integer content and powers
//! of `x` factor uniquely and are split off first.

use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex};

use lru::LruCache;
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intfactor::{divisors, factor_nat};
use crate::poly::{decode_base, eta, NNPoly};

/// `g | f` with cofactor in the monoid.
pub fn divides_n(g: &NNPoly, f: &NNPoly) -> bool {
    quotient_n(f, g).is_some()
}

/// `f / g` when it lies in the monoid.
pub fn quotient_n(f: &NNPoly, g: &NNPoly) -> Option<NNPoly> {
    f.to_z().div_exact(&g.to_z())?.to_nn()
}

/// `g | f` with cofactor in `Z[x]`.
pub fn divides_z(g: &NNPoly, f: &NNPoly) -> bool {
    f.to_z().div_exact(&g.to_z()).is_some()
}

/// An unordered split `f = g * h` into non-units, `g <= h` in the canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DivisorPair {
    pub g: NNPoly,
    pub h: NNPoly,
}

impl DivisorPair {
    fn new(a: NNPoly, b: NNPoly) -> Self {
        if a <= b {
            DivisorPair { g: a, h: b }
        } else {
            DivisorPair { g: b, h: a }
        }
    }
}

fn require_p0(f: &NNPoly) -> Result<()> {
    if !f.in_p0() || f.is_constant() {
        return Err(Error::domain(format!(
            "expected a primitive polynomial of degree >= 1 with non-zero constant term, got {f}"
        )));
    }
    Ok(())
}

fn base_for(f: &NNPoly) -> (BigUint, BigUint) {
    let a = f.alpha() + 1u8;
    let b = f.eval(&a);
    (a, b)
}

/// All unordered splittings of `f` (in `P0`, degree >= 1) into two non-units.
pub fn divisor_pairs(f: &NNPoly) -> Result<Vec<DivisorPair>> {
    require_p0(f)?;
    let n = f.degree();
    let (a, b) = base_for(f);
    let mut out = BTreeSet::new();
    for d in divisors(&factor_nat(&b)?) {
        let e = &b / &d;
        if d > e {
            break;
        }
        if d.is_one() {
            continue;
        }
        let eg = eta(&a, &d)?;
        if eg == 0 || eg >= n || eg + eta(&a, &e)? != n {
            continue;
        }
        let g = decode_base(&a, &d)?;
        let h = decode_base(&a, &e)?;
        if g.alpha() >= &a || h.alpha() >= &a {
            continue;
        }
        if &g * &h == *f {
            out.insert(DivisorPair::new(g, h));
        }
    }
    Ok(out.into_iter().collect())
}

/// Why a multiplicative split of `b` was kept or dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SplitVerdict {
    /// The digit lengths of the parts do not add up to `deg f`.
    EtaMismatch,
    /// The product of the decoded parts has a coefficient `>= a`.
    ExceedsBase {
        #[serde(serialize_with = "crate::json::ser_decimal")]
        alpha: BigUint,
    },
    /// Digits below `a` but the product still differs from `f`.
    Mismatch,
    Accepted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    #[serde(serialize_with = "crate::json::ser_decimal_vec")]
    pub parts: Vec<BigUint>,
    pub etas: Vec<usize>,
    pub decoded: Vec<NNPoly>,
    pub product: Option<NNPoly>,
    #[serde(flatten)]
    pub verdict: SplitVerdict,
}

/// Full record of the base-`a` procedure on one polynomial: every way of writing
/// `b = f(a)` as a product of at least two integers `> 1`, and its fate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseATrace {
    #[serde(serialize_with = "crate::json::ser_decimal")]
    pub a: BigUint,
    #[serde(serialize_with = "crate::json::ser_decimal")]
    pub b: BigUint,
    pub degree: usize,
    pub splits: Vec<SplitRecord>,
}

impl BaseATrace {
    pub fn accepted(&self) -> impl Iterator<Item = &SplitRecord> {
        self.splits
            .iter()
            .filter(|s| s.verdict == SplitVerdict::Accepted)
    }

    pub fn is_atom(&self) -> bool {
        self.accepted().next().is_none()
    }
}

const MAX_TRACE_SPLITS: usize = 100_000;

fn multiplicative_partitions(
    n: &BigUint,
    divs: &[BigUint],
    min_idx: usize,
    prefix: &mut Vec<BigUint>,
    out: &mut Vec<Vec<BigUint>>,
) -> Result<()> {
    if n.is_one() {
        if prefix.len() >= 2 {
            if out.len() >= MAX_TRACE_SPLITS {
                return Err(Error::resource("too many multiplicative splits to trace"));
            }
            out.push(prefix.clone());
        }
        return Ok(());
    }
    for (i, d) in divs.iter().enumerate().skip(min_idx) {
        if d.is_one() {
            continue;
        }
        if d * d > *n && d != n {
            continue;
        }
        if (n % d) != BigUint::ZERO {
            continue;
        }
        prefix.push(d.clone());
        multiplicative_partitions(&(n / d), divs, i, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

/// Runs the base-`a` procedure verbatim on `f` in `P0`, recording each split.
pub fn base_a_trace(f: &NNPoly) -> Result<BaseATrace> {
    require_p0(f)?;
    let n = f.degree();
    let (a, b) = base_for(f);
    let divs = divisors(&factor_nat(&b)?);
    let mut parts_list = Vec::new();
    multiplicative_partitions(&b, &divs, 0, &mut Vec::new(), &mut parts_list)?;
    let mut splits = Vec::with_capacity(parts_list.len());
    for parts in parts_list {
        let etas = parts
            .iter()
            .map(|p| eta(&a, p))
            .collect::<Result<Vec<_>>>()?;
        if etas.iter().sum::<usize>() != n {
            splits.push(SplitRecord {
                parts,
                etas,
                decoded: Vec::new(),
                product: None,
                verdict: SplitVerdict::EtaMismatch,
            });
            continue;
        }
        let decoded = parts
            .iter()
            .map(|p| decode_base(&a, p))
            .collect::<Result<Vec<_>>>()?;
        let product: NNPoly = decoded.iter().product();
        let verdict = if product.alpha() >= &a {
            SplitVerdict::ExceedsBase {
                alpha: product.alpha().clone(),
            }
        } else if product != *f {
            SplitVerdict::Mismatch
        } else {
            SplitVerdict::Accepted
        };
        splits.push(SplitRecord {
            parts,
            etas,
            decoded,
            product: Some(product),
            verdict,
        });
    }
    Ok(BaseATrace {
        a,
        b,
        degree: n,
        splits,
    })
}

fn core_divisors(core: &NNPoly) -> Result<BTreeSet<NNPoly>> {
    let mut out = BTreeSet::from([NNPoly::one(), core.clone()]);
    if !core.is_constant() {
        for p in divisor_pairs(core)? {
            out.insert(p.g);
            out.insert(p.h);
        }
    }
    Ok(out)
}

/// Every divisor of `f` in the monoid, `1` and `f` included, in canonical order.
pub fn nn_divisors(f: &NNPoly) -> Result<Vec<NNPoly>> {
    let dec = f.canonical_decompose();
    let content_divs = divisors(&factor_nat(&dec.content)?);
    let core_divs = core_divisors(&dec.core)?;
    let mut out = BTreeSet::new();
    for c in &content_divs {
        for e in 0..=dec.x_exponent {
            for g in &core_divs {
                out.insert(g.scale(c)?.shift(e));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// A non-unit that is not a product of two non-units.
pub fn is_atom(f: &NNPoly) -> Result<bool> {
    if f.is_one() {
        return Err(Error::Unit);
    }
    let dec = f.canonical_decompose();
    let content_one = dec.content.is_one();
    let core_one = dec.core.is_one();
    Ok(match (content_one, dec.x_exponent, core_one) {
        (false, 0, true) => crate::intfactor::is_prime(&dec.content)?,
        (true, 1, true) => true,
        (true, 0, false) => divisor_pairs(&dec.core)?.is_empty(),
        _ => false,
    })
}

/// A multiset of atoms, kept sorted in the canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Factorization {
    factors: Vec<NNPoly>,
}

impl Factorization {
    pub fn new(mut factors: Vec<NNPoly>) -> Self {
        factors.sort();
        Factorization { factors }
    }

    pub fn factors(&self) -> &[NNPoly] {
        &self.factors
    }

    /// Length `|z|`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> NNPoly {
        self.factors.iter().product()
    }

    fn join(&self, other: &Factorization) -> Factorization {
        let mut v = self.factors.clone();
        v.extend(other.factors.iter().cloned());
        Factorization::new(v)
    }
}

pub const DEFAULT_CACHE_SIZE: usize = 100_000;

/// Computes factorization sets, memoizing the `P0` part across calls.
pub struct Factorizer {
    cache: Mutex<LruCache<NNPoly, Arc<BTreeSet<Factorization>>>>,
}

impl Default for Factorizer {
    fn default() -> Self {
        Self::new(DEFAULT_CACHE_SIZE)
    }
}

impl Factorizer {
    pub fn new(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity.max(1)).unwrap();
        Factorizer {
            cache: Mutex::new(LruCache::new(cap)),
        }
    }

    fn cached(&self, f: &NNPoly) -> Option<Arc<BTreeSet<Factorization>>> {
        self.cache.lock().unwrap().get(f).cloned()
    }

    fn core_factorizations(&self, f: &NNPoly) -> Result<Arc<BTreeSet<Factorization>>> {
        if f.is_one() {
            return Ok(Arc::new(BTreeSet::from([Factorization::new(Vec::new())])));
        }
        if let Some(z) = self.cached(f) {
            return Ok(z);
        }
        let pairs = divisor_pairs(f)?;
        let mut out = BTreeSet::new();
        if pairs.is_empty() {
            out.insert(Factorization::new(vec![f.clone()]));
        }
        for p in pairs {
            let zg = self.core_factorizations(&p.g)?;
            let zh = self.core_factorizations(&p.h)?;
            for u in zg.iter() {
                for v in zh.iter() {
                    out.insert(u.join(v));
                }
            }
        }
        let out = Arc::new(out);
        self.cache.lock().unwrap().put(f.clone(), Arc::clone(&out));
        Ok(out)
    }

    /// The set `Z(f)` of all factorizations of the non-unit `f` into atoms.
    pub fn atom_factorizations(&self, f: &NNPoly) -> Result<BTreeSet<Factorization>> {
        if f.is_one() {
            return Err(Error::Unit);
        }
        let dec = f.canonical_decompose();
        let mut fixed = Vec::new();
        for (p, e) in factor_nat(&dec.content)? {
            let atom = NNPoly::constant(p)?;
            fixed.extend(std::iter::repeat_n(atom, e as usize));
        }
        fixed.extend(std::iter::repeat_n(NNPoly::x(), dec.x_exponent));
        let fixed = Factorization::new(fixed);
        let core = self.core_factorizations(&dec.core)?;
        Ok(core.iter().map(|z| z.join(&fixed)).collect())
    }
}

/// `Z(f)` with a fresh cache.
pub fn atom_factorizations(f: &NNPoly) -> Result<BTreeSet<Factorization>> {
    Factorizer::default().atom_factorizations(f)
}
